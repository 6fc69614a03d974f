//! Constructions that keep the number of variables: bent coordinates
//! combined through a semi-bent or bent outer form.

use super::indirect::WithDual;
use super::{require_bent, require_same_vars, Verify};
use crate::dual::bent_dual;
use crate::error::{Error, Result};
use crate::function::{dot, BooleanFunction};

fn majority(a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction) -> BooleanFunction {
    (a & b) ^ (a & c) ^ (b & c)
}

/// `g = f1 f2 + f1 f3 + f2 f3` with `g* = f1* f2* + f1* f3* + f2* f3*`.
/// The inputs must be bent. With verification, `f1 + f2 + f3` must be bent
/// and the four duals must sum to zero.
pub fn mesnager_g(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
    verify: Verify,
) -> Result<WithDual> {
    let n = require_same_vars(&[f1, f2, f3])?;
    let mut duals = Vec::with_capacity(3);
    for (name, f) in [("f1", f1), ("f2", f2), ("f3", f3)] {
        duals.push(bent_dual(f).map_err(|_| Error::PreconditionFailed(format!("{name} is not bent")))?);
    }
    if verify.enabled(n) {
        let psi = f1 ^ f2 ^ f3;
        require_bent("f1+f2+f3", &psi)?;
        let sum = &duals[0] ^ &duals[1] ^ &duals[2] ^ bent_dual(&psi)?;
        if let Some(x) = (0..sum.len()).find(|&x| sum.eval(x)) {
            return Err(Error::PreconditionFailed(format!(
                "the four duals do not sum to zero at point {x}"
            )));
        }
    }
    Ok(WithDual {
        function: majority(f1, f2, f3),
        dual: majority(&duals[0], &duals[1], &duals[2]),
    })
}

fn check_permutation(p: &[usize], half: usize, name: &str) -> Result<Vec<usize>> {
    if p.len() != 1 << half {
        return Err(Error::LengthMismatch(1 << half, p.len()));
    }
    let mut inverse = vec![usize::MAX; p.len()];
    for (y, &image) in p.iter().enumerate() {
        if image >= p.len() || inverse[image] != usize::MAX {
            return Err(Error::InvalidArgument(format!("{name} is not a permutation")));
        }
        inverse[image] = y;
    }
    Ok(inverse)
}

/// `F(x, y) = x.pi(y) + [x.(pi + phi)(y)] lambda(y) + eta(y)` with
/// `lambda = g1 + g2` and `eta = g1 g2`, `x` the leading half.
pub fn dualcor_family(
    pi: &[usize],
    phi: &[usize],
    g1: &BooleanFunction,
    g2: &BooleanFunction,
    verify: Verify,
) -> Result<BooleanFunction> {
    let half = require_same_vars(&[g1, g2])?;
    let pi_inv = check_permutation(pi, half, "pi")?;
    let phi_inv = check_permutation(phi, half, "phi")?;
    let lambda = g1 ^ g2;
    if verify.enabled(2 * half) {
        if let Some(y) = (0..1usize << half).find(|&y| lambda.eval(pi_inv[y]) != lambda.eval(phi_inv[y])) {
            return Err(Error::PreconditionFailed(format!(
                "lambda(pi^-1(y)) differs from lambda(phi^-1(y)) at y = {y}"
            )));
        }
    }
    let mask = (1usize << half) - 1;
    BooleanFunction::from_fn(2 * half, |z| {
        let (x, y) = (z >> half, z & mask);
        dot(x, pi[y]) ^ (dot(x, pi[y] ^ phi[y]) & lambda.eval(y)) ^ (g1.eval(y) & g2.eval(y))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::verify_bent;
    use crate::anf::parse_function;
    use crate::constructions::forms;
    use crate::dual::dual;

    fn f(text: &str, n: usize) -> BooleanFunction {
        parse_function(text, Some(n)).unwrap()
    }

    fn mm(pi: &[usize], g: &BooleanFunction) -> BooleanFunction {
        let half = g.num_vars();
        let mask = (1 << half) - 1;
        BooleanFunction::from_fn(2 * half, |z| dot(z >> half, pi[z & mask]) ^ g.eval(z & mask)).unwrap()
    }

    #[test]
    fn mesnager_absorption_and_form() {
        let a = f("x1*x2 + x3*x4", 4);
        let b = f("x1*x3 + x2*x4", 4);
        let w = mesnager_g(&a, &a, &b, Verify::Always).unwrap();
        assert_eq!(w.function, a);
        let c = f("x1*x2 + x3*x4 + x1", 4);
        let d = f("x1*x2 + x3*x4 + x3", 4);
        let w = mesnager_g(&a, &c, &d, Verify::Always).unwrap();
        assert!(verify_bent(&w.function));
        assert_eq!(dual(&w.function, Some(0)).unwrap().function, w.dual);
        assert_eq!(w.function, forms::mesnager_form().apply(vec![a, c, d]).unwrap());
    }

    #[test]
    fn dualcor_reductions() {
        let id: Vec<usize> = (0..4).collect();
        let g1 = f("x1*x2", 2);
        let g2 = f("x1", 2);
        let out = dualcor_family(&id, &id, &g1, &g1, Verify::Always).unwrap();
        assert_eq!(out, mm(&id, &g1));
        let out = dualcor_family(&id, &id, &g1, &g2, Verify::Always).unwrap();
        assert!(verify_bent(&out));
        let swap = [2, 1, 0, 3];
        assert!(matches!(
            dualcor_family(&id, &swap, &g1, &g2, Verify::Always),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn dualcor_form_and_prescribed_dual() {
        let pi = [2, 0, 3, 1];
        let phi = [0, 2, 3, 1];
        let g1 = f("x1*x2 + x2", 2);
        let g2 = f("x1 + x2 + x1*x2", 2);
        let out = dualcor_family(&pi, &phi, &g1, &g2, Verify::Always).unwrap();
        assert!(verify_bent(&out));
        let zero = BooleanFunction::zero(2).unwrap();
        let h1 = mm(&pi, &g1);
        let h2 = mm(&pi, &zero);
        let h3 = mm(&phi, &zero);
        let h4 = BooleanFunction::from_fn(4, |z| g2.eval(z & 3)).unwrap();
        let form = forms::dualcor_form();
        assert_eq!(out, form.apply(vec![h1.clone(), h2.clone(), h3.clone(), h4]).unwrap());
        let mut pi_inv = [0; 4];
        for (y, &p) in pi.iter().enumerate() {
            pi_inv[p] = y;
        }
        let h4p = BooleanFunction::from_fn(4, |z| g2.eval(pi_inv[z >> 2])).unwrap();
        let primed = vec![
            bent_dual(&h1).unwrap(),
            bent_dual(&h2).unwrap(),
            bent_dual(&h3).unwrap(),
            h4p,
        ];
        assert_eq!(form.apply(primed).unwrap(), bent_dual(&out).unwrap());
    }
}
