//! Indirect sums and their generalizations over disjoint variable blocks.

use super::{forms, require_bent, require_same_vars, Verify};
use crate::dual::bent_dual;
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, DisjointSpace};
use crate::synth::is_affine_subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WithDual {
    pub function: BooleanFunction,
    pub dual: BooleanFunction,
}

/// Pairs of functions, pair `i` acting on its own block of variables.
/// Blocks are laid out in order, the first one most significant.
#[derive(Clone, Debug)]
pub struct DisjointBundle {
    pairs: Vec<(BooleanFunction, BooleanFunction)>,
    space: DisjointSpace,
}

impl DisjointBundle {
    pub fn new(pairs: Vec<(BooleanFunction, BooleanFunction)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidArgument("a bundle needs at least one pair".into()));
        }
        let mut sizes = Vec::with_capacity(pairs.len());
        for (a, b) in &pairs {
            sizes.push(require_same_vars(&[a, b])?);
        }
        let space = DisjointSpace::new(&sizes)?;
        Ok(Self { pairs, space })
    }

    pub fn pairs(&self) -> &[(BooleanFunction, BooleanFunction)] {
        &self.pairs
    }

    pub fn total(&self) -> usize {
        self.space.total()
    }

    fn require_bent(&self) -> Result<()> {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            require_bent(&format!("block {} first function", i + 1), a)?;
            require_bent(&format!("block {} second function", i + 1), b)?;
        }
        Ok(())
    }

    /// Both functions of every pair, lifted, in pair order.
    fn lifted(&self) -> Result<Vec<BooleanFunction>> {
        let mut out = Vec::with_capacity(2 * self.pairs.len());
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            out.push(self.space.lift(i, a)?);
            out.push(self.space.lift(i, b)?);
        }
        Ok(out)
    }

    fn dual_bundle(&self) -> Result<Self> {
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((bent_dual(a)?, bent_dual(b)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(|_: Error| Error::PreconditionFailed("every function in the bundle must be bent".into()))?;
        Self::new(pairs)
    }
}

fn indirect_formula(v: &[BooleanFunction]) -> BooleanFunction {
    let [f1, f2, g1, g2] = v else {
        unreachable!("four lifted functions")
    };
    f1 ^ g1 ^ ((f1 ^ f2) & (g1 ^ g2))
}

/// `f1(x) + g1(y) + (f1 + f2)(x)(g1 + g2)(y)`; the dual is the same
/// expression in the four duals.
pub fn indirect_sum(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    g1: &BooleanFunction,
    g2: &BooleanFunction,
    verify: Verify,
) -> Result<WithDual> {
    let bundle = DisjointBundle::new(vec![(f1.clone(), f2.clone()), (g1.clone(), g2.clone())])?;
    if verify.enabled(bundle.total()) {
        bundle.require_bent()?;
    }
    Ok(WithDual {
        function: indirect_formula(&bundle.lifted()?),
        dual: indirect_formula(&bundle.dual_bundle()?.lifted()?),
    })
}

fn gis_a_formula(v: &[BooleanFunction]) -> BooleanFunction {
    let [f1, f2, g1, g2, l1, l2, d1, d2] = v else {
        unreachable!("eight lifted functions")
    };
    f2 ^ g2 ^ l2 ^ d2 ^ ((g1 ^ g2) & (f1 ^ f2 ^ d1 ^ d2)) ^ ((l1 ^ l2) & (f1 ^ f2))
}

/// `f2 + g2 + l2 + d2 + (g1 + g2)(f1 + f2 + d1 + d2) + (l1 + l2)(f1 + f2)`
/// over four blocks `(f, g, l, d)`; the dual is the same expression.
pub fn gen_indirect_sum_a(bundle: &DisjointBundle, verify: Verify) -> Result<WithDual> {
    if bundle.pairs.len() != 4 {
        return Err(Error::ArityMismatch {
            expected: 4,
            found: bundle.pairs.len(),
        });
    }
    if verify.enabled(bundle.total()) {
        bundle.require_bent()?;
    }
    Ok(WithDual {
        function: gis_a_formula(&bundle.lifted()?),
        dual: gis_a_formula(&bundle.dual_bundle()?.lifted()?),
    })
}

/// `xi(H_1, ..., H_k)` where `xi` is synthesized from the rows
/// `M_1 wr ... wr M_k` (one complement pair per `l_i`, all on `t`
/// variables) and the bent dual `xi_dual`.
pub fn gen_indirect_sum_k(
    bundle: &DisjointBundle,
    ells: &[BooleanFunction],
    xi_dual: &BooleanFunction,
    verify: Verify,
) -> Result<WithDual> {
    if ells.len() != bundle.pairs.len() {
        return Err(Error::ArityMismatch {
            expected: bundle.pairs.len(),
            found: ells.len(),
        });
    }
    require_same_vars(&ells.iter().collect::<Vec<_>>())?;
    let rows = forms::indirect_sum_rows(ells)?;
    if is_affine_subspace(rows.rows()).is_none() {
        return Err(Error::PreconditionFailed(
            "the interleaved complement pairs do not form an affine subspace".into(),
        ));
    }
    let form = forms::OuterForm {
        rows,
        dual: xi_dual.clone(),
    };
    if verify.enabled(bundle.total()) {
        require_bent("xi*", xi_dual)?;
        bundle.require_bent()?;
    }
    Ok(WithDual {
        function: form.apply(bundle.lifted()?)?,
        dual: form.apply(bundle.dual_bundle()?.lifted()?)?,
    })
}

/// `f2 + g2 + (g1 + g2 + z2)(f1 + f2 + z1)` on `r + m + 2` variables.
pub fn gen_indirect_sum_b(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    g1: &BooleanFunction,
    g2: &BooleanFunction,
    verify: Verify,
) -> Result<BooleanFunction> {
    let (v, z) = four_with_fresh(f1, f2, g1, g2, 2, verify)?;
    let [f1, f2, g1, g2] = &v[..] else { unreachable!() };
    Ok(f2 ^ g2 ^ ((g1 ^ g2 ^ &z[1]) & (f1 ^ f2 ^ &z[0])))
}

/// `f2 + g2 + z1(g1 + g2 + z2)(f1 + f2) + z1z4(g1 + g2) + z2z4 + z1z3`
/// on `r + m + 4` variables.
pub fn gen_indirect_sum_c(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    g1: &BooleanFunction,
    g2: &BooleanFunction,
    verify: Verify,
) -> Result<BooleanFunction> {
    let (v, z) = four_with_fresh(f1, f2, g1, g2, 4, verify)?;
    let [f1, f2, g1, g2] = &v[..] else { unreachable!() };
    let (z1, z2, z3, z4) = (&z[0], &z[1], &z[2], &z[3]);
    let g = g1 ^ g2;
    Ok(f2 ^ g2 ^ (z1 & &(&g ^ z2) & (f1 ^ f2)) ^ (z1 & z4 & &g) ^ (z2 & z4) ^ (z1 & z3))
}

fn four_with_fresh(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    g1: &BooleanFunction,
    g2: &BooleanFunction,
    fresh: usize,
    verify: Verify,
) -> Result<(Vec<BooleanFunction>, Vec<BooleanFunction>)> {
    let r = require_same_vars(&[f1, f2])?;
    let m = require_same_vars(&[g1, g2])?;
    let sp = DisjointSpace::new(&[r, m, fresh])?;
    if verify.enabled(sp.total()) {
        for (name, f) in [("f1", f1), ("f2", f2), ("g1", g1), ("g2", g2)] {
            require_bent(name, f)?;
        }
    }
    let v = vec![sp.lift(0, f1)?, sp.lift(0, f2)?, sp.lift(1, g1)?, sp.lift(1, g2)?];
    let z = (1..=fresh).map(|j| sp.var(2, j)).collect();
    Ok((v, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::verify_bent;
    use crate::anf::parse_function;
    use crate::dual::dual;

    fn f(text: &str, n: usize) -> BooleanFunction {
        parse_function(text, Some(n)).unwrap()
    }

    fn two() -> [BooleanFunction; 4] {
        [
            f("x1*x2", 2),
            f("x1*x2 + x1", 2),
            f("x1*x2 + x2", 2),
            f("x1*x2 + x1 + x2 + 1", 2),
        ]
    }

    fn check_dual(w: &WithDual) {
        assert!(verify_bent(&w.function));
        assert_eq!(dual(&w.function, Some(0)).unwrap().function, w.dual);
    }

    #[test]
    fn indirect_sum_small() {
        let [a, b, c, _] = two();
        let w = indirect_sum(&a, &b, &a, &c, Verify::Always).unwrap();
        check_dual(&w);
        let flat = w.function.clone();
        let sp = DisjointSpace::new(&[2, 2]).unwrap();
        let coords = vec![
            sp.lift(0, &a).unwrap(),
            sp.lift(0, &b).unwrap(),
            sp.lift(1, &a).unwrap(),
            sp.lift(1, &c).unwrap(),
        ];
        assert_eq!(flat, forms::indirect_sum_form().apply(coords).unwrap());
        let direct = indirect_sum(&a, &a, &b, &c, Verify::Always).unwrap();
        assert_eq!(direct.function, f("x1*x2 + x3*x4 + x3", 4));
    }

    #[test]
    fn gis_a_matches_form_and_reduces() {
        let [a, b, c, d] = two();
        let bundle = DisjointBundle::new(vec![
            (a.clone(), b.clone()),
            (c.clone(), d.clone()),
            (b.clone(), c.clone()),
            (d.clone(), a.clone()),
        ])
        .unwrap();
        let w = gen_indirect_sum_a(&bundle, Verify::Always).unwrap();
        check_dual(&w);
        assert_eq!(w.function, forms::gis_a_form().apply(bundle.lifted().unwrap()).unwrap());
        let ells: Vec<_> = (1..=4).map(|j| BooleanFunction::variable(4, j).unwrap()).collect();
        let k = gen_indirect_sum_k(&bundle, &ells, &f("x1*x3 + x2*x4 + x3*x4", 4), Verify::Always).unwrap();
        assert_eq!(k, w);
    }

    #[test]
    fn gis_k_three_blocks() {
        let [a, b, c, d] = two();
        let bundle = DisjointBundle::new(vec![
            (a.clone(), b.clone()),
            (c.clone(), d.clone()),
            (b.clone(), d.clone()),
        ])
        .unwrap();
        let ells = [f("x1", 2), f("x2", 2), f("x1 + 1", 2)];
        let w = gen_indirect_sum_k(&bundle, &ells, &f("x1*x2", 2), Verify::Always).unwrap();
        check_dual(&w);
        let bad = [f("x1*x2", 2), f("x2", 2), f("x1", 2)];
        assert!(gen_indirect_sum_k(&bundle, &bad, &f("x1*x2", 2), Verify::Always).is_err());
    }

    #[test]
    fn gis_b_and_c_match_forms() {
        let [a, b, c, d] = two();
        let sp = DisjointSpace::new(&[2, 2, 2]).unwrap();
        let mut coords = vec![
            sp.lift(0, &a).unwrap(),
            sp.lift(0, &b).unwrap(),
            sp.lift(1, &c).unwrap(),
            sp.lift(1, &d).unwrap(),
        ];
        coords.extend((1..=2).map(|j| sp.var(2, j)));
        let out = gen_indirect_sum_b(&a, &b, &c, &d, Verify::Always).unwrap();
        assert!(verify_bent(&out));
        assert_eq!(out, forms::gis_b_form().apply(coords).unwrap());
        let classical = indirect_sum(&b, &a, &d, &c, Verify::Always).unwrap().function;
        assert_eq!(out.fix_trailing(2, 0).unwrap(), classical);

        let sp = DisjointSpace::new(&[2, 2, 4]).unwrap();
        let mut coords = vec![
            sp.lift(0, &a).unwrap(),
            sp.lift(0, &b).unwrap(),
            sp.lift(1, &c).unwrap(),
            sp.lift(1, &d).unwrap(),
        ];
        coords.extend((1..=4).map(|j| sp.var(2, j)));
        let out = gen_indirect_sum_c(&a, &b, &c, &d, Verify::Always).unwrap();
        assert!(verify_bent(&out));
        assert_eq!(out, forms::gis_c_form().apply(coords).unwrap());
        assert_eq!(out.fix_trailing(4, 0b1000).unwrap(), classical);
    }
}
