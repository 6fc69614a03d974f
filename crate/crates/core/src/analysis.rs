//! Brute-force verification oracles.

use std::fmt;

use crate::class::{classify, ClassTag};
use crate::dual::bent_dual;
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, VectorialFunction};
use crate::synth::SequenceProfile;
use crate::walsh::wht;

pub fn verify_bent(f: &BooleanFunction) -> bool {
    classify(f).tag == ClassTag::Bent
}

/// `s = 0` asks for bentness.
pub fn verify_plateaued(f: &BooleanFunction, s: usize) -> bool {
    let tag = classify(f).tag;
    if s == 0 {
        tag == ClassTag::Bent
    } else {
        tag == ClassTag::Plateaued { s }
    }
}

/// `D_alpha D_beta f(x) = f(x) + f(x + alpha) + f(x + beta) + f(x + alpha + beta)`.
pub fn second_derivative(f: &BooleanFunction, alpha: usize, beta: usize) -> Result<BooleanFunction> {
    if alpha == beta {
        return Err(Error::EqualDirections);
    }
    let n = f.num_vars();
    if (alpha | beta) >> n != 0 {
        return Err(Error::InvalidArgument(format!("directions must fit in {n} bits")));
    }
    BooleanFunction::from_fn(n, |x| {
        f.eval(x) ^ f.eval(x ^ alpha) ^ f.eval(x ^ beta) ^ f.eval(x ^ alpha ^ beta)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MmVerdict {
    OutsideForThisSplit,
    NoWitnessForThisSplit,
}

impl fmt::Display for MmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MmVerdict::OutsideForThisSplit => "outside for this split",
            MmVerdict::NoWitnessForThisSplit => "no witness for this split",
        })
    }
}

/// Result of the fixed-split test: variables `x_1..x_m | x_{m+1}..x_{2m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MmCertificate {
    pub split: (usize, usize),
    pub witness: Option<(usize, usize)>,
    pub verdict: MmVerdict,
}

/// First `(alpha', beta')`, nonzero and distinct, for which
/// `D_(alpha',0) D_(beta',0) f` restricted to `x = 0` is not identically zero.
pub fn outside_mm_certificate(f: &BooleanFunction) -> Result<MmCertificate> {
    let n = f.num_vars();
    if !n.is_multiple_of(2) {
        return Err(Error::OddArity(n));
    }
    let m = n / 2;
    let size = 1usize << m;
    let witness = (1..size)
        .flat_map(|a| (1..size).filter(move |&b| b != a).map(move |b| (a, b)))
        .find(|&(a, b)| {
            let (alpha, beta) = (a << m, b << m);
            (0..size).any(|y| f.eval(y) ^ f.eval(y ^ alpha) ^ f.eval(y ^ beta) ^ f.eval(y ^ alpha ^ beta))
        });
    Ok(MmCertificate {
        split: (m, m),
        witness,
        verdict: if witness.is_some() {
            MmVerdict::OutsideForThisSplit
        } else {
            MmVerdict::NoWitnessForThisSplit
        },
    })
}

pub fn is_self_dual(f: &BooleanFunction) -> bool {
    verify_bent(f) && bent_dual(f).is_ok_and(|d| &d == f)
}

/// Whether the Walsh supports of `f` and `g` are disjoint.
pub fn disjoint_spectra(f: &BooleanFunction, g: &BooleanFunction) -> Result<bool> {
    if f.num_vars() != g.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: f.num_vars(),
            found: g.num_vars(),
        });
    }
    let (wf, wg) = (wht(f), wht(g));
    Ok(wf.coeffs().iter().zip(wg.coeffs()).all(|(&a, &b)| a == 0 || b == 0))
}

/// First `w` in `points` with `(w.H)* != w.(h_1*, ..., h_k*)`.
pub fn dual_linearity_witness(h: &VectorialFunction, points: &[usize]) -> Result<Option<usize>> {
    let duals = h
        .coords()
        .iter()
        .enumerate()
        .map(|(i, c)| bent_dual(c).map_err(|_| Error::PreconditionFailed(format!("h_{} is not bent", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let dual_coords = VectorialFunction::new(duals)?;
    for &w in points {
        let component = h.component(w)?;
        let lhs =
            bent_dual(&component).map_err(|_| Error::PreconditionFailed(format!("component {w} of h is not bent")))?;
        if lhs != dual_coords.component(w)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub fn dual_linearity_check(h: &VectorialFunction, points: &[usize]) -> Result<bool> {
    Ok(dual_linearity_witness(h, points)?.is_none())
}

/// Whether `fstar` is at bent distance to every entry of the profile.
pub fn profile_distance_check(fstar: &BooleanFunction, profile: &SequenceProfile<'_>) -> Result<bool> {
    if profile.entry_len() != fstar.len() {
        return Err(Error::LengthMismatch(fstar.len(), profile.entry_len()));
    }
    for u in 0..profile.len() {
        if !fstar.bent_distance(&profile.entry(u)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::{algebraic_degree, parse_function};
    use crate::function::dot;
    use crate::synth::{OrderedSupport, RowSet, SynthesisSpec};
    use proptest::prelude::*;

    fn f(text: &str, n: usize) -> BooleanFunction {
        parse_function(text, Some(n)).unwrap()
    }

    #[test]
    fn bent_and_plateaued() {
        assert!(verify_bent(&f("x1*x2 + x3*x4", 4)));
        assert!(!verify_bent(&f("x1 + x3", 4)));
        assert!(verify_plateaued(&f("x1*x2", 3), 1));
        assert!(!verify_plateaued(&f("x1*x2", 2), 1));
    }

    #[test]
    fn derivative_of_cubic() {
        let g = f("x1*x2*x3", 3);
        let d = second_derivative(&g, 0b100, 0b010).unwrap();
        // Hand evaluation: x3 for every (x1, x2).
        let expected = BooleanFunction::from_bits(3, &[0, 1, 0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(d, expected);
        assert_eq!(second_derivative(&g, 3, 3), Err(Error::EqualDirections));
        let q = f("x1*x2 + x2*x3 + x1", 3);
        assert!(second_derivative(&q, 1, 6).unwrap().is_constant());
    }

    #[test]
    fn certificate_on_quadratic_bent() {
        let c = outside_mm_certificate(&f("x1*x3 + x2*x4", 4)).unwrap();
        assert_eq!(c.verdict, MmVerdict::NoWitnessForThisSplit);
        assert_eq!(c.witness, None);
        // Bent and quadratic, but not affine in the leading half.
        let c = outside_mm_certificate(&f("x1*x2 + x3*x4", 4)).unwrap();
        assert_eq!(c.witness, Some((1, 2)));
        assert_eq!(outside_mm_certificate(&f("x1", 3)), Err(Error::OddArity(3)));
        let cubic = f("x1*x2*x4 + x3*x4", 4);
        let c = outside_mm_certificate(&cubic).unwrap();
        assert_eq!(c.witness, Some((1, 2)));
    }

    #[test]
    fn self_duality() {
        assert!(is_self_dual(&f("x1*x2", 2)));
        assert!(!is_self_dual(&f("x1*x2 + x1", 2)));
        assert!(!is_self_dual(&f("x1", 2)));
    }

    #[test]
    fn disjointness() {
        let g = f("x1*x2", 3);
        assert!(!disjoint_spectra(&g, &g).unwrap());
        assert!(disjoint_spectra(&g, &(&g ^ &f("x3", 3))).unwrap());
        assert!(disjoint_spectra(&g, &f("x1", 4)).is_err());
    }

    #[test]
    fn dual_linearity() {
        let h = VectorialFunction::new(vec![f("x1*x2", 2)]).unwrap();
        assert!(dual_linearity_check(&h, &[1]).unwrap());
        let h = VectorialFunction::new(vec![f("x1*x2", 2), f("x1*x2 + x1", 2)]).unwrap();
        assert!(dual_linearity_check(&h, &[2, 3]).is_err());
    }

    #[test]
    fn profile_distance() {
        let rows = RowSet::full_space(4);
        let spec = SynthesisSpec::new(OrderedSupport::from_rows(&rows).unwrap(), f("x1*x3 + x2*x4", 4)).unwrap();
        assert!(profile_distance_check(spec.dual(), &spec.profile()).unwrap());
        assert!(!profile_distance_check(&f("x1", 4), &spec.profile()).unwrap());
        assert!(profile_distance_check(&f("x1", 2), &spec.profile()).is_err());
    }

    proptest! {
        #[test]
        fn mm_functions_have_no_witness(m in 2usize..=3, seed in any::<u64>()) {
            use rand::{seq::SliceRandom, Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut pi: Vec<usize> = (0..1 << m).collect();
            pi.shuffle(&mut rng);
            let g: Vec<bool> = (0..1 << m).map(|_| rng.random()).collect();
            let mask = (1 << m) - 1;
            let h = BooleanFunction::from_fn(2 * m, |z| dot(z >> m, pi[z & mask]) ^ g[z & mask]).unwrap();
            prop_assert_eq!(outside_mm_certificate(&h).unwrap().verdict, MmVerdict::NoWitnessForThisSplit);
        }

        #[test]
        fn derivative_symmetric_and_lowers_degree(n in 2usize..=6, bits in proptest::collection::vec(any::<bool>(), 64), a in any::<usize>(), b in any::<usize>()) {
            let g = BooleanFunction::from_fn(n, |x| bits[x]).unwrap();
            let mask = (1 << n) - 1;
            let (a, b) = (a & mask, b & mask);
            prop_assume!(a != b);
            let d = second_derivative(&g, a, b).unwrap();
            prop_assert_eq!(&d, &second_derivative(&g, b, a).unwrap());
            let deg = algebraic_degree(&g);
            if deg >= 2 && !d.is_constant() {
                prop_assert!(algebraic_degree(&d) <= deg - 2);
            }
            if deg < 2 {
                prop_assert!(d.weight() == 0);
            }
        }

        #[test]
        fn verifiers_agree_with_naive(n in 2usize..=6, bits in proptest::collection::vec(any::<bool>(), 64)) {
            let g = BooleanFunction::from_fn(n, |x| bits[x]).unwrap();
            let naive: Vec<i32> = (0..1usize << n)
                .map(|u| (0..1usize << n).map(|x| if g.eval(x) ^ dot(u, x) { -1 } else { 1 }).sum())
                .collect();
            let amp = 1i32 << (n / 2);
            let bent = n % 2 == 0 && naive.iter().all(|c| c.abs() == amp);
            prop_assert_eq!(verify_bent(&g), bent);
            for s in 1..n {
                if (n + s) % 2 != 0 { continue; }
                let amp = 1i32 << ((n + s) / 2);
                let plat = naive.iter().all(|&c| c == 0 || c.abs() == amp) && naive.iter().filter(|&&c| c != 0).count() < (1 << n) && naive.iter().filter(|&&c| c != 0).count() > 1;
                prop_assert_eq!(verify_plateaued(&g, s), plat);
            }
        }
    }
}
