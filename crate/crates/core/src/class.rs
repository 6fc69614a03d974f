//! Spectral classification.

use std::collections::BTreeMap;
use std::fmt;

use crate::function::BooleanFunction;
use crate::walsh::{wht, WalshSpectrum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Bent,
    /// Three-valued spectrum `{0, +-2^{(n+s)/2}}` with `1 <= s <= n-1`.
    Plateaued {
        s: usize,
    },
    /// A single nonzero coefficient `+-2^n`.
    Affine,
    Other,
}

impl ClassTag {
    /// Plateau parameter: 0 for bent, `n` for affine.
    pub fn plateau(&self, n: usize) -> Option<usize> {
        match *self {
            ClassTag::Bent => Some(0),
            ClassTag::Plateaued { s } => Some(s),
            ClassTag::Affine => Some(n),
            ClassTag::Other => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClassTag::Bent => "bent",
            ClassTag::Plateaued { .. } => "plateaued",
            ClassTag::Affine => "affine",
            ClassTag::Other => "other",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Plateaued { s } => write!(f, "plateaued(s={s})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumClass {
    pub tag: ClassTag,
    /// Walsh value to number of points taking it.
    pub distribution: BTreeMap<i32, usize>,
}

pub fn distribution(spectrum: &WalshSpectrum) -> BTreeMap<i32, usize> {
    let mut d = BTreeMap::new();
    for &c in spectrum.coeffs() {
        *d.entry(c).or_insert(0) += 1;
    }
    d
}

/// Classify from a precomputed spectrum. `f0` is `f(0)`, which fixes the
/// split between positive and negative values of a plateaued spectrum.
pub fn classify_spectrum(spectrum: &WalshSpectrum, f0: bool) -> SpectrumClass {
    let n = spectrum.num_vars();
    let distribution = distribution(spectrum);
    let tag = tag_of(n, &distribution, f0);
    SpectrumClass { tag, distribution }
}

fn tag_of(n: usize, dist: &BTreeMap<i32, usize>, f0: bool) -> ClassTag {
    let amplitude = match dist.keys().find(|&&c| c != 0) {
        Some(c) => c.unsigned_abs(),
        None => return ClassTag::Other,
    };
    if dist.keys().any(|&c| c != 0 && c.unsigned_abs() != amplitude) || !amplitude.is_power_of_two() {
        return ClassTag::Other;
    }
    let j = amplitude.trailing_zeros() as usize;
    if 2 * j < n {
        return ClassTag::Other;
    }
    let s = 2 * j - n;
    let zeros = dist.get(&0).copied().unwrap_or(0);
    let pos = dist.get(&(amplitude as i32)).copied().unwrap_or(0);
    let neg = dist.get(&-(amplitude as i32)).copied().unwrap_or(0);
    if s == n {
        return if pos + neg == 1 {
            ClassTag::Affine
        } else {
            ClassTag::Other
        };
    }
    let nonzero = 1usize << (n - s);
    let half = 1usize << (n - s - 1);
    let offset = 1usize << ((n - s) / 2 - 1);
    let expected_pos = if f0 { half - offset } else { half + offset };
    if zeros != (1 << n) - nonzero || pos != expected_pos || neg != nonzero - expected_pos {
        return ClassTag::Other;
    }
    if s == 0 {
        ClassTag::Bent
    } else {
        ClassTag::Plateaued { s }
    }
}

pub fn classify(f: &BooleanFunction) -> SpectrumClass {
    classify_spectrum(&wht(f), f.eval(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::parse_function;

    #[test]
    fn canonical_cases() {
        let bent = parse_function("x1*x2 + x3*x4", None).unwrap();
        assert_eq!(classify(&bent).tag, ClassTag::Bent);
        let affine = BooleanFunction::variable(4, 1).unwrap();
        assert_eq!(classify(&affine).tag, ClassTag::Affine);
        let semi = parse_function("x1*x2*x5 + x1*x3 + x2*x4 + x5", None).unwrap();
        assert_eq!(classify(&semi).tag, ClassTag::Plateaued { s: 1 });
        let cubic = parse_function("x1*x2*x3", None).unwrap();
        assert_eq!(classify(&cubic).tag, ClassTag::Other);
        assert_eq!(classify(&BooleanFunction::one(1).unwrap()).tag, ClassTag::Affine);
    }

    #[test]
    fn invariant_under_linear_shift() {
        let f = parse_function("x1*x2 + x3", Some(3)).unwrap();
        let tag = classify(&f).tag;
        assert_eq!(tag, ClassTag::Plateaued { s: 1 });
        for a in 0..8 {
            let g = &f ^ &BooleanFunction::linear(3, a).unwrap();
            assert_eq!(classify(&g).tag, tag);
        }
    }

    #[test]
    fn exhaustive_four_variable_counts() {
        // Counts of bent and affine functions on four variables are classical.
        let mut bent = 0;
        let mut affine = 0;
        for t in 0u32..1 << 16 {
            let f = BooleanFunction::from_fn(4, |x| (t >> x) & 1 == 1).unwrap();
            match classify(&f).tag {
                ClassTag::Bent => bent += 1,
                ClassTag::Affine => affine += 1,
                ClassTag::Plateaued { s } => assert_eq!(s, 2),
                ClassTag::Other => {}
            }
        }
        assert_eq!(bent, 896);
        assert_eq!(affine, 32);
    }
}
