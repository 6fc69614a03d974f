//! Walsh-Hadamard transform.

use crate::error::{Error, Result};
use crate::function::{check_vars, BooleanFunction};

/// All `2^n` Walsh coefficients `W_f(u) = sum_x (-1)^{f(x) + u.x}`,
/// indexed like truth tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    coeffs: Vec<i32>,
}

impl WalshSpectrum {
    pub fn new(n: usize, coeffs: Vec<i32>) -> Result<Self> {
        check_vars(n)?;
        if coeffs.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: coeffs.len(),
            });
        }
        Ok(Self { n, coeffs })
    }

    /// Spectrum that is `values[i]` at `points[i]` and zero elsewhere.
    pub fn from_support(n: usize, points: &[usize], values: &[i32]) -> Result<Self> {
        check_vars(n)?;
        if points.len() != values.len() {
            return Err(Error::LengthMismatch(points.len(), values.len()));
        }
        let mut coeffs = vec![0; 1 << n];
        for (&p, &v) in points.iter().zip(values) {
            if p >> n != 0 {
                return Err(Error::InvalidArgument(format!("point {p} does not fit in {n} bits")));
            }
            coeffs[p] = v;
        }
        Ok(Self { n, coeffs })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn get(&self, u: usize) -> i32 {
        self.coeffs[u]
    }

    /// Points with a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&u| self.coeffs[u] != 0).collect()
    }

    /// `sum_u W(u)^2`.
    pub fn energy(&self) -> i64 {
        self.coeffs.iter().map(|&c| (c as i64) * (c as i64)).sum()
    }

    pub fn max_abs(&self) -> u32 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }
}

fn butterfly<T>(data: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let len = data.len();
    let mut h = 1;
    while h < len {
        for block in (0..len).step_by(2 * h) {
            for i in block..block + h {
                let a = data[i];
                let b = data[i + h];
                data[i] = a + b;
                data[i + h] = a - b;
            }
        }
        h *= 2;
    }
}

pub fn wht(f: &BooleanFunction) -> WalshSpectrum {
    let n = f.num_vars();
    let mut coeffs = f.signs();
    butterfly(&mut coeffs);
    debug_assert_eq!(
        coeffs.iter().map(|&c| (c as i64) * (c as i64)).sum::<i64>(),
        1i64 << (2 * n),
        "Parseval"
    );
    WalshSpectrum { n, coeffs }
}

/// Inverse transform. Fails with the first point whose reconstructed value
/// `2^{-n} sum_u W(u)(-1)^{u.x}` is not `+-1`.
pub fn inverse_wht(spectrum: &WalshSpectrum) -> Result<BooleanFunction> {
    let n = spectrum.n;
    let mut values: Vec<i64> = spectrum.coeffs.iter().map(|&c| c as i64).collect();
    butterfly(&mut values);
    let scale = 1i64 << n;
    let mut f = BooleanFunction::zero(n)?;
    for (x, &v) in values.iter().enumerate() {
        if v == scale {
            continue;
        } else if v == -scale {
            f.set(x, true);
        } else {
            return Err(Error::SpectrumNotBoolean { point: x });
        }
    }
    Ok(f)
}

pub fn walsh_support(f: &BooleanFunction) -> Vec<usize> {
    wht(f).support()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::dot;
    use proptest::prelude::*;

    fn naive(f: &BooleanFunction) -> Vec<i32> {
        (0..f.len())
            .map(|u| (0..f.len()).map(|x| if f.eval(x) ^ dot(u, x) { -1 } else { 1 }).sum())
            .collect()
    }

    #[test]
    fn small_cases() {
        let zero = BooleanFunction::zero(3).unwrap();
        assert_eq!(wht(&zero).coeffs(), &[8, 0, 0, 0, 0, 0, 0, 0]);
        let and = BooleanFunction::from_fn(2, |x| x == 3).unwrap();
        assert_eq!(wht(&and).coeffs(), &[2, 2, 2, -2]);
    }

    #[test]
    fn zero_spectrum_is_rejected() {
        let s = WalshSpectrum::new(3, vec![0; 8]).unwrap();
        assert_eq!(inverse_wht(&s), Err(Error::SpectrumNotBoolean { point: 0 }));
    }

    #[test]
    fn bent_support_is_full() {
        let f = BooleanFunction::from_fn(4, |x| dot(x >> 2, x & 3)).unwrap();
        assert_eq!(walsh_support(&f).len(), 16);
    }

    proptest! {
        #[test]
        fn matches_naive_and_round_trips(n in 1usize..=6, bits in proptest::collection::vec(any::<bool>(), 64)) {
            let f = BooleanFunction::from_fn(n, |x| bits[x]).unwrap();
            let s = wht(&f);
            prop_assert_eq!(s.coeffs().to_vec(), naive(&f));
            prop_assert_eq!(s.energy(), 1i64 << (2 * n));
            prop_assert!(s.coeffs().iter().all(|c| c.rem_euclid(2) == ((1i64 << n) % 2) as i32));
            prop_assert_eq!(inverse_wht(&s).unwrap(), f);
        }

        #[test]
        fn round_trip_larger(n in 7usize..=12, seed in any::<u64>()) {
            let f = BooleanFunction::from_fn(n, |x| (seed.rotate_left((x % 64) as u32) ^ (x as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)) >> 63 == 1).unwrap();
            let s = wht(&f);
            prop_assert_eq!(s.energy(), 1i64 << (2 * n));
            prop_assert_eq!(inverse_wht(&s).unwrap(), f);
        }
    }
}
