//! Ordered Walsh supports and subspace tests.

use crate::error::{Error, Result};
use crate::function::dot;

use super::rows::RowSet;

/// A support `S = v + E` listed as `omega_i = v + e_i`. Row `i` is
/// identified with the point `x_i` of `F_2^{k-s}`, so the list order fixes
/// the dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSupport {
    k: usize,
    s: usize,
    v: usize,
    e_list: Vec<usize>,
    omega_list: Vec<usize>,
}

/// `log2 |S|`, which must be even so that the dual is defined on an even
/// number of variables.
fn log2_size(len: usize, k: usize) -> Result<usize> {
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::SizeNotPowerOfTwo(len));
    }
    let d = len.trailing_zeros() as usize;
    if d > k || !d.is_multiple_of(2) {
        return Err(Error::SizeNotPowerOfTwo(len));
    }
    Ok(d)
}

impl OrderedSupport {
    /// Lexicographic ordering: `E = v + points` sorted ascending. Without an
    /// anchor, `v` is the smallest point.
    pub fn order(k: usize, points: &[usize], v: Option<usize>) -> Result<Self> {
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&p) = sorted.iter().find(|&&p| p >> k != 0) {
            return Err(Error::InvalidArgument(format!("point {p} does not fit in {k} bits")));
        }
        let d = log2_size(sorted.len(), k)?;
        let v = match v {
            Some(v) => {
                if sorted.binary_search(&v).is_err() {
                    return Err(Error::VNotInSupport(v));
                }
                v
            }
            None => sorted[0],
        };
        let mut e_list: Vec<usize> = sorted.iter().map(|&p| p ^ v).collect();
        e_list.sort_unstable();
        let omega_list = e_list.iter().map(|&e| e ^ v).collect();
        Ok(Self {
            k,
            s: k - d,
            v,
            e_list,
            omega_list,
        })
    }

    /// Keep the given row order: `v` is the first row and `e_i = omega_i + v`.
    pub fn from_rows(rows: &RowSet) -> Result<Self> {
        let k = rows.width();
        let d = log2_size(rows.height(), k)?;
        if let Some(i) = rows.first_repeat() {
            return Err(Error::RepeatedRow(i));
        }
        let omega_list = rows.rows().to_vec();
        let v = omega_list[0];
        let e_list = omega_list.iter().map(|&w| w ^ v).collect();
        Ok(Self {
            k,
            s: k - d,
            v,
            e_list,
            omega_list,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// `k - s`, the variable count of the dual.
    pub fn dual_vars(&self) -> usize {
        self.k - self.s
    }

    pub fn anchor(&self) -> usize {
        self.v
    }

    pub fn e_list(&self) -> &[usize] {
        &self.e_list
    }

    pub fn omega_list(&self) -> &[usize] {
        &self.omega_list
    }

    pub fn len(&self) -> usize {
        self.omega_list.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when `E` is strictly increasing.
    pub fn is_lexicographic(&self) -> bool {
        self.e_list.windows(2).all(|w| w[0] < w[1])
    }
}

/// If `points = v + span(basis)`, the smallest such `v` and a reduced row
/// echelon basis (pivots descending).
pub fn is_affine_subspace(points: &[usize]) -> Option<(usize, Vec<usize>)> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() || !sorted.len().is_power_of_two() {
        return None;
    }
    let v = sorted[0];
    let basis = rref(sorted.iter().map(|&p| p ^ v));
    if 1usize << basis.len() != sorted.len() {
        return None;
    }
    Some((v, basis))
}

/// Gauss-Jordan elimination over `F_2`.
pub fn rref(vectors: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut basis: Vec<usize> = Vec::new();
    for mut x in vectors {
        for &b in &basis {
            let pivot = usize::BITS - 1 - b.leading_zeros();
            if (x >> pivot) & 1 == 1 {
                x ^= b;
            }
        }
        if x == 0 {
            continue;
        }
        let pivot = usize::BITS - 1 - x.leading_zeros();
        for b in basis.iter_mut() {
            if (*b >> pivot) & 1 == 1 {
                *b ^= x;
            }
        }
        basis.push(x);
    }
    basis.sort_unstable_by(|a, b| b.cmp(a));
    basis
}

/// Row `r` of the Sylvester-Hadamard matrix of order `2^m`.
pub fn hadamard_row(m: usize, r: usize) -> Result<Vec<i32>> {
    let order = 1usize << m;
    if r >= order {
        return Err(Error::RowOutOfRange { row: r, order });
    }
    Ok((0..order).map(|x| if dot(r, x) { -1 } else { 1 }).collect())
}

/// `e_j = e_{2^i} + e_{j - 2^i}` for every `2^i <= j < 2^{i+1}`.
pub fn lexicographic_recursion_check(support: &OrderedSupport) -> bool {
    let e = support.e_list();
    if e[0] != 0 {
        return false;
    }
    (1..e.len()).all(|j| {
        let top = 1 << (usize::BITS - 1 - j.leading_zeros());
        e[j] == e[top] ^ e[j - top]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchored_ordering() {
        let s = OrderedSupport::order(3, &[0b010, 0b011, 0b100, 0b101], Some(0b011)).unwrap();
        assert_eq!(s.e_list(), &[0b000, 0b001, 0b110, 0b111]);
        assert_eq!(s.omega_list(), &[0b011, 0b010, 0b101, 0b100]);
        assert_eq!(s.s(), 1);
        assert!(lexicographic_recursion_check(&s));
        assert_eq!(
            OrderedSupport::order(3, &[0b010, 0b011, 0b100, 0b101], Some(0)),
            Err(Error::VNotInSupport(0))
        );
        assert_eq!(
            OrderedSupport::order(3, &[1, 2, 3], None),
            Err(Error::SizeNotPowerOfTwo(3))
        );
    }

    #[test]
    fn singleton_and_full_space() {
        let single = OrderedSupport::order(4, &[9], None).unwrap();
        assert_eq!((single.anchor(), single.e_list()), (9, &[0][..]));
        let full = OrderedSupport::order(4, &(0..16).collect::<Vec<_>>(), Some(0)).unwrap();
        assert_eq!(full.omega_list(), &(0..16).collect::<Vec<_>>()[..]);
        assert!(lexicographic_recursion_check(&full));
    }

    #[test]
    fn recursion_rejects_non_subspace() {
        let s = OrderedSupport::order(3, &[0b000, 0b001, 0b010, 0b100], Some(0)).unwrap();
        assert!(!lexicographic_recursion_check(&s));
    }

    #[test]
    fn affine_detection() {
        let (v, basis) = is_affine_subspace(&[0b100, 0b010, 0b001, 0b111]).unwrap();
        assert_eq!(v, 0b001);
        assert_eq!(basis.len(), 2);
        assert_eq!(is_affine_subspace(&[5]), Some((5, vec![])));
        assert_eq!(is_affine_subspace(&[0, 1, 2, 4]), None);
    }

    #[test]
    fn affine_detection_matches_enumeration() {
        // Every 4-subset of F_2^3 against the explicit list of 2-dimensional cosets.
        let mut cosets = std::collections::BTreeSet::new();
        for a in 1..8usize {
            for b in 1..8usize {
                if a == b {
                    continue;
                }
                for v in 0..8usize {
                    let mut c = vec![v, v ^ a, v ^ b, v ^ a ^ b];
                    c.sort_unstable();
                    cosets.insert(c);
                }
            }
        }
        for mask in 0u32..256 {
            if mask.count_ones() != 4 {
                continue;
            }
            let pts: Vec<usize> = (0..8).filter(|&p| (mask >> p) & 1 == 1).collect();
            assert_eq!(is_affine_subspace(&pts).is_some(), cosets.contains(&pts));
        }
    }

    #[test]
    fn hadamard_rows() {
        assert_eq!(hadamard_row(1, 0).unwrap(), vec![1, 1]);
        assert_eq!(hadamard_row(1, 1).unwrap(), vec![1, -1]);
        assert_eq!(hadamard_row(2, 3).unwrap(), vec![1, -1, -1, 1]);
        assert_eq!(hadamard_row(2, 4), Err(Error::RowOutOfRange { row: 4, order: 4 }));
    }
}
