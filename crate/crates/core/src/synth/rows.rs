//! Ordered row lists and the interleave operator.

use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// An ordered list of `width`-bit rows. Repeated rows are kept, since
/// several constructions build supports from repeated blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSet {
    width: usize,
    rows: Vec<usize>,
}

impl RowSet {
    pub fn new(width: usize, rows: Vec<usize>) -> Result<Self> {
        if width >= usize::BITS as usize {
            return Err(Error::InvalidArgument(format!("row width {width} is too large")));
        }
        if let Some(&r) = rows.iter().find(|&&r| r >> width != 0) {
            return Err(Error::InvalidArgument(format!("row {r} does not fit in {width} bits")));
        }
        Ok(Self { width, rows })
    }

    /// `T_f`: the truth table of `f` as a single column.
    pub fn column(f: &BooleanFunction) -> Self {
        Self {
            width: 1,
            rows: f.bits().map(|b| b as usize).collect(),
        }
    }

    /// `F_2^m` in lexicographic order.
    pub fn full_space(m: usize) -> Self {
        Self {
            width: m,
            rows: (0..1usize << m).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<usize> {
        self.rows
    }

    /// Column `j` (1-based, left to right) as a function of the row index.
    /// The height must be a power of two of at least 2.
    pub fn column_function(&self, j: usize) -> Result<BooleanFunction> {
        let h = self.rows.len();
        if !h.is_power_of_two() || h < 2 {
            return Err(Error::SizeNotPowerOfTwo(h));
        }
        let shift = self.width - j;
        BooleanFunction::from_fn(h.trailing_zeros() as usize, |i| (self.rows[i] >> shift) & 1 == 1)
    }

    /// Index of the first row that appears earlier in the list.
    pub fn first_repeat(&self) -> Option<usize> {
        let mut seen = std::collections::HashSet::with_capacity(self.rows.len());
        self.rows.iter().position(|r| !seen.insert(*r))
    }
}

/// `A_1 wr A_2 wr ...`: row-wise concatenation, first block leftmost.
pub fn interleave(blocks: &[RowSet]) -> Result<RowSet> {
    let first = blocks
        .first()
        .ok_or_else(|| Error::InvalidArgument("nothing to interleave".into()))?;
    let height = first.height();
    for b in blocks {
        if b.height() != height {
            return Err(Error::HeightMismatch(height, b.height()));
        }
    }
    let width: usize = blocks.iter().map(|b| b.width).sum();
    let rows = (0..height)
        .map(|i| blocks.iter().fold(0, |acc, b| (acc << b.width) | b.rows[i]))
        .collect();
    RowSet::new(width, rows)
}

/// `T_l wr T_{l+1}`: every row has weight one.
pub fn complement_pair(l: &BooleanFunction) -> RowSet {
    RowSet {
        width: 2,
        rows: l.bits().map(|b| if b { 0b10 } else { 0b01 }).collect(),
    }
}

/// `v + {b_0 + E, b_1 + E, ...}` in block order, with `E` given in the
/// listed order `(0, e_1, e_2, e_1 + e_2)`.
pub fn build_delta_multiset(s: usize, e: [usize; 4], b_list: &[usize], v: usize) -> Result<RowSet> {
    if e[0] != 0 || e[1] == 0 || e[2] == 0 || e[1] == e[2] || e[3] != e[1] ^ e[2] {
        return Err(Error::PreconditionFailed(
            "E must be listed as (0, e1, e2, e1+e2) with independent e1, e2".into(),
        ));
    }
    if e.iter().chain(b_list).chain(std::iter::once(&v)).any(|&p| p >> s != 0) {
        return Err(Error::InvalidArgument(format!("points must fit in {s} bits")));
    }
    if !b_list.len().is_power_of_two() {
        return Err(Error::SizeNotPowerOfTwo(b_list.len()));
    }
    if let Some(&b) = b_list.iter().find(|b| !e.contains(b)) {
        return Err(Error::PreconditionFailed(format!("b = {b} is not in E")));
    }
    for j in 1..b_list.len() {
        let top = 1 << (usize::BITS - 1 - j.leading_zeros());
        if b_list[j] != b_list[top] ^ b_list[j - top] {
            return Err(Error::RecursionViolated(j));
        }
    }
    if e.contains(&v) {
        return Err(Error::VInsideE);
    }
    let rows = b_list.iter().flat_map(|&b| e.iter().map(move |&x| v ^ b ^ x)).collect();
    RowSet::new(s, rows)
}
