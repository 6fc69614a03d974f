//! Packed truth tables.
//!
//! A point `x = (x_1, ..., x_n)` of `F_2^n` is encoded as the integer
//! `sum_j x_{n-j} 2^j`, so `x_1` is the most significant bit. Bit `i` of a
//! truth table is the value at the point whose encoding is `i`. Every other
//! module (and both text formats) relies on this single convention.

use std::fmt;
use std::ops::{BitAnd, BitXor, Not};

use crate::error::{Error, Result};

/// Largest supported variable count. Walsh coefficients are bounded by
/// `2^n` in absolute value and fit an `i32` up to this size.
pub const MAX_VARS: usize = 28;

/// Inner product over `F_2` of two encoded points.
#[inline]
pub fn dot(a: usize, b: usize) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// Bit mask of variable `x_j` (1-based) in an `n`-variable encoding.
#[inline]
pub fn var_mask(n: usize, j: usize) -> usize {
    debug_assert!(j >= 1 && j <= n);
    1 << (n - j)
}

/// Encode a coordinate vector (first entry most significant).
pub fn encode_bits(bits: &[u8]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | (b & 1) as usize)
}

/// Render an encoded point as a bit string of length `width`.
pub fn point_to_string(point: usize, width: usize) -> String {
    (0..width)
        .map(|j| if (point >> (width - 1 - j)) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Parse a bit string such as `01101` into an encoded point.
pub fn parse_point(text: &str) -> Result<(usize, usize)> {
    let text = text.trim();
    if text.is_empty() || text.len() > 63 {
        return Err(Error::Parse {
            position: 0,
            message: format!("expected a bit string, got {text:?}"),
        });
    }
    let mut value = 0usize;
    for (position, c) in text.chars().enumerate() {
        value = match c {
            '0' => value << 1,
            '1' => (value << 1) | 1,
            _ => {
                return Err(Error::Parse {
                    position,
                    message: format!("unexpected character {c:?} in bit string"),
                })
            }
        };
    }
    Ok((value, text.len()))
}

pub(crate) fn check_vars(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::Capacity(n))
    } else {
        Ok(())
    }
}

fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// A Boolean function `F_2^n -> F_2` stored as a packed truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    pub fn zero(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn one(n: usize) -> Result<Self> {
        Ok(!Self::zero(n)?)
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        if value {
            Self::one(n)
        } else {
            Self::zero(n)
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut out = Self::zero(n)?;
        for x in 0..out.len() {
            if f(x) {
                out.words[x >> 6] |= 1 << (x & 63);
            }
        }
        Ok(out)
    }

    pub fn from_bits(n: usize, bits: &[u8]) -> Result<Self> {
        check_vars(n)?;
        if bits.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: bits.len(),
            });
        }
        Self::from_fn(n, |x| bits[x] & 1 == 1)
    }

    /// The coordinate function `x_j` (1-based).
    pub fn variable(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::InvalidArgument(format!(
                "variable x{j} does not exist in {n} variables"
            )));
        }
        let mask = var_mask(n, j);
        Self::from_fn(n, |x| x & mask != 0)
    }

    /// The linear function `x -> a . x`.
    pub fn linear(n: usize, a: usize) -> Result<Self> {
        if a >> n != 0 {
            return Err(Error::InvalidArgument(format!("point {a} does not fit in {n} bits")));
        }
        Self::from_fn(n, |x| dot(a, x))
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Table length `2^n`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn eval(&self, x: usize) -> bool {
        (self.words[x >> 6] >> (x & 63)) & 1 == 1
    }

    /// `(-1)^{f(x)}`.
    #[inline]
    pub fn sign(&self, x: usize) -> i32 {
        if self.eval(x) {
            -1
        } else {
            1
        }
    }

    pub fn set(&mut self, x: usize, value: bool) {
        let bit = 1u64 << (x & 63);
        if value {
            self.words[x >> 6] |= bit;
        } else {
            self.words[x >> 6] &= !bit;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |x| self.eval(x))
    }

    /// Hamming weight of the truth table.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.len()
    }

    /// The `+-1` sequence `chi_f`.
    pub fn signs(&self) -> Vec<i32> {
        (0..self.len()).map(|x| self.sign(x)).collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_xor(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self ^ other)
    }

    pub fn try_and(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self & other)
    }

    /// `sum_x (-1)^{f(x) + g(x)}`.
    pub fn correlation(&self, other: &Self) -> Result<i64> {
        self.check_same(other)?;
        let differing: u64 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as u64)
            .sum();
        Ok(self.len() as i64 - 2 * differing as i64)
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        self.check_same(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    /// True iff `d_H(f, g) = 2^{n-1} +- 2^{n/2-1}`. Always false for odd `n`.
    pub fn bent_distance(&self, other: &Self) -> Result<bool> {
        let c = self.correlation(other)?;
        if self.n % 2 == 1 {
            return Ok(false);
        }
        Ok(c.unsigned_abs() == 1u64 << (self.n / 2))
    }

    /// `x -> f(x + a)`.
    pub fn translate(&self, a: usize) -> Self {
        let mut out = self.clone();
        for x in 0..self.len() {
            out.set(x, self.eval(x ^ a));
        }
        out
    }

    /// Embed `f` into `total` variables, reading its inputs from the
    /// variables `x_{offset+1}, ..., x_{offset+n}`.
    pub fn lift(&self, offset: usize, total: usize) -> Result<Self> {
        if offset + self.n > total {
            return Err(Error::InvalidArgument(format!(
                "cannot place {} variables after {offset} in a {total}-variable space",
                self.n
            )));
        }
        let shift = total - offset - self.n;
        let mask = self.len() - 1;
        Self::from_fn(total, |x| self.eval((x >> shift) & mask))
    }

    /// Restriction obtained by fixing the last `count` variables to the
    /// bits of `values`.
    pub fn fix_trailing(&self, count: usize, values: usize) -> Result<Self> {
        if count >= self.n || values >> count != 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot fix {count} trailing variables of a {}-variable function",
                self.n
            )));
        }
        Self::from_fn(self.n - count, |x| self.eval((x << count) | values))
    }

    /// Truth table as lowercase hex, table order read left to right.
    /// Requires `n >= 2`.
    pub fn to_hex(&self) -> String {
        assert!(self.n >= 2, "hex truth tables need at least 2 variables");
        let digits = self.len() / 4;
        let mut s = String::with_capacity(digits);
        for d in 0..digits {
            let mut v = 0u32;
            for t in 0..4 {
                v = (v << 1) | self.eval(4 * d + t) as u32;
            }
            s.push(char::from_digit(v, 16).expect("nibble"));
        }
        s
    }

    /// Parse a hex truth table; the variable count is inferred from its length.
    pub fn from_hex(text: &str) -> Result<Self> {
        let text = text.trim();
        let len = text.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::Parse {
                position: 0,
                message: format!("hex truth table length {len} is not a power of two"),
            });
        }
        let n = len.trailing_zeros() as usize + 2;
        check_vars(n)?;
        let mut out = Self::zero(n)?;
        for (d, c) in text.chars().enumerate() {
            let v = match c {
                '0'..='9' | 'a'..='f' => c.to_digit(16).expect("hex digit"),
                _ => {
                    return Err(Error::Parse {
                        position: d,
                        message: format!("unexpected character {c:?} in hex truth table"),
                    })
                }
            };
            for t in 0..4 {
                if (v >> (3 - t)) & 1 == 1 {
                    out.set(4 * d + t, true);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n >= 2 {
            write!(f, "BooleanFunction(n={}, {})", self.n, self.to_hex())
        } else {
            write!(f, "BooleanFunction(n=1, {}{})", self.eval(0) as u8, self.eval(1) as u8)
        }
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n >= 2 {
            f.write_str(&self.to_hex())
        } else {
            write!(f, "{}{}", self.eval(0) as u8, self.eval(1) as u8)
        }
    }
}

const DIFFERENT_VARS: &str = "operands have different variable counts";

impl BitXor for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitxor(self, rhs: Self) -> BooleanFunction {
        assert_eq!(self.n, rhs.n, "{DIFFERENT_VARS}");
        BooleanFunction {
            n: self.n,
            words: self.words.iter().zip(&rhs.words).map(|(a, b)| a ^ b).collect(),
        }
    }
}

impl BitAnd for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitand(self, rhs: Self) -> BooleanFunction {
        assert_eq!(self.n, rhs.n, "{DIFFERENT_VARS}");
        BooleanFunction {
            n: self.n,
            words: self.words.iter().zip(&rhs.words).map(|(a, b)| a & b).collect(),
        }
    }
}

impl BitXor for BooleanFunction {
    type Output = BooleanFunction;
    fn bitxor(self, rhs: Self) -> BooleanFunction {
        &self ^ &rhs
    }
}

impl BitAnd for BooleanFunction {
    type Output = BooleanFunction;
    fn bitand(self, rhs: Self) -> BooleanFunction {
        &self & &rhs
    }
}

impl BitXor<&BooleanFunction> for BooleanFunction {
    type Output = BooleanFunction;
    fn bitxor(self, rhs: &BooleanFunction) -> BooleanFunction {
        &self ^ rhs
    }
}

impl BitAnd<&BooleanFunction> for BooleanFunction {
    type Output = BooleanFunction;
    fn bitand(self, rhs: &BooleanFunction) -> BooleanFunction {
        &self & rhs
    }
}

impl BitXor<BooleanFunction> for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitxor(self, rhs: BooleanFunction) -> BooleanFunction {
        self ^ &rhs
    }
}

impl BitAnd<BooleanFunction> for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitand(self, rhs: BooleanFunction) -> BooleanFunction {
        self & &rhs
    }
}

/// Complement.
impl Not for &BooleanFunction {
    type Output = BooleanFunction;
    fn not(self) -> BooleanFunction {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let last = words.len() - 1;
        words[last] &= tail_mask(self.n);
        BooleanFunction { n: self.n, words }
    }
}

impl Not for BooleanFunction {
    type Output = BooleanFunction;
    fn not(self) -> BooleanFunction {
        !&self
    }
}

/// `H = (h_1, ..., h_k)`, with `h_1` feeding the most significant bit of
/// the encoded output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorialFunction {
    n: usize,
    coords: Vec<BooleanFunction>,
}

impl VectorialFunction {
    pub fn new(coords: Vec<BooleanFunction>) -> Result<Self> {
        let first = coords
            .first()
            .ok_or_else(|| Error::InvalidArgument("vectorial function needs at least one coordinate".into()))?;
        let n = first.num_vars();
        for c in &coords {
            if c.num_vars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.num_vars(),
                });
            }
        }
        Ok(Self { n, coords })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Number of coordinates `k`.
    pub fn num_outputs(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BooleanFunction] {
        &self.coords
    }

    /// Encoded value `H(x)` in `F_2^k`.
    pub fn eval(&self, x: usize) -> usize {
        self.coords.iter().fold(0, |acc, h| (acc << 1) | h.eval(x) as usize)
    }

    /// The component function `w . H = w_1 h_1 + ... + w_k h_k`.
    pub fn component(&self, w: usize) -> Result<BooleanFunction> {
        let k = self.coords.len();
        if k < usize::BITS as usize && w >> k != 0 {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: usize::BITS as usize - w.leading_zeros() as usize,
            });
        }
        let mut out = BooleanFunction::zero(self.n)?;
        for (i, h) in self.coords.iter().enumerate() {
            if (w >> (k - 1 - i)) & 1 == 1 {
                out = out ^ h;
            }
        }
        Ok(out)
    }
}

/// Consecutive disjoint variable blocks, first block most significant.
#[derive(Clone, Debug)]
pub struct DisjointSpace {
    sizes: Vec<usize>,
    total: usize,
}

impl DisjointSpace {
    pub fn new(sizes: &[usize]) -> Result<Self> {
        let total = sizes.iter().sum();
        check_vars(total)?;
        Ok(Self {
            sizes: sizes.to_vec(),
            total,
        })
    }

    pub fn total(&self) -> usize {
        self.total
    }

    fn offset(&self, block: usize) -> usize {
        self.sizes[..block].iter().sum()
    }

    /// Lift a function on block `block` to the whole space.
    pub fn lift(&self, block: usize, f: &BooleanFunction) -> Result<BooleanFunction> {
        if f.num_vars() != self.sizes[block] {
            return Err(Error::DimensionMismatch {
                expected: self.sizes[block],
                found: f.num_vars(),
            });
        }
        f.lift(self.offset(block), self.total)
    }

    /// Variable `j` (1-based) of block `block`.
    pub fn var(&self, block: usize, j: usize) -> BooleanFunction {
        assert!(j >= 1 && j <= self.sizes[block]);
        BooleanFunction::variable(self.total, self.offset(block) + j).expect("valid variable")
    }

    pub fn one(&self) -> BooleanFunction {
        BooleanFunction::one(self.total).expect("valid size")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_round_trip_and_layout() {
        // x1*x2 on two variables: table 0001.
        let f = BooleanFunction::from_fn(2, |x| x == 3).unwrap();
        assert_eq!(f.to_hex(), "1");
        assert_eq!(BooleanFunction::from_hex("1").unwrap(), f);
        let g = BooleanFunction::variable(3, 1).unwrap();
        assert_eq!(g.to_hex(), "0f");
        let h = BooleanFunction::variable(3, 3).unwrap();
        assert_eq!(h.to_hex(), "55");
        assert!(BooleanFunction::from_hex("0F").is_err());
        assert!(BooleanFunction::from_hex("abc").is_err());
    }

    #[test]
    fn rejects_zero_and_oversized() {
        assert_eq!(BooleanFunction::zero(0), Err(Error::Capacity(0)));
        assert_eq!(BooleanFunction::zero(MAX_VARS + 1), Err(Error::Capacity(MAX_VARS + 1)));
    }

    #[test]
    fn complement_keeps_padding_clear() {
        let f = !BooleanFunction::zero(3).unwrap();
        assert_eq!(f.weight(), 8);
        assert_eq!(f.words()[0], 0xff);
    }

    #[test]
    fn components() {
        let n = 4;
        let hs: Vec<_> = (1..=4).map(|j| BooleanFunction::variable(n, j).unwrap()).collect();
        let h = VectorialFunction::new(hs.clone()).unwrap();
        assert!(h.component(0).unwrap().is_constant());
        assert_eq!(h.component(0b0100).unwrap(), hs[1]);
        assert_eq!(h.component(0b0110).unwrap(), &hs[1] ^ &hs[2]);
        assert!(h.component(0b10000).is_err());
    }

    #[test]
    fn bent_distance_basics() {
        let bent = BooleanFunction::from_fn(4, |x| dot(x >> 2, x & 3)).unwrap();
        assert!(!bent.bent_distance(&bent).unwrap());
        for a in 0..16 {
            let l = BooleanFunction::linear(4, a).unwrap();
            assert!(bent.bent_distance(&l).unwrap());
            assert!(bent.bent_distance(&!&l).unwrap());
        }
        assert!(bent.bent_distance(&BooleanFunction::zero(3).unwrap()).is_err());
    }

    #[test]
    fn lift_and_fix() {
        let f = BooleanFunction::variable(2, 1).unwrap();
        let lifted = f.lift(1, 4).unwrap();
        assert_eq!(lifted, BooleanFunction::variable(4, 2).unwrap());
        let g = BooleanFunction::from_fn(3, |x| x == 0b101).unwrap();
        let slice = g.fix_trailing(1, 1).unwrap();
        assert_eq!(slice, BooleanFunction::from_fn(2, |x| x == 0b10).unwrap());
    }
}
