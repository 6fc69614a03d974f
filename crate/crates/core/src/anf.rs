//! Algebraic normal form.
//!
//! A monomial is a point `u` whose set bits name the variables it
//! multiplies, in the same encoding as truth-table indices, so `x_1` is the
//! bit `1 << (n - 1)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::function::{check_vars, var_mask, BooleanFunction};

const MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// In-place binary Moebius transform. It is an involution, so the same
/// routine maps a truth table to its ANF coefficients and back.
fn moebius(words: &mut [u64], n: usize) {
    for (i, mask) in MASKS.iter().enumerate().take(n.min(6)) {
        let shift = 1 << i;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for i in 6..n {
        let step = 1 << (i - 6);
        let mut block = 0;
        while block < words.len() {
            for j in block..block + step {
                words[j + step] ^= words[j];
            }
            block += 2 * step;
        }
    }
}

/// ANF of an `n`-variable function as a set of monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anf {
    n: usize,
    monomials: BTreeSet<usize>,
}

impl Anf {
    pub fn new(n: usize, monomials: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_vars(n)?;
        let mut set = BTreeSet::new();
        for u in monomials {
            if u >> n != 0 {
                return Err(Error::InvalidArgument(format!(
                    "monomial {u:#b} uses variables beyond x{n}"
                )));
            }
            if !set.insert(u) {
                set.remove(&u);
            }
        }
        Ok(Self { n, monomials: set })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> &BTreeSet<usize> {
        &self.monomials
    }

    pub fn degree(&self) -> usize {
        self.monomials
            .iter()
            .map(|u| u.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn to_function(&self) -> BooleanFunction {
        let mut f = BooleanFunction::zero(self.n).expect("validated size");
        for &u in &self.monomials {
            f.set(u, true);
        }
        moebius(f.words_mut(), self.n);
        f
    }

    /// Parse `x1*x3 + x2 + 1`. Without `n` the variable count is the
    /// largest index that appears (at least 1).
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let mut terms: Vec<Vec<usize>> = Vec::new();
        let mut max_var = 0;
        for (start, raw) in split_with_offsets(text, '+') {
            let trimmed = raw.trim();
            let lead = start + raw.len() - raw.trim_start().len();
            if trimmed.is_empty() {
                return Err(Error::Parse {
                    position: lead,
                    message: "empty term".into(),
                });
            }
            if trimmed == "0" {
                continue;
            }
            let mut vars = Vec::new();
            for (fstart, factor) in split_with_offsets(raw, '*') {
                let fac = factor.trim();
                let pos = start + fstart + factor.len() - factor.trim_start().len();
                if fac == "1" {
                    continue;
                }
                let digits = fac.strip_prefix('x').ok_or_else(|| Error::Parse {
                    position: pos,
                    message: format!("expected a variable like x1 or the constant 1, got {fac:?}"),
                })?;
                let j: usize = digits.parse().map_err(|_| Error::Parse {
                    position: pos + 1,
                    message: format!("bad variable index {digits:?}"),
                })?;
                if j == 0 {
                    return Err(Error::Parse {
                        position: pos + 1,
                        message: "variables are numbered from x1".into(),
                    });
                }
                max_var = max_var.max(j);
                vars.push(j);
            }
            terms.push(vars);
        }
        let n = match n {
            Some(n) => {
                if max_var > n {
                    return Err(Error::Parse {
                        position: 0,
                        message: format!("x{max_var} exceeds the declared {n} variables"),
                    });
                }
                n
            }
            None => max_var.max(1),
        };
        check_vars(n)?;
        let monomials = terms
            .into_iter()
            .map(|vars| vars.into_iter().fold(0, |u, j| u | var_mask(n, j)));
        Self::new(n, monomials)
    }

    /// Variable indices (1-based, ascending) of a monomial.
    pub fn variables_of(&self, u: usize) -> Vec<usize> {
        (1..=self.n).filter(|&j| u & var_mask(self.n, j) != 0).collect()
    }
}

fn split_with_offsets(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == sep {
            out.push((start, &text[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((start, &text[start..]));
    out
}

impl fmt::Display for Anf {
    /// Degree ascending, then lexicographic on variable indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<Vec<usize>> = self.monomials.iter().map(|&u| self.variables_of(u)).collect();
        terms.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let rendered: Vec<String> = terms
            .iter()
            .map(|vars| {
                if vars.is_empty() {
                    "1".to_string()
                } else {
                    vars.iter().map(|j| format!("x{j}")).collect::<Vec<_>>().join("*")
                }
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

pub fn anf_of(f: &BooleanFunction) -> Anf {
    let n = f.num_vars();
    let mut g = f.clone();
    moebius(g.words_mut(), n);
    Anf {
        n,
        monomials: (0..g.len()).filter(|&u| g.eval(u)).collect(),
    }
}

pub fn algebraic_degree(f: &BooleanFunction) -> usize {
    anf_of(f).degree()
}

/// Parse an ANF string straight into a truth table.
pub fn parse_function(text: &str, n: Option<usize>) -> Result<BooleanFunction> {
    Ok(Anf::parse(text, n)?.to_function())
}
