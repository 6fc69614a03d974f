//! Outer forms of the named constructions, each given by an ordered
//! support and a dual and obtained through spectral synthesis.
//!
//! Row `i` of a support is identified with the dual's input point `i`.

use super::composite::{compose, CompositeSpec};
use crate::anf::parse_function;
use crate::error::Result;
use crate::function::BooleanFunction;
use crate::synth::{build_delta_multiset, complement_pair, interleave, synthesize_from_rows, RowSet};

#[derive(Clone, Debug)]
pub struct OuterForm {
    pub rows: RowSet,
    pub dual: BooleanFunction,
}

impl OuterForm {
    pub fn synthesize(&self) -> Result<BooleanFunction> {
        synthesize_from_rows(&self.rows, &self.dual)
    }

    pub fn num_vars(&self) -> usize {
        self.rows.width()
    }

    /// `f(h_1, ..., h_k)` with `f` the synthesized form.
    pub fn apply(&self, coords: Vec<BooleanFunction>) -> Result<BooleanFunction> {
        let spec = CompositeSpec::from_coords(self.synthesize()?, coords)?;
        Ok(compose(&spec))
    }
}

fn rows(width: usize, text: &[&str]) -> RowSet {
    let rows = text
        .iter()
        .map(|t| usize::from_str_radix(t, 2).expect("binary literal"))
        .collect();
    RowSet::new(width, rows).expect("rows fit")
}

fn anf(text: &str, n: usize) -> BooleanFunction {
    parse_function(text, Some(n)).expect("valid ANF literal")
}

fn majority_dual() -> BooleanFunction {
    anf("x1*x2", 2)
}

/// Five variables `(a, b, c, y1, y2)`; support `{100,010,001,111} wr F_2^2`
/// read row by row.
pub fn rothaus_form() -> OuterForm {
    OuterForm {
        rows: rows(5, &["10000", "01010", "00101", "11111"]),
        dual: majority_dual(),
    }
}

/// Seven variables `(a, b, c, y1, ..., y4)`, support `Delta wr F_2^4` with
/// `Delta` the translated blocks `v + b_j + E`.
pub fn gen_rothaus_a_form() -> OuterForm {
    let delta = build_delta_multiset(3, [0, 0b110, 0b101, 0b011], &[0, 0b101, 0b101, 0], 0b100)
        .expect("fixed parameters are valid");
    OuterForm {
        rows: interleave(&[delta, RowSet::full_space(4)]).expect("equal heights"),
        dual: anf("x1*x3 + x2*x3 + x2*x4 + x3*x4 + x3", 4),
    }
}

/// Six variables `(a, b, y1, ..., y4)`, support `T_g wr T_{g+1} wr F_2^4`
/// with `g = x3 x4`.
pub fn gen_rothaus_b_form() -> OuterForm {
    let g = anf("x3*x4", 4);
    OuterForm {
        rows: interleave(&[complement_pair(&g), RowSet::full_space(4)]).expect("equal heights"),
        dual: anf("x1*x3 + x2*x4", 4),
    }
}

/// Rows `M_1 wr ... wr M_k` with `M_i = T_{l_i} wr T_{l_i + 1}`.
pub fn indirect_sum_rows(ells: &[BooleanFunction]) -> Result<RowSet> {
    let blocks: Vec<RowSet> = ells.iter().map(complement_pair).collect();
    interleave(&blocks)
}

/// Four variables `(f1, f2, g1, g2)`.
pub fn indirect_sum_form() -> OuterForm {
    let ells = [anf("x1", 2), anf("x2", 2)];
    OuterForm {
        rows: indirect_sum_rows(&ells).expect("equal heights"),
        dual: anf("1 + x1 + x2 + x1*x2", 2),
    }
}

/// Eight variables `(f1, f2, g1, g2, l1, l2, d1, d2)`.
pub fn gis_a_form() -> OuterForm {
    let ells: Vec<_> = (1..=4)
        .map(|j| BooleanFunction::variable(4, j).expect("j <= 4"))
        .collect();
    OuterForm {
        rows: indirect_sum_rows(&ells).expect("equal heights"),
        dual: anf("x1*x3 + x2*x4 + x3*x4", 4),
    }
}

/// Six variables `(f1, f2, g1, g2, z1, z2)`.
pub fn gis_b_form() -> OuterForm {
    let m = indirect_sum_rows(&[anf("x1", 2), anf("x2", 2)]).expect("equal heights");
    OuterForm {
        rows: interleave(&[m, RowSet::full_space(2)]).expect("equal heights"),
        dual: majority_dual(),
    }
}

/// Eight variables `(f1, f2, g1, g2, z1, ..., z4)`.
pub fn gis_c_form() -> OuterForm {
    let m = indirect_sum_rows(&[anf("x3*x4", 4), anf("x2*x3", 4)]).expect("equal heights");
    OuterForm {
        rows: interleave(&[m, RowSet::full_space(4)]).expect("equal heights"),
        dual: anf("x1*x3 + x2*x4", 4),
    }
}

/// Three variables; the weight-one points together with `111`.
pub fn mesnager_form() -> OuterForm {
    OuterForm {
        rows: rows(3, &["100", "010", "001", "111"]),
        dual: majority_dual(),
    }
}

/// Four variables `(h1, h2, h3, h4)`.
pub fn dualcor_form() -> OuterForm {
    OuterForm {
        rows: rows(4, &["1000", "0101", "0010", "1111"]),
        dual: majority_dual(),
    }
}
