//! Named constructions that build bent and plateaued functions from smaller ones.
//!
//! Every named construction exists twice: as its closed formula and as a
//! composition `f(h_1, ..., h_k)` with the outer form `f` synthesized from
//! support data (see [`forms`]). Tests compare the two.

pub mod composite;
pub mod forms;
pub mod indicator;
pub mod indirect;
pub mod rothaus;
pub mod same_space;

pub use composite::{
    compose, composite_wht_identity_check, composite_wht_rhs, reduced_composite_wht_check, CompositeSpec,
};
pub use indicator::{
    direct_sum_supports, disjoint_spectra_construct, divisibility_check, divisibility_witness, generic_method_a,
    indicator_construct, indicator_function, indicator_wht_identity_check, orthogonal_complement, IndicatorSpec,
};
pub use indirect::{
    gen_indirect_sum_a, gen_indirect_sum_b, gen_indirect_sum_c, gen_indirect_sum_k, indirect_sum, DisjointBundle,
    WithDual,
};
pub use rothaus::{
    bent_concatenation, bent_outer_form_construct, generalized_rothaus_a, generalized_rothaus_b, rothaus,
    split_support_construct, SplitMode, SplitOutcome,
};
pub use same_space::{dualcor_family, mesnager_g};

use crate::analysis::verify_bent;
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// Whether to check a construction's hypotheses before building.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Verify {
    /// Check when the output has at most [`Verify::AUTO_LIMIT`] variables.
    #[default]
    Auto,
    Always,
    Never,
}

impl Verify {
    pub const AUTO_LIMIT: usize = 16;

    pub fn enabled(self, n: usize) -> bool {
        match self {
            Verify::Auto => n <= Self::AUTO_LIMIT,
            Verify::Always => true,
            Verify::Never => false,
        }
    }
}

pub(crate) fn require_bent(name: &str, f: &BooleanFunction) -> Result<()> {
    if verify_bent(f) {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(format!("{name} is not bent")))
    }
}

pub(crate) fn require_same_vars(fs: &[&BooleanFunction]) -> Result<usize> {
    let n = fs[0].num_vars();
    for f in fs {
        if f.num_vars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: f.num_vars(),
            });
        }
    }
    Ok(n)
}

/// `f1* + f2* + f3* + f4*` with `f4 = f1 + f2 + f3`; every input must be bent.
pub(crate) fn quadruple_dual_sum(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
) -> Result<BooleanFunction> {
    let f4 = f1 ^ f2 ^ f3;
    let names = ["f1", "f2", "f3", "f1+f2+f3"];
    let mut acc: Option<BooleanFunction> = None;
    for (name, f) in names.iter().zip([f1, f2, f3, &f4]) {
        let d = crate::dual::bent_dual(f).map_err(|_| Error::PreconditionFailed(format!("{name} is not bent")))?;
        acc = Some(match acc {
            None => d,
            Some(a) => a ^ d,
        });
    }
    Ok(acc.expect("four terms"))
}
