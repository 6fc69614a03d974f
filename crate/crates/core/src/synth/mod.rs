//! Spectral-domain synthesis of plateaued functions from a prescribed
//! support and dual.

mod format;
mod rows;
mod support;

pub use format::{format_support_file, parse_support_file, SupportFile};
pub use rows::{build_delta_multiset, complement_pair, interleave, RowSet};
pub use support::{hadamard_row, is_affine_subspace, lexicographic_recursion_check, rref, OrderedSupport};

use crate::error::{Error, Result};
use crate::function::{dot, BooleanFunction};
use crate::walsh::{inverse_wht, WalshSpectrum};

/// The multiset `{ (u . omega_i)_i : u in F_2^k }`, built lazily. Entry `u`
/// is returned as a function on `k - s` variables whose table is
/// `i -> u . omega_i`.
#[derive(Clone, Debug)]
pub struct SequenceProfile<'a> {
    support: &'a OrderedSupport,
}

impl<'a> SequenceProfile<'a> {
    pub fn new(support: &'a OrderedSupport) -> Self {
        Self { support }
    }

    pub fn len(&self) -> usize {
        1 << self.support.k()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Length of every entry, `2^{k-s}`.
    pub fn entry_len(&self) -> usize {
        self.support.len()
    }

    pub fn entry(&self, u: usize) -> Result<BooleanFunction> {
        let omegas = self.support.omega_list();
        BooleanFunction::from_fn(self.support.dual_vars(), |i| dot(u, omegas[i]))
    }

    /// Entry `u` as a `+-1` sequence.
    pub fn entry_signs(&self, u: usize) -> Vec<i32> {
        self.support
            .omega_list()
            .iter()
            .map(|&w| if dot(u, w) { -1 } else { 1 })
            .collect()
    }
}

/// Support plus dual for synthesis. The dual weight hypothesis is checked
/// here, before any transform is run.
#[derive(Clone, Debug)]
pub struct SynthesisSpec {
    support: OrderedSupport,
    dual: BooleanFunction,
}

impl SynthesisSpec {
    pub fn new(support: OrderedSupport, dual: BooleanFunction) -> Result<Self> {
        let d = support.dual_vars();
        if d == 0 {
            return Err(Error::InvalidArgument(
                "a single-point support has no dual to prescribe".into(),
            ));
        }
        if dual.num_vars() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: dual.num_vars(),
            });
        }
        let half = 1usize << (d - 1);
        let offset = 1usize << (d / 2 - 1);
        let weight = dual.weight();
        if weight != half - offset && weight != half + offset {
            return Err(Error::DualWeight {
                weight,
                low: half - offset,
                high: half + offset,
            });
        }
        Ok(Self { support, dual })
    }

    pub fn support(&self) -> &OrderedSupport {
        &self.support
    }

    pub fn dual(&self) -> &BooleanFunction {
        &self.dual
    }

    /// `W(omega_i) = 2^{(k+s)/2} (-1)^{f*(x_i)}`, zero off the support.
    pub fn spectrum(&self) -> WalshSpectrum {
        let k = self.support.k();
        let amplitude = 1i32 << ((k + self.support.s()) / 2);
        let values: Vec<i32> = (0..self.support.len())
            .map(|i| if self.dual.eval(i) { -amplitude } else { amplitude })
            .collect();
        WalshSpectrum::from_support(k, self.support.omega_list(), &values).expect("support rows fit in k bits")
    }

    pub fn profile(&self) -> SequenceProfile<'_> {
        SequenceProfile::new(&self.support)
    }
}

/// Inverse transform of the prescribed spectrum. A failure at point `u`
/// means the dual is not at bent distance to profile entry `u`.
pub fn synthesize_plateaued(spec: &SynthesisSpec) -> Result<BooleanFunction> {
    let f = inverse_wht(&spec.spectrum()).map_err(|e| match e {
        Error::SpectrumNotBoolean { point } => Error::DualNotAtBentDistance { entry: point },
        other => other,
    })?;
    #[cfg(debug_assertions)]
    {
        use crate::class::{classify, ClassTag};
        let s = spec.support.s();
        let expected = if s == 0 {
            ClassTag::Bent
        } else {
            ClassTag::Plateaued { s }
        };
        debug_assert_eq!(classify(&f).tag, expected);
    }
    Ok(f)
}

/// Lowest `u` whose profile entry is not at bent distance to the dual.
pub fn first_profile_violation(spec: &SynthesisSpec) -> Option<usize> {
    let profile = spec.profile();
    (0..profile.len()).find(|&u| {
        let entry = profile.entry(u).expect("entry size matches dual");
        !spec.dual.bent_distance(&entry).expect("same size")
    })
}

/// Convenience wrapper for a support given as an ordered row list.
pub fn synthesize_from_rows(rows: &RowSet, dual: &BooleanFunction) -> Result<BooleanFunction> {
    let spec = SynthesisSpec::new(OrderedSupport::from_rows(rows)?, dual.clone())?;
    synthesize_plateaued(&spec)
}
