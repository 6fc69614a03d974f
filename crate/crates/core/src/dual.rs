//! Duals of bent and plateaued functions.

use crate::class::{classify_spectrum, ClassTag};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::synth::OrderedSupport;
use crate::walsh::wht;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual {
    /// Anchor `v` of the ordered support.
    pub anchor: usize,
    pub s: usize,
    /// `f*` on `n - s` variables.
    pub function: BooleanFunction,
}

/// `f*(x_i) = 1` iff `W_f(v + e_i) < 0`, with `E` in lexicographic order.
/// Without an anchor the smallest support point is used.
pub fn dual(f: &BooleanFunction, v: Option<usize>) -> Result<Dual> {
    let n = f.num_vars();
    let spectrum = wht(f);
    let s = match classify_spectrum(&spectrum, f.eval(0)).tag {
        ClassTag::Bent => 0,
        ClassTag::Plateaued { s } => s,
        _ => return Err(Error::NotPlateauedOrBent),
    };
    let support = OrderedSupport::order(n, &spectrum.support(), v)?;
    let function = BooleanFunction::from_fn(n - s, |i| spectrum.get(support.omega_list()[i]) < 0)?;
    Ok(Dual {
        anchor: support.anchor(),
        s,
        function,
    })
}

/// Dual of a bent function; the anchor is irrelevant since `v = 0` gives
/// the identity ordering.
pub fn bent_dual(f: &BooleanFunction) -> Result<BooleanFunction> {
    let d = dual(f, Some(0))?;
    if d.s != 0 {
        return Err(Error::PreconditionFailed(format!("{f} is not bent")));
    }
    Ok(d.function)
}
