//! Composite representation `F(x) = f(H(x))` and its Walsh identity.

use crate::dual::dual;
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, VectorialFunction};
use crate::walsh::wht;

#[derive(Clone, Debug)]
pub struct CompositeSpec {
    pub form: BooleanFunction,
    pub coords: VectorialFunction,
}

impl CompositeSpec {
    pub fn new(form: BooleanFunction, coords: VectorialFunction) -> Result<Self> {
        if form.num_vars() != coords.num_outputs() {
            return Err(Error::ArityMismatch {
                expected: form.num_vars(),
                found: coords.num_outputs(),
            });
        }
        Ok(Self { form, coords })
    }

    pub fn from_coords(form: BooleanFunction, coords: Vec<BooleanFunction>) -> Result<Self> {
        Self::new(form, VectorialFunction::new(coords)?)
    }
}

pub fn compose(spec: &CompositeSpec) -> BooleanFunction {
    let n = spec.coords.num_vars();
    BooleanFunction::from_fn(n, |x| spec.form.eval(spec.coords.eval(x))).expect("coords are valid")
}

/// `sum_w W_f(w) W_{w.H}(u)` for every `u`, which is `2^k W_F(u)`.
pub fn composite_wht_rhs(spec: &CompositeSpec) -> Vec<i64> {
    let k = spec.form.num_vars();
    let n = spec.coords.num_vars();
    let wf = wht(&spec.form);
    let mut acc = vec![0i64; 1 << n];
    for w in 0..1usize << k {
        let c = wf.get(w) as i64;
        if c == 0 {
            continue;
        }
        let component = wht(&spec.coords.component(w).expect("w fits k bits"));
        for (a, &x) in acc.iter_mut().zip(component.coeffs()) {
            *a += c * x as i64;
        }
    }
    acc
}

/// Both sides of the composite Walsh identity at `u`.
pub fn composite_wht_identity_check(spec: &CompositeSpec, u: usize) -> Result<bool> {
    let n = spec.coords.num_vars();
    if u >> n != 0 {
        return Err(Error::InvalidArgument(format!("point {u} does not fit in {n} bits")));
    }
    let k = spec.form.num_vars();
    let lhs = wht(&compose(spec)).get(u) as i64;
    let rhs = composite_wht_rhs(spec)[u];
    Ok(rhs == lhs << k)
}

/// The identity restricted to the support of a bent or plateaued form:
/// `2^{(k-s)/2} W_F(u) = sum_{w in S_f} (-1)^{f*(w)} W_{w.H}(u)`.
pub fn reduced_composite_wht_check(spec: &CompositeSpec, u: usize) -> Result<bool> {
    let k = spec.form.num_vars();
    let wf = wht(&spec.form);
    let d = dual(&spec.form, None)?;
    let mut sum = 0i64;
    for w in wf.support() {
        let sign = if wf.get(w) < 0 { -1 } else { 1 };
        sum += sign * wht(&spec.coords.component(w)?).get(u) as i64;
    }
    let lhs = wht(&compose(spec)).get(u) as i64;
    Ok(sum == lhs << ((k - d.s) / 2))
}
