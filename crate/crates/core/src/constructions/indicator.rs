//! Constructions `F = a + phi_U(h_1, ..., h_k)` with `phi_U` the indicator
//! of a linear subspace `U` of `F_2^k`, and sums of plateaued functions
//! whose supports form a direct sum.

use super::composite::{compose, CompositeSpec};
use super::{quadruple_dual_sum, require_same_vars, Verify};
use crate::class::{classify, ClassTag};
use crate::dual::bent_dual;
use crate::error::{Error, Result};
use crate::function::{dot, BooleanFunction, VectorialFunction};
use crate::synth::{is_affine_subspace, rref};
use crate::walsh::wht;

/// Reduced basis of `{w : w.b = 0 for every b in basis}` inside `F_2^k`.
pub fn orthogonal_complement(k: usize, basis: &[usize]) -> Vec<usize> {
    rref((0..1usize << k).filter(|&w| basis.iter().all(|&b| !dot(w, b))))
}

fn span(basis: &[usize]) -> Vec<usize> {
    let mut out = vec![0];
    for &b in basis {
        let more: Vec<usize> = out.iter().map(|&x| x ^ b).collect();
        out.extend(more);
    }
    out
}

/// `phi_U(x) = prod_i (lambda_i . x + 1)` over a basis of `U^perp`.
pub fn indicator_function(k: usize, u_basis: &[usize]) -> Result<BooleanFunction> {
    let perp = orthogonal_complement(k, u_basis);
    let mut phi = BooleanFunction::one(k)?;
    for lambda in perp {
        phi = phi & !BooleanFunction::linear(k, lambda)?;
    }
    Ok(phi)
}

#[derive(Clone, Debug)]
pub struct IndicatorSpec {
    a: BooleanFunction,
    coords: VectorialFunction,
    u_basis: Vec<usize>,
}

impl IndicatorSpec {
    pub fn new(a: BooleanFunction, coords: VectorialFunction, u_basis: Vec<usize>) -> Result<Self> {
        if a.num_vars() != coords.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: coords.num_vars(),
                found: a.num_vars(),
            });
        }
        let k = coords.num_outputs();
        if u_basis.iter().any(|&b| b >> k != 0) {
            return Err(Error::InvalidArgument(format!("basis vectors must fit in {k} bits")));
        }
        if rref(u_basis.iter().copied()).len() != u_basis.len() {
            return Err(Error::InvalidArgument("the basis of U is not independent".into()));
        }
        Ok(Self { a, coords, u_basis })
    }

    pub fn a(&self) -> &BooleanFunction {
        &self.a
    }

    pub fn coords(&self) -> &VectorialFunction {
        &self.coords
    }

    pub fn k(&self) -> usize {
        self.coords.num_outputs()
    }

    /// `dim U`.
    pub fn tau(&self) -> usize {
        self.u_basis.len()
    }

    pub fn u_basis(&self) -> &[usize] {
        &self.u_basis
    }

    /// Every element of `U^perp`, starting with zero.
    pub fn perp_elements(&self) -> Vec<usize> {
        span(&orthogonal_complement(self.k(), &self.u_basis))
    }

    /// `a + w.h`.
    fn shifted(&self, w: usize) -> BooleanFunction {
        &self.a ^ &self.coords.component(w).expect("w fits k bits")
    }
}

/// The form `phi_U(x_1, ..., x_k) + x_{k+1}` applied to `(h, a)`.
pub fn indicator_construct(spec: &IndicatorSpec) -> Result<BooleanFunction> {
    let k = spec.k();
    let phi = indicator_function(k, &spec.u_basis)?;
    let form = BooleanFunction::from_fn(k + 1, |x| phi.eval(x >> 1) ^ (x & 1 == 1))?;
    let mut coords = spec.coords.coords().to_vec();
    coords.push(spec.a.clone());
    Ok(compose(&CompositeSpec::from_coords(form, coords)?))
}

/// `2^k W_F(v) = 2^k W_a(v) - 2 #U sum_{w in U^perp} W_{a + w.h}(v)` at every `v`.
pub fn indicator_wht_identity_check(spec: &IndicatorSpec) -> Result<bool> {
    let k = spec.k();
    let wf = wht(&indicator_construct(spec)?);
    let wa = wht(&spec.a);
    let mut sum = vec![0i64; spec.a.len()];
    for w in spec.perp_elements() {
        for (acc, &c) in sum.iter_mut().zip(wht(&spec.shifted(w)).coeffs()) {
            *acc += c as i64;
        }
    }
    let size_u = 1i64 << spec.tau();
    Ok((0..spec.a.len()).all(|v| (wf.get(v) as i64) << k == ((wa.get(v) as i64) << k) - 2 * size_u * sum[v]))
}

/// First `v` at which `2^{k - tau}` does not divide
/// `sum_{w in U^perp} (-1)^{(a + w.h)*(v)}`. All the shifted functions
/// must be bent.
pub fn divisibility_witness(spec: &IndicatorSpec) -> Result<Option<usize>> {
    let perp = spec.perp_elements();
    let mut sum = vec![0i64; spec.a.len()];
    for &w in &perp {
        let d = bent_dual(&spec.shifted(w))
            .map_err(|_| Error::PreconditionFailed(format!("a + w.h is not bent for w = {w}")))?;
        for (v, acc) in sum.iter_mut().enumerate() {
            *acc += if d.eval(v) { -1 } else { 1 };
        }
    }
    let modulus = perp.len() as i64;
    Ok(sum.iter().position(|s| s % modulus != 0))
}

pub fn divisibility_check(spec: &IndicatorSpec) -> Result<bool> {
    Ok(divisibility_witness(spec)?.is_none())
}

/// `f1 + (l + 1)(f1 + f2 + 1)(f1 + f3 + 1)` with `l(x) = m.x`.
///
/// Verification checks that the four duals sum to zero and, since that
/// alone does not make the output bent for every `m`, also the
/// divisibility condition of the indicator form.
pub fn generic_method_a(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
    m: usize,
    verify: Verify,
) -> Result<BooleanFunction> {
    let n = require_same_vars(&[f1, f2, f3])?;
    let ell = BooleanFunction::linear(n, m)?;
    if verify.enabled(n) {
        let sum = quadruple_dual_sum(f1, f2, f3)?;
        if sum.weight() != 0 {
            return Err(Error::PreconditionFailed(
                "the four duals do not sum to the constant 0".into(),
            ));
        }
        let coords = VectorialFunction::new(vec![ell.clone(), f1 ^ f2, f1 ^ f3])?;
        let spec = IndicatorSpec::new(f1.clone(), coords, vec![])?;
        if let Some(v) = divisibility_witness(&spec)? {
            return Err(Error::PreconditionFailed(format!(
                "8 does not divide the dual sign sum at v = {v}"
            )));
        }
    }
    Ok(f1 ^ (!ell & !(f1 ^ f2) & !(f1 ^ f3)))
}

/// `a + phi_U(h)` with `dim U = k - 2`, where the four functions
/// `a + w.h` (`w` in `U^perp`) are `z`-plateaued with pairwise disjoint
/// supports. Returns the function with its expected class.
pub fn disjoint_spectra_construct(spec: &IndicatorSpec, z: usize) -> Result<(BooleanFunction, ClassTag)> {
    let k = spec.k();
    if k < 2 || spec.tau() + 2 != k {
        return Err(Error::InvalidArgument(format!(
            "U must have dimension k - 2 = {}",
            k.saturating_sub(2)
        )));
    }
    if z < 2 {
        return Err(Error::InvalidArgument(
            "the amplitude exponent z must be at least 2".into(),
        ));
    }
    let n = spec.a.num_vars();
    let perp = spec.perp_elements();
    let mut supports = Vec::with_capacity(perp.len());
    for &w in &perp {
        let g = spec.shifted(w);
        if classify(&g).tag != (ClassTag::Plateaued { s: z }) {
            return Err(Error::PreconditionFailed(format!(
                "a + w.h is not {z}-plateaued for w = {w}"
            )));
        }
        supports.push(wht(&g));
    }
    for i in 0..perp.len() {
        for j in i + 1..perp.len() {
            let overlap = supports[i]
                .coeffs()
                .iter()
                .zip(supports[j].coeffs())
                .any(|(&x, &y)| x != 0 && y != 0);
            if overlap {
                return Err(Error::PreconditionFailed(format!(
                    "supports of a + w.h overlap for w = {} and w = {}",
                    perp[i], perp[j]
                )));
            }
        }
    }
    let tag = if z == 2 && n.is_multiple_of(2) {
        ClassTag::Bent
    } else {
        ClassTag::Plateaued { s: z - 2 }
    };
    Ok((indicator_construct(spec)?, tag))
}

/// `d_1 + ... + d_r` for plateaued `d_i` with linear supports forming a
/// direct sum. Returns the sum and its plateau exponent `t`.
pub fn direct_sum_supports(ds: &[BooleanFunction]) -> Result<(BooleanFunction, usize)> {
    let first = ds
        .first()
        .ok_or_else(|| Error::InvalidArgument("nothing to sum".into()))?;
    let n = require_same_vars(&ds.iter().collect::<Vec<_>>())?;
    let mut bases = Vec::with_capacity(ds.len());
    for (i, d) in ds.iter().enumerate() {
        match classify(d).tag {
            ClassTag::Bent | ClassTag::Plateaued { .. } => {}
            _ => return Err(Error::NotPlateauedOrBent),
        }
        match is_affine_subspace(&wht(d).support()) {
            Some((0, basis)) => bases.push(basis),
            _ => return Err(Error::SupportsNotLinear(i)),
        }
    }
    let total_dim: usize = bases.iter().map(Vec::len).sum();
    if total_dim > n {
        return Err(Error::NegativeT);
    }
    if rref(bases.iter().flatten().copied()).len() != total_dim {
        return Err(Error::NotDirectSum);
    }
    let sum = ds[1..].iter().fold(first.clone(), |acc, d| acc ^ d);
    Ok((sum, n - total_dim))
}
