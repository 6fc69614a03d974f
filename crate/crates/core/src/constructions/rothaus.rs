//! Rothaus-type constructions: the outer form's support splits as
//! `Delta wr F_2^m`, or the outer form is bent and absorbs fresh variables.

use std::collections::BTreeMap;

use super::{quadruple_dual_sum, require_bent, require_same_vars, Verify};
use crate::class::{classify, ClassTag, SpectrumClass};
use crate::dual::bent_dual;
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, DisjointSpace, VectorialFunction};
use crate::walsh::wht;

fn require_bent_triple(a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction) -> Result<()> {
    require_bent("a", a)?;
    require_bent("b", b)?;
    require_bent("c", c)?;
    require_bent("a+b+c", &(a ^ b ^ c))
}

/// `ab + ac + bc + (a + b)y2 + (a + c)y1 + y1y2` on `k + 2` variables.
pub fn rothaus(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
    verify: Verify,
) -> Result<BooleanFunction> {
    let k = require_same_vars(&[a, b, c])?;
    if verify.enabled(k + 2) {
        require_bent_triple(a, b, c)?;
    }
    let sp = DisjointSpace::new(&[k, 2])?;
    let (a, b, c) = (sp.lift(0, a)?, sp.lift(0, b)?, sp.lift(0, c)?);
    let (y1, y2) = (sp.var(1, 1), sp.var(1, 2));
    Ok((&a & &b) ^ (&a & &c) ^ (&b & &c) ^ ((&a ^ &b) & &y2) ^ ((&a ^ &c) & &y1) ^ (y1 & y2))
}

/// `b(y1 + y2) + a(1 + y1 + y3) + (c + y1)(y2 + y3) + (y1 + y2)y4`.
pub fn generalized_rothaus_a(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
    verify: Verify,
) -> Result<BooleanFunction> {
    let r = require_same_vars(&[a, b, c])?;
    if verify.enabled(r + 4) {
        require_bent_triple(a, b, c)?;
    }
    let sp = DisjointSpace::new(&[r, 4])?;
    let (a, b, c) = (sp.lift(0, a)?, sp.lift(0, b)?, sp.lift(0, c)?);
    let y: Vec<_> = (1..=4).map(|j| sp.var(1, j)).collect();
    Ok((&b & &(&y[0] ^ &y[1]))
        ^ (&a & &(sp.one() ^ &y[0] ^ &y[2]))
        ^ ((&c ^ &y[0]) & (&y[1] ^ &y[2]))
        ^ ((&y[0] ^ &y[1]) & &y[3]))
}

/// `b + (a + b)y1y2 + y1y3 + y2y4`.
pub fn generalized_rothaus_b(a: &BooleanFunction, b: &BooleanFunction, verify: Verify) -> Result<BooleanFunction> {
    let r = require_same_vars(&[a, b])?;
    if verify.enabled(r + 4) {
        require_bent("a", a)?;
        require_bent("b", b)?;
    }
    let sp = DisjointSpace::new(&[r, 4])?;
    let (a, b) = (sp.lift(0, a)?, sp.lift(0, b)?);
    let y: Vec<_> = (1..=4).map(|j| sp.var(1, j)).collect();
    Ok(&b ^ ((&a ^ &b) & &y[0] & &y[1]) ^ (&y[0] & &y[2]) ^ (&y[1] & &y[3]))
}

/// What [`split_support_construct`] should expect of the components
/// `delta . h` for `delta` in `Delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// All bent; the result is bent and its dual is returned.
    Bent,
    /// All `c`-plateaued; the result is `c`-plateaued.
    Plateaued { c: usize },
    /// No expectation; only the classification is reported.
    Mixed,
}

#[derive(Clone, Debug)]
pub struct SplitOutcome {
    pub function: BooleanFunction,
    pub dual: Option<BooleanFunction>,
    /// Computed when verification is enabled.
    pub class: Option<SpectrumClass>,
}

/// `F(x, y) = f(h_1(x), ..., h_s(x), y)` for an `s`-plateaued form `f` on
/// `k = s + m` variables whose support is `Delta wr F_2^m`, each
/// `theta` in `F_2^m` paired with exactly one nonzero `delta`.
pub fn split_support_construct(
    form: &BooleanFunction,
    h: &VectorialFunction,
    mode: SplitMode,
    verify: Verify,
) -> Result<SplitOutcome> {
    let k = form.num_vars();
    let spectrum = wht(form);
    let s = match classify(form).tag {
        ClassTag::Plateaued { s } => s,
        _ => {
            return Err(Error::PreconditionFailed(
                "the outer form must be plateaued and not bent".into(),
            ))
        }
    };
    if h.num_outputs() != s {
        return Err(Error::ArityMismatch {
            expected: s,
            found: h.num_outputs(),
        });
    }
    let m = k - s;
    let mask = (1usize << m) - 1;
    let mut theta_delta = vec![None; 1 << m];
    for w in spectrum.support() {
        let (delta, theta) = (w >> m, w & mask);
        if delta == 0 {
            return Err(Error::SupportNotSplittable(format!(
                "the support contains a point with zero leading {s} bits"
            )));
        }
        if theta_delta[theta].replace(delta).is_some() {
            return Err(Error::SupportNotSplittable(format!(
                "trailing part {theta} appears more than once"
            )));
        }
    }
    let theta_delta: Vec<usize> = theta_delta
        .into_iter()
        .map(|d| d.expect("2^m distinct trailing parts"))
        .collect();

    let r = h.num_vars();
    let function = BooleanFunction::from_fn(r + m, |z| form.eval((h.eval(z >> m) << m) | (z & mask)))?;

    let deltas: Vec<usize> = {
        let mut d = theta_delta.clone();
        d.sort_unstable();
        d.dedup();
        d
    };
    let dual = match mode {
        SplitMode::Bent => {
            let mut duals = BTreeMap::new();
            for &delta in &deltas {
                let component = h.component(delta)?;
                let d = bent_dual(&component).map_err(|_| Error::ModeConditionFailed { delta })?;
                duals.insert(delta, d);
            }
            let dual = BooleanFunction::from_fn(r + m, |z| {
                let theta = z & mask;
                let delta = theta_delta[theta];
                let sign = spectrum.get((delta << m) | theta) < 0;
                sign ^ duals[&delta].eval(z >> m)
            })?;
            Some(dual)
        }
        SplitMode::Plateaued { c } => {
            for &delta in &deltas {
                let tag = classify(&h.component(delta)?).tag;
                if tag != (ClassTag::Plateaued { s: c }) {
                    return Err(Error::ModeConditionFailed { delta });
                }
            }
            None
        }
        SplitMode::Mixed => None,
    };
    let class = verify.enabled(r + m).then(|| classify(&function));
    Ok(SplitOutcome { function, dual, class })
}

/// `F(x, y) = a(x) + d(h_1(x), ..., h_t(x), y)` with `d` bent on `k`
/// variables and `y` the remaining `k - t` inputs of `d`.
pub fn bent_outer_form_construct(
    d: &BooleanFunction,
    a: &BooleanFunction,
    h: &[BooleanFunction],
    verify: Verify,
) -> Result<BooleanFunction> {
    let k = d.num_vars();
    let t = h.len();
    if t > k {
        return Err(Error::ArityMismatch { expected: k, found: t });
    }
    let r = a.num_vars();
    for hi in h {
        if hi.num_vars() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: hi.num_vars(),
            });
        }
    }
    let m = k - t;
    let mask = (1usize << m) - 1;
    let coords = if t > 0 {
        Some(VectorialFunction::new(h.to_vec())?)
    } else {
        None
    };
    let eval_h = |x: usize| coords.as_ref().map_or(0, |c| c.eval(x));
    if verify.enabled(r + m) {
        require_bent("d", d)?;
        check_bent_distance(d, a, coords.as_ref(), m)?;
    }
    BooleanFunction::from_fn(r + m, |z| a.eval(z >> m) ^ d.eval((eval_h(z >> m) << m) | (z & mask)))
}

fn check_bent_distance(
    d: &BooleanFunction,
    a: &BooleanFunction,
    coords: Option<&VectorialFunction>,
    m: usize,
) -> Result<()> {
    let Some(coords) = coords else {
        return require_bent("a", a);
    };
    let t = coords.num_outputs();
    let r = a.num_vars();
    let d_dual = bent_dual(d)?;
    let mut g_duals = Vec::with_capacity(1 << t);
    for delta in 0..1usize << t {
        let g = a ^ &coords.component(delta)?;
        let gd = bent_dual(&g)
            .map_err(|_| Error::PreconditionFailed(format!("a + delta.h is not bent for delta = {delta}")))?;
        g_duals.push(gd);
    }
    for v in 0..1usize << m {
        let left = BooleanFunction::from_fn(t, |delta| d_dual.eval((delta << m) | v))?;
        for u in 0..1usize << r {
            let right = BooleanFunction::from_fn(t, |delta| g_duals[delta].eval(u))?;
            if !left.bent_distance(&right)? {
                return Err(Error::PreconditionFailed(format!(
                    "bent-distance condition fails at v = {v}, u = {u}"
                )));
            }
        }
    }
    Ok(())
}

/// `f1 + y1(f1 + f3) + y2(f1 + f2)`; the `(y1, y2)` slices are
/// `f1, f2, f3, f1 + f2 + f3` in order `00, 01, 10, 11`.
pub fn bent_concatenation(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
    verify: Verify,
) -> Result<BooleanFunction> {
    let r = require_same_vars(&[f1, f2, f3])?;
    if verify.enabled(r + 2) {
        let sum = quadruple_dual_sum(f1, f2, f3)?;
        if sum.weight() != sum.len() {
            return Err(Error::PreconditionFailed(
                "the four duals do not sum to the constant 1".into(),
            ));
        }
    }
    let sp = DisjointSpace::new(&[r, 2])?;
    let (f1, f2, f3) = (sp.lift(0, f1)?, sp.lift(0, f2)?, sp.lift(0, f3)?);
    Ok(&f1 ^ (sp.var(1, 1) & (&f1 ^ &f3)) ^ (sp.var(1, 2) & (&f1 ^ &f2)))
}
