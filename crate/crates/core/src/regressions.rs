//! Worked-example regressions. Each entry recomputes a published value and
//! renders it as a short string compared verbatim against `expected`.

use serde::Serialize;

use crate::analysis::{
    disjoint_spectra, dual_linearity_check, outside_mm_certificate, profile_distance_check, verify_bent, MmVerdict,
};
use crate::anf::{algebraic_degree, anf_of, parse_function};
use crate::class::classify;
use crate::constructions::{
    bent_concatenation, bent_outer_form_construct, composite_wht_identity_check, dualcor_family, forms,
    gen_indirect_sum_a, gen_indirect_sum_b, gen_indirect_sum_c, gen_indirect_sum_k, generalized_rothaus_a,
    generalized_rothaus_b, generic_method_a, indicator_construct, indirect_sum, mesnager_g, rothaus,
    split_support_construct, CompositeSpec, DisjointBundle, IndicatorSpec, SplitMode, Verify,
};
use crate::dual::bent_dual;
use crate::error::{Error, Result};
use crate::function::{dot, point_to_string, BooleanFunction, DisjointSpace, VectorialFunction};
use crate::synth::{
    build_delta_multiset, complement_pair, hadamard_row, interleave, is_affine_subspace, lexicographic_recursion_check,
    synthesize_from_rows, OrderedSupport, RowSet, SynthesisSpec,
};
use crate::walsh::walsh_support;

pub struct Regression {
    pub id: &'static str,
    pub claim: &'static str,
    pub expected: String,
    pub check: fn() -> Result<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: String,
    pub expected: String,
    pub got: String,
    pub passed: bool,
}

/// Run `table`, or only the entry named `only`.
pub fn run(table: &[Regression], only: Option<&str>) -> Result<Vec<Outcome>> {
    let selected: Vec<&Regression> = table.iter().filter(|r| only.is_none_or(|id| r.id == id)).collect();
    if selected.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no regression named {:?}",
            only.unwrap_or("")
        )));
    }
    Ok(selected
        .into_iter()
        .map(|r| {
            let got = (r.check)().unwrap_or_else(|e| format!("error: {e}"));
            Outcome {
                id: r.id.to_string(),
                passed: got == r.expected,
                expected: r.expected.clone(),
                got,
            }
        })
        .collect())
}

fn f(text: &str, n: usize) -> Result<BooleanFunction> {
    parse_function(text, Some(n))
}

fn bits(text: &str) -> usize {
    usize::from_str_radix(text, 2).expect("literal bit string")
}

fn row_list(rows: &RowSet) -> String {
    rows.rows()
        .iter()
        .map(|&r| point_to_string(r, rows.width()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn points(list: &[usize], width: usize) -> String {
    list.iter()
        .map(|&p| point_to_string(p, width))
        .collect::<Vec<_>>()
        .join(" ")
}

fn anf_and_class(g: &BooleanFunction) -> String {
    format!("{}; {}", anf_of(g), classify(g).tag)
}

fn yes(b: bool) -> String {
    b.to_string()
}

/// `x . (y + q) + g(y)` on `F_2^half x F_2^half`.
fn mm_shift(half: usize, q: usize, g: &BooleanFunction) -> Result<BooleanFunction> {
    let mask = (1 << half) - 1;
    BooleanFunction::from_fn(2 * half, |z| dot(z >> half, (z & mask) ^ q) ^ g.eval(z & mask))
}

/// `x . pi(y) + g(y)` on `F_2^half x F_2^half`.
fn mm(pi: &[usize], g: &BooleanFunction) -> Result<BooleanFunction> {
    let half = g.num_vars();
    let mask = (1 << half) - 1;
    BooleanFunction::from_fn(2 * half, |z| dot(z >> half, pi[z & mask]) ^ g.eval(z & mask))
}

fn two_var_bents() -> Result<[BooleanFunction; 4]> {
    Ok([
        f("x1*x2", 2)?,
        f("x1*x2 + x1", 2)?,
        f("x1*x2 + x2", 2)?,
        f("x1*x2 + x1 + x2 + 1", 2)?,
    ])
}

fn interleaved_support() -> Result<RowSet> {
    interleave(&[RowSet::full_space(4), RowSet::column(&f("x3*x4 + 1", 4)?)])
}

fn four_row_synthesis() -> Result<String> {
    let rows = RowSet::new(5, vec![bits("00110"), bits("01101"), bits("10000"), bits("11011")])?;
    let g = synthesize_from_rows(&rows, &BooleanFunction::from_hex("1")?)?;
    Ok(anf_and_class(&g))
}

fn interleaved_synthesis() -> Result<String> {
    let rows = interleaved_support()?;
    let g = synthesize_from_rows(&rows, &f("x1*x3 + x2*x4", 4)?)?;
    let affine = is_affine_subspace(&walsh_support(&g)).is_some();
    Ok(format!("{}; affine support: {affine}", anf_and_class(&g)))
}

fn semi_bent_from_text() -> Result<String> {
    Ok(classify(&parse_function("x1*x2*x5 + x1*x3 + x2*x4 + x5", None)?)
        .tag
        .to_string())
}

fn anchored_ordering() -> Result<String> {
    let s = OrderedSupport::order(3, &[0b010, 0b011, 0b100, 0b101], Some(0b011))?;
    Ok(format!(
        "omega {}; E {}",
        points(s.omega_list(), 3),
        points(s.e_list(), 3)
    ))
}

fn hadamard_two() -> Result<String> {
    let rows = [hadamard_row(1, 0)?, hadamard_row(1, 1)?];
    Ok(rows.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>().join(" "))
}

fn anchored_recursion() -> Result<String> {
    let s = OrderedSupport::order(3, &[0b010, 0b011, 0b100, 0b101], Some(0b011))?;
    Ok(yes(lexicographic_recursion_check(&s)))
}

fn rothaus_form_support() -> Result<String> {
    let g = forms::rothaus_form().synthesize()?;
    let amplitudes: std::collections::BTreeSet<i32> = classify(&g).distribution.keys().copied().collect();
    Ok(format!(
        "{}; values {amplitudes:?}; support {}",
        classify(&g).tag,
        points(&walsh_support(&g), 5)
    ))
}

fn rothaus_profile_rows() -> Result<String> {
    let form = forms::rothaus_form();
    let spec = SynthesisSpec::new(OrderedSupport::from_rows(&form.rows)?, form.dual)?;
    let rows: Vec<Vec<i32>> = (0..4).map(|r| hadamard_row(2, r)).collect::<Result<_>>()?;
    let profile = spec.profile();
    let all = (0..profile.len()).all(|u| {
        let e = profile.entry_signs(u);
        let neg: Vec<i32> = e.iter().map(|c| -c).collect();
        rows.iter().any(|r| *r == e || *r == neg)
    });
    Ok(yes(all))
}

fn interleaved_profile_contains_column() -> Result<String> {
    let rows = interleaved_support()?;
    let support = OrderedSupport::from_rows(&rows)?;
    let spec = SynthesisSpec::new(support, f("x1*x3 + x2*x4", 4)?)?;
    let profile = spec.profile();
    let g = f("x3*x4 + 1", 4)?;
    let found = (0..profile.len()).any(|u| profile.entry(u).is_ok_and(|e| e == g));
    Ok(yes(found))
}

fn interleaved_dual_distance() -> Result<String> {
    f("x1*x3 + x2*x4", 4)?.bent_distance(&f("x3*x4 + 1", 4)?).map(yes)
}

fn interleaved_dual_profile() -> Result<String> {
    let support = OrderedSupport::from_rows(&interleaved_support()?)?;
    let dual = f("x1*x3 + x2*x4", 4)?;
    let spec = SynthesisSpec::new(support, dual.clone())?;
    profile_distance_check(&dual, &spec.profile()).map(yes)
}

fn delta_rows() -> Result<String> {
    let delta = build_delta_multiset(3, [0, 0b110, 0b101, 0b011], &[0, 0b101, 0b101, 0], 0b100)?;
    Ok(format!("{} rows: {}", delta.height(), row_list(&delta)))
}

fn complement_linear() -> Result<String> {
    Ok(row_list(&complement_pair(&f("x1", 2)?)))
}

fn complement_quadratic() -> Result<String> {
    Ok(row_list(&complement_pair(&f("x3*x4", 4)?)))
}

fn three_block_interleave() -> Result<String> {
    let blocks = [
        complement_pair(&f("x1", 2)?),
        complement_pair(&f("x2", 2)?),
        complement_pair(&f("x1 + 1", 2)?),
    ];
    let rows = interleave(&blocks)?;
    Ok(format!(
        "{}; affine: {}",
        row_list(&rows),
        is_affine_subspace(rows.rows()).is_some()
    ))
}

fn four_block_interleave() -> Result<String> {
    let ells: Vec<_> = (1..=4)
        .map(|j| BooleanFunction::variable(4, j))
        .collect::<Result<_>>()?;
    let rows = forms::indirect_sum_rows(&ells)?;
    let dim = is_affine_subspace(rows.rows())
        .map(|(_, basis)| basis.len().to_string())
        .unwrap_or("none".into());
    Ok(format!(
        "{} rows of width {}; affine dimension {dim}",
        rows.height(),
        rows.width()
    ))
}

fn rothaus_triple() -> Result<[BooleanFunction; 3]> {
    let [a, b, c, _] = two_var_bents()?;
    Ok([a, b, c])
}

fn rothaus_composite() -> Result<String> {
    let [a, b, c] = rothaus_triple()?;
    let sp = DisjointSpace::new(&[2, 2])?;
    let coords = vec![
        sp.lift(0, &a)?,
        sp.lift(0, &b)?,
        sp.lift(0, &c)?,
        sp.var(1, 1),
        sp.var(1, 2),
    ];
    let composed = forms::rothaus_form().apply(coords)?;
    let direct = rothaus(&a, &b, &c, Verify::Always)?;
    Ok(format!(
        "{}; equals formula: {}",
        classify(&direct).tag,
        composed == direct
    ))
}

fn rothaus_identity() -> Result<String> {
    let [a, b, c] = rothaus_triple()?;
    let sp = DisjointSpace::new(&[2, 2])?;
    let coords = vec![
        sp.lift(0, &a)?,
        sp.lift(0, &b)?,
        sp.lift(0, &c)?,
        sp.var(1, 1),
        sp.var(1, 2),
    ];
    let spec = CompositeSpec::from_coords(forms::rothaus_form().synthesize()?, coords)?;
    for u in 0..16 {
        if !composite_wht_identity_check(&spec, u)? {
            return Ok(format!("fails at {u}"));
        }
    }
    Ok(yes(true))
}

fn rothaus_split() -> Result<String> {
    let [a, b, c] = rothaus_triple()?;
    let form = forms::rothaus_form().synthesize()?;
    let h = VectorialFunction::new(vec![a.clone(), b.clone(), c.clone()])?;
    let out = split_support_construct(&form, &h, SplitMode::Bent, Verify::Always)?;
    let tag = out.class.map(|c| c.tag.to_string()).unwrap_or_default();
    Ok(format!(
        "{tag}; equals formula: {}",
        out.function == rothaus(&a, &b, &c, Verify::Always)?
    ))
}

fn form_anf(form: forms::OuterForm) -> Result<String> {
    Ok(anf_and_class(&form.synthesize()?))
}

fn outside_mm() -> Result<String> {
    let y = |t: &str| f(t, 2);
    let a = mm_shift(2, 0b00, &BooleanFunction::zero(2)?)?;
    let b = mm_shift(2, 0b01, &y("x1*x2")?)?;
    let c = mm_shift(2, 0b10, &y("x1")?)?;
    let g = generalized_rothaus_a(&a, &b, &c, Verify::Always)?;
    let cert = outside_mm_certificate(&g)?;
    let witness = match cert.witness {
        Some((p, q)) if p != 0 && q != 0 && cert.verdict == MmVerdict::OutsideForThisSplit => "nonzero witness",
        _ => "no witness",
    };
    Ok(format!(
        "{}; degree {}; {}, {witness}",
        classify(&g).tag,
        algebraic_degree(&g),
        cert.verdict
    ))
}

fn gen_rothaus_b_bent() -> Result<String> {
    let [a, b, ..] = two_var_bents()?;
    let g = generalized_rothaus_b(&b, &a, Verify::Always)?;
    Ok(format!("{} on {} variables", classify(&g).tag, g.num_vars()))
}

fn gen_rothaus_b_slice() -> Result<String> {
    let a = f("x1*x2 + x1", 2)?;
    let b = f("x1*x2", 2)?;
    // Keep y1, y2 and set y3 = y4 = 0.
    let slice = generalized_rothaus_b(&a, &b, Verify::Always)?.fix_trailing(2, 0)?;
    Ok(format!("{}; bent: {}", anf_of(&slice), verify_bent(&slice)))
}

fn concatenation_condition() -> Result<String> {
    // Dual sum of (f1, f2, f3, f1 + f2 + f3) is the constant 1 here.
    let f1 = f("x1*x2 + x3*x4", 4)?;
    let f2 = f("x1*x2 + x3*x4 + x1", 4)?;
    let f3 = f("x1*x2 + x3*x4 + x2", 4)?;
    let d = f("x1*x3 + x2*x4", 4)?;
    let via_form = bent_outer_form_construct(&d, &f1, &[&f1 ^ &f3, &f1 ^ &f2], Verify::Always)?;
    let direct = bent_concatenation(&f1, &f2, &f3, Verify::Always)?;
    Ok(format!(
        "{}; equals concatenation: {}",
        classify(&via_form).tag,
        via_form == direct
    ))
}

fn indirect_bent() -> Result<String> {
    let [a, b, c, d] = two_var_bents()?;
    let w = indirect_sum(&a, &b, &c, &d, Verify::Always)?;
    Ok(format!(
        "{}; dual matches: {}",
        classify(&w.function).tag,
        bent_dual(&w.function)? == w.dual
    ))
}

fn four_bundle() -> Result<DisjointBundle> {
    let [a, b, c, d] = two_var_bents()?;
    DisjointBundle::new(vec![
        (a.clone(), b.clone()),
        (c.clone(), d.clone()),
        (b.clone(), c.clone()),
        (d, a),
    ])
}

fn gis_k_vs_a() -> Result<String> {
    let bundle = four_bundle()?;
    let ells: Vec<_> = (1..=4)
        .map(|j| BooleanFunction::variable(4, j))
        .collect::<Result<_>>()?;
    let k = gen_indirect_sum_k(&bundle, &ells, &f("x1*x3 + x2*x4 + x3*x4", 4)?, Verify::Always)?;
    let a = gen_indirect_sum_a(&bundle, Verify::Always)?;
    Ok(format!(
        "function: {}; dual: {}",
        k.function == a.function,
        k.dual == a.dual
    ))
}

fn gis_a_zero_blocks() -> Result<String> {
    // Zero third and fourth blocks are not bent, so apply the form directly.
    let [a, b, c, d] = two_var_bents()?;
    let sp = DisjointSpace::new(&[2, 2, 2, 2])?;
    let zero = BooleanFunction::zero(8)?;
    let coords = vec![
        sp.lift(0, &a)?,
        sp.lift(0, &b)?,
        sp.lift(1, &c)?,
        sp.lift(1, &d)?,
        zero.clone(),
        zero.clone(),
        zero.clone(),
        zero,
    ];
    let g = forms::gis_a_form().apply(coords)?;
    // f2 + g2 + (f1 + f2)(g1 + g2): the classical sum with each pair swapped.
    let classical = indirect_sum(&b, &a, &d, &c, Verify::Always)?.function.lift(0, 8)?;
    Ok(yes(g == classical))
}

fn gis_a_direct_sum_shape() -> Result<String> {
    let [a, b, c, d] = two_var_bents()?;
    let bundle = DisjointBundle::new(vec![
        (a.clone(), a.clone()),
        (b, c),
        (d.clone(), a.clone()),
        (b_of(&d)?, d),
    ])?;
    let g = gen_indirect_sum_a(&bundle, Verify::Always)?.function;
    // With f1 = f2 the x-part separates: F + f1(x) must not depend on x.
    let rest = &g ^ a.lift(0, 8)?;
    let separates = (0..rest.len()).all(|z| rest.eval(z) == rest.eval(z & 0x3f));
    Ok(yes(separates))
}

fn b_of(d: &BooleanFunction) -> Result<BooleanFunction> {
    Ok(d ^ f("x1", 2)?)
}

fn gis_b_restrictions() -> Result<String> {
    let [f1, f2, g1, g2] = two_var_bents()?;
    let out = gen_indirect_sum_b(&f1, &f2, &g1, &g2, Verify::Always)?;
    let classical = indirect_sum(&f2, &f1, &g2, &g1, Verify::Always)?.function;
    let sp = DisjointSpace::new(&[2, 2])?;
    let shifted = &classical ^ (sp.lift(1, &g1)? ^ sp.lift(1, &g2)?);
    Ok(format!(
        "z=00 classical: {}; z=10 shifted: {}",
        out.fix_trailing(2, 0b00)? == classical,
        out.fix_trailing(2, 0b10)? == shifted
    ))
}

fn gis_c_restrictions() -> Result<String> {
    let [f1, f2, g1, g2] = two_var_bents()?;
    let out = gen_indirect_sum_c(&f1, &f2, &g1, &g2, Verify::Always)?;
    let classical = indirect_sum(&f2, &f1, &g2, &g1, Verify::Always)?.function;
    let sp = DisjointSpace::new(&[2, 2, 3])?;
    let (z2, z4) = (sp.var(2, 1), sp.var(2, 3));
    let direct = sp.lift(0, &f2)? ^ sp.lift(1, &g2)? ^ (&z2 & &z4);
    // z1 = 0 fixes the leading fresh variable: move it last and drop it.
    let z1_zero = drop_bit(&out, 3, 8)?;
    Ok(format!(
        "z=1000 classical: {}; z1=0 direct: {}",
        out.fix_trailing(4, 0b1000)? == classical,
        z1_zero == direct
    ))
}

/// Restrict by setting bit `bit` (counted from the least significant end)
/// to zero and closing the gap.
fn drop_bit(g: &BooleanFunction, bit: usize, n: usize) -> Result<BooleanFunction> {
    let low = (1usize << bit) - 1;
    BooleanFunction::from_fn(n - 1, |x| g.eval(((x & !low) << 1) | (x & low)))
}

fn generic_a_as_indicator() -> Result<String> {
    let f1 = f("x1*x2 + x3*x4", 4)?;
    let f2 = f("x1*x2 + x3*x4 + x1", 4)?;
    let f3 = f("x1*x2 + x3*x4 + x3", 4)?;
    let m = 0b0010;
    let g = generic_method_a(&f1, &f2, &f3, m, Verify::Always)?;
    let coords = VectorialFunction::new(vec![BooleanFunction::linear(4, m)?, &f1 ^ &f2, &f1 ^ &f3])?;
    let spec = IndicatorSpec::new(f1, coords, vec![])?;
    Ok(format!(
        "{}; indicator form: {}",
        classify(&g).tag,
        indicator_construct(&spec)? == g
    ))
}

fn generic_a_zero_m() -> Result<String> {
    let f1 = f("x1*x2 + x3*x4", 4)?;
    let f2 = f("x1*x2 + x3*x4 + x1", 4)?;
    let f3 = f("x1*x2 + x3*x4 + x3", 4)?;
    let g = generic_method_a(&f1, &f2, &f3, 0, Verify::Always)?;
    Ok(yes(g == mesnager_g(&f1, &!f2, &!f3, Verify::Always)?.function))
}

fn mesnager_instance() -> Result<(BooleanFunction, BooleanFunction, BooleanFunction)> {
    Ok((
        f("x1*x2 + x3*x4", 4)?,
        f("x1*x2 + x3*x4 + x1", 4)?,
        f("x1*x2 + x3*x4 + x3", 4)?,
    ))
}

fn mesnager_dual() -> Result<String> {
    let (f1, f2, f3) = mesnager_instance()?;
    let w = mesnager_g(&f1, &f2, &f3, Verify::Always)?;
    let composed = forms::mesnager_form().apply(vec![bent_dual(&f1)?, bent_dual(&f2)?, bent_dual(&f3)?])?;
    Ok(format!(
        "{}; dual as form of duals: {}",
        classify(&w.function).tag,
        bent_dual(&w.function)? == composed
    ))
}

fn mesnager_linearity() -> Result<String> {
    let (f1, f2, f3) = mesnager_instance()?;
    let h = VectorialFunction::new(vec![f1, f2, f3])?;
    dual_linearity_check(&h, &[0b100, 0b010, 0b001, 0b111]).map(yes)
}

const PI: [usize; 4] = [2, 0, 3, 1];
const PHI: [usize; 4] = [0, 2, 3, 1];

fn dualcor_as_mesnager() -> Result<String> {
    let g1 = f("x1*x2 + x2", 2)?;
    let g2 = f("x1 + x2 + x1*x2", 2)?;
    let out = dualcor_family(&PI, &PHI, &g1, &g2, Verify::Always)?;
    let zero = BooleanFunction::zero(2)?;
    let h4 = BooleanFunction::from_fn(4, |z| g2.eval(z & 3))?;
    let (h1, h2, h3) = (mm(&PI, &g1)?, mm(&PI, &zero)?, mm(&PHI, &zero)?);
    let w = mesnager_g(&h1, &(&h2 ^ &h4), &h3, Verify::Always)?;
    Ok(format!(
        "{}; equals majority of (h1, h2+h4, h3): {}",
        classify(&out).tag,
        w.function == out
    ))
}

fn dualcor_lambda_zero() -> Result<String> {
    let g = f("x1*x2 + x2", 2)?;
    let out = dualcor_family(&PI, &PHI, &g, &g, Verify::Always)?;
    Ok(yes(out == mm(&PI, &g)?))
}

fn disjoint_recipe() -> Result<(BooleanFunction, BooleanFunction, usize)> {
    let s1 = RowSet::new(6, vec![0, bits("010000"), bits("100000"), bits("110000")])?;
    let s2 = RowSet::new(6, s1.rows().iter().map(|&r| r ^ bits("001000")).collect())?;
    let dual = f("x1*x2", 2)?;
    Ok((
        synthesize_from_rows(&s1, &dual)?,
        synthesize_from_rows(&s2, &dual)?,
        bits("000100"),
    ))
}

fn disjoint_spectra_output() -> Result<String> {
    let (f1, f2, m) = disjoint_recipe()?;
    let coords = VectorialFunction::new(vec![&f1 ^ &f2, BooleanFunction::linear(6, m)?])?;
    let spec = IndicatorSpec::new(f1.clone(), coords, vec![])?;
    let (g, _) = crate::constructions::disjoint_spectra_construct(&spec, 4)?;
    let ell = BooleanFunction::linear(6, m)?;
    let displayed = &f1 ^ ((&f1 ^ &f2) & !ell);
    Ok(format!(
        "{}; displayed variant: {}",
        classify(&g).tag,
        classify(&displayed).tag
    ))
}

fn disjoint_spectra_pairwise() -> Result<String> {
    let (f1, f2, m) = disjoint_recipe()?;
    let ell = BooleanFunction::linear(6, m)?;
    let four = [f1.clone(), f2.clone(), &f1 ^ &ell, &f2 ^ &ell];
    for i in 0..4 {
        for j in i + 1..4 {
            if !disjoint_spectra(&four[i], &four[j])? {
                return Ok(format!("overlap between {i} and {j}"));
            }
        }
    }
    Ok(yes(true))
}

fn s(text: &str) -> String {
    text.to_string()
}

/// Every worked example, in presentation order.
pub fn table() -> Vec<Regression> {
    vec![
        Regression {
            id: "synth-four-rows",
            claim: "four support rows in F_2^5 with dual signs (1,1,1,-1)",
            expected: s("x3 + x1*x2 + x1*x4 + x1*x5 + x2*x3 + x2*x4 + x3*x4 + x3*x5 + x4*x5; plateaued(s=3)"),
            check: four_row_synthesis,
        },
        Regression {
            id: "synth-interleaved",
            claim: "support F_2^4 wr T_(x3x4+1) with dual (x1,x2).(x3,x4)",
            expected: s("x5 + x1*x3 + x2*x4 + x1*x2*x5; plateaued(s=1); affine support: false"),
            check: interleaved_synthesis,
        },
        Regression {
            id: "eval-semi-bent",
            claim: "ANF text of the interleaved example classifies as semi-bent",
            expected: s("plateaued(s=1)"),
            check: semi_bent_from_text,
        },
        Regression {
            id: "anchor-ordering",
            claim: "support {010,011,100,101} read from anchor 011",
            expected: s("omega 011 010 101 100; E 000 001 110 111"),
            check: anchored_ordering,
        },
        Regression {
            id: "hadamard-order-2",
            claim: "rows of H_2",
            expected: s("[1, 1] [1, -1]"),
            check: hadamard_two,
        },
        Regression {
            id: "anchor-recursion",
            claim: "the anchored E list follows the Sylvester recursion",
            expected: s("true"),
            check: anchored_recursion,
        },
        Regression {
            id: "rothaus-form",
            claim: "the Rothaus outer form is 3-plateaued on the four displayed rows",
            expected: s("plateaued(s=3); values {-16, 0, 16}; support 00101 01010 10000 11111"),
            check: rothaus_form_support,
        },
        Regression {
            id: "rothaus-profile",
            claim: "every profile entry of the Rothaus support is a signed row of H_4",
            expected: s("true"),
            check: rothaus_profile_rows,
        },
        Regression {
            id: "interleaved-profile",
            claim: "the interleaved support's profile contains the sequence of x3x4+1",
            expected: s("true"),
            check: interleaved_profile_contains_column,
        },
        Regression {
            id: "interleaved-distance",
            claim: "(x1,x2).(x3,x4) is at bent distance to x3x4+1",
            expected: s("true"),
            check: interleaved_dual_distance,
        },
        Regression {
            id: "interleaved-dual-profile",
            claim: "the interleaved example's dual is at bent distance to its whole profile",
            expected: s("true"),
            check: interleaved_dual_profile,
        },
        Regression {
            id: "delta-multiset",
            claim: "v + {E, 101+E, 101+E, E} with v = 100",
            expected: s("16 rows: 100 010 001 111 001 111 100 010 001 111 100 010 100 010 001 111"),
            check: delta_rows,
        },
        Regression {
            id: "complement-pair-linear",
            claim: "T_l wr T_(l+1) for l = x1 on two variables",
            expected: s("01 01 10 10"),
            check: complement_linear,
        },
        Regression {
            id: "complement-pair-quadratic",
            claim: "T_q wr T_(q+1) for q = x3x4 on four variables",
            expected: s("01 01 01 10 01 01 01 10 01 01 01 10 01 01 01 10"),
            check: complement_quadratic,
        },
        Regression {
            id: "interleave-three",
            claim: "M_1 wr M_2 wr M_3 for x1, x2, x1+1",
            expected: s("010110 011010 100101 101001; affine: true"),
            check: three_block_interleave,
        },
        Regression {
            id: "interleave-four",
            claim: "M_1 wr ... wr M_4 for x1..x4 is a 16-row affine support in F_2^8",
            expected: s("16 rows of width 8; affine dimension 4"),
            check: four_block_interleave,
        },
        Regression {
            id: "rothaus-composite",
            claim: "the Rothaus form applied to (a, b, c, y1, y2) is the Rothaus function",
            expected: s("bent; equals formula: true"),
            check: rothaus_composite,
        },
        Regression {
            id: "rothaus-wht-identity",
            claim: "composite transform identity for the Rothaus instance at every u",
            expected: s("true"),
            check: rothaus_identity,
        },
        Regression {
            id: "rothaus-split-support",
            claim: "split-support construction on the Rothaus form",
            expected: s("bent; equals formula: true"),
            check: rothaus_split,
        },
        Regression {
            id: "gen-rothaus-a-form",
            claim: "internal 7-variable form of generalized Rothaus A",
            expected: s(
                "x1 + x1*x4 + x1*x6 + x2*x4 + x2*x5 + x3*x5 + x3*x6 + x4*x5 + x4*x6 + x4*x7 + x5*x7; plateaued(s=3)",
            ),
            check: || form_anf(forms::gen_rothaus_a_form()),
        },
        Regression {
            id: "gen-rothaus-a-outside-mm",
            claim: "generalized Rothaus A from shifted MM bents on 8 variables",
            expected: s("bent; degree 3; outside for this split, nonzero witness"),
            check: outside_mm,
        },
        Regression {
            id: "gen-rothaus-b-form",
            claim: "internal 6-variable form of generalized Rothaus B",
            expected: s("x2 + x3*x5 + x4*x6 + x1*x3*x4 + x2*x3*x4; plateaued(s=2)"),
            check: || form_anf(forms::gen_rothaus_b_form()),
        },
        Regression {
            id: "gen-rothaus-b-bent",
            claim: "generalized Rothaus B on two 2-variable bents",
            expected: s("bent on 6 variables"),
            check: gen_rothaus_b_bent,
        },
        Regression {
            id: "gen-rothaus-b-slice",
            claim: "slice y3 = y4 = 0 of generalized Rothaus B is not bent",
            expected: s("x1*x2 + x1*x3*x4; bent: false"),
            check: gen_rothaus_b_slice,
        },
        Regression {
            id: "bent-concatenation",
            claim: "bent concatenation as the degenerate bent-outer-form case",
            expected: s("bent; equals concatenation: true"),
            check: concatenation_condition,
        },
        Regression {
            id: "indirect-sum",
            claim: "classical indirect sum of verified bents, with its dual",
            expected: s("bent; dual matches: true"),
            check: indirect_bent,
        },
        Regression {
            id: "gis-a-form",
            claim: "internal 8-variable form of generalized indirect sum A",
            expected: s(
                "x2 + x4 + x6 + x8 + x1*x3 + x1*x4 + x1*x5 + x1*x6 + x2*x3 + x2*x4 + x2*x5 + x2*x6 + x3*x7 + x3*x8 + x4*x7 + x4*x8; plateaued(s=4)",
            ),
            check: || form_anf(forms::gis_a_form()),
        },
        Regression {
            id: "gis-a-zero-blocks",
            claim: "generalized indirect sum A with zero third and fourth blocks",
            expected: s("true"),
            check: gis_a_zero_blocks,
        },
        Regression {
            id: "gis-a-direct-sum",
            claim: "generalized indirect sum A with f1 = f2 splits off f1",
            expected: s("true"),
            check: gis_a_direct_sum_shape,
        },
        Regression {
            id: "gis-k-matches-a",
            claim: "the k-block method with l_i = x_i reproduces generalized indirect sum A",
            expected: s("function: true; dual: true"),
            check: gis_k_vs_a,
        },
        Regression {
            id: "gis-b-form",
            claim: "internal 6-variable form of generalized indirect sum B",
            expected: s(
                "x2 + x4 + x1*x3 + x1*x4 + x1*x6 + x2*x3 + x2*x4 + x2*x6 + x3*x5 + x4*x5 + x5*x6; plateaued(s=4)",
            ),
            check: || form_anf(forms::gis_b_form()),
        },
        Regression {
            id: "gis-b-restrictions",
            claim: "generalized indirect sum B at z = 00 and z = 10",
            expected: s("z=00 classical: true; z=10 shifted: true"),
            check: gis_b_restrictions,
        },
        Regression {
            id: "gis-c-form",
            claim: "internal 8-variable form of generalized indirect sum C",
            expected: s(
                "x2 + x4 + x5*x7 + x6*x8 + x1*x3*x5 + x1*x4*x5 + x1*x5*x6 + x2*x3*x5 + x2*x4*x5 + x2*x5*x6 + x3*x5*x8 + x4*x5*x8; plateaued(s=4)",
            ),
            check: || form_anf(forms::gis_c_form()),
        },
        Regression {
            id: "gis-c-restrictions",
            claim: "generalized indirect sum C at z = 1000 and z1 = 0",
            expected: s("z=1000 classical: true; z1=0 direct: true"),
            check: gis_c_restrictions,
        },
        Regression {
            id: "generic-a-indicator",
            claim: "generic method A is the indicator construction with U = {0}",
            expected: s("bent; indicator form: true"),
            check: generic_a_as_indicator,
        },
        Regression {
            id: "generic-a-zero-m",
            claim: "generic method A with m = 0 is the majority of (f1, f2 + 1, f3 + 1)",
            expected: s("true"),
            check: generic_a_zero_m,
        },
        Regression {
            id: "mesnager-dual",
            claim: "majority of three bents with zero dual sum, and its dual",
            expected: s("bent; dual as form of duals: true"),
            check: mesnager_dual,
        },
        Regression {
            id: "mesnager-dual-linearity",
            claim: "duals are linear over the support of the majority form",
            expected: s("true"),
            check: mesnager_linearity,
        },
        Regression {
            id: "dualcor-majority",
            claim: "the dual-correction family equals the majority of (h1, h2+h4, h3)",
            expected: s("bent; equals majority of (h1, h2+h4, h3): true"),
            check: dualcor_as_mesnager,
        },
        Regression {
            id: "dualcor-lambda-zero",
            claim: "with g1 = g2 the dual-correction family is MM",
            expected: s("true"),
            check: dualcor_lambda_zero,
        },
        Regression {
            id: "disjoint-spectra",
            claim: "two 4-plateaued functions on F_2^6 with U = {0} give a 2-plateaued function",
            expected: s("plateaued(s=2); displayed variant: plateaued(s=2)"),
            check: disjoint_spectra_output,
        },
        Regression {
            id: "disjoint-spectra-pairwise",
            claim: "f1, f2, f1 + m.x, f2 + m.x have pairwise disjoint spectra",
            expected: s("true"),
            check: disjoint_spectra_pairwise,
        },
    ]
}
