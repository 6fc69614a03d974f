//! Command-line front end. `run` returns the process exit code:
//! 0 success, 1 parse or usage error, 2 precondition or verification
//! failure, 3 internal invariant breach.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::anf::parse_function;
use crate::class::{classify, ClassTag};
use crate::constructions::{self as c, DisjointBundle, IndicatorSpec, SplitMode, Verify};
use crate::error::{Error, Result};
use crate::function::{parse_point, BooleanFunction, VectorialFunction};
use crate::regressions;
use crate::report::FunctionReport;
use crate::synth::{parse_support_file, synthesize_plateaued, OrderedSupport, SynthesisSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "bentforge",
    version,
    about = "Build and verify bent and plateaued Boolean functions"
)]
pub struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report on a function given as ANF text or a hex truth table.
    Eval {
        input: String,
        /// Variable count for ANF input (default: largest index used).
        #[arg(long)]
        vars: Option<usize>,
        /// Dual anchor as a bit string.
        #[arg(long)]
        v: Option<String>,
    },
    /// Synthesize a plateaued function from a support file and a dual.
    Synth {
        support: PathBuf,
        /// Dual truth table in hex; overrides the one in the file.
        #[arg(long)]
        dual: Option<String>,
        /// Anchor for the lexicographic ordering.
        #[arg(long, conflicts_with = "rows")]
        v: Option<String>,
        /// Identify rows with dual inputs in file order instead.
        #[arg(long)]
        rows: bool,
    },
    /// Run a named construction.
    Construct(ConstructArgs),
    /// Recompute every worked example and compare with the stored values.
    PaperExamples {
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Rothaus,
    GenRothausA,
    GenRothausB,
    /// Composition with a plateaued form whose support splits as `Delta wr F_2^m`.
    #[value(alias = "split-support")]
    P1,
    /// Composition with a bent outer form over an affine space of bents.
    #[value(alias = "bent-outer-form")]
    P2,
    BentConcat,
    IndirectSum,
    GisA,
    GisB,
    GisC,
    GisK,
    Indicator,
    GenericA,
    MesnagerG,
    Dualcor,
    DisjointSpectra,
    DirectSumSupports,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub method: Method,
    /// Input functions (ANF or hex), in the order the method expects.
    pub inputs: Vec<String>,
    /// Always check hypotheses.
    #[arg(long, overrides_with = "no_verify")]
    pub verify: bool,
    /// Never check hypotheses.
    #[arg(long, overrides_with = "verify")]
    pub no_verify: bool,
    /// Variable count for ANF inputs.
    #[arg(long)]
    pub vars: Option<usize>,
    /// Dual anchor of the output, as a bit string.
    #[arg(long)]
    pub v: Option<String>,
    /// p1 expectation: bent, mixed or plateaued:C.
    #[arg(long, default_value = "bent")]
    pub mode: String,
    /// generic-a: the vector m as a bit string.
    #[arg(long)]
    pub m: Option<String>,
    /// indicator, disjoint-spectra: basis of U as comma-separated bit strings.
    #[arg(long, value_delimiter = ',')]
    pub u_basis: Vec<String>,
    /// disjoint-spectra: common plateau parameter z of the shifted functions.
    #[arg(long)]
    pub z: Option<usize>,
    /// dualcor: permutation pi as comma-separated images.
    #[arg(long, value_delimiter = ',')]
    pub pi: Vec<usize>,
    /// dualcor: permutation phi as comma-separated images.
    #[arg(long, value_delimiter = ',')]
    pub phi: Vec<usize>,
    /// gis-k: the functions l_i on t variables, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ells: Vec<String>,
    /// gis-k: bent dual of the outer form; its arity is t.
    #[arg(long)]
    pub xi_dual: Option<String>,
}

impl ConstructArgs {
    fn verify(&self) -> Verify {
        match (self.verify, self.no_verify) {
            (true, _) => Verify::Always,
            (_, true) => Verify::Never,
            _ => Verify::Auto,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidArgument(_)
        | Error::Capacity(_)
        | Error::DimensionMismatch { .. }
        | Error::ArityMismatch { .. }
        | Error::LengthMismatch(..)
        | Error::HeightMismatch(..) => EXIT_PARSE,
        _ => EXIT_VERIFY,
    }
}

/// Accepts `hex:...`, `anf:...`, `0x...`, ANF text (anything with `x`,
/// `+` or `*`), and otherwise a bare hex table.
pub fn parse_input(text: &str, vars: Option<usize>) -> Result<BooleanFunction> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("hex:").or_else(|| t.strip_prefix("0x")) {
        return BooleanFunction::from_hex(rest);
    }
    if let Some(rest) = t.strip_prefix("anf:") {
        return parse_function(rest, vars);
    }
    if t.contains(['x', '+', '*']) {
        return parse_function(t, vars);
    }
    BooleanFunction::from_hex(t)
}

fn parse_bits(text: &str, width: usize, what: &str) -> Result<usize> {
    let (p, w) = parse_point(text)?;
    if w != width {
        return Err(Error::InvalidArgument(format!(
            "{what} must have {width} bits, got {w}"
        )));
    }
    Ok(p)
}

fn parse_mode(text: &str) -> Result<SplitMode> {
    match text {
        "bent" => Ok(SplitMode::Bent),
        "mixed" => Ok(SplitMode::Mixed),
        _ => text
            .strip_prefix("plateaued:")
            .and_then(|c| c.parse().ok())
            .map(|c| SplitMode::Plateaued { c })
            .ok_or_else(|| Error::InvalidArgument(format!("unknown mode {text:?}"))),
    }
}

#[derive(Serialize)]
struct ConstructOutput {
    method: String,
    hypotheses_checked: bool,
    /// Class the construction promises, if any.
    claim: Option<String>,
    claim_holds: Option<bool>,
    /// Whether the closed-form dual agrees with the computed one.
    formula_dual_matches: Option<bool>,
    report: FunctionReport,
}

struct Built {
    function: BooleanFunction,
    claim: Option<ClassTag>,
    formula_dual: Option<BooleanFunction>,
}

impl Built {
    fn bent(function: BooleanFunction) -> Self {
        Self {
            function,
            claim: Some(ClassTag::Bent),
            formula_dual: None,
        }
    }

    fn with_dual(w: c::WithDual) -> Self {
        Self {
            function: w.function,
            claim: Some(ClassTag::Bent),
            formula_dual: Some(w.dual),
        }
    }
}

fn expect_inputs(fs: &[BooleanFunction], n: usize, method: Method) -> Result<()> {
    if fs.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} expects {n} input functions, got {}",
            method_name(method),
            fs.len()
        )));
    }
    Ok(())
}

fn method_name(m: Method) -> String {
    m.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn pairs(fs: &[BooleanFunction]) -> Result<DisjointBundle> {
    if fs.is_empty() || !fs.len().is_multiple_of(2) {
        return Err(Error::InvalidArgument(
            "expected a nonempty list of function pairs".into(),
        ));
    }
    DisjointBundle::new(fs.chunks(2).map(|p| (p[0].clone(), p[1].clone())).collect())
}

fn u_basis(args: &ConstructArgs, k: usize) -> Result<Vec<usize>> {
    args.u_basis
        .iter()
        .map(|b| parse_bits(b, k, "a basis vector of U"))
        .collect()
}

fn build(args: &ConstructArgs) -> Result<Built> {
    let fs: Vec<BooleanFunction> = args
        .inputs
        .iter()
        .map(|t| parse_input(t, args.vars))
        .collect::<Result<_>>()?;
    let verify = args.verify();
    let method = args.method;
    Ok(match method {
        Method::Rothaus => {
            expect_inputs(&fs, 3, method)?;
            Built::bent(c::rothaus(&fs[0], &fs[1], &fs[2], verify)?)
        }
        Method::GenRothausA => {
            expect_inputs(&fs, 3, method)?;
            Built::bent(c::generalized_rothaus_a(&fs[0], &fs[1], &fs[2], verify)?)
        }
        Method::GenRothausB => {
            expect_inputs(&fs, 2, method)?;
            Built::bent(c::generalized_rothaus_b(&fs[0], &fs[1], verify)?)
        }
        Method::P1 => {
            let (form, h) = fs
                .split_first()
                .ok_or_else(|| Error::InvalidArgument("p1 expects a form followed by coordinates".into()))?;
            let mode = parse_mode(&args.mode)?;
            let out = c::split_support_construct(form, &VectorialFunction::new(h.to_vec())?, mode, verify)?;
            let claim = match mode {
                SplitMode::Bent => Some(ClassTag::Bent),
                SplitMode::Plateaued { c } => Some(ClassTag::Plateaued { s: c }),
                SplitMode::Mixed => None,
            };
            Built {
                function: out.function,
                claim,
                formula_dual: out.dual,
            }
        }
        Method::P2 => {
            if fs.len() < 2 {
                return Err(Error::InvalidArgument("p2 expects d, a and then coordinates".into()));
            }
            Built::bent(c::bent_outer_form_construct(&fs[0], &fs[1], &fs[2..], verify)?)
        }
        Method::BentConcat => {
            expect_inputs(&fs, 3, method)?;
            Built::bent(c::bent_concatenation(&fs[0], &fs[1], &fs[2], verify)?)
        }
        Method::IndirectSum => {
            expect_inputs(&fs, 4, method)?;
            Built::with_dual(c::indirect_sum(&fs[0], &fs[1], &fs[2], &fs[3], verify)?)
        }
        Method::GisA => {
            expect_inputs(&fs, 8, method)?;
            Built::with_dual(c::gen_indirect_sum_a(&pairs(&fs)?, verify)?)
        }
        Method::GisB => {
            expect_inputs(&fs, 4, method)?;
            Built::bent(c::gen_indirect_sum_b(&fs[0], &fs[1], &fs[2], &fs[3], verify)?)
        }
        Method::GisC => {
            expect_inputs(&fs, 4, method)?;
            Built::bent(c::gen_indirect_sum_c(&fs[0], &fs[1], &fs[2], &fs[3], verify)?)
        }
        Method::GisK => {
            let bundle = pairs(&fs)?;
            let xi = args
                .xi_dual
                .as_deref()
                .ok_or_else(|| Error::InvalidArgument("gis-k needs --xi-dual".into()))?;
            // A bent dual uses all of its variables, so its arity fixes t.
            let xi = parse_input(xi, None)?;
            let t = xi.num_vars();
            let ells = args
                .ells
                .iter()
                .map(|e| parse_input(e, Some(t)))
                .collect::<Result<Vec<_>>>()?;
            Built::with_dual(c::gen_indirect_sum_k(&bundle, &ells, &xi, verify)?)
        }
        Method::Indicator => {
            let (a, h) = fs
                .split_first()
                .ok_or_else(|| Error::InvalidArgument("indicator expects a followed by coordinates".into()))?;
            let basis = u_basis(args, h.len())?;
            let spec = IndicatorSpec::new(a.clone(), VectorialFunction::new(h.to_vec())?, basis)?;
            Built {
                function: c::indicator_construct(&spec)?,
                claim: None,
                formula_dual: None,
            }
        }
        Method::GenericA => {
            expect_inputs(&fs, 3, method)?;
            let n = fs[0].num_vars();
            let m = match &args.m {
                Some(bits) => parse_bits(bits, n, "m")?,
                None => 0,
            };
            Built::bent(c::generic_method_a(&fs[0], &fs[1], &fs[2], m, verify)?)
        }
        Method::MesnagerG => {
            expect_inputs(&fs, 3, method)?;
            Built::with_dual(c::mesnager_g(&fs[0], &fs[1], &fs[2], verify)?)
        }
        Method::Dualcor => {
            expect_inputs(&fs, 2, method)?;
            Built::bent(c::dualcor_family(&args.pi, &args.phi, &fs[0], &fs[1], verify)?)
        }
        Method::DisjointSpectra => {
            let (a, h) = fs
                .split_first()
                .ok_or_else(|| Error::InvalidArgument("disjoint-spectra expects a followed by coordinates".into()))?;
            let z = args
                .z
                .ok_or_else(|| Error::InvalidArgument("disjoint-spectra needs --z".into()))?;
            let basis = u_basis(args, h.len())?;
            let spec = IndicatorSpec::new(a.clone(), VectorialFunction::new(h.to_vec())?, basis)?;
            let (function, tag) = c::disjoint_spectra_construct(&spec, z)?;
            Built {
                function,
                claim: Some(tag),
                formula_dual: None,
            }
        }
        Method::DirectSumSupports => {
            let (function, t) = c::direct_sum_supports(&fs)?;
            Built {
                function,
                claim: Some(if t == 0 {
                    ClassTag::Bent
                } else {
                    ClassTag::Plateaued { s: t }
                }),
                formula_dual: None,
            }
        }
    })
}

fn anchor(v: Option<&str>, n: usize) -> Result<Option<usize>> {
    v.map(|b| parse_bits(b, n, "the anchor v")).transpose()
}

fn emit<T: Serialize>(out: &mut dyn Write, json: bool, value: &T, human: &str) -> std::io::Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string(value).expect("serializable"))
    } else {
        write!(out, "{human}")
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("output error: {e}"));
    match &cli.command {
        Command::Eval { input, vars, v } => {
            let f = parse_input(input, *vars)?;
            let report = FunctionReport::new(&f, anchor(v.as_deref(), f.num_vars())?)?;
            emit(out, cli.json, &report, &report.to_string()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Synth { support, dual, v, rows } => {
            let text = std::fs::read_to_string(support)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", support.display())))?;
            let file = parse_support_file(&text)?;
            let dual = match dual {
                Some(hex) => BooleanFunction::from_hex(hex)?,
                None => file.dual.ok_or(Error::Parse {
                    position: text.len(),
                    message: "no dual in the file and no --dual given".into(),
                })?,
            };
            let k = file.rows.width();
            let ordered = if *rows {
                OrderedSupport::from_rows(&file.rows)?
            } else {
                OrderedSupport::order(k, file.rows.rows(), anchor(v.as_deref(), k)?)?
            };
            let anchor_point = ordered.anchor();
            let f = synthesize_plateaued(&SynthesisSpec::new(ordered, dual)?)?;
            let report = FunctionReport::new(&f, Some(anchor_point))?;
            emit(out, cli.json, &report, &report.to_string()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Construct(args) => {
            let built = build(args)?;
            let n = built.function.num_vars();
            let checked = args.verify().enabled(n);
            let report = FunctionReport::new(&built.function, anchor(args.v.as_deref(), n)?)?;
            let claim_holds = built.claim.map(|t| classify(&built.function).tag == t);
            let formula_dual_matches = match (&built.formula_dual, &report.dual) {
                (Some(d), Some(r)) if report.is_bent() => Some(d.to_hex() == r.hex),
                (Some(_), _) => Some(false),
                _ => None,
            };
            let output = ConstructOutput {
                method: method_name(args.method),
                hypotheses_checked: checked,
                claim: built.claim.map(|t| t.to_string()),
                claim_holds,
                formula_dual_matches,
                report,
            };
            let mut human = format!(
                "method     {}\nhypotheses {}\n",
                output.method,
                if checked { "checked" } else { "not checked" }
            );
            if let (Some(claim), Some(holds)) = (&output.claim, claim_holds) {
                human.push_str(&format!(
                    "claim      {claim}: {}\n",
                    if holds { "holds" } else { "FAILS" }
                ));
            }
            if let Some(m) = formula_dual_matches {
                human.push_str(&format!(
                    "dual       formula {}\n",
                    if m { "matches" } else { "DIFFERS" }
                ));
            }
            human.push_str(&output.report.to_string());
            emit(out, cli.json, &output, &human).map_err(io)?;
            let ok = claim_holds.unwrap_or(true) && formula_dual_matches.unwrap_or(true);
            Ok(match (ok, checked) {
                (true, _) => EXIT_OK,
                // Hypotheses held, so a failed claim is a bug.
                (false, true) => EXIT_INTERNAL,
                (false, false) => EXIT_VERIFY,
            })
        }
        Command::PaperExamples { only } => {
            let rows = regressions::run(&regressions::table(), only.as_deref())?;
            if cli.json {
                for r in &rows {
                    writeln!(out, "{}", serde_json::to_string(r).expect("serializable")).map_err(io)?;
                }
            } else {
                let width = rows.iter().map(|r| r.id.len()).max().unwrap_or(0);
                for r in &rows {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{status}  {:width$}  expected: {}", r.id, r.expected).map_err(io)?;
                    if !r.passed {
                        writeln!(out, "      {:width$}  got:      {}", "", r.got).map_err(io)?;
                    }
                }
                let passed = rows.iter().filter(|r| r.passed).count();
                writeln!(out, "{passed}/{} passed", rows.len()).map_err(io)?;
            }
            Ok(if rows.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_VERIFY
            })
        }
    }
}

/// Parse `args` (program name first) and run. Panics become exit code 3.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(&cli, out))) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(_) => {
            let _ = writeln!(err, "error: internal invariant breach");
            EXIT_INTERNAL
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["bentforge"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn input_forms() {
        let g = parse_function("x1*x2", Some(2)).unwrap();
        assert_eq!(parse_input("1", None).unwrap(), g);
        assert_eq!(parse_input("hex:1", None).unwrap(), g);
        assert_eq!(parse_input("0x1", None).unwrap(), g);
        assert_eq!(parse_input("x1*x2", None).unwrap(), g);
        assert_eq!(parse_input("anf:1", Some(2)).unwrap(), BooleanFunction::one(2).unwrap());
        assert!(matches!(parse_input("x0", None), Err(Error::Parse { .. })));
    }

    #[test]
    fn eval_codes() {
        let (code, out, _) = call(&["eval", "x1*x2 + x3*x4"]);
        assert_eq!(code, 0);
        assert!(out.contains("class      bent"));
        assert!(out.contains("degree     2"));
        let (code, _, err) = call(&["eval", "x0"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("position"));
        assert_eq!(call(&["bogus"]).0, EXIT_PARSE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn construct_codes() {
        let (code, out, _) = call(&[
            "--json",
            "construct",
            "indirect-sum",
            "x1*x2",
            "x1*x2 + x1",
            "x1*x2 + x2",
            "x1*x2 + 1",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["claim_holds"], true);
        assert_eq!(v["formula_dual_matches"], true);
        assert_eq!(v["report"]["n"], 4);
        let (code, _, err) = call(&[
            "construct",
            "--verify",
            "--vars",
            "2",
            "rothaus",
            "x1*x2",
            "x1*x2 + x1",
            "x1",
        ]);
        assert_eq!(code, EXIT_VERIFY, "{err}");
        assert!(err.contains("precondition"));
        let (code, out, _) = call(&[
            "construct",
            "--no-verify",
            "--vars",
            "2",
            "rothaus",
            "x1*x2",
            "x1*x2 + x1",
            "x1",
        ]);
        assert_eq!(code, EXIT_VERIFY);
        assert!(out.contains("FAILS"));
    }

    #[test]
    fn examples_filter() {
        let (code, out, _) = call(&["paper-examples", "--only", "anchor-ordering"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        assert_eq!(call(&["paper-examples", "--only", "missing"]).0, EXIT_PARSE);
    }
}
