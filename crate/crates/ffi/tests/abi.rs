use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use bentforge::{parse_function, wht, BooleanFunction};
use bentforge_ffi::*;

struct Handle(*mut BfFunction);

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { bf_function_free(self.0) }
    }
}

fn parse(text: &str, vars: u32) -> Handle {
    let source = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { bf_function_parse(source.as_ptr(), vars, &mut out) },
        BfStatus::Ok
    );
    Handle(out)
}

fn hex(h: &Handle) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { bf_function_to_hex(h.0, &mut s) }, BfStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { bf_string_free(s) };
    text
}

#[test]
fn round_trips_and_spectrum() {
    let h = parse("x1*x2 + x3*x4", 0);
    assert_eq!(hex(&h), "111e");
    let mut n = 0;
    assert_eq!(unsafe { bf_function_num_vars(h.0, &mut n) }, BfStatus::Ok);
    assert_eq!(n, 4);
    let mut spectrum = [0i32; 16];
    assert_eq!(unsafe { bf_function_wht(h.0, spectrum.as_mut_ptr(), 16) }, BfStatus::Ok);
    let f = parse_function("x1*x2 + x3*x4", None).unwrap();
    assert_eq!(spectrum.as_slice(), wht(&f).coeffs());
    assert_eq!(
        unsafe { bf_function_wht(h.0, spectrum.as_mut_ptr(), 8) },
        BfStatus::Dimension
    );

    let mut anf = ptr::null_mut();
    assert_eq!(unsafe { bf_function_anf(h.0, &mut anf) }, BfStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(anf) }.to_str().unwrap(), "x1*x2 + x3*x4");
    unsafe { bf_string_free(anf) };

    let bits: Vec<u8> = (0..16).map(|x| f.eval(x) as u8).collect();
    let mut from_bits = ptr::null_mut();
    assert_eq!(
        unsafe { bf_function_from_bits(4, bits.as_ptr(), bits.len(), &mut from_bits) },
        BfStatus::Ok
    );
    assert_eq!(hex(&Handle(from_bits)), "111e");
}

#[test]
fn synthesis_and_constructions() {
    let dual = parse("x1*x2", 2);
    let rows = [0b00110u64, 0b01101, 0b10000, 0b11011];
    let mut out = ptr::null_mut();
    let status = unsafe { bf_synthesize_rows(5, rows.as_ptr(), rows.len(), dual.0, &mut out) };
    assert_eq!(status, BfStatus::Ok);
    let g = Handle(out);
    let mut class = BfClass {
        kind: BfClassKind::Other,
        s: -1,
    };
    assert_eq!(unsafe { bf_function_classify(g.0, &mut class) }, BfStatus::Ok);
    assert_eq!(
        class,
        BfClass {
            kind: BfClassKind::Plateaued,
            s: 3
        }
    );

    let [a, b, c] = [parse("x1*x2", 2), parse("x1*x2 + x1", 2), parse("x1*x2 + x2", 2)];
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { bf_rothaus(a.0, b.0, c.0, BfVerify::Always as u32, &mut out) },
        BfStatus::Ok
    );
    let r = Handle(out);
    let mut bent = false;
    assert_eq!(unsafe { bf_function_is_bent(r.0, &mut bent) }, BfStatus::Ok);
    assert!(bent);

    let mut d = ptr::null_mut();
    assert_eq!(unsafe { bf_function_dual(r.0, &mut d) }, BfStatus::Ok);
    drop(Handle(d));

    let bad = parse("x1", 2);
    let mut out = ptr::null_mut();
    let status = unsafe { bf_rothaus(a.0, b.0, bad.0, BfVerify::Always as u32, &mut out) };
    assert_eq!(status, BfStatus::PreconditionFailed);
    assert!(out.is_null());
    let message = unsafe { CStr::from_ptr(bf_last_error()) }.to_str().unwrap();
    assert!(message.contains("precondition"));
}

#[test]
fn formula_dual_through_the_abi() {
    let f = [
        parse("x1*x2", 2),
        parse("x1*x2 + x1", 2),
        parse("x1*x2 + x2", 2),
        parse("x1*x2 + 1", 2),
    ];
    let (mut out, mut dual) = (ptr::null_mut(), ptr::null_mut());
    let status = unsafe {
        bf_indirect_sum(
            f[0].0,
            f[1].0,
            f[2].0,
            f[3].0,
            BfVerify::Auto as u32,
            &mut out,
            &mut dual,
        )
    };
    assert_eq!(status, BfStatus::Ok);
    let (out, dual) = (Handle(out), Handle(dual));
    let mut d2 = ptr::null_mut();
    assert_eq!(unsafe { bf_function_dual(out.0, &mut d2) }, BfStatus::Ok);
    assert_eq!(hex(&Handle(d2)), hex(&dual));
}

#[test]
fn null_and_bad_input() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { bf_function_from_hex(ptr::null(), &mut out) },
        BfStatus::NullPointer
    );
    let h = CString::new("zz").unwrap();
    assert_eq!(unsafe { bf_function_from_hex(h.as_ptr(), &mut out) }, BfStatus::Parse);
    let mut v = false;
    assert_eq!(
        unsafe { bf_function_eval(ptr::null(), 0, &mut v) },
        BfStatus::NullPointer
    );
    let one = parse("x1", 1);
    assert_eq!(unsafe { bf_function_eval(one.0, 2, &mut v) }, BfStatus::InvalidArgument);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { bf_function_to_hex(one.0, &mut s) }, BfStatus::InvalidArgument);
    assert!(BooleanFunction::from_hex("1").is_ok());
}

fn staticlib() -> Option<PathBuf> {
    // target/<profile>/deps/<test binary> -> target/<profile>
    let exe = std::env::current_exe().ok()?;
    let profile = exe.parent()?.parent()?;
    let lib = profile.join("libbentforge_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_against_header() {
    let Some(lib) = staticlib() else {
        eprintln!("static library not built; skipping");
        return;
    };
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("bentforge_smoke");
    let compiled = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    match compiled {
        Ok(s) => assert!(s.success(), "C compilation failed"),
        Err(_) => {
            eprintln!("no C compiler; skipping");
            return;
        }
    }
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
