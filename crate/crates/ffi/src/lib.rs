//! C ABI over `bentforge`.
//!
//! Functions live behind the opaque `BfFunction` handle. Every fallible
//! call returns a [`BfStatus`]; on failure a message is kept per thread and
//! can be read with [`bf_last_error`]. Results are written through out
//! pointers only on success. Handles and strings returned by the library
//! must be released with [`bf_function_free`] and [`bf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bentforge::constructions::{self as c, Verify};
use bentforge::synth::{synthesize_from_rows, RowSet};
use bentforge::{anf_of, bent_dual, classify, parse_function, wht, BooleanFunction, ClassTag, Error};

/// Opaque Boolean function.
pub struct BfFunction(BooleanFunction);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Dimension = 5,
    PreconditionFailed = 6,
    NotBentOrPlateaued = 7,
    SynthesisFailed = 8,
    Panic = 9,
    Other = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BfVerify {
    Auto = 0,
    Always = 1,
    Never = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BfClassKind {
    Bent = 0,
    Plateaued = 1,
    Affine = 2,
    Other = 3,
}

/// Spectral class; `s` is the plateau parameter (0 for bent, `n` for
/// affine, -1 otherwise).
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfClass {
    pub kind: BfClassKind,
    pub s: i32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> BfStatus {
    match e {
        Error::Parse { .. } => BfStatus::Parse,
        Error::Capacity(_)
        | Error::DimensionMismatch { .. }
        | Error::ArityMismatch { .. }
        | Error::LengthMismatch(..)
        | Error::HeightMismatch(..) => BfStatus::Dimension,
        Error::InvalidArgument(_) => BfStatus::InvalidArgument,
        Error::PreconditionFailed(_) => BfStatus::PreconditionFailed,
        Error::NotPlateauedOrBent => BfStatus::NotBentOrPlateaued,
        Error::SpectrumNotBoolean { .. } | Error::DualNotAtBentDistance { .. } | Error::DualWeight { .. } => {
            BfStatus::SynthesisFailed
        }
        _ => BfStatus::Other,
    }
}

struct Fail(BfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type Res<T> = Result<T, Fail>;

fn null(what: &str) -> Fail {
    Fail(BfStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, records any failure or panic and maps it to a status.
fn guard(body: impl FnOnce() -> Res<()>) -> BfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BfStatus::Ok,
        Ok(Err(Fail(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {message}"));
            BfStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Res<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(BfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn func<'a>(p: *const BfFunction, what: &str) -> Res<&'a BooleanFunction> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Res<()> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed(f: BooleanFunction) -> *mut BfFunction {
    Box::into_raw(Box::new(BfFunction(f)))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings have no nul bytes").into_raw()
}

/// Modes arrive as plain integers so that an out-of-range value from C is
/// an error rather than an invalid enum.
fn verify(mode: u32) -> Res<Verify> {
    match mode {
        m if m == BfVerify::Auto as u32 => Ok(Verify::Auto),
        m if m == BfVerify::Always as u32 => Ok(Verify::Always),
        m if m == BfVerify::Never as u32 => Ok(Verify::Never),
        m => Err(Fail(BfStatus::InvalidArgument, format!("unknown verify mode {m}"))),
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parse ANF text such as `x1*x2 + x3`. `vars` of 0 infers the variable
/// count from the highest index.
///
/// # Safety
/// `source` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_parse(source: *const c_char, vars: u32, out: *mut *mut BfFunction) -> BfStatus {
    guard(|| {
        let t = text(source, "source")?;
        let f = parse_function(t, (vars > 0).then_some(vars as usize))?;
        put(out, boxed(f), "out")
    })
}

/// Parse a hex truth table.
///
/// # Safety
/// `hex` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_from_hex(hex: *const c_char, out: *mut *mut BfFunction) -> BfStatus {
    guard(|| {
        let f = BooleanFunction::from_hex(text(hex, "hex")?)?;
        put(out, boxed(f), "out")
    })
}

/// Build from a truth table of `len = 2^vars` bytes, each 0 or 1.
///
/// # Safety
/// `bits` must point to `len` readable bytes and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_from_bits(
    vars: u32,
    bits: *const u8,
    len: usize,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        if bits.is_null() {
            return Err(null("bits"));
        }
        let f = BooleanFunction::from_bits(vars as usize, std::slice::from_raw_parts(bits, len))?;
        put(out, boxed(f), "out")
    })
}

/// # Safety
/// `f` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bf_function_free(f: *mut BfFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `f` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_num_vars(f: *const BfFunction, out: *mut u32) -> BfStatus {
    guard(|| put(out, func(f, "f")?.num_vars() as u32, "out"))
}

/// # Safety
/// `f` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_eval(f: *const BfFunction, x: usize, out: *mut bool) -> BfStatus {
    guard(|| {
        let f = func(f, "f")?;
        if x >= f.len() {
            return Err(Fail(BfStatus::InvalidArgument, format!("point {x} is out of range")));
        }
        put(out, f.eval(x), "out")
    })
}

/// Hex truth table; free the result with [`bf_string_free`].
///
/// # Safety
/// `f` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_to_hex(f: *const BfFunction, out: *mut *mut c_char) -> BfStatus {
    guard(|| {
        let f = func(f, "f")?;
        if f.num_vars() < 2 {
            return Err(Fail(BfStatus::InvalidArgument, "hex needs at least 2 variables".into()));
        }
        put(out, owned_string(f.to_hex()), "out")
    })
}

/// Canonical ANF text; free the result with [`bf_string_free`].
///
/// # Safety
/// `f` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_anf(f: *const BfFunction, out: *mut *mut c_char) -> BfStatus {
    guard(|| put(out, owned_string(anf_of(func(f, "f")?).to_string()), "out"))
}

/// Walsh spectrum into `out`, which must hold `len = 2^n` values.
///
/// # Safety
/// `f` must be a valid handle and `out` point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn bf_function_wht(f: *const BfFunction, out: *mut i32, len: usize) -> BfStatus {
    guard(|| {
        let f = func(f, "f")?;
        if out.is_null() {
            return Err(null("out"));
        }
        if len != f.len() {
            return Err(Error::LengthMismatch(len, f.len()).into());
        }
        std::slice::from_raw_parts_mut(out, len).copy_from_slice(wht(f).coeffs());
        Ok(())
    })
}

/// # Safety
/// `f` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_classify(f: *const BfFunction, out: *mut BfClass) -> BfStatus {
    guard(|| {
        let f = func(f, "f")?;
        let tag = classify(f).tag;
        let kind = match tag {
            ClassTag::Bent => BfClassKind::Bent,
            ClassTag::Plateaued { .. } => BfClassKind::Plateaued,
            ClassTag::Affine => BfClassKind::Affine,
            ClassTag::Other => BfClassKind::Other,
        };
        let s = tag.plateau(f.num_vars()).map_or(-1, |s| s as i32);
        put(out, BfClass { kind, s }, "out")
    })
}

/// # Safety
/// `f` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_is_bent(f: *const BfFunction, out: *mut bool) -> BfStatus {
    guard(|| put(out, bentforge::analysis::verify_bent(func(f, "f")?), "out"))
}

/// Dual of a bent function.
///
/// # Safety
/// `f` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_function_dual(f: *const BfFunction, out: *mut *mut BfFunction) -> BfStatus {
    guard(|| {
        let d =
            bent_dual(func(f, "f")?).map_err(|_| Fail(BfStatus::NotBentOrPlateaued, "function is not bent".into()))?;
        put(out, boxed(d), "out")
    })
}

/// Synthesize from `count` support rows of `width` bits, row `i` carrying
/// the sign of `dual` at point `i`.
///
/// # Safety
/// `rows` must point to `count` values; `dual` must be a valid handle and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_synthesize_rows(
    width: u32,
    rows: *const u64,
    count: usize,
    dual: *const BfFunction,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        if rows.is_null() {
            return Err(null("rows"));
        }
        let list = std::slice::from_raw_parts(rows, count)
            .iter()
            .map(|&r| r as usize)
            .collect();
        let rows = RowSet::new(width as usize, list)?;
        put(out, boxed(synthesize_from_rows(&rows, func(dual, "dual")?)?), "out")
    })
}

/// Writes the dual when `out_dual` is not null.
unsafe fn put_with_dual(w: c::WithDual, out: *mut *mut BfFunction, out_dual: *mut *mut BfFunction) -> Res<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(boxed(w.function));
    if !out_dual.is_null() {
        out_dual.write(boxed(w.dual));
    }
    Ok(())
}

/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_rothaus(
    a: *const BfFunction,
    b: *const BfFunction,
    cc: *const BfFunction,
    verify_mode: u32,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let g = c::rothaus(func(a, "a")?, func(b, "b")?, func(cc, "c")?, verify(verify_mode)?)?;
        put(out, boxed(g), "out")
    })
}

/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_gen_rothaus_a(
    a: *const BfFunction,
    b: *const BfFunction,
    cc: *const BfFunction,
    verify_mode: u32,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let g = c::generalized_rothaus_a(func(a, "a")?, func(b, "b")?, func(cc, "c")?, verify(verify_mode)?)?;
        put(out, boxed(g), "out")
    })
}

/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_gen_rothaus_b(
    a: *const BfFunction,
    b: *const BfFunction,
    verify_mode: u32,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let g = c::generalized_rothaus_b(func(a, "a")?, func(b, "b")?, verify(verify_mode)?)?;
        put(out, boxed(g), "out")
    })
}

/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_bent_concatenation(
    f1: *const BfFunction,
    f2: *const BfFunction,
    f3: *const BfFunction,
    verify_mode: u32,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let g = c::bent_concatenation(func(f1, "f1")?, func(f2, "f2")?, func(f3, "f3")?, verify(verify_mode)?)?;
        put(out, boxed(g), "out")
    })
}

/// Indirect sum on disjoint variables; `out_dual` may be null.
///
/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_indirect_sum(
    f1: *const BfFunction,
    f2: *const BfFunction,
    g1: *const BfFunction,
    g2: *const BfFunction,
    verify_mode: u32,
    out: *mut *mut BfFunction,
    out_dual: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let w = c::indirect_sum(
            func(f1, "f1")?,
            func(f2, "f2")?,
            func(g1, "g1")?,
            func(g2, "g2")?,
            verify(verify_mode)?,
        )?;
        put_with_dual(w, out, out_dual)
    })
}

/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_gen_indirect_sum_b(
    f1: *const BfFunction,
    f2: *const BfFunction,
    g1: *const BfFunction,
    g2: *const BfFunction,
    verify_mode: u32,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let g = c::gen_indirect_sum_b(
            func(f1, "f1")?,
            func(f2, "f2")?,
            func(g1, "g1")?,
            func(g2, "g2")?,
            verify(verify_mode)?,
        )?;
        put(out, boxed(g), "out")
    })
}

/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_gen_indirect_sum_c(
    f1: *const BfFunction,
    f2: *const BfFunction,
    g1: *const BfFunction,
    g2: *const BfFunction,
    verify_mode: u32,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let g = c::gen_indirect_sum_c(
            func(f1, "f1")?,
            func(f2, "f2")?,
            func(g1, "g1")?,
            func(g2, "g2")?,
            verify(verify_mode)?,
        )?;
        put(out, boxed(g), "out")
    })
}

/// `g = f1 f2 + f1 f3 + f2 f3`; `out_dual` may be null.
///
/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_mesnager_g(
    f1: *const BfFunction,
    f2: *const BfFunction,
    f3: *const BfFunction,
    verify_mode: u32,
    out: *mut *mut BfFunction,
    out_dual: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let w = c::mesnager_g(func(f1, "f1")?, func(f2, "f2")?, func(f3, "f3")?, verify(verify_mode)?)?;
        put_with_dual(w, out, out_dual)
    })
}

/// `f1 + (m.x + 1)(f1 + f2 + 1)(f1 + f3 + 1)`.
///
/// # Safety
/// All handles must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_generic_method_a(
    f1: *const BfFunction,
    f2: *const BfFunction,
    f3: *const BfFunction,
    m: u64,
    verify_mode: u32,
    out: *mut *mut BfFunction,
) -> BfStatus {
    guard(|| {
        let g = c::generic_method_a(
            func(f1, "f1")?,
            func(f2, "f2")?,
            func(f3, "f3")?,
            m as usize,
            verify(verify_mode)?,
        )?;
        put(out, boxed(g), "out")
    })
}
