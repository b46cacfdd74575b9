//! C ABI for `supersym`.
//!
//! Objects are opaque heap handles released with the matching `*_free`
//! function. Every fallible call returns an [`SsStatus`]; on failure a message
//! is available from [`ss_last_error`] on the same thread. Strings handed out
//! by the library are released with [`ss_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use supersym::divisor::{DivisorJson, Superdivisor};
use supersym::representability::{classify, roundtrip_check, universal_divisor, MorphismText, SupercurvePatch};
use supersym::symmetric::{Permutation, TensorPowerContext};
use supersym::{Error, SuperPolynomial, VariableContext};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    ContextMismatch = 4,
    Parity = 5,
    InvalidArgument = 6,
    Panic = 7,
}

/// A variable context such as `even z; odd t`.
pub struct SsContext {
    inner: VariableContext,
}

/// An element of the free supercommutative algebra of a context.
pub struct SsPoly {
    inner: SuperPolynomial,
}

/// A superdivisor in normal form.
pub struct SsDivisor {
    inner: Superdivisor,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SsStatus {
    match e {
        Error::Parse { .. } | Error::InvalidName(_) | Error::UnknownVariable(_) | Error::InvalidPermutation(_) => {
            SsStatus::Parse
        }
        Error::ContextMismatch | Error::BaseMismatch => SsStatus::ContextMismatch,
        Error::Parity(_) | Error::NotEven(_) | Error::OddMultiplier => SsStatus::Parity,
        _ => SsStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and turning panics into [`SsStatus::Panic`].
fn guard<F>(f: F) -> SsStatus
where
    F: FnOnce() -> Result<(), (SsStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SsStatus::Panic
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (SsStatus, String)>;
}

impl<T> IntoFfi<T> for supersym::Result<T> {
    fn ffi(self) -> Result<T, (SsStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, (SsStatus, String)> {
    if p.is_null() {
        return Err((SsStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SsStatus::InvalidUtf8, "string argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, (SsStatus, String)> {
    p.as_ref()
        .ok_or_else(|| (SsStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), (SsStatus, String)> {
    if out.is_null() {
        return Err((SsStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (SsStatus, String)> {
    if out.is_null() {
        return Err((SsStatus::NullPointer, "null output pointer".into()));
    }
    *out = CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw();
    Ok(())
}

unsafe fn write_value<T>(out: *mut T, value: T) -> Result<(), (SsStatus, String)> {
    if out.is_null() {
        return Err((SsStatus::NullPointer, "null output pointer".into()));
    }
    *out = value;
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Owned by the library;
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ss_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn ss_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ss_context_new(header: *const c_char, out: *mut *mut SsContext) -> SsStatus {
    guard(|| {
        let inner: VariableContext = str_arg(header)?.parse().ffi()?;
        write_out(out, SsContext { inner })
    })
}

#[no_mangle]
pub unsafe extern "C" fn ss_context_free(ctx: *mut SsContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ss_poly_parse(
    ctx: *const SsContext,
    text: *const c_char,
    out: *mut *mut SsPoly,
) -> SsStatus {
    guard(|| {
        let ctx = handle(ctx)?;
        let inner = SuperPolynomial::parse(&ctx.inner, str_arg(text)?).ffi()?;
        write_out(out, SsPoly { inner })
    })
}

#[no_mangle]
pub unsafe extern "C" fn ss_poly_free(p: *mut SsPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text of `p`; release with [`ss_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ss_poly_to_string(p: *const SsPoly, out: *mut *mut c_char) -> SsStatus {
    guard(|| write_string(out, handle(p)?.inner.to_string()))
}

#[no_mangle]
pub unsafe extern "C" fn ss_poly_add(a: *const SsPoly, b: *const SsPoly, out: *mut *mut SsPoly) -> SsStatus {
    guard(|| {
        let inner = handle(a)?.inner.checked_add(&handle(b)?.inner).ffi()?;
        write_out(out, SsPoly { inner })
    })
}

#[no_mangle]
pub unsafe extern "C" fn ss_poly_mul(a: *const SsPoly, b: *const SsPoly, out: *mut *mut SsPoly) -> SsStatus {
    guard(|| {
        let inner = handle(a)?.inner.checked_mul(&handle(b)?.inner).ffi()?;
        write_out(out, SsPoly { inner })
    })
}

#[no_mangle]
pub unsafe extern "C" fn ss_poly_equal(a: *const SsPoly, b: *const SsPoly, out: *mut bool) -> SsStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        if !a.inner.context().same(b.inner.context()) {
            return Err((SsStatus::ContextMismatch, "operands live in different contexts".into()));
        }
        write_value(out, a.inner == b.inner)
    })
}

/// Applies a permutation in cycle notation to an element of the `g`-fold tensor
/// power of the context `base` and returns the result as text.
#[no_mangle]
pub unsafe extern "C" fn ss_act(
    base: *const c_char,
    g: usize,
    perm: *const c_char,
    poly: *const c_char,
    out: *mut *mut c_char,
) -> SsStatus {
    guard(|| {
        let base: VariableContext = str_arg(base)?.parse().ffi()?;
        let tp = TensorPowerContext::new(&base, g).ffi()?;
        let sigma = Permutation::parse_cycles(str_arg(perm)?, Some(g)).ffi()?;
        let p = SuperPolynomial::parse(tp.context(), str_arg(poly)?).ffi()?;
        write_string(out, tp.act(&sigma, &p).ffi()?.to_string())
    })
}

/// Reads a divisor from its JSON form.
#[no_mangle]
pub unsafe extern "C" fn ss_divisor_from_json(json: *const c_char, out: *mut *mut SsDivisor) -> SsStatus {
    guard(|| {
        let inner = DivisorJson::parse(str_arg(json)?).and_then(|j| j.to_divisor()).ffi()?;
        write_out(out, SsDivisor { inner })
    })
}

/// The universal divisor of degree `g` on the patch `z`, `t`.
#[no_mangle]
pub unsafe extern "C" fn ss_divisor_universal(g: usize, out: *mut *mut SsDivisor) -> SsStatus {
    guard(|| {
        let inner = universal_divisor(g, &SupercurvePatch::standard()).ffi()?;
        write_out(out, SsDivisor { inner })
    })
}

#[no_mangle]
pub unsafe extern "C" fn ss_divisor_free(d: *mut SsDivisor) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ss_divisor_to_json(d: *const SsDivisor, out: *mut *mut c_char) -> SsStatus {
    guard(|| write_string(out, handle(d)?.inner.to_json().to_string_pretty()))
}

#[no_mangle]
pub unsafe extern "C" fn ss_divisor_degree(d: *const SsDivisor, out: *mut usize) -> SsStatus {
    guard(|| write_value(out, handle(d)?.inner.degree()))
}

#[no_mangle]
pub unsafe extern "C" fn ss_divisor_sum(
    a: *const SsDivisor,
    b: *const SsDivisor,
    out: *mut *mut SsDivisor,
) -> SsStatus {
    guard(|| {
        let inner = handle(a)?.inner.sum(&handle(b)?.inner).ffi()?;
        write_out(out, SsDivisor { inner })
    })
}

#[no_mangle]
pub unsafe extern "C" fn ss_divisor_defining_polynomial(d: *const SsDivisor, out: *mut *mut SsPoly) -> SsStatus {
    guard(|| {
        let inner = handle(d)?.inner.defining_polynomial();
        write_out(out, SsPoly { inner })
    })
}

/// Characteristic polynomial of multiplication by the coordinate on the quotient.
#[no_mangle]
pub unsafe extern "C" fn ss_divisor_char_poly(d: *const SsDivisor, out: *mut *mut SsPoly) -> SsStatus {
    guard(|| {
        let d = &handle(d)?.inner;
        let inner = d.quotient().char_poly(&d.ring().z()).ffi()?;
        write_out(out, SsPoly { inner })
    })
}

/// The classifying morphism as text, `{s1 -> ..., sig1 -> ...}`.
#[no_mangle]
pub unsafe extern "C" fn ss_divisor_classify(d: *const SsDivisor, out: *mut *mut c_char) -> SsStatus {
    guard(|| {
        let phi = classify(&handle(d)?.inner).ffi()?;
        write_string(out, MorphismText(&phi).to_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ss_divisor_roundtrip(d: *const SsDivisor, out: *mut bool) -> SsStatus {
    guard(|| {
        let holds = roundtrip_check(&handle(d)?.inner).ffi()?;
        write_value(out, holds)
    })
}

/// Runs the command-line interface on `argv[0..argc]` (program name first).
/// Captured standard output and error are returned as strings; `exit_code`
/// receives 0 (pass), 1 (fail) or 2 (usage or input error).
#[no_mangle]
pub unsafe extern "C" fn ss_cli_run(
    argc: usize,
    argv: *const *const c_char,
    out_stdout: *mut *mut c_char,
    out_stderr: *mut *mut c_char,
    exit_code: *mut c_int,
) -> SsStatus {
    guard(|| {
        if argv.is_null() && argc > 0 {
            return Err((SsStatus::NullPointer, "null argv".into()));
        }
        let args = (0..argc)
            .map(|i| str_arg(*argv.add(i)).map(str::to_owned))
            .collect::<Result<Vec<_>, _>>()?;
        let outcome = supersym::cli::run(args);
        write_value(exit_code, outcome.code)?;
        write_string(out_stdout, outcome.stdout)?;
        write_string(out_stderr, outcome.stderr)
    })
}
