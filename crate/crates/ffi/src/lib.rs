//! C interface to `afcount`.
//!
//! Frameworks live behind an opaque [`AfcFramework`] handle. Every call
//! returns an [`AfcStatus`]; on failure a message is available from
//! [`afc_last_error`] on the same thread. Counts are arbitrary precision
//! and come back as decimal strings owned by the caller, released with
//! [`afc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use afcount::formats::{self, Format};
use afcount::pipeline::{run_on, Answer, RunConfig, Task};
use afcount::{ArgumentationFramework, Error, SemanticsKind};

/// Opaque framework handle.
pub struct AfcFramework {
    inner: ArgumentationFramework,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownArgument = 4,
    Usage = 5,
    Internal = 6,
    OracleMismatch = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfcFormat {
    Apx = 0,
    Tgf = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfcSemantics {
    ConflictFree = 0,
    Admissible = 1,
    Complete = 2,
    Preferred = 3,
    SemiStable = 4,
    Stable = 5,
    Stage = 6,
}

impl From<AfcSemantics> for SemanticsKind {
    fn from(s: AfcSemantics) -> Self {
        match s {
            AfcSemantics::ConflictFree => SemanticsKind::ConflictFree,
            AfcSemantics::Admissible => SemanticsKind::Admissible,
            AfcSemantics::Complete => SemanticsKind::Complete,
            AfcSemantics::Preferred => SemanticsKind::Preferred,
            AfcSemantics::SemiStable => SemanticsKind::SemiStable,
            AfcSemantics::Stable => SemanticsKind::Stable,
            AfcSemantics::Stage => SemanticsKind::Stage,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AfcStatus {
    match e {
        Error::UnknownArgument(_) => AfcStatus::UnknownArgument,
        Error::OracleMismatch { .. } => AfcStatus::OracleMismatch,
        other => match other.exit_code() {
            1 => AfcStatus::Usage,
            2 => AfcStatus::Parse,
            _ => AfcStatus::Internal,
        },
    }
}

struct Fail(AfcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, recording failures and turning panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AfcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AfcStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AfcStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(AfcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(AfcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, what).map(Some)
    }
}

unsafe fn framework<'a>(p: *const AfcFramework) -> Result<&'a ArgumentationFramework, Fail> {
    p.as_ref()
        .map(|f| &f.inner)
        .ok_or_else(|| Fail(AfcStatus::NullPointer, "framework is null".into()))
}

fn solve(
    af: &ArgumentationFramework,
    sem: AfcSemantics,
    task: Task,
    arg: Option<&str>,
    projection: Option<Vec<String>>,
) -> Result<Answer, Fail> {
    let mut config = RunConfig::new("<ffi>", sem.into(), task);
    config.arg = arg.map(str::to_string);
    config.projection = projection;
    Ok(run_on(af, &config)?.answer)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(AfcStatus::Internal, "nul in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Parses `text` into a new framework stored in `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn afc_framework_parse(
    text: *const c_char,
    format: AfcFormat,
    out: *mut *mut AfcFramework,
) -> AfcStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail(AfcStatus::NullPointer, "out is null".into()));
        }
        *out = ptr::null_mut();
        let text = str_arg(text, "text")?;
        let fmt = match format {
            AfcFormat::Apx => Format::Apx,
            AfcFormat::Tgf => Format::Tgf,
        };
        let inner = formats::parse(text, fmt)?;
        *out = Box::into_raw(Box::new(AfcFramework { inner }));
        Ok(())
    })
}

/// Releases a framework. Null is ignored.
///
/// # Safety
/// `fw` must come from [`afc_framework_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn afc_framework_free(fw: *mut AfcFramework) {
    if !fw.is_null() {
        drop(Box::from_raw(fw));
    }
}

/// Number of arguments, 0 for null.
///
/// # Safety
/// `fw` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn afc_framework_len(fw: *const AfcFramework) -> usize {
    fw.as_ref().map_or(0, |f| f.inner.len())
}

/// Number of extensions, or of those containing `arg` when it is not null,
/// as a decimal string in `*out`.
///
/// # Safety
/// Pointers must be valid; `arg` may be null.
#[no_mangle]
pub unsafe extern "C" fn afc_count(
    fw: *const AfcFramework,
    sem: AfcSemantics,
    arg: *const c_char,
    out: *mut *mut c_char,
) -> AfcStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail(AfcStatus::NullPointer, "out is null".into()));
        }
        let af = framework(fw)?;
        let arg = opt_str_arg(arg, "arg")?;
        let task = if arg.is_some() { Task::CredCount } else { Task::Count };
        let answer = solve(af, sem, task, arg, None)?;
        write_string(out, answer.to_string())
    })
}

/// Number of distinct restrictions to the `n` names in `projection` of the
/// extensions (containing `arg` when it is not null).
///
/// # Safety
/// `projection` must point to `n` valid strings; `arg` may be null.
#[no_mangle]
pub unsafe extern "C" fn afc_count_projected(
    fw: *const AfcFramework,
    sem: AfcSemantics,
    arg: *const c_char,
    projection: *const *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> AfcStatus {
    guard(|| {
        if out.is_null() || (projection.is_null() && n > 0) {
            return Err(Fail(AfcStatus::NullPointer, "out or projection is null".into()));
        }
        let af = framework(fw)?;
        let arg = opt_str_arg(arg, "arg")?;
        let mut names = Vec::with_capacity(n);
        for i in 0..n {
            names.push(str_arg(*projection.add(i), "projection entry")?.to_string());
        }
        let answer = solve(af, sem, Task::PCount, arg, Some(names))?;
        write_string(out, answer.to_string())
    })
}

unsafe fn decide(fw: *const AfcFramework, sem: AfcSemantics, arg: *const c_char, out: *mut bool, task: Task) -> AfcStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail(AfcStatus::NullPointer, "out is null".into()));
        }
        let af = framework(fw)?;
        let arg = str_arg(arg, "arg")?;
        match solve(af, sem, task, Some(arg), None)? {
            Answer::Decision(b) => {
                *out = b;
                Ok(())
            }
            other => Err(Fail(AfcStatus::Internal, format!("unexpected answer {other}"))),
        }
    })
}

/// Whether some extension contains `arg`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn afc_credulous(
    fw: *const AfcFramework,
    sem: AfcSemantics,
    arg: *const c_char,
    out: *mut bool,
) -> AfcStatus {
    decide(fw, sem, arg, out, Task::Cred)
}

/// Whether every extension contains `arg` (true when there are none).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn afc_skeptical(
    fw: *const AfcFramework,
    sem: AfcSemantics,
    arg: *const c_char,
    out: *mut bool,
) -> AfcStatus {
    decide(fw, sem, arg, out, Task::Skep)
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn afc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn afc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn afc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
