//! C ABI over `catalan-core`.
//!
//! Sequences and enumerators cross the boundary as opaque handles. Every
//! fallible call returns a [`CatalanStatus`]; on failure a description is
//! available from [`catalan_last_error_message`] on the same thread. Strings
//! returned through `char **` out-parameters are owned by the caller and must
//! be released with [`catalan_string_free`].
//!
//! The header `include/catalan.h` is generated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use catalan_core::counting::{self, Method};
use catalan_core::hub::{self, Family};
use catalan_core::sequence::{self, Sequences, SequenceError, DEFAULT_ENUMERATION_CAP};
use catalan_core::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalanStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input text does not parse or violates its family's invariants.
    MalformedInput = 3,
    /// A valid sequence lies outside a partial codec's image.
    DomainError = 4,
    /// An index or size is outside the supported range.
    OutOfRange = 5,
    /// The library panicked; this is a bug.
    Internal = 6,
}

/// Formula used by [`catalan_count`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalanMethod {
    Closed = 0,
    Convolution = 1,
    Linear = 2,
    Series = 3,
}

impl From<CatalanMethod> for Method {
    fn from(m: CatalanMethod) -> Self {
        match m {
            CatalanMethod::Closed => Method::Closed,
            CatalanMethod::Convolution => Method::Convolution,
            CatalanMethod::Linear => Method::Linear,
            CatalanMethod::Series => Method::Series,
        }
    }
}

/// A validated Catalan sequence.
pub struct CatalanSequence(sequence::CatalanSequence);

/// Lexicographic iterator over the sequences of one semilength.
pub struct CatalanEnumerator(Sequences);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: impl Into<Vec<u8>>) {
    let mut bytes = message.into();
    bytes.retain(|&b| b != 0);
    let message = CString::new(bytes).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = message);
}

struct Failure(CatalanStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            _ if e.is_domain_error() => CatalanStatus::DomainError,
            Error::Sequence(SequenceError::CapExceeded { .. })
            | Error::Sequence(SequenceError::IndexOutOfRange { .. }) => CatalanStatus::OutOfRange,
            _ => CatalanStatus::MalformedInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<SequenceError> for Failure {
    fn from(e: SequenceError) -> Self {
        Error::from(e).into()
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CatalanStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CatalanStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            CatalanStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(CatalanStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CatalanStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure(CatalanStatus::NullArgument, format!("{what} is null")))
}

unsafe fn handle<'a>(p: *const CatalanSequence) -> Result<&'a sequence::CatalanSequence, Failure> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| Failure(CatalanStatus::NullArgument, "sequence is null".into()))
}

fn parse_family(name: &str) -> Result<Family, Failure> {
    name.parse::<Family>().map_err(Failure::from)
}

fn into_c_string(s: String) -> *mut c_char {
    // family texts and decimal numbers never contain NUL
    CString::new(s).expect("no interior NUL").into_raw()
}

fn new_handle(s: sequence::CatalanSequence) -> *mut CatalanSequence {
    Box::into_raw(Box::new(CatalanSequence(s)))
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn catalan_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn catalan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a `'0'`/`'1'` string.
///
/// # Safety
/// `bits` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_sequence_parse(
    bits: *const c_char,
    out: *mut *mut CatalanSequence,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let s = read_str(bits, "bits")?.parse::<sequence::CatalanSequence>()?;
        *out = new_handle(s);
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn catalan_sequence_free(s: *mut CatalanSequence) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Half the length of the sequence; 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn catalan_sequence_semilength(s: *const CatalanSequence) -> usize {
    s.as_ref().map_or(0, |h| h.0.semilength())
}

/// # Safety
/// `s` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_sequence_to_string(
    s: *const CatalanSequence,
    out: *mut *mut c_char,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = into_c_string(handle(s)?.to_string());
        Ok(())
    })
}

/// Lexicographic rank as a decimal string.
///
/// # Safety
/// `s` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_sequence_rank(
    s: *const CatalanSequence,
    out: *mut *mut c_char,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = into_c_string(sequence::rank(handle(s)?).to_string());
        Ok(())
    })
}

/// Sequence of semilength `n` at the decimal rank `index`.
///
/// # Safety
/// `index` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_sequence_unrank(
    n: usize,
    index: *const c_char,
    out: *mut *mut CatalanSequence,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let text = read_str(index, "index")?;
        let k = text.parse().map_err(|_| {
            Failure(
                CatalanStatus::MalformedInput,
                format!("index {text:?} is not a decimal number"),
            )
        })?;
        *out = new_handle(sequence::unrank(n, &k)?);
        Ok(())
    })
}

/// Uniformly random sequence of semilength `n`, deterministic in `seed`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_sequence_random(
    n: usize,
    seed: u64,
    out: *mut *mut CatalanSequence,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = new_handle(sequence::random_uniform(n, seed));
        Ok(())
    })
}

/// `C_n` as a decimal string.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_count(
    n: usize,
    method: CatalanMethod,
    out: *mut *mut c_char,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = into_c_string(counting::catalan(n, method.into()).to_string());
        Ok(())
    })
}

/// Encodes `text`, written in `family`'s text form, into a sequence.
///
/// # Safety
/// `family` and `text` must be NUL-terminated strings and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_encode(
    family: *const c_char,
    text: *const c_char,
    out: *mut *mut CatalanSequence,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let family = parse_family(read_str(family, "family")?)?;
        *out = new_handle(hub::encode(family, read_str(text, "text")?)?);
        Ok(())
    })
}

/// Decodes a sequence into `family`'s text form.
///
/// # Safety
/// `s` must be a live handle, `family` a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_decode(
    s: *const CatalanSequence,
    family: *const c_char,
    out: *mut *mut c_char,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let family = parse_family(read_str(family, "family")?)?;
        *out = into_c_string(hub::decode(family, handle(s)?)?);
        Ok(())
    })
}

/// Converts `text` from family `from` to family `to`.
///
/// # Safety
/// All string arguments must be NUL-terminated and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_transcode(
    from: *const c_char,
    to: *const c_char,
    text: *const c_char,
    out: *mut *mut c_char,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let from = parse_family(read_str(from, "from")?)?;
        let to = parse_family(read_str(to, "to")?)?;
        *out = into_c_string(hub::transcode(from, to, read_str(text, "text")?)?);
        Ok(())
    })
}

/// Starts a lexicographic enumeration of semilength `n`; fails above the enumeration cap.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_enumerator_new(
    n: usize,
    out: *mut *mut CatalanEnumerator,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        if n > DEFAULT_ENUMERATION_CAP {
            return Err(SequenceError::CapExceeded {
                n,
                cap: DEFAULT_ENUMERATION_CAP,
            }
            .into());
        }
        *out = Box::into_raw(Box::new(CatalanEnumerator(sequence::iter_sequences(n))));
        Ok(())
    })
}

/// Writes the next sequence to `out`, or null once the enumeration is exhausted.
///
/// # Safety
/// `e` must be a live enumerator and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn catalan_enumerator_next(
    e: *mut CatalanEnumerator,
    out: *mut *mut CatalanSequence,
) -> CatalanStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let e = out_ptr(e, "enumerator")?;
        *out = e.0.next().map_or(ptr::null_mut(), new_handle);
        Ok(())
    })
}

/// # Safety
/// `e` must be null or an enumerator from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn catalan_enumerator_free(e: *mut CatalanEnumerator) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}
