//! C ABI for the defring engine: opaque handles, status codes, and a
//! thread-local last-error message. Every entry point catches panics and
//! reports them as a status instead of unwinding across the boundary.
//!
//! Ownership rules: handles returned through `out` parameters are owned by the
//! caller and released with the matching `_free` function; strings returned
//! through `out` parameters are released with `defring_string_free`. Pointer
//! arguments must be valid for the call, as usual for a C API.

#![allow(clippy::missing_safety_doc)]

use defring::defring::{run_full_verification, Corruption, DeformationCase, RunOptions};
use defring::groebner::{buchberger, Ideal};
use defring::hilbert::{self, Colength, Dimension};
use defring::local;
use defring::poly::{MonomialOrder, Polynomial, Ring};
use defring::FieldDescriptor;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of every fallible call. `Ok` is zero; anything else leaves a
/// message retrievable with `defring_last_error_message`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefringStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    ParseError = 3,
    MathError = 4,
    ClaimFailed = 5,
    Panic = 6,
}

/// Monomial order selector for basis computations.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefringOrder {
    Lex = 0,
    DegRevLex = 1,
    /// Local order; basis computations use the Mora standard-basis algorithm.
    NegDegRevLex = 2,
}

pub struct DefringRing {
    inner: Ring,
}

pub struct DefringPolynomial {
    inner: Polynomial,
}

pub struct DefringIdeal {
    inner: Ideal,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(msg).ok();
    });
}

fn guard<F: FnOnce() -> DefringStatus>(f: F) -> DefringStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic in defring".to_string());
            set_error(msg);
            DefringStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, DefringStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(DefringStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        DefringStatus::InvalidArgument
    })
}

fn give_string(s: String, out: *mut *mut c_char) -> DefringStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            DefringStatus::Ok
        }
        Err(_) => {
            set_error("string contains an interior NUL byte");
            DefringStatus::InvalidArgument
        }
    }
}

/// Version of the engine, as a static string (do not free).
#[no_mangle]
pub extern "C" fn defring_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// The last error message on this thread, or NULL. Free the result with
/// `defring_string_free`.
#[no_mangle]
pub extern "C" fn defring_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        None => std::ptr::null_mut(),
        Some(c) => c.clone().into_raw(),
    })
}

/// Free a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn defring_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Create a polynomial ring. `characteristic` is 0 for the rationals or an
/// odd prime; `vars` points to `nvars` NUL-terminated variable names.
#[no_mangle]
pub unsafe extern "C" fn defring_ring_new(
    characteristic: u64,
    vars: *const *const c_char,
    nvars: usize,
    out: *mut *mut DefringRing,
) -> DefringStatus {
    guard(|| {
        if out.is_null() || (vars.is_null() && nvars > 0) {
            set_error("null argument");
            return DefringStatus::NullArgument;
        }
        let field = match FieldDescriptor::new(characteristic) {
            Ok(f) => f,
            Err(e) => {
                set_error(e.to_string());
                return DefringStatus::InvalidArgument;
            }
        };
        let mut names = Vec::with_capacity(nvars);
        for i in 0..nvars {
            match read_str(*vars.add(i)) {
                Ok(s) => names.push(s),
                Err(status) => return status,
            }
        }
        match Ring::new(field, &names) {
            Ok(ring) => {
                *out = Box::into_raw(Box::new(DefringRing { inner: ring }));
                DefringStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                DefringStatus::InvalidArgument
            }
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn defring_ring_free(ring: *mut DefringRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Parse a polynomial in the ring's grammar.
#[no_mangle]
pub unsafe extern "C" fn defring_poly_parse(
    ring: *const DefringRing,
    text: *const c_char,
    out: *mut *mut DefringPolynomial,
) -> DefringStatus {
    guard(|| {
        if ring.is_null() || out.is_null() {
            set_error("null argument");
            return DefringStatus::NullArgument;
        }
        let src = match read_str(text) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match (*ring).inner.parse(src) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(DefringPolynomial { inner: p }));
                DefringStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                DefringStatus::ParseError
            }
        }
    })
}

/// Canonical text form of a polynomial; free with `defring_string_free`.
#[no_mangle]
pub unsafe extern "C" fn defring_poly_to_string(
    poly: *const DefringPolynomial,
    out: *mut *mut c_char,
) -> DefringStatus {
    guard(|| {
        if poly.is_null() || out.is_null() {
            set_error("null argument");
            return DefringStatus::NullArgument;
        }
        give_string((*poly).inner.to_string(), out)
    })
}

#[no_mangle]
pub unsafe extern "C" fn defring_poly_free(poly: *mut DefringPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Build an ideal from `npolys` polynomial handles (which stay owned by the
/// caller).
#[no_mangle]
pub unsafe extern "C" fn defring_ideal_new(
    ring: *const DefringRing,
    polys: *const *const DefringPolynomial,
    npolys: usize,
    out: *mut *mut DefringIdeal,
) -> DefringStatus {
    guard(|| {
        if ring.is_null() || out.is_null() || (polys.is_null() && npolys > 0) {
            set_error("null argument");
            return DefringStatus::NullArgument;
        }
        let mut gens = Vec::with_capacity(npolys);
        for i in 0..npolys {
            let p = *polys.add(i);
            if p.is_null() {
                set_error("null polynomial handle");
                return DefringStatus::NullArgument;
            }
            gens.push((*p).inner.clone());
        }
        match Ideal::new(&(*ring).inner, gens) {
            Ok(ideal) => {
                *out = Box::into_raw(Box::new(DefringIdeal { inner: ideal }));
                DefringStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                DefringStatus::InvalidArgument
            }
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn defring_ideal_free(ideal: *mut DefringIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of stored generators.
#[no_mangle]
pub unsafe extern "C" fn defring_ideal_size(ideal: *const DefringIdeal) -> usize {
    if ideal.is_null() {
        return 0;
    }
    (*ideal).inner.generators().len()
}

/// Copy out one generator as a fresh polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn defring_ideal_generator(
    ideal: *const DefringIdeal,
    index: usize,
    out: *mut *mut DefringPolynomial,
) -> DefringStatus {
    guard(|| {
        if ideal.is_null() || out.is_null() {
            set_error("null argument");
            return DefringStatus::NullArgument;
        }
        match (*ideal).inner.generators().get(index) {
            Some(g) => {
                *out = Box::into_raw(Box::new(DefringPolynomial { inner: g.clone() }));
                DefringStatus::Ok
            }
            None => {
                set_error(format!("generator index {index} out of range"));
                DefringStatus::InvalidArgument
            }
        }
    })
}

/// Reduced basis of the ideal under the requested order: a Groebner basis for
/// the global orders, a Mora standard basis for `NegDegRevLex`.
#[no_mangle]
pub unsafe extern "C" fn defring_groebner_basis(
    ideal: *const DefringIdeal,
    order: DefringOrder,
    out: *mut *mut DefringIdeal,
) -> DefringStatus {
    guard(|| {
        if ideal.is_null() || out.is_null() {
            set_error("null argument");
            return DefringStatus::NullArgument;
        }
        let input = &(*ideal).inner;
        let basis = match order {
            DefringOrder::Lex | DefringOrder::DegRevLex => {
                let o = if order == DefringOrder::Lex {
                    MonomialOrder::Lex
                } else {
                    MonomialOrder::DegRevLex
                };
                match buchberger(input, &o) {
                    Ok(gb) => gb.basis().to_vec(),
                    Err(e) => {
                        set_error(e.to_string());
                        return DefringStatus::MathError;
                    }
                }
            }
            DefringOrder::NegDegRevLex => {
                match local::standard_basis(input, &local::MoraOptions::default()) {
                    Ok(sb) => sb.basis().to_vec(),
                    Err(e) => {
                        set_error(e.to_string());
                        return DefringStatus::MathError;
                    }
                }
            }
        };
        match Ideal::new(input.ring(), basis) {
            Ok(result) => {
                *out = Box::into_raw(Box::new(DefringIdeal { inner: result }));
                DefringStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                DefringStatus::MathError
            }
        }
    })
}

/// Dimension and multiplicity of the quotient by the ideal.
///
/// Writes the Krull dimension to `out_dim` (-1 for the unit ideal) and to
/// `out_multiplicity` the Hilbert-Samuel multiplicity, or the colength when
/// the dimension is zero. With `local_at_origin` the computation routes
/// through the tangent cone at the origin.
#[no_mangle]
pub unsafe extern "C" fn defring_dimension_multiplicity(
    ideal: *const DefringIdeal,
    local_at_origin: bool,
    out_dim: *mut i64,
    out_multiplicity: *mut u64,
) -> DefringStatus {
    guard(|| {
        if ideal.is_null() || out_dim.is_null() || out_multiplicity.is_null() {
            set_error("null argument");
            return DefringStatus::NullArgument;
        }
        let input = &(*ideal).inner;
        let work = if local_at_origin {
            match local::tangent_cone(input) {
                Ok(tc) => tc,
                Err(e) => {
                    set_error(e.to_string());
                    return DefringStatus::MathError;
                }
            }
        } else {
            input.clone()
        };
        let dim = match hilbert::krull_dim(&work) {
            Ok(d) => d,
            Err(e) => {
                set_error(e.to_string());
                return DefringStatus::MathError;
            }
        };
        match dim {
            Dimension::EmptySet => {
                *out_dim = -1;
                *out_multiplicity = 0;
                DefringStatus::Ok
            }
            Dimension::Dim(0) => {
                *out_dim = 0;
                match hilbert::colength(&work) {
                    Ok(Colength::Finite(l)) => {
                        *out_multiplicity = l;
                        DefringStatus::Ok
                    }
                    Ok(Colength::Infinite) | Err(_) => {
                        set_error("colength of a zero-dimensional quotient must be finite");
                        DefringStatus::MathError
                    }
                }
            }
            Dimension::Dim(d) => {
                *out_dim = d as i64;
                match hilbert::multiplicity_graded(&work) {
                    Ok(e) => {
                        *out_multiplicity = e;
                        DefringStatus::Ok
                    }
                    Err(e) => {
                        set_error(format!("{e}"));
                        DefringStatus::MathError
                    }
                }
            }
        }
    })
}

fn parse_cases(name: &str) -> Option<Vec<DeformationCase>> {
    Some(match name {
        "all" => DeformationCase::ALL.to_vec(),
        "ramified" => vec![DeformationCase::Ramified],
        "indecomposable" | "unramified-indecomposable" => {
            vec![DeformationCase::UnramifiedIndecomposable]
        }
        "split" => vec![DeformationCase::Split],
        _ => return None,
    })
}

/// Run the full verification pipeline.
///
/// `case` is one of "all", "ramified", "indecomposable", "split"; `primes`
/// points to `nprimes` odd primes (NULL selects the default 3, 5, 7, 13).
/// The JSON report is written to `out_json` (free with
/// `defring_string_free`) and the overall verdict to `out_verified`.
/// Returns `ClaimFailed` when the pipeline ran but a claim failed.
#[no_mangle]
pub unsafe extern "C" fn defring_verify(
    case: *const c_char,
    primes: *const u64,
    nprimes: usize,
    corrupt_i3_sign: bool,
    out_json: *mut *mut c_char,
    out_verified: *mut bool,
) -> DefringStatus {
    guard(|| {
        if out_json.is_null() || out_verified.is_null() {
            set_error("null argument");
            return DefringStatus::NullArgument;
        }
        let case_name = match read_str(case) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let cases = match parse_cases(case_name) {
            Some(c) => c,
            None => {
                set_error(format!("unknown case `{case_name}`"));
                return DefringStatus::InvalidArgument;
            }
        };
        let mut primes: Vec<u64> = if primes.is_null() || nprimes == 0 {
            vec![3, 5, 7, 13]
        } else {
            std::slice::from_raw_parts(primes, nprimes).to_vec()
        };
        primes.sort_unstable();
        primes.dedup();
        for &p in &primes {
            if FieldDescriptor::prime_field(p).is_err() {
                set_error(format!("p must be an odd prime, got {p}"));
                return DefringStatus::InvalidArgument;
            }
        }
        let report = run_full_verification(&RunOptions {
            cases,
            primes,
            corruption: if corrupt_i3_sign {
                Some(Corruption::FlipSignI3Middle)
            } else {
                None
            },
            ..RunOptions::default()
        });
        let verified = report.is_verified();
        *out_verified = verified;
        let status = give_string(report.to_json(), out_json);
        if status != DefringStatus::Ok {
            return status;
        }
        if verified {
            DefringStatus::Ok
        } else {
            set_error("verification failed; see the report for witnesses");
            DefringStatus::ClaimFailed
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    unsafe fn make_ring(characteristic: u64, vars: &[&str]) -> *mut DefringRing {
        let names: Vec<CString> = vars.iter().map(|v| CString::new(*v).unwrap()).collect();
        let ptrs: Vec<*const c_char> = names.iter().map(|c| c.as_ptr()).collect();
        let mut ring: *mut DefringRing = ptr::null_mut();
        let status = defring_ring_new(characteristic, ptrs.as_ptr(), ptrs.len(), &mut ring);
        assert_eq!(status, DefringStatus::Ok);
        ring
    }

    unsafe fn parse(ring: *const DefringRing, src: &str) -> *mut DefringPolynomial {
        let text = CString::new(src).unwrap();
        let mut poly: *mut DefringPolynomial = ptr::null_mut();
        let status = defring_poly_parse(ring, text.as_ptr(), &mut poly);
        assert_eq!(status, DefringStatus::Ok);
        poly
    }

    unsafe fn take_string(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let out = CStr::from_ptr(s).to_str().unwrap().to_string();
        defring_string_free(s);
        out
    }

    #[test]
    fn ring_poly_roundtrip() {
        unsafe {
            let ring = make_ring(0, &["x", "y"]);
            let poly = parse(ring, "x^2 - y^2");
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(defring_poly_to_string(poly, &mut s), DefringStatus::Ok);
            assert_eq!(take_string(s), "x^2 - y^2");
            defring_poly_free(poly);
            defring_ring_free(ring);
        }
    }

    #[test]
    fn invalid_characteristic_sets_an_error() {
        unsafe {
            let names = [CString::new("x").unwrap()];
            let ptrs = [names[0].as_ptr()];
            let mut ring: *mut DefringRing = ptr::null_mut();
            let status = defring_ring_new(4, ptrs.as_ptr(), 1, &mut ring);
            assert_eq!(status, DefringStatus::InvalidArgument);
            let msg = take_string(defring_last_error_message());
            assert!(msg.contains("odd prime"), "{msg}");
        }
    }

    #[test]
    fn parse_error_status() {
        unsafe {
            let ring = make_ring(0, &["x"]);
            let text = CString::new("x + ").unwrap();
            let mut poly: *mut DefringPolynomial = ptr::null_mut();
            assert_eq!(
                defring_poly_parse(ring, text.as_ptr(), &mut poly),
                DefringStatus::ParseError
            );
            defring_ring_free(ring);
        }
    }

    #[test]
    fn groebner_basis_through_the_abi() {
        unsafe {
            let ring = make_ring(0, &["x", "y", "z"]);
            let f = parse(ring, "y - x^2");
            let g = parse(ring, "z - x^3");
            let polys = [f as *const DefringPolynomial, g as *const DefringPolynomial];
            let mut ideal: *mut DefringIdeal = ptr::null_mut();
            assert_eq!(
                defring_ideal_new(ring, polys.as_ptr(), 2, &mut ideal),
                DefringStatus::Ok
            );
            let mut basis: *mut DefringIdeal = ptr::null_mut();
            assert_eq!(
                defring_groebner_basis(ideal, DefringOrder::Lex, &mut basis),
                DefringStatus::Ok
            );
            let n = defring_ideal_size(basis);
            assert!(n >= 3);
            let mut found = false;
            for i in 0..n {
                let mut gen: *mut DefringPolynomial = ptr::null_mut();
                assert_eq!(
                    defring_ideal_generator(basis, i, &mut gen),
                    DefringStatus::Ok
                );
                let mut s: *mut c_char = ptr::null_mut();
                assert_eq!(defring_poly_to_string(gen, &mut s), DefringStatus::Ok);
                if take_string(s) == "y^3 - z^2" {
                    found = true;
                }
                defring_poly_free(gen);
            }
            assert!(found, "lex basis contains the plane relation");
            defring_ideal_free(basis);
            defring_ideal_free(ideal);
            defring_poly_free(f);
            defring_poly_free(g);
            defring_ring_free(ring);
        }
    }

    #[test]
    fn dimension_and_multiplicity_through_the_abi() {
        unsafe {
            let ring = make_ring(0, &["x", "y"]);
            let f = parse(ring, "x^2");
            let polys = [f as *const DefringPolynomial];
            let mut ideal: *mut DefringIdeal = ptr::null_mut();
            assert_eq!(
                defring_ideal_new(ring, polys.as_ptr(), 1, &mut ideal),
                DefringStatus::Ok
            );
            let mut dim = -2i64;
            let mut mult = 0u64;
            assert_eq!(
                defring_dimension_multiplicity(ideal, false, &mut dim, &mut mult),
                DefringStatus::Ok
            );
            assert_eq!((dim, mult), (1, 2));
            defring_ideal_free(ideal);
            defring_poly_free(f);
            defring_ring_free(ring);
        }
    }

    #[test]
    fn verify_through_the_abi() {
        unsafe {
            let case = CString::new("split").unwrap();
            let primes = [5u64];
            let mut json: *mut c_char = ptr::null_mut();
            let mut verified = false;
            let status = defring_verify(
                case.as_ptr(),
                primes.as_ptr(),
                1,
                false,
                &mut json,
                &mut verified,
            );
            assert_eq!(status, DefringStatus::Ok);
            assert!(verified);
            let text = take_string(json);
            assert!(text.contains("\"verdict\": \"verified\""));

            // the corrupted run reports failure through the status
            let mut json: *mut c_char = ptr::null_mut();
            let mut verified = true;
            let status = defring_verify(
                case.as_ptr(),
                primes.as_ptr(),
                1,
                true,
                &mut json,
                &mut verified,
            );
            assert_eq!(status, DefringStatus::ClaimFailed);
            assert!(!verified);
            let text = take_string(json);
            assert!(text.contains("\"verdict\": \"failed\""));

            let mut json: *mut c_char = ptr::null_mut();
            let mut verified = false;
            let bad = [2u64];
            let status = defring_verify(
                case.as_ptr(),
                bad.as_ptr(),
                1,
                false,
                &mut json,
                &mut verified,
            );
            assert_eq!(status, DefringStatus::InvalidArgument);
            let msg = take_string(defring_last_error_message());
            assert!(msg.contains("odd prime"));
        }
    }
}
