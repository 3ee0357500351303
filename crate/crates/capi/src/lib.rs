//! C ABI for the superext library.
//!
//! Handles are opaque pointers owned by the caller and released with the
//! matching `_free` function. Every fallible call returns an [`SxStatus`];
//! outputs are written through pointers only on `SX_OK`. String outputs are
//! copied NUL-terminated into a caller buffer and truncated if it is too
//! small. All entry points catch panics and report `SX_INTERNAL_ERROR`
//! instead of unwinding across the FFI boundary.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use superext::groups::{self, FiniteGroup};
use superext::lambdaenum::count_lambda;
use superext::lambdaop::{build_lambda, LambdaSemigroup};
use superext::morphisms::{automorphisms_seeded, AutGroup};
use superext::structure::{
    idempotents, maximal_ideal, translation_orbits, zero_element, SemigroupTable,
};
use superext::Error;

/// ABI version of this header/library pair.
pub const SX_ABI_VERSION: u32 = 1;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SxStatus {
    SxOk = 0,
    SxInvalidArgument = 1,
    SxTooLarge = 2,
    SxNotFound = 3,
    SxIoError = 4,
    SxCorruptData = 5,
    SxInternalError = 6,
}

fn status_of(err: &Error) -> SxStatus {
    match err {
        Error::GroundTooLarge { .. } | Error::OrderTooLarge { .. } => SxStatus::SxTooLarge,
        Error::Io(_) => SxStatus::SxIoError,
        Error::CorruptCache(_) => SxStatus::SxCorruptData,
        Error::NotMaximal | Error::NotAnAutomorphism | Error::NotAssociative { .. } => {
            SxStatus::SxInternalError
        }
        _ => SxStatus::SxInvalidArgument,
    }
}

/// Opaque finite group handle.
pub struct SxGroup {
    inner: FiniteGroup,
}

/// Opaque λ(G) handle: the semigroup plus cached analysis.
pub struct SxLambda {
    inner: LambdaSemigroup,
    auts: Option<AutGroup>,
}

fn guard<F: FnOnce() -> SxStatus>(f: F) -> SxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => SxStatus::SxInternalError,
    }
}

/// Copy `s` NUL-terminated into `buf` (truncating), if the buffer is usable.
unsafe fn write_str(s: &str, buf: *mut c_char, buf_len: usize) -> SxStatus {
    if buf.is_null() || buf_len == 0 {
        return SxStatus::SxInvalidArgument;
    }
    let bytes = s.as_bytes();
    let n = bytes.len().min(buf_len - 1);
    std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, n);
    *buf.add(n) = 0;
    SxStatus::SxOk
}

/// ABI version of the loaded library.
#[no_mangle]
pub extern "C" fn sx_abi_version() -> u32 {
    SX_ABI_VERSION
}

/// λ(n): the number of maximal linked families on an n-element set (n ≤ 7).
///
/// # Safety
/// `out_count` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_count_lambda(n: u8, workers: u32, out_count: *mut u64) -> SxStatus {
    if out_count.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| match count_lambda(n as usize, workers.max(1) as usize) {
        Ok(c) => {
            *out_count = c;
            SxStatus::SxOk
        }
        Err(e) => status_of(&e),
    })
}

/// The cyclic group of order n.
///
/// # Safety
/// `out` must be a valid pointer; the result must be freed with
/// [`sx_group_free`].
#[no_mangle]
pub unsafe extern "C" fn sx_group_cyclic(n: u8, out: *mut *mut SxGroup) -> SxStatus {
    if out.is_null() || n == 0 {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| {
        let group = groups::make_cyclic(n as usize);
        *out = Box::into_raw(Box::new(SxGroup { inner: group }));
        SxStatus::SxOk
    })
}

/// The Klein four-group C₂×C₂.
///
/// # Safety
/// As [`sx_group_cyclic`].
#[no_mangle]
pub unsafe extern "C" fn sx_group_klein4(out: *mut *mut SxGroup) -> SxStatus {
    if out.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| {
        *out = Box::into_raw(Box::new(SxGroup {
            inner: groups::klein4(),
        }));
        SxStatus::SxOk
    })
}

/// The symmetric group on k points (k ≤ 5).
///
/// # Safety
/// As [`sx_group_cyclic`].
#[no_mangle]
pub unsafe extern "C" fn sx_group_symmetric(k: u8, out: *mut *mut SxGroup) -> SxStatus {
    if out.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| match groups::symmetric(k as usize) {
        Ok(group) => {
            *out = Box::into_raw(Box::new(SxGroup { inner: group }));
            SxStatus::SxOk
        }
        Err(e) => status_of(&e),
    })
}

/// A group from a row-major Cayley table of `order`×`order` entries.
///
/// # Safety
/// `table` must point to `order*order` readable entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sx_group_from_table(
    order: u32,
    table: *const u32,
    out: *mut *mut SxGroup,
) -> SxStatus {
    if out.is_null() || table.is_null() || order == 0 {
        return SxStatus::SxInvalidArgument;
    }
    let len = (order as usize) * (order as usize);
    let flat: Vec<usize> = std::slice::from_raw_parts(table, len)
        .iter()
        .map(|&e| e as usize)
        .collect();
    guard(|| match FiniteGroup::from_flat_table(order as usize, flat) {
        Ok(group) => {
            *out = Box::into_raw(Box::new(SxGroup { inner: group }));
            SxStatus::SxOk
        }
        Err(e) => status_of(&e),
    })
}

/// # Safety
/// `g` must be a live handle from this library (or null, a no-op).
#[no_mangle]
pub unsafe extern "C" fn sx_group_free(g: *mut SxGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_group_order(g: *const SxGroup) -> u32 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.order() as u32
}

/// Catalog name of the group ("C4", "C2xC2", "S4", … or "unknown").
///
/// # Safety
/// `g` must be a live handle; `buf` must hold `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn sx_group_name(
    g: *const SxGroup,
    buf: *mut c_char,
    buf_len: usize,
) -> SxStatus {
    if g.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| {
        let name = groups::identify(&(*g).inner);
        write_str(&name, buf, buf_len)
    })
}

/// Build λ(G) for a group of order ≤ 5.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid; the result must be freed
/// with [`sx_lambda_free`].
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_build(g: *const SxGroup, out: *mut *mut SxLambda) -> SxStatus {
    if g.is_null() || out.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| match build_lambda((*g).inner.clone()) {
        Ok(lambda) => {
            *out = Box::into_raw(Box::new(SxLambda {
                inner: lambda,
                auts: None,
            }));
            SxStatus::SxOk
        }
        Err(e) => status_of(&e),
    })
}

/// # Safety
/// `l` must be a live handle from this library (or null, a no-op).
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_free(l: *mut SxLambda) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Number of elements of λ(G).
///
/// # Safety
/// `l` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_size(l: *const SxLambda) -> u32 {
    if l.is_null() {
        return 0;
    }
    (*l).inner.size() as u32
}

/// Product of elements i and j (λ indices).
///
/// # Safety
/// `l` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_product(
    l: *const SxLambda,
    i: u32,
    j: u32,
    out: *mut u32,
) -> SxStatus {
    if l.is_null() || out.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    let lambda = &(*l).inner;
    let (i, j) = (i as usize, j as usize);
    if i >= lambda.size() || j >= lambda.size() {
        return SxStatus::SxInvalidArgument;
    }
    *out = lambda.mul(i, j) as u32;
    SxStatus::SxOk
}

/// λ index of the principal ultrafilter at group element `g`.
///
/// # Safety
/// `l` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_principal_index(
    l: *const SxLambda,
    g: u32,
    out: *mut u32,
) -> SxStatus {
    if l.is_null() || out.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    let lambda = &(*l).inner;
    if g as usize >= lambda.group().order() {
        return SxStatus::SxInvalidArgument;
    }
    *out = lambda.principal_index(g as usize) as u32;
    SxStatus::SxOk
}

/// λ index of the zero element, if the semigroup has one
/// (`SX_NOT_FOUND` otherwise).
///
/// # Safety
/// `l` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_zero(l: *const SxLambda, out: *mut u32) -> SxStatus {
    if l.is_null() || out.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| {
        let table = SemigroupTable::from_lambda(&(*l).inner);
        match zero_element(&table) {
            Some(z) => {
                *out = z as u32;
                SxStatus::SxOk
            }
            None => SxStatus::SxNotFound,
        }
    })
}

/// Number of idempotents of λ(G).
///
/// # Safety
/// `l` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_idempotent_count(l: *const SxLambda) -> u32 {
    if l.is_null() {
        return 0;
    }
    let table = SemigroupTable::from_lambda(&(*l).inner);
    idempotents(&table).len() as u32
}

/// Number of orbits of the left G-action on λ(G).
///
/// # Safety
/// `l` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_orbit_count(l: *const SxLambda) -> u32 {
    if l.is_null() {
        return 0;
    }
    translation_orbits(&(*l).inner).len() as u32
}

/// Size of the unique maximal proper ideal (`SX_NOT_FOUND` when none, e.g.
/// when λ(G) is a group).
///
/// # Safety
/// `l` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_maximal_ideal_size(
    l: *const SxLambda,
    out: *mut u32,
) -> SxStatus {
    if l.is_null() || out.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| {
        let table = SemigroupTable::from_lambda(&(*l).inner);
        match maximal_ideal(&table) {
            Some(ideal) => {
                *out = ideal.len() as u32;
                SxStatus::SxOk
            }
            None => SxStatus::SxNotFound,
        }
    })
}

/// Display label of element `i` ("△", "2Θ+2", …).
///
/// # Safety
/// `l` must be a live handle; `buf` must hold `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_element_label(
    l: *const SxLambda,
    i: u32,
    buf: *mut c_char,
    buf_len: usize,
) -> SxStatus {
    if l.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    let lambda = &(*l).inner;
    if i as usize >= lambda.size() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| write_str(&lambda.display(i as usize), buf, buf_len))
}

/// Order and catalog name of Aut(λ(G)), computed on first call and cached
/// on the handle.
///
/// # Safety
/// `l` must be a live, uniquely held handle; `out_order` must be valid;
/// `name_buf` must hold `name_len` writable bytes (pass null/0 to skip the
/// name).
#[no_mangle]
pub unsafe extern "C" fn sx_lambda_aut(
    l: *mut SxLambda,
    out_order: *mut u64,
    name_buf: *mut c_char,
    name_len: usize,
) -> SxStatus {
    if l.is_null() || out_order.is_null() {
        return SxStatus::SxInvalidArgument;
    }
    guard(|| {
        let handle = &mut *l;
        if handle.auts.is_none() {
            match automorphisms_seeded(&handle.inner) {
                Ok(auts) => handle.auts = Some(auts),
                Err(e) => return status_of(&e),
            }
        }
        let auts = handle.auts.as_ref().unwrap();
        *out_order = auts.len() as u64;
        if !name_buf.is_null() && name_len > 0 {
            return write_str(auts.name(), name_buf, name_len);
        }
        SxStatus::SxOk
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn count_through_ffi() {
        let mut count = 0u64;
        let status = unsafe { sx_count_lambda(6, 2, &mut count) };
        assert_eq!(status, SxStatus::SxOk);
        assert_eq!(count, 2646);

        let status = unsafe { sx_count_lambda(9, 1, &mut count) };
        assert_eq!(status, SxStatus::SxTooLarge);
        assert_eq!(
            unsafe { sx_count_lambda(3, 1, ptr::null_mut()) },
            SxStatus::SxInvalidArgument
        );
    }

    #[test]
    fn group_and_lambda_lifecycle() {
        unsafe {
            let mut group: *mut SxGroup = ptr::null_mut();
            assert_eq!(sx_group_cyclic(4, &mut group), SxStatus::SxOk);
            assert_eq!(sx_group_order(group), 4);

            let mut name = [0 as c_char; 16];
            assert_eq!(
                sx_group_name(group, name.as_mut_ptr(), name.len()),
                SxStatus::SxOk
            );
            let name_str = std::ffi::CStr::from_ptr(name.as_ptr())
                .to_string_lossy()
                .into_owned();
            assert_eq!(name_str, "C4");

            let mut lambda: *mut SxLambda = ptr::null_mut();
            assert_eq!(sx_lambda_build(group, &mut lambda), SxStatus::SxOk);
            assert_eq!(sx_lambda_size(lambda), 12);
            assert_eq!(sx_lambda_idempotent_count(lambda), 2);
            assert_eq!(sx_lambda_orbit_count(lambda), 3);

            let mut zero = 0u32;
            assert_eq!(sx_lambda_zero(lambda, &mut zero), SxStatus::SxNotFound);

            let mut ideal = 0u32;
            assert_eq!(
                sx_lambda_maximal_ideal_size(lambda, &mut ideal),
                SxStatus::SxOk
            );
            assert_eq!(ideal, 8);

            // Principal embedding is a homomorphism through the ABI surface.
            let mut p1 = 0u32;
            let mut p3 = 0u32;
            let mut prod = 0u32;
            assert_eq!(
                sx_lambda_principal_index(lambda, 1, &mut p1),
                SxStatus::SxOk
            );
            assert_eq!(
                sx_lambda_principal_index(lambda, 3, &mut p3),
                SxStatus::SxOk
            );
            assert_eq!(sx_lambda_product(lambda, p1, p3, &mut prod), SxStatus::SxOk);
            let mut p0 = 0u32;
            assert_eq!(
                sx_lambda_principal_index(lambda, 0, &mut p0),
                SxStatus::SxOk
            );
            assert_eq!(prod, p0);

            let mut order = 0u64;
            let mut aut_name = [0 as c_char; 16];
            assert_eq!(
                sx_lambda_aut(lambda, &mut order, aut_name.as_mut_ptr(), 16),
                SxStatus::SxOk
            );
            assert_eq!(order, 4);
            let aut_str = std::ffi::CStr::from_ptr(aut_name.as_ptr())
                .to_string_lossy()
                .into_owned();
            assert_eq!(aut_str, "C2xC2");

            sx_lambda_free(lambda);
            sx_group_free(group);
        }
    }

    #[test]
    fn zero_found_for_c5() {
        unsafe {
            let mut group: *mut SxGroup = ptr::null_mut();
            assert_eq!(sx_group_cyclic(5, &mut group), SxStatus::SxOk);
            let mut lambda: *mut SxLambda = ptr::null_mut();
            assert_eq!(sx_lambda_build(group, &mut lambda), SxStatus::SxOk);
            assert_eq!(sx_lambda_size(lambda), 81);

            let mut zero = 0u32;
            assert_eq!(sx_lambda_zero(lambda, &mut zero), SxStatus::SxOk);
            let mut label = [0 as c_char; 16];
            assert_eq!(
                sx_lambda_element_label(lambda, zero, label.as_mut_ptr(), 16),
                SxStatus::SxOk
            );
            let label_str = std::ffi::CStr::from_ptr(label.as_ptr())
                .to_string_lossy()
                .into_owned();
            assert_eq!(label_str, "Z");

            sx_lambda_free(lambda);
            sx_group_free(group);
        }
    }

    #[test]
    fn from_table_validates() {
        unsafe {
            let bad = [0u32, 0, 1, 1];
            let mut group: *mut SxGroup = ptr::null_mut();
            assert_eq!(
                sx_group_from_table(2, bad.as_ptr(), &mut group),
                SxStatus::SxInvalidArgument
            );

            let klein = [0u32, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0];
            assert_eq!(
                sx_group_from_table(4, klein.as_ptr(), &mut group),
                SxStatus::SxOk
            );
            let mut lambda: *mut SxLambda = ptr::null_mut();
            assert_eq!(sx_lambda_build(group, &mut lambda), SxStatus::SxOk);
            let mut order = 0u64;
            assert_eq!(
                sx_lambda_aut(lambda, &mut order, ptr::null_mut(), 0),
                SxStatus::SxOk
            );
            assert_eq!(order, 24);
            sx_lambda_free(lambda);
            sx_group_free(group);
        }
    }

    #[test]
    fn oversize_group_rejected_at_build() {
        unsafe {
            let mut group: *mut SxGroup = ptr::null_mut();
            assert_eq!(sx_group_cyclic(6, &mut group), SxStatus::SxOk);
            let mut lambda: *mut SxLambda = ptr::null_mut();
            assert_eq!(sx_lambda_build(group, &mut lambda), SxStatus::SxTooLarge);
            sx_group_free(group);
        }
    }
}
