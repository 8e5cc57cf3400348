//! C interface to the lexmat toolkit. Matrices and enumerators are opaque
//! handles created and released through paired functions; every fallible
//! call returns a [`LexmatStatus`] and writes results through out
//! pointers. Strings returned through out pointers are NUL terminated,
//! heap allocated, and must be released with [`lexmat_string_free`].
//!
//! Pointer arguments must be valid for the duration of the call; any
//! `const char *` must point at a NUL terminated buffer. Null handles are
//! rejected with `LEXMAT_STATUS_NULL_ARGUMENT` rather than dereferenced.

// Every entry point checks pointers for null before the dereference and
// documents the remaining validity contract above; keeping the functions
// non-unsafe is the deliberate shape of this interface.
#![allow(clippy::not_unsafe_ptr_arg_deref)]

use std::ffi::{c_char, c_int, CStr, CString};

use lexmat::{
    build_delta2, count_family, decompose_delta2, delta2_count, enumerate_family, fibonacci,
    gamma_n_minus_2_count, lambda2_count_formula, parse_matrix, BinaryMatrix, Composition,
    CountReport, EnumerateError, EnumerationConfig, Family, FamilyKind, MatrixError,
    MatrixStream, StructureError, FORMULA_LIMIT, MAX_WIDTH,
};

/// Result of every fallible call in this interface.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexmatStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Matrix text could not be parsed.
    ParseError = 3,
    /// An argument was outside the domain of the operation.
    InvalidArgument = 4,
    /// A size argument exceeded the supported range.
    OutOfRange = 5,
    /// The requested search is too large to run.
    TooLarge = 6,
    /// The matrix is not a block matrix of the k = 2 nonincreasing family.
    NotDelta2 = 7,
    /// The enumerator is exhausted.
    EndOfStream = 8,
    /// An output buffer was too small; consult the size query functions.
    BufferTooSmall = 9,
}

/// Which matrix family an operation refers to.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexmatFamily {
    /// Exactly k ones per row and column, no ordering constraint.
    Lambda = 0,
    /// Rows and columns nondecreasing in lexicographic order.
    Gamma = 1,
    /// Rows and columns nonincreasing in lexicographic order.
    Delta = 2,
}

impl LexmatFamily {
    fn kind(self) -> FamilyKind {
        match self {
            LexmatFamily::Lambda => FamilyKind::Lambda,
            LexmatFamily::Gamma => FamilyKind::Gamma,
            LexmatFamily::Delta => FamilyKind::Delta,
        }
    }
}

/// How a count is computed.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexmatCountMethod {
    /// Backtracking enumeration; works for every family.
    Enumeration = 0,
    /// Fibonacci recurrence; delta with k = 2 or gamma with k = n - 2.
    Structure = 1,
    /// Closed summation formula; lambda with k = 2 and n at most 30.
    Formula = 2,
}

/// An immutable binary matrix.
pub struct LexmatMatrix(BinaryMatrix);

/// A stream of matrices from one family, yielded in ascending row-code
/// order by [`lexmat_enumerator_next`].
pub struct LexmatEnumerator(MatrixStream);

fn matrix_status(e: &MatrixError) -> LexmatStatus {
    match e {
        MatrixError::BadCharacter { .. }
        | MatrixError::RaggedRows { .. }
        | MatrixError::EmptyInput
        | MatrixError::MultipleMatrices { .. } => LexmatStatus::ParseError,
        MatrixError::TooWide { .. }
        | MatrixError::TooTall { .. }
        | MatrixError::CodeOutOfRange { .. } => LexmatStatus::OutOfRange,
        MatrixError::NonSquare { .. } => LexmatStatus::InvalidArgument,
    }
}

fn enumerate_status(e: &EnumerateError) -> LexmatStatus {
    match e {
        EnumerateError::ZeroSize => LexmatStatus::InvalidArgument,
        EnumerateError::InfeasibleWidth { .. } => LexmatStatus::OutOfRange,
        EnumerateError::SearchTooLarge { .. } => LexmatStatus::TooLarge,
    }
}

fn structure_status(e: &StructureError) -> LexmatStatus {
    match e {
        StructureError::TooSmall { .. } => LexmatStatus::InvalidArgument,
        StructureError::TooLarge { .. } => LexmatStatus::TooLarge,
        StructureError::NotDelta2 => LexmatStatus::NotDelta2,
        StructureError::InvalidComposition(_) => LexmatStatus::InvalidArgument,
    }
}

fn give_matrix(out: *mut *mut LexmatMatrix, m: BinaryMatrix) -> LexmatStatus {
    unsafe { *out = Box::into_raw(Box::new(LexmatMatrix(m))) };
    LexmatStatus::Ok
}

fn give_string(out: *mut *mut c_char, s: String) -> LexmatStatus {
    // matrix text and decimal numerals never contain NUL
    let c = CString::new(s).expect("no interior NUL");
    unsafe { *out = c.into_raw() };
    LexmatStatus::Ok
}

/// Version of the library as a static string; do not free.
#[no_mangle]
pub extern "C" fn lexmat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Static description of a status code; do not free.
#[no_mangle]
pub extern "C" fn lexmat_status_message(status: LexmatStatus) -> *const c_char {
    let msg: &CStr = match status {
        LexmatStatus::Ok => c"ok",
        LexmatStatus::NullArgument => c"a required pointer argument was null",
        LexmatStatus::InvalidUtf8 => c"string argument was not valid UTF-8",
        LexmatStatus::ParseError => c"matrix text could not be parsed",
        LexmatStatus::InvalidArgument => c"argument outside the domain of the operation",
        LexmatStatus::OutOfRange => c"size argument exceeds the supported range",
        LexmatStatus::TooLarge => c"requested search is too large to run",
        LexmatStatus::NotDelta2 => c"matrix is not a k = 2 nonincreasing block matrix",
        LexmatStatus::EndOfStream => c"enumerator is exhausted",
        LexmatStatus::BufferTooSmall => c"output buffer too small",
    };
    msg.as_ptr()
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub extern "C" fn lexmat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses one matrix from text: lines of '0'/'1' characters, equal
/// length, at most 64 rows and 64 columns. Writes a new handle to `out`.
#[no_mangle]
pub extern "C" fn lexmat_matrix_parse(
    text: *const c_char,
    out: *mut *mut LexmatMatrix,
) -> LexmatStatus {
    if text.is_null() || out.is_null() {
        return LexmatStatus::NullArgument;
    }
    let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
        return LexmatStatus::InvalidUtf8;
    };
    match parse_matrix(text) {
        Ok(m) => give_matrix(out, m),
        Err(e) => matrix_status(&e),
    }
}

/// Builds a matrix from packed row codes: bit (n_cols - 1 - j) of
/// `codes[i]` is entry (i, j), so the first column is most significant.
#[no_mangle]
pub extern "C" fn lexmat_matrix_from_codes(
    codes: *const u64,
    n_rows: usize,
    n_cols: usize,
    out: *mut *mut LexmatMatrix,
) -> LexmatStatus {
    if codes.is_null() || out.is_null() {
        return LexmatStatus::NullArgument;
    }
    if n_rows == 0 {
        return LexmatStatus::InvalidArgument;
    }
    let codes = unsafe { std::slice::from_raw_parts(codes, n_rows) };
    match BinaryMatrix::from_row_codes(codes, n_cols) {
        Ok(m) => give_matrix(out, m),
        Err(e) => matrix_status(&e),
    }
}

/// Releases a matrix handle. Null is ignored.
#[no_mangle]
pub extern "C" fn lexmat_matrix_free(matrix: *mut LexmatMatrix) {
    if !matrix.is_null() {
        drop(unsafe { Box::from_raw(matrix) });
    }
}

/// Number of rows, or 0 if the handle is null.
#[no_mangle]
pub extern "C" fn lexmat_matrix_rows(matrix: *const LexmatMatrix) -> usize {
    unsafe { matrix.as_ref() }.map_or(0, |m| m.0.n_rows())
}

/// Number of columns, or 0 if the handle is null.
#[no_mangle]
pub extern "C" fn lexmat_matrix_cols(matrix: *const LexmatMatrix) -> usize {
    unsafe { matrix.as_ref() }.map_or(0, |m| m.0.n_cols())
}

/// Entry (i, j) as 0 or 1, or -1 if the handle is null or the index is
/// out of range.
#[no_mangle]
pub extern "C" fn lexmat_matrix_get(matrix: *const LexmatMatrix, i: usize, j: usize) -> c_int {
    match unsafe { matrix.as_ref() } {
        Some(m) if i < m.0.n_rows() && j < m.0.n_cols() => m.0.get(i, j) as c_int,
        _ => -1,
    }
}

/// Renders the matrix as NUL terminated text, one '0'/'1' line per row.
#[no_mangle]
pub extern "C" fn lexmat_matrix_to_text(
    matrix: *const LexmatMatrix,
    out: *mut *mut c_char,
) -> LexmatStatus {
    if out.is_null() {
        return LexmatStatus::NullArgument;
    }
    match unsafe { matrix.as_ref() } {
        Some(m) => give_string(out, m.0.to_text()),
        None => LexmatStatus::NullArgument,
    }
}

fn copy_codes(values: &[u64], buf: *mut u64, buf_len: usize) -> LexmatStatus {
    if buf.is_null() {
        return LexmatStatus::NullArgument;
    }
    if buf_len < values.len() {
        return LexmatStatus::BufferTooSmall;
    }
    unsafe { std::ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len()) };
    LexmatStatus::Ok
}

/// Copies the row codes x_1..x_n into `buf`, which must hold at least
/// `lexmat_matrix_rows` values.
#[no_mangle]
pub extern "C" fn lexmat_matrix_row_codes(
    matrix: *const LexmatMatrix,
    buf: *mut u64,
    buf_len: usize,
) -> LexmatStatus {
    match unsafe { matrix.as_ref() } {
        Some(m) => copy_codes(m.0.row_codes().values(), buf, buf_len),
        None => LexmatStatus::NullArgument,
    }
}

/// Copies the column codes y_1..y_m into `buf`, which must hold at least
/// `lexmat_matrix_cols` values.
#[no_mangle]
pub extern "C" fn lexmat_matrix_col_codes(
    matrix: *const LexmatMatrix,
    buf: *mut u64,
    buf_len: usize,
) -> LexmatStatus {
    match unsafe { matrix.as_ref() } {
        Some(m) => copy_codes(m.0.col_codes().values(), buf, buf_len),
        None => LexmatStatus::NullArgument,
    }
}

/// Writes the entrywise complement as a new handle.
#[no_mangle]
pub extern "C" fn lexmat_matrix_complement(
    matrix: *const LexmatMatrix,
    out: *mut *mut LexmatMatrix,
) -> LexmatStatus {
    if out.is_null() {
        return LexmatStatus::NullArgument;
    }
    match unsafe { matrix.as_ref() } {
        Some(m) => give_matrix(out, m.0.complement()),
        None => LexmatStatus::NullArgument,
    }
}

/// Writes the transpose as a new handle.
#[no_mangle]
pub extern "C" fn lexmat_matrix_transpose(
    matrix: *const LexmatMatrix,
    out: *mut *mut LexmatMatrix,
) -> LexmatStatus {
    if out.is_null() {
        return LexmatStatus::NullArgument;
    }
    match unsafe { matrix.as_ref() } {
        Some(m) => give_matrix(out, m.0.transpose()),
        None => LexmatStatus::NullArgument,
    }
}

/// Writes 1 to `out` when the matrix is square with exactly k ones in
/// every row and column. Non-square matrices are rejected.
#[no_mangle]
pub extern "C" fn lexmat_matrix_is_lambda(
    matrix: *const LexmatMatrix,
    k: usize,
    out: *mut bool,
) -> LexmatStatus {
    if out.is_null() {
        return LexmatStatus::NullArgument;
    }
    match unsafe { matrix.as_ref() } {
        Some(m) => match m.0.is_lambda(k) {
            Ok(v) => {
                unsafe { *out = v };
                LexmatStatus::Ok
            }
            Err(e) => matrix_status(&e),
        },
        None => LexmatStatus::NullArgument,
    }
}

/// 1 when rows and columns are nondecreasing in lexicographic order,
/// 0 otherwise, -1 if the handle is null.
#[no_mangle]
pub extern "C" fn lexmat_matrix_is_nondecreasing_lex(matrix: *const LexmatMatrix) -> c_int {
    unsafe { matrix.as_ref() }.map_or(-1, |m| m.0.is_nondecreasing_lex() as c_int)
}

/// 1 when rows and columns are nonincreasing in lexicographic order,
/// 0 otherwise, -1 if the handle is null.
#[no_mangle]
pub extern "C" fn lexmat_matrix_is_nonincreasing_lex(matrix: *const LexmatMatrix) -> c_int {
    unsafe { matrix.as_ref() }.map_or(-1, |m| m.0.is_nonincreasing_lex() as c_int)
}

fn count_report(
    family: LexmatFamily,
    n: usize,
    k: usize,
    method: LexmatCountMethod,
    parallel: bool,
) -> Result<CountReport, LexmatStatus> {
    let fam = Family::new(family.kind(), n, k);
    match method {
        LexmatCountMethod::Enumeration => {
            let config = EnumerationConfig {
                parallel,
                max_results: None,
            };
            count_family(fam, config).map_err(|e| enumerate_status(&e))
        }
        LexmatCountMethod::Structure => match family {
            LexmatFamily::Delta if k == 2 => {
                delta2_count(n).map_err(|e| structure_status(&e))
            }
            LexmatFamily::Gamma if n >= 2 && k == n - 2 => {
                gamma_n_minus_2_count(n).map_err(|e| structure_status(&e))
            }
            _ => Err(LexmatStatus::InvalidArgument),
        },
        LexmatCountMethod::Formula => match family {
            LexmatFamily::Lambda if k == 2 => {
                lambda2_count_formula(n).map_err(|e| structure_status(&e))
            }
            _ => Err(LexmatStatus::InvalidArgument),
        },
    }
}

/// Counts the family members and writes the count as a decimal string.
/// The structure method needs delta k = 2 or gamma k = n - 2; the
/// formula method needs lambda k = 2 with n at most 30.
#[no_mangle]
pub extern "C" fn lexmat_count(
    family: LexmatFamily,
    n: usize,
    k: usize,
    method: LexmatCountMethod,
    parallel: bool,
    out: *mut *mut c_char,
) -> LexmatStatus {
    if out.is_null() {
        return LexmatStatus::NullArgument;
    }
    match count_report(family, n, k, method, parallel) {
        Ok(report) => give_string(out, report.count.to_string()),
        Err(status) => status,
    }
}

/// Opens an enumerator over one family. With `parallel` the listing is
/// materialized eagerly before the first `next`; the order is identical.
#[no_mangle]
pub extern "C" fn lexmat_enumerator_new(
    family: LexmatFamily,
    n: usize,
    k: usize,
    parallel: bool,
    out: *mut *mut LexmatEnumerator,
) -> LexmatStatus {
    if out.is_null() {
        return LexmatStatus::NullArgument;
    }
    let config = EnumerationConfig {
        parallel,
        max_results: None,
    };
    match enumerate_family(Family::new(family.kind(), n, k), config) {
        Ok(stream) => {
            unsafe { *out = Box::into_raw(Box::new(LexmatEnumerator(stream))) };
            LexmatStatus::Ok
        }
        Err(e) => enumerate_status(&e),
    }
}

/// Writes the next matrix as a new handle, or returns
/// `LEXMAT_STATUS_END_OF_STREAM` when the family is exhausted.
#[no_mangle]
pub extern "C" fn lexmat_enumerator_next(
    enumerator: *mut LexmatEnumerator,
    out: *mut *mut LexmatMatrix,
) -> LexmatStatus {
    if out.is_null() {
        return LexmatStatus::NullArgument;
    }
    match unsafe { enumerator.as_mut() } {
        Some(e) => match e.0.next() {
            Some(m) => give_matrix(out, m),
            None => LexmatStatus::EndOfStream,
        },
        None => LexmatStatus::NullArgument,
    }
}

/// Releases an enumerator handle. Null is ignored.
#[no_mangle]
pub extern "C" fn lexmat_enumerator_free(enumerator: *mut LexmatEnumerator) {
    if !enumerator.is_null() {
        drop(unsafe { Box::from_raw(enumerator) });
    }
}

/// Builds the k = 2 nonincreasing block matrix of a composition: `parts`
/// holds `len` integers, each at least 2, summing to at most 64.
#[no_mangle]
pub extern "C" fn lexmat_delta2_build(
    parts: *const usize,
    len: usize,
    out: *mut *mut LexmatMatrix,
) -> LexmatStatus {
    if parts.is_null() || out.is_null() {
        return LexmatStatus::NullArgument;
    }
    let parts = unsafe { std::slice::from_raw_parts(parts, len) };
    let composition = match Composition::new(parts.to_vec()) {
        Ok(c) => c,
        Err(e) => return structure_status(&e),
    };
    if composition.total() > MAX_WIDTH {
        return LexmatStatus::OutOfRange;
    }
    give_matrix(out, build_delta2(&composition))
}

/// Recovers the composition behind a k = 2 nonincreasing block matrix.
/// `buf` receives the parts; `buf_len` must be at least rows / 2, and
/// `out_len` receives the number of parts written.
#[no_mangle]
pub extern "C" fn lexmat_delta2_decompose(
    matrix: *const LexmatMatrix,
    buf: *mut usize,
    buf_len: usize,
    out_len: *mut usize,
) -> LexmatStatus {
    if buf.is_null() || out_len.is_null() {
        return LexmatStatus::NullArgument;
    }
    let Some(m) = (unsafe { matrix.as_ref() }) else {
        return LexmatStatus::NullArgument;
    };
    let composition = match decompose_delta2(&m.0) {
        Ok(c) => c,
        Err(e) => return structure_status(&e),
    };
    let parts = composition.parts();
    if buf_len < parts.len() {
        return LexmatStatus::BufferTooSmall;
    }
    unsafe {
        std::ptr::copy_nonoverlapping(parts.as_ptr(), buf, parts.len());
        *out_len = parts.len();
    }
    LexmatStatus::Ok
}

/// Writes Fibonacci number f_i (f_0 = f_1 = 1) as a decimal string.
/// Indices above 100000 are rejected.
#[no_mangle]
pub extern "C" fn lexmat_fibonacci(i: usize, out: *mut *mut c_char) -> LexmatStatus {
    if out.is_null() {
        return LexmatStatus::NullArgument;
    }
    if i > 100_000 {
        return LexmatStatus::OutOfRange;
    }
    give_string(out, fibonacci(i).value(i).to_string())
}

/// Largest supported matrix dimension.
#[no_mangle]
pub extern "C" fn lexmat_max_width() -> usize {
    MAX_WIDTH
}

/// Largest n accepted by the lambda k = 2 formula method.
#[no_mangle]
pub extern "C" fn lexmat_formula_limit() -> usize {
    FORMULA_LIMIT
}
