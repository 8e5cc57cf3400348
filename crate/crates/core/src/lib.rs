//! Enumeration and structural analysis of square binary matrices with
//! exactly k ones in every row and column, restricted to those whose rows
//! and columns are simultaneously sorted in lexicographic order.
//!
//! Reading each row as a binary numeral (first column most significant)
//! gives its row code; columns likewise. Three families are covered for
//! given n and k:
//!
//! * `lambda`: all constant-line-sum matrices, no ordering;
//! * `gamma`: row and column codes nondecreasing;
//! * `delta`: row and column codes nonincreasing.
//!
//! Complementation is a bijection between `gamma(n, n-k)` and
//! `delta(n, k)`. For k = 2 the nonincreasing family is block-diagonal
//! and in bijection with compositions of n into parts >= 2, so its counts
//! are Fibonacci numbers; [`structure`] exploits that, [`enumerate`]
//! provides the general backtracking search, and [`oeis`] checks computed
//! sequences against reference b-files.

pub mod cli;
pub mod enumerate;
pub mod family;
pub mod matrix;
pub mod oeis;
pub mod structure;

pub use enumerate::{
    count_family, count_lambda, enumerate_family, CountMethod, CountReport, EnumerateError,
    EnumerationConfig, MatrixStream,
};
pub use family::{Family, FamilyKind};
pub use matrix::{
    parse_matrix, parse_matrix_stream, serialize_matrix_stream, BinaryMatrix, CodeTuple,
    MatrixError, MAX_WIDTH,
};
pub use oeis::{
    compare_sequence, fetch_bfile, parse_bfile, serialize_bfile, BFile, Mismatch, OeisError,
    SequenceDiff, Verdict,
};
pub use structure::{
    build_delta2, compositions, decompose_delta2, delta2_count, fibonacci,
    gamma_n_minus_2_count, lambda2_count_formula, Composition, Compositions, FibSequence,
    StructureError, FORMULA_LIMIT,
};
