//! Pruned backtracking enumeration of the three families.
//!
//! Rows are chosen top-down from a precomputed ascending list of all
//! width-n codes with popcount k. Three prunes keep the search tight:
//!
//! * row order: candidate indices are constrained to be >= (Gamma) or
//!   <= (Delta) the previous row's index, so the row condition holds by
//!   construction;
//! * column sums: a column that already has k ones forbids further ones,
//!   a column that needs one in every remaining row demands them;
//! * column order: for adjacent columns whose filled prefixes differ, the
//!   lexicographic comparison is already decided by the most significant
//!   differing row; a decision the family forbids kills the subtree, and
//!   pairs with equal prefixes stay tracked in an "undecided" bitmask.
//!
//! Matrices are yielded in ascending row-code order, serial or parallel.

use std::num::NonZeroUsize;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::family::{Family, FamilyKind};
use crate::matrix::{BinaryMatrix, MAX_WIDTH};

/// Cap on the precomputed candidate-row table (C(n,k) entries).
const CANDIDATE_LIMIT: u128 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("n = {n} exceeds the enumerable width limit of {MAX_WIDTH}")]
    InfeasibleWidth { n: usize },
    #[error("n must be at least 1")]
    ZeroSize,
    #[error("C({n},{k}) candidate rows do not fit the search table")]
    SearchTooLarge { n: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Enumeration,
    Structure,
    Formula,
}

impl CountMethod {
    pub fn name(self) -> &'static str {
        match self {
            CountMethod::Enumeration => "enumeration",
            CountMethod::Structure => "structure",
            CountMethod::Formula => "formula",
        }
    }
}

/// Result of a counting run, whatever the method.
#[derive(Debug, Clone)]
pub struct CountReport {
    pub family: Family,
    pub count: BigUint,
    pub method: CountMethod,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumerationConfig {
    pub parallel: bool,
    pub max_results: Option<NonZeroUsize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowOrder {
    Free,
    NonDecreasing,
    NonIncreasing,
}

impl From<FamilyKind> for RowOrder {
    fn from(kind: FamilyKind) -> Self {
        match kind {
            FamilyKind::Lambda => RowOrder::Free,
            FamilyKind::Gamma => RowOrder::NonDecreasing,
            FamilyKind::Delta => RowOrder::NonIncreasing,
        }
    }
}

fn width_mask(n: usize) -> u64 {
    if n == MAX_WIDTH {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// All width-n codes with exactly k bits set, ascending (Gosper's hack).
fn candidate_rows(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = width_mask(n) as u128;
    let mut v: u128 = (1u128 << k) - 1;
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    while v <= limit {
        out.push(v as u64);
        let low = v & v.wrapping_neg();
        let carry = v + low;
        v = carry | (((v ^ carry) / low) >> 2);
    }
    out
}

/// Depth-first search state over one family's matrices.
struct LineSearch {
    n: usize,
    order: RowOrder,
    candidates: Arc<[u64]>,
    /// Restricts depth 0 to a single candidate index (parallel fan-out).
    first_row: Option<usize>,
    rows: Vec<u64>,
    row_idx: Vec<usize>,
    /// cursor[d] = next candidate index to try at depth d.
    cursor: Vec<usize>,
    /// undecided[d] = adjacent-column pairs still equal before row d; the
    /// pair (j, j+1) lives at the bit position of column j.
    undecided: Vec<u64>,
    /// Ones still needed per column, indexed by bit position.
    need: Vec<u8>,
    at_leaf: bool,
    done: bool,
}

impl LineSearch {
    fn new(n: usize, k: usize, order: RowOrder, first_row: Option<usize>) -> Self {
        LineSearch::with_candidates(n, k, order, candidate_rows(n, k).into(), first_row)
    }

    fn with_candidates(
        n: usize,
        k: usize,
        order: RowOrder,
        candidates: Arc<[u64]>,
        first_row: Option<usize>,
    ) -> Self {
        debug_assert!((1..=MAX_WIDTH).contains(&n));
        let mut cursor = vec![0; n + 1];
        cursor[0] = first_row.unwrap_or(0);
        LineSearch {
            n,
            order,
            candidates,
            first_row,
            rows: Vec::with_capacity(n),
            row_idx: Vec::with_capacity(n),
            cursor,
            undecided: vec![width_mask(n) & !1],
            need: vec![k.min(u8::MAX as usize) as u8; n],
            at_leaf: false,
            done: false,
        }
    }

    fn hi_bound(&self, depth: usize) -> usize {
        if depth == 0 {
            return match self.first_row {
                Some(i) => (i + 1).min(self.candidates.len()),
                None => self.candidates.len(),
            };
        }
        match self.order {
            RowOrder::NonIncreasing => self.row_idx[depth - 1] + 1,
            _ => self.candidates.len(),
        }
    }

    fn push(&mut self, cand: u64, idx: usize, undecided: u64) {
        self.rows.push(cand);
        self.row_idx.push(idx);
        self.undecided.push(undecided);
        let mut bits = cand;
        while bits != 0 {
            self.need[bits.trailing_zeros() as usize] -= 1;
            bits &= bits - 1;
        }
        let next = self.rows.len();
        self.cursor[next] = match self.order {
            RowOrder::NonDecreasing => idx,
            _ => 0,
        };
    }

    fn pop(&mut self) {
        let cand = self.rows.pop().expect("pop on empty search stack");
        self.row_idx.pop();
        self.undecided.pop();
        let mut bits = cand;
        while bits != 0 {
            self.need[bits.trailing_zeros() as usize] += 1;
            bits &= bits - 1;
        }
    }

    /// Advances to the next complete matrix; the slice is its row codes.
    fn advance(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        if self.at_leaf {
            self.at_leaf = false;
            self.pop();
        }
        loop {
            let depth = self.rows.len();
            if depth == self.n {
                self.at_leaf = true;
                return Some(&self.rows);
            }
            let rows_left = (self.n - depth) as u8;
            let mut forbid = 0u64;
            let mut must = 0u64;
            for p in 0..self.n {
                let need = self.need[p];
                if need == 0 {
                    forbid |= 1 << p;
                } else if need == rows_left {
                    must |= 1 << p;
                }
            }
            let undecided = *self.undecided.last().expect("undecided stack empty");
            let hi = self.hi_bound(depth);
            let mut idx = self.cursor[depth];
            let mut pushed = false;
            while idx < hi {
                let cand = self.candidates[idx];
                idx += 1;
                if cand & forbid != 0 || cand & must != must {
                    continue;
                }
                // For each still-undecided adjacent pair, this row decides
                // the column order wherever the two entries differ.
                let shifted = cand << 1;
                let decided = (cand ^ shifted) & undecided;
                let violation = match self.order {
                    RowOrder::Free => 0,
                    RowOrder::NonDecreasing => decided & cand,
                    RowOrder::NonIncreasing => decided & shifted,
                };
                if violation != 0 {
                    continue;
                }
                self.cursor[depth] = idx;
                self.push(cand, idx - 1, undecided & !decided);
                pushed = true;
                break;
            }
            if !pushed {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }

    fn count_leaves(&mut self) -> u64 {
        let mut count = 0;
        while self.advance().is_some() {
            count += 1;
        }
        count
    }
}

enum StreamInner {
    Lazy(LineSearch),
    Eager(std::vec::IntoIter<BinaryMatrix>),
}

/// Iterator over a family's matrices in ascending row-code order.
pub struct MatrixStream {
    n: usize,
    inner: StreamInner,
    yielded: usize,
    cap: Option<usize>,
    truncated: bool,
    finished: bool,
}

impl MatrixStream {
    /// True when a max_results cap cut the listing short. Meaningful once
    /// the stream has ended.
    pub fn truncated(&self) -> bool {
        self.truncated
    }
}

impl Iterator for MatrixStream {
    type Item = BinaryMatrix;

    fn next(&mut self) -> Option<BinaryMatrix> {
        if self.finished {
            return None;
        }
        if self.cap.is_some_and(|cap| self.yielded == cap) {
            if let StreamInner::Lazy(search) = &mut self.inner {
                self.truncated = search.advance().is_some();
            }
            self.finished = true;
            return None;
        }
        let item = match &mut self.inner {
            StreamInner::Lazy(search) => search
                .advance()
                .map(|codes| BinaryMatrix::from_row_codes(codes, self.n).expect("search invariant")),
            StreamInner::Eager(iter) => iter.next(),
        };
        if item.is_some() {
            self.yielded += 1;
        } else {
            self.finished = true;
        }
        item
    }
}

fn validate(family: &Family) -> Result<(), EnumerateError> {
    if family.n == 0 {
        return Err(EnumerateError::ZeroSize);
    }
    if family.n > MAX_WIDTH {
        return Err(EnumerateError::InfeasibleWidth { n: family.n });
    }
    if binomial(family.n, family.k) > CANDIDATE_LIMIT {
        return Err(EnumerateError::SearchTooLarge {
            n: family.n,
            k: family.k,
        });
    }
    Ok(())
}

/// Streams every member of the family exactly once, in ascending
/// row-code order. With `config.parallel` the listing is materialized
/// eagerly by fanning out over the first row; the order is identical.
pub fn enumerate_family(
    family: Family,
    config: EnumerationConfig,
) -> Result<MatrixStream, EnumerateError> {
    validate(&family)?;
    let order = RowOrder::from(family.kind);
    let cap = config.max_results.map(NonZeroUsize::get);
    if config.parallel {
        let candidates: Arc<[u64]> = candidate_rows(family.n, family.k).into();
        let per_root: Vec<Vec<BinaryMatrix>> = (0..candidates.len())
            .into_par_iter()
            .map(|root| {
                let mut search = LineSearch::with_candidates(
                    family.n,
                    family.k,
                    order,
                    Arc::clone(&candidates),
                    Some(root),
                );
                let mut out = Vec::new();
                while let Some(codes) = search.advance() {
                    out.push(BinaryMatrix::from_row_codes(codes, family.n).expect("search invariant"));
                    if cap.is_some_and(|c| out.len() > c) {
                        break;
                    }
                }
                out
            })
            .collect();
        let mut all: Vec<BinaryMatrix> = per_root.into_iter().flatten().collect();
        let truncated = cap.is_some_and(|c| all.len() > c);
        if let Some(c) = cap {
            all.truncate(c);
        }
        Ok(MatrixStream {
            n: family.n,
            inner: StreamInner::Eager(all.into_iter()),
            yielded: 0,
            cap: None,
            truncated,
            finished: false,
        })
    } else {
        Ok(MatrixStream {
            n: family.n,
            inner: StreamInner::Lazy(LineSearch::new(family.n, family.k, order, None)),
            yielded: 0,
            cap,
            truncated: false,
            finished: false,
        })
    }
}

/// Counts the family by exhausting the search without materializing
/// matrices. `config.max_results` is ignored; counts are always exact.
pub fn count_family(
    family: Family,
    config: EnumerationConfig,
) -> Result<CountReport, EnumerateError> {
    validate(&family)?;
    let start = Instant::now();
    let order = RowOrder::from(family.kind);
    let count = if config.parallel {
        let candidates: Arc<[u64]> = candidate_rows(family.n, family.k).into();
        (0..candidates.len())
            .into_par_iter()
            .map(|root| {
                LineSearch::with_candidates(
                    family.n,
                    family.k,
                    order,
                    Arc::clone(&candidates),
                    Some(root),
                )
                .count_leaves()
            })
            .sum()
    } else {
        LineSearch::new(family.n, family.k, order, None).count_leaves()
    };
    Ok(CountReport {
        family,
        count: BigUint::from(count),
        method: CountMethod::Enumeration,
        elapsed: start.elapsed(),
    })
}

/// |Λₙᵏ| by the same backtracking with no ordering constraint.
pub fn count_lambda(n: usize, k: usize) -> Result<CountReport, EnumerateError> {
    count_family(Family::lambda(n, k), EnumerationConfig::default())
}
