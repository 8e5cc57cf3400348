//! The k = 2 structural fast path.
//!
//! Nonincreasing k=2 matrices are block-diagonal: each diagonal block is
//! either the 2x2 all-ones matrix or, for size p >= 3, the p x p matrix
//! with first row 110..., last row ...011, and a staggered pair on rows
//! between (row r holds ones in columns r-1 and r+1). Reading block sizes
//! top-left to bottom-right is a bijection with compositions of n into
//! parts >= 2, which are Fibonacci-counted. The same module carries the
//! closed-form count of unrestricted k=2 matrices.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::enumerate::{CountMethod, CountReport};
use crate::family::Family;
use crate::matrix::{BinaryMatrix, MAX_WIDTH};

/// Upper bound accepted by [`lambda2_count_formula`]; the partition
/// recursion and factorials stay trivial below it.
pub const FORMULA_LIMIT: usize = 30;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("n = {n} is below the structural range (need n >= 2)")]
    TooSmall { n: usize },
    #[error("n = {n} exceeds the closed-formula range (limit {FORMULA_LIMIT})")]
    TooLarge { n: usize },
    #[error("matrix is not a nonincreasing-order matrix with two ones per line")]
    NotDelta2,
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
}

/// An ordered tuple of parts, each >= 2. Serializes as "2,3".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, StructureError> {
        if parts.is_empty() {
            return Err(StructureError::InvalidComposition(
                "need at least one part".into(),
            ));
        }
        if let Some(&bad) = parts.iter().find(|&&p| p < 2) {
            return Err(StructureError::InvalidComposition(format!(
                "part {bad} is below the minimum of 2"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The composed integer n = sum of parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| StructureError::InvalidComposition(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        Composition::new(parts)
    }
}

/// Lazy lexicographic stream of the compositions of n into parts >= 2.
pub struct Compositions {
    parts: Vec<usize>,
    remaining: usize,
    started: bool,
    done: bool,
}

impl Compositions {
    /// Pushes smallest-first parts until the remainder is exhausted.
    fn descend(&mut self) {
        while self.remaining > 0 {
            let p = if self.remaining == 3 { 3 } else { 2 };
            self.parts.push(p);
            self.remaining -= p;
        }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
        } else {
            loop {
                let Some(last) = self.parts.pop() else {
                    self.done = true;
                    return None;
                };
                self.remaining += last;
                let mut q = last + 1;
                if q < self.remaining && self.remaining - q == 1 {
                    q = self.remaining;
                }
                if q <= self.remaining {
                    self.parts.push(q);
                    self.remaining -= q;
                    self.descend();
                    break;
                }
            }
        }
        Some(Composition {
            parts: self.parts.clone(),
        })
    }
}

/// All compositions of n into parts >= 2, in lexicographic part order.
pub fn compositions(n: usize) -> Result<Compositions, StructureError> {
    if n < 2 {
        return Err(StructureError::TooSmall { n });
    }
    Ok(Compositions {
        parts: Vec::new(),
        remaining: n,
        started: false,
        done: false,
    })
}

/// The sequence f_0, f_1, ..., f_max with f_0 = f_1 = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibSequence {
    values: Vec<BigUint>,
}

impl FibSequence {
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// f_i. Panics if i > max.
    pub fn value(&self, i: usize) -> &BigUint {
        &self.values[i]
    }
}

pub fn fibonacci(max: usize) -> FibSequence {
    let mut values = Vec::with_capacity(max + 1);
    values.push(BigUint::one());
    if max >= 1 {
        values.push(BigUint::one());
    }
    for i in 2..=max {
        let next = &values[i - 1] + &values[i - 2];
        values.push(next);
    }
    FibSequence { values }
}

/// δ(n,2) = f_{n-2} via the recurrence, no enumeration.
pub fn delta2_count(n: usize) -> Result<CountReport, StructureError> {
    if n < 2 {
        return Err(StructureError::TooSmall { n });
    }
    let start = Instant::now();
    let count = fibonacci(n - 2).values.pop().expect("nonempty");
    Ok(CountReport {
        family: Family::delta(n, 2),
        count,
        method: CountMethod::Structure,
        elapsed: start.elapsed(),
    })
}

/// γ(n,n-2), which equals δ(n,2) by complement duality.
pub fn gamma_n_minus_2_count(n: usize) -> Result<CountReport, StructureError> {
    let report = delta2_count(n)?;
    Ok(CountReport {
        family: Family::gamma(n, n - 2),
        ..report
    })
}

/// Builds the block-diagonal matrix of a composition: parts become
/// diagonal blocks top-left to bottom-right.
///
/// Panics if the composed n exceeds [`MAX_WIDTH`].
pub fn build_delta2(c: &Composition) -> BinaryMatrix {
    let n = c.total();
    assert!(n <= MAX_WIDTH, "composition total {n} exceeds {MAX_WIDTH}");
    let bit = |j: usize| 1u64 << (n - 1 - j);
    let mut rows = Vec::with_capacity(n);
    let mut off = 0;
    for &p in c.parts() {
        rows.push(bit(off) | bit(off + 1));
        for r in 1..p - 1 {
            rows.push(bit(off + r - 1) | bit(off + r + 1));
        }
        rows.push(bit(off + p - 2) | bit(off + p - 1));
        off += p;
    }
    BinaryMatrix::from_row_codes(&rows, n).expect("block rows fit the width")
}

/// Reads the block sizes back off a nonincreasing k=2 matrix.
pub fn decompose_delta2(a: &BinaryMatrix) -> Result<Composition, StructureError> {
    let n = a.n_rows();
    if a.n_cols() != n || !a.is_lambda(2).map_err(|_| StructureError::NotDelta2)? {
        return Err(StructureError::NotDelta2);
    }
    if !a.is_nonincreasing_lex() {
        return Err(StructureError::NotDelta2);
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < n {
        if i + 1 >= n {
            return Err(StructureError::NotDelta2);
        }
        // a 2-part block has a one just below-right of the corner; larger
        // blocks run zero on the diagonal until their final row
        let p = if a.get(i + 1, i + 1) {
            2
        } else {
            let mut t = i + 1;
            while t < n && !a.get(t, t) {
                t += 1;
            }
            if t == n {
                return Err(StructureError::NotDelta2);
            }
            t - i + 1
        };
        parts.push(p);
        i += p;
    }
    let c = Composition::new(parts).map_err(|_| StructureError::NotDelta2)?;
    if build_delta2(&c) != *a {
        return Err(StructureError::NotDelta2);
    }
    Ok(c)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// |Λₙ²| in closed form: sum over all multiplicity vectors (p_2..p_n)
/// with sum r*p_r = n of (n!)^2 / prod p_r! (2r)^(p_r).
pub fn lambda2_count_formula(n: usize) -> Result<CountReport, StructureError> {
    if n < 2 {
        return Err(StructureError::TooSmall { n });
    }
    if n > FORMULA_LIMIT {
        return Err(StructureError::TooLarge { n });
    }
    let start = Instant::now();
    let numerator = factorial(n).pow(2);
    let mut total = BigUint::zero();

    fn descend(r: usize, rem: usize, den: BigUint, numerator: &BigUint, total: &mut BigUint) {
        if rem == 0 {
            debug_assert!((numerator % &den).is_zero());
            *total += numerator / &den;
            return;
        }
        if r > rem {
            return;
        }
        let mut den_p = den;
        let mut p = 0;
        loop {
            let rest = rem - r * p;
            if rest == 0 || rest > r {
                descend(r + 1, rest, den_p.clone(), numerator, total);
            }
            p += 1;
            if r * p > rem {
                break;
            }
            den_p *= BigUint::from(2 * r * p);
        }
    }
    descend(2, n, BigUint::one(), &numerator, &mut total);

    Ok(CountReport {
        family: Family::lambda(n, 2),
        count: total,
        method: CountMethod::Formula,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_family, enumerate_family, EnumerationConfig};

    fn parts_list(n: usize) -> Vec<Vec<usize>> {
        compositions(n).unwrap().map(|c| c.parts().to_vec()).collect()
    }

    #[test]
    fn compositions_in_lex_order() {
        assert_eq!(parts_list(2), vec![vec![2]]);
        assert_eq!(parts_list(3), vec![vec![3]]);
        assert_eq!(parts_list(4), vec![vec![2, 2], vec![4]]);
        assert_eq!(parts_list(5), vec![vec![2, 3], vec![3, 2], vec![5]]);
        assert_eq!(
            parts_list(6),
            vec![vec![2, 2, 2], vec![2, 4], vec![3, 3], vec![4, 2], vec![6]]
        );
        assert!(matches!(
            compositions(1),
            Err(StructureError::TooSmall { n: 1 })
        ));
    }

    #[test]
    fn composition_count_is_fibonacci() {
        let fib = fibonacci(23);
        for n in 2..=25usize {
            assert_eq!(
                BigUint::from(compositions(n).unwrap().count()),
                *fib.value(n - 2),
                "n={n}"
            );
        }
    }

    #[test]
    fn fibonacci_starts_one_one() {
        assert_eq!(fibonacci(0).values(), [BigUint::one()]);
        let f = fibonacci(10);
        let small: Vec<u32> = f.values().iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(small, [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]);
    }

    #[test]
    fn delta2_counts() {
        assert_eq!(delta2_count(2).unwrap().count, BigUint::one());
        assert_eq!(delta2_count(5).unwrap().count, BigUint::from(3u32));
        assert_eq!(delta2_count(14).unwrap().count, BigUint::from(233u32));
        assert!(matches!(
            delta2_count(1),
            Err(StructureError::TooSmall { n: 1 })
        ));
        let enumerated = count_family(Family::delta(14, 2), EnumerationConfig::default())
            .unwrap()
            .count;
        assert_eq!(delta2_count(14).unwrap().count, enumerated);
        assert_eq!(delta2_count(9).unwrap().method, CountMethod::Structure);
    }

    #[test]
    fn gamma_dual_counts() {
        let r = gamma_n_minus_2_count(5).unwrap();
        assert_eq!(r.count, BigUint::from(3u32));
        assert_eq!(r.family, Family::gamma(5, 3));
        assert_eq!(gamma_n_minus_2_count(4).unwrap().count, BigUint::from(2u32));
        let enumerated = count_family(Family::gamma(12, 10), EnumerationConfig::default())
            .unwrap()
            .count;
        assert_eq!(gamma_n_minus_2_count(12).unwrap().count, enumerated);
        assert_eq!(enumerated, BigUint::from(89u32));
    }

    #[test]
    fn build_known_matrices() {
        let build = |parts: &[usize]| build_delta2(&Composition::new(parts.to_vec()).unwrap());
        assert_eq!(build(&[2, 2]).to_text(), "1100\n1100\n0011\n0011");
        assert_eq!(build(&[4]).to_text(), "1100\n1010\n0101\n0011");
        assert_eq!(build(&[2]).to_text(), "11\n11");
        assert_eq!(build(&[3]).to_text(), "110\n101\n011");
        assert_eq!(
            build(&[2, 3]).to_text(),
            "11000\n11000\n00110\n00101\n00011"
        );
        assert_eq!(
            build(&[3, 2]).to_text(),
            "11000\n10100\n01100\n00011\n00011"
        );
        assert_eq!(
            build(&[5]).to_text(),
            "11000\n10100\n01010\n00101\n00011"
        );
    }

    #[test]
    fn decompose_inverts_build() {
        for n in 2..=9usize {
            for c in compositions(n).unwrap() {
                let m = build_delta2(&c);
                assert!(Family::delta(n, 2).contains(&m), "{c}");
                assert_eq!(decompose_delta2(&m).unwrap(), c);
            }
        }
    }

    #[test]
    fn built_matrices_cover_the_family() {
        for n in 2..=9usize {
            let mut built: Vec<BinaryMatrix> = compositions(n)
                .unwrap()
                .map(|c| build_delta2(&c))
                .collect();
            built.sort();
            let enumerated: Vec<BinaryMatrix> =
                enumerate_family(Family::delta(n, 2), EnumerationConfig::default())
                    .unwrap()
                    .collect();
            assert_eq!(built, enumerated, "n={n}");
        }
    }

    #[test]
    fn decompose_rejects_non_members() {
        let gamma = crate::matrix::parse_matrix("0011\n0011\n1100\n1100").unwrap();
        assert_eq!(decompose_delta2(&gamma), Err(StructureError::NotDelta2));
        let k3 = crate::matrix::parse_matrix("11100\n11010\n11001\n00111\n00111").unwrap();
        assert_eq!(decompose_delta2(&k3), Err(StructureError::NotDelta2));
        let rect = BinaryMatrix::from_fn(2, 3, |_, _| true).unwrap();
        assert_eq!(decompose_delta2(&rect), Err(StructureError::NotDelta2));
        let single = crate::matrix::parse_matrix("1").unwrap();
        assert_eq!(decompose_delta2(&single), Err(StructureError::NotDelta2));
    }

    #[test]
    fn top_left_block_splits_the_recurrence() {
        // matrices of size n+2 split by whether the leading block is 2x2
        let fib = fibonacci(8);
        for n in 2..=8usize {
            let (mut two_block, mut larger) = (0u32, 0u32);
            for m in enumerate_family(Family::delta(n + 2, 2), EnumerationConfig::default())
                .unwrap()
            {
                if m.get(1, 1) {
                    two_block += 1;
                } else {
                    larger += 1;
                }
            }
            assert_eq!(BigUint::from(two_block), *fib.value(n - 2), "n={n}");
            assert_eq!(BigUint::from(larger), *fib.value(n - 1), "n={n}");
        }
    }

    #[test]
    fn formula_matches_enumeration() {
        let known = [1u64, 6, 90, 2040, 67950];
        for (i, &want) in known.iter().enumerate() {
            let n = i + 2;
            let report = lambda2_count_formula(n).unwrap();
            assert_eq!(report.count, BigUint::from(want), "n={n}");
            assert_eq!(report.method, CountMethod::Formula);
            let brute = count_family(Family::lambda(n, 2), EnumerationConfig::default())
                .unwrap()
                .count;
            assert_eq!(report.count, brute, "n={n}");
        }
        assert!(matches!(
            lambda2_count_formula(1),
            Err(StructureError::TooSmall { n: 1 })
        ));
        assert!(matches!(
            lambda2_count_formula(31),
            Err(StructureError::TooLarge { n: 31 })
        ));
    }

    #[test]
    fn composition_parse_and_display() {
        let c: Composition = "2,3".parse().unwrap();
        assert_eq!(c.parts(), [2, 3]);
        assert_eq!(c.total(), 5);
        assert_eq!(c.to_string(), "2,3");
        assert!("2,1".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert!("2,x".parse::<Composition>().is_err());
        assert!(Composition::new(vec![]).is_err());
    }
}
