//! Randomized and cross-checking properties: algebraic identities of the
//! matrix operations, serialization round trips, and a naive enumeration
//! oracle that validates the pruned backtracking search.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;

use lexmat::{
    compare_sequence, enumerate_family, parse_bfile, parse_matrix, parse_matrix_stream,
    serialize_bfile, serialize_matrix_stream, BFile, BinaryMatrix, EnumerationConfig, Family,
    FamilyKind, OeisError,
};

fn arb_matrix() -> impl Strategy<Value = BinaryMatrix> {
    (1usize..=12, 1usize..=12).prop_flat_map(|(n_rows, n_cols)| {
        vec(0u64..1 << n_cols, n_rows)
            .prop_map(move |rows| BinaryMatrix::from_row_codes(&rows, n_cols).unwrap())
    })
}

fn arb_square() -> impl Strategy<Value = BinaryMatrix> {
    (1usize..=10).prop_flat_map(|n| {
        vec(0u64..1 << n, n).prop_map(move |rows| BinaryMatrix::from_row_codes(&rows, n).unwrap())
    })
}

fn arb_bfile() -> impl Strategy<Value = BFile> {
    (-20i64..20, vec(any::<i64>(), 1..40)).prop_map(|(start, values)| BFile {
        sequence_id: "A000001".to_string(),
        entries: values
            .into_iter()
            .enumerate()
            .map(|(i, v)| (start + i as i64, BigInt::from(v)))
            .collect(),
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(m in arb_matrix()) {
        prop_assert_eq!(m.complement().complement(), m);
    }

    #[test]
    fn transpose_is_an_involution(m in arb_matrix()) {
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn complement_flips_lex_order(m in arb_matrix()) {
        let c = m.complement();
        prop_assert_eq!(m.is_nondecreasing_lex(), c.is_nonincreasing_lex());
        prop_assert_eq!(m.is_nonincreasing_lex(), c.is_nondecreasing_lex());
    }

    #[test]
    fn complement_flips_line_sums(m in arb_square()) {
        let n = m.n_rows();
        let c = m.complement();
        for k in 0..=n {
            prop_assert_eq!(m.is_lambda(k).unwrap(), c.is_lambda(n - k).unwrap());
        }
    }

    #[test]
    fn col_codes_are_transposed_row_codes(m in arb_matrix()) {
        prop_assert_eq!(m.col_codes(), m.transpose().row_codes());
        prop_assert_eq!(m.row_codes(), m.transpose().col_codes());
    }

    #[test]
    fn text_layout_matches_bit_layout(m in arb_matrix()) {
        let text = m.to_text();
        for (i, line) in text.lines().enumerate() {
            for (j, ch) in line.chars().enumerate() {
                prop_assert_eq!(ch == '1', m.get(i, j));
            }
        }
        prop_assert_eq!(parse_matrix(&text).unwrap(), m);
    }

    #[test]
    fn matrix_stream_round_trips(ms in vec(arb_matrix(), 0..6)) {
        let text = serialize_matrix_stream(&ms);
        prop_assert_eq!(parse_matrix_stream(&text).unwrap(), ms);
    }

    #[test]
    fn bfile_round_trips(b in arb_bfile()) {
        let parsed = parse_bfile(&serialize_bfile(&b), &b.sequence_id).unwrap();
        prop_assert_eq!(parsed, b);
    }

    #[test]
    fn sequence_comparison_is_symmetric(
        a in arb_bfile(),
        b in arb_bfile(),
        offset in -50i64..50,
    ) {
        let forward = compare_sequence(&a.entries, &b, offset);
        let backward = compare_sequence(&b.entries, &a, -offset);
        match (forward, backward) {
            (Ok(f), Ok(r)) => {
                prop_assert_eq!(f.matches, r.matches);
                prop_assert_eq!(f.mismatches.len(), r.mismatches.len());
                prop_assert_eq!(f.verdict, r.verdict);
                for (fm, rm) in f.mismatches.iter().zip(r.mismatches.iter()) {
                    prop_assert_eq!(fm.index + offset, rm.index);
                    prop_assert_eq!(&fm.expected, &rm.got);
                    prop_assert_eq!(&fm.got, &rm.expected);
                }
            }
            (Err(OeisError::NoOverlap), Err(OeisError::NoOverlap)) => {}
            (f, r) => prop_assert!(false, "asymmetric outcomes: {f:?} vs {r:?}"),
        }
    }
}

fn enumerate_set(family: Family) -> BTreeSet<BinaryMatrix> {
    enumerate_family(family, EnumerationConfig::default())
        .unwrap()
        .collect()
}

/// Backtracking with only the row-order and row-sum constraints, filtering
/// full candidate tuples through `Family::contains`. No column pruning, so
/// it exercises none of the code paths the production search relies on.
fn naive_set(family: Family) -> BTreeSet<BinaryMatrix> {
    let (n, k) = (family.n, family.k);
    let candidates: Vec<u64> = (0..1u64 << n)
        .filter(|v| v.count_ones() as usize == k)
        .collect();
    let mut out = BTreeSet::new();
    let mut rows: Vec<u64> = Vec::with_capacity(n);
    fn rec(
        family: Family,
        candidates: &[u64],
        rows: &mut Vec<u64>,
        out: &mut BTreeSet<BinaryMatrix>,
    ) {
        if rows.len() == family.n {
            let m = BinaryMatrix::from_row_codes(rows, family.n).unwrap();
            if family.contains(&m) {
                out.insert(m);
            }
            return;
        }
        for &cand in candidates {
            let ordered = match (family.kind, rows.last()) {
                (_, None) | (FamilyKind::Lambda, _) => true,
                (FamilyKind::Gamma, Some(&prev)) => cand >= prev,
                (FamilyKind::Delta, Some(&prev)) => cand <= prev,
            };
            if ordered {
                rows.push(cand);
                rec(family, candidates, rows, out);
                rows.pop();
            }
        }
    }
    rec(family, &candidates, &mut rows, &mut out);
    out
}

#[test]
fn pruned_search_matches_naive_oracle() {
    for n in 1..=5usize {
        for k in 0..=n {
            for kind in [FamilyKind::Gamma, FamilyKind::Delta] {
                let family = Family::new(kind, n, k);
                assert_eq!(enumerate_set(family), naive_set(family), "{family}");
            }
            if n <= 4 {
                let family = Family::lambda(n, k);
                assert_eq!(enumerate_set(family), naive_set(family), "{family}");
            }
        }
    }
}

#[test]
fn first_rows_have_forced_shape() {
    for n in 1..=6usize {
        for k in 0..=n {
            let gamma_first = (1u64 << k) - 1;
            for m in enumerate_family(Family::gamma(n, k), EnumerationConfig::default()).unwrap() {
                assert_eq!(m.row_code(0), gamma_first, "gamma({n},{k})");
            }
            let delta_first = ((1u64 << k) - 1) << (n - k);
            for m in enumerate_family(Family::delta(n, k), EnumerationConfig::default()).unwrap() {
                assert_eq!(m.row_code(0), delta_first, "delta({n},{k})");
            }
        }
    }
}

#[test]
fn k_equals_one_families_are_the_diagonals() {
    for n in 1..=8usize {
        let identity = BinaryMatrix::from_fn(n, n, |i, j| i == j).unwrap();
        let anti = BinaryMatrix::from_fn(n, n, |i, j| i + j == n - 1).unwrap();
        let deltas: Vec<BinaryMatrix> =
            enumerate_family(Family::delta(n, 1), EnumerationConfig::default())
                .unwrap()
                .collect();
        let gammas: Vec<BinaryMatrix> =
            enumerate_family(Family::gamma(n, 1), EnumerationConfig::default())
                .unwrap()
                .collect();
        assert_eq!(deltas, vec![identity]);
        assert_eq!(gammas, vec![anti]);
    }
}
