//! OEIS b-file ingestion and sequence comparison.
//!
//! Reference sequences ship as committed fixtures so every check runs
//! offline; fetching over the network is opt-in via an explicit URL.

use std::fmt;
use std::io::Read;
use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("sequence id {id:?} is not of the form A followed by six digits")]
    BadSequenceId { id: String },
    #[error("line {line}: malformed b-file line {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: index {found} breaks the consecutive run (expected {expected})")]
    NonMonotoneIndex {
        line: usize,
        expected: i64,
        found: i64,
    },
    #[error("b-file has no entries")]
    Empty,
    #[error("{source_name}: not found")]
    NotFound { source_name: String },
    #[error("fetching {source_name} failed: {detail}")]
    Network {
        source_name: String,
        detail: String,
    },
    #[error("reading {source_name} failed: {detail}")]
    Io {
        source_name: String,
        detail: String,
    },
    #[error("computed range and reference range share no indices")]
    NoOverlap,
}

/// One OEIS b-file: consecutive (index, value) entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub sequence_id: String,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn first_index(&self) -> i64 {
        self.entries[0].0
    }

    pub fn last_index(&self) -> i64 {
        self.entries[self.entries.len() - 1].0
    }

    /// Value at an absolute index, if within range.
    pub fn value(&self, index: i64) -> Option<&BigInt> {
        let first = self.first_index();
        if index < first || index > self.last_index() {
            return None;
        }
        Some(&self.entries[(index - first) as usize].1)
    }
}

pub fn valid_sequence_id(id: &str) -> bool {
    let bytes = id.as_bytes();
    bytes.len() == 7 && bytes[0] == b'A' && bytes[1..].iter().all(u8::is_ascii_digit)
}

/// Parses b-file text: "index value" lines, '#' comments and blank lines
/// ignored, indices consecutive.
pub fn parse_bfile(text: &str, sequence_id: &str) -> Result<BFile, OeisError> {
    if !valid_sequence_id(sequence_id) {
        return Err(OeisError::BadSequenceId {
            id: sequence_id.to_string(),
        });
    }
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let malformed = || OeisError::MalformedLine {
            line,
            content: content.to_string(),
        };
        let mut tokens = content.split_whitespace();
        let (Some(index_tok), Some(value_tok), None) =
            (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(malformed());
        };
        let index: i64 = index_tok.parse().map_err(|_| malformed())?;
        let value: BigInt = value_tok.parse().map_err(|_| malformed())?;
        if let Some(&(prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(OeisError::NonMonotoneIndex {
                    line,
                    expected: prev + 1,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    if entries.is_empty() {
        return Err(OeisError::Empty);
    }
    Ok(BFile {
        sequence_id: sequence_id.to_string(),
        entries,
    })
}

/// Inverse of [`parse_bfile`]: one "index value" line per entry.
pub fn serialize_bfile(bfile: &BFile) -> String {
    let mut out = String::new();
    for (index, value) in &bfile.entries {
        out.push_str(&format!("{index} {value}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub expected: BigInt,
    pub got: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    Disagree,
    Partial,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Agree => "AGREE",
            Verdict::Disagree => "DISAGREE",
            Verdict::Partial => "PARTIAL",
        })
    }
}

/// Outcome of comparing a computed sequence against a reference b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceDiff {
    pub sequence_id: String,
    pub offset: i64,
    pub matches: usize,
    pub mismatches: Vec<Mismatch>,
    pub verdict: Verdict,
}

/// Compares computed (index, value) pairs against a reference, aligning
/// computed index i with reference index i + offset. The verdict is
/// AGREE when the overlap is nonempty and clean, DISAGREE when nothing
/// in the overlap matches, PARTIAL otherwise.
pub fn compare_sequence(
    computed: &[(i64, BigInt)],
    reference: &BFile,
    offset: i64,
) -> Result<SequenceDiff, OeisError> {
    let mut matches = 0;
    let mut mismatches = Vec::new();
    for (index, got) in computed {
        let Some(expected) = reference.value(index + offset) else {
            continue;
        };
        if expected == got {
            matches += 1;
        } else {
            mismatches.push(Mismatch {
                index: *index,
                expected: expected.clone(),
                got: got.clone(),
            });
        }
    }
    if matches == 0 && mismatches.is_empty() {
        return Err(OeisError::NoOverlap);
    }
    let verdict = if mismatches.is_empty() {
        Verdict::Agree
    } else if matches == 0 {
        Verdict::Disagree
    } else {
        Verdict::Partial
    };
    Ok(SequenceDiff {
        sequence_id: reference.sequence_id.clone(),
        offset,
        matches,
        mismatches,
        verdict,
    })
}

/// Reads and parses a b-file from a local path or an http(s) URL.
pub fn fetch_bfile(sequence_id: &str, source: &str) -> Result<BFile, OeisError> {
    let text = if source.starts_with("http://") || source.starts_with("https://") {
        fetch_url(source)?
    } else {
        match std::fs::read_to_string(Path::new(source)) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Err(OeisError::NotFound {
                    source_name: source.to_string(),
                })
            }
            Err(e) => {
                return Err(OeisError::Io {
                    source_name: source.to_string(),
                    detail: e.to_string(),
                })
            }
        }
    };
    parse_bfile(&text, sequence_id)
}

fn fetch_url(url: &str) -> Result<String, OeisError> {
    match ureq::get(url).call() {
        Ok(response) => {
            let mut text = String::new();
            response
                .into_reader()
                .take(16 << 20)
                .read_to_string(&mut text)
                .map_err(|e| OeisError::Io {
                    source_name: url.to_string(),
                    detail: e.to_string(),
                })?;
            Ok(text)
        }
        Err(ureq::Error::Status(404, _)) => Err(OeisError::NotFound {
            source_name: url.to_string(),
        }),
        Err(e) => Err(OeisError::Network {
            source_name: url.to_string(),
            detail: e.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_path(name: &str) -> String {
        format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    fn small(entries: &[(i64, i64)]) -> Vec<(i64, BigInt)> {
        entries.iter().map(|&(i, v)| (i, BigInt::from(v))).collect()
    }

    #[test]
    fn parse_plain_and_commented() {
        let b = parse_bfile("1 0\n2 0\n3 1", "A229162").unwrap();
        assert_eq!(b.entries, small(&[(1, 0), (2, 0), (3, 1)]));
        let b = parse_bfile("# comment\n1 0\n\n# more\n2 5\n", "A229162").unwrap();
        assert_eq!(b.entries, small(&[(1, 0), (2, 5)]));
        assert_eq!(b.value(2), Some(&BigInt::from(5)));
        assert_eq!(b.value(3), None);
        let b = parse_bfile("0 -7\n1 123456789012345678901234567890", "A000000").unwrap();
        assert_eq!(b.entries[0].1, BigInt::from(-7));
        assert_eq!(
            b.entries[1].1.to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn parse_rejects_bad_files() {
        assert!(matches!(
            parse_bfile("1 0", "B123456"),
            Err(OeisError::BadSequenceId { .. })
        ));
        assert!(matches!(
            parse_bfile("zzz", "A229162"),
            Err(OeisError::MalformedLine { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("1 2 3", "A229162"),
            Err(OeisError::MalformedLine { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("1 0\n1 5", "A229162"),
            Err(OeisError::NonMonotoneIndex {
                line: 2,
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_bfile("1 0\n3 5", "A229162"),
            Err(OeisError::NonMonotoneIndex { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("# nothing\n", "A229162"),
            Err(OeisError::Empty)
        ));
    }

    #[test]
    fn serialize_round_trips() {
        let b = parse_bfile("1 0\n2 0\n3 1\n4 99", "A229162").unwrap();
        assert_eq!(serialize_bfile(&b), "1 0\n2 0\n3 1\n4 99\n");
        assert_eq!(parse_bfile(&serialize_bfile(&b), "A229162").unwrap(), b);
    }

    #[test]
    fn compare_reflexive_and_offset() {
        let reference = parse_bfile("1 0\n2 0\n3 1\n4 1\n5 3", "A229162").unwrap();
        let diff = compare_sequence(&reference.entries.clone(), &reference, 0).unwrap();
        assert_eq!(diff.verdict, Verdict::Agree);
        assert_eq!(diff.matches, 5);
        assert!(diff.mismatches.is_empty());

        // same values stored at shifted indices
        let shifted = parse_bfile("11 0\n12 0\n13 1\n14 1\n15 3", "A229162").unwrap();
        let diff = compare_sequence(&reference.entries, &shifted, 10).unwrap();
        assert_eq!(diff.verdict, Verdict::Agree);
        assert_eq!(diff.matches, 5);
    }

    #[test]
    fn compare_detects_disagreement() {
        let reference = parse_bfile("1 0\n2 0\n3 1", "A229162").unwrap();
        let wrong = small(&[(1, 9), (2, 9), (3, 9)]);
        let diff = compare_sequence(&wrong, &reference, 0).unwrap();
        assert_eq!(diff.verdict, Verdict::Disagree);
        assert_eq!(diff.mismatches.len(), 3);

        let part = small(&[(1, 0), (2, 9)]);
        let diff = compare_sequence(&part, &reference, 0).unwrap();
        assert_eq!(diff.verdict, Verdict::Partial);
        assert_eq!(diff.matches, 1);
        assert_eq!(
            diff.mismatches,
            vec![Mismatch {
                index: 2,
                expected: BigInt::from(0),
                got: BigInt::from(9)
            }]
        );

        let outside = small(&[(10, 0)]);
        assert!(matches!(
            compare_sequence(&outside, &reference, 0),
            Err(OeisError::NoOverlap)
        ));
        assert!(matches!(
            compare_sequence(&[], &reference, 0),
            Err(OeisError::NoOverlap)
        ));
    }

    #[test]
    fn compare_verdict_is_swap_symmetric() {
        let a = parse_bfile("1 0\n2 0\n3 1\n4 7", "A111111").unwrap();
        let b = parse_bfile("3 0\n4 0\n5 2\n6 7", "A222222").unwrap();
        let ab = compare_sequence(&a.entries, &b, 2).unwrap();
        let ba = compare_sequence(&b.entries, &a, -2).unwrap();
        assert_eq!(ab.verdict, ba.verdict);
        assert_eq!(ab.matches, ba.matches);
        assert_eq!(ab.mismatches.len(), ba.mismatches.len());
    }

    #[test]
    fn fetch_reads_local_fixture() {
        let b = fetch_bfile("A229162", &fixture_path("A229162.txt")).unwrap();
        assert_eq!(b.first_index(), 1);
        assert!(b.last_index() >= 10);
        assert_eq!(b.value(7), Some(&BigInt::from(272)));

        assert!(matches!(
            fetch_bfile("A229162", "/no/such/file.txt"),
            Err(OeisError::NotFound { .. })
        ));
    }

    #[test]
    #[ignore = "touches the network"]
    fn fetch_reads_remote_bfile() {
        let b = fetch_bfile(
            "A229162",
            "https://oeis.org/A229162/b229162.txt",
        )
        .unwrap();
        assert_eq!(b.value(7), Some(&BigInt::from(272)));
    }
}
