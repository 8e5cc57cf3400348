//! Binary matrices packed one row per machine word.
//!
//! A row of width `m` is stored as the integer `x = sum a_ij * 2^(m-1-j)`,
//! so the first column is the most significant bit and comparing two rows
//! as integers is exactly lexicographic comparison of their bit strings.

use std::fmt;

use thiserror::Error;

/// Hard cap on both dimensions so every row and column code fits in a `u64`.
pub const MAX_WIDTH: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("line {line}, column {column}: expected '0' or '1', found {found:?}")]
    BadCharacter {
        line: usize,
        column: usize,
        found: char,
    },
    #[error("line {line}: row has {found} columns, previous rows have {expected}")]
    RaggedRows {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("no matrix rows in input")]
    EmptyInput,
    #[error("expected a single matrix, found {count} blank-line-separated blocks")]
    MultipleMatrices { count: usize },
    #[error("matrix has {n_cols} columns, limit is {MAX_WIDTH}")]
    TooWide { n_cols: usize },
    #[error("matrix has {n_rows} rows, limit is {MAX_WIDTH}")]
    TooTall { n_rows: usize },
    #[error("row {row} has bits outside the declared width")]
    CodeOutOfRange { row: usize },
    #[error("matrix is {n_rows}x{n_cols}, operation requires a square matrix")]
    NonSquare { n_rows: usize, n_cols: usize },
}

fn width_mask(width: usize) -> u64 {
    debug_assert!((1..=MAX_WIDTH).contains(&width));
    if width == MAX_WIDTH {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

fn check_dims(n_rows: usize, n_cols: usize) -> Result<(), MatrixError> {
    if n_rows == 0 || n_cols == 0 {
        return Err(MatrixError::EmptyInput);
    }
    if n_cols > MAX_WIDTH {
        return Err(MatrixError::TooWide { n_cols });
    }
    if n_rows > MAX_WIDTH {
        return Err(MatrixError::TooTall { n_rows });
    }
    Ok(())
}

/// Row or column codes of a matrix, in top-to-bottom (left-to-right) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeTuple(Vec<u64>);

impl CodeTuple {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl From<Vec<u64>> for CodeTuple {
    fn from(values: Vec<u64>) -> Self {
        CodeTuple(values)
    }
}

/// An `n_rows x n_cols` 0/1 matrix, each row packed into one `u64`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<u64>,
}

impl BinaryMatrix {
    /// Builds a matrix from packed row codes. Fails if a code has bits
    /// beyond `n_cols` or either dimension is 0 or exceeds [`MAX_WIDTH`].
    pub fn from_row_codes(codes: &[u64], n_cols: usize) -> Result<Self, MatrixError> {
        check_dims(codes.len(), n_cols)?;
        let mask = width_mask(n_cols);
        for (row, &code) in codes.iter().enumerate() {
            if code & !mask != 0 {
                return Err(MatrixError::CodeOutOfRange { row });
            }
        }
        Ok(BinaryMatrix {
            n_rows: codes.len(),
            n_cols,
            rows: codes.to_vec(),
        })
    }

    /// Builds a matrix entrywise; `f(i, j)` gives the entry in row `i`, column `j`.
    pub fn from_fn<F>(n_rows: usize, n_cols: usize, mut f: F) -> Result<Self, MatrixError>
    where
        F: FnMut(usize, usize) -> bool,
    {
        check_dims(n_rows, n_cols)?;
        let rows = (0..n_rows)
            .map(|i| {
                (0..n_cols)
                    .filter(|&j| f(i, j))
                    .fold(0u64, |acc, j| acc | 1 << (n_cols - 1 - j))
            })
            .collect();
        Ok(BinaryMatrix {
            n_rows,
            n_cols,
            rows,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Entry at row `i`, column `j`. Panics if out of range.
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n_rows && j < self.n_cols, "index out of range");
        self.rows[i] >> (self.n_cols - 1 - j) & 1 == 1
    }

    /// Packed code of row `i`. Panics if out of range.
    pub fn row_code(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// Codes x_1..x_n, one per row, first column most significant.
    pub fn row_codes(&self) -> CodeTuple {
        CodeTuple(self.rows.clone())
    }

    /// Codes y_1..y_m, one per column, first row most significant.
    pub fn col_codes(&self) -> CodeTuple {
        let mut values = vec![0u64; self.n_cols];
        for (i, &row) in self.rows.iter().enumerate() {
            let weight = 1u64 << (self.n_rows - 1 - i);
            for (j, value) in values.iter_mut().enumerate() {
                if row >> (self.n_cols - 1 - j) & 1 == 1 {
                    *value |= weight;
                }
            }
        }
        CodeTuple(values)
    }

    /// True iff the matrix is square with exactly `k` ones in every row and
    /// every column.
    pub fn is_lambda(&self, k: usize) -> Result<bool, MatrixError> {
        if self.n_rows != self.n_cols {
            return Err(MatrixError::NonSquare {
                n_rows: self.n_rows,
                n_cols: self.n_cols,
            });
        }
        if self.rows.iter().any(|r| r.count_ones() as usize != k) {
            return Ok(false);
        }
        Ok(self
            .col_codes()
            .values()
            .iter()
            .all(|c| c.count_ones() as usize == k))
    }

    /// True iff both the row codes and the column codes are nondecreasing.
    pub fn is_nondecreasing_lex(&self) -> bool {
        self.row_codes().is_nondecreasing() && self.col_codes().is_nondecreasing()
    }

    /// True iff both the row codes and the column codes are nonincreasing.
    pub fn is_nonincreasing_lex(&self) -> bool {
        self.row_codes().is_nonincreasing() && self.col_codes().is_nonincreasing()
    }

    /// Entrywise complement.
    pub fn complement(&self) -> BinaryMatrix {
        let mask = width_mask(self.n_cols);
        BinaryMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            rows: self.rows.iter().map(|r| !r & mask).collect(),
        }
    }

    pub fn transpose(&self) -> BinaryMatrix {
        BinaryMatrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            rows: self.col_codes().into_vec(),
        }
    }

    /// One line of '0'/'1' characters per row, no trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.n_cols + 1) * self.n_rows);
        for (i, &row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            for j in 0..self.n_cols {
                out.push(if row >> (self.n_cols - 1 - j) & 1 == 1 {
                    '1'
                } else {
                    '0'
                });
            }
        }
        out
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BinaryMatrix({}x{}, rows {:?})",
            self.n_rows, self.n_cols, self.rows
        )
    }
}

/// Parses one matrix block: (1-based line number, line content) pairs.
fn parse_block(lines: &[(usize, &str)]) -> Result<BinaryMatrix, MatrixError> {
    let n_cols = lines[0].1.chars().count();
    if n_cols > MAX_WIDTH {
        return Err(MatrixError::TooWide { n_cols });
    }
    if lines.len() > MAX_WIDTH {
        return Err(MatrixError::TooTall {
            n_rows: lines.len(),
        });
    }
    let mut rows = Vec::with_capacity(lines.len());
    for &(line_no, line) in lines {
        let mut code = 0u64;
        let mut width = 0usize;
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '0' => code <<= 1,
                '1' => code = code << 1 | 1,
                _ => {
                    return Err(MatrixError::BadCharacter {
                        line: line_no,
                        column: col + 1,
                        found: ch,
                    })
                }
            }
            width += 1;
            if width > n_cols {
                break;
            }
        }
        if width != n_cols {
            return Err(MatrixError::RaggedRows {
                line: line_no,
                expected: n_cols,
                found: line.chars().count(),
            });
        }
        rows.push(code);
    }
    Ok(BinaryMatrix {
        n_rows: rows.len(),
        n_cols,
        rows,
    })
}

/// Splits text into blank-line-separated blocks of (line number, content).
fn blocks(text: &str) -> Vec<Vec<(usize, &str)>> {
    let mut out: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        } else {
            current.push((idx + 1, line));
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

/// Parses text holding exactly one matrix (one row per line of '0'/'1').
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix, MatrixError> {
    let blocks = blocks(text);
    match blocks.len() {
        0 => Err(MatrixError::EmptyInput),
        1 => parse_block(&blocks[0]),
        count => Err(MatrixError::MultipleMatrices { count }),
    }
}

/// Parses a stream of blank-line-separated matrices. Empty input is an
/// empty stream, not an error.
pub fn parse_matrix_stream(text: &str) -> Result<Vec<BinaryMatrix>, MatrixError> {
    blocks(text).iter().map(|b| parse_block(b)).collect()
}

/// Serializes matrices as blank-line-separated '0'/'1' blocks, with a
/// trailing newline when the stream is nonempty.
pub fn serialize_matrix_stream(matrices: &[BinaryMatrix]) -> String {
    let mut out = String::new();
    for (i, m) in matrices.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&m.to_text());
        out.push('\n');
    }
    out
}
