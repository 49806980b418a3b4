//! Reader and writer for the classic alist sparse-matrix interchange format
//! used by LDPC tooling.
//!
//! Layout, all entries 1-based where they are indices:
//!
//! ```text
//! N M                      N = columns (variable nodes), M = rows (checks)
//! max_col_weight max_row_weight
//! <N column weights>
//! <M row weights>
//! <N lines: row indices of each column, zero-padded to max_col_weight>
//! <M lines: column indices of each row, zero-padded to max_row_weight>
//! ```

use crate::pbibd::SparseParityCheck;
use crate::{Error, Result};

/// Serializes a matrix to alist text. Deterministic: supports are written in
/// ascending index order.
pub fn write_alist(h: &SparseParityCheck) -> String {
    let cols = h.cols();
    let rows = h.rows();
    let max_col = (0..cols).map(|c| h.col_weight(c)).max().unwrap_or(0);
    let max_row = (0..rows).map(|r| h.row_weight(r)).max().unwrap_or(0);

    let mut out = String::new();
    out.push_str(&format!("{cols} {rows}\n"));
    out.push_str(&format!("{max_col} {max_row}\n"));
    push_numbers(&mut out, (0..cols).map(|c| h.col_weight(c)));
    push_numbers(&mut out, (0..rows).map(|r| h.row_weight(r)));
    for c in 0..cols {
        push_padded(&mut out, h.col_support(c), max_col);
    }
    for r in 0..rows {
        push_padded(&mut out, h.row_support(r), max_row);
    }
    out
}

fn push_numbers(out: &mut String, values: impl Iterator<Item = usize>) {
    let rendered: Vec<String> = values.map(|v| v.to_string()).collect();
    out.push_str(&rendered.join(" "));
    out.push('\n');
}

fn push_padded(out: &mut String, support: &[usize], width: usize) {
    let mut rendered: Vec<String> = support.iter().map(|&i| (i + 1).to_string()).collect();
    while rendered.len() < width {
        rendered.push("0".to_string());
    }
    out.push_str(&rendered.join(" "));
    out.push('\n');
}

/// Parses alist text back into a sparse matrix. Padding zeros are ignored;
/// the per-row lists are cross-checked against the per-column lists.
pub fn read_alist(text: &str) -> Result<SparseParityCheck> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad alist token {t:?}")))
    });
    let mut next = |what: &str| {
        tokens
            .next()
            .unwrap_or_else(|| Err(Error::Parse(format!("alist truncated before {what}"))))
    };

    let cols = next("column count")?;
    let rows = next("row count")?;
    let max_col = next("max column weight")?;
    let max_row = next("max row weight")?;
    let col_weights: Vec<usize> = (0..cols)
        .map(|_| next("column weight"))
        .collect::<Result<_>>()?;
    let row_weights: Vec<usize> = (0..rows)
        .map(|_| next("row weight"))
        .collect::<Result<_>>()?;
    if col_weights.iter().any(|&w| w > max_col) || row_weights.iter().any(|&w| w > max_row) {
        return Err(Error::Parse("alist weight exceeds declared maximum".into()));
    }

    let mut col_support = Vec::with_capacity(cols);
    for &weight in &col_weights {
        let mut support = Vec::with_capacity(weight);
        for slot in 0..max_col {
            let index = next("column entry")?;
            if index == 0 {
                continue;
            }
            if slot >= weight {
                return Err(Error::Parse("nonzero entry in padding slot".into()));
            }
            if index > rows {
                return Err(Error::Parse(format!("row index {index} out of range")));
            }
            support.push(index - 1);
        }
        if support.len() != weight {
            return Err(Error::Parse("column support shorter than its weight".into()));
        }
        col_support.push(support);
    }

    let h = SparseParityCheck::from_columns(rows, col_support, None)?;

    for (r, &weight) in row_weights.iter().enumerate() {
        let mut support = Vec::with_capacity(weight);
        for _ in 0..max_row {
            let index = next("row entry")?;
            if index == 0 {
                continue;
            }
            if index > cols {
                return Err(Error::Parse(format!("column index {index} out of range")));
            }
            support.push(index - 1);
        }
        support.sort_unstable();
        if support != h.row_support(r) {
            return Err(Error::Parse(format!(
                "row {r} support disagrees with the column lists"
            )));
        }
    }
    Ok(h)
}
