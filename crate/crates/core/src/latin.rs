//! Latin squares from array columns, with orthogonality profiling.
//!
//! Reading a nonzero column of a reduced cyclic difference covering array as
//! the first column of a `2n × 2n` array and obtaining each subsequent column
//! by adding 1 modulo `2n` yields a Latin square. The two squares built from
//! the canonical array's nonzero columns are *pseudo-orthogonal*: each symbol
//! of one meets exactly `2n − 1` distinct symbols of the other — one of them
//! twice, one never, the rest exactly once.

use crate::dca::CyclicDca;
use crate::{Error, Result};

/// A Latin square of a given order over `Z_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    order: usize,
    /// Row-major cells.
    cells: Vec<usize>,
}

impl LatinSquare {
    /// Builds the square whose row `r` is `q(r,col), q(r,col)+1, …` mod `2n`.
    ///
    /// Column 0 of the array is constant, which would not produce a Latin
    /// square, so it is rejected.
    pub fn from_dca_column(q: &CyclicDca, col: usize) -> Result<LatinSquare> {
        if col == 0 {
            return Err(Error::InvalidParameter(
                "column 0 is constant and yields no Latin square".into(),
            ));
        }
        if col >= q.k() {
            return Err(Error::InvalidParameter(format!(
                "column {col} out of range, array has {} columns",
                q.k()
            )));
        }
        let order = q.group_order();
        let mut cells = Vec::with_capacity(order * order);
        for r in 0..order {
            let first = q.entry(r, col);
            for c in 0..order {
                cells.push((first + c) % order);
            }
        }
        let square = LatinSquare { order, cells };
        debug_assert!(square.is_latin());
        Ok(square)
    }

    pub fn from_cells(order: usize, cells: Vec<usize>) -> Result<LatinSquare> {
        if cells.len() != order * order {
            return Err(Error::DimensionMismatch {
                expected: order * order,
                found: cells.len(),
            });
        }
        if let Some(&bad) = cells.iter().find(|&&s| s >= order) {
            return Err(Error::InvalidParameter(format!(
                "symbol {bad} outside Z_{order}"
            )));
        }
        Ok(LatinSquare { order, cells })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        assert!(row < self.order && col < self.order);
        self.cells[row * self.order + col]
    }

    /// Each symbol occurs once per row and once per column.
    pub fn is_latin(&self) -> bool {
        let m = self.order;
        for i in 0..m {
            let mut row_seen = vec![false; m];
            let mut col_seen = vec![false; m];
            for j in 0..m {
                let r = self.get(i, j);
                let c = self.get(j, i);
                if row_seen[r] || col_seen[c] {
                    return false;
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        true
    }

    /// Table layout used in docs and the CLI: rows of space-separated
    /// symbols, one row per line.
    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        for r in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|c| self.get(r, c).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Cell-pair counts of two equal-order squares:
/// `counts[a][b] = |{(i,j) : A(i,j)=a, B(i,j)=b}|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairProfile {
    order: usize,
    counts: Vec<usize>,
}

impl PairProfile {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn count(&self, a: usize, b: usize) -> usize {
        self.counts[a * self.order + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.counts[a * self.order..(a + 1) * self.order]
    }
}

pub fn pair_profile(a: &LatinSquare, b: &LatinSquare) -> Result<PairProfile> {
    if a.order() != b.order() {
        return Err(Error::DimensionMismatch {
            expected: a.order(),
            found: b.order(),
        });
    }
    let m = a.order();
    let mut counts = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            counts[a.get(i, j) * m + b.get(i, j)] += 1;
        }
    }
    Ok(PairProfile { order: m, counts })
}

/// Pseudo-orthogonal: every profile row has exactly one zero, exactly one 2,
/// and ones elsewhere.
pub fn are_pseudo_orthogonal(a: &LatinSquare, b: &LatinSquare) -> Result<bool> {
    let profile = pair_profile(a, b)?;
    let m = profile.order();
    Ok((0..m).all(|sym| {
        let row = profile.row(sym);
        let zeros = row.iter().filter(|&&c| c == 0).count();
        let twos = row.iter().filter(|&&c| c == 2).count();
        let ones = row.iter().filter(|&&c| c == 1).count();
        zeros == 1 && twos == 1 && ones == m - 2
    }))
}

/// Orthogonal in the classical sense: every symbol pair occurs exactly once.
pub fn are_orthogonal(a: &LatinSquare, b: &LatinSquare) -> Result<bool> {
    let profile = pair_profile(a, b)?;
    Ok(profile.counts.iter().all(|&c| c == 1))
}
