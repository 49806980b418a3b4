//! Resolvable partially balanced incomplete block design on `Z_6n` and its
//! incidence matrix.
//!
//! The point set `Z_6n` splits into three groups `[0,2n)`, `[2n,4n)` and
//! `[4n,6n)`. From the canonical three-column array the `2n − 1` starter
//! blocks `(0, j, x(j))`, `j ∈ Z_2n ∖ {n}` (where `x` is
//! [`crate::dca::canonical_third_column`]), are developed into orbits
//!
//! ```text
//! B_{j,a} = { a,  2n + (j + a mod 2n),  4n + (x(j) + a mod 2n) },   a ∈ Z_2n.
//! ```
//!
//! Each orbit is a parallel class, so the `4n² − 2n` blocks form a resolvable
//! design in which every pair of points lies in at most one block. The
//! starter `(0, n, 0)` is omitted: keeping it would cover some cross-group
//! pairs twice. The design's point-block incidence matrix is the LDPC
//! parity-check matrix: `6n` rows of weight `2n − 1`, `4n² − 2n` columns of
//! weight 3.

use crate::dca::canonical_third_column;
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::{Error, Result};

/// A block: one point from each of the three groups, plus the orbit
/// coordinates it was developed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    /// `[p0, p1, p2]` with `p0 ∈ [0,2n)`, `p1 ∈ [2n,4n)`, `p2 ∈ [4n,6n)`.
    pub points: [usize; 3],
    /// Starter index `j` (never equal to `n`).
    pub orbit: usize,
    /// Development shift `a`.
    pub shift: usize,
}

impl Block {
    pub fn contains(&self, point: usize) -> bool {
        self.points.contains(&point)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "design requires n >= 2, got {n}"
        )));
    }
    Ok(())
}

/// The `2n − 1` ordered starter blocks `(0, j, x(j))`, ascending `j`,
/// skipping `j = n`.
pub fn starter_blocks(n: usize) -> Result<Vec<[usize; 3]>> {
    check_n(n)?;
    Ok((0..2 * n)
        .filter(|&j| j != n)
        .map(|j| [0, j, canonical_third_column(n, j)])
        .collect())
}

/// Develops starter `j` into its orbit of `2n` blocks, `a = 0..2n−1`.
pub fn develop_orbit(n: usize, j: usize) -> Result<Vec<Block>> {
    check_n(n)?;
    let m = 2 * n;
    if j >= m {
        return Err(Error::InvalidParameter(format!(
            "orbit index {j} out of range for Z_{m}"
        )));
    }
    if j == n {
        return Err(Error::InvalidParameter(format!(
            "orbit j = n = {n} is omitted from the design"
        )));
    }
    let x = canonical_third_column(n, j);
    Ok((0..m)
        .map(|a| Block {
            points: [a, m + (j + a) % m, 2 * m + (x + a) % m],
            orbit: j,
            shift: a,
        })
        .collect())
}

/// The whole design: blocks ordered orbit-major (`j` ascending skipping `n`,
/// `a` ascending inside each orbit), one parallel class per orbit.
#[derive(Debug, Clone)]
pub struct BlockDesign {
    pub n: usize,
    pub blocks: Vec<Block>,
    /// Per parallel class, the contiguous block-index range.
    pub classes: Vec<std::ops::Range<usize>>,
}

/// Builds the design for a given `n`: `4n² − 2n` blocks in `2n − 1` classes.
pub fn build_design(n: usize) -> Result<BlockDesign> {
    check_n(n)?;
    let m = 2 * n;
    let mut blocks = Vec::with_capacity((m - 1) * m);
    let mut classes = Vec::with_capacity(m - 1);
    for j in (0..m).filter(|&j| j != n) {
        let start = blocks.len();
        blocks.extend(develop_orbit(n, j)?);
        classes.push(start..blocks.len());
    }
    Ok(BlockDesign { n, blocks, classes })
}

impl BlockDesign {
    /// Number of points, `6n`.
    pub fn points(&self) -> usize {
        6 * self.n
    }

    /// Column index of block `B_{j,a}` under the orbit-major ordering,
    /// computed by formula rather than search. `None` if `j = n` or out of
    /// range.
    pub fn column_index(&self, j: usize, a: usize) -> Option<usize> {
        let m = 2 * self.n;
        if j >= m || a >= m || j == self.n {
            return None;
        }
        let orbit_pos = if j < self.n { j } else { j - 1 };
        Some(orbit_pos * m + a)
    }

    /// Looks up the column of a block given as a point triple, if present.
    pub fn column_of_points(&self, points: [usize; 3]) -> Option<usize> {
        let m = 2 * self.n;
        let [p0, p1, p2] = points;
        if p0 >= m || !(m..2 * m).contains(&p1) || !(2 * m..3 * m).contains(&p2) {
            return None;
        }
        let j = (p1 - m + m - p0) % m;
        if canonical_third_column(self.n, j) != (p2 - 2 * m + m - p0) % m {
            return None;
        }
        self.column_index(j, p0)
    }

    /// Number of blocks containing both points.
    pub fn lambda_of(&self, y: usize, z: usize) -> Result<usize> {
        let v = self.points();
        if y == z {
            return Err(Error::InvalidParameter(format!(
                "pair concurrence requires distinct points, got ({y},{z})"
            )));
        }
        if y >= v || z >= v {
            return Err(Error::InvalidParameter(format!(
                "point out of range: ({y},{z}) with {v} points"
            )));
        }
        Ok(self
            .blocks
            .iter()
            .filter(|b| b.contains(y) && b.contains(z))
            .count())
    }

    /// Checks the pair-concurrence profile of every unordered point pair
    /// against [`expected_lambda`].
    pub fn verify_lambda_table(&self) -> bool {
        let v = self.points();
        let mut counts = vec![0u32; v * v];
        for b in &self.blocks {
            let [p0, p1, p2] = b.points;
            counts[p0 * v + p1] += 1;
            counts[p0 * v + p2] += 1;
            counts[p1 * v + p2] += 1;
        }
        for y in 0..v {
            for z in (y + 1)..v {
                if counts[y * v + z] as usize != expected_lambda(self.n, y, z) {
                    return false;
                }
            }
        }
        true
    }

    /// Incidence matrix in sparse form; column `c` is block `c`.
    pub fn incidence_matrix(&self) -> SparseParityCheck {
        let rows = self.points();
        let col_support: Vec<Vec<usize>> =
            self.blocks.iter().map(|b| b.points.to_vec()).collect();
        SparseParityCheck::from_columns(rows, col_support, Some(self.n))
            .expect("design blocks are in range")
    }

    /// Debug dump, one block per line: `j a : p0 p1 p2`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for b in &self.blocks {
            out.push_str(&format!(
                "{} {} : {} {} {}\n",
                b.orbit, b.shift, b.points[0], b.points[1], b.points[2]
            ));
        }
        out
    }
}

/// Pair concurrence the design is required to have.
///
/// Writing `g(p) = p / 2n` for the group of a point and `o(p) = p mod 2n`
/// for its within-group offset, two distinct points `y, z` lie in a common
/// block exactly once, except that no block contains:
///
/// * two points of the same group;
/// * a group-0/group-1 pair with `o(z) − o(y) ≡ n (mod 2n)` — the orbit that
///   would cover these offsets is the omitted starter `(0, n, 0)`;
/// * a group-0/group-2 pair with equal offsets — the omitted starter again;
/// * a group-1/group-2 pair with equal offsets — the offset difference
///   `x(j) − j` never vanishes over `j ∈ Z_2n`.
pub fn expected_lambda(n: usize, y: usize, z: usize) -> usize {
    let m = 2 * n;
    let (y, z) = if y <= z { (y, z) } else { (z, y) };
    let (gy, gz) = (y / m, z / m);
    let (oy, oz) = (y % m, z % m);
    if gy == gz {
        return 0;
    }
    let uncovered = match (gy, gz) {
        (0, 1) => (oz + m - oy) % m == n,
        (0, 2) | (1, 2) => oy == oz,
        _ => unreachable!("groups are ordered"),
    };
    usize::from(!uncovered)
}

/// A sparse 0/1 parity-check matrix stored by column and row supports.
///
/// Design-derived matrices carry their `n` and satisfy: every column has
/// exactly 3 entries, every row exactly `2n − 1`. The general constructor
/// also admits arbitrary supports, which the verifiers in
/// [`crate::analysis`] are tested against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseParityCheck {
    n: Option<usize>,
    rows: usize,
    cols: usize,
    col_support: Vec<Vec<usize>>,
    row_support: Vec<Vec<usize>>,
}

impl SparseParityCheck {
    /// Builds a matrix from per-column row supports. Supports are sorted and
    /// must contain in-range, distinct indices.
    pub fn from_columns(
        rows: usize,
        col_support: Vec<Vec<usize>>,
        n: Option<usize>,
    ) -> Result<SparseParityCheck> {
        let cols = col_support.len();
        let mut sorted_cols = col_support;
        let mut row_support = vec![Vec::new(); rows];
        for (c, support) in sorted_cols.iter_mut().enumerate() {
            support.sort_unstable();
            if support.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "column {c} has a repeated row index"
                )));
            }
            if let Some(&r) = support.last() {
                if r >= rows {
                    return Err(Error::InvalidParameter(format!(
                        "column {c} references row {r}, matrix has {rows} rows"
                    )));
                }
            }
            for &r in support.iter() {
                row_support[r].push(c);
            }
        }
        Ok(SparseParityCheck {
            n,
            rows,
            cols,
            col_support: sorted_cols,
            row_support,
        })
    }

    /// The `n` of the generating design, when this matrix came from one.
    pub fn design_n(&self) -> Option<usize> {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col_support(&self, c: usize) -> &[usize] {
        &self.col_support[c]
    }

    pub fn row_support(&self, r: usize) -> &[usize] {
        &self.row_support[r]
    }

    pub fn col_weight(&self, c: usize) -> usize {
        self.col_support[c].len()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_support[r].len()
    }

    /// Dense mirror for GF(2) linear algebra.
    pub fn to_dense(&self) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.rows, self.cols);
        for (c, support) in self.col_support.iter().enumerate() {
            for &r in support {
                m.set(r, c, true);
            }
        }
        m
    }

    /// Syndrome of a word: XOR of the supports of its set columns.
    pub fn syndrome(&self, word: &Gf2Vector) -> Result<Gf2Vector> {
        if word.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: word.len(),
            });
        }
        let mut s = Gf2Vector::zeros(self.rows);
        for c in word.ones() {
            for &r in &self.col_support[c] {
                s.flip(r);
            }
        }
        Ok(s)
    }
}
