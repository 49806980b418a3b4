//! Cyclic difference covering arrays over `Z_2n` in reduced form.
//!
//! A reduced cyclic difference covering array is a `2n × k` array over `Z_2n`
//! whose all-zero row has been deleted. It must satisfy two axioms:
//!
//! * **P1** — column 0 is all zeros and every other column is a permutation
//!   of `Z_2n`;
//! * **P2** — for every pair of distinct nonzero columns `j, j′`, the
//!   multiset of row differences `q(i,j) − q(i,j′) mod 2n` covers
//!   `Z_2n ∖ {0}`.
//!
//! Because there are `2n` rows and only `2n − 1` nonzero residues, a P2 pair
//! necessarily repeats exactly one residue; in the canonical three-column
//! array built by [`CyclicDca::canonical`] the repeated residue is always `n`.

use crate::{Error, Result};

/// Entry of the canonical array's third column: `2j+1` on the first half of
/// the index range, `2(j−n)` on the second half. A bijection on `Z_2n` that
/// maps the excluded index `n` to `0`.
pub fn canonical_third_column(n: usize, j: usize) -> usize {
    debug_assert!(j < 2 * n);
    if j < n {
        2 * j + 1
    } else {
        2 * (j - n)
    }
}

/// A reduced cyclic difference covering array over `Z_2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDca {
    n: usize,
    k: usize,
    /// Row-major, `2n` rows by `k` columns.
    entries: Vec<usize>,
}

impl CyclicDca {
    /// The canonical three-column array: column 0 is zero, column 1 is the
    /// identity `j ↦ j`, column 2 is [`canonical_third_column`].
    pub fn canonical(n: usize) -> Result<CyclicDca> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "array requires n >= 2, got {n}"
            )));
        }
        let rows = 2 * n;
        let mut entries = Vec::with_capacity(rows * 3);
        for j in 0..rows {
            entries.push(0);
            entries.push(j);
            entries.push(canonical_third_column(n, j));
        }
        Ok(CyclicDca { n, k: 3, entries })
    }

    /// Builds an array from explicit rows. The row count must be even and at
    /// least 4 (it equals `2n`), every row must have the same length, and
    /// every entry must lie in `Z_2n`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<CyclicDca> {
        if rows.len() < 4 || !rows.len().is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "row count must be even and >= 4, got {}",
                rows.len()
            )));
        }
        let n = rows.len() / 2;
        let k = rows[0].len();
        if k == 0 {
            return Err(Error::InvalidParameter("rows are empty".into()));
        }
        let mut entries = Vec::with_capacity(rows.len() * k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {k}",
                    row.len()
                )));
            }
            for &e in row {
                if e >= 2 * n {
                    return Err(Error::InvalidParameter(format!(
                        "entry {e} in row {i} is outside Z_{}",
                        2 * n
                    )));
                }
                entries.push(e);
            }
        }
        Ok(CyclicDca { n, k, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Order of the underlying cyclic group, `2n`.
    pub fn group_order(&self) -> usize {
        2 * self.n
    }

    /// Number of columns.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        assert!(row < 2 * self.n && col < self.k, "entry ({row},{col}) out of range");
        self.entries[row * self.k + col]
    }

    pub fn column(&self, col: usize) -> Vec<usize> {
        (0..2 * self.n).map(|r| self.entry(r, col)).collect()
    }

    /// P1: column 0 all zero, every other column a permutation of `Z_2n`.
    pub fn verify_p1(&self) -> bool {
        let m = self.group_order();
        if (0..m).any(|r| self.entry(r, 0) != 0) {
            return false;
        }
        for col in 1..self.k {
            let mut seen = vec![false; m];
            for r in 0..m {
                let e = self.entry(r, col);
                if seen[e] {
                    return false;
                }
                seen[e] = true;
            }
        }
        true
    }

    /// Multiset of row differences between two distinct columns.
    pub fn difference_profile(&self, j: usize, j_prime: usize) -> Result<DifferenceProfile> {
        if j == j_prime {
            return Err(Error::InvalidParameter(format!(
                "difference profile requires distinct columns, got ({j},{j_prime})"
            )));
        }
        if j >= self.k || j_prime >= self.k {
            return Err(Error::InvalidParameter(format!(
                "column index out of range: ({j},{j_prime}) with k={}",
                self.k
            )));
        }
        let m = self.group_order();
        let mut counts = vec![0usize; m];
        for r in 0..m {
            let d = (self.entry(r, j) + m - self.entry(r, j_prime)) % m;
            counts[d] += 1;
        }
        Ok(DifferenceProfile {
            column_pair: (j, j_prime),
            counts,
        })
    }

    /// P2: for all distinct nonzero column pairs, every nonzero residue
    /// appears at least once among the row differences.
    pub fn verify_p2(&self) -> bool {
        self.nonzero_pairs()
            .all(|(j, jp)| self.difference_profile(j, jp).unwrap().covers_nonzero())
    }

    /// Whether every nonzero column pair realises the canonical multiset:
    /// each residue `1..2n−1` once and `n` twice.
    pub fn p2_canonical_multiset(&self) -> bool {
        self.nonzero_pairs()
            .all(|(j, jp)| self.difference_profile(j, jp).unwrap().is_canonical_multiset())
    }

    fn nonzero_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.k).flat_map(move |j| {
            (1..self.k)
                .filter(move |&jp| jp != j)
                .map(move |jp| (j, jp))
        })
    }
}

/// Row-difference multiset for one ordered column pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceProfile {
    pub column_pair: (usize, usize),
    /// `counts[d]` = number of rows whose difference is the residue `d`.
    pub counts: Vec<usize>,
}

impl DifferenceProfile {
    pub fn group_order(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, residue: usize) -> usize {
        self.counts[residue]
    }

    /// Every nonzero residue appears at least once.
    pub fn covers_nonzero(&self) -> bool {
        self.counts[1..].iter().all(|&c| c >= 1)
    }

    /// Each of `1..2n−1` exactly once and `n` exactly twice (so the zero
    /// residue never appears).
    pub fn is_canonical_multiset(&self) -> bool {
        let m = self.group_order();
        let n = m / 2;
        self.counts[0] == 0
            && (1..m).all(|d| self.counts[d] == if d == n { 2 } else { 1 })
    }
}

/// Coverage report for one column pair of a general array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoverage {
    pub columns: (usize, usize),
    pub covered: bool,
    /// Residues of `Z_m` that never occur as a difference.
    pub missing: Vec<usize>,
}

/// Coverage report for a full (unreduced) difference covering array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralDcaReport {
    pub group_order: usize,
    pub pairs: Vec<PairCoverage>,
    pub all_covered: bool,
}

/// Checks the unreduced covering-array definition for an arbitrary `η × k`
/// array over `Z_m`: for every unordered column pair, the difference multiset
/// must contain every element of `Z_m` at least once. A single-column array
/// is vacuously covered.
pub fn verify_general_dca(rows: &[Vec<usize>], m: usize) -> Result<GeneralDcaReport> {
    if m == 0 {
        return Err(Error::InvalidParameter("group order must be positive".into()));
    }
    let k = rows.first().map_or(0, Vec::len);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != k {
            return Err(Error::Parse(format!(
                "row {i} has {} entries, expected {k}",
                row.len()
            )));
        }
        if let Some(&e) = row.iter().find(|&&e| e >= m) {
            return Err(Error::InvalidParameter(format!(
                "entry {e} in row {i} is outside Z_{m}"
            )));
        }
    }
    let mut pairs = Vec::new();
    for j in 0..k {
        for jp in (j + 1)..k {
            let mut seen = vec![false; m];
            for row in rows {
                seen[(row[j] + m - row[jp]) % m] = true;
            }
            let missing: Vec<usize> = (0..m).filter(|&d| !seen[d]).collect();
            pairs.push(PairCoverage {
                columns: (j, jp),
                covered: missing.is_empty(),
                missing,
            });
        }
    }
    let all_covered = pairs.iter().all(|p| p.covered);
    Ok(GeneralDcaReport {
        group_order: m,
        pairs,
        all_covered,
    })
}

/// Parses a plain-text array: one row per line, space-separated residues.
/// Blank lines are ignored.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad entry {tok:?}", lineno + 1)))
            })
            .collect::<Result<Vec<usize>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A known four-column example over Z_6, rows of the reduced array.
    fn fixture_4_6_6() -> CyclicDca {
        let text = include_str!("../tests/fixtures/dca_star_4_6_6.txt");
        CyclicDca::from_rows(&parse_rows(text).unwrap()).unwrap()
    }

    #[test]
    fn canonical_columns_for_n3() {
        let q = CyclicDca::canonical(3).unwrap();
        assert_eq!(q.column(0), vec![0, 0, 0, 0, 0, 0]);
        assert_eq!(q.column(1), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(q.column(2), vec![1, 3, 5, 0, 2, 4]);
    }

    #[test]
    fn third_column_maps_n_to_zero() {
        for n in 2..40 {
            assert_eq!(canonical_third_column(n, n), 0);
        }
    }

    #[test]
    fn canonical_rejects_small_n() {
        assert!(CyclicDca::canonical(0).is_err());
        assert!(CyclicDca::canonical(1).is_err());
    }

    #[test]
    fn p1_holds_for_canonical_and_fixture() {
        assert!(CyclicDca::canonical(3).unwrap().verify_p1());
        assert!(fixture_4_6_6().verify_p1());
    }

    #[test]
    fn p1_fails_on_repeated_entry() {
        let mut rows: Vec<Vec<usize>> = (0..6).map(|j| vec![0, j]).collect();
        rows[3][1] = 2; // column 1 now repeats 2 and misses 3
        let q = CyclicDca::from_rows(&rows).unwrap();
        assert!(!q.verify_p1());
    }

    #[test]
    fn difference_profile_examples_n3() {
        let q = CyclicDca::canonical(3).unwrap();
        let p12 = q.difference_profile(1, 2).unwrap();
        assert_eq!(p12.counts, vec![0, 1, 1, 2, 1, 1]);

        let p10 = q.difference_profile(1, 0).unwrap();
        assert_eq!(p10.counts, vec![1, 1, 1, 1, 1, 1]);

        // Reversing the pair negates every difference.
        let p21 = q.difference_profile(2, 1).unwrap();
        let m = q.group_order();
        for d in 0..m {
            assert_eq!(p21.count(d), p12.count((m - d) % m));
        }
    }

    #[test]
    fn profile_rejects_equal_columns() {
        let q = CyclicDca::canonical(3).unwrap();
        assert!(q.difference_profile(1, 1).is_err());
        assert!(q.difference_profile(1, 7).is_err());
    }

    #[test]
    fn p2_holds_for_canonical_range() {
        for n in 2..=50 {
            let q = CyclicDca::canonical(n).unwrap();
            assert!(q.verify_p1(), "P1 failed at n={n}");
            assert!(q.verify_p2(), "P2 failed at n={n}");
            assert!(q.p2_canonical_multiset(), "multiset failed at n={n}");
        }
    }

    #[test]
    fn p2_holds_for_fixture() {
        let q = fixture_4_6_6();
        assert!(q.verify_p2());
        assert!(q.p2_canonical_multiset());
    }

    #[test]
    fn p2_fails_when_columns_coincide() {
        let n = 3;
        let rows: Vec<Vec<usize>> = (0..2 * n).map(|j| vec![0, j, j]).collect();
        let q = CyclicDca::from_rows(&rows).unwrap();
        assert!(!q.verify_p2());
    }

    #[test]
    fn general_dca_on_fixture_with_zero_row() {
        let mut rows = vec![vec![0, 0, 0, 0]];
        rows.extend(parse_rows(include_str!("../tests/fixtures/dca_star_4_6_6.txt")).unwrap());
        let report = verify_general_dca(&rows, 6).unwrap();
        assert!(report.all_covered);
        assert_eq!(report.pairs.len(), 6);
    }

    #[test]
    fn general_dca_single_column_is_vacuous() {
        let rows = vec![vec![0], vec![1], vec![2]];
        let report = verify_general_dca(&rows, 3).unwrap();
        assert!(report.all_covered);
        assert!(report.pairs.is_empty());
    }

    #[test]
    fn general_dca_tiny_exhaustive() {
        let rows = vec![vec![0, 0], vec![0, 1]];
        let report = verify_general_dca(&rows, 2).unwrap();
        assert!(report.all_covered);
    }

    #[test]
    fn coverage_invariant_under_column_shift() {
        // Adding a constant to one column permutes that column's differences;
        // coverage of Z_m is preserved. Checked on the unreduced canonical
        // array (zero row reinstated).
        for n in 2..8 {
            let q = CyclicDca::canonical(n).unwrap();
            let m = q.group_order();
            let mut rows = vec![vec![0; 3]];
            rows.extend((0..m).map(|r| (0..3).map(|c| q.entry(r, c)).collect::<Vec<_>>()));
            assert!(verify_general_dca(&rows, m).unwrap().all_covered);
            for col in 0..3 {
                for shift in 1..m {
                    let mut shifted = rows.clone();
                    for row in &mut shifted {
                        row[col] = (row[col] + shift) % m;
                    }
                    assert!(
                        verify_general_dca(&shifted, m).unwrap().all_covered,
                        "coverage lost at n={n}, col={col}, shift={shift}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rows("0 1 x").is_err());
    }
}
