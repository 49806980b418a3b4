//! Systematic encoding and iterative decoding against a parity-check matrix.
//!
//! LLR sign convention throughout: positive means bit 0 is more likely; an
//! LLR of exactly 0 decodes to 1, so an all-zero (information-free) input is
//! never mistaken for the all-zero codeword — the all-ones word fails the
//! odd-weight checks of these designs.

use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::pbibd::SparseParityCheck;
use crate::{Error, Result};

/// Message LLR magnitudes are clamped here to keep `tanh`/`atanh` stable.
pub const LLR_CLAMP: f64 = 30.0;

/// Default iteration budget for both decoders.
pub const DEFAULT_MAX_ITERS: usize = 50;

/// Systematic encoder backed by a generator matrix derived from `H`.
#[derive(Debug, Clone)]
pub struct Encoder {
    h: SparseParityCheck,
    generator: Gf2Matrix,
    col_perm: Vec<usize>,
}

impl Encoder {
    /// Builds the generator from the dense mirror of `h`. Every generator
    /// row is a codeword, so encodings have zero syndrome by construction.
    pub fn from_parity_check(h: &SparseParityCheck) -> Result<Encoder> {
        let (generator, col_perm) = h.to_dense().systematic_generator()?;
        Ok(Encoder {
            h: h.clone(),
            generator,
            col_perm,
        })
    }

    /// Code dimension (number of message bits).
    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Code length (number of transmitted bits).
    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn generator(&self) -> &Gf2Matrix {
        &self.generator
    }

    /// Original column index holding systematic position `i` (parity columns
    /// first, then message columns).
    pub fn col_perm(&self) -> &[usize] {
        &self.col_perm
    }

    pub fn parity_check(&self) -> &SparseParityCheck {
        &self.h
    }

    /// Codeword for a message: the XOR of the generator rows selected by the
    /// message bits.
    pub fn encode(&self, message: &Gf2Vector) -> Result<Gf2Vector> {
        if message.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: message.len(),
            });
        }
        let mut word = Gf2Vector::zeros(self.length());
        for i in message.ones() {
            word.xor_assign(&self.generator.row(i));
        }
        debug_assert!(self.h.syndrome(&word).unwrap().is_zero());
        Ok(word)
    }
}

/// Outcome of a decode call. `converged` is set only when the returned word
/// has zero syndrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub word: Gf2Vector,
    pub converged: bool,
    pub iterations: usize,
}

/// Hard decision under the sign convention: 1 iff the LLR is ≤ 0.
pub fn hard_decision(llrs: &[f64]) -> Gf2Vector {
    let mut word = Gf2Vector::zeros(llrs.len());
    for (i, &l) in llrs.iter().enumerate() {
        if l <= 0.0 {
            word.set(i, true);
        }
    }
    word
}

/// Parallel (Gallager-style) bit flipping: each round flips every bit that
/// attains the maximum count of unsatisfied checks. Deterministic; stops on
/// zero syndrome or after `max_iters` rounds.
pub fn decode_bit_flip(
    h: &SparseParityCheck,
    received: &Gf2Vector,
    max_iters: usize,
) -> Result<DecodeResult> {
    if received.len() != h.cols() {
        return Err(Error::DimensionMismatch {
            expected: h.cols(),
            found: received.len(),
        });
    }
    let mut word = received.clone();
    let mut iterations = 0;
    loop {
        let syndrome = h.syndrome(&word)?;
        if syndrome.is_zero() {
            return Ok(DecodeResult {
                word,
                converged: true,
                iterations,
            });
        }
        if iterations == max_iters {
            return Ok(DecodeResult {
                word,
                converged: false,
                iterations,
            });
        }
        let mut violations = vec![0usize; h.cols()];
        for r in syndrome.ones() {
            for &c in h.row_support(r) {
                violations[c] += 1;
            }
        }
        let max = *violations.iter().max().expect("cols >= 1");
        debug_assert!(max > 0, "nonzero syndrome implies a violated bit");
        for (c, &v) in violations.iter().enumerate() {
            if v == max {
                word.flip(c);
            }
        }
        iterations += 1;
    }
}

/// Flooding-schedule sum-product decoding on the Tanner graph.
///
/// Check updates use the tanh product rule with self-exclusion done by
/// prefix/suffix products (no division), and all messages are clamped to
/// `±LLR_CLAMP`. A hard decision is taken from the posteriors before every
/// iteration; the loop stops at zero syndrome or `max_iters`.
pub fn decode_sum_product(
    h: &SparseParityCheck,
    llrs: &[f64],
    max_iters: usize,
) -> Result<DecodeResult> {
    if llrs.len() != h.cols() {
        return Err(Error::DimensionMismatch {
            expected: h.cols(),
            found: llrs.len(),
        });
    }
    if let Some(index) = llrs.iter().position(|l| !l.is_finite()) {
        return Err(Error::NonFiniteLlr { index });
    }

    // Edge layout: edges grouped by column; per-row edge lists precomputed.
    let cols = h.cols();
    let rows = h.rows();
    let mut col_edge_start = Vec::with_capacity(cols + 1);
    col_edge_start.push(0usize);
    let mut running = 0usize;
    for c in 0..cols {
        running += h.col_support(c).len();
        col_edge_start.push(running);
    }
    let edge_count = col_edge_start[cols];
    let mut row_edges: Vec<Vec<usize>> = vec![Vec::new(); rows];
    let mut edge = 0usize;
    for c in 0..cols {
        for &r in h.col_support(c) {
            row_edges[r].push(edge);
            edge += 1;
        }
    }
    let mut edge_col = Vec::with_capacity(edge_count);
    for c in 0..cols {
        edge_col.extend(std::iter::repeat_n(c, h.col_support(c).len()));
    }

    let clamp = |x: f64| x.clamp(-LLR_CLAMP, LLR_CLAMP);
    let mut var_to_check: Vec<f64> = (0..edge_count).map(|e| clamp(llrs[edge_col[e]])).collect();
    let mut check_to_var = vec![0.0f64; edge_count];
    let mut posterior: Vec<f64> = llrs.to_vec();

    let mut iterations = 0;
    loop {
        let word = hard_decision(&posterior);
        if h.syndrome(&word)?.is_zero() {
            return Ok(DecodeResult {
                word,
                converged: true,
                iterations,
            });
        }
        if iterations == max_iters {
            return Ok(DecodeResult {
                word,
                converged: false,
                iterations,
            });
        }

        // Check-node update.
        for edges in &row_edges {
            let deg = edges.len();
            if deg == 0 {
                continue;
            }
            let tanhs: Vec<f64> = edges.iter().map(|&e| (var_to_check[e] / 2.0).tanh()).collect();
            let mut prefix = vec![1.0f64; deg + 1];
            for i in 0..deg {
                prefix[i + 1] = prefix[i] * tanhs[i];
            }
            let mut suffix = 1.0f64;
            for i in (0..deg).rev() {
                let excl = prefix[i] * suffix;
                suffix *= tanhs[i];
                let msg = if excl >= 1.0 {
                    LLR_CLAMP
                } else if excl <= -1.0 {
                    -LLR_CLAMP
                } else {
                    clamp(2.0 * excl.atanh())
                };
                check_to_var[edges[i]] = msg;
            }
        }

        // Variable-node update and posteriors.
        for c in 0..cols {
            let range = col_edge_start[c]..col_edge_start[c + 1];
            let total: f64 = check_to_var[range.clone()].iter().sum();
            posterior[c] = llrs[c] + total;
            for e in range {
                var_to_check[e] = clamp(posterior[c] - check_to_var[e]);
            }
        }
        iterations += 1;
    }
}
