//! Reproducible Monte-Carlo transmission over BSC and binary-input AWGN
//! channels, producing BER/FER records.
//!
//! Determinism contract: every frame draws from a stream derived only from
//! `(seed, point index, frame index)` via [`SplitMix64::for_frame`], in a
//! fixed order — message bits first (one Bernoulli draw per bit), then the
//! channel noise (one draw per transmitted bit). Records are therefore a
//! pure function of `(code, sweep, frames, decoder, seed)` and frames may be
//! distributed across threads without changing any count.

use serde::{Deserialize, Serialize};

use crate::codec::{
    decode_bit_flip, decode_sum_product, hard_decision, DecodeResult, Encoder, LLR_CLAMP,
};
use crate::gf2::Gf2Vector;
use crate::rng::SplitMix64;
use crate::{Error, Result};

/// A channel operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelModel {
    /// Binary symmetric channel with crossover probability `p ∈ [0, 0.5)`.
    Bsc { crossover: f64 },
    /// Binary-input AWGN channel at a given `Eb/N0` in dB; the code rate
    /// enters the noise variance.
    BiAwgn { eb_n0_db: f64, code_rate: f64 },
}

impl ChannelModel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ChannelModel::Bsc { crossover } => {
                if !(0.0..0.5).contains(&crossover) {
                    return Err(Error::InvalidParameter(format!(
                        "BSC crossover must lie in [0, 0.5) for LLR emission, got {crossover}"
                    )));
                }
            }
            ChannelModel::BiAwgn { eb_n0_db, code_rate } => {
                if !eb_n0_db.is_finite() {
                    return Err(Error::InvalidParameter("Eb/N0 must be finite".into()));
                }
                if !(code_rate > 0.0 && code_rate <= 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "code rate must lie in (0, 1], got {code_rate}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Label used in CSV/JSON records: `bsc:0.0500` or `awgn:3.00`.
    pub fn label(&self) -> String {
        match *self {
            ChannelModel::Bsc { crossover } => format!("bsc:{crossover:.4}"),
            ChannelModel::BiAwgn { eb_n0_db, .. } => format!("awgn:{eb_n0_db:.2}"),
        }
    }
}

/// Sends a codeword through the channel, emitting one LLR per bit
/// (positive = bit 0 more likely).
///
/// BSC flips each bit independently and emits `±ln((1−p)/p)`, capped at
/// [`LLR_CLAMP`] so the noiseless channel stays finite. BI-AWGN maps bits to
/// `±1`, adds Gaussian noise with `σ² = 1/(2·R·Eb/N0)` and emits `2y/σ²`.
pub fn transmit(
    codeword: &Gf2Vector,
    channel: &ChannelModel,
    rng: &mut SplitMix64,
) -> Result<Vec<f64>> {
    channel.validate()?;
    let len = codeword.len();
    let mut llrs = Vec::with_capacity(len);
    match *channel {
        ChannelModel::Bsc { crossover } => {
            let magnitude = if crossover == 0.0 {
                LLR_CLAMP
            } else {
                (((1.0 - crossover) / crossover).ln()).min(LLR_CLAMP)
            };
            for i in 0..len {
                let received = codeword.get(i) ^ rng.next_bool(crossover);
                llrs.push(if received { -magnitude } else { magnitude });
            }
        }
        ChannelModel::BiAwgn { eb_n0_db, code_rate } => {
            let eb_n0 = 10f64.powf(eb_n0_db / 10.0);
            let sigma2 = 1.0 / (2.0 * code_rate * eb_n0);
            let sigma = sigma2.sqrt();
            for i in 0..len {
                let x = if codeword.get(i) { -1.0 } else { 1.0 };
                let y = x + sigma * rng.next_gaussian();
                llrs.push(2.0 * y / sigma2);
            }
        }
    }
    Ok(llrs)
}

/// Which decoder a simulation run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    BitFlip,
    SumProduct,
}

/// One row of simulation output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BerRecord {
    pub point: String,
    pub frames: u64,
    pub bit_errors: u64,
    pub frame_errors: u64,
    pub ber: f64,
    pub fer: f64,
    pub seed: u64,
}

/// Simulation parameters common to every sweep point.
#[derive(Debug, Clone, Copy)]
pub struct SimulationConfig {
    pub frames_per_point: u64,
    pub decoder: DecoderKind,
    pub seed: u64,
    pub max_iters: usize,
    /// Worker threads per sweep point; 1 runs inline.
    pub threads: usize,
}

impl SimulationConfig {
    pub fn new(frames_per_point: u64, decoder: DecoderKind, seed: u64) -> Self {
        SimulationConfig {
            frames_per_point,
            decoder,
            seed,
            max_iters: crate::codec::DEFAULT_MAX_ITERS,
            threads: 1,
        }
    }
}

fn run_frame(
    encoder: &Encoder,
    channel: &ChannelModel,
    decoder: DecoderKind,
    max_iters: usize,
    seed: u64,
    point: u64,
    frame: u64,
) -> Result<u64> {
    let mut rng = SplitMix64::for_frame(seed, point, frame);
    let mut message = Gf2Vector::zeros(encoder.dimension());
    for i in 0..encoder.dimension() {
        if rng.next_bool(0.5) {
            message.set(i, true);
        }
    }
    let word = encoder.encode(&message)?;
    let llrs = transmit(&word, channel, &mut rng)?;
    let result: DecodeResult = match decoder {
        DecoderKind::BitFlip => {
            decode_bit_flip(encoder.parity_check(), &hard_decision(&llrs), max_iters)?
        }
        DecoderKind::SumProduct => decode_sum_product(encoder.parity_check(), &llrs, max_iters)?,
    };
    let mut errors = 0u64;
    for i in 0..word.len() {
        if result.word.get(i) != word.get(i) {
            errors += 1;
        }
    }
    Ok(errors)
}

fn point_totals(
    encoder: &Encoder,
    channel: &ChannelModel,
    point: u64,
    config: &SimulationConfig,
) -> Result<(u64, u64)> {
    let frames = config.frames_per_point;
    if config.threads <= 1 {
        let mut bit_errors = 0;
        let mut frame_errors = 0;
        for frame in 0..frames {
            let errors = run_frame(
                encoder,
                channel,
                config.decoder,
                config.max_iters,
                config.seed,
                point,
                frame,
            )?;
            bit_errors += errors;
            frame_errors += u64::from(errors > 0);
        }
        return Ok((bit_errors, frame_errors));
    }

    let workers = config.threads.min(frames.max(1) as usize);
    let chunk = frames.div_ceil(workers as u64);
    let partials: Vec<Result<(u64, u64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                let start = w * chunk;
                let end = ((w + 1) * chunk).min(frames);
                scope.spawn(move || {
                    let mut bit_errors = 0;
                    let mut frame_errors = 0;
                    for frame in start..end {
                        let errors = run_frame(
                            encoder,
                            channel,
                            config.decoder,
                            config.max_iters,
                            config.seed,
                            point,
                            frame,
                        )?;
                        bit_errors += errors;
                        frame_errors += u64::from(errors > 0);
                    }
                    Ok((bit_errors, frame_errors))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|handle| handle.join().expect("simulation worker panicked"))
            .collect()
    });
    let mut bit_errors = 0;
    let mut frame_errors = 0;
    for partial in partials {
        let (b, f) = partial?;
        bit_errors += b;
        frame_errors += f;
    }
    Ok((bit_errors, frame_errors))
}

/// Runs the sweep: per point, encodes fresh random messages, transmits,
/// decodes and accumulates errors against the transmitted codeword.
pub fn run_ber(
    encoder: &Encoder,
    sweep: &[ChannelModel],
    config: &SimulationConfig,
) -> Result<Vec<BerRecord>> {
    if config.frames_per_point == 0 {
        return Err(Error::InvalidParameter(
            "frames_per_point must be at least 1".into(),
        ));
    }
    for channel in sweep {
        channel.validate()?;
    }
    let mut records = Vec::with_capacity(sweep.len());
    for (point, channel) in sweep.iter().enumerate() {
        let (bit_errors, frame_errors) =
            point_totals(encoder, channel, point as u64, config)?;
        let frames = config.frames_per_point;
        records.push(BerRecord {
            point: channel.label(),
            frames,
            bit_errors,
            frame_errors,
            ber: bit_errors as f64 / (frames as f64 * encoder.length() as f64),
            fer: frame_errors as f64 / frames as f64,
            seed: config.seed,
        });
    }
    Ok(records)
}

/// CSV rendering, one row per sweep point.
pub fn records_to_csv(records: &[BerRecord]) -> String {
    let mut out = String::from("point,frames,bit_errors,frame_errors,ber,fer,seed\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{:.6e},{:.6e},{}\n",
            r.point, r.frames, r.bit_errors, r.frame_errors, r.ber, r.fer, r.seed
        ));
    }
    out
}

/// JSON mirror of the CSV content.
pub fn records_to_json(records: &[BerRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}
