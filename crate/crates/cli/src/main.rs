//! Command-line front end: construct, verify, analyze, tabulate, simulate.
//!
//! Exit codes: 0 on success / all checks passing, 1 on a verification
//! failure or runtime error, 2 on usage errors (clap's default).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dca_ldpc::alist::write_alist;
use dca_ldpc::analysis::{check_rc_constraint, code_params, full_report, girth};
use dca_ldpc::channel::{records_to_csv, records_to_json, run_ber, ChannelModel, DecoderKind, SimulationConfig};
use dca_ldpc::codec::Encoder;
use dca_ldpc::dca::CyclicDca;
use dca_ldpc::latin::{are_pseudo_orthogonal, LatinSquare};
use dca_ldpc::pbibd::{build_design, BlockDesign};

#[derive(Parser)]
#[command(name = "dca-ldpc", version, about = "LDPC codes of length 4n²−2n from cyclic difference covering arrays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the design for a given n and write the alist and design dump
    Construct {
        #[arg(long)]
        n: usize,
        /// Output path for the alist file (default: h<n>.alist)
        #[arg(long)]
        alist: Option<PathBuf>,
        /// Output path for the design dump (default: design<n>.txt)
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Run the structural checks and print PASS/FAIL per check
    Verify {
        #[arg(long)]
        n: usize,
        /// Test hook: corrupt the design before verification
        #[arg(long, hide = true, value_enum)]
        inject_defect: Option<Defect>,
    },
    /// Emit the full code report as JSON
    Analyze {
        #[arg(long)]
        n: usize,
        /// Also write the JSON report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print length, dimension and rate for a range of n
    RateTable {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Monte-Carlo BER/FER simulation over a channel sweep
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        channel: ChannelKind,
        /// Sweep points: crossover probabilities (bsc) or Eb/N0 dB values (awgn)
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<f64>,
        #[arg(long)]
        frames: u64,
        #[arg(long, value_enum, default_value_t = DecoderArg::SumProduct)]
        decoder: DecoderArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        max_iters: usize,
        /// Worker threads per sweep point (results are thread-count invariant)
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Also write a JSON mirror of the records
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the pseudo-orthogonal Latin square pair for a given n
    Latin {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ChannelKind {
    Bsc,
    Awgn,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    BitFlip,
    SumProduct,
}

#[derive(Clone, Copy, ValueEnum)]
enum Defect {
    DropBlock,
    DupBlock,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> dca_ldpc::Result<ExitCode> {
    match cli.command {
        Command::Construct { n, alist, dump } => {
            let design = build_design(n)?;
            let h = design.incidence_matrix();
            let alist_path = alist.unwrap_or_else(|| PathBuf::from(format!("h{n}.alist")));
            let dump_path = dump.unwrap_or_else(|| PathBuf::from(format!("design{n}.txt")));
            std::fs::write(&alist_path, write_alist(&h))?;
            std::fs::write(&dump_path, design.dump())?;
            println!("wrote {} and {}", alist_path.display(), dump_path.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, inject_defect } => {
            let mut design = build_design(n)?;
            match inject_defect {
                Some(Defect::DropBlock) => {
                    design.blocks.remove(design.blocks.len() / 2);
                }
                Some(Defect::DupBlock) => {
                    let block = design.blocks[0];
                    design.blocks.push(block);
                }
                None => {}
            }
            let all_passed = run_verification(n, &design);
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Analyze { n, json } => {
            let h = build_design(n)?.incidence_matrix();
            let report = full_report(&h)?;
            let rendered = report.to_json_pretty();
            println!("{rendered}");
            if let Some(path) = json {
                std::fs::write(path, rendered)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::RateTable { from, to } => {
            if from > to {
                return Err(dca_ldpc::Error::InvalidParameter(format!(
                    "empty range {from}..{to}"
                )));
            }
            println!("n length dimension rate");
            for n in from..=to {
                let params = code_params(&build_design(n)?.incidence_matrix())?;
                println!(
                    "{n} {} {} {}",
                    params.length,
                    params.dimension,
                    params.rate.to_decimal_3()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate {
            n,
            channel,
            points,
            frames,
            decoder,
            seed,
            max_iters,
            threads,
            csv,
            json,
        } => {
            let h = build_design(n)?.incidence_matrix();
            let encoder = Encoder::from_parity_check(&h)?;
            let rate = encoder.dimension() as f64 / encoder.length() as f64;
            let sweep: Vec<ChannelModel> = points
                .into_iter()
                .map(|p| match channel {
                    ChannelKind::Bsc => ChannelModel::Bsc { crossover: p },
                    ChannelKind::Awgn => ChannelModel::BiAwgn {
                        eb_n0_db: p,
                        code_rate: rate,
                    },
                })
                .collect();
            let mut config = SimulationConfig::new(
                frames,
                match decoder {
                    DecoderArg::BitFlip => DecoderKind::BitFlip,
                    DecoderArg::SumProduct => DecoderKind::SumProduct,
                },
                seed,
            );
            config.max_iters = max_iters;
            config.threads = threads.max(1);
            let records = run_ber(&encoder, &sweep, &config)?;
            let rendered = records_to_csv(&records);
            match csv {
                Some(path) => std::fs::write(path, &rendered)?,
                None => print!("{rendered}"),
            }
            if let Some(path) = json {
                std::fs::write(path, records_to_json(&records))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Latin { n } => {
            let q = CyclicDca::canonical(n)?;
            let y = LatinSquare::from_dca_column(&q, 1)?;
            let z = LatinSquare::from_dca_column(&q, 2)?;
            println!("Y:");
            print!("{}", y.to_table_string());
            println!("Z:");
            print!("{}", z.to_table_string());
            println!("pseudo-orthogonal: {}", are_pseudo_orthogonal(&y, &z)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_verification(n: usize, design: &BlockDesign) -> bool {
    let mut all_passed = true;
    let mut check = |name: &str, passed: bool| {
        println!("{name}: {}", if passed { "PASS" } else { "FAIL" });
        all_passed &= passed;
    };

    let array = CyclicDca::canonical(n).expect("n validated by build_design");
    check("p1", array.verify_p1());
    check("p2-coverage", array.verify_p2());
    check("p2-canonical-multiset", array.p2_canonical_multiset());

    check("block-count", design.blocks.len() == 4 * n * n - 2 * n);
    let resolvable = design.classes.iter().all(|class| {
        let mut seen = vec![false; design.points()];
        let mut ok = true;
        for block in design.blocks.get(class.clone()).unwrap_or(&[]) {
            for &p in &block.points {
                ok &= !seen[p];
                seen[p] = true;
            }
        }
        ok && seen.iter().all(|&s| s)
    });
    check("resolvability", resolvable);
    check("lambda-table", design.verify_lambda_table());

    let h = design.incidence_matrix();
    let weights_ok = (0..h.cols()).all(|c| h.col_weight(c) == 3)
        && (0..h.rows()).all(|r| h.row_weight(r) == 2 * n - 1);
    check("incidence-weights", weights_ok);
    check("rc-constraint", check_rc_constraint(&h));
    check("girth-at-least-6", girth(&h).is_some_and(|g| g >= 6));

    all_passed
}
