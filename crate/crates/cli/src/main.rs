//! Command-line surface for constructing and verifying single-error-
//! correcting function-correcting codes for Hamming-code membership.
//!
//! Exit codes: 0 on success, 1 when a verification or consistency check
//! fails, 2 on usage errors (bad flags, out-of-range orders).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use sefcc_core::boolfn::{krawtchouk4, krawtchouk4_closed, BooleanFunction};
use sefcc_core::error::Error as CoreError;
use sefcc_core::gf2::{hamming_distance, BitVector};
use sefcc_core::graphs::DistanceGraph;
use sefcc_core::hamming::{rm_star_dual_check, weight_partition, CodeExport, HammingCode};
use sefcc_core::oracle::{
    brute_force_l_min, brute_force_min_quadratic, brute_force_pair_count,
    exhaustive_assignment_search, OracleReport, OracleValue,
};
use sefcc_core::sefcc::{
    construct, count_pairs, default_cut_function, verify_valid, ConstructOptions, SefccTable,
    TableFile,
};
use sefcc_core::spectral::{full_spectrum, lower_bound_l, SpectrumMethod};

#[derive(Parser)]
#[command(name = "sefcc", version, about = "SEFCC construction for Hamming-code membership")]
struct Cli {
    /// Worker threads for parallel scans (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Seed for sampling-based checks (random triples and cut vectors).
    #[arg(long, global = true, default_value_t = 20240915)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hamming code artifacts.
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Distance graphs over codeword sets.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Eigenvalue sweep of the distance-4 graph (CSV output).
    Spectrum {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Keep one index per coset of the dual of the even subcode.
        #[arg(long)]
        dedup_cosets: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the inner-product bent function for an even order.
    Bent {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build the full encoder table.
    Construct {
        #[arg(long)]
        n: u32,
        /// Cut function file (default: bent for even n, an exhaustive
        /// minimizer for odd n).
        #[arg(long)]
        fu: Option<PathBuf>,
        /// Give the even class {01,10} instead of {00,11}.
        #[arg(long)]
        swap_pairs: bool,
        /// Skip the cut-function optimality preconditions.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a table and write its distance-2 pair report.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        report: PathBuf,
    },
    /// Recompute headline results by brute force and compare.
    Oracle {
        #[arg(long)]
        n: u32,
        /// `all` or a comma-separated subset of: min-quadratic, l-min,
        /// pair-count, assignment-search, rayleigh, triangle.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep the degree-4 Krawtchouk closed form against its definition.
    KrawCheck {
        #[arg(long = "max-N", default_value_t = 63)]
        max_n: i64,
    },
    /// Check that the dual of the even subcode is the punctured first-order
    /// Reed-Muller code.
    DualCheck {
        /// Order to check (default: 2, 3, and 4).
        #[arg(long)]
        n: Option<u32>,
    },
}

#[derive(Subcommand)]
enum CodeAction {
    /// Write the code description as JSON.
    Export {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GraphAction {
    /// Write an edge list for a fixed-distance graph.
    Export {
        #[arg(long)]
        n: u32,
        /// Vertex set: all codewords, the even class, or the odd class.
        #[arg(long, value_enum, default_value_t = VertexSet::All)]
        set: VertexSet,
        #[arg(long)]
        distance: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VertexSet {
    All,
    Ce,
    Co,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Walsh,
    Direct,
    Both,
}

impl From<MethodArg> for SpectrumMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Walsh => SpectrumMethod::Walsh,
            MethodArg::Direct => SpectrumMethod::Direct,
            MethodArg::Both => SpectrumMethod::Both,
        }
    }
}

/// Failures that decide the exit code.
enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A check did not hold: exit 1.
    Check(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Inconsistency(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
        {
            eprintln!("error: failed to configure {workers} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Usage(format!("serialization failed: {e}")))?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Code {
            action: CodeAction::Export { n, out },
        } => {
            let code = HammingCode::build(n)?;
            write_json(&out, &CodeExport::from_code(&code)?)?;
            println!("wrote code description for n={n} to {}", out.display());
            Ok(())
        }

        Command::Graph {
            action:
                GraphAction::Export {
                    n,
                    set,
                    distance,
                    out,
                },
        } => {
            let code = HammingCode::build(n)?;
            let codewords = code.enumerate_codewords()?;
            let vertices = match set {
                VertexSet::All => codewords,
                VertexSet::Ce => weight_partition(&codewords).0,
                VertexSet::Co => weight_partition(&codewords).1,
            };
            let graph = DistanceGraph::build(vertices, distance)?;
            fs::write(&out, graph.to_edge_list_string())?;
            println!(
                "wrote {} edges on {} vertices to {}",
                graph.edge_count(),
                graph.vertex_count(),
                out.display()
            );
            Ok(())
        }

        Command::Spectrum {
            n,
            method,
            dedup_cosets,
            out,
        } => {
            let report = full_spectrum(n, method.into(), dedup_cosets)?;
            let mut buf = Vec::new();
            report
                .write_csv(&mut buf)
                .map_err(|e| Failure::Usage(format!("csv write failed: {e}")))?;
            fs::write(&out, buf)?;
            println!(
                "wrote {} eigenvalues (lambda_min = {}) to {}",
                report.entries().len(),
                report.lambda_min(),
                out.display()
            );
            Ok(())
        }

        Command::Bent { n, out } => {
            let f = BooleanFunction::mm_bent(n)?;
            fs::write(&out, f.to_file_string())?;
            println!("wrote inner-product bent function for n={n} to {}", out.display());
            Ok(())
        }

        Command::Construct {
            n,
            fu,
            swap_pairs,
            force,
            out,
        } => {
            let f_u = match fu {
                Some(path) => BooleanFunction::from_file_string(&fs::read_to_string(path)?)?,
                None => default_cut_function(n)?,
            };
            let table = construct(
                n,
                &f_u,
                &ConstructOptions {
                    swap_pair_sets: swap_pairs,
                    force,
                },
            )?;
            write_json(&out, &TableFile::from_table(&table))?;
            println!(
                "wrote {}-entry table for n={n} to {}",
                table.domain_size(),
                out.display()
            );
            Ok(())
        }

        Command::Verify { n, table, report } => {
            let file: TableFile = serde_json::from_str(&fs::read_to_string(table)?)
                .map_err(|e| Failure::Usage(format!("bad table file: {e}")))?;
            if file.n != n {
                return Err(Failure::Usage(format!(
                    "table file is for n={}, but n={n} was requested",
                    file.n
                )));
            }
            let table = file.to_table()?;
            let outcome = verify_valid(&table)?;
            if !outcome.valid {
                return Err(Failure::Check(format!(
                    "table is not a valid encoder: {:?}",
                    outcome.violation
                )));
            }
            let counts = count_pairs(&table)?;
            write_json(&report, &counts)?;
            println!(
                "table valid; d_min = {}, distance-2 pairs = {} (intra {}, boundary {}, identical-parity {})",
                counts.d_min,
                counts.total_d2,
                counts.intra_sphere,
                counts.inter_sphere_boundary,
                counts.identical_parity
            );
            Ok(())
        }

        Command::Oracle { n, claims, out } => {
            let reports = run_oracle_claims(n, &claims, cli.seed)?;
            write_json(&out, &reports)?;
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.matched)
                .map(|r| r.claim_id.as_str())
                .collect();
            for r in &reports {
                println!(
                    "{}: computed {:?}, expected {:?} -> {}",
                    r.claim_id,
                    r.computed,
                    r.expected,
                    if r.matched { "match" } else { "MISMATCH" }
                );
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Check(format!(
                    "oracle mismatches: {}",
                    failed.join(", ")
                )))
            }
        }

        Command::KrawCheck { max_n } => {
            if !(0..=10_000).contains(&max_n) {
                return Err(Failure::Usage(format!(
                    "--max-N must lie in 0..=10000, got {max_n}"
                )));
            }
            for big_n in 0..=max_n {
                for w in 0..=big_n {
                    let by_sum = krawtchouk4(w, big_n)?;
                    let by_form = krawtchouk4_closed(w, big_n)?;
                    if by_sum != by_form {
                        return Err(Failure::Check(format!(
                            "K_4({w}; {big_n}): definitional {by_sum} != closed form {by_form}"
                        )));
                    }
                }
            }
            println!("closed form matches the definitional sum for all w, N <= {max_n}");
            Ok(())
        }

        Command::DualCheck { n } => {
            let orders: Vec<u32> = match n {
                Some(n) => vec![n],
                None => vec![2, 3, 4],
            };
            for n in orders {
                if rm_star_dual_check(n)? {
                    println!("n={n}: dual of the even subcode = punctured RM(1,{n})");
                } else {
                    return Err(Failure::Check(format!(
                        "dual identification failed at n={n}"
                    )));
                }
            }
            Ok(())
        }
    }
}

const ALL_CLAIMS: &[&str] = &[
    "min-quadratic",
    "l-min",
    "pair-count",
    "assignment-search",
    "rayleigh",
    "triangle",
];

fn claim_applicable(claim: &str, n: u32) -> bool {
    match claim {
        "min-quadratic" | "pair-count" | "assignment-search" => n <= 3,
        "l-min" | "rayleigh" | "triangle" => n <= 4,
        _ => false,
    }
}

fn run_oracle_claims(n: u32, claims: &str, seed: u64) -> Result<Vec<OracleReport>, Failure> {
    let requested: Vec<String> = if claims == "all" {
        ALL_CLAIMS
            .iter()
            .filter(|c| claim_applicable(c, n))
            .map(|c| c.to_string())
            .collect()
    } else {
        claims.split(',').map(|c| c.trim().to_string()).collect()
    };
    if requested.is_empty() {
        return Err(Failure::Usage("no oracle claims requested".into()));
    }
    let mut reports = Vec::new();
    for claim in &requested {
        if !ALL_CLAIMS.contains(&claim.as_str()) {
            return Err(Failure::Usage(format!(
                "unknown claim {claim:?}; known: {}",
                ALL_CLAIMS.join(", ")
            )));
        }
        if !claim_applicable(claim, n) {
            return Err(Failure::Usage(format!(
                "claim {claim:?} is not available at n={n} (enumeration cap)"
            )));
        }
        reports.push(run_one_claim(claim, n, seed)?);
    }
    Ok(reports)
}

fn even_class_graph(n: u32) -> Result<(DistanceGraph, usize), Failure> {
    let code = HammingCode::build(n)?;
    let (even, _) = weight_partition(&code.enumerate_codewords()?);
    let size = even.len();
    Ok((DistanceGraph::build(even, 4)?, size))
}

fn run_one_claim(claim: &str, n: u32, seed: u64) -> Result<OracleReport, Failure> {
    let report = match claim {
        "min-quadratic" => {
            let (graph, size) = even_class_graph(n)?;
            let (min, _) = brute_force_min_quadratic(&graph)?;
            let lambda_min = full_spectrum(n, SpectrumMethod::Walsh, false)?.lambda_min();
            OracleReport::new(
                claim,
                OracleValue::Int(min),
                OracleValue::Int(lambda_min * size as i64),
            )
        }
        "l-min" => {
            let (min, _) = brute_force_l_min(n)?;
            let expected = if n % 2 == 0 {
                lower_bound_l(n)?
            } else {
                // invert the eigenvalue formula at the swept minimum
                let q = 1i64 << n;
                let lambda_min = full_spectrum(n, SpectrumMethod::Walsh, false)?.lambda_min();
                q * (24 * lambda_min + 3 * q * q - 14 * q + 8)
            };
            OracleReport::new(claim, OracleValue::Int(min), OracleValue::Int(expected))
        }
        "pair-count" => {
            let table = default_table(n)?;
            let direct = brute_force_pair_count(&table)?;
            let structural = count_pairs(&table)?.total_d2;
            OracleReport::new(
                claim,
                OracleValue::Int(direct as i64),
                OracleValue::Int(structural as i64),
            )
        }
        "assignment-search" => {
            let table = default_table(n)?;
            let search = exhaustive_assignment_search(n)?;
            let constructed = count_pairs(&table)?.total_d2;
            OracleReport::new(
                claim,
                OracleValue::Int(search.min_total_d2 as i64),
                OracleValue::Int(constructed as i64),
            )
        }
        "rayleigh" => {
            let (graph, size) = even_class_graph(n)?;
            let lambda_min = full_spectrum(n, SpectrumMethod::Walsh, false)?.lambda_min();
            let bound = lambda_min * size as i64;
            let edges = graph.edges();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let ok = (0..200).all(|_| {
                let z: Vec<i64> = (0..size).map(|_| if rng.random() { 1 } else { -1 }).collect();
                let quad: i64 = edges.iter().map(|&(i, j)| 2 * z[i] * z[j]).sum();
                quad >= bound
            });
            OracleReport::new(claim, OracleValue::Bool(ok), OracleValue::Bool(true))
        }
        "triangle" => {
            let length = (1usize << n) - 1;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let random_vector = |rng: &mut ChaCha8Rng| {
                let mut v = BitVector::zero(length);
                for i in 0..length {
                    if rng.random() {
                        v.set(i, true);
                    }
                }
                v
            };
            let ok = (0..200).all(|_| {
                let a = random_vector(&mut rng);
                let b = random_vector(&mut rng);
                let c = random_vector(&mut rng);
                let ab = hamming_distance(&a, &b).unwrap();
                let ac = hamming_distance(&a, &c).unwrap();
                let cb = hamming_distance(&c, &b).unwrap();
                ab <= ac + cb
            });
            OracleReport::new(claim, OracleValue::Bool(ok), OracleValue::Bool(true))
        }
        _ => unreachable!("claim validated earlier"),
    };
    Ok(report)
}

fn default_table(n: u32) -> Result<SefccTable, Failure> {
    let f_u = default_cut_function(n)?;
    Ok(construct(n, &f_u, &ConstructOptions::default())?)
}
