//! `colorlie`: Hilbert series, Witt dimensions, Schreier series, enveloping
//! series, and growth estimates for free color Lie superalgebras, with
//! oracle-backed `verify` subcommands.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification mismatch.

mod input;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use colorlie::{
    alphabet_series, color_schreier_rank, color_witt_dim, color_witt_series, enveloping_series,
    group_schreier_rank, growth_rate_estimate, lie_schreier_series, restricted_enveloping_series,
    witt_dim, witt_series, SignedDimensionSequence, TruncatedSeries,
};

use input::{coeffs_or_stdin, load_alphabet, parse_coeff_list, parse_window, series_at_order};
use output::{render, Meta, OutputFormat, Payload};

/// Default truncation order for series subcommands.
const DEFAULT_TRUNCATION: usize = 32;

#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
        }
    }
}

impl From<colorlie::Error> for CliError {
    fn from(e: colorlie::Error) -> Self {
        CliError {
            message: e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "colorlie",
    version,
    about = "Hilbert series and growth calculator for free color Lie superalgebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Witt-formula dimensions of free (color) Lie superalgebras.
    Witt {
        /// Number of even degree-1 generators.
        #[arg(long)]
        rank: u64,
        /// Number of odd degree-1 generators (color case).
        #[arg(long)]
        odd: Option<u64>,
        /// Print the single dimension of this degree.
        #[arg(long, conflicts_with = "max_degree")]
        degree: Option<u64>,
        /// Print the whole dimension series up to this degree.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Euler transform of an integer series read from --coeffs or stdin.
    Euler {
        /// Comma/whitespace-separated coefficients, constant term first.
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Inverse Euler transform of an integer series (constant term 1).
    InvEuler {
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Hilbert series of the (restricted) enveloping algebra from a parity
    /// split of dimensions.
    Envelope {
        /// Even dimensions a_1,a_2,...
        #[arg(long)]
        even: Option<String>,
        /// Odd dimensions b_1,b_2,...
        #[arg(long)]
        odd: Option<String>,
        /// Compute the restricted enveloping series in characteristic p.
        #[arg(long)]
        prime: Option<u64>,
        /// Allow p < 5 (legitimate for trivially graded algebras).
        #[arg(long)]
        allow_small_characteristic: bool,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Schreier rank and generating-series formulas.
    Schreier {
        #[command(subcommand)]
        which: SchreierCommand,
    },
    /// Growth-rate estimate from a dimension series.
    Growth {
        #[arg(long)]
        coeffs: Option<String>,
        /// Estimation window `start,end`.
        #[arg(long)]
        window: String,
    },
    /// Cross-check the closed formulas against the brute-force oracle;
    /// exits 3 on any mismatch.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum SchreierCommand {
    /// rank(K) = (n - 1) [G : K] + 1 for subgroups of free groups.
    Group {
        #[arg(long)]
        rank: u64,
        #[arg(long)]
        index: u64,
    },
    /// H(Z) = (H(X) - 1) E(H(L/K)) + 1 for subalgebras of free Lie algebras.
    Lie {
        /// Alphabet/bicharacter JSON document (purely even).
        #[arg(long)]
        alphabet: PathBuf,
        /// Coefficients of H(L/K), constant term first.
        #[arg(long)]
        quotient_coeffs: String,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// rank(K) = 2^s (rank(L) - 1) + 1 with s the odd codimension.
    Color {
        #[arg(long)]
        rank_l: u64,
        #[arg(long)]
        odd_codim: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Witt formula vs Lyndon word enumeration.
    Witt {
        #[arg(long, default_value_t = 3)]
        max_rank: u64,
        #[arg(long, default_value_t = 7)]
        max_degree: u64,
    },
    /// Color Witt formula vs the span oracle.
    ColorWitt {
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
    },
    /// PBW series vs direct monomial counting.
    Pbw,
    /// gamma-Jacobi and skew-symmetry identities on seeded random elements.
    Jacobi {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Schreier series self-consistency and the worked subalgebra example.
    SchreierConsistency,
    /// Equal growth of L and U(L) at desk scale.
    GrowthRate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((payload, meta)) => {
            print!("{}", render(&payload, &meta, cli.format));
            if let Payload::Checks(checks) = &payload {
                if checks.iter().any(|c| !c.passed) {
                    return ExitCode::from(3);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(Payload, Meta), CliError> {
    match command {
        Command::Witt {
            rank,
            odd,
            degree,
            max_degree,
        } => match degree {
            Some(n) => {
                if n == 0 {
                    return Err(CliError::invalid("--degree must be >= 1"));
                }
                let value = match odd {
                    Some(s) => {
                        if rank + s == 0 {
                            return Err(CliError::invalid("at least one generator is required"));
                        }
                        BigInt::from(color_witt_dim(rank, s, n))
                    }
                    None => BigInt::from(witt_dim(rank, n)),
                };
                Ok((Payload::Scalar(value), Meta::default()))
            }
            None => {
                let order = max_degree.unwrap_or(DEFAULT_TRUNCATION);
                let series = match odd {
                    Some(s) => {
                        if rank + s == 0 {
                            return Err(CliError::invalid("at least one generator is required"));
                        }
                        color_witt_series(rank, s, order)
                    }
                    None => witt_series(rank, order),
                };
                Ok((
                    Payload::Series(series.coeffs().to_vec()),
                    Meta {
                        truncation: Some(order),
                        ..Meta::default()
                    },
                ))
            }
        },
        Command::Euler { coeffs, max_degree } => {
            let coeffs = coeffs_or_stdin(&coeffs)?;
            let order = max_degree.unwrap_or_else(|| (coeffs.len() - 1).max(DEFAULT_TRUNCATION));
            let f = series_at_order(coeffs, order);
            let e = f.euler_transform().map_err(CliError::from)?;
            Ok((
                Payload::Series(e.coeffs().to_vec()),
                Meta {
                    truncation: Some(order),
                    ..Meta::default()
                },
            ))
        }
        Command::InvEuler { coeffs, max_degree } => {
            let coeffs = coeffs_or_stdin(&coeffs)?;
            let order = max_degree.unwrap_or_else(|| (coeffs.len() - 1).max(DEFAULT_TRUNCATION));
            let f = series_at_order(coeffs, order);
            let a = f.inverse_euler_transform().map_err(CliError::from)?;
            Ok((
                Payload::Series(a.coeffs().to_vec()),
                Meta {
                    truncation: Some(order),
                    ..Meta::default()
                },
            ))
        }
        Command::Envelope {
            even,
            odd,
            prime,
            allow_small_characteristic,
            max_degree,
        } => {
            let parse_dims = |text: &Option<String>| -> Result<Vec<u64>, CliError> {
                match text {
                    None => Ok(Vec::new()),
                    Some(t) => parse_coeff_list(t)?
                        .into_iter()
                        .map(|v| {
                            u64::try_from(v.clone()).map_err(|_| {
                                CliError::invalid(format!(
                                    "dimension `{v}` must be a natural number"
                                ))
                            })
                        })
                        .collect(),
                }
            };
            let mut even = parse_dims(&even)?;
            let mut odd = parse_dims(&odd)?;
            let len = even.len().max(odd.len());
            even.resize(len, 0);
            odd.resize(len, 0);
            let sdims =
                SignedDimensionSequence::from_counts(&even, &odd).map_err(CliError::from)?;
            let order = max_degree.unwrap_or(DEFAULT_TRUNCATION);
            let series = match prime {
                Some(p) => {
                    restricted_enveloping_series(&sdims, p, order, allow_small_characteristic)
                        .map_err(CliError::from)?
                }
                None => enveloping_series(&sdims, order),
            };
            Ok((
                Payload::Series(series.coeffs().to_vec()),
                Meta {
                    truncation: Some(order),
                    ..Meta::default()
                },
            ))
        }
        Command::Schreier { which } => match which {
            SchreierCommand::Group { rank, index } => {
                if rank == 0 || index == 0 {
                    return Err(CliError::invalid("--rank and --index must be >= 1"));
                }
                Ok((
                    Payload::Scalar(BigInt::from(group_schreier_rank(rank, index))),
                    Meta::default(),
                ))
            }
            SchreierCommand::Lie {
                alphabet,
                quotient_coeffs,
                max_degree,
            } => {
                let x = load_alphabet(&alphabet)?;
                if !x.is_purely_even() {
                    return Err(CliError::invalid(
                        "the Schreier series formula applies to purely even alphabets",
                    ));
                }
                let order = max_degree.unwrap_or(DEFAULT_TRUNCATION);
                let h_x = alphabet_series(&x, order);
                let h_lk = series_at_order(parse_coeff_list(&quotient_coeffs)?, order);
                let z = lie_schreier_series(&h_x, &h_lk).map_err(CliError::from)?;
                Ok((
                    Payload::Series(z.coeffs().to_vec()),
                    Meta {
                        truncation: Some(order),
                        ..Meta::default()
                    },
                ))
            }
            SchreierCommand::Color { rank_l, odd_codim } => {
                if rank_l == 0 {
                    return Err(CliError::invalid("--rank-l must be >= 1"));
                }
                if odd_codim > 63 {
                    return Err(CliError::invalid("--odd-codim is unreasonably large"));
                }
                Ok((
                    Payload::Scalar(BigInt::from(color_schreier_rank(rank_l, odd_codim))),
                    Meta::default(),
                ))
            }
        },
        Command::Growth { coeffs, window } => {
            let coeffs = coeffs_or_stdin(&coeffs)?;
            let dims = TruncatedSeries::from_coeffs(coeffs);
            let window = parse_window(&window)?;
            let estimate = growth_rate_estimate(&dims, window).map_err(CliError::from)?;
            Ok((
                Payload::Estimate(estimate),
                Meta {
                    window: Some(window),
                    ..Meta::default()
                },
            ))
        }
        Command::Verify { which } => {
            let mut meta = Meta::default();
            let checks = match which {
                VerifyCommand::Witt {
                    max_rank,
                    max_degree,
                } => verify::verify_witt(max_rank, max_degree)?,
                VerifyCommand::ColorWitt { max_degree } => verify::verify_color_witt(max_degree)?,
                VerifyCommand::Pbw => verify::verify_pbw()?,
                VerifyCommand::Jacobi {
                    seed,
                    trials,
                    max_degree,
                } => {
                    meta.seed = Some(seed);
                    verify::verify_jacobi_identities(seed, trials, max_degree)?
                }
                VerifyCommand::SchreierConsistency => verify::verify_schreier_consistency()?,
                VerifyCommand::GrowthRate => verify::verify_growth_rate()?,
            };
            Ok((Payload::Checks(checks), meta))
        }
    }
}
