//! Batch command-line front end for the eigenscheme library.
//!
//! Exit codes: 0 success, 1 usage or parse failure, 2 the input needs
//! eigenvalues outside the rationals, 3 an internal guard tripped (engine
//! pair cap, degenerate random sample, or the two computation routes
//! disagreeing). Errors are written to stderr as single-line records
//! `error kind=<kind> message="<message>"`.

mod formats;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eigenscheme::decomposition::{
    decompose_general, diagonalizable_via_ideal_with, ComponentReport,
};
use eigenscheme::eigen::{eigenscheme_ideal, jordan_matrix, transport, JordanSpec};
use eigenscheme::groebner::{buchberger_with, EngineConfig};
use eigenscheme::hilbert::{hilbert_function_with, measured_dim_degree, reconstruct_jordan};
use eigenscheme::matrix::QMatrix;
use eigenscheme::oracle;
use eigenscheme::ring::MonomialOrder;
use eigenscheme::{Error, Ideal};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eigenscheme",
    version,
    about = "Exact eigenscheme ideals, Gröbner bases, and Jordan structure for rational matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl OrderArg {
    fn to_order(self) -> MonomialOrder {
        match self {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Input selection shared by most verbs: exactly one of a matrix file or a
/// structured Jordan spec file.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Matrix file (plain text or structured)
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Jordan spec file (structured)
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Args)]
struct CommonArgs {
    /// Monomial order for computation and printing
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of the eigenscheme ideal
    Ideal {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Reduced Gröbner basis of the eigenscheme ideal
    Gb {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Primary decomposition with dimension and degree per component
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Jordan type recovered from the decomposition's Hilbert data next to
    /// the rank-sequence oracle, with an agreement flag
    Jordan {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Diagonalizability from the radical test and from eigenspace counting
    Diagonalizable {
        /// Matrix file (plain text or structured)
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Hilbert function sample of the eigenscheme ideal
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        /// Largest degree to sample
        #[arg(long, default_value_t = 8)]
        tmax: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Degree in s of the discriminant of char(B + sC) for seeded random
    /// integer matrices B, C
    DiscDegree {
        /// Matrix size
        #[arg(short)]
        r: usize,
        /// Seed for the fixed SplitMix64 generator
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn error_kind(e: &Error) -> (&'static str, u8) {
    match e {
        Error::Parse(_) => ("parse", 1),
        Error::InvalidArgument(_) => ("invalid-argument", 1),
        Error::Validation(_) => ("validation", 1),
        Error::Dimension(_) => ("dimension", 1),
        Error::RingMismatch => ("ring-mismatch", 1),
        Error::UnsupportedField(_) => ("unsupported-field", 2),
        Error::PairCapExceeded { .. } => ("pair-cap", 3),
        Error::DegenerateSample(_) => ("degenerate-sample", 3),
        Error::InsufficientSample(_) => ("insufficient-sample", 3),
        Error::Inconsistency(_) => ("inconsistency", 3),
    }
}

fn main() -> ExitCode {
    // usage problems exit 1; clap's default of 2 is reserved for the
    // unsupported-field class here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let is_usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(u8::from(is_usage));
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let (kind, code) = error_kind(&e);
            eprintln!("error kind={kind} message=\"{e}\"");
            ExitCode::from(code)
        }
    }
}

/// Either the eigenscheme ideal of a matrix file, or the ideal of the
/// Jordan matrix of a spec file.
fn load_ideal(input: &InputArgs) -> Result<Ideal, Error> {
    let m = load_matrix(input)?;
    eigenscheme_ideal(&m)
}

fn load_matrix(input: &InputArgs) -> Result<QMatrix, Error> {
    match (&input.matrix, &input.spec) {
        (Some(path), None) => formats::read_matrix_file(path),
        (None, Some(path)) => Ok(jordan_matrix(&formats::read_spec_file(path)?)),
        _ => unreachable!("clap enforces exactly one input"),
    }
}

fn run(command: Command) -> Result<u8, Error> {
    let cfg = EngineConfig::large();
    match command {
        Command::Ideal { input, common } => {
            let ideal = load_ideal(&input)?;
            let order = common.order.to_order();
            let gens = formats::ideal_strings(&ideal, &order);
            match common.format {
                FormatArg::Text => {
                    for g in &gens {
                        println!("{g}");
                    }
                }
                FormatArg::Json => {
                    print_json(&json!({"order": order.to_string(), "generators": gens}));
                }
            }
            Ok(0)
        }
        Command::Gb { input, common } => {
            let ideal = load_ideal(&input)?;
            let order = common.order.to_order();
            let gb = buchberger_with(&ideal, &order, &cfg)?;
            let gens: Vec<String> = gb
                .elements()
                .iter()
                .map(|g| g.to_string_with_order(&order))
                .collect();
            match common.format {
                FormatArg::Text => {
                    for g in &gens {
                        println!("{g}");
                    }
                }
                FormatArg::Json => {
                    print_json(&json!({"order": order.to_string(), "generators": gens}));
                }
            }
            Ok(0)
        }
        Command::Decompose { input, common } => {
            let reports = decompose_reports(&input)?;
            let order = common.order.to_order();
            match common.format {
                FormatArg::Text => {
                    for rep in &reports {
                        println!(
                            "component lambda={} j={} dimension={} degree={}",
                            rep.lambda, rep.j, rep.dimension, rep.degree
                        );
                        for g in formats::ideal_strings(&rep.generators, &order) {
                            println!("  generator: {g}");
                        }
                        for g in formats::ideal_strings(&rep.radical, &order) {
                            println!("  radical: {g}");
                        }
                    }
                }
                FormatArg::Json => {
                    print_json(&reports_json(&reports, &order));
                }
            }
            Ok(0)
        }
        Command::Jordan { input, common } => {
            let matrix = load_matrix(&input)?;
            let oracle_spec = oracle::jordan_type_oracle(&matrix)?;
            let ideal_spec = jordan_via_ideal(&matrix, &cfg)?;
            let agree = oracle_spec == ideal_spec;
            match common.format {
                FormatArg::Text => {
                    println!("ideal-route: {}", formats::spec_to_text(&ideal_spec));
                    println!("oracle-route: {}", formats::spec_to_text(&oracle_spec));
                    println!("agree: {}", if agree { "yes" } else { "no" });
                }
                FormatArg::Json => {
                    print_json(&json!({
                        "ideal_route": formats::spec_to_json(&ideal_spec),
                        "oracle_route": formats::spec_to_json(&oracle_spec),
                        "agree": agree,
                    }));
                }
            }
            Ok(if agree { 0 } else { 3 })
        }
        Command::Diagonalizable { matrix, common } => {
            let m = formats::read_matrix_file(&matrix)?;
            let via_ideal = diagonalizable_via_ideal_with(&m, &cfg)?;
            let via_oracle = oracle::diagonalizable_oracle(&m)?;
            let agree = via_ideal == via_oracle;
            let yn = |b: bool| if b { "yes" } else { "no" };
            match common.format {
                FormatArg::Text => {
                    println!("ideal: {}", yn(via_ideal));
                    println!("oracle: {}", yn(via_oracle));
                    println!("agree: {}", yn(agree));
                }
                FormatArg::Json => {
                    print_json(&json!({
                        "ideal_route": via_ideal,
                        "oracle_route": via_oracle,
                        "agree": agree,
                    }));
                }
            }
            Ok(if agree { 0 } else { 3 })
        }
        Command::Hilbert {
            input,
            tmax,
            common,
        } => {
            let ideal = load_ideal(&input)?;
            let sample = hilbert_function_with(&ideal, tmax, &cfg)?;
            match common.format {
                FormatArg::Text => {
                    let vals: Vec<String> =
                        sample.values.iter().map(|v| v.to_string()).collect();
                    println!("{}", vals.join(" "));
                }
                FormatArg::Json => {
                    print_json(&json!({"values": sample.values}));
                }
            }
            Ok(0)
        }
        Command::DiscDegree { r, seed, common } => {
            let degree = oracle::discriminant_degree_experiment(r, seed)?;
            match common.format {
                FormatArg::Text => println!("{degree}"),
                FormatArg::Json => print_json(&json!({"degree": degree})),
            }
            Ok(0)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn reports_json(reports: &[ComponentReport], order: &MonomialOrder) -> Value {
    json!({
        "components": reports
            .iter()
            .map(|rep| {
                json!({
                    "lambda": rep.lambda.to_string(),
                    "j": rep.j,
                    "generators": formats::ideal_strings(&rep.generators, order),
                    "radical": formats::ideal_strings(&rep.radical, order),
                    "dimension": rep.dimension,
                    "degree": rep.degree,
                })
            })
            .collect::<Vec<_>>(),
    })
}

/// Components of the input: a matrix is transported to Jordan coordinates
/// through the oracle's basis, decomposed in closed form, and transported
/// back; a spec is decomposed directly.
fn decompose_reports(input: &InputArgs) -> Result<Vec<ComponentReport>, Error> {
    match (&input.matrix, &input.spec) {
        (None, Some(path)) => decompose_general(&formats::read_spec_file(path)?),
        (Some(path), None) => {
            let matrix = formats::read_matrix_file(path)?;
            let (p, spec) = oracle::jordan_basis(&matrix)?;
            let reports = decompose_general(&spec)?;
            let c = p.inverse()?;
            reports
                .into_iter()
                .map(|rep| {
                    Ok(ComponentReport {
                        generators: transport(&rep.generators, &c)?,
                        radical: transport(&rep.radical, &c)?,
                        ..rep
                    })
                })
                .collect()
        }
        _ => unreachable!("clap enforces exactly one input"),
    }
}

/// The commutative-algebra route to the Jordan type: decompose in Jordan
/// coordinates, measure each component's dimension and degree from its
/// Hilbert staircase, and reconstruct the block data from those invariants.
fn jordan_via_ideal(matrix: &QMatrix, cfg: &EngineConfig) -> Result<JordanSpec, Error> {
    let (_, spec) = oracle::jordan_basis(matrix)?;
    let reports = decompose_general(&spec)?;
    let measured = reports
        .into_iter()
        .map(|mut rep| {
            let (dim, deg) = measured_dim_degree(&rep.generators, cfg)?;
            rep.dimension = dim;
            rep.degree = deg as usize;
            Ok(rep)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    reconstruct_jordan(&measured)
}
