//! `escalier`: lex escaliers, separators and multiplication matrices of
//! finite point sets.

mod bench;
mod input;
mod output;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use escalier_core::{FieldSpec, LexGame, Point, Session};
use serde::Serialize;

use input::{Format, PointSet};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<escalier_core::Error> for CliError {
    fn from(e: escalier_core::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "escalier", version, about = "Lex Gröbner escaliers of finite point sets")]
struct Cli {
    /// `rational` or `fp:<p>`; overrides the field named in the input.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Point file (JSON or CSV).
    #[arg(long, short, global = true)]
    input: Option<PathBuf>,
    /// Input format; guessed from the file extension when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for random instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Escalier, point-term correspondence, M, bar code and star set.
    Escalier {
        /// Also write the bar code diagram as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print the bar code as text rows instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Squarefree separator polynomials.
    Separators,
    /// Evaluation matrix, its inverse and the multiplication matrices.
    Matrices {
        /// Add the residuals of the defining identities; exit 2 unless all vanish.
        #[arg(long)]
        check: bool,
    },
    /// Border polynomials over the star set and the reduced Gröbner basis.
    Groebner,
    /// Checks every invariant on the input or on random instances.
    Verify {
        /// Number of random instances to generate instead of reading input.
        #[arg(long)]
        random: Option<usize>,
    },
    /// CSV of timings and operation counts.
    Bench {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Comma-separated point counts.
        #[arg(long, value_delimiter = ',', default_value = "250,500,1000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        lo: i64,
        #[arg(long, default_value_t = 10)]
        hi: i64,
    },
    /// Saves points, M and bar code for a later `resume`.
    ExportState,
    /// Appends the input points to an exported state and prints the new state.
    Resume {
        #[arg(long)]
        state: PathBuf,
    },
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut out = io::stdout().lock();
    match writeln!(out, "{text}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(CliError::Internal(e.to_string())),
        _ => Ok(()),
    }
}

fn field_flag(cli: &Cli) -> Result<Option<FieldSpec>, CliError> {
    cli.field.as_deref().map(input::parse_field).transpose()
}

fn points(cli: &Cli) -> Result<PointSet, CliError> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| CliError::Input("--input is required".into()))?;
    input::load(path, cli.format, field_flag(cli)?)
}

fn session(cli: &Cli, with_matrices: bool) -> Result<Session, CliError> {
    let set = points(cli)?;
    Ok(Session::run(set.n, set.field, &set.points, with_matrices)?)
}

fn load_state(path: &PathBuf) -> Result<LexGame, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let doc: output::StateDoc =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid state file: {e}")))?;
    let field = input::parse_field(&doc.field)?;
    let mut pts = Vec::with_capacity(doc.points.len());
    for (i, row) in doc.points.iter().enumerate() {
        if row.len() != doc.n {
            return Err(CliError::Input(format!(
                "state point {}: expected {} coordinates, found {}",
                i + 1,
                doc.n,
                row.len()
            )));
        }
        let coords = row
            .iter()
            .enumerate()
            .map(|(j, c)| {
                escalier_core::scalar::parse_scalar(c, field)
                    .map_err(|e| CliError::Input(format!("state point {}, coordinate {}: {e}", i + 1, j + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        pts.push(Point::new(coords).map_err(|e| CliError::Input(e.to_string()))?);
    }
    let stored = output::barcode_from_json(&doc.barcode, doc.n)?;
    let game = LexGame::from_parts(doc.n, field, pts, doc.m)
        .map_err(|e| CliError::Input(format!("inconsistent state: {e}")))?;
    if *game.barcode() != stored {
        return Err(CliError::Input("inconsistent state: bar code does not match M".into()));
    }
    Ok(game)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Escalier { svg, text } => {
            let s = session(cli, false)?;
            if let Some(path) = svg {
                fs::write(path, s.game().barcode().to_svg())
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            }
            if *text {
                print!("{}", s.game().barcode().to_text());
                return Ok(());
            }
            print_json(&output::escalier_doc(&s)?)
        }
        Command::Separators => print_json(&output::separator_doc(&session(cli, false)?)),
        Command::Matrices { check } => {
            let s = session(cli, true)?;
            let g = s.game();
            let m = s.matrices().expect("matrices enabled");
            let doc = output::matrix_doc(m, g.nvars(), g.field(), *check)?;
            print_json(&doc)?;
            match &doc.residuals {
                Some(r) if !r.all_zero => Err(CliError::Internal("nonzero residuals".into())),
                _ => Ok(()),
            }
        }
        Command::Groebner => print_json(&output::groebner_doc(&session(cli, true)?)?),
        Command::Verify { random } => {
            let sets = match random {
                Some(count) => verify::random_sets(*count, cli.seed, field_flag(cli)?),
                None => vec![points(cli)?],
            };
            let report = verify::verify(&sets);
            print_json(&report)?;
            if report.pass {
                Ok(())
            } else {
                Err(CliError::Internal("invariant violations found".into()))
            }
        }
        Command::Bench { n, sizes, lo, hi } => {
            let cfg = bench::BenchConfig {
                sizes: sizes.clone(),
                n: *n,
                lo: *lo,
                hi: *hi,
                seed: cli.seed,
                field: field_flag(cli)?.unwrap_or(FieldSpec::prime(32003)?),
            };
            bench::run(&cfg, io::stdout().lock())
        }
        Command::ExportState => print_json(&output::state_doc(&session(cli, false)?)),
        Command::Resume { state } => {
            let game = load_state(state)?;
            let mut s = Session::from_game(game, false)?;
            if let Some(path) = &cli.input {
                let field = s.game().field();
                if let Some(f) = field_flag(cli)? {
                    if f != field {
                        return Err(CliError::Input(format!("--field {f} differs from the state field {field}")));
                    }
                }
                let more = input::load(path, cli.format, Some(field))?;
                if more.n != s.game().nvars() {
                    return Err(CliError::Input(format!(
                        "input has {} coordinates per point, state has {}",
                        more.n,
                        s.game().nvars()
                    )));
                }
                let offset = s.points().len();
                for (i, p) in more.points.into_iter().enumerate() {
                    if let Some(j) = s.points().iter().position(|q| *q == p) {
                        return Err(CliError::Input(format!(
                            "point {} duplicates point {}",
                            offset + i + 1,
                            j + 1
                        )));
                    }
                    s.add_point(p)?;
                }
            }
            print_json(&output::state_doc(&s))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("escalier: {e}");
            ExitCode::from(e.code())
        }
    }
}
