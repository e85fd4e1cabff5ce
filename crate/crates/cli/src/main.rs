//! `skewalg` command-line front end.
//!
//! Exit status: 0 on success, 1 when the answer is a mathematical failure
//! (singular, undefined, inconsistent), 2 on bad input. Failures print one
//! line `error[<kind>]: <message>` on stderr.

mod output;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use skewalg::repr::{decompose_morphism, FiniteRepresentation, RepMorphism};
use skewalg::{
    cr_inverse, cr_product, cr_quasideterminant, cr_rank, rc_inverse, rc_product,
    rc_quasideterminant, rc_rank, solve_general, Error, QdetResult, Quaternion, SkewMatrix,
};

use output::{matrix_json, quaternion_json, rank_json};

#[derive(Parser, Debug)]
#[command(name = "skewalg", version, about = "Exact linear algebra over the rational quaternions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Rc,
    Cr,
}

#[derive(Args, Debug)]
struct Input {
    /// Inline input; read from --file or standard input when absent.
    value: Option<String>,

    /// Read the input from a file.
    #[arg(long, conflicts_with = "value")]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quasideterminant at a 1-based position.
    Qdet {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Position as `row,col` (RC) or `lower,upper` (CR), 1-based.
        #[arg(long)]
        pos: String,
        #[command(flatten)]
        input: Input,
    },
    /// Inverse matrix.
    Inv {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        input: Input,
    },
    /// Rank and a major minor (1-based indices).
    Rank {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        input: Input,
    },
    /// Solve `x RC⋆ A = b`.
    Solve {
        /// Right-hand side row, e.g. "[1, k]".
        #[arg(long)]
        rhs: String,
        #[command(flatten)]
        input: Input,
    },
    /// Product of two matrices.
    Mul {
        #[arg(long, value_enum)]
        kind: Kind,
        left: String,
        right: String,
    },
    /// Factor a morphism of representations given as JSON
    /// `{"source": rep, "target": rep, "morphism": {"r": [..], "R": [..]}}`.
    ReprDecompose {
        #[command(flatten)]
        input: Input,
    },
    /// Built-in worked examples.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DemoName {
    PaperExample,
}

/// A failed run: exit status plus the diagnostic line.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn input(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind,
            message: message.into(),
        }
    }

    fn math(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            kind,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::Singular => "singular",
            Error::Undefined { .. } => "undefined",
            Error::DivisionByZero => "division-by-zero",
            Error::Parse { .. } => "parse",
            Error::DimensionMismatch(_) => "dimension",
            Error::IndexOutOfRange(_) => "index",
            Error::InvalidRow(_) => "invalid-row",
            Error::InvalidMorphism(_) => "invalid-morphism",
            Error::InvalidRepresentation(_) => "invalid-representation",
            Error::IllDefinedQuotient => "ill-defined-quotient",
            Error::BaseMismatch => "base-mismatch",
            Error::Json(_) => "json",
        };
        if e.is_mathematical() {
            Failure::math(kind, e.to_string())
        } else {
            Failure::input(kind, e.to_string())
        }
    }
}

struct Outcome {
    stdout: String,
    failure: Option<Failure>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, failure: None }
    }
}

fn read_input(input: &Input) -> Result<String, Failure> {
    if let Some(v) = &input.value {
        return Ok(v.clone());
    }
    if let Some(path) = &input.file {
        return fs::read_to_string(path)
            .map_err(|e| Failure::input("io", format!("{}: {e}", path.display())));
    }
    let mut buf = String::new();
    io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Failure::input("io", e.to_string()))?;
    Ok(buf)
}

fn read_matrix(input: &Input) -> Result<SkewMatrix<Quaternion>, Failure> {
    Ok(SkewMatrix::parse(read_input(input)?.trim())?)
}

fn parse_pos(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::input("usage", format!("--pos expects two 1-based indices like 2,2, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || b == 0 {
        return Err(bad());
    }
    Ok((a - 1, b - 1))
}

fn render_matrix(format: Format, m: &SkewMatrix<Quaternion>) -> String {
    match format {
        Format::Text => format!("{m}\n"),
        Format::Json => format!("{}\n", matrix_json(m)),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Qdet { kind, pos, input } => {
            let a = read_matrix(input)?;
            let (p, r) = parse_pos(pos)?;
            let value = match kind {
                Kind::Rc => rc_quasideterminant(&a, p, r)?,
                Kind::Cr => cr_quasideterminant(&a, p, r)?,
            };
            match value {
                QdetResult::Defined(q) => Ok(Outcome::ok(match format {
                    Format::Text => format!("{q}\n"),
                    Format::Json => format!("{}\n", quaternion_json(&q)),
                })),
                QdetResult::Undefined => Err(Error::Undefined { row: p + 1, col: r + 1 }.into()),
            }
        }
        Command::Inv { kind, input } => {
            let a = read_matrix(input)?;
            let inv = match kind {
                Kind::Rc => rc_inverse(&a)?,
                Kind::Cr => cr_inverse(&a)?,
            };
            Ok(Outcome::ok(render_matrix(format, &inv)))
        }
        Command::Rank { kind, input } => {
            let a = read_matrix(input)?;
            let report = match kind {
                Kind::Rc => rc_rank(&a),
                Kind::Cr => cr_rank(&a),
            };
            Ok(Outcome::ok(match format {
                Format::Text => output::rank_text(&report),
                Format::Json => format!("{}\n", rank_json(&report)),
            }))
        }
        Command::Solve { rhs, input } => {
            let a = read_matrix(input)?;
            let b = SkewMatrix::parse(rhs)?;
            let sol = solve_general(&a, &b)?;
            let stdout = match format {
                Format::Text => output::solution_text(&sol),
                Format::Json => format!("{}\n", output::solution_json(&sol)),
            };
            let failure = (!sol.consistent)
                .then(|| Failure::math("inconsistent", "system has no solution"));
            Ok(Outcome { stdout, failure })
        }
        Command::Mul { kind, left, right } => {
            let a = SkewMatrix::parse(left)?;
            let b = SkewMatrix::parse(right)?;
            let c = match kind {
                Kind::Rc => rc_product(&a, &b)?,
                Kind::Cr => cr_product(&a, &b)?,
            };
            Ok(Outcome::ok(render_matrix(format, &c)))
        }
        Command::ReprDecompose { input } => {
            let text = read_input(input)?;
            let doc: Value = serde_json::from_str(&text).map_err(|e| Failure::input("json", e.to_string()))?;
            let field = |name: &str| {
                doc.get(name)
                    .cloned()
                    .ok_or_else(|| Failure::input("json", format!("missing field {name:?}")))
            };
            let parse_rep = |v: Value| {
                serde_json::from_value::<FiniteRepresentation>(v)
                    .map_err(|e| Failure::input("invalid-representation", e.to_string()))
            };
            let source = parse_rep(field("source")?)?;
            let target = parse_rep(field("target")?)?;
            let morphism: RepMorphism = serde_json::from_value(field("morphism")?)
                .map_err(|e| Failure::input("json", e.to_string()))?;
            let d = decompose_morphism(&morphism, &source, &target)?;
            let out = serde_json::to_string_pretty(&d).map_err(|e| Failure::input("json", e.to_string()))?;
            Ok(Outcome::ok(format!("{out}\n")))
        }
        Command::Demo { name: DemoName::PaperExample } => Ok(Outcome::ok(match format {
            Format::Text => output::worked_example_text(),
            Format::Json => format!("{}\n", output::worked_example_json()),
        })),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_owned();
            eprintln!("error[usage]: {first}");
            return ExitCode::from(2);
        }
    };
    let (stdout, failure) = match run(&cli) {
        Ok(Outcome { stdout, failure }) => (stdout, failure),
        Err(f) => (String::new(), Some(f)),
    };
    print!("{stdout}");
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("error[{}]: {}", f.kind, f.message);
            if cli.format == Format::Json && stdout.is_empty() {
                println!("{}", json!({"error": f.kind, "message": f.message}));
            }
            ExitCode::from(f.code)
        }
    }
}
