use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use onsager_core::tables::{bases_table, generators_table, render_bases_table, render_generators_table};
use onsager_core::verify::{self, Suite};
use onsager_core::{
    apply_basic, apply_perm, basis_elem, basis_elem_recursive, coords, decompose_canonical,
    decompose_onsager, decompose_path, evaluate, parse, transition, word_for, Basic, BasisId,
    BasisVector, Family, LoopElem, PathLabel, Perm, TensorStyle,
};

/// Exact computations in the Onsager algebra and its four bases.
#[derive(Parser)]
#[command(name = "onsager", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Print the tensor sign as `(x)` instead of `⊗`.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    Closed,
    Recursive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Bases,
    Generators,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a bracket expression in A and B, e.g. "[A,[A,B]] - 2B".
    Eval { expr: String },
    /// Show one basis element, e.g. `basis uu psi 1 --form recursive`.
    Basis {
        /// uu, dd, du, ud or a label such as 0312.
        basis: String,
        /// A, B or psi.
        family: String,
        index: u32,
        #[arg(long, value_enum, default_value_t = Form::Closed)]
        form: Form,
    },
    /// Expand a vector of basis `--to` over basis `--from`.
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        family: String,
        index: u32,
    },
    /// Coordinates of an element of O in one basis.
    Coords { basis: String, element: String },
    /// Split an element along a path; without --label, along [0312].
    Decompose {
        element: String,
        #[arg(long)]
        label: Option<String>,
        /// Decompose inside O using the basis with this label.
        #[arg(long)]
        onsager: bool,
    },
    /// Apply rho, tau, mu, phi or a permutation such as "(12)(30)".
    Apply { perm: String, element: String },
    /// Run the self-checks.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_index: u32,
        /// all, ring, loop, symmetry, likeness, bases, transitions or expressions.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random inputs per randomized check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Summary tables of the bases or of the generators A, B.
    Table {
        #[arg(value_enum)]
        which: TableKind,
    },
}

struct Out {
    format: Format,
    style: TensorStyle,
}

impl Out {
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> serde_json::Value) {
        match self.format {
            Format::Text => println!("{}", text()),
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&value()).expect("JSON values serialize")
            ),
        }
    }
}

fn vector(basis: &str, family: &str, index: u32) -> Result<BasisVector, String> {
    let basis: BasisId = basis.parse().map_err(|e| format!("{e}"))?;
    let family: Family = family
        .parse()
        .map_err(|_| format!("unknown family {family:?}; expected A, B or psi"))?;
    BasisVector::new(basis, family, index).map_err(|e| e.to_string())
}

fn element(text: &str) -> Result<LoopElem, String> {
    text.parse::<LoopElem>().map_err(|e| format!("cannot parse element {text:?}: {e}"))
}

fn perm(text: &str) -> Result<Perm, String> {
    let basic = Basic::ALL.into_iter().find(|g| g.name() == text);
    match basic {
        Some(g) => Ok(g.perm()),
        None => text.parse().map_err(|e| format!("{e}")),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let out = Out {
        format: cli.format,
        style: if cli.ascii { TensorStyle::Ascii } else { TensorStyle::Unicode },
    };
    let style = out.style;
    match cli.command {
        Command::Eval { expr } => {
            let e = parse(&expr).map_err(|e| format!("{e}\n  {expr}\n  {}^", " ".repeat(e.position)))?;
            let value = evaluate(&e);
            out.emit(|| value.render(style), || json!(value));
        }
        Command::Basis { basis, family, index, form } => {
            let v = vector(&basis, &family, index)?;
            match form {
                Form::Closed => {
                    let value = basis_elem(v).map_err(|e| e.to_string())?;
                    out.emit(|| value.render(style), || json!({ "vector": v, "element": value }));
                }
                Form::Recursive => {
                    let e = basis_elem_recursive(v).map_err(|e| e.to_string())?;
                    out.emit(|| e.to_string(), || json!({ "vector": v, "expr": e }));
                }
            }
        }
        Command::Convert { from, to, family, index } => {
            let v = vector(&from, &family, index)?;
            let dst: BasisId = to.parse().map_err(|e| format!("{e}"))?;
            let c = transition(v.basis, dst, v).map_err(|e| e.to_string())?;
            out.emit(|| c.to_string(), || json!(c));
        }
        Command::Coords { basis, element: text } => {
            let b: BasisId = basis.parse().map_err(|e| format!("{e}"))?;
            let c = coords(&element(&text)?, b).map_err(|e| e.to_string())?;
            out.emit(|| c.to_string(), || json!(c));
        }
        Command::Decompose { element: text, label, onsager } => {
            let u = element(&text)?;
            let label: PathLabel = match label {
                Some(l) => match l.parse::<BasisId>() {
                    Ok(b) => b.path(),
                    Err(_) => l.parse().map_err(|e| format!("{e}"))?,
                },
                None => BasisId::Uu.path(),
            };
            let parts = if onsager {
                decompose_onsager(label, &u).map_err(|e| e.to_string())?
            } else if label == BasisId::Uu.path() {
                decompose_canonical(&u)
            } else {
                decompose_path(label, &u)
            };
            out.emit(|| parts.render(style), || json!(parts));
        }
        Command::Apply { perm: p, element: text } => {
            let u = element(&text)?;
            let value = match Basic::ALL.into_iter().find(|g| g.name() == p) {
                Some(g) => apply_basic(g, &u),
                None => apply_perm(perm(&p)?, &u),
            };
            let word: Vec<_> = word_for(perm(&p)?).letters().iter().map(|g| g.name()).collect();
            out.emit(|| value.render(style), || json!({ "word": word, "element": value }));
        }
        Command::Verify { max_index, suite, samples, seed } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(|_| {
                    format!(
                        "unknown suite {suite:?}; expected all, {}",
                        Suite::ALL.map(Suite::name).join(", ")
                    )
                })?]
            };
            let mut cfg = verify::Config { max_index, samples, ..Default::default() };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let report = verify::run(&suites, &cfg);
            out.emit(|| report.to_string(), || json!(report));
            if !report.ok() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Table { which } => match which {
            TableKind::Bases => {
                let rows = bases_table(style);
                out.emit(|| render_bases_table(&rows), || json!(rows));
            }
            TableKind::Generators => {
                let rows = generators_table();
                out.emit(|| render_generators_table(&rows), || json!(rows));
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
