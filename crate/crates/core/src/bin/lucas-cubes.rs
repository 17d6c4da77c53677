use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lucas_cubes::formulas::{
    fibonacci, jacobsthal_lucas, lucas, lucas_triangle_rows, padovan123, poly, PolyKind,
};
use lucas_cubes::lattice::{gamma, lucas_cube, omega};
use lucas_cubes::poset::{make_fence, make_lfence};
use lucas_cubes::resonance::{build_chain, matchings_to_json, z_digraph, HexChain, LucaseneVariant};
use lucas_cubes::verify::{self, Status, Suite, VerifyConfig};
use lucas_cubes::Error;

#[derive(Parser)]
#[command(name = "lucas-cubes", version, about = "Matchable Lucas cubes: constructions, polynomials, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph or poset of a family.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Lucasene only: position of the straight hexagon.
        #[arg(long, default_value = "straight-first")]
        variant: Variant,
    },
    /// Print a polynomial of one family.
    Poly {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Computation method; defaults to the recurrence.
        #[arg(long)]
        method: Option<String>,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value = "plain")]
        format: Format,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Export a table.
    Table {
        #[arg(long)]
        kind: TableKind,
        #[arg(long)]
        rows: usize,
        /// Polynomial family for `spectrum_grid`.
        #[arg(long)]
        kind_inner: Option<String>,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Perfect matchings and resonance digraph of a hexagonal chain.
    Chain {
        /// Attachment code over L, R, S; the chain has len + 2 hexagons.
        #[arg(long)]
        code: String,
        #[arg(long, default_value = "graph")]
        export: ChainExport,
        #[arg(long, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Omega,
    Gamma,
    Lambda,
    Fence,
    Lfence,
    Lucasene,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    StraightFirst,
    StraightLast,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum TableKind {
    LucasTriangle,
    Sequences,
    SpectrumGrid,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "kebab-case")]
enum ChainExport {
    Graph,
    Matchings,
    ZDigraph,
}

/// Failure of a command: usage problems exit 2, the rest exit 1.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::MalformedChain(_) | Error::SizeLimit { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn unsupported(format: Format, what: &str) -> Failure {
    let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    usage(format!("format {name} is not available for {what}"))
}

fn construct(family: Family, n: usize, format: Format, variant: Variant) -> Result<String, Failure> {
    let dot = match format {
        Format::Json => false,
        Format::Dot => true,
        other => return Err(unsupported(other, "construct")),
    };
    let text = match family {
        Family::Omega | Family::Gamma => {
            let h = if matches!(family, Family::Omega) { omega(n)? } else { gamma(n)? };
            if dot { h.to_dot() } else { h.to_json() }
        }
        Family::Lambda => {
            if n == 0 {
                return Err(usage("lambda needs n >= 1"));
            }
            let g = lucas_cube(n)?;
            if dot { g.to_dot() } else { g.to_json() }
        }
        Family::Fence | Family::Lfence => {
            let p = if matches!(family, Family::Fence) { make_fence(n)? } else { make_lfence(n)? };
            if dot { p.to_dot() } else { p.to_json() }
        }
        Family::Lucasene => {
            let v = match variant {
                Variant::StraightFirst => LucaseneVariant::StraightFirst,
                Variant::StraightLast => LucaseneVariant::StraightLast,
            };
            let g = build_chain(&HexChain::lucasene(n, v)?)?;
            if dot { g.graph().to_dot() } else { g.to_json() }
        }
    };
    Ok(text)
}

fn poly_cmd(kind: &str, n: usize, method: Option<&str>, format: Format) -> Result<String, Failure> {
    let kind: PolyKind = kind.parse()?;
    if let Some(m) = method {
        if !kind.methods().contains(&m) {
            return Err(usage(format!(
                "method {m:?} is not available for {kind}; choose from {}",
                kind.methods().join(", ")
            )));
        }
    }
    let p = poly(kind, n, method)?;
    match format {
        Format::Plain => Ok(p.to_plain()),
        Format::Json => Ok(p.to_json(kind.name(), n)),
        Format::Csv => Ok(p.to_csv_row(kind.name(), n)),
        Format::Dot => Err(unsupported(format, "poly")),
    }
}

fn verify_cmd(suite: &str, max_n: usize, format: Format, timing: bool) -> Result<(String, bool), Failure> {
    let suite: Suite = suite.parse()?;
    let cfg = VerifyConfig::new(max_n).with_env_guard()?;
    let report = verify::run(suite, &cfg)?;
    for c in report.discrepancies() {
        eprintln!("warning: {} ({}): {}", c.name, c.range, c.detail);
    }
    if !timing {
        eprintln!("{} finished in {:.2?}", report.suite, report.wall_time);
    }
    let text = match format {
        Format::Plain => report.to_plain(timing),
        Format::Json => report.to_json(timing),
        Format::Csv => report.to_csv(),
        Format::Dot => return Err(unsupported(format, "verify")),
    };
    Ok((text, report.count(Status::Fail) == 0))
}

/// Rows of decimal strings with an optional header.
fn render_rows(kind: &str, header: Option<Vec<String>>, rows: Vec<Vec<String>>, format: Format) -> Result<String, Failure> {
    match format {
        Format::Plain => Ok(rows.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("\n")),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            for r in header.iter().chain(&rows) {
                w.write_record(r).map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Runtime(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("utf-8").trim_end().to_string())
        }
        Format::Json => Ok(json!({ "kind": kind, "header": header, "rows": rows }).to_string()),
        Format::Dot => Err(unsupported(format, "table")),
    }
}

fn table(kind: TableKind, rows: usize, inner: Option<&str>, format: Format) -> Result<String, Failure> {
    if rows == 0 {
        return Err(usage("rows must be at least 1"));
    }
    let strings = |v: &[num_bigint::BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    match kind {
        TableKind::LucasTriangle => {
            let body = lucas_triangle_rows(rows).iter().map(|r| strings(r)).collect();
            render_rows("lucas_triangle", None, body, format)
        }
        TableKind::Sequences => {
            let header = ["n", "F", "L", "J", "p'"].map(String::from).to_vec();
            let body = (0..rows)
                .map(|n| {
                    vec![
                        n.to_string(),
                        fibonacci(n).to_string(),
                        lucas(n).to_string(),
                        jacobsthal_lucas(n).to_string(),
                        padovan123(n).to_string(),
                    ]
                })
                .collect();
            render_rows("sequences", Some(header), body, format)
        }
        TableKind::SpectrumGrid => {
            let inner: PolyKind = inner.ok_or_else(|| usage("spectrum_grid needs --kind-inner"))?.parse()?;
            let body = (0..rows)
                .map(|n| {
                    let p = poly(inner, n, None)?;
                    let mut row = vec![n.to_string()];
                    row.extend(strings(p.coeffs()));
                    Ok(row)
                })
                .collect::<Result<Vec<_>, Error>>()?;
            render_rows(&format!("spectrum_grid:{inner}"), None, body, format)
        }
    }
}

fn chain_cmd(code: &str, export: ChainExport, format: Format) -> Result<String, Failure> {
    let g = build_chain(&HexChain::parse(code)?)?;
    match (export, format) {
        (ChainExport::Graph, Format::Json) => Ok(g.to_json()),
        (ChainExport::Graph, Format::Dot) => Ok(g.graph().to_dot()),
        (ChainExport::Matchings, Format::Json) => Ok(matchings_to_json(&z_digraph(&g)?.0)),
        (ChainExport::ZDigraph, Format::Dot) => Ok(z_digraph(&g)?.1.to_dot()),
        (ChainExport::ZDigraph, Format::Json) => Ok(z_digraph(&g)?.1.to_json()),
        (_, f) => Err(unsupported(f, "this chain export")),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let (text, ok) = match cli.command {
        Command::Construct {
            family,
            n,
            format,
            variant,
        } => (construct(family, n, format, variant)?, true),
        Command::Poly { kind, n, method, format } => (poly_cmd(&kind, n, method.as_deref(), format)?, true),
        Command::Verify {
            suite,
            max_n,
            format,
            timing,
        } => verify_cmd(&suite, max_n, format, timing)?,
        Command::Table {
            kind,
            rows,
            kind_inner,
            format,
        } => (table(kind, rows, kind_inner.as_deref(), format)?, true),
        Command::Chain { code, export, format } => (chain_cmd(&code, export, format)?, true),
    };
    emit(cli.out.as_ref(), &text)?;
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
