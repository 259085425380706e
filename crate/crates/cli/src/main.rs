use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invkl::fan::{
    b_coefficients, expand_palindromic_basis, q_fan_closed, q_fan_deletion, q_fan_recurrence,
    y_fan_closed, y_fan_deletion,
};
use invkl::graph::Multigraph;
use invkl::kls::{
    q_fan_oracle_capped, q_graph, y_fan_oracle_capped, y_graph, Q_FAN_ORACLE_MAX_N,
    Y_FAN_ORACLE_MAX_N,
};
use invkl::series::{q_fan_from_gf, y_fan_from_gf};
use invkl::{Error, IntPoly};

mod output;
mod verify;

use output::{Format, Row};

const CAPS: &str = "Caps: the composition oracle enumerates graphs with at most 11 vertices \
(fans up to n = 10); chromatic polynomials are limited to 16 vertices; C' structures to n <= 10. \
The fan oracles default to n <= 7 for Q and n <= 6 for Y and can be raised with --oracle-max-n.";

#[derive(Parser)]
#[command(
    name = "invkl",
    version,
    about = "Exact inverse Kazhdan-Lusztig and inverse Z-polynomials of graphic matroids",
    after_help = CAPS
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inverse Kazhdan-Lusztig polynomial Q of the fan F_n.
    #[command(after_help = CAPS)]
    Q(QArgs),
    /// Inverse Z-polynomial Y of the fan F_n.
    #[command(after_help = CAPS)]
    Y(YArgs),
    /// An invariant of a graph read from a file.
    #[command(after_help = CAPS)]
    Graph(GraphArgs),
    /// Cross-validation and property suites.
    #[command(after_help = CAPS)]
    Verify(verify::VerifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Range {
    /// A single fan size.
    #[arg(long)]
    n: Option<usize>,
    /// All fan sizes 0..=N.
    #[arg(long)]
    n_max: Option<usize>,
}

impl Range {
    fn top(&self) -> usize {
        self.n.or(self.n_max).unwrap()
    }

    fn sizes(&self) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (0..=self.top()).collect(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum QMethod {
    Closed,
    Recurrence,
    CatalanGf,
    Deletion,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum YMethod {
    Closed,
    Deletion,
    Gf,
    Oracle,
    BExpansion,
}

#[derive(Args)]
struct QArgs {
    #[command(flatten)]
    range: Range,
    #[arg(long, value_enum, default_value = "closed")]
    method: QMethod,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Largest n accepted by the oracle method.
    #[arg(long, default_value_t = Q_FAN_ORACLE_MAX_N)]
    oracle_max_n: usize,
}

#[derive(Args)]
struct YArgs {
    #[command(flatten)]
    range: Range,
    #[arg(long, value_enum, default_value = "closed")]
    method: YMethod,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Largest n accepted by the oracle method.
    #[arg(long, default_value_t = Y_FAN_ORACLE_MAX_N)]
    oracle_max_n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Q,
    Y,
    Chromatic,
    Characteristic,
    Mobius,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file: a `vertices N` line followed by one `u v` edge per line.
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_enum)]
    invariant: Invariant,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// `Ok(true)` on success, `Ok(false)` when a suite reports a failure.
fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Q(args) => cmd_q(&args).map(|()| true),
        Command::Y(args) => cmd_y(&args).map(|()| true),
        Command::Graph(args) => cmd_graph(&args).map(|()| true),
        Command::Verify(args) => verify::run(&args),
    }
}

/// Writes to stdout; a closed pipe is not an error.
pub(crate) fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn pick(all: Vec<IntPoly>, sizes: &[usize]) -> Vec<IntPoly> {
    sizes.iter().map(|&n| all[n].clone()).collect()
}

fn cmd_q(args: &QArgs) -> Result<(), Error> {
    let sizes = args.range.sizes();
    let top = args.range.top();
    let (name, polys) = match args.method {
        QMethod::Closed => ("closed", sizes.iter().map(|&n| q_fan_closed(n)).collect::<Result<_, _>>()?),
        QMethod::Recurrence => ("recurrence", pick(q_fan_recurrence(top)?, &sizes)),
        QMethod::CatalanGf => ("catalan-gf", pick(q_fan_from_gf(top)?, &sizes)),
        QMethod::Deletion => ("deletion", pick(q_fan_deletion(top), &sizes)),
        QMethod::Oracle => (
            "oracle",
            sizes
                .iter()
                .map(|&n| q_fan_oracle_capped(n, args.oracle_max_n))
                .collect::<Result<_, _>>()?,
        ),
    };
    let rows: Vec<Row> = sizes
        .iter()
        .zip(polys)
        .map(|(&n, p)| Row::new(n, "Q", name, p))
        .collect();
    emit(&output::render_rows(&rows, args.format, args.range.n.is_some()));
    Ok(())
}

fn cmd_y(args: &YArgs) -> Result<(), Error> {
    let sizes = args.range.sizes();
    let top = args.range.top();
    let rows: Vec<Row> = match args.method {
        YMethod::BExpansion => sizes
            .iter()
            .map(|&n| {
                let b = b_coefficients(n)?;
                let y = expand_palindromic_basis(n, &b);
                Ok(Row::new(n, "Y", "b-expansion", y).with_b(b))
            })
            .collect::<Result<_, Error>>()?,
        method => {
            let (name, polys) = match method {
                YMethod::Closed => ("closed", sizes.iter().map(|&n| y_fan_closed(n)).collect::<Result<_, _>>()?),
                YMethod::Deletion => ("deletion", pick(y_fan_deletion(top), &sizes)),
                YMethod::Gf => ("gf", pick(y_fan_from_gf(top)?, &sizes)),
                YMethod::Oracle => (
                    "oracle",
                    sizes
                        .iter()
                        .map(|&n| y_fan_oracle_capped(n, args.oracle_max_n))
                        .collect::<Result<_, _>>()?,
                ),
                YMethod::BExpansion => unreachable!(),
            };
            sizes
                .iter()
                .zip(polys)
                .map(|(&n, p)| Row::new(n, "Y", name, p))
                .collect()
        }
    };
    emit(&output::render_rows(&rows, args.format, args.range.n.is_some()));
    Ok(())
}

fn cmd_graph(args: &GraphArgs) -> Result<(), Error> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| Error::InvalidGraph(format!("{}: {e}", args.file.display())))?;
    let g: Multigraph = text.parse()?;
    let (name, value) = match args.invariant {
        Invariant::Q => ("Q", output::Value::Poly(q_graph(&g)?)),
        Invariant::Y => ("Y", output::Value::Poly(y_graph(&g)?)),
        Invariant::Chromatic => ("chromatic", output::Value::Poly(g.chromatic_polynomial()?)),
        Invariant::Characteristic => (
            "characteristic",
            output::Value::Poly(g.characteristic_polynomial()?),
        ),
        Invariant::Mobius => ("mobius", output::Value::Int(g.mobius_invariant()?)),
    };
    emit(&output::render_graph_value(name, &value, args.format));
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
