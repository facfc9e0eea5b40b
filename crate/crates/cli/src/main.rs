use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use srt_cli::{analyze, cmd_analyze, cmd_table, cmd_verify, parse_range, table, to_sorted_json};
use srt_cli::{CliError, Config, Grid, Suite};
use srt_core::GroupKind;

#[derive(Parser)]
#[command(name = "srt", version, about = "Symplectic reductions of 2-nilpotent type and their invariant Hilbert schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Master seed; every randomized check reports the seed it used.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 3)]
    weight_bound: usize,
    #[arg(long, global = true, default_value_t = 4)]
    degree_bound: usize,
    /// Samples per randomized check.
    #[arg(long, global = true, default_value_t = 25)]
    samples: usize,
    /// Persistent branching cache (accelerator only).
    #[arg(long, global = true, env = "SRT_CACHE")]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Gl,
    O,
    Sp,
}

impl From<Group> for GroupKind {
    fn from(g: Group) -> Self {
        match g {
            Group::Gl => GroupKind::GeneralLinear,
            Group::O => GroupKind::Orthogonal,
            Group::Sp => GroupKind::Symplectic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the symplectic reduction for one (G, n, m).
    Analyze {
        #[arg(long, value_enum)]
        group: Group,
        /// dim V
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run a verification suite over the (n, m) grid.
    Verify {
        /// dims, factor, h0, cauchy, ks, springer, theorems or all
        suite: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
    /// Summary table over ranges of n and m, e.g. `--n 1..3 --m 1-6`.
    Table {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
    },
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let c = &cli.common;
    let config = Config {
        weight_bound: c.weight_bound,
        degree_bound: c.degree_bound,
        sample_count: c.samples,
        seed: c.seed,
        cache_path: c.cache.clone(),
    };
    match cli.command {
        Command::Analyze { group, n, m } => {
            let report = cmd_analyze(group.into(), n, m, &config)?;
            let out = match c.format {
                Format::Json => to_sorted_json(&report),
                Format::Text => analyze::render_text(&report),
                Format::Csv => return Err(CliError::Usage("analyze supports --format text or json".into())),
            };
            Ok((out, report.passed()))
        }
        Command::Verify { suite, n_max, m_max } => {
            let suite: Suite = suite.parse()?;
            let report = cmd_verify(suite, Grid { n_max, m_max }, &config)?;
            let out = match c.format {
                Format::Json => to_sorted_json(&report),
                Format::Text => srt_cli::verify::render_text(&report),
                Format::Csv => return Err(CliError::Usage("verify supports --format text or json".into())),
            };
            Ok((out, report.passed))
        }
        Command::Table { group, n, m } => {
            let rows = cmd_table(group.into(), parse_range(&n)?, parse_range(&m)?, &config)?;
            let out = match c.format {
                Format::Json => to_sorted_json(&rows),
                Format::Text => table::render_text(&rows),
                Format::Csv => table::render_csv(&rows),
            };
            Ok((out, true))
        }
    }
}

/// Writes to stdout, treating a closed pipe (`srt ... | head`) as success.
fn emit(out: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes()).and_then(|_| {
        if out.ends_with('\n') {
            Ok(())
        } else {
            stdout.write_all(b"\n")
        }
    });
    let _ = stdout.flush();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, passed)) => {
            emit(&out);
            if passed {
                ExitCode::SUCCESS
            } else {
                let e = CliError::VerificationFailed("one or more checks failed".into());
                eprintln!("srt: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        }
        Err(e) => {
            eprintln!("srt: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
