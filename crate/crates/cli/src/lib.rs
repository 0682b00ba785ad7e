//! Command-line front end: reads a JSON problem, runs the library and
//! writes a canonical JSON (or plain-text) report.

pub mod commands;
pub mod error;
pub mod examples;
pub mod json;
pub mod schema;
pub mod table;

use std::io::{Read, Write};

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

pub use commands::COMMANDS;
use commands::Settings;
pub use error::{CliError, EXIT_MATH, EXIT_SCHEMA};
pub use examples::bundled_examples;
use schema::ProblemSpec;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "rescale", version, about = "Exact rescaling computations for graded algebras, links and arrangements")]
struct Args {
    /// Command to run; defaults to the `command` field of the problem.
    command: Option<String>,
    /// Problem file (JSON); standard input when absent.
    #[arg(long)]
    input: Option<String>,
    /// Run a bundled problem instead of reading input.
    #[arg(long)]
    example: Option<String>,
    /// List bundled problems and exit.
    #[arg(long)]
    list_examples: bool,
    /// Truncation degree N.
    #[arg(long)]
    truncate: Option<usize>,
    /// Rescaling parameter k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Koszul test: series, quillen, ce or all.
    #[arg(long)]
    mode: Option<String>,
    /// Largest chain length of the Chevalley–Eilenberg test.
    #[arg(long)]
    p_max: Option<usize>,
    /// Largest weight of the Chevalley–Eilenberg test.
    #[arg(long)]
    weight_max: Option<usize>,
    /// Bracket-length truncation for Campbell–Hausdorff commands.
    #[arg(long)]
    order: Option<usize>,
}

pub const DEFAULT_TRUNCATION: usize = 12;

/// Runs the CLI on `argv` (program name first) and returns the exit code:
/// 0 on success, 2 on malformed input, 3 on a mathematical error.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_SCHEMA } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    if args.list_examples {
        for (name, _) in bundled_examples() {
            let _ = writeln!(stdout, "{name}");
        }
        return 0;
    }
    let (report, code) = match execute(&args, stdin) {
        Ok(r) => (r, 0),
        Err((command, e)) => {
            let _ = writeln!(stderr, "error: {e}");
            let r = json!({
                "command": command,
                "status": "error",
                "error": { "kind": e.kind(), "message": e.to_string() },
            });
            (r, e.exit_code())
        }
    };
    let text = match args.format {
        Format::Json => json::to_text(&report) + "\n",
        Format::Table => table::render(&report),
    };
    let _ = stdout.write_all(text.as_bytes());
    code
}

fn execute(args: &Args, stdin: &mut dyn Read) -> Result<Value, (Option<String>, CliError)> {
    let spec = load(args, stdin).map_err(|e| (args.command.clone(), e))?;
    let command = args.command.clone().or_else(|| spec.command.clone());
    let fail = |e: CliError| (command.clone(), e);
    let name = command.clone().ok_or_else(|| fail(CliError::schema("no command given")))?;
    if let (Some(a), Some(b)) = (&args.command, &spec.command) {
        if a != b {
            return Err(fail(CliError::schema(format!("command {a:?} does not match problem command {b:?}"))));
        }
    }
    let settings = Settings {
        truncate: args.truncate.or(spec.truncate).unwrap_or(DEFAULT_TRUNCATION),
        k: args.k.or(spec.k).unwrap_or(1),
        mode: args.mode.clone().or_else(|| spec.mode.clone()).unwrap_or_else(|| "all".into()),
        p_max: args.p_max.or(spec.p_max).unwrap_or(4),
        weight_max: args.weight_max.or(spec.weight_max).unwrap_or(6),
        order: args.order.or(spec.order).unwrap_or(4),
    };
    let (result, identities) = commands::dispatch(&name, &spec, &settings).map_err(fail)?;
    Ok(json!({
        "command": name,
        "status": "ok",
        "settings": {
            "truncate": settings.truncate,
            "k": settings.k,
            "mode": settings.mode,
            "p_max": settings.p_max,
            "weight_max": settings.weight_max,
            "order": settings.order,
        },
        "identities": identities,
        "result": result,
    }))
}

fn load(args: &Args, stdin: &mut dyn Read) -> Result<ProblemSpec, CliError> {
    if let Some(name) = &args.example {
        return examples::bundled(name);
    }
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::schema(format!("{path}: {e}")))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| CliError::schema(e.to_string()))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| CliError::schema(e.to_string()))
}
