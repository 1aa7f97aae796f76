use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use coring_lab::examples::INSTANCE_IDS;
use coring_lab::report::{self, InstanceParams};
use coring_lab::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "coring-lab", version, about = "Exact checks for corings, comatrix corings and their Galois correspondence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for independent instances (0 = one per core)
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    /// Write the report here instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone, Default)]
struct InstanceArgs {
    /// Rank of Σ (aomega: n >= 2, appendix cases: n >= 1)
    #[arg(long)]
    n: Option<usize>,
    /// Ground field preset: Q, Qi, Qw3, Qw4
    #[arg(long)]
    field: Option<String>,
    /// Primitive n-th root of unity, as "p/q" or comma separated coordinates
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
}

impl InstanceArgs {
    fn params(&self) -> InstanceParams {
        InstanceParams {
            n: self.n,
            field: self.field.clone(),
            omega: self.omega.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }

    fn has_aomega_only_flags(&self) -> bool {
        self.field.is_some() || self.omega.is_some() || self.alpha.is_some() || self.beta.is_some()
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build built-in instances and run every applicable check
    Demo {
        /// Instance ids, or "all"
        #[arg(required = true)]
        instances: Vec<String>,
        #[command(flatten)]
        args: InstanceArgs,
    },
    /// Run both correspondence roundtrips on every listed intermediate ring
    Correspondence {
        /// Built-in instance (aomega)
        instance: Option<String>,
        /// User instance in the coring-lab/1 input format
        #[arg(long, conflicts_with = "instance")]
        input: Option<PathBuf>,
        #[command(flatten)]
        args: InstanceArgs,
    },
    /// Classify simple cosemisimple corings for the base pair Q(i)/Q
    Classify {
        #[arg(long, default_value = "QiQ")]
        base_pair: String,
        #[arg(long)]
        n: usize,
    },
    /// Validate a user instance and run all checks on it
    Check {
        input: PathBuf,
    },
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Demo { .. } => "demo",
        Command::Correspondence { .. } => "correspondence",
        Command::Classify { .. } => "classify",
        Command::Check { .. } => "check",
    }
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Schema { pointer: String::new(), message: format!("invalid JSON: {e}") })
}

fn run(command: &Command) -> Result<Value> {
    match command {
        Command::Demo { instances, args } => {
            let ids: Vec<String> = if instances.iter().any(|s| s == "all") {
                INSTANCE_IDS.iter().map(|s| s.to_string()).collect()
            } else {
                instances.clone()
            };
            for id in &ids {
                report::validate_instance(id)?;
            }
            if args.has_aomega_only_flags() && ids.iter().any(|id| id != "aomega") {
                return Err(Error::Unsupported("--field, --omega, --alpha and --beta apply to aomega only".into()));
            }
            report::demo(&ids, &args.params())
        }
        Command::Correspondence { instance, input, args } => match (instance.as_deref(), input) {
            (_, Some(path)) => report::correspondence_input(&read_json(path)?),
            (Some("aomega") | None, None) => report::correspondence_aomega(&args.params()),
            (Some(id), None) => {
                report::validate_instance(id)?;
                Err(Error::Unsupported(format!("correspondence runs on aomega or --input, not {id}")))
            }
        },
        Command::Classify { base_pair, n } => {
            if base_pair != "QiQ" {
                return Err(Error::Unsupported(format!("base pair {base_pair} (only QiQ is available)")));
            }
            report::classify(*n)
        }
        Command::Check { input } => report::check_input(&read_json(input)?),
    }
}

fn emit(report: &Value, format: Format, output: Option<&PathBuf>) -> std::io::Result<()> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => report::render_text(report),
    };
    match output {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let name = command_name(&cli.command);
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(|| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
        pool.install(|| run(&cli.command))
    });
    let (report, code) = match outcome {
        Ok(Ok(r)) => {
            let code = if report::passed(&r) { 0 } else { 2 };
            (r, code)
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            (report::error_report(name, &e), if e.is_usage() { 1 } else { 2 })
        }
        Err(_) => {
            let e = Error::Unsupported("internal error".into());
            eprintln!("error: internal error");
            (report::error_report(name, &e), 1)
        }
    };
    if let Err(e) = emit(&report, cli.format, cli.output.as_ref()) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
