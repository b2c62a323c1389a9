use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coring_duality::cli::{cmd_check, cmd_export, cmd_list, cmd_run, load_instance, Report};
use coring_duality::{Error, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "coring-duality", version, about = "Exact verification of duality theorems for finite Hopf algebras and corings")]
struct Cli {
    /// Ground field: q, or gf:p for a prime p
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Seed for randomized lift checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every axiom checker on an instance (catalog name or instance file)
    Check { instance: String },
    /// Run a theorem suite
    Run {
        #[arg(long, value_parser = ["T1", "T2", "T3", "T4", "T5", "ULB"])]
        suite: String,
        #[arg(long)]
        instance: String,
        /// Restrict T4/T5 to one relative Hopf module (A or A⊗H)
        #[arg(long)]
        module: Option<String>,
    },
    /// List catalog instances
    List {
        #[arg(long)]
        extended: bool,
    },
    /// Write a catalog instance in the instance file format
    Export {
        instance: String,
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
    },
}

fn input_error(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(3)
}

fn emit(report: &Report, format: Format) -> ExitCode {
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    let _ = std::io::stdout().write_all(text.as_bytes());
    ExitCode::from(report.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let field: FieldSpec = match cli.field.parse() {
        Ok(f) => f,
        Err(e) => return input_error(&e),
    };
    match cli.command {
        Command::Check { instance } => match load_instance(&instance, field) {
            Ok(inst) => emit(&cmd_check(&inst, cli.seed), cli.format),
            Err(e) => input_error(&e),
        },
        Command::Run { suite, instance, module } => {
            let inst = match load_instance(&instance, field) {
                Ok(i) => i,
                Err(e) => return input_error(&e),
            };
            match cmd_run(&inst, &suite, module.as_deref()) {
                Ok(r) => emit(&r, cli.format),
                Err(e) => input_error(&e),
            }
        }
        Command::List { extended } => {
            let list = match cmd_list(field, extended) {
                Ok(l) => l,
                Err(e) => return input_error(&e),
            };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&list).expect("list serializes")),
                Format::Text => {
                    for i in &list {
                        println!("{:<4} dim A = {:<2} dim H = {:<2} {}", i.name, i.dim_a, i.dim_h, i.description);
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Export { instance, output } => {
            let inst = match load_instance(&instance, field) {
                Ok(i) => i,
                Err(e) => return input_error(&e),
            };
            let text = cmd_export(&inst);
            match output {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        return input_error(&Error::Parse(format!("{}: {e}", p.display())));
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
    }
}
