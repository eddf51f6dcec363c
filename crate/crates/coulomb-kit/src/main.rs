//! Thin batch front end over the library; see the crate docs and README.

use clap::{Parser, Subcommand};
use coulomb_kit::cli::{
    cmd_anomaly, cmd_hilbert, cmd_kostant_verify, cmd_rep_info, render_text, CommandOutput,
    HilbertFlags,
};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "coulomb-kit", version, about = "Anomaly checks, monopole-formula Hilbert series, and moment-map property suites over exact rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, weights, symplectic diagnostics and decompositions of a rep spec.
    RepInfo {
        /// JSON spec file.
        file: String,
        /// Emit the machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Trace form and anomaly-cancellation verdict (exit 0 pass, 1 fail).
    Anomaly {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Monopole-formula Hilbert series; rank-1 theories are cross-checked
    /// against their three-generator presentation.
    Hilbert {
        file: String,
        /// Completeness order of the series.
        #[arg(long, default_value_t = 20)]
        order: i64,
        #[arg(long)]
        json: bool,
        /// Worker threads for the coweight sum (output is identical for any value).
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Seeded exact property suite for the moment-map constructions.
    KostantVerify {
        /// Half the symplectic dimension (1 or 2).
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[allow(clippy::result_large_err)]
fn read_spec(path: &str) -> Result<String, CommandOutput> {
    std::fs::read_to_string(path).map_err(|e| {
        let mut report = coulomb_kit::cli::Report::new("read", serde_json::Value::Null);
        report.status = "invalid-input".to_string();
        report.results = serde_json::json!({ "error": format!("cannot read {path}: {e}") });
        CommandOutput {
            report,
            exit: coulomb_kit::cli::exit::INVALID_INPUT,
        }
    })
}

fn shell_cap_from_env() -> Option<i64> {
    std::env::var("COULOMB_KIT_SHELL_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output, json) = match cli.command {
        Command::RepInfo { file, json } => match read_spec(&file) {
            Ok(text) => (cmd_rep_info(&text), json),
            Err(out) => (out, json),
        },
        Command::Anomaly { file, json } => match read_spec(&file) {
            Ok(text) => (cmd_anomaly(&text), json),
            Err(out) => (out, json),
        },
        Command::Hilbert {
            file,
            order,
            json,
            threads,
        } => match read_spec(&file) {
            Ok(text) => {
                let flags = HilbertFlags {
                    order,
                    threads,
                    shell_cap: shell_cap_from_env(),
                };
                (cmd_hilbert(&text, &flags), json)
            }
            Err(out) => (out, json),
        },
        Command::KostantVerify {
            n,
            samples,
            seed,
            json,
        } => (cmd_kostant_verify(n, samples, seed), json),
    };
    let text = if json {
        output.report.to_json()
    } else {
        render_text(&output)
    };
    // Tolerate closed pipes (e.g. `coulomb-kit … | head`).
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
    ExitCode::from(output.exit as u8)
}
