//! `wellbuilt`: certification runs, angle tables, and construction traces
//! for exact regular-simplex geometry.
//!
//! Exit codes: 0 all checks pass, 1 at least one check failed (or I/O
//! failure), 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wellbuilt_core::{
    angle_table, build_construction, induction_sweep_with, render_report_text, render_scene_text,
    render_table_csv, render_table_text, scene_svg, Injection, ReportDocument,
};

#[derive(Parser)]
#[command(
    name = "wellbuilt",
    version,
    about = "Exact certification of regular-simplex geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the certification sweep and emit a report
    Verify {
        /// Largest dimension to certify
        #[arg(long, default_value_t = 64)]
        max_dim: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Perturb one scene point before checking, as POINT:COORD:DELTA
        #[arg(long)]
        inject: Option<Injection>,
    },
    /// Print the dihedral and central angle table
    Table {
        /// First dimension (inclusive)
        #[arg(long)]
        from: usize,
        /// Last dimension (inclusive)
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Dump the construction scene, optionally rendering its plane as SVG
    Trace {
        /// Base dimension of the construction
        #[arg(long)]
        dim: usize,
        /// Write the cross-section figure to this path
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

const PASS: u8 = 0;
const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(USAGE)
}

/// Writes to stdout. A pipe closed downstream (`wellbuilt trace | head`) is
/// not a failure; only real I/O errors report false.
fn emit(text: &str) -> bool {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => true,
        Err(e) if e.kind() == ErrorKind::BrokenPipe => true,
        Err(e) => {
            eprintln!("error: cannot write to stdout: {e}");
            false
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify {
            max_dim,
            format,
            inject,
        } => verify(max_dim, format, inject),
        Command::Table { from, to, format } => table(from, to, format),
        Command::Trace { dim, svg } => trace(dim, svg),
    }
}

fn verify(max_dim: usize, format: ReportFormat, inject: Option<Injection>) -> ExitCode {
    if max_dim < 2 {
        return usage_error(&format!(
            "the number of dimensions must be at least 2 (got {max_dim})"
        ));
    }
    let report = match induction_sweep_with(max_dim, inject.as_ref()) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(CHECK_FAILED);
        }
    };
    let rendered = match format {
        ReportFormat::Json => ReportDocument::from_report(&report).to_json(),
        ReportFormat::Text => render_report_text(&report),
    };
    if !emit(&rendered) {
        return ExitCode::from(CHECK_FAILED);
    }
    if report.overall() {
        ExitCode::from(PASS)
    } else {
        ExitCode::from(CHECK_FAILED)
    }
}

fn table(from: usize, to: usize, format: TableFormat) -> ExitCode {
    if from < 2 {
        return usage_error(&format!(
            "the number of dimensions must be at least 2 (got {from})"
        ));
    }
    if from > to {
        return usage_error(&format!("--from {from} exceeds --to {to}"));
    }
    let rows = match angle_table(from, to) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(CHECK_FAILED);
        }
    };
    let rendered = match format {
        TableFormat::Csv => render_table_csv(&rows),
        TableFormat::Text => render_table_text(&rows),
    };
    if !emit(&rendered) {
        return ExitCode::from(CHECK_FAILED);
    }
    ExitCode::from(PASS)
}

fn trace(dim: usize, svg: Option<PathBuf>) -> ExitCode {
    if dim < 2 {
        return usage_error(&format!(
            "the number of dimensions must be at least 2 (got {dim})"
        ));
    }
    let scene = match build_construction(dim) {
        Ok(scene) => scene,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(CHECK_FAILED);
        }
    };
    if !emit(&render_scene_text(&scene)) {
        return ExitCode::from(CHECK_FAILED);
    }
    if let Some(path) = svg {
        if let Err(e) = std::fs::write(&path, scene_svg(&scene)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(CHECK_FAILED);
        }
        if !emit(&format!("figure written to {}\n", path.display())) {
            return ExitCode::from(CHECK_FAILED);
        }
    }
    ExitCode::from(PASS)
}
