use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hecke_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.job.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("{}", serde_json::json!({ "error": "USAGE", "message": e.to_string() }));
            return ExitCode::from(2);
        }
    }
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", out.render(cli.job.format)) {
                Ok(()) => ExitCode::from(out.exit),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(out.exit),
                Err(_) => ExitCode::FAILURE,
            }
        }
        Err(err) => {
            eprintln!("{}", serde_json::json!({ "error": err.code, "message": err.message }));
            ExitCode::from(err.exit)
        }
    }
}
