use std::io::Write;
use std::process::ExitCode;

use qhecke_cli::{run, EXIT_VALIDATION, THREADS_ENV};

fn main() -> ExitCode {
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let threads = match raw.trim().parse::<usize>() {
            Ok(t) if t > 0 => t,
            _ => {
                eprintln!("error: {THREADS_ENV} must be a positive integer, got '{raw}'");
                return ExitCode::from(EXIT_VALIDATION as u8);
            }
        };
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot start {threads} workers: {e}");
            return ExitCode::from(EXIT_VALIDATION as u8);
        }
    }

    let out = run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
