use std::io::Write;
use std::process::ExitCode;

use hecke_lab::LabError;

fn main() -> ExitCode {
    match hecke_lab::cli::run(std::env::args_os()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.text);
            if out.all_hold {
                ExitCode::SUCCESS
            } else {
                eprintln!("hecke-lab: some checks failed");
                ExitCode::from(1)
            }
        }
        Err(LabError::Cli(e)) => {
            let _ = e.print();
            ExitCode::from(e.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("hecke-lab: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
