use std::io::Write;
use std::process::ExitCode;

use synchrony_lab::cli::{run, Env};

fn main() -> ExitCode {
    let result = Env::from_process().and_then(|env| {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        run(std::env::args_os(), &env, &mut lock)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "{}", e.diagnostic());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
