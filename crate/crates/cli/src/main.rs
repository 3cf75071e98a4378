use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = twisted_dirac_cli::run(std::env::args_os().skip(1));
    if code == twisted_dirac_cli::EXIT_OK {
        print!("{text}");
        let _ = std::io::stdout().flush();
    } else {
        eprint!("{text}");
        if !text.ends_with('\n') {
            eprintln!();
        }
    }
    ExitCode::from(code as u8)
}
