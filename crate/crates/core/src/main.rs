use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (out, code) = drinfeld::cli::run(std::env::args_os());
    let mut stream: Box<dyn Write> = if code == drinfeld::cli::EXIT_OK {
        Box::new(std::io::stdout())
    } else {
        Box::new(std::io::stderr())
    };
    let _ = stream.write_all(out.as_bytes());
    ExitCode::from(code as u8)
}
