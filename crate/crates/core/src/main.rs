use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, out) = rnmatrix::cli::run(&args);
    let _ = std::io::stdout().write_all(out.as_bytes());
    std::process::exit(code);
}
