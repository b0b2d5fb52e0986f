use std::io::Write;

fn main() {
    let outcome = schottky::cli::run(std::env::args_os());
    let mut out = std::io::stdout().lock();
    if !outcome.stdout.is_empty() {
        let _ = writeln!(out, "{}", outcome.stdout.trim_end());
    }
    let _ = out.flush();
    std::process::exit(outcome.code);
}
