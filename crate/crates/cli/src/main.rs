use std::io::Write;

fn main() {
    let argv: Vec<std::ffi::OsString> = std::env::args_os().collect();
    let to_file = argv.iter().any(|a| a == "--out");
    let outcome = skewbrace_cli::run(argv);
    if !to_file || outcome.code != 0 {
        let mut stdout = std::io::stdout().lock();
        let _ = writeln!(stdout, "{}", outcome.output);
    }
    std::process::exit(outcome.code);
}
