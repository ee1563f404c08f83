use std::io::Write;

use clap::Parser;
use monring::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli, &mut std::io::stdin().lock());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.output.as_bytes());
    let _ = stdout.flush();
    std::process::exit(outcome.exit_code);
}
