use clap::Parser;
use knotted_cli::{run, Cli};
use knotted_core::Error;

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e @ Error::OracleInfeasible { .. }) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
