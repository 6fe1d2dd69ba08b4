use clap::error::ErrorKind;
use clap::Parser;

use brace_cli::report::Payload;
use brace_cli::{exit_code_for_error, install_thread_pool, render, run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    install_thread_pool(cli.threads);
    match run(&cli) {
        Ok(report) => {
            print!("{}", render(&report, cli.format));
            if let Payload::Verify(v) = &report.payload {
                if !v.passed {
                    std::process::exit(4);
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code_for_error(&e));
        }
    }
}
