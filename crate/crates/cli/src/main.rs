mod args;
mod commands;
mod family_file;

use clap::error::ErrorKind;
use clap::Parser;

/// Restore the default SIGPIPE disposition so writes into a closed pipe
/// (e.g. `mocs-forge enumerate ... | head`) terminate the process quietly
/// instead of panicking.
#[cfg(unix)]
fn install_sigpipe_default() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() {
    #[cfg(unix)]
    install_sigpipe_default();

    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successes, anything else is usage
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match commands::dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("mocs-forge: {}", err.message());
            err.exit_code()
        }
    };
    std::process::exit(code);
}
