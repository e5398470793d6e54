use std::io;

use wheelfan_cli::source::Standard;

fn main() {
    let code = wheelfan_cli::run(
        std::env::args_os(),
        &Standard,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
