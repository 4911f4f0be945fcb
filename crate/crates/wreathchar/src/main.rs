use std::io;

fn main() {
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let code = wreathchar::cli::run(std::env::args_os(), &mut stdout, &mut stderr);
    std::process::exit(code);
}
