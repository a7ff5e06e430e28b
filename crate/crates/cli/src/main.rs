use std::io::Write;

fn main() {
    let d = noether_cli::dispatch(std::env::args_os());
    print!("{}", d.stdout);
    eprint!("{}", d.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(d.code);
}
