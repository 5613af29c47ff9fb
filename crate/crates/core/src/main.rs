fn main() {
    let code = typeii24::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
