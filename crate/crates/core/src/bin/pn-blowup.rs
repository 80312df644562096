fn main() {
    let (code, out) = pn_blowup::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
