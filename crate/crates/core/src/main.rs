fn main() {
    std::process::exit(opn_bounds::cli::run(std::env::args_os()));
}
