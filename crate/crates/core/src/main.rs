fn main() {
    std::process::exit(lexmat::cli::run(std::env::args_os()));
}
