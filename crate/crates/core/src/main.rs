fn main() {
    std::process::exit(bioct::cli::run(std::env::args_os()));
}
