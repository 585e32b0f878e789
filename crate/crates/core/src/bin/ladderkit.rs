fn main() {
    std::process::exit(ladderkit::cli::run(std::env::args_os()));
}
