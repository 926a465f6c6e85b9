fn main() {
    std::process::exit(commuting_ci::cli::run(std::env::args_os()));
}
