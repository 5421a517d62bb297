fn main() {
    std::process::exit(bottforge::cli::run(std::env::args_os()));
}
