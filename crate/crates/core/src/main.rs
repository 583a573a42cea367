fn main() {
    std::process::exit(homrel::cli::run(std::env::args_os()));
}
