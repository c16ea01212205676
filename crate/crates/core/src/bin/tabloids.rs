fn main() {
    std::process::exit(tabloids::cli::run(std::env::args_os()));
}
