fn main() {
    std::process::exit(polydev::cli::run(std::env::args_os()));
}
