fn main() {
    std::process::exit(prolatekit::cli::run(std::env::args_os()));
}
