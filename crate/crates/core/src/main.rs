fn main() {
    std::process::exit(gqd::cli::run(std::env::args_os()));
}
