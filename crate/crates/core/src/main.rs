fn main() {
    std::process::exit(hypercert::cli::run(std::env::args_os()));
}
