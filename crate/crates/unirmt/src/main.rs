fn main() {
    std::process::exit(unirmt::cli::run(std::env::args()));
}
