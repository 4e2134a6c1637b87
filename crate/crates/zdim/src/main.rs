fn main() {
    std::process::exit(zdim::cli::run());
}
