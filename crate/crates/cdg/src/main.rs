fn main() {
    std::process::exit(cdg::cli::run());
}
