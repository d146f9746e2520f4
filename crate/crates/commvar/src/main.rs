fn main() {
    std::process::exit(commvar::cli::run());
}
