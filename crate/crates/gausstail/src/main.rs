fn main() {
    std::process::exit(gausstail::cli::run());
}
