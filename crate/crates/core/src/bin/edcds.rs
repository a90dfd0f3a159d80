fn main() {
    std::process::exit(edcds::cli::run());
}
