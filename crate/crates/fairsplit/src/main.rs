fn main() {
    std::process::exit(fairsplit::cli::run());
}
