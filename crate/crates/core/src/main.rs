fn main() {
    std::process::exit(cyclopell::cli::main_with_args());
}
