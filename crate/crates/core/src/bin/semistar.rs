fn main() {
    std::process::exit(semistar::cli::main());
}
