fn main() {
    std::process::exit(ore::cli::main());
}
