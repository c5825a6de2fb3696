fn main() {
    std::process::exit(immaculate::cli::main());
}
