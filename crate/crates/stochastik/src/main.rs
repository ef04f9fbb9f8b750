fn main() {
    std::process::exit(stochastik::cli::main());
}
