fn main() {
    std::process::exit(rfdb::cli::main());
}
