fn main() {
    edge_hosoya::cli::main()
}
