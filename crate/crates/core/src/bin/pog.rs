fn main() -> std::process::ExitCode {
    pog::cli::main()
}
