fn main() -> std::process::ExitCode {
    scheme_forge::cli::main()
}
