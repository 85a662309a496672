fn main() -> std::process::ExitCode {
    helberg::cli::run()
}
