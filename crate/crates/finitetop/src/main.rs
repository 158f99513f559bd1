fn main() {
    if let Err(e) = finitetop::cli::run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
