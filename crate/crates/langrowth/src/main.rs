fn main() {
    std::process::exit(langrowth::cli::run(std::env::args_os()));
}
