fn main() {
    std::process::exit(toplift::cli::run(std::env::args_os()));
}
