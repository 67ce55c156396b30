fn main() {
    std::process::exit(tubecat::cli::main_with_args(std::env::args_os()));
}
