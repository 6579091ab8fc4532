fn main() {
    std::process::exit(triscroll::cli::main_with_args(std::env::args_os()));
}
