fn main() {
    std::process::exit(orelab::cli::main_with_args(std::env::args_os()));
}
