fn main() {
    std::process::exit(aritylab::cli::main_with_args(std::env::args_os()));
}
