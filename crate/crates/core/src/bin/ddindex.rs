fn main() {
    std::process::exit(ddindex::cli::main_with_args(std::env::args_os()));
}
