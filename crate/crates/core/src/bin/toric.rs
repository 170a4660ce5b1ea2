fn main() {
    std::process::exit(toric_additive::cli::main_with_args(std::env::args_os()));
}
