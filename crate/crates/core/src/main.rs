fn main() {
    std::process::exit(outer_dirac::cli::main_with_args(std::env::args_os()));
}
