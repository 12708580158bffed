fn main() {
    std::process::exit(sombor_cacti::cli::main_with_std());
}
