fn main() {
    std::process::exit(oa_kit::cli::run(std::env::args_os().skip(1)));
}
