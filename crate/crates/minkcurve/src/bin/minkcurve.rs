fn main() {
    std::process::exit(minkcurve::cli::run(std::env::args_os()));
}
