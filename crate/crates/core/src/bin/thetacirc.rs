fn main() {
    std::process::exit(thetacirc::cli::run(std::env::args_os()));
}
