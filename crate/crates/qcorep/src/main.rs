fn main() {
    std::process::exit(qcorep::cli::run(std::env::args_os()));
}
