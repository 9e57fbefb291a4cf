fn main() {
    std::process::exit(taucong::cli::run(std::env::args_os()));
}
