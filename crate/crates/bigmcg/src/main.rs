fn main() {
    std::process::exit(bigmcg::cli::run(std::env::args_os()));
}
