fn main() {
    std::process::exit(circan::run(std::env::args_os()));
}
