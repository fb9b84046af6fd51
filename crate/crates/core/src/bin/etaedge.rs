fn main() { let args: Vec<String> = std::env::args().collect(); let (code, out) = etaedge::cli::execute(&args); print!("{out}"); std::process::exit(code); }
