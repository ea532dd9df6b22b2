use clap::Parser;

fn main() {
    let parsed = cli::args::Cli::parse();
    let code = match cli::args::parse(parsed).and_then(|cfg| cli::run(&cfg)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    };
    std::process::exit(code);
}
