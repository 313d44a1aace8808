use clap::Parser;

fn main() {
    let cli = ascheme::Cli::parse();
    match ascheme::run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_human());
            }
            std::process::exit(if report.passed() { 0 } else { 1 });
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
