use clap::Parser;

fn main() {
    let cli = skein::cli::Cli::parse();
    std::process::exit(skein::cli::run(cli));
}
