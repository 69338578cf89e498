use clap::Parser;

use syzygy_cli::commands::{run, thread_count, Cli};

fn main() {
    let cli = Cli::parse();
    let threads = match thread_count(std::env::var("SYZYGY_THREADS").ok().as_deref()) {
        Ok(n) => n,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().expect("thread pool is built once");
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
