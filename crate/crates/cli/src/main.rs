use clap::Parser;

use morita_lab::commands::{execute, thread_cap, Cli, Failure};

fn main() {
    let cli = Cli::parse();
    let outcome = thread_cap().and_then(|cap| {
        if let Some(n) = cap {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| Failure::Internal(e.to_string()))?;
        }
        std::panic::catch_unwind(|| execute(&cli)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(Failure::Internal(format!("internal error: {msg}")))
        })
    });
    match outcome {
        Ok(text) => print!("{text}"),
        Err(f) => {
            match f {
                Failure::Fail(_) => print!("{}", f.message()),
                _ => eprintln!("error: {}", f.message().trim_end()),
            }
            std::process::exit(f.code());
        }
    }
}
