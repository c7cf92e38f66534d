use std::process::ExitCode;

fn main() -> ExitCode {
    // Worker-count hint only; results never depend on it.
    if let Some(n) = std::env::var("HYPERZETA_THREADS").ok().and_then(|v| v.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, report) = hyperzeta::cli::run(&args);
    if code == hyperzeta::cli::EXIT_USAGE {
        eprint!("{report}");
    } else {
        print!("{report}");
    }
    ExitCode::from(code as u8)
}
