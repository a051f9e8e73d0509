use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = qhfol_cli::run_command(std::env::args().skip(1));
    if let Some(report) = &outcome.report {
        let text = serde_json::to_string_pretty(report).expect("report serializes");
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    }
    if !outcome.summary.is_empty() {
        let _ = writeln!(std::io::stderr().lock(), "{}", outcome.summary.trim_end());
    }
    ExitCode::from(outcome.code as u8)
}
