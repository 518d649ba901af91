//! Fastest, average and generic growth for the built-in pairs.

use matgrowth::lyapunov::LyapunovConfig;
use matgrowth::report::{emit_report, run_summary, OutputFormat, PairSpec, SummaryConfig};

fn main() -> matgrowth::Result<()> {
    let pairs = ["a1b1", "a2b2", "a2bm2", "pollicott"]
        .into_iter()
        .map(PairSpec::named)
        .collect::<matgrowth::Result<Vec<_>>>()?;
    let config = SummaryConfig {
        mc: LyapunovConfig {
            n: 100_000,
            trials: 8,
            ..LyapunovConfig::default()
        },
        search_depth: 10,
        ..SummaryConfig::default()
    };
    let mut reports = Vec::new();
    for row in run_summary(&pairs, &config) {
        match row.outcome {
            Ok(r) => reports.push(r),
            Err(e) => eprintln!("{}: {e}", row.pair),
        }
    }
    emit_report(&reports, OutputFormat::Csv, None)
}
