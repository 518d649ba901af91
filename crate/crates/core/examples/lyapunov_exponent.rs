//! Generic growth by Monte Carlo, next to its upper bounds.

use matgrowth::lyapunov::{bounds_report, LyapunovConfig};
use matgrowth::report::PairSpec;

fn main() -> matgrowth::Result<()> {
    let config = LyapunovConfig {
        n: 200_000,
        trials: 8,
        ..LyapunovConfig::default()
    };
    for name in ["a1b1", "a2b2", "pollicott"] {
        let pair = PairSpec::named(name)?;
        let r = bounds_report(&pair.a, &pair.b, &config, false)?;
        print!(
            "{name:10} lambda = {:.4} ± {:.4}",
            r.lambda_mc, r.lambda_stderr
        );
        if let Some(b) = r.ave_bound {
            print!("   log s_ave = {b:.4}");
        }
        if let Some(b) = r.st_bound {
            print!("   shear bound = {b:.4}");
        }
        println!();
    }
    Ok(())
}
