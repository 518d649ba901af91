//! Maximizing words that repeat with a fixed period.

use matgrowth::fastest::{candidate_set_rate, jsr_lower_bound, periodicity_probe, SearchLimits};
use matgrowth::report::PairSpec;
use matgrowth::spectral_radius;

fn main() -> matgrowth::Result<()> {
    let limits = SearchLimits::default();

    let pair = PairSpec::named("a2bm2")?;
    let probe = periodicity_probe(&pair.a, &pair.b, 12, &limits)?;
    for row in &probe.rows {
        println!(
            "n={:2}  max {:>6}  e.g. {}",
            row.length, row.max_value, row.least_witness
        );
    }
    if let Some(p) = &probe.period {
        let v = matgrowth::eval_word(&p.word, &pair.a, &pair.b);
        let rate = spectral_radius(&v).powf(1.0 / p.period as f64);
        println!("period {} with v = {}, rate {rate:.9}", p.period, p.word);
    }

    let binary = PairSpec::named("binary24")?;
    let (rate, witness) = jsr_lower_bound(&binary.a, &binary.b, 8, &limits)?;
    println!(
        "binary pair: rate {rate:.9} from {}",
        witness.to_compressed()
    );
    let candidate = candidate_set_rate(&binary.a, &binary.b);
    println!(
        "best short candidate: {} at {:.9}",
        candidate.word, candidate.rate
    );
    Ok(())
}
