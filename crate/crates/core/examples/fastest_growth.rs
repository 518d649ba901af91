//! Fastest growth of the shear pairs, and the alternation check.

use matgrowth::fastest::{
    jsr_estimate, max_entry_over_length, verify_alternation_optimality, SearchLimits,
};
use matgrowth::report::PairSpec;
use matgrowth::Rational;

fn main() -> matgrowth::Result<()> {
    let limits = SearchLimits::default();
    for name in ["a1b1", "a2b2", "pollicott"] {
        let pair = PairSpec::named(name)?;
        let est = jsr_estimate(&pair.a, &pair.b, 10, &limits)?;
        println!(
            "{name:10} {:.6} <= s_max <= {:.6}  witness {}",
            est.lower,
            est.upper,
            est.lower_witness.to_compressed()
        );
    }

    let pair = PairSpec::named("a2b2")?;
    let rec = max_entry_over_length(&pair.a, &pair.b, 8, &limits)?;
    let words: Vec<String> = rec.witnesses.iter().map(ToString::to_string).collect();
    println!(
        "length 8: max entry {} at {}",
        rec.max_value,
        words.join(", ")
    );

    let k = Rational::new(5.into(), 2.into());
    let m = Rational::from_integer(2.into());
    let report = verify_alternation_optimality(&k, &m, 12, false, &limits)?;
    println!(
        "alternating words maximal for k=5/2, m=2 up to n=12: {}",
        report.verified
    );
    Ok(())
}
