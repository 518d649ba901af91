//! Exact expected entries of a random product, checked by sampling.

use matgrowth::average::{
    average_growth_rate, empirical_mean_check, recurrence_spec, ExpectationSequence,
};
use matgrowth::report::PairSpec;

fn main() -> matgrowth::Result<()> {
    for name in ["a1b1", "a2b2", "a2bm2", "pollicott"] {
        let pair = PairSpec::named(name)?;
        println!(
            "{name:10} s_ave = {:.12}   {}",
            average_growth_rate(&pair.a, &pair.b),
            recurrence_spec(&pair.a, &pair.b)
        );
    }

    // Complex spectrum: the expectations oscillate in sign.
    let pair = PairSpec::named("a2bm2")?;
    let seq = ExpectationSequence::new(&pair.a, &pair.b, 8);
    let first: Vec<String> = seq.terms.iter().map(|m| m.a.to_string()).collect();
    println!("a2bm2 expected (1,1) entries: {}", first.join(" "));

    let pair = PairSpec::named("a2b2")?;
    let check = empirical_mean_check(&pair.a, &pair.b, 20, 10_000, 42)?;
    println!(
        "a2b2, n=20: expected {} sampled {:.1} ± {:.1}",
        check.expected, check.sample_mean, check.stderr
    );
    Ok(())
}
