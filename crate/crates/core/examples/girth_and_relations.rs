//! Short relations modulo p, and exact relations over the rationals.

use matgrowth::fastest::SearchLimits;
use matgrowth::girth::{girth_bound, girth_report, verify_relation, BfsLimits};
use matgrowth::report::PairSpec;
use matgrowth::{Mat2, Word};

fn main() -> matgrowth::Result<()> {
    let pair = PairSpec::named("a2b2")?;
    for p in [2, 3, 5, 11, 101] {
        let r = girth_report(
            &pair.a,
            &pair.b,
            p,
            &BfsLimits::default(),
            &SearchLimits::default(),
        )?;
        let predicted = girth_bound(p, 1.0 + 2f64.sqrt())?;
        match r.collision {
            Some(c) => println!(
                "p={p:3}  {} = {} at depth {} (predicted {predicted}), max entry {}",
                c.word_u,
                c.word_v,
                c.depth,
                r.max_entry_at_depth.unwrap()
            ),
            None => println!("p={p:3}  no relation up to depth {}", r.depth_max),
        }
    }

    let c: Mat2 = "1,1;0,1".parse()?;
    let d: Mat2 = "1,0;-1,1".parse()?;
    let (u, v): (Word, Word) = ("ABA".parse()?, "BAB".parse()?);
    println!("CDC = DCD: {}", verify_relation(&u, &v, &c, &d));

    let a: Mat2 = "2,0;0,3".parse()?;
    let b: Mat2 = "3,5;0,5".parse()?;
    let u: Word = "AB^10A^2BA^2BA^10".parse()?;
    let v: Word = "B^2A^6B^2A^2BABABA^2B^2A^2BAB^2".parse()?;
    println!(
        "length-{} relation holds: {}",
        u.len(),
        verify_relation(&u, &v, &a, &b)
    );
    Ok(())
}
