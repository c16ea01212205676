//! Effective spaces: the part of a profile a procedure actually uses.
//!
//! ```text
//! cargo run --example effective_spaces
//! ```

use tabloids::rational::int;
use tabloids::specht::{self, Ambient, IsotypicLabel};
use tabloids::voting::{self, WeightingVector};
use tabloids::Composition;

fn main() -> tabloids::Result<()> {
    for n in 3..=4 {
        let shape = Composition::full_ranking(n)?;
        let space =
            |w: &WeightingVector| specht::effective_space(&voting::positional_map(w, &shape)?);
        let borda = WeightingVector::borda(n)?;
        let plurality = WeightingVector::plurality(n)?;
        let eb = space(&borda.hat())?;
        let ep = space(&plurality.hat())?;
        println!("n = {n}");
        println!(
            "  dim E(Borda hat) = {}, dim E(plurality hat) = {}",
            eb.len(),
            ep.len()
        );
        println!(
            "  they meet only in 0: {}",
            specht::subspaces_intersect_trivially(&eb, &ep)
        );
        let shifted = WeightingVector::new(
            borda
                .weights()
                .iter()
                .map(|w| int(3) * w + int(5))
                .collect(),
        )?;
        println!(
            "  E(w) = E(3w + 5): {}",
            specht::subspaces_equal(&space(&borda)?, &space(&shifted)?)
        );
        let pairs = specht::effective_space(&voting::pairs_map(n)?)?;
        println!("  dim E(P) = {}", pairs.len());
        let w1 = IsotypicLabel::two_row(n, 1, Ambient::FullRankings)?;
        let w2 = IsotypicLabel::hook(n, Ambient::FullRankings)?;
        println!(
            "  1 + dim {w1} + dim {w2} = 1 + {} + {} = dim E(P)",
            w1.dimension(),
            w2.dimension()
        );
    }
    Ok(())
}
