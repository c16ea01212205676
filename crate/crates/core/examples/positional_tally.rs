//! Positional voting: weighting vectors, tallies and ordinal outcomes.
//!
//! ```text
//! cargo run --example positional_tally
//! ```

use tabloids::rational::{frac, int};
use tabloids::voting::{self, WeightingVector};
use tabloids::{Composition, ModuleVector};

fn main() -> tabloids::Result<()> {
    // voters per ranking ABC, ACB, BAC, BCA, CAB, CBA
    let profile = ModuleVector::from_values(
        &Composition::full_ranking(3)?,
        [3, 2, 4, 2, 0, 3].into_iter().map(int).collect(),
    )?;

    for s in [int(0), frac(1, 2), int(1)] {
        let w = WeightingVector::new(vec![int(1), s.clone(), int(0)])?;
        let tally = voting::positional_tally(&w, &profile)?;
        let scores: Vec<String> = tally
            .scores()
            .to_values()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!(
            "w = (1, {s}, 0): scores {scores:?}, winners {:?}",
            candidates(tally.winners())
        );
    }

    let borda = WeightingVector::borda(3)?;
    let plurality = WeightingVector::plurality(3)?;
    println!(
        "\nBorda hat: {:?}",
        borda
            .hat()
            .weights()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!(
        "Borda ~ 3·Borda + 5: {}",
        voting::weighting_equivalent(
            &borda,
            &WeightingVector::new(vec![int(11), int(8), int(5)])?
        )
    );

    // a profile on which Borda and plurality order the candidates differently
    if let Some(f) = voting::disagreement_profile(&borda, &plurality)? {
        let counts = voting::integer_counts(&f).expect("integer profile");
        let b = voting::positional_tally(&borda, &f)?;
        let p = voting::positional_tally(&plurality, &f)?;
        println!("\nprofile {counts:?}");
        println!("  Borda tiers     {:?}", tiers(b.tiers()));
        println!("  plurality tiers {:?}", tiers(p.tiers()));
    }

    // partial rankings: ballots on (2,1) tabloids, one weight per row
    let partial =
        ModuleVector::from_values(&Composition::new(vec![2, 1])?, vec![int(4), int(0), int(1)])?;
    let w = WeightingVector::new(vec![int(1), int(0)])?;
    let tally = voting::positional_tally(&w, &partial)?;
    println!(
        "\npartial-ranking tally {:?}",
        tally
            .scores()
            .to_values()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}

fn candidates(ranks: &[usize]) -> Vec<char> {
    ranks.iter().map(|&r| (b'A' + r as u8) as char).collect()
}

fn tiers(tiers: &[Vec<usize>]) -> Vec<Vec<char>> {
    tiers.iter().map(|t| candidates(t)).collect()
}
