//! Building a profile with prescribed tallies under several procedures.
//!
//! ```text
//! cargo run --example construct_profile
//! ```

use tabloids::rational::int;
use tabloids::voting::{self, ConstructOptions, WeightingVector};
use tabloids::{Composition, ModuleVector};

fn main() -> tabloids::Result<()> {
    let n = 4;
    let ws = [
        WeightingVector::borda(n)?.hat(),
        WeightingVector::plurality(n)?.hat(),
    ];
    let candidates = Composition::candidates(n)?;
    // Borda ranks A > B > C > D, plurality ranks D > C > B > A
    let targets = [
        ModuleVector::from_values(&candidates, vec![int(3), int(1), int(-1), int(-3)])?,
        ModuleVector::from_values(&candidates, vec![int(-3), int(-1), int(1), int(3)])?,
    ];
    let built = voting::construct_profile(
        &ws,
        &targets,
        &ConstructOptions {
            integer_profile: true,
            max_shift: None,
        },
    )?;
    println!("solution space dimension {}", built.solution_dimension);
    let integer = built.integer_profile.expect("requested");
    let counts = voting::integer_counts(&integer.profile).expect("nonnegative integers");
    println!("voters per ranking: {counts:?}");
    println!("scale {}, shift {}", integer.scale, integer.shift);

    for (name, w) in [
        ("Borda", WeightingVector::borda(n)?),
        ("plurality", WeightingVector::plurality(n)?),
    ] {
        let tally = voting::positional_tally(&w, &integer.profile)?;
        let scores: Vec<String> = tally
            .scores()
            .to_values()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("{name:>9}: {scores:?}");
    }
    Ok(())
}
