//! Kemeny eigenspaces W₀, W₁, W₂ and the family γ₀T₀ + γ₁T₁ + γ₂T₂.
//!
//! ```text
//! cargo run --example spectral_family
//! ```

use tabloids::rational::int;
use tabloids::specht::{self, kemeny_constants};
use tabloids::voting::{self, SpectralWeights};
use tabloids::{Composition, ModuleVector};

fn main() -> tabloids::Result<()> {
    for n in 3..=5 {
        let c = kemeny_constants(n);
        println!(
            "n = {n}: κ = ({}, {}, {}), β = ({}, {})",
            c.kappa0, c.kappa1, c.kappa2, c.beta0, c.beta1
        );
    }

    let shape = Composition::full_ranking(3)?;
    let f = ModuleVector::from_values(&shape, [2, 0, 0, 1, 2, 0].into_iter().map(int).collect())?;
    let parts = specht::spectral_components(&f)?;
    for (i, part) in parts.iter().enumerate() {
        let values: Vec<String> = part.to_values().iter().map(ToString::to_string).collect();
        println!("T{i}(f) = {values:?}");
    }

    let kemeny = voting::kemeny_apply(&f)?;
    let family = voting::family_apply(&SpectralWeights::kemeny(3), &f)?;
    assert_eq!(kemeny, family);
    println!("\nγ = κ reproduces the Kemeny rule");

    let borda = voting::family_apply(&SpectralWeights::borda(3), &f)?;
    println!(
        "γ = β gives the Borda ranking rule: winners {:?}",
        borda.winners()
    );
    let only_w2 = voting::family_apply(&SpectralWeights([int(0), int(0), int(1)]), &f)?;
    println!(
        "γ = (0, 0, 1) looks only at W₂: winners {:?}",
        only_w2.winners()
    );

    for (i, t) in specht::kemeny_eigenprojections(4)?.iter().enumerate() {
        println!("rank T{i} at n = 4: {}", t.materialize()?.rank());
    }
    Ok(())
}
