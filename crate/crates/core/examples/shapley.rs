//! Linear symmetric solution concepts: Shapley value, marginal values,
//! efficiency and self-duality.
//!
//! ```text
//! cargo run --example shapley
//! ```

use tabloids::coopgame::{self, Game, MarginalWeights, SolutionConcept};
use tabloids::rational::int;

fn main() -> tabloids::Result<()> {
    // player 1 owns a left glove, players 2 and 3 right gloves
    let glove = Game::from_fn(3, |s| int(i64::from(s & 1 != 0 && s & 6 != 0)))?;
    let shapley = coopgame::shapley_coefficients(3)?;
    let payoffs: Vec<String> = shapley
        .payoffs(&glove)?
        .to_values()
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("Shapley on the glove game: {payoffs:?}");

    let m = coopgame::shapley_weights(3)?;
    println!(
        "as a marginal value, m = {:?}",
        m.weights()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    assert_eq!(coopgame::marginal_to_coefficients(&m), shapley);

    for (name, weights) in [
        ("Shapley", m.clone()),
        (
            "first arrival",
            MarginalWeights::new(vec![int(1), int(0), int(0)])?,
        ),
        (
            "Banzhaf-like",
            MarginalWeights::new(vec![int(1), int(1), int(1)])?,
        ),
    ] {
        let c = coopgame::marginal_to_coefficients(&weights);
        println!(
            "{name:>13}: c0 = {:?}, c1 = {:?}, efficient {}, self-dual {}",
            c.c0().iter().map(ToString::to_string).collect::<Vec<_>>(),
            c.c1().iter().map(ToString::to_string).collect::<Vec<_>>(),
            coopgame::efficiency_check(&c),
            coopgame::self_dual_check(&weights)?
        );
    }

    let v = Game::from_values(2, vec![int(1), int(3), int(6)])?;
    let dual = coopgame::dual_game(&v);
    println!(
        "\n*v for v = (1, 3, 6): {:?}",
        dual.nonempty_values()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}
