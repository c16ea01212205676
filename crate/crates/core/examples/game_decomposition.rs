//! Splitting a game into the data solution concepts see and the common kernel
//! they all ignore.
//!
//! ```text
//! cargo run --example game_decomposition
//! ```

use tabloids::coopgame::{self, Game, SolutionCoefficients};
use tabloids::rational::{frac, int};

fn main() -> tabloids::Result<()> {
    let v = Game::from_fn(4, |s| {
        let size = s.count_ones() as i64;
        int(size * size) + int(i64::from(s & 0b0011 == 0b0011)) * int(5)
    })?;
    let levels = coopgame::decompose_game(&v)?;
    for level in &levels {
        println!(
            "k = {}: |U₀|² = {}, |U₁|² = {}, |kernel|² = {}",
            level.k,
            level.mean_part.norm_squared(),
            level.u1_part.norm_squared(),
            level.kernel_part.norm_squared()
        );
    }
    assert_eq!(coopgame::reassemble(4, &levels)?, v);

    let kernel = coopgame::kernel_game(4, &levels)?;
    let c = SolutionCoefficients::new(
        vec![int(1), frac(-2, 3), int(4), int(1)],
        vec![int(2), frac(1, 5), int(-3)],
    )?;
    let payoffs = coopgame::solution_apply(&c, &kernel)?;
    println!(
        "\nan arbitrary concept pays {:?} on the kernel part",
        payoffs
            .to_values()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    for k in 1..4 {
        println!("α_{k} = {}", coopgame::schur_constant(4, k)?);
    }
    Ok(())
}
