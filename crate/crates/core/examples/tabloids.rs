//! Tabloids, their lexicographic ranks and the symmetric-group action.
//!
//! ```text
//! cargo run --example tabloids
//! ```

use tabloids::symcore::enumerate_tabloids;
use tabloids::{Composition, ModuleVector, Permutation, Tabloid};

fn main() -> tabloids::Result<()> {
    let shape = Composition::new(vec![2, 1])?;
    println!("tabloids of shape {shape}:");
    for x in enumerate_tabloids(&shape)? {
        println!("  rank {}  {x}", x.lex_rank());
    }

    let shape = Composition::new(vec![2, 3, 1, 3])?;
    let x = Tabloid::new(
        shape.clone(),
        vec![vec![2, 6], vec![1, 3, 5], vec![8], vec![4, 7, 9]],
    )?;
    println!(
        "\n{x} has rank {} of {}",
        x.lex_rank(),
        shape.tabloid_count()?
    );
    assert_eq!(Tabloid::unrank(&shape, x.lex_rank())?, x);

    // (σ·x) moves every label i to σ(i)
    let sigma = Permutation::new(vec![2, 3, 1, 4, 5, 6, 7, 8, 9])?;
    println!("σ = {:?} sends it to {}", sigma.images(), x.act(&sigma)?);

    // vectors on the module M^(1,1,1) of full rankings
    let rankings = Composition::full_ranking(3)?;
    let e = ModuleVector::indicator(&Tabloid::from_ranking(&[1, 2, 3])?)?;
    let moved = e.act(&Permutation::transposition(3, 1, 3)?)?;
    let (rank, _) = moved.iter_nonzero().next().expect("one entry");
    println!(
        "\nswapping 1 and 3 moves the indicator of 1>2>3 to {}",
        Tabloid::unrank(&rankings, rank as u128)?
    );
    Ok(())
}
