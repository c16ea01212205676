//! The pairs map, the Kemeny rule and Kendall distances.
//!
//! ```text
//! cargo run --example kemeny
//! ```

use tabloids::rational::int;
use tabloids::symcore::enumerate_tabloids;
use tabloids::voting;
use tabloids::{Composition, ModuleVector, Tabloid};

fn main() -> tabloids::Result<()> {
    let p = voting::pairs_map(3)?.materialize()?;
    println!("[P] (rows: ordered pairs, columns: rankings)");
    print_matrix(&p);
    let k = voting::kemeny_map(3)?.materialize()?;
    println!("\n[K] = [P]^t [P]");
    print_matrix(&k);
    assert_eq!(p.transpose().mul(&p)?, k);

    // 2·ABC + 2·CAB + 1·BCA
    let shape = Composition::full_ranking(3)?;
    let counts = [2, 0, 0, 1, 2, 0];
    let f = ModuleVector::from_values(&shape, counts.into_iter().map(int).collect())?;
    let result = voting::kemeny_apply(&f)?;
    let rankings = enumerate_tabloids(&shape)?;
    println!("\nKemeny scores:");
    for (x, score) in rankings.iter().zip(result.scores().to_values()) {
        let distance: usize = rankings
            .iter()
            .zip(f.to_values())
            .map(|(b, c)| {
                voting::kendall_tau(x, b).unwrap() * c.to_integer().try_into().unwrap_or(0usize)
            })
            .sum();
        println!(
            "  {}  score {score}  total Kendall distance {distance}",
            letters(x)
        );
    }
    let winners: Vec<String> = result.winner_tabloids()?.iter().map(letters).collect();
    println!("winners: {winners:?}");
    Ok(())
}

fn letters(x: &Tabloid) -> String {
    x.rows().map(|r| (b'A' + r[0] as u8 - 1) as char).collect()
}

fn print_matrix(m: &tabloids::linalg::RationalMatrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        println!("  {}", row.join(" "));
    }
}
