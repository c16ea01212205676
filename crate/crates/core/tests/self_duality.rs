//! Which marginal weights give a self-dual solution concept? Computed as the
//! null space of `m ↦ (φ_m(*u) − φ_m(u))` over the unanimity basis and
//! compared with the palindromic relation `m_j = m_{n+1-j}`.

mod common;

use common::*;
use num_traits::Zero;

use tabloids::coopgame::{self, Game, MarginalWeights};

fn duality_defect(n: usize, m: &[Q]) -> Vec<Q> {
    let weights = MarginalWeights::new(m.to_vec()).unwrap();
    let mut out = Vec::new();
    for u in Game::unanimity_basis(n).unwrap() {
        let dual = coopgame::marginal_apply(&weights, &coopgame::dual_game(&u)).unwrap();
        let plain = coopgame::marginal_apply(&weights, &u).unwrap();
        out.extend(dual.sub(&plain).unwrap().to_values());
    }
    out
}

fn unit(n: usize, j: usize) -> Vec<Q> {
    (0..n).map(|i| q(i64::from(i == j))).collect()
}

#[test]
fn self_dual_marginal_weights_are_palindromic() {
    for n in 3..=6 {
        let columns: Vec<Vec<Q>> = (0..n).map(|j| duality_defect(n, &unit(n, j))).collect();
        let null_dimension = n - rank(&columns);

        // basis of { m : m_j = m_{n+1-j} }
        let palindromes: Vec<Vec<Q>> = (0..n.div_ceil(2))
            .map(|j| {
                let mut m = unit(n, j);
                m[n - 1 - j] = q(1);
                m
            })
            .collect();
        assert_eq!(null_dimension, palindromes.len(), "n = {n}");
        for m in &palindromes {
            assert!(
                duality_defect(n, m).iter().all(Zero::is_zero),
                "n = {n}, m = {m:?}"
            );
        }
    }
}

#[test]
fn shapley_weights_are_palindromic_but_not_constant() {
    for n in 3..=6 {
        let m = coopgame::shapley_weights(n).unwrap();
        let w = m.weights();
        for j in 0..n {
            assert_eq!(w[j], w[n - 1 - j]);
        }
        // the relation m_j = m_{n-j-1} would force m_1 = m_{n-2}
        if n >= 4 {
            assert_ne!(w[0], w[n - 3]);
        }
        assert!(coopgame::self_dual_check(&m).unwrap());
    }
}
