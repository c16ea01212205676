//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the library's linear algebra or tallies.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(value: i64) -> Q {
    Q::from_integer(BigInt::from(value))
}

pub fn qf(numer: i64, denom: i64) -> Q {
    Q::new(BigInt::from(numer), BigInt::from(denom))
}

/// All rankings of `1..=n` as words (best first), in lexicographic order.
pub fn rankings(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for c in 1..=n {
            if !prefix.contains(&c) {
                prefix.push(c);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, &mut out);
    out
}

pub fn position(word: &[usize], candidate: usize) -> usize {
    word.iter().position(|&c| c == candidate).unwrap()
}

/// Number of candidate pairs the two rankings order differently.
pub fn kendall(x: &[usize], y: &[usize]) -> usize {
    let n = x.len();
    let mut d = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            let in_x = position(x, a) < position(x, b);
            let in_y = position(y, a) < position(y, b);
            if in_x != in_y {
                d += 1;
            }
        }
    }
    d
}

/// Ordered pairs `(i, j)`, `i != j`, in lexicographic order.
pub fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

/// Pairs matrix: rows are ordered pairs, columns rankings, entry 1 when the
/// ranking puts `i` above `j`.
pub fn pairs_matrix(n: usize) -> Vec<Vec<Q>> {
    let words = rankings(n);
    ordered_pairs(n)
        .into_iter()
        .map(|(i, j)| {
            words
                .iter()
                .map(|w| q(i64::from(position(w, i) < position(w, j))))
                .collect()
        })
        .collect()
}

/// Kemeny matrix by counting agreeing pairs: `C(n,2) - d(x, y)`.
pub fn kemeny_matrix(n: usize) -> Vec<Vec<Q>> {
    let words = rankings(n);
    let pairs = (n * (n - 1) / 2) as i64;
    words
        .iter()
        .map(|x| {
            words
                .iter()
                .map(|y| q(pairs - kendall(x, y) as i64))
                .collect()
        })
        .collect()
}

/// Positional tally: candidate `c` gets `Σ f(x) w[position of c in x]`.
pub fn positional(w: &[Q], f: &[Q]) -> Vec<Q> {
    let n = w.len();
    let words = rankings(n);
    (1..=n)
        .map(|c| {
            words
                .iter()
                .zip(f)
                .map(|(x, fx)| fx * &w[position(x, c)])
                .sum()
        })
        .collect()
}

/// Positional matrix: rows candidates, columns rankings.
pub fn positional_matrix(w: &[Q]) -> Vec<Vec<Q>> {
    let n = w.len();
    let words = rankings(n);
    (1..=n)
        .map(|c| words.iter().map(|x| w[position(x, c)].clone()).collect())
        .collect()
}

pub fn borda_weights(n: usize) -> Vec<Q> {
    (0..n).map(|i| q((n - 1 - i) as i64)).collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, brow)| x * &brow[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Reduced row echelon form by plain Gauss-Jordan; returns the nonzero rows.
pub fn rref(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        let inv = Q::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let factor = other[col].clone();
                for (x, p) in other.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    m
}

pub fn rank(a: &[Vec<Q>]) -> usize {
    rref(a).len()
}

pub fn inverse(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let augmented: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| q(i64::from(i == j))));
            r
        })
        .collect();
    let reduced = rref(&augmented);
    assert_eq!(reduced.len(), n, "matrix is singular");
    reduced.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Orthogonal projection onto the row space of `a`: `Bᵗ (B Bᵗ)⁻¹ B` for a
/// row basis `B`.
pub fn row_space_projection(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let b = rref(a);
    let bt = transpose(&b);
    let gram_inverse = inverse(&mat_mul(&b, &bt));
    mat_mul(&mat_mul(&bt, &gram_inverse), &b)
}

pub fn dim_intersection(a: &[Vec<Q>], b: &[Vec<Q>]) -> usize {
    let mut both = a.to_vec();
    both.extend(b.iter().cloned());
    rank(a) + rank(b) - rank(&both)
}

/// Values indexed by coalition bitmask, entry 0 unused.
pub type GameValues = Vec<Q>;

/// Shapley value as the average marginal contribution over all orders of
/// arrival.
pub fn shapley_by_orders(n: usize, v: &GameValues) -> Vec<Q> {
    let orders = rankings(n);
    let mut totals = vec![Q::zero(); n];
    for order in &orders {
        let mut coalition = 0usize;
        for &p in order {
            let next = coalition | (1 << (p - 1));
            totals[p - 1] += &v[next] - &v[coalition];
            coalition = next;
        }
    }
    let count = q(orders.len() as i64);
    totals.into_iter().map(|t| t / &count).collect()
}

/// `φᵢ = Σ_{S∋i} m_{|S|} (v(S) - v(S∖i))`.
pub fn marginal_by_definition(m: &[Q], v: &GameValues) -> Vec<Q> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (1usize..(1 << n))
                .filter(|s| s & (1 << i) != 0)
                .map(|s| &m[s.count_ones() as usize - 1] * (&v[s] - &v[s & !(1 << i)]))
                .sum()
        })
        .collect()
}

pub fn random_small(rng: &mut ChaCha8Rng) -> Q {
    qf(rng.gen_range(-12..=12), rng.gen_range(1..=4))
}

pub fn random_game_values(rng: &mut ChaCha8Rng, n: usize) -> GameValues {
    let mut v = vec![Q::zero(); 1 << n];
    for value in v.iter_mut().skip(1) {
        *value = random_small(rng);
    }
    v
}

/// `C(n, k)` for small arguments.
pub fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// Dimension of the Specht module `S^(n-j, j)` by the hook length formula.
pub fn hook_dimension(n: u64, j: u64) -> u128 {
    let rows = [n - j, j];
    let mut hooks: u128 = 1;
    for (r, &len) in rows.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = rows[r + 1..].iter().filter(|&&l| l > c).count() as u64;
            hooks *= u128::from(arm + leg + 1);
        }
    }
    let n_fact: u128 = (1..=u128::from(n)).product();
    n_fact / hooks
}
