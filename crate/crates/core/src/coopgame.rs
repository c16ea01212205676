//! Cooperative games and their linear symmetric solution concepts.
//!
//! A game assigns a rational value to every nonempty coalition of the players
//! `1..n`; the empty coalition is worth zero. Coalitions are bitmasks
//! internally (bit `i - 1` set when player `i` belongs) and tabloids of shape
//! `(k, n-k)` with the coalition as top row at the module boundary, so level
//! `k` of a game is literally a vector in `M^(k,n-k)`.
//!
//! Payoff vectors live on `(1, n-1)`: entry `i - 1` belongs to player `i`.

use num_traits::{One, Zero};

use crate::linalg::{self, RationalMatrix};
use crate::rational::{binomial, binomial_rational, factorial_rational, int};
use crate::symcore::enumerate_tabloids;
use crate::{Composition, Error, ModuleVector, Permutation, Rational, Result};

/// Storage for `2^n - 1` values stays practical up to here.
pub const MAX_PLAYERS: usize = 16;

pub type Coalition = u32;

pub fn coalition_size(s: Coalition) -> usize {
    s.count_ones() as usize
}

pub fn contains(s: Coalition, player: usize) -> bool {
    s & (1 << (player - 1)) != 0
}

pub fn coalition_from_players(players: &[usize]) -> Coalition {
    players.iter().fold(0, |acc, &p| acc | (1 << (p - 1)))
}

pub fn players_of(s: Coalition) -> Vec<usize> {
    (1..=32).filter(|&p| contains(s, p)).collect()
}

/// `dim 𝒢 = 2^n - 1`.
pub fn game_space_dimension(n: usize) -> u128 {
    (1u128 << n) - 1
}

fn check_players(n: usize) -> Result<()> {
    if !(2..=MAX_PLAYERS).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "games need 2 <= n <= {MAX_PLAYERS} players, got n = {n}"
        )));
    }
    Ok(())
}

/// Coalitions of size `k` in the lexicographic order of their tabloids.
pub fn level_coalitions(n: usize, k: usize) -> Result<Vec<Coalition>> {
    Ok(enumerate_tabloids(&Composition::subsets(n, k)?)?
        .iter()
        .map(|x| coalition_from_players(x.row(0)))
        .collect())
}

/// A characteristic-function game.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Game {
    n: usize,
    /// Indexed by coalition bitmask; entry 0 is the empty coalition.
    values: Vec<Rational>,
}

impl Game {
    pub fn zero(n: usize) -> Result<Self> {
        check_players(n)?;
        Ok(Game {
            n,
            values: vec![Rational::zero(); 1 << n],
        })
    }

    pub fn from_fn(n: usize, mut value: impl FnMut(Coalition) -> Rational) -> Result<Self> {
        let mut game = Self::zero(n)?;
        for s in 1..(1u32 << n) {
            game.values[s as usize] = value(s);
        }
        Ok(game)
    }

    /// `values[s - 1] = v(s)` for every nonempty coalition `s`.
    pub fn from_values(n: usize, values: Vec<Rational>) -> Result<Self> {
        check_players(n)?;
        if values.len() as u128 != game_space_dimension(n) {
            return Err(Error::shape(
                format!("{} coalition values", game_space_dimension(n)),
                format!("{} values", values.len()),
            ));
        }
        let mut all = Vec::with_capacity(1 << n);
        all.push(Rational::zero());
        all.extend(values);
        Ok(Game { n, values: all })
    }

    /// `u_T(S) = 1` when `T ⊆ S`.
    pub fn unanimity(n: usize, carrier: Coalition) -> Result<Self> {
        Self::from_fn(n, |s| int(i64::from(s & carrier == carrier)))
    }

    /// Unanimity games on every nonempty coalition: a basis of `𝒢`.
    pub fn unanimity_basis(n: usize) -> Result<Vec<Game>> {
        (1..(1u32 << n)).map(|t| Self::unanimity(n, t)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand_coalition(&self) -> Coalition {
        (1u32 << self.n) - 1
    }

    pub fn value(&self, s: Coalition) -> &Rational {
        &self.values[s as usize]
    }

    /// `v(N)`.
    pub fn grand_value(&self) -> &Rational {
        self.value(self.grand_coalition())
    }

    pub fn set(&mut self, s: Coalition, value: Rational) -> Result<()> {
        if s == 0 || s > self.grand_coalition() {
            return Err(Error::InvalidArgument(format!(
                "coalition {s} is not a nonempty subset of {} players",
                self.n
            )));
        }
        self.values[s as usize] = value;
        Ok(())
    }

    /// Values of the nonempty coalitions in bitmask order.
    pub fn nonempty_values(&self) -> &[Rational] {
        &self.values[1..]
    }

    /// The restriction to size-`k` coalitions as a vector on `(k, n-k)`.
    pub fn level(&self, k: usize) -> Result<ModuleVector> {
        let shape = Composition::subsets(self.n, k)?;
        let values = level_coalitions(self.n, k)?
            .into_iter()
            .map(|s| self.values[s as usize].clone())
            .collect();
        ModuleVector::from_values(&shape, values)
    }

    /// Inverse of [`Game::level`] over all levels `1..=n`.
    pub fn from_levels(n: usize, levels: &[ModuleVector]) -> Result<Self> {
        check_players(n)?;
        if levels.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} levels, got {}",
                levels.len()
            )));
        }
        let mut game = Self::zero(n)?;
        for (index, level) in levels.iter().enumerate() {
            let k = index + 1;
            level.check_shape(&Composition::subsets(n, k)?)?;
            for (rank, s) in level_coalitions(n, k)?.into_iter().enumerate() {
                game.values[s as usize] = level.get(rank);
            }
        }
        Ok(game)
    }

    /// `(σ · v)(S) = v(σ⁻¹ · S)`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Game> {
        if sigma.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: sigma.n(),
            });
        }
        let inverse = sigma.inverse();
        Game::from_fn(self.n, |s| {
            let image = players_of(s)
                .into_iter()
                .fold(0, |acc, p| acc | (1 << (inverse.apply(p) - 1)));
            self.values[image as usize].clone()
        })
    }

    pub fn add(&self, other: &Game) -> Result<Game> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Game {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Game {
        Game {
            n: self.n,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (1..(1u32 << self.n)).all(|s| {
            let k = coalition_size(s);
            let representative = (1u32 << k) - 1;
            self.values[s as usize] == self.values[representative as usize]
        })
    }
}

fn payoff_shape(n: usize) -> Result<Composition> {
    Composition::candidates(n)
}

fn check_level(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "level k = {k} must satisfy 1 <= k <= n = {n}"
        )));
    }
    Ok(())
}

/// `A(v, k)`: mean value of the size-`k` coalitions.
pub fn level_average(v: &Game, k: usize) -> Result<Rational> {
    check_level(v.n, k)?;
    let total = (1u32..(1 << v.n))
        .filter(|&s| coalition_size(s) == k)
        .fold(Rational::zero(), |acc, s| acc + &v.values[s as usize]);
    Ok(total / binomial_rational(v.n as u64, k as u64))
}

/// `T₀^k(v)ᵢ = A(v, k) / k` for every player.
pub fn t0k_apply(v: &Game, k: usize) -> Result<ModuleVector> {
    let share = level_average(v, k)? / int(k as i64);
    ModuleVector::constant(&payoff_shape(v.n)?, share)
}

/// `γ(k) = C(n-2, k-1)`.
pub fn gamma(n: usize, k: usize) -> Rational {
    binomial_rational(n as u64 - 2, k as u64 - 1)
}

fn check_u1_level(n: usize, k: usize) -> Result<()> {
    check_level(n, k)?;
    if k == n {
        return Err(Error::InvalidArgument(format!(
            "T₁^k is undefined at the top level k = n = {n}"
        )));
    }
    Ok(())
}

/// `T₁^k(v)ᵢ = γ(k)⁻¹ Σ_{|S|=k, i∈S} [v(S) − A(v,k)]`.
pub fn t1k_apply(v: &Game, k: usize) -> Result<ModuleVector> {
    check_u1_level(v.n, k)?;
    let n = v.n;
    let average = level_average(v, k)?;
    let mut payoffs = vec![Rational::zero(); n];
    for s in (1u32..(1 << n)).filter(|&s| coalition_size(s) == k) {
        let deviation = &v.values[s as usize] - &average;
        for player in players_of(s) {
            payoffs[player - 1] += &deviation;
        }
    }
    let g = gamma(n, k);
    let out = ModuleVector::from_values(
        &payoff_shape(n)?,
        payoffs.into_iter().map(|p| p / &g).collect(),
    )?;
    debug_assert!(out.sum().is_zero(), "T₁^k lands in the sum-zero subspace");
    Ok(out)
}

/// Matrix of `T₁^k` restricted to level `k`: rows are players, columns are
/// coalitions in tabloid order, entries `([i ∈ S] − k/n) / γ(k)`.
pub fn t1k_matrix(n: usize, k: usize) -> Result<RationalMatrix> {
    check_players(n)?;
    check_u1_level(n, k)?;
    let coalitions = level_coalitions(n, k)?;
    let g = gamma(n, k);
    let share = int(k as i64) / int(n as i64);
    let mut m = RationalMatrix::zeros(n, coalitions.len());
    for (col, &s) in coalitions.iter().enumerate() {
        for player in 1..=n {
            let indicator = int(i64::from(contains(s, player)));
            m.set(player - 1, col, (indicator - &share) / &g);
        }
    }
    Ok(m)
}

/// `α_k`, the scalar by which `(T₁^k)* T₁^k` acts on `U₁^k`: the squared
/// Frobenius norm of `T₁^k` spread over the `n - 1` dimensions of `U₁^k`.
pub fn schur_constant(n: usize, k: usize) -> Result<Rational> {
    Ok(t1k_matrix(n, k)?.frobenius_squared() / int(n as i64 - 1))
}

/// `(c₀¹, …, c₀ⁿ)` and `(c₁¹, …, c₁ⁿ⁻¹)`: the coordinates of a linear
/// symmetric solution concept in the `T₀^k`, `T₁^k` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionCoefficients {
    c0: Vec<Rational>,
    c1: Vec<Rational>,
}

impl SolutionCoefficients {
    pub fn new(c0: Vec<Rational>, c1: Vec<Rational>) -> Result<Self> {
        check_players(c0.len())?;
        if c1.len() + 1 != c0.len() {
            return Err(Error::InvalidArgument(format!(
                "c1 must have n - 1 = {} entries, got {}",
                c0.len() - 1,
                c1.len()
            )));
        }
        Ok(SolutionCoefficients { c0, c1 })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(
            vec![Rational::zero(); n],
            vec![Rational::zero(); n.saturating_sub(1)],
        )
    }

    pub fn n(&self) -> usize {
        self.c0.len()
    }

    pub fn c0(&self) -> &[Rational] {
        &self.c0
    }

    pub fn c1(&self) -> &[Rational] {
        &self.c1
    }
}

/// Marginal-value weights `m₁, …, m_n` (with `m_{n+1} = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarginalWeights {
    m: Vec<Rational>,
}

impl MarginalWeights {
    pub fn new(m: Vec<Rational>) -> Result<Self> {
        check_players(m.len())?;
        Ok(MarginalWeights { m })
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.m
    }

    /// `m_k` for `1 <= k <= n + 1`.
    pub fn weight(&self, k: usize) -> Rational {
        self.m.get(k - 1).cloned().unwrap_or_else(Rational::zero)
    }
}

/// A map from games to payoff vectors.
pub trait SolutionConcept {
    fn n(&self) -> usize;

    fn payoffs(&self, v: &Game) -> Result<ModuleVector>;
}

fn check_same_n(expected: usize, v: &Game) -> Result<()> {
    if v.n != expected {
        return Err(Error::SizeMismatch {
            expected,
            found: v.n,
        });
    }
    Ok(())
}

/// `φ = Σ c₀^k T₀^k + Σ c₁^k T₁^k`.
pub fn solution_apply(c: &SolutionCoefficients, v: &Game) -> Result<ModuleVector> {
    check_same_n(c.n(), v)?;
    let n = v.n;
    let mut out = ModuleVector::zeros(&payoff_shape(n)?)?;
    for k in 1..=n {
        let c0 = &c.c0[k - 1];
        if !c0.is_zero() {
            out = out.add_scaled(c0, &t0k_apply(v, k)?)?;
        }
        if k < n {
            let c1 = &c.c1[k - 1];
            if !c1.is_zero() {
                out = out.add_scaled(c1, &t1k_apply(v, k)?)?;
            }
        }
    }
    Ok(out)
}

impl SolutionConcept for SolutionCoefficients {
    fn n(&self) -> usize {
        self.c0.len()
    }

    fn payoffs(&self, v: &Game) -> Result<ModuleVector> {
        solution_apply(self, v)
    }
}

/// `φ(v)ᵢ = Σ_{S∋i} m_{|S|} (v(S) − v(S∖i))`.
pub fn marginal_apply(m: &MarginalWeights, v: &Game) -> Result<ModuleVector> {
    check_same_n(m.n(), v)?;
    let n = v.n;
    let mut payoffs = vec![Rational::zero(); n];
    for (player, payoff) in payoffs.iter_mut().enumerate() {
        let bit = 1u32 << player;
        for s in (1u32..(1 << n)).filter(|s| s & bit != 0) {
            let weight = &m.m[coalition_size(s) - 1];
            if weight.is_zero() {
                continue;
            }
            *payoff += weight * (&v.values[s as usize] - &v.values[(s & !bit) as usize]);
        }
    }
    ModuleVector::from_values(&payoff_shape(n)?, payoffs)
}

impl SolutionConcept for MarginalWeights {
    fn n(&self) -> usize {
        self.m.len()
    }

    fn payoffs(&self, v: &Game) -> Result<ModuleVector> {
        marginal_apply(self, v)
    }
}

/// `m_k = (k-1)! (n-k)! / n!`.
pub fn shapley_weights(n: usize) -> Result<MarginalWeights> {
    check_players(n)?;
    let total = factorial_rational(n as u64);
    MarginalWeights::new(
        (1..=n)
            .map(|k| factorial_rational(k as u64 - 1) * factorial_rational((n - k) as u64) / &total)
            .collect(),
    )
}

/// `c₀ = (0, …, 0, 1)`, `c₁ = (1/(n-1), …, 1/(n-1))`.
pub fn shapley_coefficients(n: usize) -> Result<SolutionCoefficients> {
    check_players(n)?;
    let mut c0 = vec![Rational::zero(); n];
    c0[n - 1] = Rational::one();
    let share = int(1) / int(n as i64 - 1);
    SolutionCoefficients::new(c0, vec![share; n - 1])
}

/// `c₀^k = k [m_k C(n-1,k-1) − m_{k+1} C(n-1,k)]`,
/// `c₁^k = γ(k) [m_k + m_{k+1}]`.
pub fn marginal_to_coefficients(m: &MarginalWeights) -> SolutionCoefficients {
    let n = m.n();
    let c0 = (1..=n)
        .map(|k| {
            int(k as i64)
                * (m.weight(k) * binomial_rational(n as u64 - 1, k as u64 - 1)
                    - m.weight(k + 1) * binomial_rational(n as u64 - 1, k as u64))
        })
        .collect();
    let c1 = (1..n)
        .map(|k| gamma(n, k) * (m.weight(k) + m.weight(k + 1)))
        .collect();
    SolutionCoefficients { c0, c1 }
}

/// Coefficient criterion: `c₀¹ = ⋯ = c₀ⁿ⁻¹ = 0` and `c₀ⁿ = 1`.
pub fn efficiency_check(c: &SolutionCoefficients) -> bool {
    let n = c.n();
    c.c0[..n - 1].iter().all(Zero::is_zero) && c.c0[n - 1].is_one()
}

/// Semantic check: `Σᵢ φ(v)ᵢ = v(N)` on every supplied game.
pub fn is_efficient_on(phi: &dyn SolutionConcept, games: &[Game]) -> Result<bool> {
    for v in games {
        if phi.payoffs(v)?.sum() != *v.grand_value() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First game among `games` on which `φ` fails efficiency.
pub fn efficiency_counterexample<'a>(
    phi: &dyn SolutionConcept,
    games: &'a [Game],
) -> Result<Option<&'a Game>> {
    for v in games {
        if phi.payoffs(v)?.sum() != *v.grand_value() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// `(*v)(S) = v(N) − v(N ∖ S)`.
pub fn dual_game(v: &Game) -> Game {
    let grand = v.grand_coalition();
    let total = v.grand_value().clone();
    Game::from_fn(v.n, |s| &total - &v.values[(grand & !s) as usize]).expect("same player count")
}

/// `φ(*v) = φ(v)` checked on the unanimity basis; by linearity this decides
/// self-duality for all games.
pub fn self_dual_check(phi: &dyn SolutionConcept) -> Result<bool> {
    Ok(self_duality_counterexample(phi)?.is_none())
}

pub fn self_duality_counterexample(phi: &dyn SolutionConcept) -> Result<Option<Game>> {
    for u in Game::unanimity_basis(phi.n())? {
        if phi.payoffs(&dual_game(&u))? != phi.payoffs(&u)? {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// One level of [`decompose_game`]: `level = mean_part + u1_part + kernel_part`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub k: usize,
    /// Projection onto `U₀^k`: the constant `A(v, k)`.
    pub mean_part: ModuleVector,
    /// Projection onto `U₁^k`.
    pub u1_part: ModuleVector,
    /// Projection onto `⊕_{j≥2} U_j^k`, invisible to every linear symmetric
    /// solution concept.
    pub kernel_part: ModuleVector,
}

impl LevelDecomposition {
    pub fn total(&self) -> Result<ModuleVector> {
        self.mean_part.add(&self.u1_part)?.add(&self.kernel_part)
    }
}

/// Splits every level of `v` into its `U₀^k`, `U₁^k` and common-kernel parts.
/// The `U₁^k` part is `(T₁^k)* T₁^k` applied to the level, divided by
/// [`schur_constant`].
pub fn decompose_game(v: &Game) -> Result<Vec<LevelDecomposition>> {
    let n = v.n;
    (1..=n)
        .map(|k| {
            let level = v.level(k)?;
            let mean_part = ModuleVector::constant(level.shape(), level_average(v, k)?)?;
            if k == n {
                let zero = ModuleVector::zeros(level.shape())?;
                return Ok(LevelDecomposition {
                    k,
                    mean_part,
                    u1_part: zero.clone(),
                    kernel_part: zero,
                });
            }
            let t1 = t1k_matrix(n, k)?;
            let alpha = schur_constant(n, k)?;
            let image = t1.mul_vec(&level.to_values())?;
            let back = t1.transpose().mul_vec(&image)?;
            let u1_part = ModuleVector::from_values(
                level.shape(),
                back.into_iter().map(|x| x / &alpha).collect(),
            )?;
            let kernel_part = level.sub(&mean_part)?.sub(&u1_part)?;
            Ok(LevelDecomposition {
                k,
                mean_part,
                u1_part,
                kernel_part,
            })
        })
        .collect()
}

/// Reassembles a game from the sum of each level's parts.
pub fn reassemble(n: usize, levels: &[LevelDecomposition]) -> Result<Game> {
    let totals = levels
        .iter()
        .map(LevelDecomposition::total)
        .collect::<Result<Vec<_>>>()?;
    Game::from_levels(n, &totals)
}

/// The game carried by the common-kernel parts alone.
pub fn kernel_game(n: usize, levels: &[LevelDecomposition]) -> Result<Game> {
    let parts: Vec<ModuleVector> = levels.iter().map(|l| l.kernel_part.clone()).collect();
    Game::from_levels(n, &parts)
}

/// Least-squares marginal weights for a coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarginalFit {
    pub weights: MarginalWeights,
    /// True when the coefficients are exactly those of a marginal value.
    pub exact: bool,
}

/// Fits `m` to `c` by solving the normal equations of the linear map
/// `m ↦ marginal_to_coefficients(m)`, which is injective.
pub fn fit_marginal_weights(c: &SolutionCoefficients) -> Result<MarginalFit> {
    let n = c.n();
    // columns: images of the unit weight vectors
    let columns: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut unit = vec![Rational::zero(); n];
            unit[j] = Rational::one();
            let image = marginal_to_coefficients(&MarginalWeights { m: unit });
            image.c0.into_iter().chain(image.c1).collect()
        })
        .collect();
    let target: Vec<Rational> = c.c0.iter().chain(&c.c1).cloned().collect();
    let design = RationalMatrix::from_rows(columns)?.transpose();
    let normal = design.transpose().mul(&design)?;
    let rhs = design.transpose().mul_vec(&target)?;
    let solution = linalg::solve(&normal, &rhs)?
        .ok_or_else(|| Error::Infeasible("normal equations are inconsistent".into()))?;
    let weights = MarginalWeights::new(solution.particular)?;
    let exact = marginal_to_coefficients(&weights) == *c;
    Ok(MarginalFit { weights, exact })
}

/// Number of size-`k` coalitions, `C(n, k)`.
pub fn level_size(n: usize, k: usize) -> u128 {
    binomial(n as u64, k as u64)
}
