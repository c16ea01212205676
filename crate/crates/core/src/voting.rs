//! Positional voting, simple ranking scoring functions, the pairs map and the
//! Kemeny rule.
//!
//! Candidates are the labels `1..n`. A candidate `i` is identified with the
//! tabloid of shape `(1, n-1)` whose top row is `{i}`, which has rank `i - 1`.
//! An ordered pair `(i, j)` is the tabloid of shape `(1, 1, n-2)` with `i` on
//! top and `j` second.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{self, RationalMatrix};
use crate::rational::{binomial, common_denominator, int, is_nonnegative_integer};
use crate::specht::{self, LinearMap};
use crate::symcore::enumerate_tabloids;
use crate::{Composition, Error, GroupAlgebraElement, ModuleVector, Rational, Result, Tabloid};

/// Points awarded per row: `weights[j]` goes to the candidate in row `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightingVector {
    weights: Vec<Rational>,
}

impl WeightingVector {
    /// Requires `w₁ ≥ w₂ ≥ ⋯ ≥ w_n`.
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        let w = Self::new_unsorted(weights)?;
        if !w.is_non_increasing() {
            return Err(Error::InvalidArgument(format!(
                "weights must be non-increasing, got [{}]",
                w.weights
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        Ok(w)
    }

    /// Accepts any ordering of the weights; used for hats and other
    /// non-monotone vectors.
    pub fn new_unsorted(weights: Vec<Rational>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidArgument(
                "a weighting vector needs at least two entries".into(),
            ));
        }
        Ok(WeightingVector { weights })
    }

    /// `(n-1, n-2, ..., 1, 0)`.
    pub fn borda(n: usize) -> Result<Self> {
        Self::new((0..n).rev().map(|v| int(v as i64)).collect())
    }

    /// `(1, 0, ..., 0)`.
    pub fn plurality(n: usize) -> Result<Self> {
        Self::new((0..n).map(|j| int(i64::from(j == 0))).collect())
    }

    /// `(1, ..., 1, 0)`.
    pub fn antiplurality(n: usize) -> Result<Self> {
        Self::new((0..n).map(|j| int(i64::from(j + 1 < n))).collect())
    }

    /// Reads the weights off a vector on `(1, n-1)`: entry `j` is the value at
    /// the tabloid of candidate `j + 1`.
    pub fn from_vector(v: &ModuleVector) -> Result<Self> {
        let expected = Composition::candidates(v.n())?;
        v.check_shape(&expected)?;
        Self::new_unsorted(v.to_values())
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn is_non_increasing(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] >= w[1])
    }

    /// `w₁c₁ + ⋯ + w_n c_n` in `M^(1, n-1)`.
    pub fn to_vector(&self) -> ModuleVector {
        ModuleVector::from_values(
            &Composition::candidates(self.n()).expect("n >= 2"),
            self.weights.clone(),
        )
        .expect("length matches")
    }

    /// `ŵ`, the projection onto the sum-zero subspace.
    pub fn hat(&self) -> WeightingVector {
        let mean =
            self.weights.iter().fold(Rational::zero(), |acc, w| acc + w) / int(self.n() as i64);
        WeightingVector {
            weights: self.weights.iter().map(|w| w - &mean).collect(),
        }
    }

    pub fn is_sum_zero(&self) -> bool {
        self.weights
            .iter()
            .fold(Rational::zero(), |acc, w| acc + w)
            .is_zero()
    }
}

/// Ballot counts per tabloid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    counts: ModuleVector,
}

impl Profile {
    pub fn new(counts: ModuleVector) -> Self {
        Profile { counts }
    }

    pub fn from_ballots<'a>(
        shape: &Composition,
        ballots: impl IntoIterator<Item = (&'a Tabloid, u64)>,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for (ballot, count) in ballots {
            if ballot.shape() != shape {
                return Err(Error::shape(shape, ballot.shape()));
            }
            entries.push((ballot.lex_rank() as usize, int(count as i64)));
        }
        Ok(Profile {
            counts: ModuleVector::from_entries(shape, entries)?,
        })
    }

    pub fn counts(&self) -> &ModuleVector {
        &self.counts
    }

    pub fn into_counts(self) -> ModuleVector {
        self.counts
    }

    pub fn voter_total(&self) -> Rational {
        self.counts.sum()
    }

    /// True for genuine ballot data; any other rational vector is a function
    /// rather than a profile, though every operator accepts it.
    pub fn is_ballot_data(&self) -> bool {
        self.counts
            .iter_nonzero()
            .all(|(_, v)| is_nonnegative_integer(v))
    }
}

/// Scores on a codomain module together with the winners and the ordinal
/// outcome. Ties are kept; nothing is broken silently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankingScores {
    scores: ModuleVector,
    tiers: Vec<Vec<usize>>,
}

impl RankingScores {
    pub fn from_scores(scores: ModuleVector) -> Self {
        let mut groups: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for (rank, value) in scores.to_values().into_iter().enumerate() {
            groups.entry(value).or_default().push(rank);
        }
        let tiers = groups.into_values().rev().collect();
        RankingScores { scores, tiers }
    }

    pub fn scores(&self) -> &ModuleVector {
        &self.scores
    }

    /// Ranks of the argmax tabloids.
    pub fn winners(&self) -> &[usize] {
        self.tiers.first().map_or(&[], Vec::as_slice)
    }

    pub fn winner_tabloids(&self) -> Result<Vec<Tabloid>> {
        self.winners()
            .iter()
            .map(|&r| Tabloid::unrank(self.scores.shape(), r as u128))
            .collect()
    }

    /// Ranks grouped by descending score.
    pub fn tiers(&self) -> &[Vec<usize>] {
        &self.tiers
    }

    pub fn score(&self, rank: usize) -> Rational {
        self.scores.get(rank)
    }
}

fn check_full_ranking(f: &ModuleVector) -> Result<()> {
    if !f.shape().is_full_ranking() {
        return Err(Error::shape(
            format!("full rankings {}", Composition::full_ranking(f.n())?),
            f.shape(),
        ));
    }
    Ok(())
}

/// `T_w(f)`: candidate `i` scores `Σ_x f(x) · w[row of i in x]`.
///
/// `f` may live on any composition; the weighting vector then carries one
/// weight per row of that shape.
pub fn apply_positional(w: &WeightingVector, f: &ModuleVector) -> Result<ModuleVector> {
    let n = f.n();
    if w.n() != f.shape().num_rows() {
        return Err(Error::shape(
            format!("{} weights for shape {}", f.shape().num_rows(), f.shape()),
            format!("{} weights", w.n()),
        ));
    }
    let codomain = Composition::candidates(n)?;
    let mut scores = vec![Rational::zero(); n];
    f.for_each_nonzero(|x, value| {
        for (row, labels) in x.rows().enumerate() {
            let weight = &w.weights[row];
            if weight.is_zero() {
                continue;
            }
            let points = value * weight;
            for &label in labels {
                scores[label - 1] += &points;
            }
        }
    })?;
    ModuleVector::from_values(&codomain, scores)
}

/// `T_w*(g)`: the function on `shape` with
/// `x ↦ Σ_i g(c_i) · w[row of i in x]`.
pub fn apply_positional_adjoint(
    w: &WeightingVector,
    g: &ModuleVector,
    shape: &Composition,
) -> Result<ModuleVector> {
    let n = shape.n();
    g.check_shape(&Composition::candidates(n)?)?;
    if w.n() != shape.num_rows() {
        return Err(Error::shape(
            format!("{} weights for shape {}", shape.num_rows(), shape),
            format!("{} weights", w.n()),
        ));
    }
    let g_values = g.to_values();
    let values = enumerate_tabloids(shape)?
        .iter()
        .map(|x| {
            x.rows()
                .enumerate()
                .flat_map(|(row, labels)| labels.iter().map(move |&l| (row, l)))
                .fold(Rational::zero(), |acc, (row, label)| {
                    acc + &g_values[label - 1] * &w.weights[row]
                })
        })
        .collect();
    ModuleVector::from_values(shape, values)
}

/// The positional voting procedure of `w` applied to `f`.
pub fn positional_tally(w: &WeightingVector, f: &ModuleVector) -> Result<RankingScores> {
    Ok(RankingScores::from_scores(apply_positional(w, f)?))
}

/// `T_w` as a matrix-free linear map on `M^shape`.
pub fn positional_map(w: &WeightingVector, shape: &Composition) -> Result<LinearMap> {
    let codomain = Composition::candidates(shape.n())?;
    let forward = w.clone();
    let backward = w.clone();
    let domain = shape.clone();
    Ok(LinearMap::matrix_free(
        shape.clone(),
        codomain,
        move |f| apply_positional(&forward, f),
        move |g| apply_positional_adjoint(&backward, g, &domain),
    ))
}

/// `w ∼ w′`: the hats are positive multiples of each other (two zero hats
/// count as equivalent).
pub fn weighting_equivalent(w: &WeightingVector, w2: &WeightingVector) -> bool {
    if w.n() != w2.n() {
        return false;
    }
    let a = w.hat();
    let b = w2.hat();
    let a_zero = a.weights.iter().all(Zero::is_zero);
    let b_zero = b.weights.iter().all(Zero::is_zero);
    if a_zero || b_zero {
        return a_zero && b_zero;
    }
    let pivot = a.weights.iter().position(|v| !v.is_zero()).unwrap();
    let ratio = &b.weights[pivot] / &a.weights[pivot];
    ratio.is_positive()
        && a.weights
            .iter()
            .zip(&b.weights)
            .all(|(x, y)| x * &ratio == *y)
}

/// `T_z(f) = f̃ · z`.
pub fn apply_srsf(z: &ModuleVector, f: &ModuleVector) -> Result<ModuleVector> {
    check_full_ranking(z)?;
    check_full_ranking(f)?;
    if z.n() != f.n() {
        return Err(Error::SizeMismatch {
            expected: z.n(),
            found: f.n(),
        });
    }
    GroupAlgebraElement::from_function(f)?.act_on(z)
}

pub fn srsf_apply(z: &ModuleVector, f: &ModuleVector) -> Result<RankingScores> {
    Ok(RankingScores::from_scores(apply_srsf(z, f)?))
}

/// Number of pairs the two full rankings order differently.
pub fn kendall_tau(x: &Tabloid, y: &Tabloid) -> Result<usize> {
    if !x.shape().is_full_ranking() || !y.shape().is_full_ranking() {
        return Err(Error::shape(
            "full rankings",
            format!("{} and {}", x.shape(), y.shape()),
        ));
    }
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            expected: x.n(),
            found: y.n(),
        });
    }
    let px = x.row_lookup();
    let py = y.row_lookup();
    let n = x.n();
    let mut disagreements = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if (px[i] < px[j]) != (py[i] < py[j]) {
                disagreements += 1;
            }
        }
    }
    Ok(disagreements)
}

/// `z(x) = C(n,2) − d(x, x₀)`, the Kemeny scoring function.
pub fn kendall_scores(n: usize) -> Result<ModuleVector> {
    let shape = Composition::full_ranking(n)?;
    let x0 = Tabloid::initial(&shape);
    let max = binomial(n as u64, 2) as i64;
    let values = enumerate_tabloids(&shape)?
        .iter()
        .map(|x| kendall_tau(x, &x0).map(|d| int(max - d as i64)))
        .collect::<Result<Vec<_>>>()?;
    ModuleVector::from_values(&shape, values)
}

/// `a_ij` as a function on full rankings: 1 where `i` is ranked above `j`.
pub fn pair_indicator(n: usize, i: usize, j: usize) -> Result<ModuleVector> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidArgument(format!(
            "({i}, {j}) is not an ordered pair of distinct candidates in 1..{n}"
        )));
    }
    let shape = Composition::full_ranking(n)?;
    let values = enumerate_tabloids(&shape)?
        .iter()
        .map(|x| {
            let rows = x.row_lookup();
            int(i64::from(rows[i] < rows[j]))
        })
        .collect();
    ModuleVector::from_values(&shape, values)
}

/// `pair_ranks[i][j]`: rank of the tabloid with `i` on top and `j` second.
fn pair_ranks(n: usize) -> Result<Vec<Vec<usize>>> {
    let shape = Composition::ordered_pairs(n)?;
    let mut table = vec![vec![usize::MAX; n + 1]; n + 1];
    for (i, row) in table.iter_mut().enumerate().skip(1) {
        for (j, cell) in row.iter_mut().enumerate().skip(1) {
            if i == j {
                continue;
            }
            let mut rows = vec![vec![i], vec![j]];
            if n > 2 {
                rows.push((1..=n).filter(|&l| l != i && l != j).collect());
            }
            *cell = Tabloid::new(shape.clone(), rows)?.lex_rank() as usize;
        }
    }
    Ok(table)
}

/// `P(f) = Σ_{i≠j} ⟨f, a_ij⟩ c_ij`, valued on `(1, 1, n-2)` (or `(1, 1)`
/// when `n = 2`).
pub fn apply_pairs(f: &ModuleVector) -> Result<ModuleVector> {
    check_full_ranking(f)?;
    let n = f.n();
    let codomain = Composition::ordered_pairs(n)?;
    let table = pair_ranks(n)?;
    let mut out = vec![Rational::zero(); codomain.tabloid_count()? as usize];
    f.for_each_nonzero(|x, value| {
        let order = x.entries();
        for a in 0..n {
            for b in a + 1..n {
                out[table[order[a]][order[b]]] += value;
            }
        }
    })?;
    ModuleVector::from_values(&codomain, out)
}

/// `P*(g) = Σ_{i≠j} g(c_ij) a_ij`.
pub fn apply_pairs_adjoint(g: &ModuleVector) -> Result<ModuleVector> {
    let n = g.n();
    g.check_shape(&Composition::ordered_pairs(n)?)?;
    let shape = Composition::full_ranking(n)?;
    let table = pair_ranks(n)?;
    let g_values = g.to_values();
    let values = enumerate_tabloids(&shape)?
        .iter()
        .map(|x| {
            let order = x.entries();
            let mut total = Rational::zero();
            for a in 0..n {
                for b in a + 1..n {
                    total += &g_values[table[order[a]][order[b]]];
                }
            }
            total
        })
        .collect();
    ModuleVector::from_values(&shape, values)
}

pub fn pairs_map(n: usize) -> Result<LinearMap> {
    Ok(LinearMap::matrix_free(
        Composition::full_ranking(n)?,
        Composition::ordered_pairs(n)?,
        apply_pairs,
        apply_pairs_adjoint,
    ))
}

/// `K(f) = P*(P(f))`.
pub fn apply_kemeny(f: &ModuleVector) -> Result<ModuleVector> {
    apply_pairs_adjoint(&apply_pairs(f)?)
}

pub fn kemeny_apply(f: &ModuleVector) -> Result<RankingScores> {
    Ok(RankingScores::from_scores(apply_kemeny(f)?))
}

pub fn kemeny_map(n: usize) -> Result<LinearMap> {
    let shape = Composition::full_ranking(n)?;
    Ok(LinearMap::matrix_free(
        shape.clone(),
        shape,
        apply_kemeny,
        apply_kemeny,
    ))
}

/// `T_b* ∘ T_w`, the SRSF built from a positional procedure.
pub fn apply_borda_srsf(w: &WeightingVector, f: &ModuleVector) -> Result<ModuleVector> {
    check_full_ranking(f)?;
    let b = WeightingVector::borda(f.n())?;
    apply_positional_adjoint(&b, &apply_positional(w, f)?, f.shape())
}

pub fn borda_srsf_apply(w: &WeightingVector, f: &ModuleVector) -> Result<RankingScores> {
    Ok(RankingScores::from_scores(apply_borda_srsf(w, f)?))
}

/// Coefficients `(γ₀, γ₁, γ₂)` of the spectral family `γ₀T₀ + γ₁T₁ + γ₂T₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralWeights(pub [Rational; 3]);

impl SpectralWeights {
    /// The Kemeny rule: `(κ₀, κ₁, κ₂)`.
    pub fn kemeny(n: usize) -> Self {
        let c = specht::kemeny_constants(n);
        SpectralWeights([c.kappa0, c.kappa1, c.kappa2])
    }

    /// The Borda SRSF `T_b* ∘ T_b`: `(β₀, β₁, 0)`.
    pub fn borda(n: usize) -> Self {
        let c = specht::kemeny_constants(n);
        SpectralWeights([c.beta0, c.beta1, Rational::zero()])
    }
}

pub fn apply_family(gamma: &SpectralWeights, f: &ModuleVector) -> Result<ModuleVector> {
    check_full_ranking(f)?;
    if f.n() < 3 {
        return Err(Error::InvalidArgument(format!(
            "the spectral family needs n >= 3, got n = {}",
            f.n()
        )));
    }
    let parts = specht::spectral_components(f)?;
    let mut out = ModuleVector::zeros(f.shape())?;
    for (weight, part) in gamma.0.iter().zip(&parts) {
        if !weight.is_zero() {
            out = out.add_scaled(weight, part)?;
        }
    }
    Ok(out)
}

pub fn family_apply(gamma: &SpectralWeights, f: &ModuleVector) -> Result<RankingScores> {
    Ok(RankingScores::from_scores(apply_family(gamma, f)?))
}

/// Options for [`construct_profile`].
#[derive(Clone, Debug, Default)]
pub struct ConstructOptions {
    /// Also produce a nonnegative integer profile `scale · f + shift · 1`.
    pub integer_profile: bool,
    /// Largest shift allowed when producing the integer profile.
    pub max_shift: Option<BigInt>,
}

/// Result of [`construct_profile`].
#[derive(Clone, Debug)]
pub struct ConstructedProfile {
    /// One exact solution of `T_{wᵢ}(f) = rᵢ` for every `i`.
    pub solution: ModuleVector,
    /// Dimension of the affine solution space, `n! − k(n − 1)`.
    pub solution_dimension: usize,
    pub integer_profile: Option<IntegerProfile>,
}

/// `scale · solution + shift · 1`, a nonnegative integer profile whose tallies
/// are `scale · rᵢ`.
#[derive(Clone, Debug)]
pub struct IntegerProfile {
    pub profile: ModuleVector,
    pub scale: BigInt,
    pub shift: BigInt,
}

/// Finds `f` with `T_{wᵢ}(f) = rᵢ` for sum-zero, linearly independent
/// weighting vectors `wᵢ` and sum-zero targets `rᵢ`.
pub fn construct_profile(
    ws: &[WeightingVector],
    targets: &[ModuleVector],
    options: &ConstructOptions,
) -> Result<ConstructedProfile> {
    if ws.is_empty() || ws.len() != targets.len() {
        return Err(Error::InvalidArgument(format!(
            "need equally many weighting vectors and targets, got {} and {}",
            ws.len(),
            targets.len()
        )));
    }
    let n = ws[0].n();
    let candidates = Composition::candidates(n)?;
    for (index, w) in ws.iter().enumerate() {
        if w.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: w.n(),
            });
        }
        if !w.is_sum_zero() {
            return Err(Error::NotSumZero(format!("weighting vector {index}")));
        }
    }
    for (index, r) in targets.iter().enumerate() {
        r.check_shape(&candidates)?;
        if !r.sum().is_zero() {
            return Err(Error::NotSumZero(format!("target {index}")));
        }
    }
    let weight_rows: Vec<Vec<Rational>> = ws.iter().map(|w| w.weights.clone()).collect();
    if linalg::joint_rank(&weight_rows, &[]) < ws.len() {
        return Err(Error::DependentWeights);
    }

    let shape = Composition::full_ranking(n)?;
    let rankings = enumerate_tabloids(&shape)?;
    let mut rows = Vec::with_capacity(ws.len() * n);
    let mut rhs = Vec::with_capacity(ws.len() * n);
    for (w, r) in ws.iter().zip(targets) {
        for candidate in 1..=n {
            rows.push(
                rankings
                    .iter()
                    .map(|x| w.weights[x.row_of(candidate).expect("full ranking")].clone())
                    .collect(),
            );
            rhs.push(r.get(candidate - 1));
        }
    }
    let system = RationalMatrix::from_rows(rows)?;
    let solution = linalg::solve(&system, &rhs)?.ok_or_else(|| {
        Error::Infeasible("tally system is inconsistent despite valid inputs".into())
    })?;
    let f = ModuleVector::from_values(&shape, solution.particular)?;

    let integer_profile = if options.integer_profile {
        Some(integer_representative(&f, options.max_shift.as_ref())?)
    } else {
        None
    };
    Ok(ConstructedProfile {
        solution: f,
        solution_dimension: solution.free_dimension,
        integer_profile,
    })
}

fn integer_representative(f: &ModuleVector, max_shift: Option<&BigInt>) -> Result<IntegerProfile> {
    let values = f.to_values();
    let scale = common_denominator(&values);
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(scale.clone())).to_integer())
        .collect();
    let minimum = scaled.iter().min().cloned().unwrap_or_else(BigInt::zero);
    let shift = if minimum.is_negative() {
        -minimum
    } else {
        BigInt::zero()
    };
    if let Some(bound) = max_shift {
        if &shift > bound {
            return Err(Error::Infeasible(format!(
                "a nonnegative integer profile needs a shift of {shift}, above the bound {bound}"
            )));
        }
    }
    let profile = ModuleVector::from_values(
        f.shape(),
        scaled
            .into_iter()
            .map(|v| Rational::from_integer(v + &shift))
            .collect(),
    )?;
    Ok(IntegerProfile {
        profile,
        scale,
        shift,
    })
}

/// For non-equivalent `w` and `w′`, a ballot profile on which the two
/// procedures produce different ordinal rankings of the candidates. Returns
/// `None` when `w ∼ w′`.
pub fn disagreement_profile(
    w: &WeightingVector,
    w2: &WeightingVector,
) -> Result<Option<ModuleVector>> {
    if w.n() != w2.n() {
        return Err(Error::SizeMismatch {
            expected: w.n(),
            found: w2.n(),
        });
    }
    if weighting_equivalent(w, w2) {
        return Ok(None);
    }
    let n = w.n();
    let candidates = Composition::candidates(n)?;
    // candidate 1 strictly first under w, strictly last under w2
    let mut forward = vec![Rational::zero(); n];
    forward[0] = Rational::one();
    forward[n - 1] = -Rational::one();
    let r = ModuleVector::from_values(&candidates, forward)?;
    let r2 = r.scale(&-Rational::one());
    let options = ConstructOptions {
        integer_profile: true,
        max_shift: None,
    };
    let (a, b) = (w.hat(), w2.hat());
    let a_zero = a.weights.iter().all(Zero::is_zero);
    let b_zero = b.weights.iter().all(Zero::is_zero);
    let built = match (a_zero, b_zero) {
        (false, false) if linalg::joint_rank(&[a.weights.clone(), b.weights.clone()], &[]) == 2 => {
            construct_profile(&[a, b], &[r, r2], &options)?
        }
        // w′ is a negative multiple of w (after removing constants)
        (false, false) => construct_profile(&[a], &[r], &options)?,
        (false, true) => construct_profile(&[a], &[r], &options)?,
        (true, false) => construct_profile(&[b], &[r], &options)?,
        (true, true) => unreachable!("zero hats are equivalent"),
    };
    let profile = built
        .integer_profile
        .expect("integer profile requested")
        .profile;
    Ok(Some(profile))
}

/// Ordinal outcomes of two tallies agree: identical tier structure.
pub fn same_ordinal_ranking(a: &RankingScores, b: &RankingScores) -> bool {
    a.tiers() == b.tiers()
}

/// Converts an integer-valued count vector to `u64` counts.
pub fn integer_counts(f: &ModuleVector) -> Option<Vec<u64>> {
    f.to_values()
        .iter()
        .map(|v| {
            if is_nonnegative_integer(v) {
                v.to_integer().to_u64()
            } else {
                None
            }
        })
        .collect()
}
