//! Isotypic bookkeeping for the three module families in play: full rankings
//! `M^(1,…,1)`, candidates `M^(1,n-1)` and subsets `M^(k,n-k)`.
//!
//! The projections onto `W₁` and `W₂` inside `M^(1,…,1)` are assembled from
//! operator identities rather than from Specht bases:
//!
//! * `T₀` averages onto the constants.
//! * `T₁ = (T_b* T_b − β₀ T₀) / β₁`.
//! * `T₂ = (K − κ₀ T₀ − κ₁ T₁) / κ₂`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::linalg::{self, Echelon, RationalMatrix};
use crate::rational::{binomial, binomial_rational, binomial_signed, factorial_rational, int};
use crate::voting::{self, WeightingVector};
use crate::{Composition, Error, ModuleVector, Rational, Result};

/// Largest domain dimension materialized by default (`7!`).
pub const DEFAULT_MATERIALIZATION_LIMIT: usize = 5040;

/// `dim S^(n-j, j) = C(n, j) − C(n, j-1)`.
pub fn two_row_dim(n: usize, j: usize) -> Result<u128> {
    if 2 * j > n {
        return Err(Error::InvalidArgument(format!(
            "two-row shape (n-j, j) needs 0 <= j <= n/2, got n = {n}, j = {j}"
        )));
    }
    Ok(binomial(n as u64, j as u64) - binomial_signed(n as i64, j as i64 - 1))
}

/// Which ambient module an isotypic component sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// `M^(1,…,1)`.
    FullRankings,
    /// `M^(1,n-1)`.
    Candidates,
    /// Level `k` of the game space, `𝒢_k ≅ M^(k,n-k)`.
    Coalitions { k: usize },
}

/// A Specht constituent `S^μ` of one of the ambient modules, e.g. `W₂` is
/// `S^(n-2,1,1)` inside the full rankings and `U_j^k` is `S^(n-j,j)` inside
/// level `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsotypicLabel {
    partition: Vec<usize>,
    ambient: Ambient,
}

impl IsotypicLabel {
    /// `S^(n-j, j)`.
    pub fn two_row(n: usize, j: usize, ambient: Ambient) -> Result<Self> {
        two_row_dim(n, j)?;
        let partition = if j == 0 { vec![n] } else { vec![n - j, j] };
        Ok(IsotypicLabel { partition, ambient })
    }

    /// `S^(n-2, 1, 1)`.
    pub fn hook(n: usize, ambient: Ambient) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "the hook (n-2,1,1) needs n >= 3, got n = {n}"
            )));
        }
        Ok(IsotypicLabel {
            partition: vec![n - 2, 1, 1],
            ambient,
        })
    }

    pub fn partition(&self) -> &[usize] {
        &self.partition
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dimension(&self) -> u128 {
        let n: usize = self.partition.iter().sum();
        match self.partition.as_slice() {
            [_] => 1,
            [_, j] => two_row_dim(n, *j).expect("validated at construction"),
            _ => binomial((n - 1) as u64, 2),
        }
    }
}

impl fmt::Display for IsotypicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partition.iter().map(ToString::to_string).collect();
        write!(f, "S^({})", parts.join(","))
    }
}

/// Splits `f ∈ M^(1,n-1)` into its constant part and its sum-zero part `f̂`.
pub fn project_mean(f: &ModuleVector) -> Result<(ModuleVector, ModuleVector)> {
    let n = f.n();
    f.check_shape(&Composition::candidates(n)?)?;
    let mean = ModuleVector::constant(f.shape(), f.sum() / int(n as i64))?;
    let hat = f.sub(&mean)?;
    Ok((mean, hat))
}

/// Eigenvalues of the Kemeny operator and of `T_b* T_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KemenyConstants {
    /// `(n!/2) C(n,2)`.
    pub kappa0: Rational,
    /// `(n+1)!/6`.
    pub kappa1: Rational,
    /// `n!/6`.
    pub kappa2: Rational,
    /// `((n-1) n!/2) C(n,2)`.
    pub beta0: Rational,
    /// `n (n+1)!/12`.
    pub beta1: Rational,
}

pub fn kemeny_constants(n: usize) -> KemenyConstants {
    let n_fact = factorial_rational(n as u64);
    let pairs = binomial_rational(n as u64, 2);
    let next_fact = factorial_rational(n as u64 + 1);
    let nn = int(n as i64);
    KemenyConstants {
        kappa0: &n_fact / int(2) * &pairs,
        kappa1: &next_fact / int(6),
        kappa2: &n_fact / int(6),
        beta0: (&nn - int(1)) * &n_fact / int(2) * &pairs,
        beta1: &nn * &next_fact / int(12),
    }
}

/// `[T₀f, T₁f, T₂f]` for `f` on full rankings (only `[T₀f, T₁f]` when
/// `n = 2`).
pub fn spectral_components(f: &ModuleVector) -> Result<Vec<ModuleVector>> {
    let n = f.n();
    f.check_shape(&Composition::full_ranking(n)?)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "spectral projections need n >= 2, got n = {n}"
        )));
    }
    let c = kemeny_constants(n);
    let t0 = ModuleVector::constant(f.shape(), f.sum() / int(f.dim() as i64))?;
    let borda = WeightingVector::borda(n)?;
    let btb = voting::apply_borda_srsf(&borda, f)?;
    let t1 = btb.add_scaled(&-&c.beta0, &t0)?.scale(&(int(1) / &c.beta1));
    if n == 2 {
        return Ok(vec![t0, t1]);
    }
    let k = voting::apply_kemeny(f)?;
    let t2 = k
        .add_scaled(&-&c.kappa0, &t0)?
        .add_scaled(&-&c.kappa1, &t1)?
        .scale(&(int(1) / &c.kappa2));
    Ok(vec![t0, t1, t2])
}

type Applier = Arc<dyn Fn(&ModuleVector) -> Result<ModuleVector> + Send + Sync>;

/// A linear map between two tabloid modules, given by an explicit matrix
/// (columns indexed by domain rank) or by a pair of appliers for the map and
/// its adjoint.
#[derive(Clone)]
pub struct LinearMap {
    domain: Composition,
    codomain: Composition,
    forward: Applier,
    adjoint: Applier,
    matrix: Option<Arc<RationalMatrix>>,
}

impl LinearMap {
    pub fn matrix_free<F, G>(
        domain: Composition,
        codomain: Composition,
        forward: F,
        adjoint: G,
    ) -> Self
    where
        F: Fn(&ModuleVector) -> Result<ModuleVector> + Send + Sync + 'static,
        G: Fn(&ModuleVector) -> Result<ModuleVector> + Send + Sync + 'static,
    {
        LinearMap {
            domain,
            codomain,
            forward: Arc::new(forward),
            adjoint: Arc::new(adjoint),
            matrix: None,
        }
    }

    pub fn from_matrix(
        domain: Composition,
        codomain: Composition,
        matrix: RationalMatrix,
    ) -> Result<Self> {
        let (rows, cols) = (codomain.tabloid_count()?, domain.tabloid_count()?);
        if (matrix.rows() as u128, matrix.cols() as u128) != (rows, cols) {
            return Err(Error::shape(
                format!("{rows}x{cols} matrix"),
                format!("{}x{} matrix", matrix.rows(), matrix.cols()),
            ));
        }
        let matrix = Arc::new(matrix);
        let (m1, m2) = (Arc::clone(&matrix), Arc::clone(&matrix));
        let (d1, c1) = (domain.clone(), codomain.clone());
        Ok(LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            forward: Arc::new(move |f| ModuleVector::from_values(&c1, m1.mul_vec(&f.to_values())?)),
            adjoint: Arc::new(move |g| {
                ModuleVector::from_values(&d1, m2.transpose().mul_vec(&g.to_values())?)
            }),
            matrix: Some(matrix),
        })
    }

    pub fn domain(&self) -> &Composition {
        &self.domain
    }

    pub fn codomain(&self) -> &Composition {
        &self.codomain
    }

    pub fn matrix(&self) -> Option<&RationalMatrix> {
        self.matrix.as_deref()
    }

    pub fn apply(&self, f: &ModuleVector) -> Result<ModuleVector> {
        f.check_shape(&self.domain)?;
        (self.forward)(f)
    }

    pub fn apply_adjoint(&self, g: &ModuleVector) -> Result<ModuleVector> {
        g.check_shape(&self.codomain)?;
        (self.adjoint)(g)
    }

    pub fn adjoint(&self) -> LinearMap {
        LinearMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            forward: Arc::clone(&self.adjoint),
            adjoint: Arc::clone(&self.forward),
            matrix: self.matrix.as_ref().map(|m| Arc::new(m.transpose())),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.codomain != self.domain {
            return Err(Error::shape(&self.domain, &inner.codomain));
        }
        let (outer_f, inner_f) = (self.clone(), inner.clone());
        let (outer_a, inner_a) = (self.clone(), inner.clone());
        Ok(LinearMap::matrix_free(
            inner.domain.clone(),
            self.codomain.clone(),
            move |f| outer_f.apply(&inner_f.apply(f)?),
            move |g| inner_a.apply_adjoint(&outer_a.apply_adjoint(g)?),
        ))
    }

    /// `Σ cᵢ Tᵢ` over maps sharing domain and codomain.
    pub fn combination(terms: &[(Rational, LinearMap)]) -> Result<LinearMap> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty linear combination".into()))?;
        for (_, map) in terms {
            if map.domain != first.domain || map.codomain != first.codomain {
                return Err(Error::shape(
                    format!("{} -> {}", first.domain, first.codomain),
                    format!("{} -> {}", map.domain, map.codomain),
                ));
            }
        }
        let forward_terms: Vec<(Rational, LinearMap)> = terms.to_vec();
        let adjoint_terms = forward_terms.clone();
        let codomain = first.codomain.clone();
        let domain = first.domain.clone();
        let (cd, dm) = (codomain.clone(), domain.clone());
        Ok(LinearMap::matrix_free(
            domain,
            codomain,
            move |f| {
                let mut out = ModuleVector::zeros(&cd)?;
                for (c, map) in &forward_terms {
                    if !c.is_zero() {
                        out = out.add_scaled(c, &map.apply(f)?)?;
                    }
                }
                Ok(out)
            },
            move |g| {
                let mut out = ModuleVector::zeros(&dm)?;
                for (c, map) in &adjoint_terms {
                    if !c.is_zero() {
                        out = out.add_scaled(c, &map.apply_adjoint(g)?)?;
                    }
                }
                Ok(out)
            },
        ))
    }

    /// Explicit matrix, column `r` being the image of the `r`-th basis
    /// vector, subject to [`DEFAULT_MATERIALIZATION_LIMIT`].
    pub fn materialize(&self) -> Result<RationalMatrix> {
        self.materialize_with_limit(DEFAULT_MATERIALIZATION_LIMIT)
    }

    pub fn materialize_with_limit(&self, limit: usize) -> Result<RationalMatrix> {
        if let Some(m) = &self.matrix {
            return Ok((**m).clone());
        }
        let dim = self.domain.tabloid_count()?;
        if dim > limit as u128 {
            return Err(Error::Capacity {
                what: "operator materialization",
                needed: dim,
                limit: limit as u128,
            });
        }
        let columns = (0..dim as usize)
            .map(|r| self.apply(&ModuleVector::basis_vector(&self.domain, r)?))
            .collect::<Result<Vec<_>>>()?;
        let codim = self.codomain.tabloid_count()? as usize;
        if columns.is_empty() {
            return Ok(RationalMatrix::zeros(codim, 0));
        }
        RationalMatrix::from_columns(&columns)
    }

    /// Explicit copy of this map, backed by its materialized matrix.
    pub fn to_explicit(&self) -> Result<LinearMap> {
        LinearMap::from_matrix(
            self.domain.clone(),
            self.codomain.clone(),
            self.materialize()?,
        )
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearMap")
            .field("domain", &self.domain)
            .field("codomain", &self.codomain)
            .field("explicit", &self.matrix.is_some())
            .finish()
    }
}

/// `T₀, T₁, T₂`: orthogonal projections of `M^(1,…,1)` onto the Kemeny
/// eigenspaces `W₀, W₁, W₂`. For `n = 2` there is no `W₂` and only two maps
/// are returned.
pub fn kemeny_eigenprojections(n: usize) -> Result<Vec<LinearMap>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Kemeny projections need n >= 2, got n = {n}"
        )));
    }
    let shape = Composition::full_ranking(n)?;
    let count = if n == 2 { 2 } else { 3 };
    Ok((0..count)
        .map(|i| {
            let project = move |f: &ModuleVector| -> Result<ModuleVector> {
                Ok(spectral_components(f)?.swap_remove(i))
            };
            // orthogonal projections are self-adjoint
            LinearMap::matrix_free(shape.clone(), shape.clone(), project, project)
        })
        .collect())
}

/// A basis of `E(T) = (ker T)^⊥`, the row space of `T`'s matrix, as vectors on
/// the domain.
pub fn effective_space(t: &LinearMap) -> Result<Vec<ModuleVector>> {
    let matrix = t.materialize()?;
    matrix
        .row_space_basis()
        .into_iter()
        .map(|row| ModuleVector::from_values(t.domain(), row))
        .collect()
}

fn coordinates(basis: &[ModuleVector]) -> Vec<Vec<Rational>> {
    basis.iter().map(ModuleVector::to_values).collect()
}

pub fn subspace_dimension(basis: &[ModuleVector]) -> usize {
    Echelon::of_rows(coordinates(basis).iter().map(Vec::as_slice)).rank()
}

/// True when the two spans coincide.
pub fn subspaces_equal(a: &[ModuleVector], b: &[ModuleVector]) -> bool {
    let (a, b) = (coordinates(a), coordinates(b));
    let ra = linalg::joint_rank(&a, &[]);
    let rb = linalg::joint_rank(&b, &[]);
    ra == rb && linalg::joint_rank(&a, &b) == ra
}

/// True when the spans meet only in zero.
pub fn subspaces_intersect_trivially(a: &[ModuleVector], b: &[ModuleVector]) -> bool {
    let (a, b) = (coordinates(a), coordinates(b));
    linalg::joint_rank(&a, &b) == linalg::joint_rank(&a, &[]) + linalg::joint_rank(&b, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn two_row_dimensions() {
        assert_eq!(
            (0..=2)
                .map(|j| two_row_dim(4, j).unwrap())
                .collect::<Vec<_>>(),
            vec![1, 3, 2]
        );
        for n in 1..10 {
            assert_eq!(two_row_dim(n, 0).unwrap(), 1);
        }
        assert_eq!(two_row_dim(3, 1).unwrap(), 2);
        assert!(two_row_dim(4, 3).is_err());
    }

    #[test]
    fn regular_module_dimension_for_three() {
        // S^(3), S^(2,1), S^(1,1,1) with multiplicities equal to dimensions
        let dims = [
            IsotypicLabel::two_row(3, 0, Ambient::FullRankings)
                .unwrap()
                .dimension(),
            IsotypicLabel::two_row(3, 1, Ambient::FullRankings)
                .unwrap()
                .dimension(),
            IsotypicLabel::hook(3, Ambient::FullRankings)
                .unwrap()
                .dimension(),
        ];
        assert_eq!(dims, [1, 2, 1]);
        assert_eq!(dims.iter().map(|d| d * d).sum::<u128>(), 6);
    }

    #[test]
    fn mean_projection_example() {
        let shape = Composition::candidates(3).unwrap();
        let f = ModuleVector::from_values(&shape, vec![int(13), int(4), int(7)]).unwrap();
        let (mean, hat) = project_mean(&f).unwrap();
        assert_eq!(mean.to_values(), vec![int(8); 3]);
        assert_eq!(hat.to_values(), vec![int(5), int(-4), int(-1)]);
        assert_eq!(mean.inner(&hat).unwrap(), int(0));

        let b = ModuleVector::from_values(&shape, vec![int(2), int(1), int(0)]).unwrap();
        assert_eq!(
            project_mean(&b).unwrap().1.to_values(),
            vec![int(1), int(0), int(-1)]
        );

        let c = ModuleVector::constant(&shape, frac(7, 3)).unwrap();
        let (m, h) = project_mean(&c).unwrap();
        assert_eq!(m, c);
        assert!(h.is_zero());

        assert!(
            project_mean(&ModuleVector::ones(&Composition::full_ranking(3).unwrap()).unwrap())
                .is_err()
        );
    }

    #[test]
    fn constants_for_three_candidates() {
        let c = kemeny_constants(3);
        assert_eq!([c.kappa0, c.kappa1, c.kappa2], [int(9), int(4), int(1)]);
        assert_eq!([c.beta0, c.beta1], [int(18), int(6)]);
    }

    #[test]
    fn two_candidates_have_two_projections() {
        assert_eq!(kemeny_eigenprojections(2).unwrap().len(), 2);
        assert_eq!(kemeny_eigenprojections(3).unwrap().len(), 3);
        assert!(kemeny_eigenprojections(1).is_err());
    }

    #[test]
    fn explicit_and_matrix_free_agree() {
        let p = voting::pairs_map(3).unwrap();
        let explicit = p.to_explicit().unwrap();
        for r in 0..6 {
            let e = ModuleVector::basis_vector(p.domain(), r).unwrap();
            assert_eq!(p.apply(&e).unwrap(), explicit.apply(&e).unwrap());
        }
        for r in 0..6 {
            let e = ModuleVector::basis_vector(p.codomain(), r).unwrap();
            assert_eq!(
                p.apply_adjoint(&e).unwrap(),
                explicit.apply_adjoint(&e).unwrap()
            );
        }
    }

    #[test]
    fn materialization_limit() {
        let k = voting::kemeny_map(5).unwrap();
        assert!(matches!(
            k.materialize_with_limit(100),
            Err(Error::Capacity { needed: 120, .. })
        ));
    }

    #[test]
    fn zero_map_has_trivial_effective_space() {
        let shape = Composition::full_ranking(3).unwrap();
        let zero =
            LinearMap::from_matrix(shape.clone(), shape, RationalMatrix::zeros(6, 6)).unwrap();
        assert!(effective_space(&zero).unwrap().is_empty());
    }

    #[test]
    fn pairs_map_effective_space_has_dimension_four() {
        let p = voting::pairs_map(3).unwrap();
        assert_eq!(effective_space(&p).unwrap().len(), 4);
    }

    #[test]
    fn composition_and_combination() {
        let p = voting::pairs_map(3).unwrap();
        let k = p.adjoint().compose(&p).unwrap();
        let direct = voting::kemeny_map(3).unwrap();
        assert_eq!(k.materialize().unwrap(), direct.materialize().unwrap());
        let twice = LinearMap::combination(&[(int(1), k.clone()), (int(1), direct)]).unwrap();
        assert_eq!(
            twice.materialize().unwrap(),
            k.materialize().unwrap().scale(&int(2))
        );
        let shape = Composition::full_ranking(3).unwrap();
        let tally = voting::positional_map(&WeightingVector::borda(3).unwrap(), &shape).unwrap();
        assert!(p.compose(&tally).is_err());
    }
}
