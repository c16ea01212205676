use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::symcore::{enumerate_tabloids, Composition, Permutation, Tabloid};
use crate::{Error, Rational, Result};

/// Storage switches to dense once a quarter of the entries are nonzero.
const DENSE_NUMERATOR: usize = 1;
const DENSE_DENOMINATOR: usize = 4;

#[derive(Clone)]
enum Storage {
    Dense(Vec<Rational>),
    Sparse(BTreeMap<usize, Rational>),
}

/// An exact rational function on the tabloids of one shape, addressed by
/// lexicographic rank.
#[derive(Clone)]
pub struct ModuleVector {
    shape: Composition,
    dim: usize,
    storage: Storage,
}

fn dimension(shape: &Composition) -> Result<usize> {
    let count = shape.tabloid_count()?;
    usize::try_from(count).map_err(|_| Error::Capacity {
        what: "module vector",
        needed: count,
        limit: usize::MAX as u128,
    })
}

impl ModuleVector {
    pub fn zeros(shape: &Composition) -> Result<Self> {
        Ok(ModuleVector {
            shape: shape.clone(),
            dim: dimension(shape)?,
            storage: Storage::Sparse(BTreeMap::new()),
        })
    }

    /// Dense coordinates in lexicographic tabloid order.
    pub fn from_values(shape: &Composition, values: Vec<Rational>) -> Result<Self> {
        let dim = dimension(shape)?;
        if values.len() != dim {
            return Err(Error::shape(
                format!("{dim} values for shape {shape}"),
                format!("{} values", values.len()),
            ));
        }
        Ok(ModuleVector {
            shape: shape.clone(),
            dim,
            storage: Storage::Dense(values),
        }
        .normalized())
    }

    /// Sparse coordinates; repeated ranks accumulate.
    pub fn from_entries(
        shape: &Composition,
        entries: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Result<Self> {
        let dim = dimension(shape)?;
        let mut map = BTreeMap::new();
        for (rank, value) in entries {
            if rank >= dim {
                return Err(Error::RankOutOfRange {
                    rank: rank as u128,
                    count: dim as u128,
                });
            }
            *map.entry(rank).or_insert_with(Rational::zero) += value;
        }
        map.retain(|_, v| !v.is_zero());
        Ok(ModuleVector {
            shape: shape.clone(),
            dim,
            storage: Storage::Sparse(map),
        }
        .normalized())
    }

    /// The indicator function `f_x`.
    pub fn indicator(x: &Tabloid) -> Result<Self> {
        Self::from_entries(x.shape(), [(x.lex_rank() as usize, Rational::one())])
    }

    pub fn basis_vector(shape: &Composition, rank: usize) -> Result<Self> {
        Self::from_entries(shape, [(rank, Rational::one())])
    }

    pub fn constant(shape: &Composition, value: Rational) -> Result<Self> {
        let dim = dimension(shape)?;
        if value.is_zero() {
            return Self::zeros(shape);
        }
        Ok(ModuleVector {
            shape: shape.clone(),
            dim,
            storage: Storage::Dense(vec![value; dim]),
        })
    }

    pub fn ones(shape: &Composition) -> Result<Self> {
        Self::constant(shape, Rational::one())
    }

    fn normalized(self) -> Self {
        let nonzero = self.population();
        let dense = nonzero * DENSE_DENOMINATOR >= self.dim * DENSE_NUMERATOR && nonzero > 0;
        let storage = match (self.storage, dense) {
            (Storage::Dense(values), true) => Storage::Dense(values),
            (Storage::Sparse(map), false) => Storage::Sparse(map),
            (Storage::Dense(values), false) => Storage::Sparse(
                values
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            ),
            (Storage::Sparse(map), true) => {
                let mut values = vec![Rational::zero(); self.dim];
                for (rank, value) in map {
                    values[rank] = value;
                }
                Storage::Dense(values)
            }
        };
        ModuleVector {
            shape: self.shape,
            dim: self.dim,
            storage,
        }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// `|X^λ|`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    /// Number of nonzero entries.
    pub fn population(&self) -> usize {
        match &self.storage {
            Storage::Dense(values) => values.iter().filter(|v| !v.is_zero()).count(),
            Storage::Sparse(map) => map.len(),
        }
    }

    pub fn get(&self, rank: usize) -> Rational {
        match &self.storage {
            Storage::Dense(values) => values.get(rank).cloned().unwrap_or_else(Rational::zero),
            Storage::Sparse(map) => map.get(&rank).cloned().unwrap_or_else(Rational::zero),
        }
    }

    pub fn value_at(&self, x: &Tabloid) -> Result<Rational> {
        self.check_shape(x.shape())?;
        Ok(self.get(x.lex_rank() as usize))
    }

    /// Nonzero entries in increasing rank order.
    pub fn iter_nonzero(&self) -> Box<dyn Iterator<Item = (usize, &Rational)> + '_> {
        match &self.storage {
            Storage::Dense(values) => {
                Box::new(values.iter().enumerate().filter(|(_, v)| !v.is_zero()))
            }
            Storage::Sparse(map) => Box::new(map.iter().map(|(&r, v)| (r, v))),
        }
    }

    pub fn to_values(&self) -> Vec<Rational> {
        match &self.storage {
            Storage::Dense(values) => values.clone(),
            Storage::Sparse(map) => {
                let mut values = vec![Rational::zero(); self.dim];
                for (&rank, value) in map {
                    values[rank] = value.clone();
                }
                values
            }
        }
    }

    /// Calls `visit` with every tabloid carrying a nonzero value. Dense
    /// vectors are walked by enumeration rather than unranking each entry.
    pub fn for_each_nonzero<F>(&self, mut visit: F) -> Result<()>
    where
        F: FnMut(&Tabloid, &Rational),
    {
        match &self.storage {
            Storage::Dense(values) => {
                for (x, value) in enumerate_tabloids(&self.shape)?.iter().zip(values) {
                    if !value.is_zero() {
                        visit(x, value);
                    }
                }
            }
            Storage::Sparse(map) => {
                for (&rank, value) in map {
                    visit(&Tabloid::unrank(&self.shape, rank as u128)?, value);
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_shape(&self, other: &Composition) -> Result<()> {
        if &self.shape != other {
            return Err(Error::shape(&self.shape, other));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &ModuleVector,
        op: impl Fn(&mut Rational, &Rational),
    ) -> Result<Self> {
        self.check_shape(&other.shape)?;
        let mut out = self.clone();
        match &mut out.storage {
            Storage::Dense(values) => {
                for (rank, value) in other.iter_nonzero() {
                    op(&mut values[rank], value);
                }
            }
            Storage::Sparse(map) => {
                for (rank, value) in other.iter_nonzero() {
                    op(map.entry(rank).or_insert_with(Rational::zero), value);
                }
                map.retain(|_, v| !v.is_zero());
            }
        }
        Ok(out.normalized())
    }

    pub fn add(&self, other: &ModuleVector) -> Result<Self> {
        self.zip_with(other, |a, b| *a += b)
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<Self> {
        self.zip_with(other, |a, b| *a -= b)
    }

    /// `self + factor · other`.
    pub fn add_scaled(&self, factor: &Rational, other: &ModuleVector) -> Result<Self> {
        self.zip_with(other, |a, b| *a += factor * b)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return ModuleVector {
                shape: self.shape.clone(),
                dim: self.dim,
                storage: Storage::Sparse(BTreeMap::new()),
            };
        }
        let storage = match &self.storage {
            Storage::Dense(values) => Storage::Dense(values.iter().map(|v| v * factor).collect()),
            Storage::Sparse(map) => {
                Storage::Sparse(map.iter().map(|(&r, v)| (r, v * factor)).collect())
            }
        };
        ModuleVector {
            shape: self.shape.clone(),
            dim: self.dim,
            storage,
        }
    }

    /// `⟨f, g⟩ = Σ_x f(x) g(x)`.
    pub fn inner(&self, other: &ModuleVector) -> Result<Rational> {
        self.check_shape(&other.shape)?;
        let (small, large) = if self.population() <= other.population() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small
            .iter_nonzero()
            .map(|(rank, value)| value * large.get(rank))
            .fold(Rational::zero(), |acc, term| acc + term))
    }

    pub fn norm_squared(&self) -> Rational {
        self.iter_nonzero()
            .map(|(_, v)| v * v)
            .fold(Rational::zero(), |acc, term| acc + term)
    }

    pub fn sum(&self) -> Rational {
        self.iter_nonzero()
            .fold(Rational::zero(), |acc, (_, v)| acc + v)
    }

    pub fn is_zero(&self) -> bool {
        self.population() == 0
    }

    pub fn is_constant(&self) -> bool {
        let first = self.get(0);
        (0..self.dim).all(|r| self.get(r) == first)
    }

    /// `(σ · f)(x) = f(σ⁻¹ · x)`.
    pub fn act(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: sigma.n(),
            });
        }
        let mut entries = Vec::with_capacity(self.population());
        let mut failure = None;
        self.for_each_nonzero(|x, value| match x.act(sigma) {
            Ok(y) => entries.push((y.lex_rank() as usize, value.clone())),
            Err(e) => failure = Some(e),
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        Self::from_entries(&self.shape, entries)
    }

    /// Re-indexes onto the associated partition shape by sorting the rows of
    /// every tabloid; the map is an isomorphism of modules.
    pub fn to_sorted_shape(&self) -> Result<Self> {
        let sorted = self.shape.sorted();
        let mut entries = Vec::with_capacity(self.population());
        self.for_each_nonzero(|x, value| {
            entries.push((x.sorted_rows().lex_rank() as usize, value.clone()));
        })?;
        Self::from_entries(&sorted, entries)
    }
}

impl PartialEq for ModuleVector {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.iter_nonzero().eq(other.iter_nonzero())
    }
}

impl Eq for ModuleVector {}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleVector{}{{", self.shape)?;
        for (i, (rank, value)) in self.iter_nonzero().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{rank}: {value}")?;
        }
        write!(f, "}}")
    }
}

/// `f̃ ∈ ℚS_n` with `f̃(σ) = f(σ · x₀)`.
///
/// Permutations are ordered by their image words, which is the same order as
/// the full rankings `σ · x₀`, so the coefficients keep the ranks of `f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    coefficients: ModuleVector,
}

impl GroupAlgebraElement {
    pub fn from_function(f: &ModuleVector) -> Result<Self> {
        if !f.shape().is_full_ranking() {
            return Err(Error::shape(
                format!("full rankings {}", Composition::full_ranking(f.n())?),
                f.shape(),
            ));
        }
        Ok(GroupAlgebraElement {
            coefficients: f.clone(),
        })
    }

    pub fn to_function(&self) -> ModuleVector {
        self.coefficients.clone()
    }

    pub fn n(&self) -> usize {
        self.coefficients.n()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> Result<Rational> {
        if sigma.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: sigma.n(),
            });
        }
        Ok(self.coefficients.get(sigma.lex_rank() as usize))
    }

    pub fn nonzero_terms(&self) -> Result<Vec<(Permutation, Rational)>> {
        let mut terms = Vec::with_capacity(self.coefficients.population());
        self.coefficients.for_each_nonzero(|x, value| {
            terms.push((
                Permutation::from_ranking(x).expect("full-ranking shape"),
                value.clone(),
            ));
        })?;
        Ok(terms)
    }

    /// `f̃ · v = Σ_σ f̃(σ) (σ · v)` for `v` in any module of the same `n`.
    pub fn act_on(&self, v: &ModuleVector) -> Result<ModuleVector> {
        if v.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: v.n(),
            });
        }
        let support: Vec<(Tabloid, Rational)> = {
            let mut s = Vec::with_capacity(v.population());
            v.for_each_nonzero(|y, value| s.push((y.clone(), value.clone())))?;
            s
        };
        let mut entries = Vec::new();
        for (sigma, coefficient) in self.nonzero_terms()? {
            for (y, value) in &support {
                let image = y.act(&sigma)?;
                entries.push((image.lex_rank() as usize, &coefficient * value));
            }
        }
        ModuleVector::from_entries(v.shape(), entries)
    }
}
