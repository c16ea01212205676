use std::fmt;

use crate::symcore::Tabloid;
use crate::{Error, Result};

/// A bijection of `{1, ..., n}`; `images[i - 1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &image in &images {
            if image == 0 || image > n || seen[image] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[image] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidArgument(format!(
                "transposition ({a} {b}) is outside 1..{n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// The permutation `σ` with `σ · x₀ = ranking`.
    pub fn from_ranking(ranking: &Tabloid) -> Result<Self> {
        if !ranking.shape().is_full_ranking() {
            return Err(Error::shape("a full ranking", ranking.shape()));
        }
        Ok(Permutation {
            images: ranking.entries().to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, label: usize) -> usize {
        self.images[label - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &image) in self.images.iter().enumerate() {
            images[image - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &image)| image == i + 1)
    }

    /// `σ · x₀` for the full-ranking shape.
    pub fn to_ranking(&self) -> Tabloid {
        Tabloid::from_ranking(&self.images).expect("a permutation is a valid ranking")
    }

    /// Rank of `σ · x₀` among full rankings, equivalently the lexicographic
    /// rank of the image word.
    pub fn lex_rank(&self) -> u128 {
        self.to_ranking().lex_rank()
    }

    /// Every permutation of `{1..n}` in lexicographic order of image words.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut current: Option<Vec<usize>> = Some((1..=n).collect());
        std::iter::from_fn(move || {
            let out = current.take()?;
            let mut next = out.clone();
            if next_permutation(&mut next) {
                current = Some(next);
            }
            Some(Permutation { images: out })
        })
    }
}

fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let Some(i) = (0..word.len() - 1).rev().find(|&i| word[i] < word[i + 1]) else {
        return false;
    };
    let j = (i + 1..word.len())
        .rev()
        .find(|&j| word[j] > word[i])
        .unwrap();
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.images.iter().map(|i| i.to_string()).collect();
        write!(f, "<{}>", words.join(" "))
    }
}
