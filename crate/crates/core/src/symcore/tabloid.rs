use std::fmt;

use crate::rational::binomial;
use crate::symcore::{Composition, Permutation};
use crate::{Error, Result};

/// Enumeration stops with a capacity error past this many tabloids.
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 10_000_000;

/// An ordered set partition of `{1, ..., n}` whose row sizes follow a
/// composition. Rows are stored ascending, concatenated top to bottom, so two
/// tabloids are equal exactly when their rows are equal as sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tabloid {
    shape: Composition,
    entries: Vec<usize>,
}

impl Tabloid {
    pub fn new(shape: Composition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::shape(&shape, format!("{} rows", rows.len())));
        }
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        let mut entries = Vec::with_capacity(n);
        for (row, &size) in rows.into_iter().zip(shape.parts()) {
            if row.len() != size {
                return Err(Error::shape(&shape, format!("a row of size {}", row.len())));
            }
            let mut row = row;
            row.sort_unstable();
            for &label in &row {
                if label == 0 || label > n || seen[label] {
                    return Err(Error::InvalidArgument(format!(
                        "rows must partition {{1..{n}}}; label {label} is out of range or repeated"
                    )));
                }
                seen[label] = true;
            }
            entries.extend(row);
        }
        Ok(Tabloid { shape, entries })
    }

    /// The full ranking listing `ranking[0]` first.
    pub fn from_ranking(ranking: &[usize]) -> Result<Self> {
        let shape = Composition::full_ranking(ranking.len())?;
        Self::new(shape, ranking.iter().map(|&c| vec![c]).collect())
    }

    /// Subset of `{1..n}` as the top row of a tabloid of shape `(k, n-k)`.
    pub fn from_subset(n: usize, subset: &[usize]) -> Result<Self> {
        let shape = Composition::subsets(n, subset.len())?;
        let top: Vec<usize> = subset.to_vec();
        let mut rest: Vec<usize> = (1..=n).filter(|c| !subset.contains(c)).collect();
        rest.sort_unstable();
        let rows = if rest.is_empty() {
            vec![top]
        } else {
            vec![top, rest]
        };
        Self::new(shape, rows)
    }

    /// `x₀`: the labels `1..n` in reading order.
    pub fn initial(shape: &Composition) -> Tabloid {
        Tabloid {
            shape: shape.clone(),
            entries: (1..=shape.n()).collect(),
        }
    }

    /// Builds a tabloid without validation; `entries` must already be in
    /// canonical form.
    pub(crate) fn from_canonical(shape: Composition, entries: Vec<usize>) -> Tabloid {
        debug_assert_eq!(entries.len(), shape.n());
        Tabloid { shape, entries }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Row contents top to bottom, each ascending.
    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        let offsets = self.shape.row_offsets();
        (0..self.shape.num_rows()).map(move |r| &self.entries[offsets[r]..offsets[r + 1]])
    }

    pub fn row(&self, index: usize) -> &[usize] {
        let offsets = self.shape.row_offsets();
        &self.entries[offsets[index]..offsets[index + 1]]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `rows[label]` is the zero-based row holding `label`; index 0 unused.
    pub fn row_lookup(&self) -> Vec<usize> {
        let mut lookup = vec![0; self.n() + 1];
        for (r, row) in self.rows().enumerate() {
            for &label in row {
                lookup[label] = r;
            }
        }
        lookup
    }

    pub fn row_of(&self, label: usize) -> Option<usize> {
        self.rows().position(|row| row.contains(&label))
    }

    /// Position in the lexicographic listing of all tabloids of this shape.
    pub fn lex_rank(&self) -> u128 {
        let n = self.n();
        let parts = self.shape.parts();
        let mut used = vec![false; n + 1];
        let mut rank: u128 = 0;
        let mut start = 0;
        for (r, &size) in parts.iter().enumerate() {
            let remaining = n - start;
            let row = &self.entries[start..start + size];
            // positions of the row's labels among the labels still free
            let positions: Vec<usize> = row
                .iter()
                .map(|&label| (1..label).filter(|&l| !used[l]).count())
                .collect();
            let block = self.shape.count_from_row(r + 1).unwrap_or(0);
            rank += combination_rank(remaining, &positions) * block;
            for &label in row {
                used[label] = true;
            }
            start += size;
        }
        rank
    }

    /// Inverse of [`Tabloid::lex_rank`].
    pub fn unrank(shape: &Composition, rank: u128) -> Result<Tabloid> {
        let count = shape.tabloid_count()?;
        if rank >= count {
            return Err(Error::RankOutOfRange { rank, count });
        }
        let n = shape.n();
        let mut free: Vec<usize> = (1..=n).collect();
        let mut entries = Vec::with_capacity(n);
        let mut rest = rank;
        for (r, &size) in shape.parts().iter().enumerate() {
            let block = shape.count_from_row(r + 1).unwrap_or(1);
            let index = rest / block;
            rest %= block;
            let positions = combination_unrank(free.len(), size, index);
            let chosen: Vec<usize> = positions.iter().map(|&p| free[p]).collect();
            for &p in positions.iter().rev() {
                free.remove(p);
            }
            entries.extend(chosen);
        }
        Ok(Tabloid {
            shape: shape.clone(),
            entries,
        })
    }

    /// `σ · x`: apply `σ` to every entry.
    pub fn act(&self, sigma: &Permutation) -> Result<Tabloid> {
        if sigma.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: sigma.n(),
            });
        }
        let mut entries: Vec<usize> = self.entries.iter().map(|&e| sigma.apply(e)).collect();
        let offsets = self.shape.row_offsets();
        for w in offsets.windows(2) {
            entries[w[0]..w[1]].sort_unstable();
        }
        Ok(Tabloid {
            shape: self.shape.clone(),
            entries,
        })
    }

    /// The same labels with the rows reordered into the associated partition
    /// shape (stable for rows of equal size).
    pub fn sorted_rows(&self) -> Tabloid {
        let mut rows: Vec<&[usize]> = self.rows().collect();
        rows.sort_by_key(|r| std::cmp::Reverse(r.len()));
        Tabloid {
            shape: self.shape.sorted(),
            entries: rows.concat(),
        }
    }
}

impl PartialOrd for Tabloid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tabloid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, label) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{label}")?;
            }
        }
        write!(f, "]")
    }
}

/// Rank of an ascending position list among all `k`-subsets of `0..m` in
/// lexicographic order.
fn combination_rank(m: usize, positions: &[usize]) -> u128 {
    let k = positions.len();
    let mut rank = 0;
    let mut next = 0;
    for (t, &p) in positions.iter().enumerate() {
        for v in next..p {
            rank += binomial((m - 1 - v) as u64, (k - 1 - t) as u64);
        }
        next = p + 1;
    }
    rank
}

fn combination_unrank(m: usize, k: usize, mut index: u128) -> Vec<usize> {
    let mut positions = Vec::with_capacity(k);
    let mut v = 0;
    for t in 0..k {
        loop {
            let block = binomial((m - 1 - v) as u64, (k - 1 - t) as u64);
            if index < block {
                break;
            }
            index -= block;
            v += 1;
        }
        positions.push(v);
        v += 1;
    }
    positions
}

/// All tabloids of `shape` in lexicographic order, `x₀` first.
pub fn enumerate_tabloids(shape: &Composition) -> Result<Vec<Tabloid>> {
    enumerate_tabloids_with_limit(shape, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_tabloids_with_limit(shape: &Composition, limit: u128) -> Result<Vec<Tabloid>> {
    let count = shape.tabloid_count()?;
    if count > limit {
        return Err(Error::Capacity {
            what: "tabloid enumeration",
            needed: count,
            limit,
        });
    }
    let n = shape.n();
    let mut out = Vec::with_capacity(count as usize);
    let mut entries = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fill_rows(shape, 0, &mut used, &mut entries, &mut out);
    Ok(out)
}

fn fill_rows(
    shape: &Composition,
    row: usize,
    used: &mut [bool],
    entries: &mut Vec<usize>,
    out: &mut Vec<Tabloid>,
) {
    if row == shape.num_rows() {
        out.push(Tabloid::from_canonical(shape.clone(), entries.clone()));
        return;
    }
    let free: Vec<usize> = (1..used.len()).filter(|&l| !used[l]).collect();
    let size = shape.parts()[row];
    let mut chosen = Vec::with_capacity(size);
    choose(shape, row, &free, 0, size, &mut chosen, used, entries, out);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    shape: &Composition,
    row: usize,
    free: &[usize],
    from: usize,
    size: usize,
    chosen: &mut Vec<usize>,
    used: &mut [bool],
    entries: &mut Vec<usize>,
    out: &mut Vec<Tabloid>,
) {
    if chosen.len() == size {
        let mark = entries.len();
        entries.extend_from_slice(chosen);
        for &c in chosen.iter() {
            used[c] = true;
        }
        fill_rows(shape, row + 1, used, entries, out);
        for &c in chosen.iter() {
            used[c] = false;
        }
        entries.truncate(mark);
        return;
    }
    let needed = size - chosen.len();
    for i in from..=free.len() - needed {
        chosen.push(free[i]);
        choose(shape, row, free, i + 1, size, chosen, used, entries, out);
        chosen.pop();
    }
}
