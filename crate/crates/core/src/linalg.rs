//! Exact linear algebra over ℚ.
//!
//! Elimination runs on integer rows (denominators cleared row by row) using
//! Bareiss' fraction-free update, so intermediate entries stay minors of the
//! input instead of accumulating rational blow-up.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::common_denominator;
use crate::{Error, ModuleVector, Rational, Result};

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integer_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Columns given as module vectors of a common shape.
    pub fn from_columns(columns: &[ModuleVector]) -> Result<Self> {
        let rows = columns.first().map_or(0, ModuleVector::dim);
        let mut m = Self::zeros(rows, columns.len());
        for (j, column) in columns.iter().enumerate() {
            if column.dim() != rows {
                return Err(Error::shape(format!("{rows} rows"), column.dim()));
            }
            for (i, value) in column.iter_nonzero() {
                m.set(i, j, value.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::shape(
                format!("{} rows", self.cols),
                format!("{} rows", other.rows),
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::shape(format!("{} entries", self.cols), v.len()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::shape(
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Sum of squares of all entries.
    pub fn frobenius_squared(&self) -> Rational {
        self.data
            .iter()
            .fold(Rational::zero(), |acc, v| acc + v * v)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn rank(&self) -> usize {
        Echelon::of_rows((0..self.rows).map(|i| self.row(i)))
            .pivots
            .len()
    }

    /// A basis of the row space, one echelon row per pivot.
    pub fn row_space_basis(&self) -> Vec<Vec<Rational>> {
        Echelon::of_rows((0..self.rows).map(|i| self.row(i))).basis()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Integer echelon form produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Nonzero echelon rows, one per pivot.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn of_rows<'a>(rows: impl IntoIterator<Item = &'a [Rational]>) -> Echelon {
        let mut m: Vec<Vec<BigInt>> = rows.into_iter().map(integer_row).collect();
        bareiss(&mut m)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Echelon rows as rationals, each divided by the gcd of its entries.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|row| {
                let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
                let g = if g.is_zero() { BigInt::one() } else { g };
                row.iter().map(|v| Rational::from_integer(v / &g)).collect()
            })
            .collect()
    }
}

/// Clears denominators of one row.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let scale = common_denominator(row);
    row.iter()
        .map(|v| (v * Rational::from_integer(scale.clone())).to_integer())
        .collect()
}

fn bareiss(m: &mut Vec<Vec<BigInt>>) -> Echelon {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut previous = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let value = pivot * &row[j] - &factor * &pivot_row[j];
                let (quotient, remainder) = value.div_rem(&previous);
                debug_assert!(remainder.is_zero(), "Bareiss division must be exact");
                row[j] = quotient;
            }
            row[c] = BigInt::zero();
        }
        previous = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon {
        rows: std::mem::take(m),
        pivots,
    }
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// One solution, with every free variable set to zero.
    pub particular: Vec<Rational>,
    /// Dimension of the affine solution set, `cols - rank`.
    pub free_dimension: usize,
}

/// Solves `A x = b` exactly; `None` when the system is inconsistent. Free
/// variables are fixed at zero, so the pivot order (columns left to right)
/// decides which solution is returned.
pub fn solve(a: &RationalMatrix, b: &[Rational]) -> Result<Option<Solution>> {
    if b.len() != a.rows() {
        return Err(Error::shape(format!("{} entries", a.rows()), b.len()));
    }
    let augmented: Vec<Vec<Rational>> = (0..a.rows())
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let echelon = Echelon::of_rows(augmented.iter().map(Vec::as_slice));
    let cols = a.cols();
    if echelon.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in echelon.rows.iter().zip(&echelon.pivots).rev() {
        let mut rhs = Rational::from_integer(row[cols].clone());
        for j in pc + 1..cols {
            if !row[j].is_zero() && !x[j].is_zero() {
                rhs -= Rational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[pc] = rhs / Rational::from_integer(row[pc].clone());
    }
    Ok(Some(Solution {
        particular: x,
        free_dimension: cols - echelon.rank(),
    }))
}

/// Rank of the union of two row sets.
pub fn joint_rank(first: &[Vec<Rational>], second: &[Vec<Rational>]) -> usize {
    Echelon::of_rows(first.iter().chain(second).map(Vec::as_slice)).rank()
}
