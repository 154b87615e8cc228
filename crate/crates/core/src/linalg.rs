//! Exact vectors, matrices and Gaussian elimination over [`Scalar`].

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point or functional in `Q^d`. Ordering is lexicographic on coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Scalar::from_integer(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    fn check_dim(&self, other: &Vector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    pub fn try_dot(&self, other: &Vector) -> Result<Scalar> {
        self.check_dim(other)?;
        Ok(self.dot(other))
    }

    /// Inner product. Panics on mismatched lengths; use [`Vector::try_dot`]
    /// where the lengths come from user input.
    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched vectors");
        let mut acc = Scalar::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector> {
        self.check_dim(other)?;
        Ok(self.add(other))
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "add of mismatched vectors");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn try_sub(&self, other: &Vector) -> Result<Vector> {
        self.check_dim(other)?;
        Ok(self.sub(other))
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "sub of mismatched vectors");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Scalar) -> Vector {
        Vector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(Scalar::to_f64).collect()
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vector>,
    cols: usize,
}

impl Matrix {
    /// Builds a `k x cols` matrix; every row must have length `cols`.
    pub fn new(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.dim(),
            });
        }
        Ok(Matrix { rows, cols })
    }

    /// Builds from non-empty rows, taking the width from the first row.
    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let cols = rows
            .first()
            .map(Vector::dim)
            .ok_or_else(|| Error::InvalidArgument("matrix needs at least one row".into()))?;
        Self::new(rows, cols)
    }

    pub fn identity(d: usize) -> Self {
        Matrix {
            rows: (0..d).map(|i| Vector::unit(d, i)).collect(),
            cols: d,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn mul_vec(&self, x: &Vector) -> Result<Vector> {
        if x.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.dim(),
            });
        }
        Ok(Vector::new(self.rows.iter().map(|r| r.dot(x)).collect()))
    }

    pub fn rank(&self) -> usize {
        rref(self.rows.iter().map(|r| r.coords().to_vec()).collect(), self.cols).1.len()
    }
}

/// Reduced row echelon form. Pivots are taken column by column, choosing the
/// first row (in current order) with a nonzero entry. Returns the reduced
/// rows and the pivot columns.
fn rref(mut m: Vec<Vec<Scalar>>, cols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip().expect("pivot is nonzero");
        for c in col..m[row].len() {
            m[row][c] *= &inv;
        }
        for i in 0..m.len() {
            if i == row || m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].clone();
            for c in col..m[i].len() {
                let delta = &factor * &m[row][c];
                m[i][c] -= &delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

/// Solves `A x = b` for square `A`, exactly.
pub fn solve_linear_system(a: &Matrix, b: &Vector) -> Result<Vector> {
    let d = a.nrows();
    if a.ncols() != d {
        return Err(Error::InvalidArgument(format!(
            "solve needs a square matrix, got {}x{}",
            d,
            a.ncols()
        )));
    }
    if b.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: b.dim(),
        });
    }
    let aug = a
        .rows
        .iter()
        .zip(b.coords())
        .map(|(r, bi)| {
            let mut row = r.coords().to_vec();
            row.push(bi.clone());
            row
        })
        .collect();
    let (m, pivots) = rref(aug, d);
    if pivots.len() < d {
        return Err(Error::Singular);
    }
    Ok(Vector::new(m.into_iter().map(|mut r| r.pop().unwrap()).collect()))
}

/// A basis of `{x : A x = 0}` with `cols - rank(A)` vectors. Each basis
/// vector has a 1 in one free column and 0 in the other free columns.
pub fn nullspace_basis(a: &Matrix) -> Vec<Vector> {
    let cols = a.ncols();
    let (m, pivots) = rref(a.rows.iter().map(|r| r.coords().to_vec()).collect(), cols);
    let free = (0..cols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -&m[i][f];
        }
        Vector::new(v)
    })
    .collect()
}
