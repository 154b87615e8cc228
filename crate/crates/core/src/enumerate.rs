//! Brute-force vertex enumeration over every `d`-subset of halfspaces.
//!
//! Halfspaces are scaled to integer rows. Subsets are visited depth-first in
//! increasing index order; the partial system is kept in fraction-free
//! Gauss-Jordan form, so every stored entry is a minor of the integer system
//! and no rationals are formed until a vertex is accepted. A prefix whose rows
//! are already dependent prunes its whole subtree.
//!
//! The work runs in checked `i128` first and falls back to `BigInt` if any
//! intermediate overflows.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::linalg::Vector;
use crate::polytope::HalfSpace;
use crate::scalar::Scalar;

trait Ring: Clone + Ord + Send + Sync + Sized {
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Division known to be exact.
    fn div_exact(&self, o: &Self) -> Self;
    fn gcd(&self, o: &Self) -> Self;
}

impl Ring for i128 {
    fn from_big(x: &BigInt) -> Option<Self> {
        x.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert_eq!(self % o, 0);
        self / o
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
}

impl Ring for BigInt {
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % o)));
        self / o
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
}

struct Overflow;

/// A halfspace `a.x <= b` scaled to integers; `row = [a..., b]`.
fn integer_rows(halfspaces: &[HalfSpace]) -> Vec<Vec<BigInt>> {
    halfspaces
        .iter()
        .map(|h| {
            let coords = h.normal().coords().iter().chain(std::iter::once(h.offset()));
            let lcm = coords
                .clone()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            coords
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect()
        })
        .collect()
}

/// Partial fraction-free Gauss-Jordan state: `rows[j][pivots[j]] == pivot`
/// and `rows[j][pivots[i]] == 0` for `i != j`.
#[derive(Clone)]
struct Elimination<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    pivot: T,
}

impl<T: Ring> Elimination<T> {
    fn empty() -> Self {
        Elimination {
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot: T::from_big(&BigInt::one()).expect("one fits"),
        }
    }

    /// Adds `row` (length `dim + 1`, last entry the right-hand side). Returns
    /// `Ok(None)` when the row is dependent on the current ones.
    fn push(&self, row: &[T], dim: usize) -> Result<Option<Self>, Overflow> {
        // r' = P r - sum_j r[c_j] R_j; each entry is a (k+1)-minor.
        let mut reduced = Vec::with_capacity(row.len());
        for c in 0..row.len() {
            let mut acc = self.pivot.mul(&row[c]).ok_or(Overflow)?;
            for (rj, &cj) in self.rows.iter().zip(&self.pivots) {
                if !row[cj].is_zero() && !rj[c].is_zero() {
                    acc = acc.sub(&row[cj].mul(&rj[c]).ok_or(Overflow)?).ok_or(Overflow)?;
                }
            }
            reduced.push(acc);
        }
        let Some(new_col) = (0..dim).find(|&c| !self.pivots.contains(&c) && !reduced[c].is_zero())
        else {
            return Ok(None);
        };
        let new_pivot = reduced[new_col].clone();
        let mut rows = Vec::with_capacity(self.rows.len() + 1);
        for rj in &self.rows {
            let f = &rj[new_col];
            let mut out = Vec::with_capacity(rj.len());
            for c in 0..rj.len() {
                let mut v = new_pivot.mul(&rj[c]).ok_or(Overflow)?;
                if !f.is_zero() && !reduced[c].is_zero() {
                    v = v.sub(&f.mul(&reduced[c]).ok_or(Overflow)?).ok_or(Overflow)?;
                }
                out.push(v.div_exact(&self.pivot));
            }
            rows.push(out);
        }
        rows.push(reduced);
        let mut pivots = self.pivots.clone();
        pivots.push(new_col);
        Ok(Some(Elimination {
            rows,
            pivots,
            pivot: new_pivot,
        }))
    }

    /// The solution as `(numerators, denominator)` in lowest terms with a
    /// positive denominator. Only valid once `dim` rows are in.
    fn solution(&self, dim: usize) -> Result<(Vec<T>, T), Overflow> {
        let mut num = vec![T::zero(); dim];
        for (rj, &cj) in self.rows.iter().zip(&self.pivots) {
            num[cj] = rj[dim].clone();
        }
        let mut den = self.pivot.clone();
        if den.is_negative() {
            den = den.neg().ok_or(Overflow)?;
            for x in num.iter_mut() {
                *x = x.neg().ok_or(Overflow)?;
            }
        }
        let g = num.iter().fold(den.clone(), |g, x| g.gcd(x));
        if !g.is_zero() {
            den = den.div_exact(&g);
            for x in num.iter_mut() {
                *x = x.div_exact(&g);
            }
        }
        Ok((num, den))
    }
}

fn satisfies_all<T: Ring>(rows: &[Vec<T>], num: &[T], den: &T, dim: usize) -> Result<bool, Overflow> {
    for row in rows {
        let mut lhs = T::zero();
        for c in 0..dim {
            if !row[c].is_zero() && !num[c].is_zero() {
                lhs = lhs.add(&row[c].mul(&num[c]).ok_or(Overflow)?).ok_or(Overflow)?;
            }
        }
        let rhs = row[dim].mul(den).ok_or(Overflow)?;
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

type Found<T> = BTreeSet<(Vec<T>, T)>;

fn descend<T: Ring>(
    rows: &[Vec<T>],
    dim: usize,
    start: usize,
    state: &Elimination<T>,
    found: &mut Found<T>,
) -> Result<(), Overflow> {
    let depth = state.rows.len();
    if depth == dim {
        let (num, den) = state.solution(dim)?;
        if satisfies_all(rows, &num, &den, dim)? {
            found.insert((num, den));
        }
        return Ok(());
    }
    // Leave room for the remaining dim - depth - 1 rows.
    let last = rows.len() - (dim - depth - 1);
    for i in start..last {
        if let Some(next) = state.push(&rows[i], dim)? {
            descend(rows, dim, i + 1, &next, found)?;
        }
    }
    Ok(())
}

fn enumerate_with<T: Ring>(big_rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vector>, Overflow> {
    let rows: Vec<Vec<T>> = big_rows
        .iter()
        .map(|r| r.iter().map(T::from_big).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()
        .ok_or(Overflow)?;
    if rows.len() < dim {
        return Ok(Vec::new());
    }
    let root = Elimination::<T>::empty();
    let firsts: Vec<usize> = (0..=rows.len() - dim).collect();
    let parts: Vec<Result<Found<T>, Overflow>> = firsts
        .par_iter()
        .map(|&i| {
            let mut found = Found::new();
            if let Some(next) = root.push(&rows[i], dim)? {
                descend(&rows, dim, i + 1, &next, &mut found)?;
            }
            Ok(found)
        })
        .collect();
    let mut all = Found::new();
    for part in parts {
        all.extend(part?);
    }
    let mut out: Vec<Vector> = all
        .into_iter()
        .map(|(num, den)| {
            let den = den.to_big();
            Vector::new(
                num.iter()
                    .map(|n| Scalar::from_big(n.to_big(), den.clone()))
                    .collect(),
            )
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every point that is the unique solution of some `dim` halfspaces taken
/// with equality and satisfies all halfspaces; sorted, no duplicates.
pub(crate) fn basic_feasible_points(halfspaces: &[HalfSpace], dim: usize) -> Vec<Vector> {
    let rows = integer_rows(halfspaces);
    match enumerate_with::<i128>(&rows, dim) {
        Ok(v) => v,
        Err(Overflow) => match enumerate_with::<BigInt>(&rows, dim) {
            Ok(v) => v,
            Err(Overflow) => unreachable!("BigInt arithmetic does not overflow"),
        },
    }
}
