//! Test-only helpers: an independent brute-force vertex enumerator and random
//! instance generators. Shares no code with the library's enumeration path.

#![allow(dead_code, clippy::needless_range_loop)]

use num_rational::BigRational;
use num_traits::Zero;
use polyslice::{HPolytope, HalfSpace, Scalar, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = BigRational;

fn to_q(s: &Scalar) -> Q {
    s.as_rational().clone()
}

fn solve_naive(rows: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let d = rows.len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| r.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    for c in 0..d {
        let p = (c..d).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        for i in 0..d {
            if i != c && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in 0..=d {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some((0..d).map(|i| &m[i][d] / &m[i][i]).collect())
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// Every feasible intersection point of `dim` halfspaces, sorted.
pub fn brute_force_vertices(p: &HPolytope) -> Vec<Vector> {
    let d = p.dim();
    let hs: Vec<(Vec<Q>, Q)> = p
        .halfspaces()
        .iter()
        .map(|h| (h.normal().coords().iter().map(to_q).collect(), to_q(h.offset())))
        .collect();
    let mut out: Vec<Vec<Q>> = Vec::new();
    for sub in combinations(hs.len(), d) {
        let rows: Vec<Vec<Q>> = sub.iter().map(|&i| hs[i].0.clone()).collect();
        let rhs: Vec<Q> = sub.iter().map(|&i| hs[i].1.clone()).collect();
        let Some(x) = solve_naive(&rows, &rhs) else { continue };
        let feasible = hs.iter().all(|(a, b)| {
            let lhs: Q = a.iter().zip(&x).map(|(u, v)| u * v).fold(Q::zero(), |s, t| s + t);
            lhs <= *b
        });
        if feasible && !out.contains(&x) {
            out.push(x);
        }
    }
    let mut vs: Vec<Vector> = out
        .into_iter()
        .map(|x| Vector::new(x.into_iter().map(Scalar::from).collect()))
        .collect();
    vs.sort();
    vs
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut ChaCha8Rng, span: i64, max_den: i64) -> Scalar {
    Scalar::new(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

pub fn random_vector(rng: &mut ChaCha8Rng, d: usize) -> Vector {
    Vector::new((0..d).map(|_| random_scalar(rng, 12, 7)).collect())
}

/// A full-dimensional bounded polytope with `d <= 4` and at most 12
/// halfspaces: a box around the origin cut by random halfspaces that keep
/// the origin strictly inside.
pub fn random_polytope(rng: &mut ChaCha8Rng) -> HPolytope {
    let d = rng.gen_range(1..=4usize);
    let mut hs = Vec::new();
    for i in 0..d {
        let hi = Scalar::new(rng.gen_range(1..=5), rng.gen_range(1..=3));
        let lo = Scalar::new(rng.gen_range(1..=5), rng.gen_range(1..=3));
        hs.push(HalfSpace::new(Vector::unit(d, i), hi).unwrap());
        hs.push(HalfSpace::new(Vector::unit(d, i).neg(), lo).unwrap());
    }
    let extra = rng.gen_range(0..=(12 - 2 * d));
    for _ in 0..extra {
        let a = loop {
            let a = Vector::new((0..d).map(|_| Scalar::from_integer(rng.gen_range(-3..=3))).collect());
            if !a.is_zero() {
                break a;
            }
        };
        let b = Scalar::new(rng.gen_range(1..=6), rng.gen_range(1..=4));
        hs.push(HalfSpace::new(a, b).unwrap());
    }
    HPolytope::new(d, hs).unwrap()
}

/// Independent check that `v` is tight on at least `dim` linearly
/// independent halfspaces of `p`.
pub fn tight_rank(p: &HPolytope, v: &Vector) -> usize {
    let tight: Vec<Vec<Q>> = p
        .halfspaces()
        .iter()
        .filter(|h| h.normal().dot(v) == *h.offset())
        .map(|h| h.normal().coords().iter().map(to_q).collect())
        .collect();
    rank_naive(tight, p.dim())
}

fn rank_naive(mut m: Vec<Vec<Q>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                for j in 0..cols {
                    let t = &f * &m[rank][j];
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn q(p: i64, r: i64) -> Scalar {
    Scalar::new(p, r)
}
