//! Slices of unit balls and their exact diameters.
//!
//! Slices are closed: `{x in B : f.x >= sup f(B) - alpha}`. The diameter of a
//! convex set equals that of its closure, so nothing is lost.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{nullspace_basis, Matrix, Vector};
use crate::lp::lp_feasible;
use crate::norms::{reference_product_norm, PolyhedralNormSpace, SpaceDescription};
use crate::polytope::{HPolytope, HalfSpace, VPolytope};
use crate::scalar::Scalar;

/// Slack allowed when comparing the floating-point sampling oracle against
/// an exact diameter.
pub const SAMPLING_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceSpec {
    f: Vector,
    alpha: Scalar,
}

impl SliceSpec {
    pub fn new(f: Vector, alpha: Scalar) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::InvalidArgument("slicing functional is zero".into()));
        }
        if !alpha.is_positive() {
            return Err(Error::InvalidArgument(format!("slice depth must be positive, got {alpha}")));
        }
        Ok(SliceSpec { f, alpha })
    }

    pub fn functional(&self) -> &Vector {
        &self.f
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }
}

/// `B ∩ {f.x >= s - alpha}` where `s` is the support value of `f` on the
/// vertices `ball`.
fn cut(ball: &HPolytope, ball_vertices: &VPolytope, spec: &SliceSpec) -> Result<(HPolytope, Scalar)> {
    let (s, _) = ball_vertices.support(&spec.f)?;
    let h = HalfSpace::new(spec.f.neg(), &spec.alpha - &s)?;
    Ok((ball.with_halfspace(h)?, s))
}

/// The closed slice of the unit ball of `space` determined by `spec`.
pub fn make_slice(space: &PolyhedralNormSpace, spec: &SliceSpec) -> Result<HPolytope> {
    let ball = space.unit_ball();
    let verts = ball.vertices()?;
    Ok(cut(&ball, &verts, spec)?.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterResult {
    pub value: Scalar,
    pub witness_pair: (Vector, Vector),
    pub vertex_count: usize,
}

/// Maximum of `dist(u, v)` over pairs of `vertices`, lexicographic tie-break on
/// the pair of indices into the sorted vertex list.
fn max_over_pairs<F>(vertices: &[Vector], dist: F) -> (Scalar, usize, usize)
where
    F: Fn(&Vector) -> Scalar + Sync,
{
    let n = vertices.len();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut best = (Scalar::zero(), i, i);
            for j in i + 1..n {
                let d = dist(&vertices[i].sub(&vertices[j]));
                if d > best.0 {
                    best = (d, i, j);
                }
            }
            best
        })
        .reduce(
            || (Scalar::zero(), usize::MAX, usize::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
                    b
                } else {
                    a
                }
            },
        )
}

/// Exact diameter of `p` in the norm of `space`. The map `(u, v) -> |||u - v|||`
/// is convex on `P x P`, so its maximum is attained at a pair of vertices.
pub fn diameter(p: &HPolytope, space: &PolyhedralNormSpace) -> Result<DiameterResult> {
    if p.dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            got: p.dim(),
        });
    }
    let verts = p.vertices()?;
    Ok(diameter_of_vertices(&verts, space))
}

pub fn diameter_of_vertices(verts: &VPolytope, space: &PolyhedralNormSpace) -> DiameterResult {
    let vs = verts.vertices();
    let (value, i, j) = max_over_pairs(vs, |d| space.norm_unchecked(d));
    DiameterResult {
        value,
        witness_pair: (vs[i].clone(), vs[j].clone()),
        vertex_count: vs.len(),
    }
}

/// Diameter of a vertex set in [`reference_product_norm`] with `split` as the
/// scalar coordinate.
pub fn reference_diameter(verts: &VPolytope, split: usize) -> Result<Scalar> {
    if split >= verts.dim() {
        return Err(Error::InvalidArgument(format!("split index {split} out of range")));
    }
    Ok(max_over_pairs(verts.vertices(), |d| {
        reference_product_norm(d, split).expect("split checked")
    })
    .0)
}

/// Exact slice diameters for a decreasing sequence of depths.
pub fn diameter_profile(
    space: &PolyhedralNormSpace,
    f: &Vector,
    alphas: &[Scalar],
) -> Result<Vec<(Scalar, DiameterResult)>> {
    if alphas.is_empty() {
        return Err(Error::InvalidArgument("no slice depths given".into()));
    }
    if alphas.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument("slice depths must be strictly decreasing".into()));
    }
    let ball = space.unit_ball();
    let ball_vertices = ball.vertices()?;
    alphas
        .iter()
        .map(|alpha| {
            let spec = SliceSpec::new(f.clone(), alpha.clone())?;
            let (slice, _) = cut(&ball, &ball_vertices, &spec)?;
            Ok((alpha.clone(), diameter(&slice, space)?))
        })
        .collect()
}

/// Where the base point of a certificate came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasePoint {
    /// The lexicographically smallest maximizer of `g` on the ball.
    SupportVertex,
    /// A slice point keeping as many dual-ball vertices as possible at or
    /// below `r`.
    LowActivityPoint,
}

/// Two points `x +- (1 - r) y` of a slice at norm distance `2(1 - r)`, with the
/// data to re-check them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundCertificate {
    pub space: SpaceDescription,
    pub g: Vector,
    pub alpha: Scalar,
    pub r: Scalar,
    /// `sup g(B)`.
    pub support_value: Scalar,
    pub base_point: BasePoint,
    pub x: Vector,
    pub y: Vector,
    /// Dual-ball vertices `phi` with `phi.x > r`.
    pub active_set: Vec<Vector>,
    pub plus: Vector,
    pub minus: Vector,
    pub plus_in_slice: bool,
    pub minus_in_slice: bool,
    pub bound: Scalar,
}

impl LowerBoundCertificate {
    pub fn is_valid(&self) -> bool {
        self.plus_in_slice && self.minus_in_slice
    }

    /// Re-checks every claim from the serialized data alone.
    pub fn verify(&self) -> Result<bool> {
        let space = self.space.build()?;
        let (s, _) = space.unit_ball().vertices()?.support(&self.g)?;
        let threshold = &s - &self.alpha;
        let in_slice = |p: &Vector| -> Result<bool> {
            Ok(space.norm(p)? <= Scalar::one() && self.g.try_dot(p)? >= threshold)
        };
        let step = (Scalar::one() - &self.r).clone();
        let dual = space.dual_ball_vertices();
        let active: Vec<Vector> = dual
            .vertices()
            .iter()
            .filter(|phi| phi.dot(&self.x) > self.r)
            .cloned()
            .collect();
        Ok(s == self.support_value
            && self.r.is_positive()
            && self.r < Scalar::one()
            && active == self.active_set
            && in_slice(&self.x)?
            && space.norm(&self.y)? == Scalar::one()
            && active.iter().all(|phi| phi.dot(&self.y).is_zero())
            && self.g.dot(&self.y).is_zero()
            && self.plus == self.x.add(&self.y.scale(&step))
            && self.minus == self.x.sub(&self.y.scale(&step))
            && in_slice(&self.plus)? == self.plus_in_slice
            && in_slice(&self.minus)? == self.minus_in_slice
            && self.bound == Scalar::from_integer(2) * step
            && space.norm(&self.plus.sub(&self.minus))? == self.bound)
    }
}

/// Builds the kernel-direction lower bound certificate for the slice
/// `S(B, g, alpha)`.
///
/// The base point is the support vertex if that works; otherwise a slice point
/// found by LP that keeps as many dual-ball vertices at or below `r` as
/// possible. The direction `y` lies in the common kernel of `g` and of every
/// dual-ball vertex exceeding `r` at `x`, normalized to norm one; both
/// `x +- (1 - r) y` are then checked for slice membership.
pub fn prop2_certificate(
    space: &PolyhedralNormSpace,
    g: &Vector,
    alpha: &Scalar,
    r: &Scalar,
) -> Result<LowerBoundCertificate> {
    if !r.is_positive() || *r >= Scalar::one() {
        return Err(Error::InvalidArgument(format!("certificate needs 0 < r < 1, got {r}")));
    }
    if g.dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            got: g.dim(),
        });
    }
    let spec = SliceSpec::new(g.clone(), alpha.clone())?;
    let ball = space.unit_ball();
    let ball_vertices = ball.vertices()?;
    let (slice, s) = cut(&ball, &ball_vertices, &spec)?;
    let dual = space.dual_ball_vertices();
    let step = Scalar::one() - r;
    let d = space.dim();

    let support_vertex = ball_vertices.support(g)?.1;
    let mut last_rank = d;
    let mut kernel_found = false;
    let mut candidates = vec![(BasePoint::SupportVertex, support_vertex)];
    let mut low_activity_tried = false;
    while let Some((base_point, x)) = candidates.pop() {
        let active: Vec<Vector> = dual
            .vertices()
            .iter()
            .filter(|phi| phi.dot(&x) > *r)
            .cloned()
            .collect();
        let mut rows = active.clone();
        rows.push(g.clone());
        let m = Matrix::new(rows, d)?;
        last_rank = m.rank();
        for b in nullspace_basis(&m) {
            kernel_found = true;
            let y = b.scale(&space.norm_unchecked(&b).recip().expect("nonzero kernel vector"));
            let plus = x.add(&y.scale(&step));
            let minus = x.sub(&y.scale(&step));
            let plus_in_slice = slice.contains(&plus)?;
            let minus_in_slice = slice.contains(&minus)?;
            if plus_in_slice && minus_in_slice {
                return Ok(LowerBoundCertificate {
                    space: space.description(),
                    g: g.clone(),
                    alpha: alpha.clone(),
                    r: r.clone(),
                    support_value: s,
                    base_point,
                    x,
                    y,
                    active_set: active,
                    plus,
                    minus,
                    plus_in_slice,
                    minus_in_slice,
                    bound: Scalar::from_integer(2) * &step,
                });
            }
        }
        if !low_activity_tried {
            low_activity_tried = true;
            candidates.push((BasePoint::LowActivityPoint, low_activity_point(&slice, &dual, g, r)?));
        }
    }
    if kernel_found {
        Err(Error::CertificateFailed)
    } else {
        Err(Error::DimensionTooSmall { rank: last_rank, dim: d })
    }
}

/// A point of `slice` that satisfies `phi.x <= r` for a greedily grown set of
/// dual-ball vertices, visited in ascending `phi.g` order (least aligned with
/// the slicing functional first).
fn low_activity_point(
    slice: &HPolytope,
    dual: &VPolytope,
    g: &Vector,
    r: &Scalar,
) -> Result<Vector> {
    let mut order: Vec<(Scalar, &Vector)> = dual.vertices().iter().map(|phi| (phi.dot(g), phi)).collect();
    order.sort();
    let mut constraints = slice.halfspaces().to_vec();
    let mut witness = lp_feasible(slice.dim(), &constraints, &[])?
        .ok_or_else(|| Error::InvalidArgument("slice is empty".into()))?;
    for (_, phi) in order {
        constraints.push(HalfSpace::new(phi.clone(), r.clone())?);
        match lp_feasible(slice.dim(), &constraints, &[])? {
            Some(w) => witness = w,
            None => {
                constraints.pop();
            }
        }
    }
    Ok(witness)
}

/// A seeded floating-point lower bound on the diameter of `p`: the largest
/// norm distance between pairs of random convex combinations of its vertices.
/// The result is the exact rational value of the `f64` maximum.
pub fn sample_diameter_lower_bound(
    p: &HPolytope,
    space: &PolyhedralNormSpace,
    trials: usize,
    seed: u64,
) -> Result<Scalar> {
    let verts = p.vertices()?;
    sample_vertices_lower_bound(&verts, space, trials, seed)
}

pub fn sample_vertices_lower_bound(
    verts: &VPolytope,
    space: &PolyhedralNormSpace,
    trials: usize,
    seed: u64,
) -> Result<Scalar> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let pts: Vec<Vec<f64>> = verts.vertices().iter().map(Vector::to_f64).collect();
    let gens: Vec<Vec<f64>> = space.generators().iter().map(Vector::to_f64).collect();
    let d = verts.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        let k = rng.gen_range(1..=3usize);
        let picks: Vec<(usize, f64)> = (0..k)
            .map(|_| (rng.gen_range(0..pts.len()), rng.gen::<f64>() + f64::EPSILON))
            .collect();
        let total: f64 = picks.iter().map(|(_, w)| w).sum();
        let mut x = vec![0.0; d];
        for (i, w) in picks {
            for (xc, pc) in x.iter_mut().zip(&pts[i]) {
                *xc += w / total * pc;
            }
        }
        x
    };
    let mut best = 0.0f64;
    for _ in 0..trials {
        let a = sample(&mut rng);
        let b = sample(&mut rng);
        let diff: Vec<f64> = a.iter().zip(&b).map(|(u, v)| u - v).collect();
        let n = gens
            .iter()
            .map(|g| g.iter().zip(&diff).map(|(p, q)| p * q).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max);
        best = best.max(n);
    }
    Ok(Scalar::from_f64(best).expect("finite"))
}
