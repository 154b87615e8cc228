//! Bounded polytopes in H- and V-representation.

use serde::{Deserialize, Serialize};

use crate::enumerate::basic_feasible_points;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::lp::{feasible_standard_form, lp_feasible};
use crate::scalar::Scalar;

/// The closed halfspace `a.x <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpace {
    a: Vector,
    b: Scalar,
}

impl HalfSpace {
    pub fn new(a: Vector, b: Scalar) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidArgument("halfspace normal is zero".into()));
        }
        Ok(HalfSpace { a, b })
    }

    pub fn normal(&self) -> &Vector {
        &self.a
    }

    pub fn offset(&self) -> &Scalar {
        &self.b
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.a.dot(x) <= self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
}

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        if let Some(h) = halfspaces.iter().find(|h| h.a.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: h.a.dim(),
            });
        }
        Ok(HPolytope { dim, halfspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    /// Closed membership: boundary points are inside.
    pub fn contains(&self, x: &Vector) -> Result<bool> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        Ok(self.halfspaces.iter().all(|h| h.contains(x)))
    }

    /// Adds a halfspace; the result has the same dimension.
    pub fn with_halfspace(&self, h: HalfSpace) -> Result<Self> {
        let mut halfspaces = self.halfspaces.clone();
        halfspaces.push(h);
        HPolytope::new(self.dim, halfspaces)
    }

    /// True iff the recession cone `{x : a.x <= 0 for all a}` is `{0}`.
    /// A nonzero recession direction has some coordinate that can be scaled
    /// to `+1` or `-1`, so `2 * dim` feasibility problems decide it.
    pub fn is_bounded(&self) -> bool {
        let cone: Vec<HalfSpace> = self
            .halfspaces
            .iter()
            .map(|h| HalfSpace {
                a: h.a.clone(),
                b: Scalar::zero(),
            })
            .collect();
        for i in 0..self.dim {
            for sign in [1, -1] {
                let dir = Vector::unit(self.dim, i).scale(&Scalar::from_integer(sign));
                let hit = lp_feasible(self.dim, &cone, &[(dir, Scalar::one())])
                    .expect("dimensions already validated");
                if hit.is_some() {
                    return false;
                }
            }
        }
        true
    }

    /// Vertex enumeration by brute force over `dim`-subsets of halfspaces.
    ///
    /// Fails with [`Error::Unbounded`] if the halfspaces admit a recession
    /// direction and with [`Error::Degenerate`] if the vertices do not span a
    /// full-dimensional body (including the empty polytope).
    pub fn vertices(&self) -> Result<VPolytope> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        let vertices = basic_feasible_points(&self.halfspaces, self.dim);
        let affine_dim = affine_dimension(&vertices);
        if affine_dim < self.dim {
            return Err(Error::Degenerate {
                vertices: vertices.len(),
                affine_dim,
                dim: self.dim,
            });
        }
        Ok(VPolytope {
            dim: self.dim,
            vertices,
        })
    }
}

fn affine_dimension(points: &[Vector]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vector> = points[1..].iter().map(|p| p.sub(first)).collect();
    if diffs.is_empty() {
        return 0;
    }
    Matrix::from_rows(diffs).map(|m| m.rank()).unwrap_or(0)
}

/// A polytope given by its vertices, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Vector>,
}

impl VPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `max f.v` over the vertices, with the lexicographically smallest
    /// maximizer.
    pub fn support(&self, f: &Vector) -> Result<(Scalar, Vector)> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: f.dim(),
            });
        }
        let mut best: Option<(Scalar, &Vector)> = None;
        // Vertices are sorted, so keeping the first maximum is the lex-smallest.
        for v in &self.vertices {
            let val = f.dot(v);
            if best.as_ref().is_none_or(|(b, _)| val > *b) {
                best = Some((val, v));
            }
        }
        let (val, v) = best.ok_or_else(|| Error::InvalidArgument("support of an empty polytope".into()))?;
        Ok((val, v.clone()))
    }

    /// Whether `x` is a convex combination of the vertices.
    pub fn hull_contains(&self, x: &Vector) -> Result<bool> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        let refs: Vec<&Vector> = self.vertices.iter().collect();
        Ok(in_convex_hull(&refs, x))
    }
}

/// `x in conv(points)`, decided by exact LP over barycentric weights.
fn in_convex_hull(points: &[&Vector], x: &Vector) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = points.len();
    let mut rows = Vec::with_capacity(x.dim() + 1);
    let mut rhs = Vec::with_capacity(x.dim() + 1);
    rows.push(vec![Scalar::one(); n]);
    rhs.push(Scalar::one());
    for c in 0..x.dim() {
        rows.push(points.iter().map(|p| p[c].clone()).collect());
        rhs.push(x[c].clone());
    }
    feasible_standard_form(rows, rhs, n).is_some()
}

/// The points of `points` that are not convex combinations of the others,
/// deduplicated and sorted.
pub fn extreme_points(points: &[Vector]) -> Result<VPolytope> {
    let first = points
        .first()
        .ok_or_else(|| Error::InvalidArgument("extreme_points needs at least one point".into()))?;
    let dim = first.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: p.dim(),
        });
    }
    let mut uniq = points.to_vec();
    uniq.sort();
    uniq.dedup();
    let vertices = uniq
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            let others: Vec<&Vector> = uniq
                .iter()
                .enumerate()
                .filter(|(j, _)| j != i)
                .map(|(_, q)| q)
                .collect();
            !in_convex_hull(&others, p)
        })
        .map(|(_, p)| p.clone())
        .collect();
    Ok(VPolytope { dim, vertices })
}

/// JSON form shared by H- and V-representations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    #[serde(default)]
    pub halfspaces: Vec<HalfSpace>,
    #[serde(default)]
    pub vertices: Vec<Vector>,
}

impl PolytopeJson {
    pub fn from_h(p: &HPolytope, vertices: Option<&VPolytope>) -> Self {
        PolytopeJson {
            dim: p.dim,
            halfspaces: p.halfspaces.clone(),
            vertices: vertices.map(|v| v.vertices.clone()).unwrap_or_default(),
        }
    }

    pub fn from_v(v: &VPolytope) -> Self {
        PolytopeJson {
            dim: v.dim,
            halfspaces: Vec::new(),
            vertices: v.vertices.clone(),
        }
    }

    pub fn to_h(&self) -> Result<HPolytope> {
        for h in &self.halfspaces {
            if h.a.is_zero() {
                return Err(Error::InvalidArgument("halfspace normal is zero".into()));
            }
        }
        HPolytope::new(self.dim, self.halfspaces.clone())
    }

    /// Reduces the listed points to their extreme points.
    pub fn to_v(&self) -> Result<VPolytope> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidArgument("no vertices listed".into()));
        }
        let v = extreme_points(&self.vertices)?;
        if v.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim,
            });
        }
        Ok(v)
    }
}
