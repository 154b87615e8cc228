//! Polyhedral norms `|||x||| = max_{phi in Phi} phi.x` and the two concrete
//! families built from truncated `c0` sequences.
//!
//! Coordinate layout for the `c0 (+) R` family: `x(1..N)` first, the scalar
//! coordinate `beta` last.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::polytope::{extreme_points, HPolytope, HalfSpace, VPolytope};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralNormSpace {
    dim: usize,
    generators: Vec<Vector>,
    label: String,
    params: BTreeMap<String, Scalar>,
}

impl PolyhedralNormSpace {
    /// A norm from an explicit generator set, which must be closed under
    /// negation and span the dual.
    pub fn custom(generators: Vec<Vector>, label: impl Into<String>) -> Result<Self> {
        let dim = generators
            .first()
            .map(Vector::dim)
            .ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        let m = Matrix::new(generators.clone(), dim)?;
        let set: BTreeSet<&Vector> = generators.iter().collect();
        if let Some(g) = generators.iter().find(|g| !set.contains(&g.neg())) {
            return Err(Error::InvalidArgument(format!(
                "generator set is not symmetric: missing -{g:?}"
            )));
        }
        let rank = m.rank();
        if rank < dim {
            return Err(Error::InvalidArgument(format!(
                "generators span rank {rank} < dimension {dim}"
            )));
        }
        Ok(PolyhedralNormSpace {
            dim,
            generators,
            label: label.into(),
            params: BTreeMap::new(),
        })
    }

    fn with_params(mut self, params: impl IntoIterator<Item = (String, Scalar)>) -> Self {
        self.params.extend(params);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> &BTreeMap<String, Scalar> {
        &self.params
    }

    fn check(&self, x: &Vector) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        Ok(())
    }

    pub fn norm(&self, x: &Vector) -> Result<Scalar> {
        self.check(x)?;
        Ok(self.norm_unchecked(x))
    }

    pub(crate) fn norm_unchecked(&self, x: &Vector) -> Scalar {
        self.generators
            .iter()
            .map(|g| g.dot(x))
            .max()
            .expect("generator set is nonempty")
    }

    /// `{x : phi.x <= 1 for every generator}`.
    pub fn unit_ball(&self) -> HPolytope {
        let hs = self
            .generators
            .iter()
            .map(|g| HalfSpace::new(g.clone(), Scalar::one()).expect("symmetric spanning set has no zero generator"))
            .collect();
        HPolytope::new(self.dim, hs).expect("generators share the dimension")
    }

    /// The extreme points of `conv(Phi)`, i.e. the vertices of the dual ball.
    pub fn dual_ball_vertices(&self) -> VPolytope {
        extreme_points(&self.generators).expect("generators are nonempty and share the dimension")
    }

    /// The dual-ball vertices attaining the norm at `x`.
    pub fn attaining_set(&self, x: &Vector) -> Result<FaceSet> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::InvalidArgument("attaining set of the zero vector".into()));
        }
        let n = self.norm_unchecked(x);
        let attaining = self
            .dual_ball_vertices()
            .vertices()
            .iter()
            .filter(|phi| phi.dot(x) == n)
            .cloned()
            .collect();
        Ok(FaceSet {
            point: x.clone(),
            attaining,
        })
    }

    pub fn description(&self) -> SpaceDescription {
        let kind = match self.label.as_str() {
            "II" => SpaceKind::II,
            "VII" => SpaceKind::VII,
            _ => SpaceKind::Custom,
        };
        let n = self.params.get("N").map(|s| s.numer().try_into().unwrap_or(0));
        let omega: Vec<Scalar> = (2..)
            .map_while(|k| self.params.get(&format!("omega_{k}")).cloned())
            .collect();
        SpaceDescription {
            kind,
            n,
            r: self.params.get("r").cloned(),
            omega: if omega.is_empty() { None } else { Some(omega) },
            generators: Some(self.generators.clone()),
        }
    }
}

/// The face of the dual ball exposed by `point`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSet {
    pub point: Vector,
    pub attaining: Vec<Vector>,
}

/// The `c0 (+) R` norm `max{ ||x||_inf + |beta|, (1 + r)|beta| }` truncated
/// to `n` sequence coordinates; the dual ball is the hull of the `l1 (+)_inf R`
/// dual ball and `(0, +-(1 + r))`.
pub fn make_space_ii(n: usize, r: &Scalar) -> Result<PolyhedralNormSpace> {
    if n < 1 {
        return Err(Error::InvalidArgument("space II needs N >= 1".into()));
    }
    if !r.is_positive() {
        return Err(Error::InvalidArgument(format!("space II needs r > 0, got {r}")));
    }
    let d = n + 1;
    let top = Scalar::one() + r;
    let mut gens = Vec::with_capacity(4 * n + 2);
    for sign in [Scalar::one(), -Scalar::one()] {
        let mut g = Vector::zeros(d).into_coords();
        g[n] = &sign * &top;
        gens.push(Vector::new(g));
    }
    for k in 0..n {
        for xi in [1, -1] {
            for psi in [1, -1] {
                let mut g = Vector::zeros(d).into_coords();
                g[k] = Scalar::from_integer(xi);
                g[n] = Scalar::from_integer(psi);
                gens.push(Vector::new(g));
            }
        }
    }
    Ok(PolyhedralNormSpace::custom(gens, "II")?.with_params([
        ("N".to_string(), Scalar::from_integer(n as i64)),
        ("r".to_string(), r.clone()),
    ]))
}

/// The default weight `omega_n = 1 - 1/(6n)`.
pub fn default_omega(n: usize) -> Scalar {
    Scalar::one() - Scalar::new(1, 6 * n as i64)
}

/// `max_{n>=2} max{ |x(n)|, |x(1)| + |x(n)|/3, omega_n |x(1)| + |x(n)|/2 }`
/// on `Q^n`. `omega[k]` is the weight for coordinate `k + 2`.
pub fn make_space_vii(n: usize, omega: &[Scalar]) -> Result<PolyhedralNormSpace> {
    if n < 2 {
        return Err(Error::InvalidArgument("space VII needs N >= 2".into()));
    }
    if omega.len() != n - 1 {
        return Err(Error::InvalidArgument(format!(
            "space VII with N = {n} needs {} weights, got {}",
            n - 1,
            omega.len()
        )));
    }
    let lo = Scalar::new(5, 6);
    if let Some(w) = omega.iter().find(|w| **w <= lo || **w > Scalar::one()) {
        return Err(Error::InvalidArgument(format!("omega {w} outside (5/6, 1]")));
    }
    let third = Scalar::new(1, 3);
    let half = Scalar::new(1, 2);
    let mut gens = Vec::with_capacity(10 * (n - 1));
    for (k, w) in (1..n).zip(omega) {
        for s in [1, -1] {
            let s = Scalar::from_integer(s);
            let mut g = Vector::zeros(n).into_coords();
            g[k] = s;
            gens.push(Vector::new(g));
        }
        for a in [1, -1] {
            for b in [1, -1] {
                let (a, b) = (Scalar::from_integer(a), Scalar::from_integer(b));
                let mut g = Vector::zeros(n).into_coords();
                g[0] = a.clone();
                g[k] = &b * &third;
                gens.push(Vector::new(g));
                let mut g = Vector::zeros(n).into_coords();
                g[0] = &a * w;
                g[k] = &b * &half;
                gens.push(Vector::new(g));
            }
        }
    }
    let params = std::iter::once(("N".to_string(), Scalar::from_integer(n as i64))).chain(
        omega
            .iter()
            .enumerate()
            .map(|(i, w)| (format!("omega_{}", i + 2), w.clone())),
    );
    Ok(PolyhedralNormSpace::custom(gens, "VII")?.with_params(params))
}

/// Space VII with the default weights.
pub fn make_space_vii_default(n: usize) -> Result<PolyhedralNormSpace> {
    let omega: Vec<Scalar> = (2..=n).map(default_omega).collect();
    make_space_vii(n, &omega)
}

/// `max_{n != split} |x(n)| + |x(split)|`: the `l1`-sum of the sup norm on the
/// sequence part and the absolute value on the coordinate `split`.
pub fn reference_product_norm(x: &Vector, split: usize) -> Result<Scalar> {
    if split >= x.dim() {
        return Err(Error::InvalidArgument(format!(
            "split index {split} out of range for dimension {}",
            x.dim()
        )));
    }
    let sup = x
        .coords()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != split)
        .map(|(_, c)| c.abs())
        .max()
        .unwrap_or_else(Scalar::zero);
    Ok(sup + x[split].abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceKind {
    II,
    VII,
    #[serde(rename = "custom")]
    Custom,
}

/// JSON space description: either a named family with parameters or an
/// explicit generator list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDescription {
    pub kind: SpaceKind,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vector>>,
}

impl SpaceDescription {
    pub fn build(&self) -> Result<PolyhedralNormSpace> {
        let need_n = || {
            self.n
                .ok_or_else(|| Error::InvalidArgument("space description needs \"N\"".into()))
        };
        match self.kind {
            SpaceKind::II => {
                let r = self
                    .r
                    .as_ref()
                    .ok_or_else(|| Error::InvalidArgument("space II needs \"r\"".into()))?;
                make_space_ii(need_n()?, r)
            }
            SpaceKind::VII => match &self.omega {
                Some(omega) => make_space_vii(need_n()?, omega),
                None => make_space_vii_default(need_n()?),
            },
            SpaceKind::Custom => {
                let gens = self.generators.clone().ok_or_else(|| {
                    Error::InvalidArgument("custom space needs \"generators\"".into())
                })?;
                PolyhedralNormSpace::custom(gens, "custom")
            }
        }
    }
}
