//! The named experiments: each builds a space, computes exact quantities and
//! records every checked inequality as a [`ReportRow`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::norms::{make_space_ii, make_space_vii, make_space_vii_default, reference_product_norm, PolyhedralNormSpace};
use crate::polytope::extreme_points;
use crate::report::{Relation, Report, ReportRow};
use crate::scalar::Scalar;
use crate::slice::{
    diameter_of_vertices, prop2_certificate, reference_diameter, sample_vertices_lower_bound,
    DiameterResult, SliceSpec, make_slice,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExperimentKind {
    #[serde(rename = "thm1")]
    Thm1,
    #[serde(rename = "prop2")]
    Prop2,
    #[serde(rename = "prop3")]
    Prop3,
    #[serde(rename = "verify-ext")]
    VerifyExt,
    #[serde(rename = "sandwich")]
    Sandwich,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::Thm1 => "thm1",
            ExperimentKind::Prop2 => "prop2",
            ExperimentKind::Prop3 => "prop3",
            ExperimentKind::VerifyExt => "verify-ext",
            ExperimentKind::Sandwich => "sandwich",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown experiment {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OmegaRule {
    /// `omega_n = 1 - 1/(6n)`.
    #[default]
    Default,
    /// The explicit `omega` list of the config.
    List,
}

/// Everything a run depends on. Identical configs produce byte-identical
/// reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    #[serde(rename = "N", default = "default_n")]
    pub n: usize,
    /// Run the experiment for each of these `N` instead of `n`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sweep: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub epsilons: Vec<Scalar>,
    #[serde(default)]
    pub omega_rule: OmegaRule,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omega: Vec<Scalar>,
    /// Slicing functional for prop2: `e1`, `e1+e2`, `beta`, `random`, or an
    /// explicit comma-separated rational list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Scalar>,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<String>,
    #[serde(default)]
    pub format: OutputFormat,
}

fn default_n() -> usize {
    2
}

fn default_trials() -> usize {
    1000
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentKind, n: usize) -> Self {
        ExperimentConfig {
            experiment,
            n,
            sweep: Vec::new(),
            r: None,
            delta: None,
            epsilon: None,
            epsilons: Vec::new(),
            omega_rule: OmegaRule::Default,
            omega: Vec::new(),
            g: None,
            alpha: None,
            trials: default_trials(),
            seed: 0,
            output_path: None,
            format: OutputFormat::Json,
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("config: {e}")))
    }

    fn require(&self, what: &str, v: &Option<Scalar>) -> Result<Scalar> {
        v.clone().ok_or_else(|| {
            Error::InvalidArgument(format!("experiment {} needs --{what}", self.experiment))
        })
    }
}

/// Slicing functional description for prop2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GSpec {
    /// Sum of the listed 1-based sequence coordinate functionals.
    Coordinates(Vec<usize>),
    Beta,
    Random,
    Explicit(Vec<Scalar>),
}

impl FromStr for GSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "random" => return Ok(GSpec::Random),
            "beta" => return Ok(GSpec::Beta),
            _ => {}
        }
        if s.starts_with('e') {
            let idx = s
                .split('+')
                .map(|t| {
                    t.trim()
                        .strip_prefix('e')
                        .and_then(|k| k.parse::<usize>().ok())
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| Error::Parse(format!("bad functional term {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(GSpec::Coordinates(idx));
        }
        let coords = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Scalar>>>()?;
        Ok(GSpec::Explicit(coords))
    }
}

impl GSpec {
    /// The functional on the space-II coordinates `(x(1..n), beta)`.
    pub fn resolve(&self, n: usize, seed: u64) -> Result<Vector> {
        let d = n + 1;
        match self {
            GSpec::Coordinates(idx) => {
                let mut g = Vector::zeros(d);
                for &k in idx {
                    if k > n {
                        return Err(Error::InvalidArgument(format!("e{k} out of range for N = {n}")));
                    }
                    g = g.add(&Vector::unit(d, k - 1));
                }
                Ok(g)
            }
            GSpec::Beta => Ok(Vector::unit(d, n)),
            GSpec::Random => Ok(random_rational_vector(d, &mut ChaCha8Rng::seed_from_u64(seed))),
            GSpec::Explicit(c) => {
                if c.len() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        got: c.len(),
                    });
                }
                Ok(Vector::new(c.clone()))
            }
        }
    }
}

/// Coordinates `p/q` with `p` in `[-20, 20]` and `q` in `[1, 10]`; never the
/// zero vector.
pub fn random_rational_vector(d: usize, rng: &mut ChaCha8Rng) -> Vector {
    loop {
        let v = Vector::new(
            (0..d)
                .map(|_| Scalar::new(rng.gen_range(-20..=20), rng.gen_range(1..=10)))
                .collect(),
        );
        if !v.is_zero() {
            return v;
        }
    }
}

fn two() -> Scalar {
    Scalar::from_integer(2)
}

fn beta_functional(n: usize, r: &Scalar) -> Vector {
    Vector::unit(n + 1, n).scale(&(Scalar::one() + r))
}

fn sampling_slack() -> Scalar {
    Scalar::new(1, 1_000_000_000)
}

/// Slice of the unit ball of `space` together with its vertices and exact
/// diameter.
struct SliceRun {
    vertices: crate::polytope::VPolytope,
    diameter: DiameterResult,
}

fn run_slice(space: &PolyhedralNormSpace, f: Vector, alpha: Scalar) -> Result<SliceRun> {
    let slice = make_slice(space, &SliceSpec::new(f, alpha)?)?;
    let vertices = slice.vertices()?;
    let diameter = diameter_of_vertices(&vertices, space);
    Ok(SliceRun { vertices, diameter })
}

fn push_sampling_row(
    report: &mut Report,
    exp: &str,
    n: usize,
    params: &BTreeMap<String, Scalar>,
    run: &SliceRun,
    space: &PolyhedralNormSpace,
    cfg: &ExperimentConfig,
) -> Result<()> {
    let sampled = sample_vertices_lower_bound(&run.vertices, space, cfg.trials, cfg.seed)?;
    report.push(ReportRow::new(
        exp,
        n,
        params,
        "sampled_diameter",
        sampled,
        Relation::Le,
        &run.diameter.value + &sampling_slack(),
    ));
    Ok(())
}

/// Space II sliced along `beta` at depth `delta`: diameter at most
/// `2r + 3 delta < epsilon`. Defaults `r = epsilon/4`, `delta = epsilon/10`.
pub fn run_thm1(cfg: &ExperimentConfig) -> Result<Report> {
    let n = cfg.n;
    let eps = cfg.require("epsilon", &cfg.epsilon)?;
    if n < 1 {
        return Err(Error::InvalidArgument("thm1 needs N >= 1".into()));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidArgument(format!("epsilon must be positive, got {eps}")));
    }
    let r = cfg.r.clone().unwrap_or_else(|| &eps / &Scalar::from_integer(4));
    let delta = cfg.delta.clone().unwrap_or_else(|| &eps / &Scalar::from_integer(10));
    if !r.is_positive() || r >= &eps / &two() {
        return Err(Error::InvalidArgument(format!("thm1 needs 0 < r < epsilon/2, got r = {r}")));
    }
    let bound = &(two() * &r) + &(Scalar::from_integer(3) * &delta);
    if !delta.is_positive() || bound >= eps {
        return Err(Error::InvalidArgument(format!(
            "thm1 needs delta > 0 and 2r + 3 delta < epsilon, got 2r + 3 delta = {bound}"
        )));
    }
    let space = make_space_ii(n, &r)?;
    let run = run_slice(&space, beta_functional(n, &r), delta.clone())?;
    let params = BTreeMap::from([
        ("epsilon".to_string(), eps.clone()),
        ("r".to_string(), r.clone()),
        ("delta".to_string(), delta.clone()),
    ]);
    let exp = "thm1";
    let mut report = Report::new(cfg.clone());
    let diam = run.diameter.value.clone();
    report.push(ReportRow::new(exp, n, &params, "diameter", diam.clone(), Relation::Le, bound));
    report.push(ReportRow::new(exp, n, &params, "diameter", diam.clone(), Relation::Lt, eps));
    let l1 = reference_diameter(&run.vertices, n)?;
    report.push(ReportRow::new(exp, n, &params, "reference_diameter", l1.clone(), Relation::Le, diam.clone()));
    report.push(ReportRow::new(
        exp,
        n,
        &params,
        "diameter",
        diam,
        Relation::Le,
        &(Scalar::one() + &r) * &l1,
    ));
    push_sampling_row(&mut report, exp, n, &params, &run, &space, cfg)?;
    report.note("slice_vertices", run.diameter.vertex_count);
    report.artifact("diameter", &run.diameter);
    Ok(report)
}

/// Kernel-direction certificate on space II, cross-checked by the exact
/// diameter of the same slice.
pub fn run_prop2(cfg: &ExperimentConfig) -> Result<Report> {
    let n = cfg.n;
    let r = cfg.require("r", &cfg.r)?;
    if !r.is_positive() || r >= Scalar::one() {
        return Err(Error::InvalidArgument(format!("prop2 needs 0 < r < 1, got {r}")));
    }
    let alpha = cfg.alpha.clone().unwrap_or_else(|| Scalar::new(1, 2));
    let gspec: GSpec = cfg.g.as_deref().unwrap_or("e1").parse()?;
    let space = make_space_ii(n, &r)?;
    let g = gspec.resolve(n, cfg.seed)?;
    let bound = two() * &(Scalar::one() - &r);
    let mut params = BTreeMap::from([("r".to_string(), r.clone()), ("alpha".to_string(), alpha.clone())]);
    for (i, c) in g.coords().iter().enumerate() {
        params.insert(format!("g{}", i + 1), c.clone());
    }
    let exp = "prop2";
    let mut report = Report::new(cfg.clone());
    let run = run_slice(&space, g.clone(), alpha.clone())?;
    let diam = run.diameter.value.clone();

    match prop2_certificate(&space, &g, &alpha, &r) {
        Ok(cert) => {
            let one = Scalar::one();
            let threshold = &cert.support_value - &alpha;
            report.push(ReportRow::new(exp, n, &params, "norm(x+(1-r)y)", space.norm(&cert.plus)?, Relation::Le, one.clone()));
            report.push(ReportRow::new(exp, n, &params, "norm(x-(1-r)y)", space.norm(&cert.minus)?, Relation::Le, one.clone()));
            report.push(ReportRow::new(exp, n, &params, "g(x+(1-r)y)", g.dot(&cert.plus), Relation::Ge, threshold.clone()));
            report.push(ReportRow::new(exp, n, &params, "g(x-(1-r)y)", g.dot(&cert.minus), Relation::Ge, threshold));
            report.push(ReportRow::new(exp, n, &params, "norm(y)", space.norm(&cert.y)?, Relation::Eq, one.clone()));
            report.push(ReportRow::new(
                exp,
                n,
                &params,
                "certificate_distance",
                space.norm(&cert.plus.sub(&cert.minus))?,
                Relation::Ge,
                bound.clone(),
            ));
            let reverified = if cert.verify()? { one.clone() } else { Scalar::zero() };
            report.push(ReportRow::new(exp, n, &params, "certificate_reverified", reverified, Relation::Eq, one));
            report.push(ReportRow::new(exp, n, &params, "diameter", diam.clone(), Relation::Ge, bound.clone()));
            report.note("outcome", "certificate");
            report.note("base_point", serde_json::to_value(cert.base_point)?.as_str().unwrap_or(""));
            report.artifact("certificate", &cert);
        }
        Err(Error::DimensionTooSmall { rank, dim }) => {
            report.push(ReportRow::new(
                exp,
                n,
                &params,
                "kernel_dimension",
                Scalar::from_integer((dim - rank) as i64),
                Relation::Ge,
                Scalar::one(),
            ));
            report.note("outcome", "dimension_too_small");
        }
        Err(Error::CertificateFailed) => {
            report.push(ReportRow::new(exp, n, &params, "certificate_found", Scalar::zero(), Relation::Eq, Scalar::one()));
            report.push(ReportRow::new(exp, n, &params, "diameter", diam.clone(), Relation::Ge, bound.clone()));
            report.note("outcome", "certificate_failed");
        }
        Err(e) => return Err(e),
    }
    report.push(ReportRow::new(exp, n, &params, "diameter", diam, Relation::Le, two()));
    push_sampling_row(&mut report, exp, n, &params, &run, &space, cfg)?;
    report.artifact("diameter", &run.diameter);

    // Smallest truncation with a certificate, with g restricted to the first
    // N' sequence coordinates plus beta.
    let mut min_n = None;
    for m in 1..=n {
        let mut coords: Vec<Scalar> = g.coords()[..m].to_vec();
        coords.push(g[n].clone());
        let gm = Vector::new(coords);
        if gm.is_zero() {
            continue;
        }
        let sm = make_space_ii(m, &r)?;
        match prop2_certificate(&sm, &gm, &alpha, &r) {
            Ok(_) => {
                min_n = Some(m);
                break;
            }
            Err(Error::DimensionTooSmall { .. }) | Err(Error::CertificateFailed) => {}
            Err(e) => return Err(e),
        }
    }
    report.note("min_certified_n", min_n.map_or("none".to_string(), |m| m.to_string()));
    Ok(report)
}

fn space_vii_for(cfg: &ExperimentConfig) -> Result<PolyhedralNormSpace> {
    match cfg.omega_rule {
        OmegaRule::Default => make_space_vii_default(cfg.n),
        OmegaRule::List => make_space_vii(cfg.n, &cfg.omega),
    }
}

/// Space VII sliced along `e1*` at each depth: diameters at most `6 eps`,
/// nonincreasing, and every slice vertex has `max_{n>=2} |x(n)| <= 3 eps`.
pub fn run_prop3(cfg: &ExperimentConfig) -> Result<Report> {
    let n = cfg.n;
    if n < 2 {
        return Err(Error::InvalidArgument("prop3 needs N >= 2".into()));
    }
    let eps_list = if cfg.epsilons.is_empty() {
        vec![cfg.require("epsilons", &cfg.epsilon)?]
    } else {
        cfg.epsilons.clone()
    };
    if eps_list.iter().any(|e| !e.is_positive()) || eps_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument("epsilons must be positive and strictly decreasing".into()));
    }
    let space = space_vii_for(cfg)?;
    let e1 = Vector::unit(n, 0);
    let exp = "prop3";
    let mut report = Report::new(cfg.clone());
    let mut prev: Option<Scalar> = None;
    let mut holds_4 = true;
    let mut max_ratio = Scalar::zero();
    let mut profile = Vec::new();
    for eps in &eps_list {
        let params = BTreeMap::from([("epsilon".to_string(), eps.clone())]);
        let run = run_slice(&space, e1.clone(), eps.clone())?;
        let diam = run.diameter.value.clone();
        let six = Scalar::from_integer(6) * eps;
        report.push(ReportRow::new(exp, n, &params, "diameter", diam.clone(), Relation::Le, six));
        let ratio = &diam / eps;
        report.push(ReportRow::new(exp, n, &params, "diameter/epsilon", ratio.clone(), Relation::Le, Scalar::from_integer(6)));
        holds_4 &= diam <= Scalar::from_integer(4) * eps;
        max_ratio = max_ratio.max(ratio);
        if let Some(p) = &prev {
            report.push(ReportRow::new(exp, n, &params, "diameter", diam.clone(), Relation::Le, p.clone()));
        }
        prev = Some(diam);
        let tail = run
            .vertices
            .vertices()
            .iter()
            .flat_map(|v| v.coords()[1..].iter().map(Scalar::abs))
            .max()
            .unwrap_or_else(Scalar::zero);
        report.push(ReportRow::new(exp, n, &params, "max_vertex_tail", tail, Relation::Le, Scalar::from_integer(3) * eps));
        let head = run
            .vertices
            .vertices()
            .iter()
            .map(|v| v[0].clone())
            .min()
            .expect("slice has vertices");
        report.push(ReportRow::new(exp, n, &params, "min_vertex_x1", head, Relation::Ge, Scalar::one() - eps));
        push_sampling_row(&mut report, exp, n, &params, &run, &space, cfg)?;
        profile.push((eps.clone(), run.diameter));
    }
    report.note("holds_4eps", holds_4);
    report.note("max_ratio", &max_ratio);
    report.artifact("profile", &profile);
    Ok(report)
}

/// The generators of space II are exactly the extreme points of their hull,
/// and an injected interior point is discarded.
pub fn run_verify_ext(cfg: &ExperimentConfig) -> Result<Report> {
    let n = cfg.n;
    let r = cfg.require("r", &cfg.r)?;
    let space = make_space_ii(n, &r)?;
    let mut gens = space.generators().to_vec();
    gens.sort();
    let ext = extreme_points(&gens)?;
    let params = BTreeMap::from([("r".to_string(), r.clone())]);
    let exp = "verify-ext";
    let mut report = Report::new(cfg.clone());
    let count = |k: usize| Scalar::from_integer(k as i64);
    report.push(ReportRow::new(exp, n, &params, "extreme_points", count(ext.len()), Relation::Eq, count(4 * n + 2)));
    let dropped = gens.iter().filter(|g| !ext.vertices().contains(g)).count();
    let added = ext.vertices().iter().filter(|v| !gens.contains(v)).count();
    report.push(ReportRow::new(exp, n, &params, "dropped_generators", count(dropped), Relation::Eq, count(0)));
    report.push(ReportRow::new(exp, n, &params, "added_points", count(added), Relation::Eq, count(0)));
    let midpoint = Vector::unit(n + 1, n);
    let mut with_mid = gens.clone();
    with_mid.push(midpoint.clone());
    let ext_mid = extreme_points(&with_mid)?;
    let kept = if ext_mid.vertices().contains(&midpoint) { 1 } else { 0 };
    report.push(ReportRow::new(exp, n, &params, "midpoint_kept", count(kept), Relation::Eq, count(0)));
    report.push(ReportRow::new(exp, n, &params, "extreme_points_with_midpoint", count(ext_mid.len()), Relation::Eq, count(4 * n + 2)));
    report.artifact("extreme_points", &ext.vertices());
    Ok(report)
}

/// `||z||_1 <= |||z||| <= (1 + r)||z||_1` on random rational vectors, plus
/// the zero vector and the tight case `e_beta`.
pub fn run_sandwich(cfg: &ExperimentConfig) -> Result<Report> {
    let n = cfg.n;
    let r = cfg.require("r", &cfg.r)?;
    if cfg.trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let space = make_space_ii(n, &r)?;
    let d = n + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut points: Vec<Vector> = vec![Vector::zeros(d), Vector::unit(d, n)];
    points.extend((0..cfg.trials).map(|_| random_rational_vector(d, &mut rng)));

    let upper = Scalar::one() + &r;
    let mut lower_violations = 0usize;
    let mut upper_violations = 0usize;
    let mut min_ratio: Option<Scalar> = None;
    let mut max_ratio: Option<Scalar> = None;
    for z in &points {
        let l1 = reference_product_norm(z, n)?;
        let nz = space.norm(z)?;
        if l1 > nz {
            lower_violations += 1;
        }
        if nz > &upper * &l1 {
            upper_violations += 1;
        }
        if !l1.is_zero() {
            let ratio = &nz / &l1;
            if min_ratio.as_ref().is_none_or(|m| ratio < *m) {
                min_ratio = Some(ratio.clone());
            }
            if max_ratio.as_ref().is_none_or(|m| ratio > *m) {
                max_ratio = Some(ratio);
            }
        }
    }
    let params = BTreeMap::from([("r".to_string(), r.clone())]);
    let exp = "sandwich";
    let count = |k: usize| Scalar::from_integer(k as i64);
    let mut report = Report::new(cfg.clone());
    report.push(ReportRow::new(exp, n, &params, "vectors_checked", count(points.len()), Relation::Eq, count(cfg.trials + 2)));
    report.push(ReportRow::new(exp, n, &params, "lower_violations", count(lower_violations), Relation::Eq, count(0)));
    report.push(ReportRow::new(exp, n, &params, "upper_violations", count(upper_violations), Relation::Eq, count(0)));
    report.push(ReportRow::new(exp, n, &params, "min_ratio", min_ratio.expect("e_beta is nonzero"), Relation::Ge, Scalar::one()));
    report.push(ReportRow::new(exp, n, &params, "max_ratio", max_ratio.expect("e_beta is nonzero"), Relation::Le, upper.clone()));
    report.push(ReportRow::new(exp, n, &params, "norm(0)", space.norm(&points[0])?, Relation::Eq, Scalar::zero()));
    report.push(ReportRow::new(exp, n, &params, "norm(e_beta)", space.norm(&points[1])?, Relation::Eq, upper));
    Ok(report)
}

/// Runs one config, or every `N` of its sweep concurrently with rows in sweep
/// order.
pub fn run(cfg: &ExperimentConfig) -> Result<Report> {
    if cfg.sweep.is_empty() {
        return run_single(cfg);
    }
    let parts: Vec<Result<Report>> = cfg
        .sweep
        .par_iter()
        .map(|&n| {
            let mut c = cfg.clone();
            c.n = n;
            c.sweep.clear();
            run_single(&c)
        })
        .collect();
    let mut report = Report::new(cfg.clone());
    for (n, part) in cfg.sweep.iter().zip(parts) {
        report.absorb(part?, &format!("N={n}/"));
    }
    Ok(report)
}

fn run_single(cfg: &ExperimentConfig) -> Result<Report> {
    match cfg.experiment {
        ExperimentKind::Thm1 => run_thm1(cfg),
        ExperimentKind::Prop2 => run_prop2(cfg),
        ExperimentKind::Prop3 => run_prop3(cfg),
        ExperimentKind::VerifyExt => run_verify_ext(cfg),
        ExperimentKind::Sandwich => run_sandwich(cfg),
    }
}
