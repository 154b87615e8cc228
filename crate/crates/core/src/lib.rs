//! Exact finite-dimensional polyhedral norm laboratory.
//!
//! Rational arithmetic throughout: polytopes in H- and V-representation,
//! vertex enumeration, polyhedral norms built from a symmetric generator set,
//! slices of their unit balls, exact slice diameters, kernel-direction lower
//! bound certificates, and the experiment runners used by the CLI.

mod enumerate;
pub mod error;
pub mod experiments;
pub mod linalg;
pub mod lp;
pub mod norms;
pub mod polytope;
pub mod report;
pub mod scalar;
pub mod slice;

pub use error::{Error, Result};
pub use linalg::{nullspace_basis, solve_linear_system, Matrix, Vector};
pub use lp::lp_feasible;
pub use norms::{
    default_omega, make_space_ii, make_space_vii, make_space_vii_default, reference_product_norm,
    FaceSet, PolyhedralNormSpace, SpaceDescription, SpaceKind,
};
pub use polytope::{extreme_points, HPolytope, HalfSpace, PolytopeJson, VPolytope};
pub use scalar::{q, Scalar};
