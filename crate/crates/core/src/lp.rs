//! Exact LP feasibility: a Phase I simplex over rationals with Bland's rule.
//!
//! Everything is solved in standard form `A y = b, y >= 0`. General systems of
//! inequalities and equalities over free variables are translated by splitting
//! each variable as `x = p - q` and adding one slack per inequality.

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::polytope::HalfSpace;
use crate::scalar::Scalar;

/// Decides whether `{a.x <= b for every inequality} and {c.x = d for every
/// equality}` has a solution in `Q^dim`, returning a rational witness if so.
pub fn lp_feasible(
    dim: usize,
    inequalities: &[HalfSpace],
    equalities: &[(Vector, Scalar)],
) -> Result<Option<Vector>> {
    for h in inequalities {
        if h.normal().dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: h.normal().dim(),
            });
        }
    }
    for (c, _) in equalities {
        if c.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: c.dim(),
            });
        }
    }
    let slacks = inequalities.len();
    let width = 2 * dim + slacks;
    let mut rows = Vec::with_capacity(slacks + equalities.len());
    let mut rhs = Vec::with_capacity(rows.capacity());
    for (k, h) in inequalities.iter().enumerate() {
        let mut row = vec![Scalar::zero(); width];
        for (j, a) in h.normal().coords().iter().enumerate() {
            row[j] = a.clone();
            row[dim + j] = -a;
        }
        row[2 * dim + k] = Scalar::one();
        rows.push(row);
        rhs.push(h.offset().clone());
    }
    for (c, d) in equalities {
        let mut row = vec![Scalar::zero(); width];
        for (j, a) in c.coords().iter().enumerate() {
            row[j] = a.clone();
            row[dim + j] = -a;
        }
        rows.push(row);
        rhs.push(d.clone());
    }
    Ok(feasible_standard_form(rows, rhs, width)
        .map(|y| Vector::new((0..dim).map(|j| &y[j] - &y[dim + j]).collect())))
}

/// Finds `y >= 0` with `rows . y = rhs`, or `None` if there is none.
pub(crate) fn feasible_standard_form(
    rows: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
    width: usize,
) -> Option<Vec<Scalar>> {
    let m = rows.len();
    if m == 0 {
        return Some(vec![Scalar::zero(); width]);
    }
    // Columns: [0, width) original, [width, width + m) artificial, then rhs.
    let total = width + m;
    let mut tab: Vec<Vec<Scalar>> = Vec::with_capacity(m);
    for (i, (mut row, b)) in rows.into_iter().zip(rhs).enumerate() {
        let flip = b.is_negative();
        if flip {
            for a in row.iter_mut() {
                *a = -&*a;
            }
        }
        row.resize(total, Scalar::zero());
        row[width + i] = Scalar::one();
        row.push(if flip { -b } else { b });
        tab.push(row);
    }
    let mut basis: Vec<usize> = (width..total).collect();

    // Reduced costs of the Phase I objective (minimize the artificial sum).
    let mut cost = vec![Scalar::zero(); total + 1];
    for row in &tab {
        for j in 0..width {
            if !row[j].is_zero() {
                cost[j] -= &row[j];
            }
        }
        cost[total] -= &row[total];
    }

    while let Some(enter) = (0..total).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Scalar)> = None;
        for i in 0..m {
            let a = &tab[i][enter];
            if !a.is_positive() {
                continue;
            }
            let ratio = &tab[i][total] / a;
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase I is bounded below by zero, so an improving column always has
        // a positive entry.
        let (p, _) = leave.expect("phase I objective is bounded");
        pivot(&mut tab, &mut cost, p, enter);
        basis[p] = enter;
    }

    if !cost[total].is_zero() {
        return None;
    }
    let mut y = vec![Scalar::zero(); width];
    for (i, &b) in basis.iter().enumerate() {
        if b < width {
            y[b] = tab[i][total].clone();
        }
    }
    Some(y)
}

fn pivot(tab: &mut [Vec<Scalar>], cost: &mut [Scalar], p: usize, col: usize) {
    let inv = tab[p][col].recip().expect("pivot entry is nonzero");
    for a in tab[p].iter_mut() {
        if !a.is_zero() {
            *a *= &inv;
        }
    }
    let pivot_row = tab[p].clone();
    let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
    let eliminate = |row: &mut Vec<Scalar>| {
        let f = row[col].clone();
        if f.is_zero() {
            return;
        }
        for &j in &nz {
            let delta = &f * &pivot_row[j];
            row[j] -= &delta;
        }
    };
    for (i, row) in tab.iter_mut().enumerate() {
        if i != p {
            eliminate(row);
        }
    }
    let mut c = cost.to_vec();
    eliminate(&mut c);
    cost.clone_from_slice(&c);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn hs(a: &[i64], b: Scalar) -> HalfSpace {
        HalfSpace::new(Vector::from_ints(a), b).unwrap()
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let cons = [hs(&[1], q(1, 1)), hs(&[-1], q(-2, 1))];
        assert_eq!(lp_feasible(1, &cons, &[]).unwrap(), None);
    }

    #[test]
    fn equality_on_boundary() {
        let w = lp_feasible(1, &[hs(&[1], q(1, 1))], &[(Vector::from_ints(&[1]), q(1, 1))])
            .unwrap()
            .unwrap();
        assert_eq!(w, Vector::from_ints(&[1]));
    }

    #[test]
    fn barycentric_coordinates_exist() {
        // lambda >= 0, sum = 1, lambda_1 (0,0) + lambda_2 (1,0) + lambda_3 (0,1) = (1/4, 1/4)
        let cons: Vec<_> = (0..3)
            .map(|i| {
                let mut a = [0; 3];
                a[i] = -1;
                hs(&a, Scalar::zero())
            })
            .collect();
        let eqs = vec![
            (Vector::from_ints(&[1, 1, 1]), q(1, 1)),
            (Vector::from_ints(&[0, 1, 0]), q(1, 4)),
            (Vector::from_ints(&[0, 0, 1]), q(1, 4)),
        ];
        let w = lp_feasible(3, &cons, &eqs).unwrap().unwrap();
        assert_eq!(w, Vector::new(vec![q(1, 2), q(1, 4), q(1, 4)]));
    }

    #[test]
    fn free_variables_can_go_negative() {
        let w = lp_feasible(2, &[hs(&[1, 1], q(-3, 1))], &[(Vector::from_ints(&[1, -1]), q(0, 1))])
            .unwrap()
            .unwrap();
        assert!(&w[0] + &w[1] <= q(-3, 1));
        assert_eq!(w[0], w[1]);
    }

    #[test]
    fn no_constraints_is_feasible() {
        assert_eq!(lp_feasible(2, &[], &[]).unwrap(), Some(Vector::zeros(2)));
    }

    #[test]
    fn inconsistent_equalities() {
        let eqs = vec![
            (Vector::from_ints(&[1, 1]), q(1, 1)),
            (Vector::from_ints(&[2, 2]), q(3, 1)),
        ];
        assert_eq!(lp_feasible(2, &[], &eqs).unwrap(), None);
    }

    #[test]
    fn dimension_checked() {
        assert!(lp_feasible(3, &[hs(&[1], q(1, 1))], &[]).is_err());
    }
}
