//! Frozen regression values. Each constant was produced by the standalone
//! exact-fraction script `tests/oracle/brute_force.py` and, where cheap, is
//! re-derived here by the test-side brute-force enumerator in `common`.

mod common;

use common::{brute_force_vertices, q};
use polyslice::slice::{diameter, make_slice, prop2_certificate, SliceSpec};
use polyslice::{make_space_ii, make_space_vii, make_space_vii_default, Scalar, Vector};

fn v(xs: &[Scalar]) -> Vector {
    Vector::new(xs.to_vec())
}

fn beta(n: usize, r: &Scalar) -> Vector {
    Vector::unit(n + 1, n).scale(&(Scalar::one() + r))
}

#[test]
fn space_ii_ball_vertices_n2() {
    let s = make_space_ii(2, &q(1, 10)).unwrap();
    let ball = s.unit_ball();
    let got = ball.vertices().unwrap();
    let t = q(1, 11);
    let h = q(10, 11);
    let mut expected = vec![
        v(&[q(-1, 1), q(-1, 1), q(0, 1)]),
        v(&[q(-1, 1), q(1, 1), q(0, 1)]),
        v(&[q(1, 1), q(-1, 1), q(0, 1)]),
        v(&[q(1, 1), q(1, 1), q(0, 1)]),
    ];
    for a in [-&t, t.clone()] {
        for b in [-&t, t.clone()] {
            for c in [-&h, h.clone()] {
                expected.push(v(&[a.clone(), b.clone(), c]));
            }
        }
    }
    expected.sort();
    assert_eq!(got.vertices(), expected.as_slice());
    assert_eq!(brute_force_vertices(&ball), expected);
}

#[test]
fn space_ii_ball_n1_is_hexagon() {
    let s = make_space_ii(1, &q(1, 10)).unwrap();
    assert_eq!(s.unit_ball().vertices().unwrap().len(), 6);
    assert_eq!(brute_force_vertices(&s.unit_ball()).len(), 6);
}

#[test]
fn space_vii_n2_ball() {
    let s = make_space_vii(2, &[q(11, 12)]).unwrap();
    assert_eq!(s.unit_ball().vertices().unwrap().len(), 10);
    assert_eq!(s.norm(&Vector::from_ints(&[1, 1])).unwrap(), q(17, 12));
}

#[test]
fn beta_slice_diameters() {
    // (epsilon, diameter) with r = epsilon/4, delta = epsilon/10; the value
    // does not depend on N.
    let frozen = [(q(1, 2), q(14, 45)), (q(1, 5), q(2, 15)), (q(1, 20), q(14, 405))];
    for (eps, diam) in frozen {
        let r = &eps / &Scalar::from_integer(4);
        let delta = &eps / &Scalar::from_integer(10);
        for n in 1..=3 {
            let s = make_space_ii(n, &r).unwrap();
            let slice = make_slice(&s, &SliceSpec::new(beta(n, &r), delta.clone()).unwrap()).unwrap();
            let res = diameter(&slice, &s).unwrap();
            assert_eq!(res.value, diam, "N = {n}, eps = {eps}");
            assert_eq!(res.vertex_count, 1 << (n + 1));
            assert_eq!(brute_force_vertices(&slice).len(), res.vertex_count);
        }
    }
    let r = q(1, 10);
    let s = make_space_ii(2, &r).unwrap();
    let slice = make_slice(&s, &SliceSpec::new(beta(2, &r), q(1, 40)).unwrap()).unwrap();
    assert_eq!(diameter(&slice, &s).unwrap().value, q(5, 22));
}

#[test]
fn first_coordinate_slice_diameters() {
    // diam = 6 eps exactly for every tested N and eps
    for n in [3, 4] {
        let s = make_space_vii_default(n).unwrap();
        for den in [10, 20, 40, 80] {
            let eps = q(1, den);
            let slice = make_slice(&s, &SliceSpec::new(Vector::unit(n, 0), eps.clone()).unwrap()).unwrap();
            let res = diameter(&slice, &s).unwrap();
            assert_eq!(res.value, &Scalar::from_integer(6) * &eps, "N = {n}, eps = {eps}");
            assert_eq!(brute_force_vertices(&slice).len(), res.vertex_count);
        }
    }
}

#[test]
fn certificate_slice_diameters() {
    for r in [q(1, 10), q(1, 4)] {
        let s = make_space_ii(4, &r).unwrap();
        for (g, verts) in [(Vector::from_ints(&[1, 0, 0, 0, 0]), 32), (Vector::from_ints(&[1, 1, 0, 0, 0]), 20)] {
            let slice = make_slice(&s, &SliceSpec::new(g.clone(), q(1, 2)).unwrap()).unwrap();
            let res = diameter(&slice, &s).unwrap();
            assert_eq!(res.value, q(2, 1));
            assert_eq!(res.vertex_count, verts);
            let cert = prop2_certificate(&s, &g, &q(1, 2), &r).unwrap();
            assert!(cert.is_valid());
            assert!(res.value >= cert.bound);
        }
    }
}
