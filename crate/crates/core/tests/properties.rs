mod common;

use common::{brute_force_vertices, q, random_polytope, random_scalar, random_vector, rng, tight_rank};
use polyslice::experiments::{run, ExperimentConfig, ExperimentKind};
use polyslice::slice::{diameter, make_slice, prop2_certificate, SliceSpec};
use polyslice::{
    extreme_points, make_space_ii, make_space_vii_default, nullspace_basis, reference_product_norm,
    solve_linear_system, Matrix, Scalar, Vector,
};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=20).prop_map(|(p, d)| Scalar::new(p, d))
}

proptest! {
    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::zero());
        if let Some(inv) = a.recip() {
            prop_assert_eq!(&a * &inv, Scalar::one());
        }
        let round: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(round, a);
    }

    #[test]
    fn solve_recovers_rhs(seed in any::<u64>(), d in 1usize..=5) {
        let mut g = rng(seed);
        let a = Matrix::from_rows((0..d).map(|_| random_vector(&mut g, d)).collect()).unwrap();
        let b = random_vector(&mut g, d);
        match solve_linear_system(&a, &b) {
            Ok(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
            Err(_) => prop_assert!(a.rank() < d),
        }
    }

    #[test]
    fn nullspace_is_kernel(seed in any::<u64>(), m in 1usize..=4, n in 1usize..=6) {
        let mut g = rng(seed);
        let a = Matrix::from_rows((0..m).map(|_| {
            Vector::new((0..n).map(|_| Scalar::from_integer(rand::Rng::gen_range(&mut g, -2..=2))).collect())
        }).collect()).unwrap();
        let basis = nullspace_basis(&a);
        prop_assert_eq!(basis.len() + a.rank(), n);
        for v in &basis {
            prop_assert!(a.mul_vec(v).unwrap().is_zero());
        }
        if !basis.is_empty() {
            prop_assert_eq!(Matrix::from_rows(basis.clone()).unwrap().rank(), basis.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vertices_match_brute_force(seed in any::<u64>()) {
        let p = random_polytope(&mut rng(seed));
        let v = p.vertices().unwrap();
        let brute = brute_force_vertices(&p);
        prop_assert_eq!(v.vertices(), brute.as_slice());
        for x in v.vertices() {
            prop_assert!(p.contains(x).unwrap());
            prop_assert!(tight_rank(&p, x) >= p.dim());
        }
        let again = extreme_points(v.vertices()).unwrap();
        prop_assert_eq!(again.vertices(), v.vertices());
    }

    #[test]
    fn support_dominates_vertices(seed in any::<u64>()) {
        let mut g = rng(seed);
        let p = random_polytope(&mut g);
        let v = p.vertices().unwrap();
        let f = random_vector(&mut g, p.dim());
        let (s, arg) = v.support(&f).unwrap();
        prop_assert_eq!(f.dot(&arg), s.clone());
        for x in v.vertices() {
            prop_assert!(f.dot(x) <= s);
        }
    }

    #[test]
    fn hull_membership_agrees_with_halfspaces(seed in any::<u64>()) {
        let mut g = rng(seed);
        let p = random_polytope(&mut g);
        let v = p.vertices().unwrap();
        for _ in 0..4 {
            let x = random_vector(&mut g, p.dim()).scale(&q(1, 3));
            prop_assert_eq!(v.hull_contains(&x).unwrap(), p.contains(&x).unwrap());
        }
    }

    #[test]
    fn norm_axioms(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        for space in [make_space_ii(n, &q(1, 10)).unwrap(), make_space_vii_default(n + 1).unwrap()] {
            let d = space.dim();
            let x = random_vector(&mut g, d);
            let y = random_vector(&mut g, d);
            let t = random_scalar(&mut g, 5, 4);
            let nx = space.norm(&x).unwrap();
            prop_assert!(!nx.is_negative());
            prop_assert_eq!(nx.is_zero(), x.is_zero());
            prop_assert_eq!(space.norm(&x.scale(&t)).unwrap(), &t.abs() * &nx);
            prop_assert!(space.norm(&x.add(&y)).unwrap() <= &nx + &space.norm(&y).unwrap());
            prop_assert_eq!(space.norm(&x.neg()).unwrap(), nx.clone());
            let ball = space.unit_ball();
            prop_assert_eq!(ball.contains(&x).unwrap(), nx <= Scalar::one());
            if !x.is_zero() {
                let face = space.attaining_set(&x).unwrap();
                prop_assert!(!face.attaining.is_empty());
                for phi in &face.attaining {
                    prop_assert_eq!(phi.dot(&x), nx.clone());
                }
            }
        }
    }

    #[test]
    fn sandwich_holds(seed in any::<u64>(), n in 1usize..=4, ri in 0usize..3) {
        let r = [q(1, 20), q(1, 10), q(1, 4)][ri].clone();
        let space = make_space_ii(n, &r).unwrap();
        let x = random_vector(&mut rng(seed), n + 1);
        let nx = space.norm(&x).unwrap();
        let reference = reference_product_norm(&x, n).unwrap();
        prop_assert!(reference <= nx);
        prop_assert!(nx <= &(Scalar::one() + &r) * &reference);
    }

    #[test]
    fn ball_vertices_are_symmetric(n in 1usize..=3) {
        for space in [make_space_ii(n, &q(1, 10)).unwrap(), make_space_vii_default(n + 1).unwrap()] {
            let v = space.unit_ball().vertices().unwrap();
            for x in v.vertices() {
                prop_assert!(v.vertices().contains(&x.neg()));
                prop_assert_eq!(space.norm(x).unwrap(), Scalar::one());
            }
            for phi in space.dual_ball_vertices().vertices() {
                let (s, _) = v.support(phi).unwrap();
                prop_assert_eq!(s, Scalar::one());
            }
        }
    }

    #[test]
    fn deeper_slices_are_wider(n in 1usize..=3, a in 1i64..=9, b in 1i64..=9) {
        prop_assume!(a != b);
        let (lo, hi) = (q(a.min(b), 10), q(a.max(b), 10));
        let space = make_space_ii(n, &q(1, 10)).unwrap();
        let f = Vector::unit(n + 1, 0);
        let d_lo = diameter(&make_slice(&space, &SliceSpec::new(f.clone(), lo).unwrap()).unwrap(), &space).unwrap();
        let d_hi = diameter(&make_slice(&space, &SliceSpec::new(f, hi).unwrap()).unwrap(), &space).unwrap();
        prop_assert!(d_lo.value <= d_hi.value);
    }

    #[test]
    fn certificates_are_sound(seed in any::<u64>(), n in 2usize..=3) {
        let mut g = rng(seed);
        let space = make_space_ii(n, &q(1, 10)).unwrap();
        let f = loop {
            let f = random_vector(&mut g, n + 1);
            if !f.is_zero() { break f; }
        };
        let alpha = q(1, 2);
        if let Ok(cert) = prop2_certificate(&space, &f, &alpha, &q(1, 10)) {
            prop_assert!(cert.is_valid());
            prop_assert!(cert.verify().unwrap());
            let slice = make_slice(&space, &SliceSpec::new(f, alpha).unwrap()).unwrap();
            prop_assert!(slice.contains(&cert.plus).unwrap());
            prop_assert!(slice.contains(&cert.minus).unwrap());
            prop_assert!(diameter(&slice, &space).unwrap().value >= cert.bound);
        }
    }
}

#[test]
fn reports_are_deterministic_and_self_checking() {
    for kind in [ExperimentKind::Thm1, ExperimentKind::Prop3, ExperimentKind::Sandwich] {
        let mut cfg = ExperimentConfig::new(kind, 3);
        cfg.trials = 200;
        match kind {
            ExperimentKind::Thm1 => cfg.epsilon = Some(q(1, 5)),
            ExperimentKind::Prop3 => cfg.epsilons = vec![q(1, 10), q(1, 20)],
            _ => cfg.r = Some(q(1, 10)),
        }
        let a = run(&cfg).unwrap();
        let b = run(&cfg).unwrap();
        assert!(a.self_check());
        assert!(a.rows.iter().all(|row| row.recheck()));
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv(), b.to_csv());
        let back = polyslice::report::Report::from_json(&a.to_json()).unwrap();
        assert_eq!(back.to_json(), a.to_json());
    }
}
