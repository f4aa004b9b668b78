use num_complex::Complex64;
use proptest::prelude::*;

use latsum::algebra::cyclo::{cyclo_root_of_unity, CycloNumber};
use latsum::algebra::interp::interpolate;
use latsum::algebra::poly::{var_names, MultiPoly};
use latsum::algebra::rational::{format_scalar, frac, int, parse_scalar, Scalar};
use latsum::corpus::corpus;
use latsum::face_poly::{check_master_duality, GradedPoset};
use latsum::polytope::Polytope;
use latsum::wsum::{all_face_sums, WeightPoly};

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn poly3() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), small_scalar()), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(var_names(["x", "y", "z"]), terms))
}

fn cyclo() -> impl Strategy<Value = CycloNumber> {
    (1i64..=12, 0i64..12, -5i64..=5, -3i64..=3).prop_map(|(den, num, c, d)| {
        let root = cyclo_root_of_unity(num % den, den).unwrap();
        let two = cyclo_root_of_unity(1, den).unwrap();
        root.scale(&int(c)).add(&two.scale(&int(d)))
    })
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + b.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in poly3(), b in poly3(), c in poly3()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        a in poly3(),
        b in poly3(),
        pt in prop::collection::vec(small_scalar(), 3),
    ) {
        prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
        prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
    }

    #[test]
    fn cyclotomic_arithmetic_matches_complex(xs in prop::collection::vec(cyclo(), 5)) {
        let mut exact = CycloNumber::rational(int(1));
        let mut approx = Complex64::new(1.0, 0.0);
        for x in &xs {
            exact = exact.mul(x).add(x);
            approx = approx * x.to_complex() + x.to_complex();
        }
        prop_assert!(close(exact.to_complex(), approx));
    }

    #[test]
    fn cyclotomic_inverse(x in cyclo()) {
        if x.is_zero() {
            prop_assert!(x.inverse().is_err());
        } else {
            prop_assert!(x.mul(&x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn interpolation_recovers_polynomials(coeffs in prop::collection::vec(small_scalar(), 1..=7)) {
        let p = MultiPoly::univariate("q", &coeffs);
        let degree = coeffs.len() - 1;
        let nodes: Vec<(Scalar, Scalar)> = (0..=degree as i64)
            .map(|i| (int(i), p.eval(&[int(i)])))
            .collect();
        prop_assert_eq!(interpolate(&nodes, degree, "q").unwrap(), p);
    }

    #[test]
    fn scalar_text_round_trip(x in small_scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_polytopes_satisfy_euler_relation(seed in any::<u64>(), dim in 2usize..=3) {
        let p = &corpus(seed, 1, dim, 3).unwrap()[0];
        let lattice = p.face_lattice();
        let chi: i64 = lattice.f_vector()[..dim]
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        prop_assert_eq!(chi, if dim % 2 == 0 { 0 } else { 2 });
        prop_assert!(check_master_duality(&GradedPoset::from_lattice(lattice)));
    }

    #[test]
    fn closed_sums_split_over_open_faces(seed in any::<u64>(), dim in 2usize..=3) {
        let p: &Polytope = &corpus(seed, 1, dim, 3).unwrap()[0];
        let mut e = vec![0; dim];
        e[0] = 1;
        let w = WeightPoly::monomial(&e, int(1)).unwrap();
        let sums = all_face_sums(p, &w).unwrap();
        let top = sums.iter().find(|s| s.face == p.face_lattice().top()).unwrap();
        let total = sums
            .iter()
            .filter(|s| s.face != p.face_lattice().empty_face())
            .fold(MultiPoly::zero(top.closed.vars().to_vec()), |acc, s| &acc + &s.open);
        prop_assert_eq!(total, top.closed.clone());
    }
}
