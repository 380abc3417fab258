use proptest::prelude::*;

use spinbits::clifford::{clifford_apply, word_apply};
use spinbits::fields::{build_field_system, hurwitz_radon, structure_failures};
use spinbits::forms::ExtForm;
use spinbits::matrix::Matrix;
use spinbits::octonion::{octonion_mul, Octonion};
use spinbits::report::Report;
use spinbits::sample;
use spinbits::scalar::{rat, Radical, Rat, Scalar};
use spinbits::spinor::{gamma_square_sign, hermitian, real_structure, Spinor};

fn rational() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    proptest::collection::vec(rational(), 8).prop_map(|q| {
        let mut s = Scalar::zero();
        for (k, radical) in Radical::ALL.iter().enumerate() {
            s += &Scalar::from_radical(*radical, q[2 * k].clone(), q[2 * k + 1].clone());
        }
        s
    })
}

fn form(degree: usize) -> impl Strategy<Value = ExtForm> {
    proptest::collection::vec((proptest::sample::subsequence((1..=8usize).collect::<Vec<_>>(), degree), rational()), 1..4)
        .prop_map(|blades| {
            blades
                .into_iter()
                .fold(ExtForm::zero(), |acc, (idx, c)| acc.add(&ExtForm::blade(&idx, c).unwrap()))
        })
}

fn spinor_pair() -> impl Strategy<Value = (usize, Spinor, Spinor)> {
    (2usize..=10, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = sample::rng(seed);
        let k = (n / 2) as u32;
        (n, sample::spinor(&mut rng, k, 5), sample::spinor(&mut rng, k, 5))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn clifford_anticommutation((n, psi, _) in spinor_pair(), p in 1usize..=10, q in 1usize..=10) {
        let (p, q) = (1 + (p - 1) % n, 1 + (q - 1) % n);
        let sum = word_apply(n, &[p, q], &psi).unwrap().add(&word_apply(n, &[q, p], &psi).unwrap()).unwrap();
        let expected = if p == q { psi.scale(&Scalar::from_int(-2)) } else { Spinor::zero(psi.width()) };
        prop_assert_eq!(sum, expected);
    }

    #[test]
    fn clifford_multiplication_is_skew((n, v, w) in spinor_pair(), p in 1usize..=10) {
        let p = 1 + (p - 1) % n;
        let left = hermitian(&clifford_apply(n, p, &v).unwrap(), &w).unwrap();
        let right = hermitian(&v, &clifford_apply(n, p, &w).unwrap()).unwrap();
        prop_assert_eq!(left, -right);
    }

    #[test]
    fn structure_map_identities((n, v, w) in spinor_pair()) {
        let gv = real_structure(n, &v).unwrap();
        let gw = real_structure(n, &w).unwrap();
        let sign = Scalar::from_int(gamma_square_sign(n) as i64);
        prop_assert_eq!(hermitian(&gv, &gw).unwrap(), hermitian(&v, &w).unwrap().conj());
        prop_assert_eq!(hermitian(&gv, &w).unwrap(), &sign * &hermitian(&v, &gw).unwrap().conj());
        prop_assert_eq!(real_structure(n, &gv).unwrap(), v.scale(&sign));
    }

    #[test]
    fn wedge_graded_commutative(a in form(2), b in form(3), c in form(1)) {
        let minus = rat(-1, 1);
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        prop_assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap());
        prop_assert_eq!(b.wedge(&c).unwrap(), c.wedge(&b).unwrap().scale(&minus));
        prop_assert_eq!(c.wedge(&c).unwrap(), ExtForm::zero());
    }

    #[test]
    fn wedge_associative(a in form(1), b in form(2), c in form(2)) {
        prop_assert_eq!(a.wedge(&b).unwrap().wedge(&c).unwrap(), a.wedge(&b.wedge(&c).unwrap()).unwrap());
    }

    #[test]
    fn octonion_norm_multiplicative(x in proptest::collection::vec(rational(), 8), y in proptest::collection::vec(rational(), 8)) {
        let (x, y) = (Octonion::new(x), Octonion::new(y));
        prop_assert_eq!(octonion_mul(&x, &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn json_round_trips(s in scalar(), seed in any::<u64>(), entries in proptest::collection::vec(scalar(), 6)) {
        let back: Scalar = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s.clone());

        let psi = sample::spinor(&mut sample::rng(seed), 4, 6);
        let back: Spinor = serde_json::from_str(&serde_json::to_string(&psi).unwrap()).unwrap();
        prop_assert_eq!(back, psi);

        let m = Matrix::from_fn(2, 3, |r, c| entries[3 * r + c].clone());
        let back: Matrix = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        prop_assert_eq!(back, m);

        let mut report = Report::new();
        report.record("scalar", s.is_zero(), serde_json::to_value(&s).unwrap());
        report.record("seed", seed % 2 == 0, serde_json::json!({ "seed": seed }));
        let back: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        prop_assert_eq!(back, report);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn field_systems_up_to_512(n in 1usize..=512) {
        let system = build_field_system(n, None).unwrap();
        prop_assert_eq!(system.fields.len() + 1, hurwitz_radon(n as u64).unwrap());
        prop_assert!(structure_failures(&system).is_empty());
    }
}
