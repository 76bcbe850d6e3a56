use proptest::prelude::*;

use drinfeld::curve::{enumerate, EnumMode};
use drinfeld::drinfeld::{rho_compose, rho_recursive};
use drinfeld::ekpoly::{basis_convert, basis_invert, ek_recursive, OneBasisPoly};
use drinfeld::{AElem, BinaryPoly, Degree, KElem, TwistedPoly};

fn poly(max_deg: usize) -> impl Strategy<Value = BinaryPoly> {
    let words = max_deg / 64 + 1;
    prop::collection::vec(any::<u64>(), words).prop_map(move |mut w| {
        let spare = (words * 64) - (max_deg + 1);
        if let Some(last) = w.last_mut() {
            *last &= u64::MAX >> spare;
        }
        BinaryPoly::from_words(w)
    })
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = BinaryPoly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn a_elem(max_deg: usize) -> impl Strategy<Value = AElem> {
    (poly(max_deg), poly(max_deg)).prop_map(|(f, g)| AElem::new(f, g))
}

fn k_elem() -> impl Strategy<Value = KElem> {
    (a_elem(12), nonzero_poly(8)).prop_map(|(n, d)| KElem::new(n, d).unwrap())
}

fn twisted() -> impl Strategy<Value = TwistedPoly> {
    prop::collection::vec(k_elem(), 0..4).prop_map(TwistedPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn binary_ring_axioms(a in poly(64), b in poly(64), c in poly(64)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &BinaryPoly::one(), a.clone());
        prop_assert!((&a + &a).is_zero());
    }

    #[test]
    fn binary_frobenius_is_additive(a in poly(64), b in poly(64), n in 0u32..4) {
        prop_assert_eq!((&a + &b).frobenius(n), &a.frobenius(n) + &b.frobenius(n));
        prop_assert_eq!(a.square(), &a * &a);
    }

    #[test]
    fn binary_degree_is_additive(a in poly(64), b in poly(64)) {
        prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
    }

    #[test]
    fn division_with_remainder(a in poly(128), b in nonzero_poly(64)) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in poly(64), b in nonzero_poly(64), c in nonzero_poly(16)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc).unwrap();
        prop_assert!(g.divides(&ac) && g.divides(&bc));
        prop_assert!(c.divides(&g));
    }

    #[test]
    fn a_ring_axioms(a in a_elem(20), b in a_elem(20), c in a_elem(20)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.square(), &a * &a);
        prop_assert_eq!((&a + &b).square(), &a.square() + &b.square());
    }

    #[test]
    fn a_degree_and_norm_are_multiplicative(a in a_elem(20), b in a_elem(20)) {
        let ab = &a * &b;
        prop_assert_eq!(ab.degree(), a.degree() + b.degree());
        prop_assert_eq!(ab.norm(), &a.norm() * &b.norm());
        prop_assert_eq!(&a * &a.conjugate(), AElem::from_x_poly(a.norm()));
        if !a.is_zero() {
            prop_assert_eq!(a.norm().degree(), a.degree());
        }
    }

    #[test]
    fn exact_division_round_trips(a in a_elem(16), b in a_elem(16)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), Some(a.clone()));
    }

    #[test]
    fn k_field_axioms(a in k_elem(), b in k_elem(), c in k_elem()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a.square(), &(&a * &a));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn k_rendering_reparses(a in k_elem()) {
        prop_assert_eq!(a.to_string().parse::<KElem>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn twisted_ring_axioms(p in twisted(), q in twisted(), r in twisted()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&q + &r) * &p, &(&q * &p) + &(&r * &p));
        prop_assert_eq!((&p * &q).tau_degree(), p.tau_degree() + q.tau_degree());
    }

    #[test]
    fn twisted_product_acts_by_composition(p in twisted(), q in twisted(), z in k_elem()) {
        prop_assert_eq!((&p * &q).apply(&z), p.apply(&q.apply(&z)));
    }

    #[test]
    fn rho_is_a_homomorphism(i in 0usize..64, j in 0usize..64) {
        let elems = enumerate(7, EnumMode::Below).unwrap();
        let (a, b) = (&elems[i], &elems[j]);
        let (ra, rb) = (rho_recursive(a).unwrap(), rho_recursive(b).unwrap());
        prop_assert_eq!(rho_recursive(&(a + b)).unwrap(), &ra + &rb);
        prop_assert_eq!(rho_recursive(&(a * b)).unwrap(), &ra * &rb);
        prop_assert_eq!(rho_compose(a), ra.clone());
        let expected = a.deg().map_or(Degree::NegInf, Degree::Finite);
        prop_assert_eq!(ra.tau_degree(), expected);
    }

    #[test]
    fn ek_is_additive(k in 1usize..7, a in k_elem(), b in k_elem()) {
        let e = ek_recursive(k).unwrap();
        prop_assert_eq!(e.eval(&(&a + &b)), &e.eval(&a) + &e.eval(&b));
    }

    #[test]
    fn one_basis_round_trips(coeffs in prop::collection::vec(k_elem(), 0..6)) {
        let t = OneBasisPoly::new(coeffs);
        prop_assert_eq!(basis_invert(&basis_convert(&t)).unwrap(), t);
    }
}
