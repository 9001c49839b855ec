use monocurve::groebner::{
    buchberger, contains, ideals_equal, s_polynomial, saturate, Budget, PolyIdeal, TermOrder,
};
use monocurve::poly::{
    parse, Field, Monomial, Polynomial, Rationals, Ring, RingContext, Substitution,
};
use proptest::prelude::*;

const NAMES: [&str; 5] = ["x", "y", "z", "u", "w"];

fn ring(arity: usize) -> Ring<Rationals> {
    RingContext::new(Rationals, &NAMES[..arity], TermOrder::Grevlex).unwrap()
}

type RawTerm = (Vec<u32>, i64, i64);

fn raw_poly(arity: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    let exps = prop::collection::vec(0u32..=max_deg, arity)
        .prop_filter("total degree", move |e| e.iter().sum::<u32>() <= max_deg);
    prop::collection::vec((exps, -20i64..=20, 1i64..=6), 0..=max_terms)
}

fn build(r: &Ring<Rationals>, raw: &[RawTerm]) -> Polynomial<Rationals> {
    let f = r.field();
    Polynomial::from_terms(
        r,
        raw.iter().map(|(e, n, d)| {
            (Monomial::new(e.iter().copied()), f.div(&f.from_i64(*n), &f.from_i64(*d)).unwrap())
        }),
    )
}

/// Arity in 1..=5 and a polynomial of degree at most 8.
fn arb_poly() -> impl Strategy<Value = (usize, Vec<RawTerm>)> {
    (1usize..=5).prop_flat_map(|a| (Just(a), raw_poly(a, 8, 6)))
}

fn homogeneous_gens(n: usize) -> impl Strategy<Value = Vec<Vec<RawTerm>>> {
    // homogeneous binomials and trinomials of degree 2 or 3 in x, y, z
    let one = (2u32..=3).prop_flat_map(|d| {
        let exps = (0..=d).prop_flat_map(move |a| (0..=d - a).prop_map(move |b| vec![a, b, d - a - b]));
        prop::collection::vec((exps, -3i64..=3, 1i64..=2), 1..=3)
    });
    prop::collection::vec(one, 1..=n)
}

fn ideal(r: &Ring<Rationals>, raw: &[Vec<RawTerm>]) -> PolyIdeal<Rationals> {
    PolyIdeal::new(r, raw.iter().map(|t| build(r, t)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity((arity, raw) in arb_poly()) {
        let r = ring(arity);
        let p = build(&r, &raw);
        let text = p.to_string();
        prop_assert_eq!(parse(&text, &r).unwrap(), p, "{}", text);
    }

    #[test]
    fn ring_axioms((arity, a) in arb_poly(), b in raw_poly(5, 4, 4), c in raw_poly(5, 4, 4)) {
        let r = ring(arity);
        let trim = |raw: Vec<RawTerm>| -> Vec<RawTerm> {
            raw.into_iter().map(|(e, n, d)| (e[..arity].to_vec(), n, d)).collect()
        };
        let (a, b, c) = (build(&r, &a), build(&r, &trim(b)), build(&r, &trim(c)));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn substitution_is_a_ring_map(
        a in raw_poly(3, 4, 4),
        b in raw_poly(3, 4, 4),
        images in prop::collection::vec(raw_poly(2, 3, 3), 3),
    ) {
        let (src, dst) = (ring(3), ring(2));
        let sigma = Substitution::new(&src, &dst, images.iter().map(|t| build(&dst, t)).collect()).unwrap();
        let (a, b) = (build(&src, &a), build(&src, &b));
        let (sa, sb) = (sigma.apply(&a).unwrap(), sigma.apply(&b).unwrap());
        prop_assert_eq!(sigma.apply(&(&a * &b)).unwrap(), &sa * &sb);
        prop_assert_eq!(sigma.apply(&(&a + &b)).unwrap(), &sa + &sb);
        prop_assert!(sigma.apply(&Polynomial::one(&src)).unwrap().is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn s_polynomials_reduce_to_zero(raw in homogeneous_gens(3)) {
        let r = ring(3);
        let i = ideal(&r, &raw);
        let gb = buchberger(&i, TermOrder::Grevlex, &Budget::default()).unwrap();
        let basis = gb.basis();
        for (x, a) in basis.iter().enumerate() {
            for b in &basis[x + 1..] {
                prop_assert!(gb.normal_form(&s_polynomial(a, b)).unwrap().is_zero());
            }
        }
        for g in i.gens() {
            prop_assert!(gb.contains_poly(g).unwrap());
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(raw in homogeneous_gens(3), seed in any::<u64>()) {
        let r = ring(3);
        let mut shuffled = raw.clone();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        if seed & 1 == 1 {
            shuffled.reverse();
        }
        for order in [TermOrder::Grevlex, TermOrder::Lex] {
            let a = buchberger(&ideal(&r, &raw), order, &Budget::default()).unwrap();
            let b = buchberger(&ideal(&r, &shuffled), order, &Budget::default()).unwrap();
            prop_assert_eq!(a.basis(), b.basis());
        }
    }

    #[test]
    fn containment_is_a_partial_order(x in homogeneous_gens(2), y in homogeneous_gens(2)) {
        let r = ring(3);
        let b = Budget::default();
        let (i, j) = (ideal(&r, &x), ideal(&r, &y));
        let sum = i.sum(&j).unwrap();
        let prod = i.product(&j).unwrap();
        prop_assert!(contains(&i, &i, TermOrder::Grevlex, &b).unwrap());
        prop_assert!(contains(&sum, &i, TermOrder::Grevlex, &b).unwrap());
        prop_assert!(contains(&i, &prod, TermOrder::Grevlex, &b).unwrap());
        // antisymmetry up to ideal equality, transitivity through the sum
        let ij = contains(&i, &j, TermOrder::Grevlex, &b).unwrap();
        let ji = contains(&j, &i, TermOrder::Grevlex, &b).unwrap();
        prop_assert_eq!(ij && ji, ideals_equal(&i, &j, TermOrder::Grevlex, &b).unwrap());
        if ij {
            prop_assert!(ideals_equal(&sum, &i, TermOrder::Grevlex, &b).unwrap());
        }
    }

    #[test]
    fn saturation_is_idempotent(raw in homogeneous_gens(2), var in 0usize..3) {
        let r = ring(3);
        let b = Budget::default();
        let i = ideal(&r, &raw);
        let v = Polynomial::var(&r, var);
        let once = saturate(&i, &v, &b).unwrap();
        let twice = saturate(&once, &v, &b).unwrap();
        prop_assert_eq!(once.gens(), twice.gens());
        prop_assert!(contains(&once, &i, TermOrder::Grevlex, &b).unwrap());
    }
}
