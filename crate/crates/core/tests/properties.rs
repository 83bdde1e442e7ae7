//! Property tests over randomly generated inputs.

use std::sync::OnceLock;

use agcycles::arith::{fmt_rational, parse_rational, rat, PFrac, PPoly, Rational};
use agcycles::cli::atlas::{class_from_terms, class_to_terms};
use agcycles::cli::evaluate;
use agcycles::tautring::oracle::OracleRing;
use agcycles::tautring::{LambdaMonomial, RingMode, TautClass};
use agcycles::weyl::{
    all_elements, enumerate_strata, evaluate_word, mu_to_nu, mu_to_weyl, nu_to_mu, reduced_word,
    AdmissiblePartition,
};
use proptest::prelude::*;

fn oracle(g: usize) -> &'static OracleRing {
    static RINGS: OnceLock<Vec<OracleRing>> = OnceLock::new();
    &RINGS.get_or_init(|| (1..=4).map(|g| OracleRing::new(g).unwrap()).collect())[g - 1]
}

fn ppoly() -> impl Strategy<Value = PPoly> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|c| PPoly::from_ints(&c))
}

fn nonzero_ppoly() -> impl Strategy<Value = PPoly> {
    ppoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn class(g: usize, integral: bool) -> impl Strategy<Value = TautClass> {
    let coeff =
        (ppoly(), 1i64..=6).prop_map(move |(c, d)| if integral { c } else { c.scale(&rat(1, d)) });
    prop::collection::vec((0u32..1 << g, coeff), 0..5).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(TautClass::zero(g, RingMode::Compact), |acc, (bits, c)| {
                let t =
                    TautClass::basis_term(g, RingMode::Compact, LambdaMonomial::from_bits(bits), c);
                acc.add(&t).unwrap()
            })
    })
}

fn genus_and_classes(
    max_g: usize,
) -> impl Strategy<Value = (usize, TautClass, TautClass, TautClass)> {
    (1..=max_g).prop_flat_map(|g| (Just(g), class(g, false), class(g, false), class(g, false)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rationals_are_normalized(n in -10_000i64..10_000, d in 1i64..10_000, k in 1i64..50) {
        let a = rat(n * k, d * k);
        prop_assert_eq!(&a, &rat(n, d));
        prop_assert!(num_integer::Integer::gcd(a.numer(), a.denom()) == 1.into() || n == 0);
        prop_assert_eq!(parse_rational(&fmt_rational(&a)), Some(a));
    }

    #[test]
    fn fractions_are_normalized(n in ppoly(), d in nonzero_ppoly(), k in nonzero_ppoly()) {
        let plain = PFrac::new(n.clone(), d.clone()).unwrap();
        let scaled = PFrac::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&plain, &scaled);
        if let Some(lead) = plain.denom().leading_coeff() {
            prop_assert_eq!(lead, &Rational::from_integer(1.into()));
        }
    }

    #[test]
    fn polynomial_division_is_exact(a in ppoly(), b in nonzero_ppoly()) {
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn ring_is_associative_and_commutative((g, a, b, c) in genus_and_classes(4)) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        let distributed = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), distributed);
        prop_assert_eq!(a.genus(), g);
    }

    #[test]
    fn rewriting_agrees_with_oracle(g in 1usize..=4, raw in prop::collection::vec(1usize..=4, 0..12)) {
        let mut idx: Vec<usize> = raw.into_iter().filter(|&i| i <= g).collect();
        idx.sort_unstable();
        let fast = TautClass::monomial(g, RingMode::Compact, &idx).unwrap();
        prop_assert_eq!(fast, oracle(g).reduce(&idx).unwrap());
    }

    #[test]
    fn rendered_classes_parse_back(c in (1usize..=4).prop_flat_map(|g| class(g, true))) {
        let back = evaluate(&c.to_string(), c.genus(), RingMode::Compact).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn wire_format_round_trips(c in (1usize..=4).prop_flat_map(|g| class(g, false))) {
        let terms = class_to_terms(&c);
        let json = serde_json::to_string(&terms).unwrap();
        let back: Vec<agcycles::cli::ClassTerm> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(class_from_terms(c.genus(), &back).unwrap(), c);
    }

    #[test]
    fn sampled_strata_are_consistent(g in 4usize..=5, bits in 0u32..32) {
        let mu = AdmissiblePartition::from_bits(g, bits % (1 << g)).unwrap();
        let nu = mu_to_nu(&mu);
        prop_assert_eq!(&nu_to_mu(&nu), &mu);
        let w = mu_to_weyl(&mu);
        let word = reduced_word(&mu);
        prop_assert_eq!(&evaluate_word(g, &word).unwrap(), &w);
        prop_assert_eq!(w.length(), word.len());
        prop_assert_eq!(w.length() + mu.area(), g * (g + 1) / 2);
        prop_assert_eq!(w.length() + w.codim(), g * g);
    }
}

#[test]
fn strata_exhaustive_up_to_genus_six() {
    for g in 1..=6 {
        let strata = enumerate_strata(g).unwrap();
        assert_eq!(strata.len(), 1 << g);
        for s in &strata {
            assert_eq!(nu_to_mu(&s.nu), s.mu);
            assert_eq!(evaluate_word(g, &s.word).unwrap(), s.weyl);
            assert_eq!(s.length + s.codim, g * (g + 1) / 2);
            assert_eq!(s.length + s.flag_codim, g * g);
            assert_eq!(s.flag_codim, g * (g - 1) / 2 + s.codim);
        }
        for pair in strata.windows(2) {
            assert!(pair[0].mu.listing_cmp(&pair[1].mu).is_lt());
        }
    }
}

#[test]
fn length_identity_on_whole_group() {
    for g in 1..=5 {
        let elements = all_elements(g);
        assert_eq!(elements.len(), (1..=g).product::<usize>() << g);
        assert!(elements.iter().all(|w| w.length() + w.codim() == g * g));
    }
}
