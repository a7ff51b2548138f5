use proptest::prelude::*;

use chesstab::arith::{tri_count, vp, Rational, Valuation};
use chesstab::delta::delta_valuation;
use chesstab::experiments::chess_table;
use chesstab::fock::{apply_e, apply_f, inner, pair_sum, FockVector};
use chesstab::partitions::{
    enumerate_partitions, glaisher, z_mu, GlaisherDirection, PartFilter, Partition,
};
use chesstab::polyrep::{
    adjoint_monomial, inner_poly, mul_monomial, op_a, op_a_truncated, op_generator,
    op_generator_truncated, Generator, OddPoly,
};
use chesstab::tableaux::{ResidueWord, TableauOracle};

fn rational() -> impl Strategy<Value = Rational> {
    (-2000i64..=2000, 1i64..=360).prop_map(|(a, b)| Rational::new(a, b).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn shape(filter: PartFilter, max: usize) -> impl Strategy<Value = Partition> {
    (0..=max, any::<prop::sample::Index>()).prop_map(move |(n, idx)| {
        let all = enumerate_partitions(n, filter);
        all[idx.index(all.len())].clone()
    })
}

fn fock_vector(max_degree: usize) -> impl Strategy<Value = FockVector> {
    prop::collection::vec((shape(PartFilter::All, max_degree), rational()), 1..6)
        .prop_map(FockVector::from_terms)
}

fn poly(max_degree: usize) -> impl Strategy<Value = OddPoly> {
    prop::collection::vec((shape(PartFilter::OddParts, max_degree), rational()), 1..5)
        .prop_map(|t| OddPoly::from_terms(t).unwrap())
}

fn word(e: usize, n: usize) -> impl Strategy<Value = ResidueWord> {
    prop::collection::vec(0..e, n).prop_map(move |l| ResidueWord::new(e, l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn valuation_is_multiplicative_and_ultrametric(a in rational(), b in rational(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let (va, vb) = (vp(&a, p).unwrap(), vp(&b, p).unwrap());
        prop_assert_eq!(vp(&(&a * &b), p).unwrap(), va + vb);
        prop_assert!(vp(&(&a + &b), p).unwrap() >= va.min(vb));
        if va != vb {
            prop_assert_eq!(vp(&(&a + &b), p).unwrap(), va.min(vb));
        }
    }

    #[test]
    fn valuation_of_inverse(a in nonzero_rational()) {
        let inv = &Rational::one() / &a;
        prop_assert_eq!(a.v2().finite().unwrap(), -inv.v2().finite().unwrap());
    }

    #[test]
    fn glaisher_round_trip(mu in shape(PartFilter::OddParts, 30)) {
        let d = glaisher(&mu, GlaisherDirection::OddToDistinct).unwrap();
        prop_assert!(d.has_distinct_parts());
        prop_assert_eq!(d.size(), mu.size());
        prop_assert_eq!(&glaisher(&d, GlaisherDirection::DistinctToOdd).unwrap(), &mu);
        let v = Rational::from(z_mu(&mu).unwrap()).v2().finite().unwrap();
        prop_assert_eq!(mu.len() as i64 - v, d.len() as i64);
        if !mu.is_empty() {
            prop_assert!(d.len() as u64 <= tri_count(mu.size() as u64).unwrap());
        }
    }

    #[test]
    fn fock_operators_are_adjoint(x in fock_vector(9), y in fock_vector(10), e in 1usize..=4, i in 0usize..4) {
        let i = i % e;
        prop_assert_eq!(inner(&apply_f(&x, i, e), &y), inner(&x, &apply_e(&y, i, e)));
    }

    #[test]
    fn f_operators_are_graded(x in fock_vector(8), e in 1usize..=3, i in 0usize..3) {
        let y = apply_f(&x, i % e, e);
        let shifted: std::collections::BTreeSet<usize> = x.degrees().iter().map(|d| d + 1).collect();
        prop_assert!(y.degrees().is_subset(&shifted));
    }

    #[test]
    fn monomial_multiplication_is_adjoint(f in poly(6), g in poly(12), mu in shape(PartFilter::OddParts, 6)) {
        let lhs = inner_poly(&mul_monomial(&f, &mu).unwrap(), &g);
        prop_assert_eq!(lhs, inner_poly(&f, &adjoint_monomial(&g, &mu).unwrap()));
    }

    #[test]
    fn chevalley_generators_are_adjoint(f in poly(6), g in poly(7)) {
        for (raise, lower) in [(Generator::F0, Generator::E0), (Generator::F1, Generator::E1)] {
            prop_assert_eq!(inner_poly(&op_generator(raise, &f), &g), inner_poly(&f, &op_generator(lower, &g)));
        }
    }

    #[test]
    fn generator_sums(f in poly(7)) {
        let p1 = Partition::new(vec![1]).unwrap();
        let raise = &op_generator(Generator::F0, &f) + &op_generator(Generator::F1, &f);
        prop_assert_eq!(raise, mul_monomial(&f, &p1).unwrap());
        let lower = &op_generator(Generator::E0, &f) + &op_generator(Generator::E1, &f);
        prop_assert_eq!(lower, adjoint_monomial(&f, &p1).unwrap());
        prop_assert_eq!(&op_generator(Generator::F1, &f) - &op_generator(Generator::F0, &f), op_a(-1, &f));
    }

    #[test]
    fn generators_shift_degree(f in poly(7)) {
        prop_assume!(f.is_homogeneous() && !f.is_zero());
        let d = f.degree().unwrap();
        for g in [Generator::F0, Generator::F1] {
            let h = op_generator(g, &f);
            prop_assert!(h.is_zero() || (h.is_homogeneous() && h.degree() == Some(d + 1)));
        }
        for g in [Generator::E0, Generator::E1] {
            let h = op_generator(g, &f);
            prop_assert!(h.is_zero() || (h.is_homogeneous() && h.degree() == d.checked_sub(1)));
        }
    }

    #[test]
    fn series_truncation_is_stable(f in poly(6), j in -3i64..=3) {
        let top = f.degree().unwrap_or(0);
        for g in Generator::ALL {
            prop_assert_eq!(op_generator_truncated(g, &f, 2 * top + 2), op_generator(g, &f));
        }
        prop_assert_eq!(op_a_truncated(j, &f, 2 * top as i64 + 6), op_a(j, &f));
    }

    #[test]
    fn a_adjoint_carries_sign(f in poly(6), g in poly(6), j in -3i64..=3) {
        let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
        let lhs = inner_poly(&op_a(j, &f), &g);
        prop_assert_eq!(lhs, &sign * &inner_poly(&f, &op_a(-j, &g)));
    }

    #[test]
    fn delta_valuation_is_a_valuation(f in poly(7), g in poly(7)) {
        let (vf, vg) = (delta_valuation(&f), delta_valuation(&g));
        prop_assert!(delta_valuation(&(&f + &g)) >= vf.min(vg));
        prop_assert!(delta_valuation(&f.mul(&g)) >= vf + vg);
        prop_assert_eq!(delta_valuation(&f.scale(&Rational::from(2))), vf.shift(1));
    }

    #[test]
    fn pair_sum_matches_tableau_oracle(n in 1usize..=8, seed in any::<u64>()) {
        let mut bits = seed;
        let mut next = || { bits = bits.rotate_left(1); (bits & 1) as usize };
        let v = ResidueWord::new(2, (0..n).map(|_| next()).collect()).unwrap();
        let w = ResidueWord::new(2, (0..n).map(|_| next()).collect()).unwrap();
        let oracle = TableauOracle::default();
        let brute: u64 = enumerate_partitions(n, PartFilter::All)
            .iter()
            .map(|l| oracle.count_by_residue(&v, l).unwrap() * oracle.count_by_residue(&w, l).unwrap())
            .sum();
        prop_assert_eq!(pair_sum(&v, &w).unwrap(), brute.into());
    }

    #[test]
    fn pair_sum_is_symmetric(v in word(3, 6), w in word(3, 6)) {
        prop_assert_eq!(pair_sum(&v, &w).unwrap(), pair_sum(&w, &v).unwrap());
    }
}

#[test]
fn chess_values_are_bounded_below() {
    for row in chess_table(14).unwrap() {
        let bound = row.n as i64 - tri_count(row.n as u64).unwrap() as i64;
        assert!(row.valuation >= Valuation::Finite(bound), "n={}", row.n);
    }
}
