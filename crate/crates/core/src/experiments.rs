//! Tables and exhaustive scans over residue words.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{bin_ones, factorial, is_prime, tri_count, Rational, Valuation};
use crate::delta::{CountCheck, MinTracker, ValuationReport};
use crate::error::{invalid, Error, Result};
use crate::fock::{all_word_images, apply_e, apply_f, apply_word, inner, pair_sum, FockVector};
use crate::partitions::{enumerate_partitions, PartFilter, Partition};
use crate::polyrep::{
    adjoint_monomial, all_word_images_poly, inner_poly, mul_monomial, op_generator, Generator,
    OddPoly,
};
use crate::tableaux::{hook_count, ResidueWord};

/// Trial division stops at this divisor; anything left over is reported unfactored.
pub const TRIAL_DIVISION_LIMIT: u64 = 1 << 24;

/// Size limit for the `4^n`-pair scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_n: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { max_n: 10 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigUint, u32)>,
    /// Composite part left when trial division hit [`TRIAL_DIVISION_LIMIT`].
    pub cofactor: Option<BigUint>,
}

impl Factorization {
    pub fn exponent_of(&self, p: u64) -> u32 {
        let p = BigUint::from(p);
        self.factors
            .iter()
            .find(|(q, _)| *q == p)
            .map_or(0, |(_, e)| *e)
    }
}

/// Trial-division factorization of a positive integer.
pub fn factorize(value: &BigUint) -> Factorization {
    let mut rest = value.clone();
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let big_d = BigUint::from(d);
        if &big_d * &big_d > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (quot, r) = rest.div_rem(&big_d);
            if !r.is_zero() {
                break;
            }
            rest = quot;
            e += 1;
        }
        if e > 0 {
            factors.push((big_d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut cofactor = None;
    if rest > BigUint::one() {
        let limit_sq = BigUint::from(d) * BigUint::from(d);
        if limit_sq > rest {
            factors.push((rest, 1));
        } else {
            cofactor = Some(rest);
        }
    }
    Factorization { factors, cofactor }
}

/// `2^15*103*163`; an unfactored remainder is written in brackets.
pub fn format_factorization(value: &BigUint, f: &Factorization) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let mut pieces: Vec<String> = f
        .factors
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect();
    if let Some(c) = &f.cofactor {
        pieces.push(format!("[{c}]"));
    }
    if pieces.is_empty() {
        "1".to_string()
    } else {
        pieces.join("*")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RowVerdict {
    Pass,
    Fail,
    /// No bound is claimed; the row is reported as observed.
    Observed,
}

impl RowVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RowVerdict::Pass => "PASS",
            RowVerdict::Fail => "FAIL",
            RowVerdict::Observed => "OBSERVED",
        }
    }
}

/// One `sum_lambda C_e(v, lambda) C_e(w, lambda)` value with its factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationRow {
    pub n: usize,
    pub e: usize,
    pub p: u64,
    #[serde(serialize_with = "as_string")]
    pub value: BigUint,
    pub valuation: Valuation,
    pub bound: Option<i64>,
    pub factorization: String,
    #[serde(skip)]
    pub factors: Factorization,
    pub verdict: RowVerdict,
}

fn as_string<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn make_row(
    n: usize,
    e: usize,
    p: u64,
    value: BigUint,
    bound: Option<i64>,
) -> Result<FactorizationRow> {
    let valuation = Rational::from(value.clone()).vp(p)?;
    let factors = if value.is_zero() {
        Factorization {
            factors: Vec::new(),
            cofactor: None,
        }
    } else {
        factorize(&value)
    };
    let verdict = match bound {
        Some(b) if valuation.at_least(b) => RowVerdict::Pass,
        Some(_) => RowVerdict::Fail,
        None => RowVerdict::Observed,
    };
    Ok(FactorizationRow {
        n,
        e,
        p,
        factorization: format_factorization(&value, &factors),
        value,
        valuation,
        bound,
        factors,
        verdict,
    })
}

/// `n - a(n)`.
pub fn divisibility_bound(n: usize) -> Result<i64> {
    Ok(n as i64 - tri_count(n as u64)? as i64)
}

/// `sum_lambda Chess(lambda)^2` for `n = 1..=n_max`, checked against `n - a(n)`.
pub fn chess_table(n_max: usize) -> Result<Vec<FactorizationRow>> {
    if n_max < 1 {
        return invalid("chess_table needs n_max >= 1");
    }
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let w = ResidueWord::alternating(n);
            make_row(n, 2, 2, pair_sum(&w, &w)?, Some(divisibility_bound(n)?))
        })
        .collect()
}

/// Pair sums of the cyclic word `(0, 1, ..., e-1, 0, ...)` with itself for
/// `n = 1..=n_max`, with their `p`-adic valuations. Nothing is asserted.
pub fn general_e_scan(n_max: usize, e: usize, p: u64) -> Result<Vec<FactorizationRow>> {
    if e < 1 {
        return invalid("general_e_scan needs e >= 1");
    }
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let w = ResidueWord::cyclic(e, n)?;
            make_row(n, e, p, pair_sum(&w, &w)?, None)
        })
        .collect()
}

/// The row for an explicit pair of words. For `e = 2` the bound `n - a(n)` is checked.
pub fn pair_sum_row(v: &ResidueWord, w: &ResidueWord, p: u64) -> Result<FactorizationRow> {
    let value = pair_sum(v, w)?;
    let n = v.len();
    let bound = if v.e() == 2 && p == 2 && n >= 1 {
        Some(divisibility_bound(n)?)
    } else {
        None
    };
    make_row(n, v.e(), p, value, bound)
}

/// Checks `v_2(sum C_2(v, lambda) C_2(w, lambda)) >= n - a(n)` over every pair
/// of words of length `n`, and that some pair attains the bound.
///
/// The `2^n` images are computed once by the shared-prefix walk. Words with
/// equal images give equal sums, so the Gram matrix is formed over distinct
/// nonzero images only; each witness names the first word pair (in
/// lexicographic order) realizing it.
pub fn exhaustive_bound_check(n: usize, config: &ScanConfig) -> Result<ValuationReport> {
    if n < 1 {
        return invalid("exhaustive_bound_check needs n >= 1");
    }
    if n > config.max_n {
        return Err(Error::ResourceLimit {
            what: "exhaustive word scan",
            size: n,
            limit: config.max_n,
        });
    }
    let shapes = enumerate_partitions(n, PartFilter::All);
    let index: BTreeMap<&Partition, usize> =
        shapes.iter().enumerate().map(|(i, l)| (l, i)).collect();

    let mut distinct: BTreeMap<Vec<BigInt>, ResidueWord> = BTreeMap::new();
    let mut order = Vec::new();
    for (word, image) in all_word_images(2, n)? {
        if image.is_zero() {
            continue;
        }
        let mut coords = vec![BigInt::zero(); shapes.len()];
        for (lambda, c) in image.iter() {
            coords[index[lambda]] = c.to_count()?.into();
        }
        if let std::collections::btree_map::Entry::Vacant(slot) = distinct.entry(coords) {
            order.push(slot.key().clone());
            slot.insert(word);
        }
    }
    let words: Vec<&ResidueWord> = order.iter().map(|c| &distinct[c]).collect();

    let gram_rows: Vec<Vec<Valuation>> = order
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            order[i..]
                .iter()
                .map(|y| {
                    let dot: BigInt = x.iter().zip(y).map(|(a, b)| a * b).sum();
                    Rational::from(dot).v2()
                })
                .collect()
        })
        .collect();

    let mut tracker = MinTracker::new(divisibility_bound(n)?);
    for (i, row) in gram_rows.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            let j = i + k;
            tracker.observe(*v, || format!("v={} w={}", words[i], words[j]));
        }
    }
    Ok(tracker.finish(format!("bound n={n}"), n as i64, true, Vec::new()))
}

/// `sum_lambda SYT(lambda)^2 = n!`, `v_2(n!) = n - b(n)`, and the `e = 1`
/// Fock word of length `n` has squared norm `n!`.
pub fn factorial_check(n: usize) -> Result<bool> {
    if n < 1 {
        return invalid("factorial_check needs n >= 1");
    }
    let fact = factorial(n as u64);
    let hooks: BigUint = enumerate_partitions(n, PartFilter::All)
        .iter()
        .map(|l| {
            let h = hook_count(l);
            &h * &h
        })
        .sum();
    let legendre = Rational::from(fact.clone()).v2()
        == Valuation::Finite((n as u64 - bin_ones(n as u64)) as i64);
    let x = apply_word(&ResidueWord::new(1, vec![0; n])?);
    let fock = inner(&x, &x).to_count()? == fact;
    Ok(hooks == fact && legendre && fock)
}

/// [`factorial_check`] as a report: the observed `v_2(n!)` must equal `n - b(n)`.
pub fn factorial_report(n: usize) -> Result<ValuationReport> {
    let ok = factorial_check(n)?;
    let mut tracker = MinTracker::new((n as u64 - bin_ones(n as u64)) as i64);
    tracker.observe(Rational::from(factorial(n as u64)).v2(), || format!("{n}!"));
    let check = CountCheck::new("sum SYT^2 = n! and e=1 norm = n!", ok as usize, 1);
    Ok(tracker.finish(format!("factorial n={n}"), n as i64, true, vec![check]))
}

/// Compares the two models on every pair of words of length `n`:
/// `inner_poly` of the polynomial images against the Fock pair sum. Also runs
/// `samples` seeded adjointness checks in both models. The valuation part of
/// the report is the divisibility bound over the same pairs.
pub fn cross_model_check(
    n: usize,
    samples: usize,
    seed: u64,
    config: &ScanConfig,
) -> Result<ValuationReport> {
    if n < 1 {
        return invalid("cross_model_check needs n >= 1");
    }
    if n > config.max_n {
        return Err(Error::ResourceLimit {
            what: "cross-model word scan",
            size: n,
            limit: config.max_n,
        });
    }
    let fock = all_word_images(2, n)?;
    let poly = all_word_images_poly(n)?;
    let rows: Vec<Vec<(Valuation, bool)>> = (0..fock.len())
        .into_par_iter()
        .map(|i| {
            (0..fock.len())
                .map(|j| {
                    let a = inner(&fock[i].1, &fock[j].1);
                    let b = inner_poly(&poly[i].1, &poly[j].1);
                    (a.v2(), a == b)
                })
                .collect()
        })
        .collect();
    let mut tracker = MinTracker::new(divisibility_bound(n)?);
    let mut mismatches = 0;
    for (i, row) in rows.iter().enumerate() {
        for (j, (v, same)) in row.iter().enumerate() {
            if !same {
                mismatches += 1;
            }
            tracker.observe(*v, || format!("v={} w={}", fock[i].0, fock[j].0));
        }
    }
    let adjoint_failures = random_adjointness_failures(samples, seed);
    let checks = vec![
        CountCheck::new("model mismatches", mismatches, 0),
        CountCheck::new("adjointness failures", adjoint_failures, 0),
    ];
    Ok(tracker.finish(format!("cross-model n={n}"), n as i64, false, checks))
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=12))
        .expect("nonzero denominator")
}

fn random_fock(rng: &mut impl Rng, max_degree: usize) -> FockVector {
    let mut x = FockVector::zero();
    for _ in 0..rng.gen_range(1..=6) {
        let shapes = enumerate_partitions(rng.gen_range(0..=max_degree), PartFilter::All);
        let lambda = shapes[rng.gen_range(0..shapes.len())].clone();
        x.add_term(lambda, &random_rational(rng));
    }
    x
}

fn random_poly(rng: &mut impl Rng, max_degree: usize) -> OddPoly {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=6) {
        let keys = enumerate_partitions(rng.gen_range(0..=max_degree), PartFilter::OddParts);
        terms.push((
            keys[rng.gen_range(0..keys.len())].clone(),
            random_rational(rng),
        ));
    }
    OddPoly::from_terms(terms).expect("odd keys")
}

/// Seeded spot checks of `<f_i x, y> = <x, e_i y>` in the Fock model and of
/// `<p_mu f, g> = <f, p_mu^* g>`, `<F_i f, g> = <f, E_i g>` in the polynomial model.
pub fn random_adjointness_failures(samples: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..samples {
        let (x, y) = (random_fock(&mut rng, 8), random_fock(&mut rng, 8));
        let e = rng.gen_range(1..=3);
        let i = rng.gen_range(0..e);
        if inner(&apply_f(&x, i, e), &y) != inner(&x, &apply_e(&y, i, e)) {
            failures += 1;
        }

        let (f, g) = (random_poly(&mut rng, 7), random_poly(&mut rng, 9));
        let keys = enumerate_partitions(rng.gen_range(1..=5), PartFilter::OddParts);
        let mu = &keys[rng.gen_range(0..keys.len())];
        let lhs = inner_poly(&mul_monomial(&f, mu).expect("odd"), &g);
        if lhs != inner_poly(&f, &adjoint_monomial(&g, mu).expect("odd")) {
            failures += 1;
        }
        let (raise, lower) = if rng.gen_bool(0.5) {
            (Generator::F0, Generator::E0)
        } else {
            (Generator::F1, Generator::E1)
        };
        if inner_poly(&op_generator(raise, &f), &g) != inner_poly(&f, &op_generator(lower, &g)) {
            failures += 1;
        }
    }
    failures
}

pub fn rows_to_csv(rows: &[FactorizationRow]) -> String {
    let p = rows.first().map_or(2, |r| r.p);
    let mut out = format!("n,value,v{p},bound,factorization,verdict\n");
    for r in rows {
        let bound = r.bound.map(|b| b.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.value,
            r.valuation,
            bound,
            r.factorization,
            r.verdict.as_str()
        )
        .expect("writing to a String");
    }
    out
}

pub fn rows_to_json_lines(rows: &[FactorizationRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(r).expect("row serializes"));
        out.push('\n');
    }
    out
}

/// The value as `u64` when it fits; convenience for tests and small tables.
pub fn small_value(row: &FactorizationRow) -> Option<u64> {
    row.value.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        let f = factorize(&BigUint::from(2u64.pow(15) * 103 * 163));
        assert_eq!(
            format_factorization(&BigUint::from(2u64.pow(15) * 103 * 163), &f),
            "2^15*103*163"
        );
        assert_eq!(f.exponent_of(2), 15);
        assert_eq!(
            format_factorization(&BigUint::one(), &factorize(&BigUint::one())),
            "1"
        );
        let big_prime = BigUint::from(1_000_000_007u64);
        assert_eq!(factorize(&big_prime).factors, vec![(big_prime.clone(), 1)]);
        // Product of two primes above the trial limit stays unfactored.
        let p = BigUint::from(2_147_483_647u64);
        let composite = &p * &p * BigUint::from(12u32);
        let fc = factorize(&composite);
        assert_eq!(fc.cofactor, Some(&p * &p));
        assert_eq!(
            format_factorization(&composite, &fc),
            format!("2^2*3*[{}]", &p * &p)
        );
    }

    #[test]
    fn chess_table_small() {
        let rows = chess_table(13).unwrap();
        assert_eq!(small_value(&rows[0]), Some(1));
        assert_eq!(rows[12].factorization, "2^10*3*41");
        assert!(rows.iter().all(|r| r.verdict == RowVerdict::Pass));
        assert!(chess_table(0).is_err());
    }

    #[test]
    fn exhaustive_small() {
        let cfg = ScanConfig::default();
        let r1 = exhaustive_bound_check(1, &cfg).unwrap();
        assert!(r1.passed() && r1.tight);
        assert_eq!(r1.observed_min, Valuation::Finite(0));
        for n in 2..=6 {
            let r = exhaustive_bound_check(n, &cfg).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
        assert!(matches!(
            exhaustive_bound_check(11, &cfg),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn factorial_examples() {
        assert!(factorial_check(3).unwrap());
        assert!(factorial_check(4).unwrap());
        assert_eq!(bin_ones(4), 1);
    }

    #[test]
    fn general_e_consistency() {
        let e1 = general_e_scan(8, 1, 2).unwrap();
        for r in &e1 {
            assert_eq!(r.value, factorial(r.n as u64));
            assert_eq!(r.verdict, RowVerdict::Observed);
        }
        let e2 = general_e_scan(12, 2, 2).unwrap();
        let chess = chess_table(12).unwrap();
        for (a, b) in e2.iter().zip(&chess) {
            assert_eq!(a.value, b.value);
            assert_eq!(a.valuation, b.valuation);
        }
        assert!(general_e_scan(5, 3, 4).is_err());
        assert_eq!(general_e_scan(12, 3, 3).unwrap().len(), 12);
    }

    #[test]
    fn cross_model_small() {
        let r = cross_model_check(5, 8, 7, &ScanConfig::default()).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(factorial_report(6).unwrap().passed());
        assert_eq!(random_adjointness_failures(20, 1), 0);
    }

    #[test]
    fn csv_and_json() {
        let rows = chess_table(4).unwrap();
        let csv = rows_to_csv(&rows);
        assert_eq!(
            csv,
            "n,value,v2,bound,factorization,verdict\n1,1,0,0,1,PASS\n2,2,1,1,2,PASS\n3,2,1,1,2,PASS\n4,4,2,2,2^2,PASS\n"
        );
        let json = rows_to_json_lines(&rows[3..]);
        assert_eq!(
            json,
            "{\"n\":4,\"e\":2,\"p\":2,\"value\":\"4\",\"valuation\":2,\"bound\":2,\"factorization\":\"2^2\",\"verdict\":\"PASS\"}\n"
        );
    }
}
