//! The lattice `Delta = Z_(2)[p_1, 2 p_3, 4 p_5, ...]` and its verifiers.
//!
//! `Delta` is free over `Z_(2)` on `b_mu = 2^{(|mu| - l(mu))/2} p_mu`, so the
//! largest `t` with `f` in `2^t Delta` is
//! `min_mu v_2(c_mu) - (|mu| - l(mu))/2`. Every verifier below reduces its
//! claim to comparisons of that number (or a plain 2-adic valuation) against a
//! bound, over all basis elements up to some degree.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{tri_count, Rational, Valuation};
use crate::error::{invalid, Result};
use crate::gf2::{self, BitRow};
use crate::partitions::{enumerate_partitions, PartFilter, Partition};
use crate::polyrep::{
    all_word_images_poly, apply_adjoint, inner_poly, op_generator, prepare_q, q, Generator, OddPoly,
};

pub type DeltaValuation = Valuation;

/// Witnesses kept per report besides the minimizer.
const MAX_FAILURE_WITNESSES: usize = 16;

fn half_excess(mu: &Partition) -> i64 {
    ((mu.size() - mu.len()) / 2) as i64
}

pub fn delta_valuation(f: &OddPoly) -> DeltaValuation {
    f.iter()
        .map(|(mu, c)| c.v2().shift(-half_excess(mu)))
        .min()
        .unwrap_or(Valuation::Infinite)
}

/// `b_mu = 2^{(|mu| - l(mu))/2} p_mu`.
pub fn basis_element(mu: &Partition) -> Result<OddPoly> {
    OddPoly::monomial(mu.clone(), Rational::pow2(half_excess(mu)))
}

/// Odd-part partitions of every size up to `max_degree`, smallest first.
pub fn basis_keys(max_degree: usize) -> Vec<Partition> {
    (0..=max_degree)
        .flat_map(|d| {
            let mut keys = enumerate_partitions(d, PartFilter::OddParts);
            keys.reverse();
            keys
        })
        .collect()
}

/// Coordinates of `f` in the basis `b_mu` for `mu` in `keys`.
pub fn coordinates(f: &OddPoly, keys: &[Partition]) -> Vec<Rational> {
    keys.iter()
        .map(|mu| f.coeff(mu) * Rational::pow2(-half_excess(mu)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub input: String,
    pub valuation: Valuation,
}

/// An exact count that must come out equal to `expected`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub name: String,
    pub observed: usize,
    pub expected: usize,
}

impl CountCheck {
    pub fn new(name: impl Into<String>, observed: usize, expected: usize) -> Self {
        CountCheck {
            name: name.into(),
            observed,
            expected,
        }
    }

    pub fn holds(&self) -> bool {
        self.observed == self.expected
    }
}

/// Outcome of one verifier run.
///
/// `witnesses` holds the first input attaining `observed_min`, followed by up
/// to a handful of inputs that fell below `required`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationReport {
    pub claim: String,
    pub degree_bound: i64,
    pub observed_min: Valuation,
    pub required: i64,
    pub tightness_claimed: bool,
    pub tight: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CountCheck>,
    pub witnesses: Vec<Witness>,
    pub verdict: Verdict,
}

impl ValuationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One human-readable line.
    pub fn summary(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        let mut line = format!(
            "{verdict} {} (degree {}): min {} vs required {}",
            self.claim, self.degree_bound, self.observed_min, self.required
        );
        if self.tightness_claimed {
            line.push_str(if self.tight { ", tight" } else { ", NOT tight" });
        }
        for c in &self.checks {
            line.push_str(&format!(", {} {}/{}", c.name, c.observed, c.expected));
        }
        if let Some(w) = self.witnesses.first() {
            line.push_str(&format!(", witness {} -> {}", w.input, w.valuation));
        }
        line
    }
}

/// Accumulates (valuation, input) observations in a fixed order.
pub(crate) struct MinTracker {
    required: i64,
    min: Option<Witness>,
    failures: Vec<Witness>,
}

impl MinTracker {
    pub(crate) fn new(required: i64) -> Self {
        MinTracker {
            required,
            min: None,
            failures: Vec::new(),
        }
    }

    pub(crate) fn observe(&mut self, valuation: Valuation, input: impl FnOnce() -> String) {
        let below = !valuation.at_least(self.required);
        let better = self.min.as_ref().is_none_or(|m| valuation < m.valuation);
        if !below && !better {
            return;
        }
        let w = Witness {
            input: input(),
            valuation,
        };
        if below && self.failures.len() < MAX_FAILURE_WITNESSES {
            self.failures.push(w.clone());
        }
        if better {
            self.min = Some(w);
        }
    }

    pub(crate) fn finish(
        self,
        claim: String,
        degree_bound: i64,
        tightness_claimed: bool,
        checks: Vec<CountCheck>,
    ) -> ValuationReport {
        let observed_min = self
            .min
            .as_ref()
            .map_or(Valuation::Infinite, |w| w.valuation);
        let tight = observed_min == Valuation::Finite(self.required);
        let mut ok = observed_min.at_least(self.required);
        if tightness_claimed {
            ok &= tight;
        }
        ok &= checks.iter().all(CountCheck::holds);
        let mut witnesses: Vec<Witness> = self.min.iter().cloned().collect();
        witnesses.extend(
            self.failures
                .into_iter()
                .filter(|w| Some(w) != self.min.as_ref()),
        );
        ValuationReport {
            claim,
            degree_bound,
            observed_min,
            required: self.required,
            tightness_claimed,
            tight,
            checks,
            witnesses,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Multiply,
    Adjoint,
}

fn parity(n: usize) -> i64 {
    (n % 2) as i64
}

/// Exponent `t` such that the operator should send `Delta` into `2^t Delta`.
pub fn q_image_exponent(n: usize, side: Side) -> i64 {
    let n = n as i64;
    let eps = parity(n as usize);
    match side {
        Side::Multiply => -(n + eps - 4) / 2,
        Side::Adjoint => (n - eps + 2) / 2,
    }
}

/// Checks that multiplication by `q_n` (or `q_n^*`) maps every basis element of
/// degree at most `degree_bound` into `2^t Delta` for the exponent `t` of
/// [`q_image_exponent`].
pub fn verify_q_image(n: usize, degree_bound: usize, side: Side) -> Result<ValuationReport> {
    if n < 1 {
        return invalid("verify_q_image needs n >= 1");
    }
    let required = q_image_exponent(n, side);
    let qn = q(n);
    let keys = basis_keys(degree_bound);
    let results: Vec<Valuation> = keys
        .par_iter()
        .map(|mu| {
            let b = basis_element(mu).expect("odd key");
            let image = match side {
                Side::Multiply => qn.mul(&b),
                Side::Adjoint => apply_adjoint(&qn, &b),
            };
            delta_valuation(&image)
        })
        .collect();
    let mut tracker = MinTracker::new(required);
    let op = match side {
        Side::Multiply => format!("q_{n} *"),
        Side::Adjoint => format!("q_{n}^*"),
    };
    for (mu, v) in keys.iter().zip(results) {
        tracker.observe(v, || format!("{op} b{mu}"));
    }
    let claim = match side {
        Side::Multiply => format!("q-image multiply n={n}"),
        Side::Adjoint => format!("q-image adjoint n={n}"),
    };
    Ok(tracker.finish(claim, degree_bound as i64, false, Vec::new()))
}

/// Checks that `e_0, e_1, f_0, f_1` map every basis element of degree at most
/// `degree_bound` back into `Delta`.
pub fn verify_stability(degree_bound: usize) -> Result<ValuationReport> {
    if degree_bound < 1 {
        return invalid("verify_stability needs degree_bound >= 1");
    }
    prepare_q(degree_bound + 2);
    let keys = basis_keys(degree_bound);
    let jobs: Vec<(Generator, &Partition)> = keys
        .iter()
        .flat_map(|mu| Generator::ALL.into_iter().map(move |g| (g, mu)))
        .collect();
    let results: Vec<Valuation> = jobs
        .par_iter()
        .map(|(g, mu)| delta_valuation(&op_generator(*g, &basis_element(mu).expect("odd key"))))
        .collect();
    let mut tracker = MinTracker::new(0);
    for ((g, mu), v) in jobs.iter().zip(results) {
        tracker.observe(v, || format!("{} b{mu}", g.name()));
    }
    Ok(tracker.finish(
        "stability".to_string(),
        degree_bound as i64,
        false,
        Vec::new(),
    ))
}

/// Checks that the images of all `2^n` words of length `n` span `Delta_n` over `Z_(2)`.
///
/// The images lie in `Delta_n` (their Delta-valuation is checked to be
/// nonnegative), so spanning is equivalent to their coordinate vectors
/// reduced mod 2 having full rank.
pub fn verify_generation(n: usize) -> Result<ValuationReport> {
    if n < 1 {
        return invalid("verify_generation needs n >= 1");
    }
    let keys: Vec<Partition> = enumerate_partitions(n, PartFilter::OddParts);
    let images = all_word_images_poly(n)?;
    let mut tracker = MinTracker::new(0);
    let mut rows = BTreeSet::new();
    for (word, image) in &images {
        tracker.observe(delta_valuation(image), || format!("word {word}"));
        let mut row = BitRow::zeros(keys.len());
        for (j, c) in coordinates(image, &keys).iter().enumerate() {
            if c.v2() == Valuation::Finite(0) {
                row.set(j);
            }
        }
        if !row.is_zero() {
            rows.insert(row);
        }
    }
    let rank = CountCheck::new("mod-2 rank", gf2::rank(rows), keys.len());
    Ok(tracker.finish(format!("generation n={n}"), n as i64, false, vec![rank]))
}

/// Checks `v_2(<f, g>) >= n - a(n)` over all pairs of degree-`n` basis
/// elements, and that the bound is attained.
pub fn verify_pairing(n: usize) -> Result<ValuationReport> {
    if n < 1 {
        return invalid("verify_pairing needs n >= 1");
    }
    let required = n as i64 - tri_count(n as u64)? as i64;
    let keys = enumerate_partitions(n, PartFilter::OddParts);
    let basis: Vec<OddPoly> = keys.iter().map(basis_element).collect::<Result<_>>()?;
    let mut tracker = MinTracker::new(required);
    for (i, f) in basis.iter().enumerate() {
        for (j, g) in basis.iter().enumerate() {
            let v = inner_poly(f, g).v2();
            tracker.observe(v, || format!("<b{}, b{}>", keys[i], keys[j]));
        }
    }
    Ok(tracker.finish(format!("pairing n={n}"), n as i64, true, Vec::new()))
}
