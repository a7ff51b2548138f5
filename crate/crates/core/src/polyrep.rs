//! The polynomial model of the basic representation.
//!
//! Elements are polynomials in `p_1, p_3, p_5, ...` with rational
//! coefficients, stored sparsely by exponent multiset: the monomial
//! `p_mu = p_{mu_1} p_{mu_2} ...` is keyed by the odd-part partition `mu`.
//! `p_k^* = k d/dp_k` is the adjoint of multiplication by `p_k` for the form
//! in which the `p_mu` are orthogonal with `(p_mu, p_mu) = z_mu`.
//!
//! The generators act through the vertex-operator expansion
//!
//! ```text
//! f_0 = p_1 - 1/4 S,   f_1 = 1/4 S,   S = sum_{n>=1} (-1)^{n+1} q_{n+1} q_n^*
//! e_0 = p_1^* - 1/4 T, e_1 = 1/4 T,   T = sum_{n>=1} (-1)^{n+1} q_n q_{n+1}^*
//! A_j = 1/2 sum_{n>=0, n+j>=0} (-1)^n q_n q_{n+j}^*
//! ```
//!
//! with `q_n = sum_{mu |- n odd} 2^{l(mu)} / z_mu p_mu`. Since `q_m^*` kills
//! everything of degree below `m`, each series is finite on a given input.

use std::collections::{btree_map, BTreeMap};
use std::ops::{Add, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::arith::{falling_factorial, Rational};
use crate::error::{invalid, Result};
use crate::partitions::{enumerate_partitions, z_mu_unchecked, PartFilter, Partition};
use crate::tableaux::ResidueWord;
use crate::traverse::walk_words;

/// `sum_mu c_mu p_mu` over odd-part partitions `mu`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OddPoly {
    coeffs: BTreeMap<Partition, Rational>,
}

fn check_odd(mu: &Partition) -> Result<()> {
    if !mu.has_odd_parts() {
        return invalid(format!("monomial key {mu} has an even part"));
    }
    Ok(())
}

impl OddPoly {
    pub fn zero() -> Self {
        OddPoly::default()
    }

    pub fn one() -> Self {
        OddPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut f = OddPoly::zero();
        f.add_term(Partition::empty(), &c);
        f
    }

    /// `c p_mu`.
    pub fn monomial(mu: Partition, c: Rational) -> Result<Self> {
        check_odd(&mu)?;
        let mut f = OddPoly::zero();
        f.add_term(mu, &c);
        Ok(f)
    }

    /// `p_k` for odd `k`.
    pub fn p(k: usize) -> Result<Self> {
        OddPoly::monomial(Partition::new(vec![k])?, Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut f = OddPoly::zero();
        for (mu, c) in terms {
            check_odd(&mu)?;
            f.add_term(mu, &c);
        }
        Ok(f)
    }

    fn add_term(&mut self, mu: Partition, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(mu) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Top degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.coeffs.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> OddPoly {
        if c.is_zero() {
            return OddPoly::zero();
        }
        OddPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &OddPoly) -> OddPoly {
        let mut out = OddPoly::zero();
        for (mu, a) in self.iter() {
            for (nu, b) in other.iter() {
                out.add_term(mu.union(nu), &(a * b));
            }
        }
        out
    }
}

impl Add<&OddPoly> for &OddPoly {
    type Output = OddPoly;
    fn add(self, rhs: &OddPoly) -> OddPoly {
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&OddPoly> for &OddPoly {
    type Output = OddPoly;
    fn sub(self, rhs: &OddPoly) -> OddPoly {
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

/// `f * p_mu`.
pub fn mul_monomial(f: &OddPoly, mu: &Partition) -> Result<OddPoly> {
    check_odd(mu)?;
    Ok(OddPoly {
        coeffs: f
            .iter()
            .map(|(tau, c)| (tau.union(mu), c.clone()))
            .collect(),
    })
}

/// `p_mu^* f`, where `p_mu^* = prod_k (k d/dp_k)^{m_k(mu)}`.
///
/// On `p_tau` this is zero unless `mu` is a sub-multiset of `tau`, and then
/// `prod_k k^{m_k(mu)} m_k(tau)! / (m_k(tau) - m_k(mu))!` times `p_{tau - mu}`.
pub fn adjoint_monomial(f: &OddPoly, mu: &Partition) -> Result<OddPoly> {
    check_odd(mu)?;
    Ok(adjoint_monomial_unchecked(f, mu))
}

fn adjoint_monomial_unchecked(f: &OddPoly, mu: &Partition) -> OddPoly {
    let mu_mult = mu.multiplicities();
    let mut out = OddPoly::zero();
    for (tau, c) in f.iter() {
        let Some(rest) = tau.difference(mu) else {
            continue;
        };
        let mut factor = BigInt::from(1);
        for (&k, &m) in &mu_mult {
            let have = tau.multiplicity(k) as u64;
            factor *= BigInt::from(k).pow(m as u32);
            factor *= BigInt::from(falling_factorial(have, m as u64));
        }
        out.add_term(rest, &(c * &Rational::from_integer(factor)));
    }
    out
}

/// `g^* f`, by linearity over the monomials of `g`.
pub fn apply_adjoint(g: &OddPoly, f: &OddPoly) -> OddPoly {
    let mut out = OddPoly::zero();
    for (mu, c) in g.iter() {
        for (nu, d) in adjoint_monomial_unchecked(f, mu).iter() {
            out.add_term(nu.clone(), &(c * d));
        }
    }
    out
}

fn compute_q(n: usize) -> OddPoly {
    let mut q = OddPoly::zero();
    for mu in enumerate_partitions(n, PartFilter::OddParts) {
        let c = Rational::new(
            BigInt::from(1) << mu.len(),
            BigInt::from(z_mu_unchecked(&mu)),
        )
        .expect("z_mu is positive");
        q.add_term(mu, &c);
    }
    q
}

static Q_CACHE: RwLock<Vec<Arc<OddPoly>>> = RwLock::new(Vec::new());

/// Makes sure `q_0, ..., q_max` are cached.
pub fn prepare_q(max: usize) {
    if Q_CACHE.read().expect("q cache poisoned").len() > max {
        return;
    }
    let mut cache = Q_CACHE.write().expect("q cache poisoned");
    while cache.len() <= max {
        let n = cache.len();
        cache.push(Arc::new(compute_q(n)));
    }
}

/// `q_n = sum_{mu |- n, odd parts} 2^{l(mu)} / z_mu p_mu`, computed once per `n`.
pub fn q(n: usize) -> Arc<OddPoly> {
    if let Some(cached) = Q_CACHE.read().expect("q cache poisoned").get(n) {
        return Arc::clone(cached);
    }
    prepare_q(n);
    Arc::clone(&Q_CACHE.read().expect("q cache poisoned")[n])
}

/// The form with `(p_mu, p_nu) = delta_{mu nu} z_mu`.
pub fn inner_poly(f: &OddPoly, g: &OddPoly) -> Rational {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    small
        .iter()
        .filter_map(|(mu, a)| {
            large
                .coeffs
                .get(mu)
                .map(|b| a * b * Rational::from(z_mu_unchecked(mu)))
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    F0,
    F1,
    E0,
    E1,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::F0, Generator::F1, Generator::E0, Generator::E1];

    pub fn name(self) -> &'static str {
        match self {
            Generator::F0 => "f0",
            Generator::F1 => "f1",
            Generator::E0 => "e0",
            Generator::E1 => "e1",
        }
    }
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `S f = sum_{n=1}^{max_index} (-1)^{n+1} q_{n+1} q_n^* f`.
fn raising_series(f: &OddPoly, max_index: usize) -> OddPoly {
    let mut out = OddPoly::zero();
    for n in 1..=max_index {
        let lowered = apply_adjoint(&q(n), f);
        if lowered.is_zero() {
            continue;
        }
        let term = q(n + 1).mul(&lowered).scale(&sign(n + 1));
        out = &out + &term;
    }
    out
}

/// `T f = sum_{n=1}^{max_index} (-1)^{n+1} q_n q_{n+1}^* f`.
fn lowering_series(f: &OddPoly, max_index: usize) -> OddPoly {
    let mut out = OddPoly::zero();
    for n in 1..=max_index {
        let lowered = apply_adjoint(&q(n + 1), f);
        if lowered.is_zero() {
            continue;
        }
        let term = q(n).mul(&lowered).scale(&sign(n + 1));
        out = &out + &term;
    }
    out
}

fn quarter() -> Rational {
    Rational::new(1, 4).expect("nonzero")
}

fn p1() -> Partition {
    Partition::new(vec![1]).expect("valid")
}

/// Applies a Chevalley generator, keeping the series terms with index up to
/// `max_index`. Any `max_index` at least the top degree of `f` gives the exact
/// (infinite-series) result.
pub fn op_generator_truncated(g: Generator, f: &OddPoly, max_index: usize) -> OddPoly {
    match g {
        Generator::F0 => {
            let s = raising_series(f, max_index);
            &mul_monomial(f, &p1()).expect("odd") - &s.scale(&quarter())
        }
        Generator::F1 => raising_series(f, max_index).scale(&quarter()),
        Generator::E0 => {
            let t = lowering_series(f, max_index);
            &adjoint_monomial_unchecked(f, &p1()) - &t.scale(&quarter())
        }
        Generator::E1 => lowering_series(f, max_index).scale(&quarter()),
    }
}

/// Applies a Chevalley generator exactly.
pub fn op_generator(g: Generator, f: &OddPoly) -> OddPoly {
    op_generator_truncated(g, f, f.degree().unwrap_or(0))
}

/// `A_j f` keeping the terms `n <= max_n` of `1/2 sum_n (-1)^n q_n q_{n+j}^*`.
pub fn op_a_truncated(j: i64, f: &OddPoly, max_n: i64) -> OddPoly {
    let start = (-j).max(0);
    let mut out = OddPoly::zero();
    for n in start..=max_n {
        let lowered = apply_adjoint(&q((n + j) as usize), f);
        if lowered.is_zero() {
            continue;
        }
        let term = q(n as usize).mul(&lowered).scale(&sign(n as usize));
        out = &out + &term;
    }
    out.scale(&Rational::new(1, 2).expect("nonzero"))
}

/// `A_j f`, the `z^{-j}` coefficient of the vertex operator applied to `f`.
pub fn op_a(j: i64, f: &OddPoly) -> OddPoly {
    let top = f.degree().unwrap_or(0) as i64;
    op_a_truncated(j, f, top - j)
}

/// `F_{i_n} ... F_{i_1} 1` for a word over `{0, 1}`.
pub fn apply_word_poly(v: &ResidueWord) -> Result<OddPoly> {
    if v.e() != 2 {
        return invalid(format!(
            "the polynomial model needs e = 2, got e = {}",
            v.e()
        ));
    }
    prepare_q(v.len() + 1);
    Ok(v.letters().iter().fold(OddPoly::one(), |f, &i| {
        let g = if i == 0 { Generator::F0 } else { Generator::F1 };
        op_generator(g, &f)
    }))
}

/// Polynomial images of all `2^n` words of length `n`, in lexicographic order.
///
/// Both children of a node share the series `S`, so it is evaluated once.
pub fn all_word_images_poly(n: usize) -> Result<Vec<(ResidueWord, OddPoly)>> {
    prepare_q(n + 1);
    walk_words(2, n, OddPoly::one(), |f| {
        let s = raising_series(f, f.degree().unwrap_or(0)).scale(&quarter());
        let f0 = &mul_monomial(f, &p1()).expect("odd") - &s;
        vec![f0, s]
    })
}
