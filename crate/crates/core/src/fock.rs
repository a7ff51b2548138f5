//! The Fock space: finitely supported vectors indexed by partitions.
//!
//! `f_i` adds a cell of residue `i` in every possible way and `e_i` removes
//! one. Applying `f_{i_n} ... f_{i_1}` to the empty partition gives a vector
//! whose coefficient on `lambda` counts the standard tableaux of shape
//! `lambda` with residue word `(i_1, ..., i_n)`.

use std::collections::{btree_map, BTreeMap, BTreeSet};
use std::ops::{Add, Sub};

use num_bigint::BigUint;

use crate::arith::Rational;
use crate::error::{invalid, Result};
use crate::partitions::{boundary_cells, Boundary, Partition};
use crate::tableaux::ResidueWord;
use crate::traverse::walk_words;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    coeffs: BTreeMap<Partition, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    /// The basis vector of the empty partition.
    pub fn vacuum() -> Self {
        FockVector::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut v = FockVector::zero();
        v.add_term(lambda, &Rational::one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut v = FockVector::zero();
        for (lambda, c) in terms {
            v.add_term(lambda, &c);
        }
        v
    }

    /// Adds `c |lambda>`, dropping the entry if it cancels.
    pub fn add_term(&mut self, lambda: Partition, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
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

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
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

    pub fn scale(&self, c: &Rational) -> FockVector {
        if c.is_zero() {
            return FockVector::zero();
        }
        FockVector {
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, x)| (l.clone(), x * c))
                .collect(),
        }
    }

    /// Sizes of the partitions in the support.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.coeffs.keys().map(Partition::size).collect()
    }
}

impl Add<&FockVector> for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (l, c) in rhs.iter() {
            out.add_term(l.clone(), c);
        }
        out
    }
}

impl Sub<&FockVector> for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (l, c) in rhs.iter() {
            out.add_term(l.clone(), &-c);
        }
        out
    }
}

fn apply_boundary(x: &FockVector, i: usize, e: usize, dir: Boundary) -> FockVector {
    let mut out = FockVector::zero();
    for (lambda, c) in x.iter() {
        for cell in boundary_cells(lambda, i, e, dir) {
            let mu = match dir {
                Boundary::Addable => lambda.with_cell(cell),
                Boundary::Removable => lambda.without_cell(cell),
            };
            out.add_term(mu, c);
        }
    }
    out
}

/// `f_i`: add a cell of `e`-residue `i`.
pub fn apply_f(x: &FockVector, i: usize, e: usize) -> FockVector {
    apply_boundary(x, i, e, Boundary::Addable)
}

/// `e_i`: remove a cell of `e`-residue `i`.
pub fn apply_e(x: &FockVector, i: usize, e: usize) -> FockVector {
    apply_boundary(x, i, e, Boundary::Removable)
}

/// `f_{i_n} ... f_{i_1} |empty>`.
pub fn apply_word(v: &ResidueWord) -> FockVector {
    v.letters()
        .iter()
        .fold(FockVector::vacuum(), |x, &i| apply_f(&x, i, v.e()))
}

/// The inner product in which the partitions are orthonormal.
pub fn inner(x: &FockVector, y: &FockVector) -> Rational {
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    small
        .iter()
        .filter_map(|(l, a)| large.coeffs.get(l).map(|b| a * b))
        .sum()
}

/// `sum_lambda C_e(v, lambda) C_e(w, lambda)`.
pub fn pair_sum(v: &ResidueWord, w: &ResidueWord) -> Result<BigUint> {
    if v.len() != w.len() {
        return invalid(format!("words of lengths {} and {}", v.len(), w.len()));
    }
    if v.e() != w.e() {
        return invalid(format!("words over e = {} and e = {}", v.e(), w.e()));
    }
    inner(&apply_word(v), &apply_word(w)).to_count()
}

/// Images of all `e^n` words of length `n`, in lexicographic word order.
pub fn all_word_images(e: usize, n: usize) -> Result<Vec<(ResidueWord, FockVector)>> {
    if e == 0 {
        return invalid("e must be positive");
    }
    walk_words(e, n, FockVector::vacuum(), |x| {
        (0..e).map(|i| apply_f(x, i, e)).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn one() -> Rational {
        Rational::one()
    }

    fn word(letters: &[usize]) -> ResidueWord {
        ResidueWord::new(2, letters.to_vec()).unwrap()
    }

    #[test]
    fn f_examples() {
        let vac = FockVector::vacuum();
        assert_eq!(apply_f(&vac, 0, 2), FockVector::basis(p("[1]")));
        assert!(apply_f(&vac, 1, 2).is_zero());
        let f1 = apply_f(&FockVector::basis(p("[1]")), 1, 2);
        assert_eq!(
            f1,
            FockVector::from_terms([(p("[2]"), one()), (p("[1,1]"), one())])
        );
    }

    #[test]
    fn e_examples() {
        let single = FockVector::basis(p("[1]"));
        assert_eq!(apply_e(&single, 0, 2), FockVector::vacuum());
        assert!(apply_e(&single, 1, 2).is_zero());
        let sum = FockVector::from_terms([(p("[2]"), one()), (p("[1,1]"), one())]);
        assert_eq!(
            apply_e(&sum, 1, 2),
            FockVector::basis(p("[1]")).scale(&Rational::from(2))
        );
    }

    #[test]
    fn word_examples() {
        assert_eq!(apply_word(&word(&[0])), FockVector::basis(p("[1]")));
        let x = apply_word(&word(&[0, 1, 0, 1]));
        assert_eq!(inner(&x, &x), Rational::from(4));
        assert!(apply_word(&word(&[1, 0, 1])).is_zero());
        assert!(x
            .iter()
            .all(|(l, c)| l.size() == 4 && c.is_integer() && !c.is_negative()));
    }

    #[test]
    fn inner_examples() {
        let a = FockVector::basis(p("[2,1]"));
        let b = FockVector::basis(p("[3]"));
        assert_eq!(inner(&a, &a), one());
        assert_eq!(inner(&a, &b), Rational::zero());
        let f1 = apply_f(&FockVector::basis(p("[1]")), 1, 2);
        assert_eq!(inner(&f1, &f1), Rational::from(2));
    }

    #[test]
    fn pair_sum_examples() {
        assert_eq!(
            pair_sum(&ResidueWord::alternating(7), &ResidueWord::alternating(7)).unwrap(),
            BigUint::from(48u32)
        );
        assert_eq!(
            pair_sum(&ResidueWord::alternating(10), &ResidueWord::alternating(10)).unwrap(),
            BigUint::from(2048u32)
        );
        assert_eq!(
            pair_sum(&word(&[0]), &word(&[1])).unwrap(),
            BigUint::from(0u32)
        );
        assert!(pair_sum(&word(&[0]), &word(&[0, 1])).is_err());
        let w3 = ResidueWord::new(3, vec![0]).unwrap();
        assert!(pair_sum(&word(&[0]), &w3).is_err());
    }

    #[test]
    fn gradedness() {
        let x = &apply_word(&word(&[0, 1, 1])) + &FockVector::basis(p("[4,1]"));
        for i in 0..2 {
            let up: Vec<usize> = apply_f(&x, i, 2).degrees().into_iter().collect();
            assert!(up.iter().all(|d| *d == 4 || *d == 6));
            let down = apply_e(&x, i, 2).degrees();
            assert!(down.iter().all(|d| *d == 2 || *d == 4));
        }
    }

    #[test]
    fn e1_words_give_factorial() {
        let mut fact = BigUint::from(1u32);
        for n in 1..=10usize {
            fact *= n;
            let x = apply_word(&ResidueWord::new(1, vec![0; n]).unwrap());
            assert_eq!(inner(&x, &x).to_count().unwrap(), fact);
        }
    }

    #[test]
    fn batch_images_match_direct() {
        for e in 1..=3 {
            let all = all_word_images(e, 5).unwrap();
            assert_eq!(all.len(), e.pow(5));
            for (w, img) in &all {
                assert_eq!(img, &apply_word(w));
            }
        }
    }
}
