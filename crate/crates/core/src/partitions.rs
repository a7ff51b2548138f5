//! Partitions, Young-diagram cells, residues, and the Glaisher bijection.
//!
//! Residues follow the `row - col (mod e)` convention. A good part of the
//! literature uses `col - row`; for `e = 2` the two agree, for larger `e` they
//! differ by the relabeling `i -> -i`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::arith::factorial;
use crate::error::{invalid, Error, Result};

/// A nonincreasing sequence of positive integers.
///
/// Ordered by size first, then lexicographically on the parts, so maps keyed
/// by partitions iterate degree by degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return invalid(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("partition {parts:?} is not nonincreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into nonincreasing order first.
    pub fn from_multiset(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based), zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Part -> multiplicity, for parts that occur.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn has_odd_parts(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |col| Cell::new(i + 1, col)))
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    parts.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    parts.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Partition { parts }
    }

    /// Multiset difference `self - other`, or `None` if `other` is not a sub-multiset.
    pub fn difference(&self, other: &Partition) -> Option<Partition> {
        let mut parts = Vec::with_capacity(self.len());
        let mut sub = other.parts.iter().peekable();
        for &p in &self.parts {
            match sub.peek() {
                Some(&&q) if q == p => {
                    sub.next();
                }
                Some(&&q) if q > p => return None,
                _ => parts.push(p),
            }
        }
        sub.peek().is_none().then_some(Partition { parts })
    }

    /// The partition with `cell` added. `cell` must be addable.
    pub fn with_cell(&self, cell: Cell) -> Partition {
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            debug_assert_eq!(cell.row, parts.len() + 1);
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    /// The partition with `cell` removed. `cell` must be removable.
    pub fn without_cell(&self, cell: Cell) -> Partition {
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    /// Every cell that can be added while staying a partition, top row first.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for (i, &len) in self.parts.iter().enumerate() {
            if i == 0 || self.parts[i - 1] > len {
                cells.push(Cell::new(i + 1, len + 1));
            }
        }
        cells.push(Cell::new(self.len() + 1, 1));
        cells
    }

    /// Every cell whose removal leaves a partition, top row first.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let n = self.len();
        (0..n)
            .filter(|&i| i + 1 == n || self.parts[i + 1] < self.parts[i])
            .map(|i| Cell::new(i + 1, self.parts[i]))
            .collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"[6,4,1]"`, `"6,4,1"` or `"[]"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    pub fn residue(self, e: usize) -> usize {
        cell_residue(self, e)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `(row - col) mod e`, in `0..e`. Panics if `e == 0`.
pub fn cell_residue(c: Cell, e: usize) -> usize {
    assert!(e >= 1, "residues need e >= 1");
    (c.row as i64 - c.col as i64).rem_euclid(e as i64) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartFilter {
    All,
    OddParts,
    DistinctParts,
}

/// All partitions of `n` passing `filter`, in lexicographically descending order.
pub fn enumerate_partitions(n: usize, filter: PartFilter) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_part: usize,
        filter: PartFilter,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            match filter {
                PartFilter::OddParts if p % 2 == 0 => continue,
                _ => {}
            }
            cur.push(p);
            let next_max = match filter {
                PartFilter::DistinctParts => p - 1,
                _ => p,
            };
            go(remaining - p, next_max, filter, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    go(n, n, filter, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Addable,
    Removable,
}

/// Addable or removable cells of `lambda` whose `e`-residue is `i`.
pub fn boundary_cells(lambda: &Partition, i: usize, e: usize, dir: Boundary) -> Vec<Cell> {
    let cells = match dir {
        Boundary::Addable => lambda.addable_cells(),
        Boundary::Removable => lambda.removable_cells(),
    };
    cells
        .into_iter()
        .filter(|&c| cell_residue(c, e) == i)
        .collect()
}

/// `prod_k k^{m_k} m_k!` for a partition with odd parts.
pub fn z_mu(mu: &Partition) -> Result<BigUint> {
    if !mu.has_odd_parts() {
        return invalid(format!("z_mu needs odd parts, got {mu}"));
    }
    Ok(z_mu_unchecked(mu))
}

pub(crate) fn z_mu_unchecked(mu: &Partition) -> BigUint {
    mu.multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (k, m)| {
            acc * BigUint::from(k).pow(m as u32) * factorial(m as u64)
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlaisherDirection {
    OddToDistinct,
    DistinctToOdd,
}

/// Glaisher's bijection between odd-part and distinct-part partitions of the same size.
///
/// Odd to distinct: each power `2^r` in the binary expansion of `m_k` gives a
/// part `2^r k`. Distinct to odd: a part `2^r k` with `k` odd gives `2^r`
/// copies of `k`.
pub fn glaisher(mu: &Partition, dir: GlaisherDirection) -> Result<Partition> {
    match dir {
        GlaisherDirection::OddToDistinct => {
            if !mu.has_odd_parts() {
                return invalid(format!("{mu} does not have odd parts"));
            }
            let mut parts = Vec::new();
            for (k, m) in mu.multiplicities() {
                let mut bits = m;
                let mut r = 0;
                while bits > 0 {
                    if bits & 1 == 1 {
                        parts.push(k << r);
                    }
                    bits >>= 1;
                    r += 1;
                }
            }
            Partition::from_multiset(parts)
        }
        GlaisherDirection::DistinctToOdd => {
            if !mu.has_distinct_parts() {
                return invalid(format!("{mu} does not have distinct parts"));
            }
            let mut parts = Vec::new();
            for &p in mu.parts() {
                let r = p.trailing_zeros();
                let k = p >> r;
                parts.extend(std::iter::repeat_n(k, 1 << r));
            }
            Partition::from_multiset(parts)
        }
    }
}
