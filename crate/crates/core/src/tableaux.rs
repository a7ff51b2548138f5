//! Brute-force oracles over standard Young tableaux.
//!
//! Everything here walks growth sequences (chains of partitions adding one
//! cell at a time), which is exponential. The Fock-space code in
//! [`crate::fock`] computes the same counts by linear algebra; these functions
//! exist to check it.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{invalid, Error, Result};
use crate::partitions::{cell_residue, Cell, Partition};

/// A sequence of residues mod `e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueWord {
    e: usize,
    letters: Vec<usize>,
}

impl ResidueWord {
    pub fn new(e: usize, letters: Vec<usize>) -> Result<Self> {
        if e == 0 {
            return invalid("residue words need e >= 1");
        }
        if let Some(&bad) = letters.iter().find(|&&l| l >= e) {
            return invalid(format!("letter {bad} is not a residue mod {e}"));
        }
        Ok(ResidueWord { e, letters })
    }

    /// `(0, 1, ..., e-1, 0, 1, ...)` truncated to length `n`.
    pub fn cyclic(e: usize, n: usize) -> Result<Self> {
        ResidueWord::new(e, (0..n).map(|k| k % e.max(1)).collect())
    }

    /// The chess word `(0, 1, 0, 1, ...)` of length `n`.
    pub fn alternating(n: usize) -> Self {
        ResidueWord {
            e: 2,
            letters: (0..n).map(|k| k % 2).collect(),
        }
    }

    /// Parses a comma separated list such as `"0,1,0,1"`. The empty string is the empty word.
    pub fn parse(e: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return ResidueWord::new(e, Vec::new());
        }
        let letters = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad residue word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ResidueWord::new(e, letters)
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The `idx`-th word of length `n` in lexicographic order (first letter most significant).
    pub fn from_index(e: usize, n: usize, mut idx: usize) -> Result<Self> {
        let mut letters = vec![0; n];
        for slot in letters.iter_mut().rev() {
            *slot = idx % e;
            idx /= e;
        }
        ResidueWord::new(e, letters)
    }
}

impl fmt::Display for ResidueWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ResidueWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) mod {}", self.e)
    }
}

/// A standard Young tableau, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates that `rows` is a bijective filling by `1..=n`, increasing along rows and columns.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x > n || seen[x] {
                    return invalid(format!("entry {x} is out of range or repeated"));
                }
                seen[x] = true;
                if j > 0 && row[j - 1] >= x {
                    return invalid(format!("row {} is not increasing", i + 1));
                }
                if i > 0 && rows[i - 1][j] >= x {
                    return invalid(format!("column {} is not increasing", j + 1));
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    /// `cells[k-1]` is the cell holding `k`.
    pub fn cells_by_entry(&self) -> Vec<Cell> {
        let mut cells = vec![Cell::new(1, 1); self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                cells[x - 1] = Cell::new(i + 1, j + 1);
            }
        }
        cells
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Size limits for the exhaustive tableau oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauOracle {
    pub max_size: usize,
}

impl Default for TableauOracle {
    fn default() -> Self {
        TableauOracle { max_size: 14 }
    }
}

impl TableauOracle {
    pub fn new(max_size: usize) -> Self {
        TableauOracle { max_size }
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if lambda.size() > self.max_size {
            return Err(Error::ResourceLimit {
                what: "tableau oracle shape",
                size: lambda.size(),
                limit: self.max_size,
            });
        }
        Ok(())
    }

    /// All standard Young tableaux of shape `lambda`.
    ///
    /// Entries are placed in increasing order; at each step the next entry goes
    /// into a row that is still short of `lambda` and shorter than the row above.
    pub fn enumerate_syt(&self, lambda: &Partition) -> Result<Vec<Tableau>> {
        self.check(lambda)?;
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
        grow(lambda, &mut rows, 1, None, &mut |rows| {
            out.push(Tableau {
                shape: lambda.clone(),
                rows: rows.to_vec(),
            });
        });
        Ok(out)
    }

    /// Number of tableaux of shape `lambda` with residue word `v`.
    ///
    /// Same walk as [`enumerate_syt`](Self::enumerate_syt), pruned as soon as a
    /// placed cell has the wrong residue.
    pub fn count_by_residue(&self, v: &ResidueWord, lambda: &Partition) -> Result<u64> {
        if v.len() != lambda.size() {
            return invalid(format!(
                "word of length {} against shape {lambda} of size {}",
                v.len(),
                lambda.size()
            ));
        }
        self.check(lambda)?;
        let mut count = 0u64;
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
        grow(lambda, &mut rows, 1, Some(v), &mut |_| count += 1);
        Ok(count)
    }
}

fn grow(
    shape: &Partition,
    rows: &mut Vec<Vec<usize>>,
    next: usize,
    word: Option<&ResidueWord>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if next > shape.size() {
        visit(rows);
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        if len >= shape.parts()[r] || (r > 0 && rows[r - 1].len() <= len) {
            continue;
        }
        if let Some(w) = word {
            if cell_residue(Cell::new(r + 1, len + 1), w.e()) != w.letters()[next - 1] {
                continue;
            }
        }
        rows[r].push(next);
        grow(shape, rows, next + 1, word, visit);
        rows[r].pop();
    }
}

/// Letter `k-1` is the residue of the cell holding `k`.
pub fn residue_word(t: &Tableau, e: usize) -> ResidueWord {
    let letters = t
        .cells_by_entry()
        .into_iter()
        .map(|c| cell_residue(c, e))
        .collect();
    ResidueWord { e, letters }
}

/// Whether the entry in every cell `(i, j)` has the parity of `i + j + 1`.
pub fn is_chess(t: &Tableau) -> bool {
    t.cells_by_entry()
        .iter()
        .enumerate()
        .all(|(k, c)| (k + 1) % 2 == (c.row + c.col + 1) % 2)
}

/// Number of standard Young tableaux of shape `lambda`, by the hook-length formula.
pub fn hook_count(lambda: &Partition) -> BigUint {
    let conj: Vec<usize> = (1..=lambda.row_len(1))
        .map(|col| lambda.parts().iter().filter(|&&p| p >= col).count())
        .collect();
    let hooks = lambda.cells().fold(BigUint::one(), |acc, c| {
        let arm = lambda.row_len(c.row) - c.col;
        let leg = conj[c.col - 1] - c.row;
        acc * (arm + leg + 1)
    });
    factorial(lambda.size() as u64) / hooks
}
