//! Shared-prefix walk over all words of a fixed length.
//!
//! Each word image is obtained from the image of its prefix by one more
//! operator application, so the `e^n` images cost one application per tree
//! node instead of `n` per word. The top of the tree is expanded serially and
//! the subtrees below it are walked on the rayon pool; results come back in
//! lexicographic word order regardless of scheduling.

use rayon::prelude::*;

use crate::error::Result;
use crate::tableaux::ResidueWord;

/// Depth at which subtrees are handed to workers.
fn split_depth(e: usize, n: usize) -> usize {
    let target = 4 * rayon::current_num_threads().max(1);
    let mut depth = 0;
    let mut width = 1usize;
    while depth < n && width < target && e > 1 {
        width = width.saturating_mul(e);
        depth += 1;
    }
    depth
}

/// Images of all words of length `n` over `0..e`, in lexicographic order.
///
/// `expand` maps the image of a prefix to the images of its `e` one-letter
/// extensions, in letter order.
pub(crate) fn walk_words<S, F>(
    e: usize,
    n: usize,
    root: S,
    expand: F,
) -> Result<Vec<(ResidueWord, S)>>
where
    S: Clone + Send + Sync,
    F: Fn(&S) -> Vec<S> + Sync,
{
    let depth = split_depth(e, n);
    let mut frontier = vec![(Vec::new(), root)];
    for _ in 0..depth {
        frontier = frontier
            .into_iter()
            .flat_map(|(prefix, state)| {
                let children = expand(&state);
                debug_assert_eq!(children.len(), e);
                children
                    .into_iter()
                    .enumerate()
                    .map(move |(letter, child)| {
                        let mut p: Vec<usize> = prefix.clone();
                        p.push(letter);
                        (p, child)
                    })
            })
            .collect();
    }

    let chunks: Vec<Vec<(Vec<usize>, S)>> = frontier
        .into_par_iter()
        .map(|(prefix, state)| {
            let mut out = Vec::new();
            let mut letters = prefix;
            descend(&expand, n, &mut letters, state, &mut out);
            out
        })
        .collect();

    chunks
        .into_iter()
        .flatten()
        .map(|(letters, s)| Ok((ResidueWord::new(e, letters)?, s)))
        .collect()
}

fn descend<S, F>(
    expand: &F,
    n: usize,
    letters: &mut Vec<usize>,
    state: S,
    out: &mut Vec<(Vec<usize>, S)>,
) where
    F: Fn(&S) -> Vec<S>,
{
    if letters.len() == n {
        out.push((letters.clone(), state));
        return;
    }
    for (letter, child) in expand(&state).into_iter().enumerate() {
        letters.push(letter);
        descend(expand, n, letters, child, out);
        letters.pop();
    }
}
