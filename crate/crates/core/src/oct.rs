//! Computing odd cycle transversals.
//!
//! The enumeration algorithms are correct for any valid decomposition; a
//! smaller OCT set only makes them faster. [`greedy_oct`] is a quick
//! heuristic, [`min_oct_exhaustive`] an exact search for small graphs.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposition::{OctDecomposition, Side};
use crate::graph::Graph;

/// BFS 2-coloring of the vertices not in `removed`, visiting components
/// from `roots` in order. Returns `Left`/`Right` tags (removed vertices are
/// tagged `Oct`) and whether the coloring is proper.
fn two_color(g: &Graph, removed: &[bool], roots: &[usize]) -> (Vec<Side>, bool) {
    let mut side = vec![Side::Oct; g.n()];
    let mut colored = vec![false; g.n()];
    let mut proper = true;
    let mut queue = VecDeque::new();
    for &root in roots {
        if removed[root] || colored[root] {
            continue;
        }
        colored[root] = true;
        side[root] = Side::Left;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let other = if side[u] == Side::Left {
                Side::Right
            } else {
                Side::Left
            };
            for &w in g.neighbors(u) {
                if removed[w] {
                    continue;
                }
                if !colored[w] {
                    colored[w] = true;
                    side[w] = other;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    proper = false;
                }
            }
        }
    }
    (side, proper)
}

/// Heuristic OCT decomposition.
///
/// 2-colors the remaining graph by BFS (component roots visited in an
/// order shuffled by `rng_seed`) and, while the coloring has monochromatic
/// edges, moves the vertex with the most of them into `O`, smaller id first
/// on ties, and colors again. Finally each `O` vertex, in ascending order,
/// is put back if the rest stays bipartite.
pub fn greedy_oct(g: &Graph, rng_seed: u64) -> OctDecomposition {
    let n = g.n();
    let mut roots: Vec<usize> = (0..n).collect();
    roots.shuffle(&mut ChaCha8Rng::seed_from_u64(rng_seed));
    let mut removed = vec![false; n];
    let mut side = loop {
        let (side, proper) = two_color(g, &removed, &roots);
        if proper {
            break side;
        }
        let conflicts = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| !removed[w] && side[w] == side[v])
                .count()
        };
        let worst = (0..n)
            .filter(|&v| !removed[v])
            .max_by_key(|&v| (conflicts(v), std::cmp::Reverse(v)))
            .expect("an improper coloring has a conflicting vertex");
        removed[worst] = true;
    };

    for v in 0..n {
        if !removed[v] {
            continue;
        }
        removed[v] = false;
        let (candidate, proper) = two_color(g, &removed, &roots);
        if proper {
            side = candidate;
        } else {
            removed[v] = true;
        }
    }
    OctDecomposition::from_sides(side)
}

/// A minimum OCT decomposition with `|O| <= k_max`, by trying every vertex
/// subset in order of size. Exponential; intended for `n <= 20`.
pub fn min_oct_exhaustive(g: &Graph, k_max: usize) -> Option<OctDecomposition> {
    let n = g.n();
    let roots: Vec<usize> = (0..n).collect();
    let mut removed = vec![false; n];
    for k in 0..=k_max.min(n) {
        // Lexicographic k-combinations of 0..n.
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            for &v in &pick {
                removed[v] = true;
            }
            let (side, proper) = two_color(g, &removed, &roots);
            for &v in &pick {
                removed[v] = false;
            }
            if proper {
                return Some(OctDecomposition::from_sides(side));
            }
            let Some(i) = (0..k).rev().find(|&i| pick[i] < n - k + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    None
}
