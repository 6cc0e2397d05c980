//! Exponential-time reference enumerators for small graphs.
//!
//! These work on adjacency bitmasks and share no code with the algorithms
//! they are used to check.

use std::collections::BTreeSet;

use crate::biclique::Biclique;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_MIB_VERTICES: usize = 16;
pub const MAX_MB_VERTICES: usize = 20;

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect()
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// Every maximal induced biclique of `g`, in canonical order.
///
/// Assigns each vertex to `X`, `Y`, or neither, pruning any partial
/// assignment that already breaks independence or completeness, then keeps
/// the complete assignments that no outside vertex can extend.
pub fn brute_mibs(g: &Graph) -> Result<Vec<Biclique>> {
    if g.n() > MAX_MIB_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: MAX_MIB_VERTICES,
        });
    }
    let adj = masks(g);
    let mut found = BTreeSet::new();
    assign(&adj, 0, 0, 0, &mut found);
    Ok(found.into_iter().collect())
}

fn assign(adj: &[u32], v: usize, x: u32, y: u32, found: &mut BTreeSet<Biclique>) {
    if v == adj.len() {
        if x != 0 && y != 0 && is_maximal_induced(adj, x, y) {
            found.insert(Biclique::new(members(x), members(y)).unwrap());
        }
        return;
    }
    assign(adj, v + 1, x, y, found);
    let a = adj[v];
    // First vertex used goes to X, so each unordered pair is built once.
    if a & x == 0 && subset(y, a) {
        assign(adj, v + 1, x | 1 << v, y, found);
    }
    if x != 0 && a & y == 0 && subset(x, a) {
        assign(adj, v + 1, x, y | 1 << v, found);
    }
}

fn is_maximal_induced(adj: &[u32], x: u32, y: u32) -> bool {
    (0..adj.len()).all(|w| {
        if (x | y) >> w & 1 == 1 {
            return true;
        }
        let a = adj[w];
        let joins_x = a & x == 0 && subset(y, a);
        let joins_y = a & y == 0 && subset(x, a);
        !joins_x && !joins_y
    })
}

/// Every maximal biclique of `g`, in canonical order.
///
/// For each nonempty `Y`, closes `X* = ∩ N(Y)` and `Y* = ∩ N(X*)`; the
/// pair is kept when `Y ⊆ Y*`. Every maximal biclique is such a closure.
pub fn brute_mbs(g: &Graph) -> Result<Vec<Biclique>> {
    if g.n() > MAX_MB_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: MAX_MB_VERTICES,
        });
    }
    let adj = masks(g);
    let n = adj.len();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let common = |set: u32| {
        (0..n)
            .filter(|&v| set >> v & 1 == 1)
            .fold(full, |acc, v| acc & adj[v])
    };
    let mut found = BTreeSet::new();
    for y in 1..=full {
        let xs = common(y);
        if xs == 0 {
            continue;
        }
        let ys = common(xs);
        if subset(y, ys) {
            found.insert(Biclique::new(members(xs), members(ys)).unwrap());
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn bic(x: &[usize], y: &[usize]) -> Biclique {
        Biclique::new(x.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn mib_examples() {
        assert_eq!(brute_mibs(&path(3)).unwrap(), vec![bic(&[0, 2], &[1])]);
        let c5 = brute_mibs(&cycle(5)).unwrap();
        assert_eq!(c5.len(), 5);
        for v in 0..5 {
            assert!(c5.contains(&bic(&[v], &[(v + 1) % 5, (v + 4) % 5])));
        }
        let k3 = brute_mibs(&complete(3)).unwrap();
        assert_eq!(k3, vec![bic(&[0], &[1]), bic(&[0], &[2]), bic(&[1], &[2])]);
    }

    #[test]
    fn mb_examples() {
        let k3 = brute_mbs(&complete(3)).unwrap();
        assert_eq!(
            k3,
            vec![bic(&[0], &[1, 2]), bic(&[0, 1], &[2]), bic(&[0, 2], &[1])]
        );
        assert_eq!(
            brute_mbs(&complete_bipartite(2, 2)).unwrap(),
            vec![bic(&[0, 1], &[2, 3])]
        );
        assert_eq!(
            brute_mbs(&path(4)).unwrap(),
            vec![bic(&[0, 2], &[1]), bic(&[1, 3], &[2])]
        );
        assert_eq!(
            brute_mbs(&complete_bipartite(1, 3)).unwrap(),
            vec![bic(&[0], &[1, 2, 3])]
        );
    }

    #[test]
    fn edgeless_has_nothing() {
        assert!(brute_mibs(&Graph::empty(4)).unwrap().is_empty());
        assert!(brute_mbs(&Graph::empty(4)).unwrap().is_empty());
    }

    #[test]
    fn size_caps() {
        assert!(matches!(
            brute_mibs(&Graph::empty(17)),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            brute_mbs(&Graph::empty(21)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn bipartite_mibs_equal_mbs() {
        for g in [path(6), cycle(6), complete_bipartite(3, 2)] {
            assert_eq!(brute_mibs(&g).unwrap(), brute_mbs(&g).unwrap());
        }
    }
}
