//! Subroutines shared by the enumeration algorithms.
//!
//! [`add_to`] and [`make_ind_maximal`] drive the induced (MIB) framework;
//! [`make_maximal`] and [`consensus`] drive the consensus (MB) algorithms.
//! All set algebra runs over sorted sequences.

use crate::biclique::OrientedBiclique;
use crate::graph::{Graph, VertexMask};
use crate::sets;

/// `∩_{v ∈ set} N(v)`, ascending. Empty for an empty `set`.
pub fn common_neighborhood(g: &Graph, set: &[usize]) -> Vec<usize> {
    let Some(&smallest) = set.iter().min_by_key(|&&v| g.degree(v)) else {
        return Vec::new();
    };
    let mut common = g.neighbors(smallest).to_vec();
    for &v in set {
        if common.is_empty() {
            break;
        }
        if v != smallest {
            common.retain(|&w| g.has_edge(v, w));
        }
    }
    common
}

fn has_neighbor_in(g: &Graph, v: usize, side: &[usize]) -> bool {
    side.iter().any(|&w| g.has_edge(v, w))
}

/// Extends a biclique `X × Y` to the maximal biclique `X* × Y*` with
/// `X* = ∩_{y ∈ Y} N(y)` and `Y* = ∩_{x ∈ X*} N(x)`.
///
/// The first side may be replaced wholesale; the second side only grows.
pub fn make_maximal(g: &Graph, b: &OrientedBiclique) -> OrientedBiclique {
    debug_assert!(!b.first.is_empty() && !b.second.is_empty());
    let first = common_neighborhood(g, &b.second);
    let second = common_neighborhood(g, &first);
    debug_assert!(sets::is_subset(&b.second, &second));
    OrientedBiclique { first, second }
}

/// The consensus of two bicliques: the candidates
///
/// ```text
/// (Xa ∪ Xb) × (Ya ∩ Yb)     (Xa ∩ Xb) × (Ya ∪ Yb)
/// (Xa ∪ Yb) × (Ya ∩ Xb)     (Xa ∩ Yb) × (Ya ∪ Xb)
/// ```
///
/// keeping those with both sides nonempty. Each survivor is a biclique
/// whenever both inputs are.
pub fn consensus(a: &OrientedBiclique, b: &OrientedBiclique) -> Vec<OrientedBiclique> {
    let candidates = [
        (
            sets::union(&a.first, &b.first),
            sets::intersect(&a.second, &b.second),
        ),
        (
            sets::intersect(&a.first, &b.first),
            sets::union(&a.second, &b.second),
        ),
        (
            sets::union(&a.first, &b.second),
            sets::intersect(&a.second, &b.first),
        ),
        (
            sets::intersect(&a.first, &b.second),
            sets::union(&a.second, &b.first),
        ),
    ];
    candidates
        .into_iter()
        .filter(|(x, y)| !x.is_empty() && !y.is_empty())
        .map(|(first, second)| OrientedBiclique { first, second })
        .collect()
}

/// Extends an induced biclique `C1 × C2` using only vertices of `s`.
///
/// Vertices of `s` are tried in ascending id: first each one adjacent to all
/// of `C1` and to nothing in the (growing) `C2` joins `C2`, then each one
/// adjacent to all of `C2` and to nothing in the growing `C1` joins `C1`.
/// Returns `None` if afterwards some vertex outside `s` could still extend
/// either side; otherwise the result is a maximal induced biclique.
///
/// Callers holding an empty biclique pass it through with `Option::and_then`.
pub fn make_ind_maximal(
    g: &Graph,
    c: OrientedBiclique,
    s: &VertexMask,
) -> Option<OrientedBiclique> {
    let OrientedBiclique {
        mut first,
        mut second,
    } = c;
    debug_assert!(!first.is_empty() && !second.is_empty());

    // Only common neighbors of a side can join the other side.
    for v in common_neighborhood(g, &first) {
        if s.contains(v) && !sets::contains(&second, v) && !has_neighbor_in(g, v, &second) {
            sets::insert(&mut second, v);
        }
    }
    for v in common_neighborhood(g, &second) {
        if s.contains(v) && !sets::contains(&first, v) && !has_neighbor_in(g, v, &first) {
            sets::insert(&mut first, v);
        }
    }

    if !s.is_full() {
        let extends = |side: &[usize], other: &[usize]| {
            common_neighborhood(g, side).into_iter().any(|v| {
                !s.contains(v) && !sets::contains(other, v) && !has_neighbor_in(g, v, other)
            })
        };
        if extends(&first, &second) || extends(&second, &first) {
            return None;
        }
    }
    Some(OrientedBiclique { first, second })
}

/// Adds `v` to the first side of the induced biclique `C1 × C2`, dropping
/// its neighbors from `C1` and its non-neighbors from `C2`. Returns `None`
/// when nothing of `C2` survives.
///
/// # Panics
///
/// If `v` already belongs to the biclique.
pub fn add_to(g: &Graph, c: &OrientedBiclique, v: usize) -> Option<OrientedBiclique> {
    assert!(!c.contains(v), "vertex {v} is already in the biclique");
    let nv = g.neighbors(v);
    let second = sets::intersect(&c.second, nv);
    if second.is_empty() {
        return None;
    }
    let mut first = sets::difference(&c.first, nv);
    sets::insert(&mut first, v);
    Some(OrientedBiclique { first, second })
}
