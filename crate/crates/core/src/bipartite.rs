//! Maximal bicliques of a bipartite graph `G[L ∪ R]`.
//!
//! Branch and bound over the smaller part. Each branch fixes a set of
//! smaller-part vertices whose common neighborhood in the larger part is the
//! other side; candidates already tried at a level (`Q`) prove a branch
//! non-maximal, candidates fully joined to the branch's closure are absorbed
//! into it, and a candidate whose neighborhood does not reach beyond the
//! closure is dropped from its level altogether.

use std::collections::VecDeque;

use crate::biclique::Biclique;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMask};
use crate::run::Deadline;
use crate::sets;

/// All maximal bicliques of the bipartite subgraph induced by `left ∪ right`,
/// in canonical order. Edges leaving `left ∪ right` are ignored.
pub fn bipartite_solve(g: &Graph, left: &[usize], right: &[usize]) -> Result<Vec<Biclique>> {
    let (found, _) = bipartite_solve_until(g, left, right, &Deadline::never())?;
    Ok(found)
}

/// As [`bipartite_solve`], stopping early once `deadline` passes. The flag
/// reports whether the search was cut short.
pub(crate) fn bipartite_solve_until(
    g: &Graph,
    left: &[usize],
    right: &[usize],
    deadline: &Deadline,
) -> Result<(Vec<Biclique>, bool)> {
    let left = sorted(left);
    let right = sorted(right);
    check_parts(g, &left, &right)?;

    let (big, small) = if left.len() >= right.len() {
        (left, right)
    } else {
        (right, left)
    };
    let mut candidates: Vec<(usize, usize)> = small
        .iter()
        .map(|&v| (sets::intersection_len(g.neighbors(v), &big), v))
        .filter(|&(c, _)| c > 0)
        .collect();
    candidates.sort_unstable();

    let mut search = Search {
        g,
        deadline,
        found: Vec::new(),
        timed_out: false,
    };
    search.expand(
        &big,
        &[],
        candidates.into_iter().map(|(_, v)| v).collect(),
        Vec::new(),
    );
    let mut found = search.found;
    found.sort_unstable();
    found.dedup();
    Ok((found, search.timed_out))
}

fn sorted(part: &[usize]) -> Vec<usize> {
    let mut part = part.to_vec();
    part.sort_unstable();
    part.dedup();
    part
}

fn check_parts(g: &Graph, left: &[usize], right: &[usize]) -> Result<()> {
    let n = g.n();
    if let Some(&v) = left.iter().chain(right).find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if let Some(&v) = sets::intersect(left, right).first() {
        return Err(Error::InvalidDecomposition(format!(
            "vertex {v} is in both parts"
        )));
    }
    for part in [left, right] {
        let mask = VertexMask::from_vertices(n, part);
        for &u in part {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| mask.contains(v)) {
                return Err(Error::NotBipartite(u.min(v), u.max(v)));
            }
        }
    }
    Ok(())
}

struct Search<'a> {
    g: &'a Graph,
    deadline: &'a Deadline,
    found: Vec<Biclique>,
    timed_out: bool,
}

impl Search<'_> {
    /// `closure` is the common neighborhood of `chosen` in the larger part;
    /// every vertex of `candidates` and `tried` meets `closure`.
    fn expand(
        &mut self,
        closure: &[usize],
        chosen: &[usize],
        candidates: VecDeque<usize>,
        mut tried: Vec<usize>,
    ) {
        let g = self.g;
        let mut candidates = candidates;
        while let Some(x) = candidates.pop_front() {
            if self.deadline.expired() {
                self.timed_out = true;
                return;
            }
            let next_closure = sets::intersect(closure, g.neighbors(x));
            let mut next_chosen = chosen.to_vec();
            next_chosen.push(x);

            let mut next_tried = Vec::new();
            let mut maximal = true;
            for &v in &tried {
                let c = sets::intersection_len(g.neighbors(v), &next_closure);
                if c == next_closure.len() {
                    maximal = false;
                    break;
                }
                if c > 0 {
                    next_tried.push(v);
                }
            }

            if maximal {
                let mut next_candidates = Vec::new();
                let mut absorbed_only = Vec::new();
                for &v in &candidates {
                    let c = sets::intersection_len(g.neighbors(v), &next_closure);
                    if c == next_closure.len() {
                        next_chosen.push(v);
                        if sets::intersection_len(g.neighbors(v), closure) == c {
                            absorbed_only.push(v);
                        }
                    } else if c > 0 {
                        next_candidates.push((c, v));
                    }
                }
                if !absorbed_only.is_empty() {
                    candidates.retain(|v| !absorbed_only.contains(v));
                }
                next_chosen.sort_unstable();
                self.found.push(Biclique::from_sorted(
                    next_closure.clone(),
                    next_chosen.clone(),
                ));
                if !next_candidates.is_empty() {
                    next_candidates.sort_unstable();
                    self.expand(
                        &next_closure,
                        &next_chosen,
                        next_candidates.into_iter().map(|(_, v)| v).collect(),
                        next_tried,
                    );
                    if self.timed_out {
                        return;
                    }
                }
            }
            tried.push(x);
        }
    }
}
