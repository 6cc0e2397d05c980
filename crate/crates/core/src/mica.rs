//! Consensus-based maximal biclique enumeration.
//!
//! Both algorithms start from the maximalized stars `{v} × N(v)` of a set
//! of centers and grow a working set `C` of maximal bicliques by repeatedly
//! taking the consensus of a star with each member of `C` and maximalizing
//! the candidates, until a full sweep adds nothing.
//!
//! [`mica`] uses every vertex as a center. [`oct_mica`] first lists the
//! maximal bicliques of the bipartite part `G[L ∪ R]`, maximalizes them in
//! `G`, and only needs stars centered in the OCT set.

use std::time::Instant;

use rustc_hash::FxHashSet;

use crate::biclique::{Biclique, EnumerationResult, OrientedBiclique};
use crate::bipartite::bipartite_solve_until;
use crate::decomposition::{ensure_valid, OctDecomposition};
use crate::error::Result;
use crate::graph::Graph;
use crate::kernels::{consensus, make_maximal};
use crate::run::{Deadline, RunOptions};

/// Maximal bicliques of `g` by consensus from the stars of all vertices.
pub fn mica(g: &Graph, opts: &RunOptions) -> EnumerationResult {
    let start = Instant::now();
    let deadline = Deadline::after(opts.timeout);
    let centers: Vec<usize> = (0..g.n()).collect();
    let stars = stars(g, &centers);
    let (found, timed_out) = closure(g, &stars, Vec::new(), &deadline);
    let mut store = opts.store();
    store.extend(found);
    EnumerationResult::new("mica", store, start.elapsed().as_secs_f64(), timed_out)
}

/// Maximal bicliques of `g` using the OCT decomposition `d`.
pub fn oct_mica(g: &Graph, d: &OctDecomposition, opts: &RunOptions) -> Result<EnumerationResult> {
    ensure_valid(g, d)?;
    let start = Instant::now();
    let deadline = Deadline::after(opts.timeout);

    let (bipartite, cut_short) = bipartite_solve_until(g, d.left(), d.right(), &deadline)?;
    let extended: Vec<Biclique> = bipartite
        .iter()
        .map(|b| make_maximal(g, &b.oriented()).canonical())
        .collect();
    let stars = stars(g, d.oct());
    let (found, timed_out) = if cut_short {
        let mut partial = extended;
        partial.extend(stars.into_iter().map(OrientedBiclique::canonical));
        (partial, true)
    } else {
        closure(g, &stars, extended, &deadline)
    };

    let mut store = opts.store();
    store.extend(found);
    Ok(EnumerationResult::new(
        "oct-mica",
        store,
        start.elapsed().as_secs_f64(),
        timed_out,
    ))
}

/// Maximalized stars of the non-isolated `centers`, without repeats.
fn stars(g: &Graph, centers: &[usize]) -> Vec<OrientedBiclique> {
    let mut seen = FxHashSet::default();
    centers
        .iter()
        .filter(|&&v| g.degree(v) > 0)
        .map(|&v| make_maximal(g, &OrientedBiclique::new(vec![v], g.neighbors(v).to_vec())))
        .filter(|star| seen.insert(star.clone()))
        .collect()
}

/// Grows `initial ∪ stars` under consensus with the stars. Returns the
/// working set and whether the deadline cut it short.
fn closure(
    g: &Graph,
    stars: &[OrientedBiclique],
    initial: Vec<Biclique>,
    deadline: &Deadline,
) -> (Vec<Biclique>, bool) {
    let mut working: Vec<Biclique> = initial;
    working.extend(stars.iter().cloned().map(OrientedBiclique::canonical));
    working.sort_unstable();
    working.dedup();
    let mut index: FxHashSet<Biclique> = working.iter().cloned().collect();

    let mut found = true;
    while found {
        found = false;
        for star in stars {
            // Members appended during this pass are visited in the same pass.
            let mut i = 0;
            while i < working.len() {
                if deadline.expired() {
                    return (working, true);
                }
                let member = working[i].oriented();
                for candidate in consensus(star, &member) {
                    let maximal = make_maximal(g, &candidate).canonical();
                    if !index.contains(&maximal) {
                        index.insert(maximal.clone());
                        working.push(maximal);
                        found = true;
                    }
                }
                i += 1;
            }
        }
    }
    (working, false)
}
