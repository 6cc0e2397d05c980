//! Maximal induced biclique enumeration.
//!
//! [`run_framework`] explores outward from a seed set of MIBs: every popped
//! MIB `X × Y` is combined with each vertex `j` of the iteration set `I_S`
//! via [`add_to`] on both orientations, and the results are re-maximalized
//! within `I_S` by [`make_ind_maximal`]. Provided every MIB `A × B` of the
//! graph has a seed `A' × B'` with `A \ I_S ⊆ A'`, `B \ I_S ⊆ B'` and
//! sharing at least one vertex with `A ∪ B`, the exploration returns exactly
//! the MIBs of the graph.
//!
//! Two seedings meet that condition:
//!
//! * [`seed_enum_mib`] iterates over all of `V`, so any seed touching a MIB
//!   covers it; one seed per non-isolated vertex suffices.
//! * [`seed_oct_mib2`] iterates only over an OCT set `O`. MIBs with both
//!   sides meeting `L ∪ R` are covered by extensions of the maximal bicliques
//!   of the bipartite part; MIBs with one side inside `O` are covered by
//!   extending `I × {v}` for every `v ∈ O` and every maximal independent set
//!   `I` of `v`'s bipartite neighborhood; MIBs inside `O` are touched by the
//!   extended edge seeds of the `O` vertices.

use std::collections::VecDeque;
use std::time::Instant;

use rustc_hash::FxHashSet;

use crate::biclique::{Biclique, BicliqueStore, EnumerationResult, OrientedBiclique};
use crate::bipartite::bipartite_solve_until;
use crate::decomposition::{ensure_valid, OctDecomposition, Side};
use crate::error::Result;
use crate::graph::{Graph, VertexMask};
use crate::kernels::{add_to, make_ind_maximal};
use crate::run::{Deadline, RunOptions};
use crate::sets;

/// Iteration set and seed MIBs for [`run_framework`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeedConfig {
    /// `I_S`, ascending.
    pub iteration_set: Vec<usize>,
    /// Distinct seed MIBs, in discovery order.
    pub seeds: Vec<Biclique>,
}

#[derive(Default)]
struct SeedCollector {
    seen: FxHashSet<Biclique>,
    seeds: Vec<Biclique>,
}

impl SeedCollector {
    fn push(&mut self, b: Biclique) {
        if self.seen.insert(b.clone()) {
            self.seeds.push(b);
        }
    }

    fn extend_from(&mut self, g: &Graph, first: Vec<usize>, second: Vec<usize>) {
        let full = VertexMask::full(g.n());
        let mib = make_ind_maximal(g, OrientedBiclique::new(first, second), &full)
            .expect("extension within all of V always succeeds");
        self.push(mib.canonical());
    }

    /// Extends `{v} × {u}` for the smallest neighbor `u` of `v`.
    fn extend_edge(&mut self, g: &Graph, v: usize) {
        if let Some(&u) = g.neighbors(v).first() {
            self.extend_from(g, vec![v], vec![u]);
        }
    }
}

/// Seeds for enumerating over the whole vertex set.
pub fn seed_enum_mib(g: &Graph) -> SeedConfig {
    let mut seeds = SeedCollector::default();
    for v in 0..g.n() {
        seeds.extend_edge(g, v);
    }
    SeedConfig {
        iteration_set: (0..g.n()).collect(),
        seeds: seeds.seeds,
    }
}

/// Seeds for enumerating over the OCT set of `d`.
pub fn seed_oct_mib2(g: &Graph, d: &OctDecomposition) -> Result<SeedConfig> {
    let (cfg, _) = seed_oct_mib2_until(g, d, &Deadline::never())?;
    Ok(cfg)
}

fn seed_oct_mib2_until(
    g: &Graph,
    d: &OctDecomposition,
    deadline: &Deadline,
) -> Result<(SeedConfig, bool)> {
    ensure_valid(g, d)?;
    let mut seeds = SeedCollector::default();
    let done = |seeds: SeedCollector, timed_out| {
        let cfg = SeedConfig {
            iteration_set: d.oct().to_vec(),
            seeds: seeds.seeds,
        };
        Ok((cfg, timed_out))
    };

    let (bipartite, timed_out) = bipartite_solve_until(g, d.left(), d.right(), deadline)?;
    for b in bipartite {
        seeds.extend_from(g, b.x().to_vec(), b.y().to_vec());
    }
    if timed_out {
        return done(seeds, true);
    }

    for &v in d.oct() {
        let around: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| d.side_of(w) != Side::Oct)
            .collect();
        if around.is_empty() {
            continue;
        }
        let (sub, mapping) = g.induced_subgraph(&around)?;
        let (sets, timed_out) = mis_until(&sub, deadline);
        for independent in sets {
            let side = independent.iter().map(|&i| mapping[i]).collect();
            seeds.extend_from(g, side, vec![v]);
        }
        if timed_out {
            return done(seeds, true);
        }
    }

    for &v in d.oct() {
        seeds.extend_edge(g, v);
    }
    done(seeds, false)
}

/// All maximal independent sets of `g`, each ascending.
///
/// Bron–Kerbosch with pivoting on the complement graph. Meant for small
/// graphs such as neighborhoods; the output can be exponential in `n`.
pub fn enumerate_mis(g: &Graph) -> Vec<Vec<usize>> {
    mis_until(g, &Deadline::never()).0
}

fn mis_until(g: &Graph, deadline: &Deadline) -> (Vec<Vec<usize>>, bool) {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let timed_out = !bron_kerbosch(
        g,
        &mut current,
        (0..g.n()).collect(),
        Vec::new(),
        &mut out,
        deadline,
    );
    (out, timed_out)
}

/// Returns false once `deadline` has passed.
fn bron_kerbosch(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    deadline: &Deadline,
) -> bool {
    if candidates.is_empty() && excluded.is_empty() {
        let mut set = current.clone();
        set.sort_unstable();
        out.push(set);
        return true;
    }
    if deadline.expired() {
        return false;
    }
    // Pivot: the vertex independent of the most candidates.
    let blocked = |u: usize| {
        sets::intersection_len(&candidates, g.neighbors(u))
            + sets::contains(&candidates, u) as usize
    };
    let Some(pivot) = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .min_by_key(|&u| blocked(u))
    else {
        return true;
    };
    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| v == pivot || g.has_edge(v, pivot))
        .collect();
    for v in branch {
        let keep = |set: &[usize]| -> Vec<usize> {
            set.iter()
                .copied()
                .filter(|&w| w != v && !g.has_edge(v, w))
                .collect()
        };
        current.push(v);
        let ok = bron_kerbosch(
            g,
            current,
            keep(&candidates),
            keep(&excluded),
            out,
            deadline,
        );
        current.pop();
        if !ok {
            return false;
        }
        candidates.retain(|&w| w != v);
        sets::insert(&mut excluded, v);
    }
    true
}

/// Explores from `cfg.seeds` until no new MIB appears. The result holds
/// exactly the MIBs of `g` when the seeds satisfy the coverage condition
/// described in the module docs.
pub fn run_framework(g: &Graph, cfg: &SeedConfig, opts: &RunOptions) -> EnumerationResult {
    let start = Instant::now();
    let deadline = Deadline::after(opts.timeout);
    let mut store = opts.store();
    let timed_out = explore(g, cfg, &deadline, &mut store);
    EnumerationResult::new("framework", store, start.elapsed().as_secs_f64(), timed_out)
}

/// Returns true if the deadline cut the exploration short.
fn explore(g: &Graph, cfg: &SeedConfig, deadline: &Deadline, store: &mut BicliqueStore) -> bool {
    let scope = VertexMask::from_vertices(g.n(), &cfg.iteration_set);
    let mut queue = VecDeque::new();
    for seed in &cfg.seeds {
        if store.insert(seed.clone()) {
            queue.push_back(seed.clone());
        }
    }
    while let Some(b) = queue.pop_front() {
        if deadline.expired() {
            return true;
        }
        let orientations = [b.oriented(), b.flipped()];
        for &j in &cfg.iteration_set {
            if b.contains(j) {
                continue;
            }
            for side in &orientations {
                let Some(found) = add_to(g, side, j).and_then(|c| make_ind_maximal(g, c, &scope))
                else {
                    continue;
                };
                let found = found.canonical();
                if !store.contains(&found) {
                    store.insert(found.clone());
                    queue.push_back(found);
                }
            }
        }
    }
    false
}

/// Enumerates all MIBs of `g` iterating over every vertex.
pub fn enum_mib(g: &Graph, opts: &RunOptions) -> EnumerationResult {
    let start = Instant::now();
    let deadline = Deadline::after(opts.timeout);
    let cfg = seed_enum_mib(g);
    let mut store = opts.store();
    let timed_out = explore(g, &cfg, &deadline, &mut store);
    EnumerationResult::new("enum-mib", store, start.elapsed().as_secs_f64(), timed_out)
}

/// Enumerates all MIBs of `g` iterating over the OCT set of `d` only.
pub fn oct_mib2(g: &Graph, d: &OctDecomposition, opts: &RunOptions) -> Result<EnumerationResult> {
    let start = Instant::now();
    let deadline = Deadline::after(opts.timeout);
    let (cfg, seeding_timed_out) = seed_oct_mib2_until(g, d, &deadline)?;
    let mut store = opts.store();
    let timed_out = if seeding_timed_out {
        store.extend(cfg.seeds);
        true
    } else {
        explore(g, &cfg, &deadline, &mut store)
    };
    Ok(EnumerationResult::new(
        "oct-mib2",
        store,
        start.elapsed().as_secs_f64(),
        timed_out,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracle;
    use std::time::Duration;

    fn bic(x: &[usize], y: &[usize]) -> Biclique {
        Biclique::new(x.to_vec(), y.to_vec()).unwrap()
    }

    fn split(n: usize, l: &[usize], r: &[usize], o: &[usize]) -> OctDecomposition {
        OctDecomposition::new(n, l.to_vec(), r.to_vec(), o.to_vec()).unwrap()
    }

    fn all(g: &Graph) -> Vec<Biclique> {
        enum_mib(g, &RunOptions::default()).into_sorted_vec()
    }

    #[test]
    fn framework_examples() {
        let c5 = cycle(5);
        let found = all(&c5);
        assert_eq!(found.len(), 5);
        assert_eq!(found, oracle::brute_mibs(&c5).unwrap());
        for v in 0..5 {
            assert!(found.contains(&bic(&[v], &[(v + 1) % 5, (v + 4) % 5])));
        }
        assert_eq!(all(&complete_bipartite(2, 2)), vec![bic(&[0, 1], &[2, 3])]);
        let k3 = all(&complete(3));
        assert_eq!(k3, vec![bic(&[0], &[1]), bic(&[0], &[2]), bic(&[1], &[2])]);
    }

    #[test]
    fn enum_mib_seeds() {
        assert_eq!(seed_enum_mib(&path(3)).seeds, vec![bic(&[0, 2], &[1])]);
        let edgeless = seed_enum_mib(&Graph::empty(3));
        assert!(edgeless.seeds.is_empty());
        assert_eq!(enum_mib(&Graph::empty(3), &RunOptions::default()).count, 0);
        // Vertices 0 and 1 both seed {0} × {1}.
        assert_eq!(
            seed_enum_mib(&complete(3)).seeds,
            vec![bic(&[0], &[1]), bic(&[0], &[2])]
        );
    }

    #[test]
    fn oct_mib2_seeds_on_bipartite_are_the_bicliques() {
        let p4 = path(4);
        let d = split(4, &[0, 2], &[1, 3], &[]);
        let cfg = seed_oct_mib2(&p4, &d).unwrap();
        assert!(cfg.iteration_set.is_empty());
        let mut seeds = cfg.seeds.clone();
        seeds.sort();
        assert_eq!(
            seeds,
            crate::bipartite::bipartite_solve(&p4, &[0, 2], &[1, 3]).unwrap()
        );
        let run = run_framework(&p4, &cfg, &RunOptions::default());
        assert_eq!(run.into_sorted_vec(), seeds);
    }

    #[test]
    fn oct_mib2_triangle() {
        let k3 = complete(3);
        let d = split(3, &[0], &[1], &[2]);
        let cfg = seed_oct_mib2(&k3, &d).unwrap();
        assert_eq!(cfg.iteration_set, vec![2]);
        for b in [bic(&[0], &[1]), bic(&[0], &[2]), bic(&[1], &[2])] {
            assert!(cfg.seeds.contains(&b));
        }
        let run = oct_mib2(&k3, &d, &RunOptions::default()).unwrap();
        assert_eq!(run.count, 3);
    }

    #[test]
    fn oct_mib2_cycle_matches_enum_mib() {
        let c5 = cycle(5);
        let d = split(5, &[0, 2], &[1, 3], &[4]);
        let run = oct_mib2(&c5, &d, &RunOptions::default()).unwrap();
        assert_eq!(run.algorithm, "oct-mib2");
        assert_eq!(run.into_sorted_vec(), all(&c5));
    }

    #[test]
    fn oct_mib2_rejects_invalid_decomposition() {
        let k3 = complete(3);
        let d = split(3, &[0, 1], &[2], &[]);
        assert!(oct_mib2(&k3, &d, &RunOptions::default()).is_err());
    }

    #[test]
    fn mis_examples() {
        assert_eq!(enumerate_mis(&Graph::empty(3)), vec![vec![0, 1, 2]]);
        let mut edge = enumerate_mis(&path(2));
        edge.sort();
        assert_eq!(edge, vec![vec![0], vec![1]]);
        let mut p3 = enumerate_mis(&path(3));
        p3.sort();
        assert_eq!(p3, vec![vec![0, 2], vec![1]]);
        assert_eq!(enumerate_mis(&Graph::empty(0)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn mis_matches_exhaustive_check() {
        // Petersen graph: 0..5 outer cycle, 5..10 inner pentagram.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let g = Graph::from_edges(10, edges).unwrap();
        let mut found = enumerate_mis(&g);
        found.sort();
        let mut expected = Vec::new();
        for mask in 0u32..1 << 10 {
            let set: Vec<usize> = (0..10).filter(|&v| mask >> v & 1 == 1).collect();
            let independent = set.iter().all(|&u| set.iter().all(|&v| !g.has_edge(u, v)));
            let maximal = (0..10)
                .filter(|v| !set.contains(v))
                .all(|v| set.iter().any(|&u| g.has_edge(u, v)));
            if independent && maximal {
                expected.push(set);
            }
        }
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn pops_bounded_and_only_mibs() {
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 3),
                (1, 5),
            ],
        )
        .unwrap();
        let run = enum_mib(&g, &RunOptions::default());
        for b in run.bicliques.iter() {
            assert!(b.is_induced_in(&g));
        }
        assert_eq!(run.into_sorted_vec(), oracle::brute_mibs(&g).unwrap());
    }

    #[test]
    fn timeout_flags_partial() {
        let g = complete_bipartite(6, 6);
        let opts = RunOptions::with_timeout(Duration::ZERO);
        assert!(enum_mib(&g, &opts).timed_out);
        let d = split(
            12,
            &(0..6).collect::<Vec<_>>(),
            &[],
            &(6..12).collect::<Vec<_>>(),
        );
        assert!(oct_mib2(&g, &d, &opts).unwrap().timed_out);
    }

    #[test]
    fn keys_only_counts_match() {
        let g = cycle(7);
        let opts = RunOptions {
            keep_order: false,
            ..RunOptions::default()
        };
        let run = enum_mib(&g, &opts);
        assert!(!run.bicliques.is_ordered());
        assert_eq!(run.count, oracle::brute_mibs(&g).unwrap().len());
    }
}
