//! Enumeration of maximal bicliques and maximal induced bicliques,
//! parameterized by the size of an odd cycle transversal (OCT).
//!
//! A biclique `X × Y` is a pair of disjoint, nonempty vertex sets with every
//! edge between them present. It is *induced* when `X` and `Y` are also
//! independent sets. Given a decomposition of the vertices into `L`, `R`
//! and `O` such that `G[L ∪ R]` is bipartite, [`oct_mib2`] lists the maximal
//! induced bicliques and [`oct_mica`] the maximal bicliques; both spend most
//! of their effort on the bipartite part.
//!
//! ```
//! use bicliques::{greedy_oct, oct_mib2, oct_mica, Graph, RunOptions};
//!
//! // A 5-cycle: odd, so one vertex has to go into the OCT set.
//! let g: Graph = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n".parse()?;
//! let d = greedy_oct(&g, 0);
//! assert_eq!(d.n_oct(), 1);
//!
//! let mibs = oct_mib2(&g, &d, &RunOptions::default())?;
//! let mbs = oct_mica(&g, &d, &RunOptions::default())?;
//! assert_eq!((mibs.count, mbs.count), (5, 5));
//! let listed: Vec<String> = mibs.bicliques.iter().map(|b| b.to_string()).collect();
//! assert_eq!(listed[0], "0 | 1,4");
//! # Ok::<(), bicliques::Error>(())
//! ```
//!
//! The [`oracle`] module holds exhaustive reference implementations for
//! small graphs, [`generator`] a seeded source of near-bipartite test
//! instances and [`bench`] a CSV sweep harness.

pub mod bench;
mod biclique;
pub mod bipartite;
mod decomposition;
mod error;
pub mod generator;
mod graph;
pub mod kernels;
pub mod mib;
pub mod mica;
pub mod oct;
pub mod oracle;
mod run;
mod sets;

pub use biclique::{Biclique, BicliqueStore, EnumerationResult, OrientedBiclique};
pub use bipartite::bipartite_solve;
pub use decomposition::{ensure_valid, validate_oct, OctDecomposition, Side};
pub use error::{Error, Result};
pub use generator::{generate, realized_stats, DensityReport, GeneratorParams};
pub use graph::{Graph, VertexMask};
pub use mib::{enum_mib, oct_mib2};
pub use mica::{mica, oct_mica};
pub use oct::{greedy_oct, min_oct_exhaustive};
pub use run::{Algorithm, Deadline, RunOptions};
