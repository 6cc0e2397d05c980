//! OCT decompositions `[L, R, O]`: a vertex partition in which `L` and `R`
//! are independent sets, so that removing the odd cycle transversal `O`
//! leaves the bipartite graph `G[L ∪ R]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Oct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctDecomposition {
    left: Vec<usize>,
    right: Vec<usize>,
    oct: Vec<usize>,
    side_of: Vec<Side>,
}

impl OctDecomposition {
    /// Builds a partition of `0..n`. Fails if the parts overlap, do not
    /// cover every vertex, or mention ids `>= n`. Edges are not checked here;
    /// see [`validate_oct`].
    pub fn new(n: usize, left: Vec<usize>, right: Vec<usize>, oct: Vec<usize>) -> Result<Self> {
        let mut side_of: Vec<Option<Side>> = vec![None; n];
        for (part, side) in [
            (&left, Side::Left),
            (&right, Side::Right),
            (&oct, Side::Oct),
        ] {
            for &v in part {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if side_of[v].replace(side).is_some() {
                    return Err(Error::InvalidDecomposition(format!(
                        "vertex {v} appears in more than one part"
                    )));
                }
            }
        }
        let side_of = side_of
            .into_iter()
            .enumerate()
            .map(|(v, s)| {
                s.ok_or_else(|| {
                    Error::InvalidDecomposition(format!("vertex {v} is not assigned to a part"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let sorted = |mut part: Vec<usize>| {
            part.sort_unstable();
            part
        };
        Ok(OctDecomposition {
            left: sorted(left),
            right: sorted(right),
            oct: sorted(oct),
            side_of,
        })
    }

    /// Builds a decomposition from a per-vertex tag.
    pub fn from_sides(side_of: Vec<Side>) -> Self {
        let mut parts = [Vec::new(), Vec::new(), Vec::new()];
        for (v, side) in side_of.iter().enumerate() {
            let idx = match side {
                Side::Left => 0,
                Side::Right => 1,
                Side::Oct => 2,
            };
            parts[idx].push(v);
        }
        let [left, right, oct] = parts;
        OctDecomposition {
            left,
            right,
            oct,
            side_of,
        }
    }

    /// Every vertex in `O`.
    pub fn all_oct(n: usize) -> Self {
        Self::from_sides(vec![Side::Oct; n])
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn oct(&self) -> &[usize] {
        &self.oct
    }

    pub fn side_of(&self, v: usize) -> Side {
        self.side_of[v]
    }

    pub fn n(&self) -> usize {
        self.side_of.len()
    }

    pub fn n_left(&self) -> usize {
        self.left.len()
    }

    pub fn n_right(&self) -> usize {
        self.right.len()
    }

    pub fn n_oct(&self) -> usize {
        self.oct.len()
    }

    /// `n_B = n_L + n_R`
    pub fn n_bipartite(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Parses the three-line `L: ..`, `R: ..`, `O: ..` format over `0..n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut parts: [Option<Vec<usize>>; 3] = [None, None, None];
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let (tag, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(format!("expected `L:`, `R:` or `O:`, got `{line}`")))?;
            let slot = match tag.trim() {
                "L" => 0,
                "R" => 1,
                "O" => 2,
                other => return Err(parse_err(format!("unknown part `{other}`"))),
            };
            if parts[slot].is_some() {
                return Err(parse_err(format!("part `{}` given twice", tag.trim())));
            }
            let ids = rest
                .split_whitespace()
                .map(|f| {
                    f.parse::<usize>()
                        .map_err(|_| parse_err(format!("`{f}` is not a vertex id")))
                })
                .collect::<Result<Vec<_>>>()?;
            parts[slot] = Some(ids);
        }
        let [left, right, oct] = parts;
        let missing = |name: &str| Error::InvalidDecomposition(format!("missing `{name}:` line"));
        OctDecomposition::new(
            n,
            left.ok_or_else(|| missing("L"))?,
            right.ok_or_else(|| missing("R"))?,
            oct.ok_or_else(|| missing("O"))?,
        )
    }
}

impl fmt::Display for OctDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (tag, part) in [("L", &self.left), ("R", &self.right), ("O", &self.oct)] {
            write!(f, "{tag}:")?;
            for v in part {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" => Ok(Side::Left),
            "R" => Ok(Side::Right),
            "O" => Ok(Side::Oct),
            other => Err(Error::InvalidDecomposition(format!(
                "unknown side `{other}`"
            ))),
        }
    }
}

/// Edges of `g` that lie inside `L` or inside `R`; empty iff the decomposition
/// is valid. Fails if `d` is a partition of a different vertex count.
pub fn validate_oct(g: &Graph, d: &OctDecomposition) -> Result<Vec<(usize, usize)>> {
    if d.n() != g.n() {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition covers {} vertices but the graph has {}",
            d.n(),
            g.n()
        )));
    }
    Ok(g.edges()
        .filter(|&(u, v)| {
            let (su, sv) = (d.side_of(u), d.side_of(v));
            su == sv && su != Side::Oct
        })
        .collect())
}

/// Like [`validate_oct`] but turns a violation into an error.
pub fn ensure_valid(g: &Graph, d: &OctDecomposition) -> Result<()> {
    match validate_oct(g, d)?.first() {
        None => Ok(()),
        Some(&(u, v)) => Err(Error::NotBipartite(u, v)),
    }
}
