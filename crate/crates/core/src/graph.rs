//! Undirected simple graphs on vertices `0..n`.
//!
//! A [`Graph`] keeps two views of the same edge set: per-vertex neighbor lists
//! sorted ascending, used for merge-style set algebra, and per-vertex hash
//! sets, used for constant-time adjacency tests and for taking subgraphs.

use std::fmt::Write as _;
use std::str::FromStr;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    keyed: Vec<FxHashSet<usize>>,
    m: usize,
    labels: Option<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, repeated edges (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut keyed = vec![FxHashSet::default(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !keyed[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            keyed[v].insert(u);
            m += 1;
        }
        let adjacency = keyed
            .iter()
            .map(|set| {
                let mut list: Vec<usize> = set.iter().copied().collect();
                list.sort_unstable();
                list
            })
            .collect();
        Ok(Graph {
            adjacency,
            keyed,
            m,
            labels: None,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            keyed: vec![FxHashSet::default(); n],
            m: 0,
            labels: None,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Non-neighbors of `v`, excluding `v` itself, ascending.
    pub fn non_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&u| u != v && !self.keyed[v].contains(&u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.keyed[u].contains(&v)
    }

    /// Constant-lookup neighbor index of `v`.
    pub fn neighbor_set(&self, v: usize) -> &FxHashSet<usize> {
        &self.keyed[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// External label of internal vertex `v`; the identity unless this graph
    /// was produced by [`Graph::induced_subgraph`].
    pub fn label(&self, v: usize) -> usize {
        self.labels.as_ref().map_or(v, |labels| labels[v])
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in
    /// ascending order of the original ids. The returned mapping sends each
    /// new id back to the id it had in `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut mapping = vertices.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        if let Some(&v) = mapping.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut position = vec![usize::MAX; n];
        for (new, &old) in mapping.iter().enumerate() {
            position[old] = new;
        }
        let mut keyed = vec![FxHashSet::default(); mapping.len()];
        let mut adjacency = Vec::with_capacity(mapping.len());
        let mut m2 = 0;
        for (new, &old) in mapping.iter().enumerate() {
            let list: Vec<usize> = self.adjacency[old]
                .iter()
                .filter_map(|&w| (position[w] != usize::MAX).then_some(position[w]))
                .collect();
            m2 += list.len();
            keyed[new].extend(list.iter().copied());
            adjacency.push(list);
        }
        let labels = mapping.iter().map(|&old| self.label(old)).collect();
        let sub = Graph {
            adjacency,
            keyed,
            m: m2 / 2,
            labels: Some(labels),
        };
        Ok((sub, mapping))
    }

    /// Normalized edge-list rendering: header `n m`, then one `u v` line per
    /// edge with `u < v`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 + self.m * 12);
        writeln!(out, "{} {}", self.n(), self.m).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses the edge-list format: `#` comment lines, a header `n m`, then
    /// exactly `m` edge lines of two whitespace-separated decimal ids.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            edges.push(parse_pair(line, text)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let malformed = |message: String| Error::Parse { line, message };
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| malformed(format!("expected two integers, got `{text}`")))?;
        field
            .parse()
            .map_err(|_| malformed(format!("`{field}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(malformed(format!("trailing fields in `{text}`")));
    }
    Ok(pair)
}

/// Membership mask over `0..n`, used for vertex scopes such as `S` in
/// [`make_ind_maximal`](crate::kernels::make_ind_maximal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMask {
    bits: Vec<bool>,
    count: usize,
}

impl VertexMask {
    pub fn full(n: usize) -> Self {
        VertexMask {
            bits: vec![true; n],
            count: n,
        }
    }

    pub fn none(n: usize) -> Self {
        VertexMask {
            bits: vec![false; n],
            count: 0,
        }
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Self {
        let mut mask = Self::none(n);
        for &v in vertices {
            mask.insert(v);
        }
        mask
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits[v]
    }

    pub fn insert(&mut self, v: usize) {
        if !std::mem::replace(&mut self.bits[v], true) {
            self.count += 1;
        }
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.count
    }

    /// True when every vertex of `0..n` is a member.
    pub fn is_full(&self) -> bool {
        self.count == self.bits.len()
    }

    /// Size `n` of the universe.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }
}
