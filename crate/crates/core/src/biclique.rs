//! Bicliques, their canonical form, and the deduplicating store every
//! enumeration writes into.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets;

/// An unordered biclique `X × Y` in canonical form.
///
/// Both sides are sorted ascending and the side whose sequence is
/// lexicographically smaller is stored first, so two bicliques are equal
/// exactly when they describe the same unordered pair. The derived `Ord`
/// is the canonical listing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biclique {
    x: Vec<usize>,
    y: Vec<usize>,
}

/// A biclique with a distinguished first side, used by the kernels whose
/// behavior depends on orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedBiclique {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Biclique {
    /// Canonicalizes a pair of vertex sets. Sides are sorted and
    /// deduplicated; they must be nonempty and disjoint. Adjacency is not
    /// checked here (see [`Biclique::is_biclique_of`]).
    pub fn new(mut x: Vec<usize>, mut y: Vec<usize>) -> Result<Self> {
        for side in [&mut x, &mut y] {
            side.sort_unstable();
            side.dedup();
        }
        if x.is_empty() || y.is_empty() {
            return Err(Error::InvalidBiclique("both sides must be nonempty".into()));
        }
        if !sets::is_disjoint(&x, &y) {
            return Err(Error::InvalidBiclique("sides must be disjoint".into()));
        }
        Ok(Self::from_sorted(x, y))
    }

    /// Canonicalizes two sorted, nonempty, disjoint sides.
    pub(crate) fn from_sorted(x: Vec<usize>, y: Vec<usize>) -> Self {
        debug_assert!(!x.is_empty() && !y.is_empty());
        debug_assert!(x.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(y.windows(2).all(|w| w[0] < w[1]));
        if x <= y {
            Biclique { x, y }
        } else {
            Biclique { x: y, y: x }
        }
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.x.len() + self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        sets::contains(&self.x, v) || sets::contains(&self.y, v)
    }

    /// Orientation with the canonical first side first.
    pub fn oriented(&self) -> OrientedBiclique {
        OrientedBiclique {
            first: self.x.clone(),
            second: self.y.clone(),
        }
    }

    /// Orientation with the canonical second side first.
    pub fn flipped(&self) -> OrientedBiclique {
        OrientedBiclique {
            first: self.y.clone(),
            second: self.x.clone(),
        }
    }

    /// Every cross pair is an edge of `g`.
    pub fn is_biclique_of(&self, g: &Graph) -> bool {
        self.x
            .iter()
            .all(|&u| self.y.iter().all(|&v| g.has_edge(u, v)))
    }

    /// Biclique of `g` whose sides are both independent.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let independent = |side: &[usize]| {
            side.iter()
                .enumerate()
                .all(|(i, &u)| side[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        };
        self.is_biclique_of(g) && independent(&self.x) && independent(&self.y)
    }

    /// `self` absorbs `other` if `other`'s sides are contained in `self`'s,
    /// in either pairing.
    pub fn absorbs(&self, other: &Biclique) -> bool {
        (sets::is_subset(&other.x, &self.x) && sets::is_subset(&other.y, &self.y))
            || (sets::is_subset(&other.x, &self.y) && sets::is_subset(&other.y, &self.x))
    }

    /// Portable key: both sorted sides in decimal, comma separated, joined by `|`.
    pub fn canonical_key(&self) -> String {
        format!("{}|{}", join(&self.x), join(&self.y))
    }
}

impl OrientedBiclique {
    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Self {
        OrientedBiclique { first, second }
    }

    pub fn canonical(self) -> Biclique {
        Biclique::from_sorted(self.first, self.second)
    }

    pub fn swap(self) -> Self {
        OrientedBiclique {
            first: self.second,
            second: self.first,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        sets::contains(&self.first, v) || sets::contains(&self.second, v)
    }
}

fn join(side: &[usize]) -> String {
    side.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Listing form: `x1,x2,... | y1,y2,...`.
impl fmt::Display for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", join(&self.x), join(&self.y))
    }
}

/// Accepts both the listing form and the canonical key.
impl FromStr for Biclique {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::InvalidBiclique(format!("missing `|` in `{s}`")))?;
        let side = |text: &str| {
            text.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidBiclique(format!("bad vertex id `{t}`")))
                })
                .collect::<Result<Vec<_>>>()
        };
        Biclique::new(side(a)?, side(b)?)
    }
}

#[derive(Clone, Debug)]
enum Entries {
    Ordered(BTreeSet<Biclique>),
    KeysOnly(FxHashSet<Biclique>),
}

/// Deduplicating collection of canonical bicliques.
///
/// The default store keeps bicliques in canonical order. A key-only store
/// answers membership and counts but gives no ordering guarantee when
/// iterated; enumerations use it when only the count is wanted.
#[derive(Clone, Debug)]
pub struct BicliqueStore {
    entries: Entries,
}

impl Default for BicliqueStore {
    fn default() -> Self {
        Self::new()
    }
}

impl BicliqueStore {
    pub fn new() -> Self {
        BicliqueStore {
            entries: Entries::Ordered(BTreeSet::new()),
        }
    }

    pub fn keys_only() -> Self {
        BicliqueStore {
            entries: Entries::KeysOnly(FxHashSet::default()),
        }
    }

    pub fn with_mode(keep_order: bool) -> Self {
        if keep_order {
            Self::new()
        } else {
            Self::keys_only()
        }
    }

    pub fn is_ordered(&self) -> bool {
        matches!(self.entries, Entries::Ordered(_))
    }

    /// Returns true if `b` was not present before.
    pub fn insert(&mut self, b: Biclique) -> bool {
        match &mut self.entries {
            Entries::Ordered(set) => set.insert(b),
            Entries::KeysOnly(set) => set.insert(b),
        }
    }

    pub fn contains(&self, b: &Biclique) -> bool {
        match &self.entries {
            Entries::Ordered(set) => set.contains(b),
            Entries::KeysOnly(set) => set.contains(b),
        }
    }

    pub fn len(&self) -> usize {
        match &self.entries {
            Entries::Ordered(set) => set.len(),
            Entries::KeysOnly(set) => set.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical order for ordered stores; arbitrary for key-only stores.
    pub fn iter(&self) -> Box<dyn Iterator<Item = &Biclique> + '_> {
        match &self.entries {
            Entries::Ordered(set) => Box::new(set.iter()),
            Entries::KeysOnly(set) => Box::new(set.iter()),
        }
    }

    /// All bicliques in canonical order.
    pub fn into_sorted_vec(self) -> Vec<Biclique> {
        match self.entries {
            Entries::Ordered(set) => set.into_iter().collect(),
            Entries::KeysOnly(set) => {
                let mut all: Vec<_> = set.into_iter().collect();
                all.sort_unstable();
                all
            }
        }
    }
}

impl FromIterator<Biclique> for BicliqueStore {
    fn from_iter<I: IntoIterator<Item = Biclique>>(iter: I) -> Self {
        let mut store = BicliqueStore::new();
        for b in iter {
            store.insert(b);
        }
        store
    }
}

impl Extend<Biclique> for BicliqueStore {
    fn extend<I: IntoIterator<Item = Biclique>>(&mut self, iter: I) {
        for b in iter {
            self.insert(b);
        }
    }
}

/// Output of one enumeration run.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub algorithm: &'static str,
    pub bicliques: BicliqueStore,
    /// `M_I` or `M_B` (partial when `timed_out`).
    pub count: usize,
    pub wall_time: f64,
    pub timed_out: bool,
}

impl EnumerationResult {
    pub(crate) fn new(
        algorithm: &'static str,
        bicliques: BicliqueStore,
        wall_time: f64,
        timed_out: bool,
    ) -> Self {
        EnumerationResult {
            algorithm,
            count: bicliques.len(),
            bicliques,
            wall_time,
            timed_out,
        }
    }

    pub fn into_sorted_vec(self) -> Vec<Biclique> {
        self.bicliques.into_sorted_vec()
    }
}
