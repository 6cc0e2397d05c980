//! Algorithm selection, run options and timing.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::biclique::{BicliqueStore, EnumerationResult};
use crate::decomposition::OctDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{mib, mica, oracle};

/// A point in time after which long-running loops give up.
#[derive(Clone, Copy, Debug)]
pub struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    pub fn never() -> Self {
        Deadline { at: None }
    }

    pub fn after(timeout: Option<Duration>) -> Self {
        Deadline {
            at: timeout.map(|t| Instant::now() + t),
        }
    }

    pub fn expired(&self) -> bool {
        self.at.is_some_and(|at| Instant::now() >= at)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub timeout: Option<Duration>,
    /// Keep bicliques in canonical order. When false, only a membership
    /// index is kept and results are counted rather than listed.
    pub keep_order: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            timeout: None,
            keep_order: true,
        }
    }
}

impl RunOptions {
    pub fn with_timeout(timeout: Duration) -> Self {
        RunOptions {
            timeout: Some(timeout),
            ..Self::default()
        }
    }

    pub(crate) fn store(&self) -> BicliqueStore {
        BicliqueStore::with_mode(self.keep_order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    EnumMib,
    OctMib2,
    Mica,
    OctMica,
    OracleMib,
    OracleMb,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::EnumMib,
        Algorithm::OctMib2,
        Algorithm::Mica,
        Algorithm::OctMica,
        Algorithm::OracleMib,
        Algorithm::OracleMb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::EnumMib => "enum-mib",
            Algorithm::OctMib2 => "oct-mib2",
            Algorithm::Mica => "mica",
            Algorithm::OctMica => "oct-mica",
            Algorithm::OracleMib => "oracle-mib",
            Algorithm::OracleMb => "oracle-mb",
        }
    }

    pub fn needs_decomposition(self) -> bool {
        matches!(self, Algorithm::OctMib2 | Algorithm::OctMica)
    }

    /// True for algorithms that enumerate maximal induced bicliques.
    pub fn is_induced(self) -> bool {
        matches!(
            self,
            Algorithm::EnumMib | Algorithm::OctMib2 | Algorithm::OracleMib
        )
    }

    /// Runs the algorithm, timing only the enumeration itself.
    pub fn run(
        self,
        g: &Graph,
        d: Option<&OctDecomposition>,
        opts: &RunOptions,
    ) -> Result<EnumerationResult> {
        let need = || d.ok_or(Error::MissingDecomposition(self.name()));
        match self {
            Algorithm::EnumMib => Ok(mib::enum_mib(g, opts)),
            Algorithm::OctMib2 => mib::oct_mib2(g, need()?, opts),
            Algorithm::Mica => Ok(mica::mica(g, opts)),
            Algorithm::OctMica => mica::oct_mica(g, need()?, opts),
            Algorithm::OracleMib => timed(self.name(), opts, || oracle::brute_mibs(g)),
            Algorithm::OracleMb => timed(self.name(), opts, || oracle::brute_mbs(g)),
        }
    }
}

fn timed(
    name: &'static str,
    opts: &RunOptions,
    f: impl FnOnce() -> Result<Vec<crate::Biclique>>,
) -> Result<EnumerationResult> {
    let start = Instant::now();
    let found = f()?;
    let mut store = opts.store();
    store.extend(found);
    Ok(EnumerationResult::new(
        name,
        store,
        start.elapsed().as_secs_f64(),
        false,
    ))
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}
