//! Seeded generator of near-bipartite graphs with a known OCT set.
//!
//! Vertices `0..n_L` form `L`, the next `n_R` form `R` and the last `n_O`
//! form `O`. Each `R` vertex draws a degree and picks that many distinct
//! neighbors uniformly from `L`; each `O` vertex does the same over
//! `L ∪ R`; pairs inside `O` are joined independently with probability
//! `d_O`. Degrees follow a normal distribution with mean `density · pool`
//! and standard deviation `cv · mean`, rounded to the nearest integer and
//! clamped to `[0, pool]`.
//!
//! Random draws happen in a fixed order (R degrees, R neighbors, O degrees,
//! O neighbors, then O pairs in ascending `(i, j)`), all from one ChaCha8
//! stream seeded with `seed`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::decomposition::{OctDecomposition, Side};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorParams {
    pub n_l: usize,
    pub n_r: usize,
    pub n_o: usize,
    /// Expected density between `L` and `R`.
    pub d_lr: f64,
    /// Expected density between `O` and `L ∪ R`.
    pub d_cross: f64,
    /// Expected density inside `O`.
    pub d_o: f64,
    /// Coefficient of variation of the `R` degrees into `L`.
    pub cv_lr: f64,
    /// Coefficient of variation of the `O` degrees into `L ∪ R`.
    pub cv_cross: f64,
    pub seed: u64,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams {
            n_l: 909,
            n_r: 91,
            n_o: 10,
            d_lr: 0.05,
            d_cross: 0.05,
            d_o: 0.05,
            cv_lr: 0.5,
            cv_cross: 0.5,
            seed: 0,
        }
    }
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<()> {
        for (name, d) in [
            ("d_lr", self.d_lr),
            ("d_cross", self.d_cross),
            ("d_o", self.d_o),
        ] {
            if !(0.0..=1.0).contains(&d) {
                return Err(Error::InvalidParams(format!(
                    "{name} = {d} is not in [0, 1]"
                )));
            }
        }
        for (name, cv) in [("cv_lr", self.cv_lr), ("cv_cross", self.cv_cross)] {
            if !(cv >= 0.0 && cv.is_finite()) {
                return Err(Error::InvalidParams(format!("{name} = {cv} must be >= 0")));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n_l + self.n_r + self.n_o
    }
}

fn draw_degree(rng: &mut ChaCha8Rng, density: f64, cv: f64, pool: usize) -> usize {
    let mean = density * pool as f64;
    let raw = if cv == 0.0 || mean == 0.0 {
        mean
    } else {
        Normal::new(mean, cv * mean)
            .expect("finite, nonnegative standard deviation")
            .sample(rng)
    };
    raw.round().clamp(0.0, pool as f64) as usize
}

/// Connects each vertex of `sources` to `degree` distinct vertices drawn
/// uniformly from `0..pool`.
fn attach(
    rng: &mut ChaCha8Rng,
    sources: std::ops::Range<usize>,
    degrees: &[usize],
    pool: usize,
    edges: &mut Vec<(usize, usize)>,
) {
    let mut candidates: Vec<usize> = Vec::with_capacity(pool);
    for (v, &degree) in sources.zip(degrees) {
        candidates.clear();
        candidates.extend(0..pool);
        let (picked, _) = candidates.partial_shuffle(rng, degree);
        edges.extend(picked.iter().map(|&w| (w, v)));
    }
}

/// Generates a graph and its naive decomposition `[L, R, O]`.
pub fn generate(p: &GeneratorParams) -> Result<(Graph, OctDecomposition)> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let n_b = p.n_l + p.n_r;
    let mut edges = Vec::new();

    let r_degrees: Vec<usize> = (0..p.n_r)
        .map(|_| draw_degree(&mut rng, p.d_lr, p.cv_lr, p.n_l))
        .collect();
    attach(&mut rng, p.n_l..n_b, &r_degrees, p.n_l, &mut edges);

    let o_degrees: Vec<usize> = (0..p.n_o)
        .map(|_| draw_degree(&mut rng, p.d_cross, p.cv_cross, n_b))
        .collect();
    attach(&mut rng, n_b..p.n(), &o_degrees, n_b, &mut edges);

    for i in n_b..p.n() {
        for j in i + 1..p.n() {
            if rng.random::<f64>() < p.d_o {
                edges.push((i, j));
            }
        }
    }

    let g = Graph::from_edges(p.n(), edges)?;
    let sides = (0..p.n())
        .map(|v| match v {
            v if v < p.n_l => Side::Left,
            v if v < n_b => Side::Right,
            _ => Side::Oct,
        })
        .collect();
    Ok((g, OctDecomposition::from_sides(sides)))
}

/// Realized densities and degree variation of a decomposed graph.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub m_lr: usize,
    pub m_cross: usize,
    pub m_o: usize,
    pub d_lr: f64,
    pub d_cross: f64,
    pub d_o: f64,
    /// Coefficient of variation of the `R` degrees into `L`.
    pub cv_lr: f64,
    /// Coefficient of variation of the `O` degrees into `L ∪ R`.
    pub cv_cross: f64,
}

fn ratio(count: usize, pairs: usize) -> f64 {
    if pairs == 0 {
        0.0
    } else {
        count as f64 / pairs as f64
    }
}

fn coefficient_of_variation(values: &[usize]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<usize>() as f64 / n;
    if mean == 0.0 {
        return 0.0;
    }
    let var = values
        .iter()
        .map(|&v| (v as f64 - mean).powi(2))
        .sum::<f64>()
        / n;
    var.sqrt() / mean
}

pub fn realized_stats(g: &Graph, d: &OctDecomposition) -> DensityReport {
    let count_into = |v: usize, wanted: &dyn Fn(Side) -> bool| {
        g.neighbors(v)
            .iter()
            .filter(|&&w| wanted(d.side_of(w)))
            .count()
    };
    let r_degrees: Vec<usize> = d
        .right()
        .iter()
        .map(|&v| count_into(v, &|s| s == Side::Left))
        .collect();
    let o_degrees: Vec<usize> = d
        .oct()
        .iter()
        .map(|&v| count_into(v, &|s| s != Side::Oct))
        .collect();
    let m_lr: usize = r_degrees.iter().sum();
    let m_cross: usize = o_degrees.iter().sum();
    let m_o = d
        .oct()
        .iter()
        .map(|&v| count_into(v, &|s| s == Side::Oct))
        .sum::<usize>()
        / 2;
    let n_o = d.n_oct();
    DensityReport {
        m_lr,
        m_cross,
        m_o,
        d_lr: ratio(m_lr, d.n_left() * d.n_right()),
        d_cross: ratio(m_cross, n_o * d.n_bipartite()),
        d_o: ratio(m_o, n_o * n_o.saturating_sub(1) / 2),
        cv_lr: coefficient_of_variation(&r_degrees),
        cv_cross: coefficient_of_variation(&o_degrees),
    }
}

impl fmt::Display for DensityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d_lr={:.4} d_cross={:.4} d_o={:.4} cv_lr={:.4} cv_cross={:.4} m_lr={} m_cross={} m_o={}",
            self.d_lr, self.d_cross, self.d_o, self.cv_lr, self.cv_cross, self.m_lr, self.m_cross, self.m_o
        )
    }
}
