//! Parameter sweeps over generated instances, reported as CSV.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generator::{generate, GeneratorParams};
use crate::run::{Algorithm, RunOptions};

pub const CSV_HEADER: &str =
    "algorithm,n_l,n_r,n_o,d_lr,d_cross,d_o,cv,seed,count,wall_time_s,timed_out";

/// Generator field varied by a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepParam {
    NL,
    NR,
    NO,
    DLr,
    DCross,
    DO,
    /// Sets both coefficients of variation.
    Cv,
}

impl SweepParam {
    pub fn apply(self, p: &mut GeneratorParams, value: f64) -> Result<()> {
        let count = || {
            if value >= 0.0 && value.fract() == 0.0 {
                Ok(value as usize)
            } else {
                Err(Error::InvalidSweep(format!(
                    "vertex count {value} is not a non-negative integer"
                )))
            }
        };
        match self {
            SweepParam::NL => p.n_l = count()?,
            SweepParam::NR => p.n_r = count()?,
            SweepParam::NO => p.n_o = count()?,
            SweepParam::DLr => p.d_lr = value,
            SweepParam::DCross => p.d_cross = value,
            SweepParam::DO => p.d_o = value,
            SweepParam::Cv => {
                p.cv_lr = value;
                p.cv_cross = value;
            }
        }
        Ok(())
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace('-', "_").as_str() {
            "n_l" | "nl" => SweepParam::NL,
            "n_r" | "nr" => SweepParam::NR,
            "n_o" | "no" => SweepParam::NO,
            "d_lr" => SweepParam::DLr,
            "d_cross" => SweepParam::DCross,
            "d_o" => SweepParam::DO,
            "cv" => SweepParam::Cv,
            _ => {
                return Err(Error::InvalidSweep(format!(
                    "unknown sweep parameter `{s}`"
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct Sweep {
    pub base: GeneratorParams,
    /// Parameter and values to vary; `None` runs `base` alone.
    pub vary: Option<(SweepParam, Vec<f64>)>,
    pub seeds: Vec<u64>,
    pub algorithms: Vec<Algorithm>,
    pub timeout: Option<Duration>,
    /// Worker threads; each job runs single-threaded.
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub params: GeneratorParams,
    pub count: usize,
    pub wall_time_s: f64,
    pub timed_out: bool,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        let p = &self.params;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{:.6},{}",
            self.algorithm,
            p.n_l,
            p.n_r,
            p.n_o,
            p.d_lr,
            p.d_cross,
            p.d_o,
            p.cv_lr,
            p.seed,
            self.count,
            self.wall_time_s,
            self.timed_out
        )
    }
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for row in rows {
        writeln!(out, "{}", row.csv_line()).unwrap();
    }
    out
}

impl Sweep {
    /// Generator parameters for every (setting, seed) pair, settings outer.
    pub fn instances(&self) -> Result<Vec<GeneratorParams>> {
        if self.algorithms.is_empty() {
            return Err(Error::InvalidSweep("no algorithms given".into()));
        }
        if self.seeds.is_empty() {
            return Err(Error::InvalidSweep("no seeds given".into()));
        }
        let settings = match &self.vary {
            None => vec![self.base.clone()],
            Some((_, values)) if values.is_empty() => {
                return Err(Error::InvalidSweep("no sweep values given".into()))
            }
            Some((param, values)) => values
                .iter()
                .map(|&value| {
                    let mut p = self.base.clone();
                    param.apply(&mut p, value)?;
                    p.validate()?;
                    Ok(p)
                })
                .collect::<Result<Vec<_>>>()?,
        };
        self.base.validate()?;
        Ok(settings
            .into_iter()
            .flat_map(|p| {
                self.seeds
                    .iter()
                    .map(move |&seed| GeneratorParams { seed, ..p.clone() })
            })
            .collect())
    }

    /// Runs every (setting, seed, algorithm) job. Rows come back in that
    /// nesting order whatever order the jobs finish in. A timed-out row
    /// records the timeout as its wall time.
    pub fn run(&self) -> Result<Vec<BenchRow>> {
        let instances = self.instances()?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.max(1))
            .build()
            .expect("thread pool");
        let opts = RunOptions {
            timeout: self.timeout,
            keep_order: false,
        };
        pool.install(|| {
            let graphs = instances
                .par_iter()
                .map(generate)
                .collect::<Result<Vec<_>>>()?;
            let jobs: Vec<(usize, Algorithm)> = (0..instances.len())
                .flat_map(|i| self.algorithms.iter().map(move |&a| (i, a)))
                .collect();
            jobs.par_iter()
                .map(|&(i, algorithm)| {
                    let (g, d) = &graphs[i];
                    let result = algorithm.run(g, Some(d), &opts)?;
                    let wall_time_s = match (result.timed_out, self.timeout) {
                        (true, Some(t)) => t.as_secs_f64(),
                        _ => result.wall_time,
                    };
                    Ok(BenchRow {
                        algorithm,
                        params: instances[i].clone(),
                        count: result.count,
                        wall_time_s,
                        timed_out: result.timed_out,
                    })
                })
                .collect()
        })
    }
}
