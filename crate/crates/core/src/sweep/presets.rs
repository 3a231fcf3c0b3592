use std::path::Path;

use super::{field_scan, spectrum_scan, time_series, werner_scan, SweepConfig, Table, Values};
use crate::error::Result;
use crate::model::ModelParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JobKind {
    Werner,
    TimeSeries,
    FieldScan,
    Spectrum,
}

/// A named scan. `name` is the output file stem (or prefix for time series).
#[derive(Debug, Clone, PartialEq)]
pub struct Job {
    pub name: String,
    pub kind: JobKind,
    pub cfg: SweepConfig,
}

impl Job {
    pub fn new(name: impl Into<String>, kind: JobKind, cfg: SweepConfig) -> Self {
        Self {
            name: name.into(),
            kind,
            cfg,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fig1,
    Fig2,
    Fig3,
    Fig5,
    Fig6,
}

const WERNER_POINTS: usize = 101;

fn field_range() -> Values {
    Values::Range {
        start: -4.0,
        end: 4.0,
        step: 0.01,
    }
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Fig5 => "fig5",
            Preset::Fig6 => "fig6",
        }
    }

    /// The built-in parameter sets. Field scans and level diagrams come in
    /// an `a` (J > 0, K < 0) and a mirrored `b` variant.
    pub fn jobs(self) -> Vec<Job> {
        let base = SweepConfig::default();
        let mirrored = ModelParams::new(-0.8, 0.4, 0.0);
        match self {
            Preset::Fig1 => vec![Job::new("fig1", JobKind::Werner, base)],
            Preset::Fig2 => vec![Job::new(
                "fig2",
                JobKind::TimeSeries,
                SweepConfig {
                    gamma: Values::Many(vec![0.0, 0.03, 0.3]),
                    bz: Values::One(0.0),
                    ..base
                },
            )],
            Preset::Fig3 => vec![Job::new(
                "fig3",
                JobKind::TimeSeries,
                SweepConfig {
                    gamma: Values::One(0.03),
                    bz: Values::Many(vec![0.0, 1.0, 1.8, 4.0]),
                    ..base
                },
            )],
            Preset::Fig5 | Preset::Fig6 => {
                let kind = if self == Preset::Fig5 {
                    JobKind::FieldScan
                } else {
                    JobKind::Spectrum
                };
                let a = SweepConfig {
                    bz: field_range(),
                    ..base.clone()
                };
                let b = SweepConfig {
                    params: mirrored,
                    bz: field_range(),
                    ..base
                };
                vec![
                    Job::new(format!("{}a", self.name()), kind, a),
                    Job::new(format!("{}b", self.name()), kind, b),
                ]
            }
        }
    }
}

/// Runs a job and returns `(file name, table)` pairs.
pub fn run_job(job: &Job) -> Result<Vec<(String, Table)>> {
    let single = |t: Table| vec![(format!("{}.csv", job.name), t)];
    Ok(match job.kind {
        JobKind::Werner => single(werner_scan(WERNER_POINTS, job.cfg.rescale_negativity)?),
        JobKind::FieldScan => single(field_scan(&job.cfg)?),
        JobKind::Spectrum => single(spectrum_scan(&job.cfg)?),
        JobKind::TimeSeries => time_series(&job.cfg)?
            .into_iter()
            .map(|s| (s.file_name(&job.name), s.table))
            .collect(),
    })
}

/// Writes every table of a job under `dir`, returning the paths written.
pub fn write_job(job: &Job, dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    let mut written = Vec::new();
    for (name, table) in run_job(job)? {
        let path = dir.join(name);
        table.write_csv(&path)?;
        written.push(path);
    }
    Ok(written)
}
