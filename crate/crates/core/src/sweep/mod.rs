//! Parameter sweeps producing CSV tables: time series, steady-state field
//! scans, level diagrams and the isotropic-state benchmark.

mod config;
mod presets;
mod table;

pub use config::{Output, SweepConfig, TimeGrid, Values};
pub use presets::{run_job, write_job, Job, JobKind, Preset};
pub use table::{format_value, Table};

use rayon::prelude::*;

use crate::dynamics::Propagator;
use crate::error::{Error, Result};
use crate::model::{analytic_spectrum, resonance_fields, ModelParams};
use crate::quantifiers::{l1_coherence, linear_entropy, negativity};
use crate::states::{isotropic, DensityMatrix};

/// One `(gamma, Bz)` stream of a time series.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub gamma: f64,
    pub bz: f64,
    pub table: Table,
}

impl Series {
    pub fn file_name(&self, prefix: &str) -> String {
        format!("{prefix}_g{}_b{}.csv", self.gamma, self.bz)
    }
}

fn energy_columns() -> Vec<String> {
    (1..=9).map(|i| format!("E{i}")).collect()
}

fn header(first: &str, outputs: &[Output]) -> Vec<String> {
    let mut cols = vec![first.to_string()];
    for o in outputs {
        match o {
            Output::Energies => cols.extend(energy_columns()),
            other => cols.push(other.column().to_string()),
        }
    }
    cols
}

fn energies(params: &ModelParams) -> Vec<f64> {
    analytic_spectrum(params).iter().map(|e| e.energy).collect()
}

fn measure(
    rho: &DensityMatrix,
    outputs: &[Output],
    rescale: bool,
    params: &ModelParams,
) -> Result<Vec<f64>> {
    let mut row = Vec::with_capacity(outputs.len() + 8);
    for o in outputs {
        match o {
            Output::Negativity => {
                let n = negativity(rho, 3, 3)?;
                row.push(if rescale { 2.0 * n } else { n });
            }
            Output::Coherence => row.push(l1_coherence(rho)),
            Output::LinearEntropy => row.push(linear_entropy(rho)),
            Output::Energies => row.extend(energies(params)),
        }
    }
    Ok(row)
}

/// Evolves the isotropic state on the time grid for every `(gamma, Bz)`
/// pair, gamma-major.
pub fn time_series(cfg: &SweepConfig) -> Result<Vec<Series>> {
    cfg.validate()?;
    let outputs = cfg.sorted_outputs();
    let rho0 = isotropic(cfg.p)?;
    let times = cfg.t_grid.points();
    let mut out = Vec::new();
    for gamma in cfg.gamma.expand()? {
        for bz in cfg.bz.expand()? {
            let params = cfg.params.with_bz(bz);
            let prop = Propagator::for_model(&params, gamma)?;
            let rows = times
                .par_iter()
                .map(|&t| {
                    let rho = prop.evolve_unchecked(&rho0, t)?;
                    let mut row = vec![t];
                    row.extend(measure(&rho, &outputs, cfg.rescale_negativity, &params)?);
                    Ok(row)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut table = Table::new(header("t", &outputs));
            rows.into_iter().for_each(|r| table.push(r));
            table.check_finite()?;
            out.push(Series { gamma, bz, table });
        }
    }
    Ok(out)
}

fn single_gamma(cfg: &SweepConfig) -> Result<f64> {
    match cfg.gamma.expand()?.as_slice() {
        [g] => Ok(*g),
        _ => Err(Error::ConfigInvalid("this scan takes a single gamma".into())),
    }
}

fn field_grid(cfg: &SweepConfig) -> Result<Vec<f64>> {
    if cfg.bz.is_scalar() {
        return Err(Error::ConfigInvalid("a field scan needs a list or range of Bz".into()));
    }
    cfg.bz.expand()
}

/// Steady-state quantifiers of the isotropic state against Bz.
pub fn field_scan(cfg: &SweepConfig) -> Result<Table> {
    cfg.validate()?;
    let gamma = single_gamma(cfg)?;
    let fields = field_grid(cfg)?;
    let outputs = cfg.sorted_outputs();
    let rho0 = isotropic(cfg.p)?;
    let rows = fields
        .par_iter()
        .map(|&bz| {
            let params = cfg.params.with_bz(bz);
            let prop = Propagator::for_model(&params, gamma)?;
            let rho = match cfg.by_evolution {
                Some(t) => prop.evolve_unchecked(&rho0, t)?,
                None => {
                    let tol = cfg.deg_tol.unwrap_or_else(|| prop.default_deg_tol());
                    prop.steady_state(&rho0, tol)?
                }
            };
            let mut row = vec![bz];
            row.extend(measure(&rho, &outputs, cfg.rescale_negativity, &params)?);
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = Table::new(header("bz", &outputs));
    rows.into_iter().for_each(|r| table.push(r));
    table.check_finite()?;
    Ok(table)
}

/// The nine analytic levels against Bz plus a `crossing` flag (1 when the
/// field lies within the degeneracy tolerance of a level crossing).
pub fn spectrum_scan(cfg: &SweepConfig) -> Result<Table> {
    cfg.validate()?;
    let fields = field_grid(cfg)?;
    let tol = cfg.deg_tol.unwrap_or(1e-9);
    let crossings = resonance_fields(&cfg.params);
    let mut cols = vec!["bz".to_string()];
    cols.extend(energy_columns());
    cols.push("crossing".into());
    let mut table = Table::new(cols);
    for bz in fields {
        let mut row = vec![bz];
        row.extend(energies(&cfg.params.with_bz(bz)));
        row.push(if crossings.contains(bz, tol) { 1.0 } else { 0.0 });
        table.push(row);
    }
    table.check_finite()?;
    Ok(table)
}

/// Negativity and linear entropy of the isotropic state on `n` evenly
/// spaced mixing weights in `[0, 1]`.
pub fn werner_scan(n: usize, rescale: bool) -> Result<Table> {
    if n < 2 {
        return Err(Error::ConfigInvalid(format!("need at least 2 points, got {n}")));
    }
    let ps: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
    let rows = ps
        .par_iter()
        .map(|&p| {
            let rho = isotropic(p)?;
            let n = negativity(&rho, 3, 3)?;
            Ok(vec![p, if rescale { 2.0 * n } else { n }, linear_entropy(&rho)])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = Table::new(["p", "negativity", "linear_entropy"]);
    rows.into_iter().for_each(|r| table.push(r));
    table.check_finite()?;
    Ok(table)
}

/// Interior local maxima of `ys`. A flat top counts once, at its centre.
/// Values closer than `tol` are treated as equal.
pub fn local_maxima(xs: &[f64], ys: &[f64], tol: f64) -> Vec<f64> {
    let n = ys.len().min(xs.len());
    let mut out = Vec::new();
    let mut i = 1;
    while i + 1 < n {
        let mut j = i;
        while j + 1 < n && (ys[j + 1] - ys[i]).abs() <= tol {
            j += 1;
        }
        if j + 1 < n && ys[i] > ys[i - 1] + tol && ys[i] > ys[j + 1] + tol {
            out.push(xs[(i + j) / 2]);
        }
        i = j + 1;
    }
    out
}
