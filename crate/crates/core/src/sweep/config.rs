use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ModelParams;

/// A scalar, an explicit list, or an inclusive arithmetic range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Values {
    One(f64),
    Many(Vec<f64>),
    Range { start: f64, end: f64, step: f64 },
}

impl Values {
    /// Parses `1.5`, `0,0.03,0.3` or `-4:4:0.01`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::ConfigInvalid(format!("cannot parse value list {s:?}"));
        let num = |x: &str| x.trim().parse::<f64>().map_err(|_| bad());
        if s.contains(':') {
            let parts: Vec<&str> = s.split(':').collect();
            if parts.len() != 3 {
                return Err(bad());
            }
            return Ok(Values::Range {
                start: num(parts[0])?,
                end: num(parts[1])?,
                step: num(parts[2])?,
            });
        }
        let items = s.split(',').map(num).collect::<Result<Vec<_>>>()?;
        match items.as_slice() {
            [x] => Ok(Values::One(*x)),
            _ => Ok(Values::Many(items)),
        }
    }

    /// Expands to concrete values. Range points are snapped to `1e-12` so
    /// that nominal grid values such as `1.8` come out exact.
    pub fn expand(&self) -> Result<Vec<f64>> {
        let out = match self {
            Values::One(x) => vec![*x],
            Values::Many(v) => v.clone(),
            Values::Range { start, end, step } => {
                if !(*step > 0.0) || !(end >= start) || !start.is_finite() || !end.is_finite() {
                    return Err(Error::ConfigInvalid(format!(
                        "range {start}:{end}:{step} needs step > 0 and end >= start"
                    )));
                }
                let n = ((end - start) / step + 1e-9).floor() as usize + 1;
                (0..n).map(|i| snap(start + i as f64 * step)).collect()
            }
        };
        if out.is_empty() {
            return Err(Error::ConfigInvalid("empty value list".into()));
        }
        if let Some(x) = out.iter().find(|x| !x.is_finite()) {
            return Err(Error::ConfigInvalid(format!("non-finite value {x}")));
        }
        Ok(out)
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self, Values::One(_))
    }
}

fn snap(x: f64) -> f64 {
    let y = (x * 1e12).round() / 1e12;
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    pub t_start: f64,
    pub t_end: f64,
    pub n_points: usize,
}

impl TimeGrid {
    pub fn points(&self) -> Vec<f64> {
        let span = self.t_end - self.t_start;
        let last = (self.n_points - 1) as f64;
        (0..self.n_points)
            .map(|i| snap(self.t_start + span * i as f64 / last))
            .collect()
    }
}

impl Default for TimeGrid {
    fn default() -> Self {
        Self {
            t_start: 0.0,
            t_end: 20.0,
            n_points: 401,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Output {
    Negativity,
    Coherence,
    LinearEntropy,
    Energies,
}

impl Output {
    pub fn column(self) -> &'static str {
        match self {
            Output::Negativity => "negativity",
            Output::Coherence => "coherence",
            Output::LinearEntropy => "linear_entropy",
            Output::Energies => "energies",
        }
    }
}

fn default_outputs() -> Vec<Output> {
    vec![Output::Negativity, Output::Coherence, Output::LinearEntropy]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub params: ModelParams,
    pub p: f64,
    pub gamma: Values,
    pub bz: Values,
    #[serde(default)]
    pub t_grid: TimeGrid,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<Output>,
    #[serde(default)]
    pub seed: u64,
    /// Degeneracy tolerance for steady states and crossing flags.
    #[serde(default)]
    pub deg_tol: Option<f64>,
    /// Report twice the negativity, normalising a maximally entangled
    /// qutrit pair to 2.
    #[serde(default)]
    pub rescale_negativity: bool,
    /// Replace the exact steady state with evolution to this time.
    #[serde(default)]
    pub by_evolution: Option<f64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            params: ModelParams::new(0.8, -0.4, 0.0),
            p: 0.7,
            gamma: Values::One(0.03),
            bz: Values::One(0.0),
            t_grid: TimeGrid::default(),
            outputs: default_outputs(),
            seed: 42,
            deg_tol: None,
            rescale_negativity: false,
            by_evolution: None,
        }
    }
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Error::ConfigInvalid(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |m: String| Err(Error::ConfigInvalid(m));
        self.params.validate().map_err(|e| Error::ConfigInvalid(e.to_string()))?;
        if !(0.0..=1.0).contains(&self.p) {
            return invalid(format!("p = {} outside [0, 1]", self.p));
        }
        if let Some(g) = self.gamma.expand()?.into_iter().find(|g| !(*g >= 0.0)) {
            return invalid(format!("gamma = {g} must be non-negative"));
        }
        self.bz.expand()?;
        let tg = &self.t_grid;
        if !(tg.t_start >= 0.0) || !(tg.t_end > tg.t_start) || !tg.t_end.is_finite() {
            return invalid(format!(
                "time grid needs t_end > t_start >= 0 (got {}..{})",
                tg.t_start, tg.t_end
            ));
        }
        if tg.n_points < 2 {
            return invalid(format!("time grid needs n_points >= 2 (got {})", tg.n_points));
        }
        if self.outputs.is_empty() {
            return invalid("outputs must not be empty".into());
        }
        if let Some(tol) = self.deg_tol {
            if !(tol > 0.0) {
                return invalid(format!("deg_tol = {tol} must be positive"));
            }
        }
        if let Some(t) = self.by_evolution {
            if !(t >= 0.0) || !t.is_finite() {
                return invalid(format!("by_evolution time {t} must be finite and non-negative"));
            }
        }
        Ok(())
    }

    /// Requested outputs, deduplicated, in canonical column order.
    pub fn sorted_outputs(&self) -> Vec<Output> {
        let mut out = self.outputs.clone();
        out.sort();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Values::parse("1.5").unwrap(), Values::One(1.5));
        assert_eq!(Values::parse("0, 0.03,0.3").unwrap(), Values::Many(vec![0.0, 0.03, 0.3]));
        assert_eq!(
            Values::parse("-4:4:0.01").unwrap(),
            Values::Range { start: -4.0, end: 4.0, step: 0.01 }
        );
        assert!(Values::parse("1:2").is_err());
        assert!(Values::parse("abc").is_err());
    }

    #[test]
    fn range_expansion_hits_nominal_points() {
        let v = Values::parse("-4:4:0.01").unwrap().expand().unwrap();
        assert_eq!(v.len(), 801);
        assert_eq!(v[0], -4.0);
        assert_eq!(v[400], 0.0);
        assert_eq!(v[580], 1.8);
        assert_eq!(v[220], -1.8);
        assert_eq!(v[800], 4.0);
        assert!(Values::Range { start: 0.0, end: 1.0, step: 0.0 }.expand().is_err());
        assert!(Values::Many(vec![]).expand().is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "params": {"j": 0.8, "k": -0.4},
            "p": 0.7,
            "gamma": [0, 0.03, 0.3],
            "bz": {"start": -4, "end": 4, "step": 0.5},
            "t_grid": {"t_start": 0, "t_end": 10, "n_points": 11}
        }"#;
        let cfg = SweepConfig::from_json(text).unwrap();
        assert_eq!(cfg.gamma, Values::Many(vec![0.0, 0.03, 0.3]));
        assert_eq!(cfg.bz.expand().unwrap().len(), 17);
        assert_eq!(cfg.outputs.len(), 3);
        let again = SweepConfig::from_json(&serde_json::to_string(&cfg).unwrap()).unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn invalid_configs() {
        let mut cfg = SweepConfig::default();
        cfg.t_grid = TimeGrid { t_start: 1.0, t_end: 1.0, n_points: 2 };
        assert!(matches!(cfg.validate(), Err(Error::ConfigInvalid(_))));
        cfg.t_grid = TimeGrid { t_start: 0.0, t_end: 1.0, n_points: 1 };
        assert!(cfg.validate().is_err());
        let mut cfg = SweepConfig::default();
        cfg.p = 1.5;
        assert!(cfg.validate().is_err());
        let mut cfg = SweepConfig::default();
        cfg.gamma = Values::Many(vec![0.1, -0.1]);
        assert!(cfg.validate().is_err());
        assert!(SweepConfig::from_json(r#"{"p": 0.7}"#).is_err());
        assert!(SweepConfig::from_json("not json").is_err());
    }

    #[test]
    fn time_grid_endpoints() {
        let t = TimeGrid { t_start: 0.0, t_end: 20.0, n_points: 401 }.points();
        assert_eq!(t.len(), 401);
        assert_eq!(t[0], 0.0);
        assert_eq!(t[1], 0.05);
        assert_eq!(t[400], 20.0);
    }
}
