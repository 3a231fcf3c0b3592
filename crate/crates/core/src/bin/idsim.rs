use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use intrinsic_decoherence::model::{resonance_fields, singlet_resonances};
use intrinsic_decoherence::sweep::{self, Job, JobKind, Preset, SweepConfig, Values};
use intrinsic_decoherence::validate::validate;
use intrinsic_decoherence::{Error, Result};

#[derive(Parser)]
#[command(name = "idsim", version, about = "Two-qutrit intrinsic-decoherence simulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Time series of negativity, coherence and linear entropy
    Evolve,
    /// Steady-state quantifiers against Bz
    ScanField,
    /// Energy levels against Bz
    Spectrum,
    /// List level-crossing fields
    Resonances,
    /// Run every cross-check and print the report
    Validate,
    Fig1,
    Fig2,
    Fig3,
    Fig5,
    Fig6,
}

#[derive(Args)]
struct Opts {
    #[arg(long, global = true, allow_hyphen_values = true)]
    j: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    k: Option<f64>,
    /// Single value, comma list, or start:end:step
    #[arg(long, global = true, allow_hyphen_values = true)]
    bz: Option<String>,
    /// Single value or comma list
    #[arg(long, global = true)]
    gamma: Option<String>,
    #[arg(long, global = true)]
    p: Option<f64>,
    #[arg(long, global = true)]
    t_end: Option<f64>,
    #[arg(long, global = true)]
    points: Option<usize>,
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// JSON sweep configuration; flags override its fields
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    deg_tol: Option<f64>,
    /// Report twice the negativity
    #[arg(long, global = true)]
    rescale_negativity: bool,
    /// Evolve to this time instead of taking the exact steady state
    #[arg(long, global = true, value_name = "T")]
    by_evolution: Option<f64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
}

impl Opts {
    fn apply(&self, mut cfg: SweepConfig) -> Result<SweepConfig> {
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::ConfigInvalid(format!("{}: {e}", path.display())))?;
            cfg = SweepConfig::from_json(&text)?;
        }
        if let Some(j) = self.j {
            cfg.params.j = j;
        }
        if let Some(k) = self.k {
            cfg.params.k = k;
        }
        if let Some(bz) = &self.bz {
            cfg.bz = Values::parse(bz)?;
        }
        if let Some(g) = &self.gamma {
            cfg.gamma = Values::parse(g)?;
        }
        if let Some(p) = self.p {
            cfg.p = p;
        }
        if let Some(t) = self.t_end {
            cfg.t_grid.t_end = t;
        }
        if let Some(n) = self.points {
            cfg.t_grid.n_points = n;
        }
        if let Some(tol) = self.deg_tol {
            cfg.deg_tol = Some(tol);
        }
        if self.rescale_negativity {
            cfg.rescale_negativity = true;
        }
        if let Some(t) = self.by_evolution {
            cfg.by_evolution = Some(t);
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn field_default() -> SweepConfig {
    SweepConfig {
        bz: Values::Range {
            start: -4.0,
            end: 4.0,
            step: 0.01,
        },
        ..SweepConfig::default()
    }
}

fn write_jobs(jobs: &[Job], out: &Path) -> Result<()> {
    for job in jobs {
        for path in sweep::write_job(job, out)? {
            println!("{}", path.display());
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    let o = &cli.opts;
    let single = |name: &str, kind: JobKind, base: SweepConfig| -> Result<bool> {
        write_jobs(&[Job::new(name, kind, o.apply(base)?)], &o.out)?;
        Ok(true)
    };
    match cli.command {
        Command::Evolve => single("evolve", JobKind::TimeSeries, SweepConfig::default()),
        Command::ScanField => single("scan_field", JobKind::FieldScan, field_default()),
        Command::Spectrum => single("spectrum", JobKind::Spectrum, field_default()),
        Command::Resonances => {
            let cfg = o.apply(SweepConfig::default())?;
            let res = resonance_fields(&cfg.params);
            let mut text = String::from("bz,label_a,label_b\n");
            for c in &res.crossings {
                text += &format!("{},E{},E{}\n", sweep::format_value(c.bz), c.labels.0, c.labels.1);
            }
            for (a, b) in &res.permanent {
                text += &format!("always,E{a},E{b}\n");
            }
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().write_all(text.as_bytes());
            let [lo, hi] = singlet_resonances(&cfg.params);
            eprintln!("singlet resonances at Bz = {lo} and {hi}");
            Ok(true)
        }
        Command::Validate => {
            let seed = o.apply(SweepConfig::default())?.seed;
            let report = validate(seed);
            print!("{}", report.render());
            Ok(report.passed())
        }
        Command::Fig1 | Command::Fig2 | Command::Fig3 | Command::Fig5 | Command::Fig6 => {
            let preset = match cli.command {
                Command::Fig1 => Preset::Fig1,
                Command::Fig2 => Preset::Fig2,
                Command::Fig3 => Preset::Fig3,
                Command::Fig5 => Preset::Fig5,
                _ => Preset::Fig6,
            };
            let jobs = preset
                .jobs()
                .into_iter()
                .map(|j| Ok(Job::new(j.name, j.kind, o.apply(j.cfg)?)))
                .collect::<Result<Vec<_>>>()?;
            write_jobs(&jobs, &o.out)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
