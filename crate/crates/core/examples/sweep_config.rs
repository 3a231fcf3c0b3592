//! Drive a time-series sweep from a JSON configuration and write one CSV
//! per (gamma, Bz) pair.

use intrinsic_decoherence::sweep::{time_series, SweepConfig};

const CONFIG: &str = r#"{
    "params": {"j": 0.8, "k": -0.4},
    "p": 0.7,
    "gamma": [0.0, 0.03, 0.3],
    "bz": 0.0,
    "t_grid": {"t_start": 0.0, "t_end": 20.0, "n_points": 201},
    "outputs": ["negativity", "linear_entropy"]
}"#;

fn main() -> intrinsic_decoherence::Result<()> {
    let cfg = SweepConfig::from_json(CONFIG)?;
    let dir = std::env::temp_dir().join("idsim-sweep-example");
    for series in time_series(&cfg)? {
        let path = dir.join(series.file_name("series"));
        series.table.write_csv(&path)?;
        let last = series.table.rows.last().unwrap();
        println!("{}  final N = {:.6}, S_L = {:.6}", path.display(), last[1], last[2]);
    }
    Ok(())
}
