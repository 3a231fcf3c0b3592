use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

/// Columns of reals with a header, written as CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width does not match header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    /// Rejects NaN and infinities, naming the first offender.
    pub fn check_finite(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFinite {
                        column: self.columns[c].clone(),
                        row: r,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String> {
        self.check_finite()?;
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_value(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let text = self.to_csv()?;
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let mut f = fs::File::create(path)?;
        f.write_all(text.as_bytes())?;
        Ok(())
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_value(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut t = Table::new(["t", "x"]);
        t.push(vec![0.0, -0.0]);
        t.push(vec![0.1, 1.0 / 3.0]);
        let csv = t.to_csv().unwrap();
        assert!(!csv.contains('\r'));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,x");
        assert_eq!(lines[1], "0.0000000000000000e0,0.0000000000000000e0");
        let back: f64 = lines[2].split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(back, 1.0 / 3.0);
    }

    #[test]
    fn nan_is_an_error() {
        let mut t = Table::new(["bz", "negativity"]);
        t.push(vec![0.0, 1.0]);
        t.push(vec![0.1, f64::NAN]);
        match t.to_csv() {
            Err(Error::NonFinite { column, row }) => {
                assert_eq!(column, "negativity");
                assert_eq!(row, 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trip_all_digits() {
        for v in [std::f64::consts::PI, -1e-300, 6.02e23, 0.618888888888889] {
            assert_eq!(format_value(v).parse::<f64>().unwrap(), v);
        }
    }
}
