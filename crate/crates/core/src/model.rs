//! Two-site spin-1 bilinear–biquadratic Hamiltonian in a longitudinal field.
//!
//! Single-site labels follow `|0> -> m = +1`, `|1> -> m = 0`, `|2> -> m = -1`,
//! and the two-site state `|a, b>` sits at index `3a + b`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix};

pub const SITE_DIM: usize = 3;
pub const DIM: usize = SITE_DIM * SITE_DIM;

/// Couplings of `H = chi + J (S1·S2) + K (S1·S2)^2 + Bz (S1z + S2z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub j: f64,
    pub k: f64,
    #[serde(default)]
    pub bz: f64,
    /// Add the constant `chi = J - K` to the Hamiltonian.
    #[serde(default)]
    pub include_chi: bool,
}

impl ModelParams {
    pub fn new(j: f64, k: f64, bz: f64) -> Self {
        Self {
            j,
            k,
            bz,
            include_chi: false,
        }
    }

    pub fn with_bz(self, bz: f64) -> Self {
        Self { bz, ..self }
    }

    pub fn with_chi(self, include_chi: bool) -> Self {
        Self { include_chi, ..self }
    }

    pub fn chi(&self) -> f64 {
        self.j - self.k
    }

    fn offset(&self) -> f64 {
        if self.include_chi {
            self.chi()
        } else {
            0.0
        }
    }

    pub fn validate(&self) -> Result<()> {
        if [self.j, self.k, self.bz].iter().all(|x| x.is_finite()) {
            Ok(())
        } else {
            Err(Error::ConfigInvalid(format!("non-finite couplings {self:?}")))
        }
    }
}

/// Spin-independent hopping and the total-spin-0/2 on-site repulsions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HubbardParams {
    pub hop: f64,
    pub u0: f64,
    pub u2: f64,
}

/// Second-order couplings of the Mott-regime effective model. The returned
/// parameters include `chi` and have zero field.
pub fn hubbard_couplings(h: &HubbardParams) -> Result<ModelParams> {
    if h.u0 == 0.0 || h.u2 == 0.0 {
        return Err(Error::InvalidHubbardParams(format!(
            "repulsions must be nonzero (U0 = {}, U2 = {})",
            h.u0, h.u2
        )));
    }
    if ![h.hop, h.u0, h.u2].iter().all(|x| x.is_finite()) {
        return Err(Error::InvalidHubbardParams("non-finite input".into()));
    }
    let t2 = h.hop * h.hop;
    let j = -2.0 * t2 / h.u2;
    let k = -2.0 * t2 / (3.0 * h.u2) - 4.0 * t2 / h.u0;
    Ok(ModelParams {
        j,
        k,
        bz: 0.0,
        include_chi: true,
    })
}

/// Spin-1 matrices `(Sx, Sy, Sz)` with hbar = 1.
pub fn spin1_operators() -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut sx = ComplexMatrix::zeros(3, 3);
    let mut sy = ComplexMatrix::zeros(3, 3);
    for (a, b) in [(0, 1), (1, 2)] {
        sx[(a, b)] = Complex64::new(r, 0.0);
        sx[(b, a)] = Complex64::new(r, 0.0);
        sy[(a, b)] = Complex64::new(0.0, -r);
        sy[(b, a)] = Complex64::new(0.0, r);
    }
    let sz = ComplexMatrix::from_real_diag(&[1.0, 0.0, -1.0]);
    (sx, sy, sz)
}

/// `S1 · S2` on the two-site space.
pub fn spin_exchange() -> ComplexMatrix {
    let (sx, sy, sz) = spin1_operators();
    let mut out = ComplexMatrix::zeros(DIM, DIM);
    for s in [&sx, &sy, &sz] {
        out = &out + &kron(s, s);
    }
    out
}

/// `S1z + S2z`
pub fn total_sz() -> ComplexMatrix {
    let (_, _, sz) = spin1_operators();
    let id = ComplexMatrix::identity(SITE_DIM);
    &kron(&sz, &id) + &kron(&id, &sz)
}

pub fn build_hamiltonian(p: &ModelParams) -> ComplexMatrix {
    let exchange = spin_exchange();
    let quad = &exchange * &exchange;
    let mut h = &exchange.scale_real(p.j) + &quad.scale_real(p.k);
    h = &h + &total_sz().scale_real(p.bz);
    if p.include_chi {
        h = &h + &ComplexMatrix::identity(DIM).scale_real(p.chi());
    }
    h.hermitian_part()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticEigenpair {
    /// 1..=9
    pub label: usize,
    pub energy: f64,
    pub vector: Vec<Complex64>,
}

/// Energies `E_i(Bz) = intercept + slope * Bz` (without chi), labels 1..=9.
pub fn affine_energies(j: f64, k: f64) -> [(f64, f64); DIM] {
    [
        (4.0 * k - 2.0 * j, 0.0),
        (k - j, 0.0),
        (k - j, -1.0),
        (k - j, 1.0),
        (k + j, 0.0),
        (k + j, -2.0),
        (k + j, -1.0),
        (k + j, 1.0),
        (k + j, 2.0),
    ]
}

/// Analytic eigenvectors in the computational basis, columns in label order.
pub fn analytic_eigenvectors() -> ComplexMatrix {
    let s2 = 1.0 / 2f64.sqrt();
    let s3 = 1.0 / 3f64.sqrt();
    let s6 = 1.0 / 6f64.sqrt();
    // (basis index, amplitude) per label
    let vectors: [&[(usize, f64)]; DIM] = [
        &[(6, s3), (4, -s3), (2, s3)],
        &[(6, s2), (2, -s2)],
        &[(5, s2), (7, -s2)],
        &[(1, s2), (3, -s2)],
        &[(6, s6), (4, 2.0 * s6), (2, s6)],
        &[(8, 1.0)],
        &[(5, s2), (7, s2)],
        &[(1, s2), (3, s2)],
        &[(0, 1.0)],
    ];
    let mut v = ComplexMatrix::zeros(DIM, DIM);
    for (col, entries) in vectors.iter().enumerate() {
        for &(row, amp) in entries.iter() {
            v[(row, col)] = Complex64::new(amp, 0.0);
        }
    }
    v
}

pub fn analytic_spectrum(p: &ModelParams) -> Vec<AnalyticEigenpair> {
    let v = analytic_eigenvectors();
    affine_energies(p.j, p.k)
        .iter()
        .enumerate()
        .map(|(i, &(c, m))| AnalyticEigenpair {
            label: i + 1,
            energy: c + m * p.bz + p.offset(),
            vector: v.column(i),
        })
        .collect()
}

/// A field value where the energies of two labels coincide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub bz: f64,
    pub labels: (usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Resonances {
    /// Sorted by field, one entry per crossing pair.
    pub crossings: Vec<Crossing>,
    /// Label pairs degenerate at every field.
    pub permanent: Vec<(usize, usize)>,
}

impl Resonances {
    /// Distinct crossing fields, ascending.
    pub fn fields(&self) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::new();
        for c in &self.crossings {
            if out.last().is_none_or(|&last| (c.bz - last).abs() > 1e-12) {
                out.push(c.bz);
            }
        }
        out
    }

    pub fn contains(&self, bz: f64, tol: f64) -> bool {
        self.crossings.iter().any(|c| (c.bz - bz).abs() <= tol)
    }
}

/// Every field at which two of the nine affine levels cross.
pub fn resonance_fields(p: &ModelParams) -> Resonances {
    let levels = affine_energies(p.j, p.k);
    let mut crossings = Vec::new();
    let mut permanent = Vec::new();
    for a in 0..DIM {
        for b in a + 1..DIM {
            let (ca, ma) = levels[a];
            let (cb, mb) = levels[b];
            if ma == mb {
                if ca == cb {
                    permanent.push((a + 1, b + 1));
                }
                continue;
            }
            let bz = (cb - ca) / (ma - mb);
            // normalise -0.0
            let bz = if bz == 0.0 { 0.0 } else { bz };
            crossings.push(Crossing {
                bz,
                labels: (a + 1, b + 1),
            });
        }
    }
    crossings.sort_by(|x, y| x.bz.total_cmp(&y.bz).then(x.labels.cmp(&y.labels)));
    Resonances {
        crossings,
        permanent,
    }
}

/// The two fields `±(3/2)(J - K)` where the singlet meets `|2,2>` and `|0,0>`.
pub fn singlet_resonances(p: &ModelParams) -> [f64; 2] {
    let b = 1.5 * (p.j - p.k).abs();
    [-b, b]
}

#[cfg(test)]
pub(crate) fn basis_vector(index: usize) -> Vec<Complex64> {
    let mut v = vec![crate::linalg::ZERO; DIM];
    v[index] = Complex64::new(1.0, 0.0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eig;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(f64::total_cmp);
        v
    }

    fn max_multiset_diff(a: Vec<f64>, b: Vec<f64>) -> f64 {
        sorted(a)
            .iter()
            .zip(sorted(b).iter())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn su2_algebra() {
        let (sx, sy, sz) = spin1_operators();
        let comm = sx.commutator(&sy).unwrap();
        assert!(comm.approx_eq(&sz.scale(I), 1e-15));
        let casimir = &(&(&sx * &sx) + &(&sy * &sy)) + &(&sz * &sz);
        assert!(casimir.approx_eq(&ComplexMatrix::identity(3).scale_real(2.0), 1e-15));
        let s = hermitian_eig(&sz).unwrap();
        assert_eq!(s.eigenvalues, vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn hubbard_zero_hopping() {
        let m = hubbard_couplings(&HubbardParams { hop: 0.0, u0: 1.0, u2: 1.0 }).unwrap();
        assert_eq!((m.j, m.k, m.chi()), (0.0, 0.0, 0.0));
    }

    #[test]
    fn hubbard_direct_substitution() {
        // hop = 1, U0 = 10, U2 = 2: J = -2/2, K = -2/6 - 4/10
        let m = hubbard_couplings(&HubbardParams { hop: 1.0, u0: 10.0, u2: 2.0 }).unwrap();
        assert!((m.j + 1.0).abs() < 1e-15);
        assert!((m.k - (-1.0 / 3.0 - 0.4)).abs() < 1e-15);
        assert!((m.chi() - (-1.0 + 1.0 / 3.0 + 0.4)).abs() < 1e-15);
        assert!(m.include_chi);
    }

    #[test]
    fn hubbard_repulsive_gives_negative_couplings() {
        let m = hubbard_couplings(&HubbardParams { hop: 0.3, u0: 2.0, u2: 5.0 }).unwrap();
        assert!(m.j < 0.0 && m.k < 0.0);
    }

    #[test]
    fn hubbard_rejects_zero_repulsion() {
        let err = hubbard_couplings(&HubbardParams { hop: 1.0, u0: 0.0, u2: 1.0 });
        assert!(matches!(err, Err(Error::InvalidHubbardParams(_))));
        let err = hubbard_couplings(&HubbardParams { hop: 1.0, u0: 1.0, u2: 0.0 });
        assert!(matches!(err, Err(Error::InvalidHubbardParams(_))));
    }

    #[test]
    fn zero_couplings_give_zero_hamiltonian() {
        let h = build_hamiltonian(&ModelParams::new(0.0, 0.0, 0.0));
        assert_eq!(h.max_abs(), 0.0);
    }

    #[test]
    fn zero_field_spectrum_has_three_levels() {
        let h = build_hamiltonian(&ModelParams::new(0.8, -0.4, 0.0));
        let s = hermitian_eig(&h).unwrap();
        let expected = vec![-3.2, -1.2, -1.2, -1.2, 0.4, 0.4, 0.4, 0.4, 0.4];
        assert!(max_multiset_diff(s.eigenvalues.clone(), expected) < 1e-12);
        assert!((s.eigenvalues[0] + 3.2).abs() < 1e-12);
    }

    #[test]
    fn fully_polarised_state_energy() {
        let p = ModelParams::new(0.8, -0.4, 2.0);
        let h = build_hamiltonian(&p);
        let v = basis_vector(8);
        let hv = h.mat_vec(&v).unwrap();
        for (a, b) in hv.iter().zip(&v) {
            assert!((a - b * (-3.6)).norm() < 1e-12);
        }
    }

    #[test]
    fn basis_label_mapping_matches_polarised_pairs() {
        // E6 = K + J - 2Bz for |2,2> and E9 = K + J + 2Bz for |0,0>.
        let p = ModelParams::new(0.3, 0.7, 1.1);
        let h = build_hamiltonian(&p);
        assert!((h[(8, 8)].re - (p.k + p.j - 2.0 * p.bz)).abs() < 1e-14);
        assert!((h[(0, 0)].re - (p.k + p.j + 2.0 * p.bz)).abs() < 1e-14);
        let pairs = analytic_spectrum(&p);
        assert_eq!(pairs[5].vector, basis_vector(8));
        assert_eq!(pairs[8].vector, basis_vector(0));
    }

    #[test]
    fn analytic_pairs_are_eigenpairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let p = ModelParams::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-4.0..4.0))
                .with_chi(rng.gen_bool(0.5));
            let h = build_hamiltonian(&p);
            for pair in analytic_spectrum(&p) {
                let norm: f64 = pair.vector.iter().map(|z| z.norm_sqr()).sum();
                assert!((norm - 1.0).abs() < 1e-12);
                let hv = h.mat_vec(&pair.vector).unwrap();
                let resid = hv
                    .iter()
                    .zip(&pair.vector)
                    .map(|(a, b)| (a - b * pair.energy).norm())
                    .fold(0.0, f64::max);
                assert!(resid < 1e-10, "label {} residual {resid}", pair.label);
            }
        }
    }

    #[test]
    fn resonance_degeneracy_e1_e6() {
        let pairs = analytic_spectrum(&ModelParams::new(0.8, -0.4, 1.8));
        assert!((pairs[5].energy + 3.2).abs() < 1e-12);
        assert!((pairs[0].energy - pairs[5].energy).abs() < 1e-12);
    }

    #[test]
    fn analytic_vs_numeric_multisets_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let p = ModelParams::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-4.0..4.0));
            let numeric = hermitian_eig(&build_hamiltonian(&p)).unwrap().eigenvalues;
            let analytic = analytic_spectrum(&p).iter().map(|e| e.energy).collect();
            assert!(max_multiset_diff(numeric, analytic) < 1e-10);
        }
    }

    #[test]
    fn numeric_projectors_span_analytic_vectors() {
        // Subspace angle check: every analytic vector lies in the numeric
        // eigenspace of its energy (projector residual ~ sin of the angle).
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut params = vec![ModelParams::new(0.8, -0.4, 0.0), ModelParams::new(0.8, -0.4, 1.8)];
        for _ in 0..20 {
            params.push(ModelParams::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-4.0..4.0)));
        }
        for p in params {
            let s = hermitian_eig(&build_hamiltonian(&p)).unwrap();
            for pair in analytic_spectrum(&p) {
                let mut proj = ComplexMatrix::zeros(DIM, DIM);
                for k in 0..DIM {
                    if (s.eigenvalues[k] - pair.energy).abs() < 1e-8 {
                        let col = s.eigenvector(k);
                        proj = &proj + &ComplexMatrix::outer(&col, &col);
                    }
                }
                let pv = proj.mat_vec(&pair.vector).unwrap();
                let sin_angle: f64 = pv
                    .iter()
                    .zip(&pair.vector)
                    .map(|(a, b)| (a - b).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                assert!(sin_angle < 1e-8, "{p:?} label {}", pair.label);
            }
        }
    }

    #[test]
    fn chi_shift_leaves_gaps_unchanged() {
        let base = ModelParams::new(0.8, -0.4, 0.7);
        let a = analytic_spectrum(&base);
        let b = analytic_spectrum(&base.with_chi(true));
        for x in 0..DIM {
            for y in 0..DIM {
                let da = a[x].energy - a[y].energy;
                let db = b[x].energy - b[y].energy;
                assert!((da - db).abs() < 1e-12);
            }
        }
        let na = hermitian_eig(&build_hamiltonian(&base)).unwrap().eigenvalues;
        let nb = hermitian_eig(&build_hamiltonian(&base.with_chi(true))).unwrap().eigenvalues;
        for (x, y) in na.iter().zip(&nb) {
            assert!((y - x - base.chi()).abs() < 1e-12);
        }
    }

    #[test]
    fn resonances_contain_singlet_crossings() {
        let r = resonance_fields(&ModelParams::new(0.8, -0.4, 0.0));
        assert!(r.contains(1.8, 1e-12) && r.contains(-1.8, 1e-12));
        let e16 = r.crossings.iter().find(|c| c.labels == (1, 6)).unwrap();
        assert!((e16.bz - 1.8).abs() < 1e-12);
        let e19 = r.crossings.iter().find(|c| c.labels == (1, 9)).unwrap();
        assert!((e19.bz + 1.8).abs() < 1e-12);
    }

    #[test]
    fn mirrored_couplings_brute_force() {
        // Solve E_i(Bz) = E_j(Bz) for all 36 pairs by bisection on the
        // difference of the numerically evaluated levels.
        let p = ModelParams::new(-0.8, 0.4, 0.0);
        let levels = |bz: f64| -> Vec<f64> {
            analytic_spectrum(&p.with_bz(bz)).iter().map(|e| e.energy).collect()
        };
        let mut found = Vec::new();
        for a in 0..DIM {
            for b in a + 1..DIM {
                let f = |bz: f64| {
                    let l = levels(bz);
                    l[a] - l[b]
                };
                let (mut lo, mut hi) = (-50.0, 50.0);
                if f(lo).signum() == f(hi).signum() {
                    continue;
                }
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if f(mid).signum() == f(lo).signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                found.push(0.5 * (lo + hi));
            }
        }
        assert!(found.iter().any(|&b| (b - 1.8).abs() < 1e-9));
        assert!(found.iter().any(|&b| (b + 1.8).abs() < 1e-9));
        let r = resonance_fields(&p);
        for b in found {
            assert!(r.contains(b, 1e-9));
        }
    }

    #[test]
    fn equal_couplings_collapse_singlet_resonances() {
        let r = resonance_fields(&ModelParams::new(0.5, 0.5, 0.0));
        let singlet: Vec<_> = r.crossings.iter().filter(|c| c.labels == (1, 6) || c.labels == (1, 9)).collect();
        assert_eq!(singlet.len(), 2);
        assert!(singlet.iter().all(|c| c.bz == 0.0));
        assert!(r.permanent.contains(&(1, 5)));

        let r = resonance_fields(&ModelParams::new(0.0, 0.0, 0.0));
        assert_eq!(r.fields(), vec![0.0]);
        assert!(!r.permanent.is_empty());
    }

    #[test]
    fn resonances_symmetric_under_field_reversal() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let p = ModelParams::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), 0.0);
            let f = resonance_fields(&p).fields();
            let mut mirrored: Vec<f64> = f.iter().map(|x| -x).collect();
            mirrored.sort_by(f64::total_cmp);
            for (a, b) in f.iter().zip(&mirrored) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }
}
