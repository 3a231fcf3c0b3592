//! Cross-checks of every solver against the others and against the closed
//! forms, rendered as a deterministic plain-text report.
//!
//! The propagator under test is injectable so a deliberately broken kernel
//! can be fed through the same suites.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dynamics::{analytic_rho_computational, analytic_rho_energy_basis, integrate_master_at, Propagator};
use crate::dynamics::analytic::printed;
use crate::error::Result;
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::model::{analytic_eigenvectors, analytic_spectrum, build_hamiltonian, resonance_fields, ModelParams, DIM};
use crate::quantifiers::{l1_coherence, l1_coherence_closed, linear_entropy, linear_entropy_closed, negativity};
use crate::states::{isotropic, werner_negativity, DensityMatrix, REPORTED_CROSSING};
use crate::sweep::{field_scan, local_maxima, spectrum_scan, SweepConfig, Values};

/// `(params, gamma, rho0, t) -> rho(t)`.
pub type Evolver<'a> = dyn Fn(&ModelParams, f64, &ComplexMatrix, f64) -> Result<ComplexMatrix> + 'a;

pub const J: f64 = 0.8;
pub const K: f64 = -0.4;
pub const P: f64 = 0.7;
pub const GAMMA: f64 = 0.03;
pub const FIELDS: [f64; 4] = [0.0, 1.0, 1.8, 4.0];
pub const TIMES: [f64; 3] = [0.5, 5.0, 20.0];

/// The library propagator.
pub fn exact_evolver(params: &ModelParams, gamma: f64, rho0: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    Propagator::for_model(params, gamma)?.evolve_matrix(rho0, t)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Largest deviation seen, when the check is a tolerance comparison.
    pub residual: Option<f64>,
    pub tol: Option<f64>,
    pub detail: Option<String>,
}

impl Check {
    pub fn within(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            passed: residual <= tol,
            residual: Some(residual),
            tol: Some(tol),
            detail: None,
        }
    }

    pub fn flag(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        let detail: String = detail.into();
        Self {
            name: name.into(),
            passed,
            residual: None,
            tol: None,
            detail: (!detail.is_empty()).then_some(detail),
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub id: usize,
    pub title: String,
    pub checks: Vec<Check>,
}

impl Section {
    fn new(id: usize, title: &str) -> Self {
        Self {
            id,
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, c: Check) {
        self.checks.push(c);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub seed: u64,
    pub sections: Vec<Section>,
    /// Corrections applied to the closed-form element tables.
    pub corrections: Vec<String>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn section(&self, id: usize) -> Option<&Section> {
        self.sections.iter().find(|s| s.id == id)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "validation report (seed {})", self.seed);
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}] {}: {}", s.id, s.title, verdict(s.passed()));
            for c in &s.checks {
                let _ = write!(out, "  {} {}", verdict(c.passed), c.name);
                if let (Some(r), Some(t)) = (c.residual, c.tol) {
                    let _ = write!(out, "  max residual {r:.3e} (tol {t:.0e})");
                }
                if let Some(d) = &c.detail {
                    let _ = write!(out, "  {d}");
                }
                out.push('\n');
            }
        }
        out.push_str("\ncorrections\n");
        for c in &self.corrections {
            let _ = writeln!(out, "  {c}");
        }
        out.push_str("\nnotes\n");
        for n in &self.notes {
            let _ = writeln!(out, "  {n}");
        }
        let _ = writeln!(out, "\noverall: {}", verdict(self.passed()));
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn model(bz: f64) -> ModelParams {
    ModelParams::new(J, K, bz)
}

fn rho_iso() -> DensityMatrix {
    isotropic(P).expect("valid p")
}

/// Ginibre-distributed random density matrix.
pub fn random_density_matrix(rng: &mut impl Rng, n: usize) -> DensityMatrix {
    let a = ComplexMatrix::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let m = &a * &a.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new_unchecked(m.scale_real(1.0 / tr).hermitian_part())
}

/// Runs every suite with the library propagator.
pub fn validate(seed: u64) -> ValidationReport {
    validate_with(seed, &exact_evolver)
}

pub fn validate_with(seed: u64, evolver: &Evolver) -> ValidationReport {
    let mut corrections = Vec::new();
    let sections = vec![
        spectrum_suite(),
        triangle_suite(evolver),
        printed_formula_suite(evolver, &mut corrections),
        closed_form_suite(seed),
        werner_suite(),
        steady_state_suite(evolver),
        gamma_independence_suite(),
        resonance_suite(),
        channel_suite(seed, evolver),
    ];
    let notes = vec![
        format!(
            "isotropic-state crossing of negativity and linear entropy: exact root p = 2/3 of 3p^2 + 4p - 4 = 0; \
             the value {REPORTED_CROSSING} quoted in the literature is off by {:.1e} and is not used",
            REPORTED_CROSSING - 2.0 / 3.0
        ),
        "negativity is the sum of |negative eigenvalues| of the partial transpose (1 for the maximally entangled pair); \
         --rescale-negativity doubles it"
            .to_string(),
    ];
    ValidationReport {
        seed,
        sections,
        corrections,
        notes,
    }
}

fn safe<T>(r: Result<T>, section: &mut Section, what: &str) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            section.push(Check::flag(what, false, format!("error: {e}")));
            None
        }
    }
}

pub fn spectrum_suite() -> Section {
    let mut s = Section::new(1, "analytic spectrum vs numeric diagonalisation");
    for bz in FIELDS {
        let mp = model(bz);
        let Some(spec) = safe(hermitian_eig(&build_hamiltonian(&mp)), &mut s, "eigensolver") else {
            continue;
        };
        let mut analytic: Vec<f64> = analytic_spectrum(&mp).iter().map(|e| e.energy).collect();
        analytic.sort_by(f64::total_cmp);
        let mut numeric = spec.eigenvalues.clone();
        numeric.sort_by(f64::total_cmp);
        let r = analytic.iter().zip(&numeric).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        s.push(Check::within(format!("levels at Bz = {bz}"), r, 1e-10));
    }
    s
}

pub fn triangle_suite(evolver: &Evolver) -> Section {
    let mut s = Section::new(2, "propagator, Kraus sum and RK4 master equation agree");
    let rho0 = rho_iso();
    let (mut ek, mut em, mut km) = (0.0f64, 0.0f64, 0.0f64);
    for bz in FIELDS {
        let mp = model(bz);
        let h = build_hamiltonian(&mp);
        let Some(prop) = safe(Propagator::new(&h, GAMMA), &mut s, "propagator") else {
            continue;
        };
        let Some(rk4) = safe(integrate_master_at(&rho0, &h, GAMMA, &TIMES, 1e-3), &mut s, "master equation") else {
            continue;
        };
        for (i, &t) in TIMES.iter().enumerate() {
            let Some(e) = safe(evolver(&mp, GAMMA, rho0.matrix(), t), &mut s, "evolve") else {
                continue;
            };
            let Some(k) = safe(prop.kraus_evolve(rho0.matrix(), t), &mut s, "Kraus sum") else {
                continue;
            };
            ek = ek.max(e.max_abs_diff(&k));
            em = em.max(e.max_abs_diff(&rk4[i]));
            km = km.max(k.max_abs_diff(&rk4[i]));
        }
    }
    s.push(Check::within("evolve vs Kraus sum", ek, 1e-8));
    s.push(Check::within("evolve vs RK4 (dt = 1e-3)", em, 1e-8));
    s.push(Check::within("Kraus sum vs RK4 (dt = 1e-3)", km, 1e-8));
    s
}

/// Per-element maximum deviation between `candidate` and `reference` over
/// the standard grid, one check per structurally nonzero upper-triangle entry.
fn elementwise(
    s: &mut Section,
    label: &str,
    tol: f64,
    mut pair: impl FnMut(&ModelParams, f64) -> Result<(ComplexMatrix, ComplexMatrix)>,
) {
    let mut worst = [0.0f64; DIM * DIM];
    let mut present = [false; DIM * DIM];
    for bz in FIELDS {
        for t in TIMES {
            let Some((cand, reference)) = safe(pair(&model(bz), t), s, label) else {
                return;
            };
            for r in 0..DIM {
                for c in r..DIM {
                    let i = r * DIM + c;
                    present[i] |= cand[(r, c)].norm() > 0.0;
                    worst[i] = worst[i].max((cand[(r, c)] - reference[(r, c)]).norm());
                }
            }
        }
    }
    for r in 0..DIM {
        for c in r..DIM {
            let i = r * DIM + c;
            if present[i] || worst[i] > tol {
                s.push(Check::within(format!("{label}[{},{}]", r + 1, c + 1), worst[i], tol));
            }
        }
    }
}

pub fn printed_formula_suite(evolver: &Evolver, corrections: &mut Vec<String>) -> Section {
    let mut s = Section::new(3, "closed-form density-matrix elements vs evolve");
    let rho0 = rho_iso();
    elementwise(&mut s, "rho", 1e-12, |mp, t| {
        Ok((analytic_rho_computational(mp, P, GAMMA, t), evolver(mp, GAMMA, rho0.matrix(), t)?))
    });
    let v = analytic_eigenvectors();
    elementwise(&mut s, "rhoE", 1e-12, |mp, t| {
        let e = evolver(mp, GAMMA, rho0.matrix(), t)?;
        Ok((analytic_rho_energy_basis(mp, P, GAMMA, t), v.adjoint().matmul(&e)?.matmul(&v)?))
    });

    // central block: printed prefactor vs its reciprocal
    let names: Vec<&str> = printed::central_block(&model(0.0), P, GAMMA, 1.0).iter().map(|x| x.0).collect();
    let mut as_printed = vec![0.0f64; names.len()];
    let mut reciprocal = vec![0.0f64; names.len()];
    for bz in FIELDS {
        for t in TIMES {
            let mp = model(bz);
            let Some(e) = safe(evolver(&mp, GAMMA, rho0.matrix(), t), &mut s, "evolve") else {
                continue;
            };
            for (i, (_, r, c, val)) in printed::central_block(&mp, P, GAMMA, t).into_iter().enumerate() {
                as_printed[i] = as_printed[i].max((val - e[(r, c)]).norm());
            }
            for (i, (_, r, c, val)) in printed::central_block_corrected(&mp, P, GAMMA, t).into_iter().enumerate() {
                reciprocal[i] = reciprocal[i].max((val - e[(r, c)]).norm());
            }
        }
    }
    for (i, name) in names.iter().enumerate() {
        s.push(
            Check::within(format!("{name}, prefactor 1/D"), reciprocal[i], 1e-12)
                .with_detail(format!("(prefactor D as printed: residual {:.3e})", as_printed[i])),
        );
        corrections.push(format!(
            "{name}: prefactor D = exp(+(9/2) gamma t (J-K)^2 + 3 i t (J-K)) replaced by 1/D \
             (residual as printed {:.3e}, corrected {:.3e})",
            as_printed[i], reciprocal[i]
        ));
    }
    corrections.push(
        "l1 coherence closed form: uses the decaying factor 1/D directly; no change needed".to_string(),
    );
    corrections.push(
        "rhoE[1,5] exponent (3/2) t (J-K) (3 gamma (K-J) + 2i): real part -(9/2) gamma t (J-K)^2 already decays; \
         no sign flip applied"
            .to_string(),
    );
    s
}

pub fn closed_form_suite(seed: u64) -> Section {
    let mut s = Section::new(4, "closed-form coherence and linear entropy vs generic pipeline");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut rc, mut rl) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let mp = ModelParams::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-4.0..4.0));
        let gamma = rng.gen_range(0.0..0.5);
        let p = rng.gen_range(0.0..1.0);
        let t = rng.gen_range(0.0..20.0);
        let rho = isotropic(p)
            .and_then(|r| Propagator::for_model(&mp, gamma)?.evolve_unchecked(&r, t));
        let Some(rho) = safe(rho, &mut s, "evolve") else {
            continue;
        };
        rc = rc.max((l1_coherence_closed(&mp, p, gamma, t) - l1_coherence(&rho)).abs());
        rl = rl.max((linear_entropy_closed(&mp, p, gamma, t) - linear_entropy(&rho)).abs());
    }
    s.push(Check::within("l1 coherence, 200 random tuples", rc, 1e-10));
    s.push(Check::within("linear entropy, 200 random tuples", rl, 1e-10));
    let (mut c0, mut l0) = (0.0f64, 0.0f64);
    for i in 0..=20 {
        let p = i as f64 / 20.0;
        for bz in FIELDS {
            c0 = c0.max((l1_coherence_closed(&model(bz), p, GAMMA, 0.0) - 2.0 * p).abs());
            l0 = l0.max((linear_entropy_closed(&model(bz), p, GAMMA, 0.0) - (1.0 - p * p)).abs());
        }
    }
    s.push(Check::within("l1 coherence at t = 0 equals 2p", c0, 1e-14));
    s.push(Check::within("linear entropy at t = 0 equals 1 - p^2", l0, 1e-14));
    s
}

pub fn werner_suite() -> Section {
    let mut s = Section::new(5, "isotropic-state benchmarks");
    let mut worst = 0.0f64;
    let mut separable = 0.0f64;
    for i in 0..=100 {
        let p = i as f64 / 100.0;
        let Some(n) = safe(isotropic(p).and_then(|r| negativity(&r, 3, 3)), &mut s, "negativity") else {
            continue;
        };
        worst = worst.max((n - werner_negativity(p)).abs());
        worst = worst.max((n - 3.0 * f64::max(0.0, (4.0 * p - 1.0) / 9.0)).abs());
        if p <= 0.25 {
            separable = separable.max(n);
        }
    }
    s.push(Check::within("negativity = 3 max(0, (4p - 1)/9), 101 points", worst, 1e-10));
    s.push(Check::within("negativity vanishes for p <= 1/4", separable, 1e-10));

    // bisection on the generic pipeline
    let gap = |p: f64| -> Result<f64> {
        let r = isotropic(p)?;
        Ok(negativity(&r, 3, 3)? - linear_entropy(&r))
    };
    let (mut lo, mut hi) = (0.25, 1.0);
    let mut ok = true;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        match gap(mid) {
            Ok(g) if g < 0.0 => lo = mid,
            Ok(_) => hi = mid,
            Err(_) => {
                ok = false;
                break;
            }
        }
    }
    let root = 0.5 * (lo + hi);
    let c = Check::within("negativity / linear entropy crossing at p = 2/3", (root - 2.0 / 3.0).abs(), 1e-6)
        .with_detail(format!("(found p = {root:.9}; quoted {REPORTED_CROSSING} flagged, not matched)"));
    s.push(if ok { c } else { Check::flag(c.name, false, "bisection failed") });
    s
}

pub fn steady_state_suite(evolver: &Evolver) -> Section {
    let mut s = Section::new(6, "steady states");
    let rho0 = rho_iso();
    let p2 = P * P;
    let expected = [(0.0, 1.0 - 7.0 * p2 / 9.0), (1.0, 1.0 - 7.0 * p2 / 36.0), (1.8, 1.0 - 10.0 * p2 / 36.0), (4.0, 1.0 - 7.0 * p2 / 36.0)];
    let mut neg = Vec::new();
    let mut coh = Vec::new();
    for (bz, sl) in expected {
        let mp = model(bz);
        let Some(prop) = safe(Propagator::for_model(&mp, GAMMA), &mut s, "propagator") else {
            continue;
        };
        let Some(steady) = safe(prop.steady_state(&rho0, prop.default_deg_tol()), &mut s, "steady state") else {
            continue;
        };
        let Some(n) = safe(negativity(&steady, 3, 3), &mut s, "negativity") else {
            continue;
        };
        let c = l1_coherence(&steady);
        s.push(Check::within(format!("linear entropy at Bz = {bz} is {sl:.6}"), (linear_entropy(&steady) - sl).abs(), 1e-9));
        // exponentials underflow to exactly zero, leaving the undamped terms
        s.push(Check::within(
            format!("coherence at Bz = {bz} matches closed-form limit"),
            (c - l1_coherence_closed(&mp, P, GAMMA, 1e12)).abs(),
            1e-9,
        ));
        let Some(late) = safe(evolver(&mp, GAMMA, rho0.matrix(), 1e5), &mut s, "evolve") else {
            continue;
        };
        let late = DensityMatrix::new_unchecked(late);
        let Some(nl) = safe(negativity(&late, 3, 3), &mut s, "negativity") else {
            continue;
        };
        let r = [(nl - n).abs(), (l1_coherence(&late) - c).abs(), (linear_entropy(&late) - linear_entropy(&steady)).abs()]
            .into_iter()
            .fold(0.0, f64::max);
        s.push(Check::within(format!("evolve to t = 1e5 approaches steady state at Bz = {bz}"), r, 1e-6));
        neg.push((bz, n));
        coh.push((bz, c));
    }
    let at = |v: &[(f64, f64)], b: f64| v.iter().find(|x| x.0 == b).map(|x| x.1).unwrap_or(f64::NAN);
    for (label, v) in [("negativity", &neg), ("coherence", &coh)] {
        let (r, o1, o4) = (at(v, 1.8), at(v, 1.0), at(v, 4.0));
        s.push(Check::flag(
            format!("{label} at Bz = 1.8 exceeds Bz = 1 and Bz = 4"),
            r > o1 && r > o4,
            format!("({r:.6} vs {o1:.6}, {o4:.6})"),
        ));
    }
    s
}

pub fn gamma_independence_suite() -> Section {
    let mut s = Section::new(7, "steady state independent of gamma");
    let rho0 = rho_iso();
    let mut worst = 0.0f64;
    for bz in FIELDS {
        let mut states = Vec::new();
        for gamma in [1e-3, 0.03, 0.3] {
            let r = Propagator::for_model(&model(bz), gamma).and_then(|p| p.steady_state(&rho0, p.default_deg_tol()));
            if let Some(r) = safe(r, &mut s, "steady state") {
                states.push(r);
            }
        }
        for w in states.windows(2) {
            worst = worst.max(w[0].matrix().max_abs_diff(w[1].matrix()));
        }
    }
    s.push(Check::within("gamma in {1e-3, 0.03, 0.3}", worst, 1e-12));
    s
}

pub fn resonance_suite() -> Section {
    let mut s = Section::new(8, "field resonances");
    let step = 0.01;
    for (j, k) in [(J, K), (-J, -K)] {
        let cfg = SweepConfig {
            params: ModelParams::new(j, k, 0.0),
            p: P,
            gamma: Values::One(GAMMA),
            bz: Values::Range { start: -4.0, end: 4.0, step },
            ..SweepConfig::default()
        };
        let Some(table) = safe(field_scan(&cfg), &mut s, "field scan") else {
            continue;
        };
        let bz = table.column("bz").unwrap_or_default();
        for col in ["negativity", "coherence"] {
            let peaks = local_maxima(&bz, &table.column(col).unwrap_or_default(), 1e-9);
            let target = [-1.8, 0.0, 1.8];
            let ok = peaks.len() == target.len() && peaks.iter().zip(target).all(|(a, b)| (a - b).abs() <= step + 1e-12);
            s.push(Check::flag(format!("J = {j}, K = {k}: {col} maxima at -1.8, 0, 1.8"), ok, format!("(found {peaks:?})")));
        }
        let Some(spec) = safe(spectrum_scan(&cfg), &mut s, "spectrum scan") else {
            continue;
        };
        let fields = spec.column("bz").unwrap_or_default();
        let level = |name: &str| spec.column(name).unwrap_or_default();
        let (e1, e6, e9) = (level("E1"), level("E6"), level("E9"));
        let idx = |b: f64| fields.iter().position(|&x| (x - b).abs() < 1e-12);
        let gap = |a: &[f64], b: &[f64], at: f64| idx(at).map(|i| (a[i] - b[i]).abs()).unwrap_or(f64::INFINITY);
        // the singlet E1 meets |1,1> (E6) and |-1,-1> (E9) on opposite sides
        // depending on the sign of J - K
        let b6 = if j > k { 1.8 } else { -1.8 };
        let res = resonance_fields(&cfg.params);
        let listed = |labels: (usize, usize), at: f64| {
            res.crossings.iter().any(|c| c.labels == labels && (c.bz - at).abs() < 1e-12)
        };
        s.push(Check::within(format!("J = {j}, K = {k}: E1 = E6 at Bz = {b6}"), gap(&e1, &e6, b6), 1e-12));
        s.push(Check::within(format!("J = {j}, K = {k}: E1 = E9 at Bz = {}", -b6), gap(&e1, &e9, -b6), 1e-12));
        s.push(Check::flag(
            format!("J = {j}, K = {k}: crossing table lists (1,6) at {b6} and (1,9) at {}", -b6),
            listed((1, 6), b6) && listed((1, 9), -b6),
            "",
        ));
    }
    s
}

pub fn channel_suite(seed: u64, evolver: &Evolver) -> Section {
    let mut s = Section::new(9, "channel properties on random inputs");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let (mut tr, mut herm, mut min_eig, mut semi, mut gauge) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut purity_up = 0.0f64;
    for _ in 0..100 {
        let mp = ModelParams::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-4.0..4.0));
        let gamma = rng.gen_range(0.001..0.5);
        let t1 = rng.gen_range(0.0..10.0);
        let t2 = rng.gen_range(0.0..10.0);
        let rho = random_density_matrix(&mut rng, DIM);
        let shift = rng.gen_range(-5.0..5.0);
        let mut run = || -> Result<()> {
            let a = evolver(&mp, gamma, rho.matrix(), t1)?;
            tr = tr.max((a.trace() - 1.0).norm());
            herm = herm.max(a.hermiticity_defect());
            min_eig = min_eig.min(hermitian_eig(&a.hermitian_part())?.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min));
            let ab = evolver(&mp, gamma, &a, t2)?;
            let direct = evolver(&mp, gamma, rho.matrix(), t1 + t2)?;
            semi = semi.max(ab.max_abs_diff(&direct));
            let h = build_hamiltonian(&mp);
            let shifted = &h + &ComplexMatrix::identity(DIM).scale_real(shift);
            gauge = gauge.max(Propagator::new(&shifted, gamma)?.evolve_matrix(rho.matrix(), t1)?.max_abs_diff(&a));
            let mut prev = f64::INFINITY;
            for i in 0..50 {
                let m = evolver(&mp, gamma, rho.matrix(), i as f64 * 0.4)?;
                let pur = DensityMatrix::new_unchecked(m).purity();
                purity_up = purity_up.max(pur - prev);
                prev = pur;
            }
            Ok(())
        };
        if let Err(e) = run() {
            s.push(Check::flag("evolve", false, format!("error: {e}")));
            return s;
        }
    }
    s.push(Check::within("trace preserved", tr, 1e-12));
    s.push(Check::within("Hermiticity preserved", herm, 1e-12));
    s.push(Check::within("positivity (negative of min eigenvalue)", (0.0 - min_eig).max(0.0), 1e-10));
    s.push(Check::within("semigroup law", semi, 1e-11));
    s.push(Check::within("invariance under H -> H + cI", gauge, 1e-12));
    s.push(Check::within("purity non-increasing (largest step up)", purity_up.max(0.0), 1e-14));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes_and_is_deterministic() {
        let a = validate(42);
        let text = a.render();
        assert!(a.passed(), "{text}");
        assert_eq!(text, validate(42).render());
        assert!(text.contains("rho_35"));
        assert!(text.contains("prefactor 1/D"));
        assert!(text.contains("rhoE[1,5] exponent"));
        assert!(text.contains("0.6672"));
        assert!(text.ends_with("overall: PASS\n"));
    }

    #[test]
    fn tampered_kernel_is_caught() {
        // conjugated phases: evolution under -H
        let tampered = |mp: &ModelParams, gamma: f64, rho: &ComplexMatrix, t: f64| -> Result<ComplexMatrix> {
            let h = build_hamiltonian(mp).scale_real(-1.0);
            Propagator::new(&h, gamma)?.evolve_matrix(rho, t)
        };
        let report = validate_with(42, &tampered);
        assert!(!report.passed());
        let printed = report.section(3).unwrap();
        let names: Vec<&str> = printed.failures().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"rho[1,9]"), "{names:?}");
        assert!(report.render().contains("FAIL rho[1,9]"));
        assert!(!report.section(2).unwrap().passed());
        // the spectrum suite does not depend on the propagator
        assert!(report.section(1).unwrap().passed());
    }
}
