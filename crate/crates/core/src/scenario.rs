//! Scenario runners behind the `tripent` command line.
//!
//! Every scenario is a pure function of its [`RunConfig`]; grid points are
//! evaluated in parallel and emitted in grid order, so identical configs
//! produce byte-identical output.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::{evolve_on_basis, single_particle_propagator, LatticeParams};
use crate::entanglement::{entanglement_of_particles, geometric_measure, Partition};
use crate::error::{Error, Result};
use crate::fock::{FockBasis, Statistics};
use crate::observables::{interparticle_distance, single_particle_density, two_particle_correlation};
use crate::states::{chi_state, packed_initial_state, phi_state_on};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    Chi,
    PhiScan,
    Walk,
    Snapshot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub scenario: Scenario,
    pub modes: usize,
    pub particles: usize,
    pub stats: Statistics,
    /// One-based `"1,2|3,4|5,6"`; `None` picks the scenario default.
    pub partition: Option<String>,
    pub onsite: f64,
    pub tunneling: f64,
    pub tau_max: f64,
    /// Number of τ intervals; the walk emits `steps + 1` rows.
    pub steps: usize,
    pub tau: f64,
    /// Grid points per axis over `[0, π]`, endpoints included.
    pub alpha_steps: usize,
    pub beta_steps: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(scenario: Scenario) -> Self {
        Self {
            scenario,
            modes: 6,
            particles: 3,
            stats: Statistics::Fermions,
            partition: None,
            onsite: 0.0,
            tunneling: 1.0,
            tau_max: 20.0,
            steps: 400,
            tau: 8.7,
            alpha_steps: 101,
            beta_steps: 101,
            out: None,
            format: OutputFormat::Csv,
        }
    }

    pub fn partition(&self) -> Result<Partition> {
        match (&self.partition, self.scenario) {
            (Some(spec), _) => Partition::parse(spec),
            (None, Scenario::Chi) => Ok(Partition::single_modes()),
            (None, _) => Ok(Partition::adjacent_pairs()),
        }
    }

    pub fn lattice(&self) -> Result<LatticeParams> {
        LatticeParams::new(self.modes, self.onsite, self.tunneling)
    }

    /// Rejects configurations that cannot run. All failures are [`Error::Config`]
    /// or [`Error::InvalidPartition`].
    pub fn validate(&self) -> Result<()> {
        let cfg_err = |m: String| Err(Error::Config(m));
        match self.scenario {
            Scenario::Chi => {
                let p = self.partition()?;
                if p.modes() != 3 {
                    return cfg_err(format!("chi needs a three-mode partition, got {p}"));
                }
            }
            Scenario::PhiScan => {
                let p = self.partition()?;
                if p.modes() != 6 || p.parties().iter().any(|q| q.len() != 2) {
                    return cfg_err(format!("phi-scan needs three two-mode parties over six modes, got {p}"));
                }
                if self.alpha_steps < 2 || self.beta_steps < 2 {
                    return cfg_err("phi-scan needs at least 2 grid points per axis".into());
                }
            }
            Scenario::Walk | Scenario::Snapshot => {
                self.lattice().map_err(|e| Error::Config(e.to_string()))?;
                packed_initial_state(self.modes, self.particles, self.stats)
                    .map_err(|e| Error::Config(e.to_string()))?;
                if self.scenario == Scenario::Walk {
                    let p = self.partition()?;
                    if p.modes() != self.modes {
                        return cfg_err(format!("partition {p} does not cover {} sites", self.modes));
                    }
                    if self.particles != 3 {
                        return cfg_err("walk tracks the (1,1,1) sector and needs 3 particles".into());
                    }
                    if self.steps < 1 {
                        return cfg_err("walk needs at least one τ step".into());
                    }
                    if !(self.tau_max.is_finite() && self.tau_max > 0.0) {
                        return cfg_err(format!("tau-max must be positive, got {}", self.tau_max));
                    }
                } else if !self.tau.is_finite() {
                    return cfg_err("tau must be finite".into());
                }
            }
        }
        Ok(())
    }
}

/// Mode entanglement and entanglement of particles of the one-particle state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChiReport {
    #[serde(rename = "eps_G")]
    pub eps_g: f64,
    #[serde(rename = "eps_T")]
    pub eps_t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhiRow {
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "eps_T")]
    pub eps_t: f64,
    #[serde(rename = "eps_G")]
    pub eps_g: f64,
}

/// One τ sample of the walk; the sector columns refer to `(1,1,1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkRow {
    pub tau: f64,
    #[serde(rename = "P_111")]
    pub p111: f64,
    #[serde(rename = "N_A-BC")]
    pub n_a_bc: f64,
    #[serde(rename = "N_B-AC")]
    pub n_b_ac: f64,
    #[serde(rename = "N_C-AB")]
    pub n_c_ab: f64,
    #[serde(rename = "TPN")]
    pub tpn: f64,
    #[serde(rename = "eps_T")]
    pub eps_t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub tau: f64,
    pub stats: Statistics,
    pub rho: Vec<f64>,
    #[serde(rename = "Gamma")]
    pub gamma: Vec<Vec<f64>>,
    pub g: Vec<f64>,
}

pub fn run_chi(cfg: &RunConfig) -> Result<ChiReport> {
    let part = cfg.partition()?;
    let chi = chi_state();
    Ok(ChiReport {
        eps_g: geometric_measure(&chi, &part)?,
        eps_t: entanglement_of_particles(&chi, &part)?.eps_t,
    })
}

/// Uniform grid of `points` values over `[0, π]`.
pub fn angle_grid(points: usize) -> Vec<f64> {
    (0..points).map(|i| i as f64 * PI / (points - 1) as f64).collect()
}

pub fn run_phi_scan(cfg: &RunConfig) -> Result<Vec<PhiRow>> {
    cfg.validate()?;
    let part = cfg.partition()?;
    let basis = Arc::new(FockBasis::enumerate(3, 6, Statistics::Fermions)?);
    let alphas = angle_grid(cfg.alpha_steps);
    let betas = angle_grid(cfg.beta_steps);
    let points: Vec<(f64, f64)> = alphas
        .iter()
        .flat_map(|&a| betas.iter().map(move |&b| (a, b)))
        .collect();
    points
        .par_iter()
        .map(|&(alpha, beta)| {
            let phi = phi_state_on(&basis, alpha, beta);
            Ok(PhiRow {
                alpha,
                beta,
                eps_t: entanglement_of_particles(&phi, &part)?.eps_t,
                eps_g: geometric_measure(&phi, &part)?,
            })
        })
        .collect()
}

/// τ samples `k · tau_max / steps`, `k = 0..=steps`.
pub fn tau_grid(tau_max: f64, steps: usize) -> Vec<f64> {
    (0..=steps).map(|k| k as f64 * tau_max / steps as f64).collect()
}

pub fn run_walk(cfg: &RunConfig) -> Result<Vec<WalkRow>> {
    cfg.validate()?;
    let part = cfg.partition()?;
    let params = cfg.lattice()?;
    let init = packed_initial_state(cfg.modes, cfg.particles, cfg.stats)?;
    let basis = Arc::new(FockBasis::enumerate(init.particles(), init.modes(), init.stats())?);
    tau_grid(cfg.tau_max, cfg.steps)
        .par_iter()
        .map(|&tau| {
            let psi = evolve_on_basis(&basis, &init, &params, tau)?;
            let report = entanglement_of_particles(&psi, &part)?;
            let (p111, negs, tpn) = report
                .sector([1, 1, 1])
                .map_or((0.0, [0.0; 3], 0.0), |s| (s.prob, s.negativities, s.tpn));
            Ok(WalkRow {
                tau,
                p111,
                n_a_bc: negs[0],
                n_b_ac: negs[1],
                n_c_ab: negs[2],
                tpn,
                eps_t: report.eps_t,
            })
        })
        .collect()
}

pub fn run_snapshot(cfg: &RunConfig) -> Result<Snapshot> {
    cfg.validate()?;
    let params = cfg.lattice()?;
    let init = packed_initial_state(cfg.modes, cfg.particles, cfg.stats)?;
    let n: Vec<u32> = init.occupations().iter().map(|&x| x as u32).collect();
    let c = single_particle_propagator(&params, cfg.tau);
    let rho = single_particle_density(&c, &n)?;
    let gamma = two_particle_correlation(&c, &n, cfg.stats)?;
    Ok(Snapshot {
        tau: cfg.tau,
        stats: cfg.stats,
        rho: rho.rho,
        g: interparticle_distance(&gamma),
        gamma: gamma.rows(),
    })
}

/// Result of any scenario.
#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioOutput {
    Chi(ChiReport),
    PhiScan(Vec<PhiRow>),
    Walk(Vec<WalkRow>),
    Snapshot(Snapshot),
}

pub fn run(cfg: &RunConfig) -> Result<ScenarioOutput> {
    cfg.validate()?;
    Ok(match cfg.scenario {
        Scenario::Chi => ScenarioOutput::Chi(run_chi(cfg)?),
        Scenario::PhiScan => ScenarioOutput::PhiScan(run_phi_scan(cfg)?),
        Scenario::Walk => ScenarioOutput::Walk(run_walk(cfg)?),
        Scenario::Snapshot => ScenarioOutput::Snapshot(run_snapshot(cfg)?),
    })
}

/// Formats with 12 significant digits, `%g` style.
pub fn format_sig(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..DIGITS).contains(&exp) {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{:.*e}", (DIGITS - 1) as usize, x);
        let (mantissa, e) = s.split_once('e').expect("scientific notation");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{e}")
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Config(format!("csv output failed: {e}"))
}

fn io_error(e: std::io::Error) -> Error {
    Error::Config(format!("output failed: {e}"))
}

fn write_table<W: Write>(w: W, header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(header).map_err(csv_error)?;
    for row in rows {
        out.write_record(&row).map_err(csv_error)?;
    }
    out.flush().map_err(io_error)
}

impl ScenarioOutput {
    pub fn write<W: Write>(&self, format: OutputFormat, mut w: W) -> Result<()> {
        if format == OutputFormat::Json {
            let json = match self {
                ScenarioOutput::Chi(r) => serde_json::to_string_pretty(r),
                ScenarioOutput::PhiScan(r) => serde_json::to_string_pretty(r),
                ScenarioOutput::Walk(r) => serde_json::to_string_pretty(r),
                ScenarioOutput::Snapshot(r) => serde_json::to_string_pretty(r),
            }
            .map_err(|e| Error::Config(format!("json output failed: {e}")))?;
            return writeln!(w, "{json}").map_err(io_error);
        }
        let f = |x: &f64| format_sig(*x);
        match self {
            ScenarioOutput::Chi(r) => {
                write_table(w, &["eps_G", "eps_T"], std::iter::once(vec![f(&r.eps_g), f(&r.eps_t)]))
            }
            ScenarioOutput::PhiScan(rows) => write_table(
                w,
                &["alpha", "beta", "eps_T", "eps_G"],
                rows.iter().map(|r| vec![f(&r.alpha), f(&r.beta), f(&r.eps_t), f(&r.eps_g)]),
            ),
            ScenarioOutput::Walk(rows) => write_table(
                w,
                &["tau", "P_111", "N_A-BC", "N_B-AC", "N_C-AB", "TPN", "eps_T"],
                rows.iter().map(|r| {
                    [r.tau, r.p111, r.n_a_bc, r.n_b_ac, r.n_c_ab, r.tpn, r.eps_t]
                        .iter()
                        .map(f)
                        .collect()
                }),
            ),
            ScenarioOutput::Snapshot(s) => {
                let mut rows = Vec::new();
                for (r, v) in s.rho.iter().enumerate() {
                    rows.push(vec!["rho".into(), (r + 1).to_string(), String::new(), f(v)]);
                }
                for (r, row) in s.gamma.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        rows.push(vec!["Gamma".into(), (r + 1).to_string(), (c + 1).to_string(), f(v)]);
                    }
                }
                for (d, v) in s.g.iter().enumerate() {
                    rows.push(vec!["g".into(), d.to_string(), String::new(), f(v)]);
                }
                write_table(w, &["quantity", "r", "s", "value"], rows.into_iter())
            }
        }
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        let mut buf = Vec::new();
        self.write(format, &mut buf)?;
        Ok(String::from_utf8(buf).expect("output is UTF-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(1.0), "1");
        assert_eq!(format_sig(8.7), "8.7");
        assert_eq!(format_sig(-0.25), "-0.25");
        assert_eq!(format_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_sig(2.0 / 3.0 * 1e-7), "6.66666666667e-8");
        assert_eq!(format_sig(123456.789), "123456.789");
        assert_eq!(format_sig(0.9154759474226502), "0.915475947423");
    }

    #[test]
    fn grids() {
        let t = tau_grid(20.0, 400);
        assert_eq!(t.len(), 401);
        assert_eq!(t[174], 8.7);
        let a = angle_grid(101);
        assert_eq!(a[50], PI / 2.0);
        assert_eq!(a[100], PI);
    }

    #[test]
    fn config_validation() {
        let mut cfg = RunConfig::new(Scenario::PhiScan);
        cfg.alpha_steps = 1;
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::new(Scenario::Walk);
        cfg.partition = Some("1,2|3,4".into());
        assert!(matches!(cfg.validate(), Err(Error::InvalidPartition(_))));
        cfg.partition = Some("1,2,3|4|5".into());
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::new(Scenario::Walk);
        cfg.particles = 7;
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::new(Scenario::Chi);
        cfg.partition = Some("1,2|3|4".into());
        assert!(cfg.validate().is_err());
        assert!(RunConfig::new(Scenario::Snapshot).validate().is_ok());
    }
}
