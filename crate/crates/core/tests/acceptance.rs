// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion followed by
//! its individual checks.
//!
//! A few checks are known to fail for reasons of substance rather than
//! implementation; they are listed in `KNOWN_RED` with the reason and still
//! print FAIL. The process exits nonzero on any other failure, and also when
//! a known-red check starts passing so the list is kept honest.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use common::{device, dissipators, fitted_bath, labelled, ratio_point};
use rabisim::constants::{ghz, mhz, milli_flux_quanta, to_ghz, to_mhz};
use rabisim::dynamics::{
    evolve, thermal_state, Bath, DriveSpec, EvolveOptions, SteadyCriteria, SteadySolver,
};
use rabisim::models::{
    jc_hamiltonian, DoubletFamily, DressedLabel, Guard, MixingConvention, RabiModel, Sign,
    SystemParams,
};
use rabisim::operators::{number, pauli, position, Axis, DensityMatrix};
use rabisim::spectroscopy::{line_trace, Polarization, SweepConfig, TransductionMap};
use rabisim::transitions::{
    jc_element_resonator, numeric_matrix_element, ratio_curve, DriveAxis, ElementOptions,
    NumericRabi,
};

// Tolerances.
const BS_SHIFT_TOL_MHZ: f64 = 1.0;
const LINE_TOL_GHZ: f64 = 0.050;
const RATIO_TOL: f64 = 0.05;
const RESONANT_RATIO_TOL: f64 = 0.15;
const JC_SELECTION_TOL: f64 = 1e-12;
const RABI_EXPONENT_MIN: f64 = 1.0;
const PARITY_TOL: f64 = 1e-10;
const PERTURBATIVE_FACTOR: f64 = 6.0;
const GIBBS_TOL: f64 = 1e-4;
const DECAY_TOL: f64 = 0.01;
const TRACE_DRIFT_PER_NS: f64 = 1e-9;
const RK4_FACTOR: f64 = 12.0;
const WEAK_LINE_RANGE: (f64, f64) = (0.05, 0.30);
const BLUE_SIDEBAND_RATIO: f64 = 1e-3;
const STEADY_TOL: f64 = 1e-7;

/// Check id → reason it cannot pass.
const KNOWN_RED: &[(&str, &str)] = &[
    (
        "2.(1,-)->(2,+)",
        "diagonalization gives 12.391 GHz, stable to 1e-6 GHz between n_fock 6 and 12; \
         the quoted 12.3 GHz is 91 MHz away",
    ),
    (
        "4.jc",
        "JC sign-changing resonator elements are O(1) away from g = 0 \
         ((sqrt2-1)/2 at resonance), so no exact JC zero exists",
    ),
];

struct Check {
    id: String,
    detail: String,
    pass: bool,
}

#[derive(Default)]
struct Report {
    unexpected: Vec<String>,
}

impl Report {
    fn criterion(&mut self, n: usize, title: &str, run: impl FnOnce() -> Vec<Check>) {
        let start = Instant::now();
        let checks = run();
        let secs = start.elapsed().as_secs_f64();
        let known: BTreeMap<_, _> = KNOWN_RED.iter().copied().collect();
        let all = checks.iter().all(|c| c.pass);
        println!(
            "{} criterion {n}: {title} ({secs:.1} s)",
            if all { "PASS" } else { "FAIL" }
        );
        for c in &checks {
            let tag = match (c.pass, known.get(c.id.as_str())) {
                (true, None) => "ok".to_string(),
                (false, Some(why)) => format!("FAIL (known: {why})"),
                (false, None) => {
                    self.unexpected.push(c.id.clone());
                    "FAIL".to_string()
                }
                (true, Some(_)) => {
                    self.unexpected.push(format!("{} passed but is listed as known-red", c.id));
                    "ok (listed as known-red)".to_string()
                }
            };
            println!("    {:<18} {:<8} {}", c.id, tag, c.detail);
        }
    }
}

fn check(id: impl Into<String>, pass: bool, detail: String) -> Check {
    Check {
        id: id.into(),
        detail,
        pass,
    }
}

fn within_rel(x: f64, target: f64, tol: f64) -> bool {
    ((x - target) / target).abs() <= tol
}

// Criterion 1.

fn bs_shift_mhz() -> f64 {
    to_mhz(device().omega_bs())
}

fn criterion_1() -> Vec<Check> {
    let w = bs_shift_mhz();
    vec![check(
        "1.shift",
        (w - 55.0).abs() <= BS_SHIFT_TOL_MHZ,
        format!("omega_BS/2pi = {w:.4} MHz, quoted ~55 MHz, tol {BS_SHIFT_TOL_MHZ} MHz"),
    )]
}

// Criterion 2.

fn lines_ghz(n_fock: usize) -> [(&'static str, f64, f64); 3] {
    let (es, _) = labelled(&device(), n_fock);
    let g = DressedLabel::Ground;
    let m1 = DressedLabel::doublet(1, Sign::Minus);
    let p1 = DressedLabel::doublet(1, Sign::Plus);
    let m2 = DressedLabel::doublet(2, Sign::Minus);
    let p2 = DressedLabel::doublet(2, Sign::Plus);
    [
        ("(0,g)->(1,+)", to_ghz(es.transition(g, p1).unwrap()), 8.25),
        ("(1,-)->(2,-)", to_ghz(es.transition(m1, m2).unwrap()), 8.02),
        ("(1,-)->(2,+)", to_ghz(es.transition(m1, p2).unwrap()), 12.3),
    ]
}

fn criterion_2() -> Vec<Check> {
    lines_ghz(6)
        .into_iter()
        .map(|(name, f, target)| {
            check(
                format!("2.{name}"),
                (f - target).abs() <= LINE_TOL_GHZ,
                format!("{f:.4} GHz vs {target} GHz, tol {:.0} MHz", LINE_TOL_GHZ * 1e3),
            )
        })
        .collect()
}

// Criterion 3.

fn ratios(n_fock: usize) -> [(&'static str, f64, f64, f64); 4] {
    let opts = ElementOptions {
        n_fock,
        ..Default::default()
    };
    let off = ratio_point();
    let resonant = SystemParams {
        delta_gap: off.omega_r,
        ..off
    };
    let r = |p: &SystemParams, axis| ratio_curve(p, &[0.1], axis, &NumericRabi, &opts).unwrap()[0].1;
    [
        ("resonator", r(&off, DriveAxis::Resonator), 234.0, RATIO_TOL),
        ("qubit", r(&off, DriveAxis::Qubit), 4.8, RATIO_TOL),
        ("resonant.resonator", r(&resonant, DriveAxis::Resonator), 7.0, RESONANT_RATIO_TOL),
        ("resonant.qubit", r(&resonant, DriveAxis::Qubit), 1.0, RESONANT_RATIO_TOL),
    ]
}

fn criterion_3() -> Vec<Check> {
    ratios(6)
        .into_iter()
        .map(|(name, x, target, tol)| {
            check(
                format!("3.{name}"),
                within_rel(x, target, tol),
                format!("{x:.3} vs {target}, tol {:.0}%", tol * 100.0),
            )
        })
        .collect()
}

// Criterion 4.

fn criterion_4() -> Vec<Check> {
    let base = ratio_point();
    let wr = base.omega_r;

    let mut jc_max: f64 = 0.0;
    for k in 0..=30 {
        let p = base.with_g(0.01 * k as f64 * wr);
        for n in 1..=3 {
            for (a, b) in [(Sign::Minus, Sign::Plus), (Sign::Plus, Sign::Minus)] {
                jc_max = jc_max.max(jc_element_resonator(&p, n, a, b).unwrap().abs());
            }
        }
    }
    // The numeric JC Hamiltonian gives the same elements; cross-check one.
    let p = base.with_g(0.1 * wr);
    let (s, x) = {
        let s = rabisim::operators::fock_space(8).unwrap();
        let x = position(&s);
        (s, x)
    };
    let es = rabisim::models::eigensystem(&jc_hamiltonian(&p, &s)).unwrap();
    let es = rabisim::models::label_dressed(&es, &p, &s).unwrap();
    let i = es.index_of(DressedLabel::doublet(1, Sign::Minus)).unwrap();
    let j = es.index_of(DressedLabel::doublet(2, Sign::Plus)).unwrap();
    let numeric_jc = numeric_matrix_element(&es, &x, i, j).unwrap().norm();
    let analytic_jc = jc_element_resonator(&p, 1, Sign::Minus, Sign::Plus).unwrap().abs();

    // Power law of the Rabi sign-changing element at small coupling.
    let gs = [0.0025, 0.005, 0.01, 0.02];
    let opts = ElementOptions::default();
    let els: Vec<f64> = gs
        .iter()
        .map(|&x| {
            let p = base.with_g(x * wr);
            use rabisim::transitions::ElementModel;
            NumericRabi
                .doublet_elements(&p, 1, DriveAxis::Resonator, &opts)
                .unwrap()
                .minus_plus
        })
        .collect();
    let exponents: Vec<f64> = els
        .windows(2)
        .map(|w| (w[1] / w[0]).ln() / 2f64.ln())
        .collect();
    let min_exp = exponents.iter().cloned().fold(f64::INFINITY, f64::min);

    vec![
        check(
            "4.jc",
            jc_max < JC_SELECTION_TOL,
            format!(
                "max |<n+1,+-|a+a'|n,-+>| over g in [0, 0.3 w_r] = {jc_max:.3e}; \
                 numeric JC at g = 0.1 w_r {numeric_jc:.4e} vs closed form {analytic_jc:.4e}"
            ),
        ),
        check(
            "4.rabi",
            min_exp >= RABI_EXPONENT_MIN,
            format!("local exponents {exponents:.4?} over g/w_r {gs:?}"),
        ),
    ]
}

// Criterion 5.

fn criterion_5() -> Vec<Check> {
    let (es, s) = labelled(&device(), 6);
    let x = position(&s);
    let sx = pauli(&s, Axis::X);
    let sz = pauli(&s, Axis::Z);
    let mut worst_same: f64 = 0.0;
    let mut worst_opposite: f64 = 0.0;
    let mut parity_known = true;
    for i in 0..6 {
        for j in 0..6 {
            if i == j {
                continue;
            }
            let (Some(pi), Some(pj)) = (es.parity(i), es.parity(j)) else {
                parity_known = false;
                continue;
            };
            if pi == pj {
                for op in [&x, &sx] {
                    worst_same = worst_same.max(numeric_matrix_element(&es, op, i, j).unwrap().norm());
                }
            } else {
                worst_opposite = worst_opposite.max(numeric_matrix_element(&es, &sz, i, j).unwrap().norm());
            }
        }
    }
    vec![
        check("5.parities", parity_known, "all six states carry a parity".into()),
        check(
            "5.transverse",
            worst_same < PARITY_TOL,
            format!("max same-parity |X|, |sx| = {worst_same:.2e}"),
        ),
        check(
            "5.longitudinal",
            worst_opposite < PARITY_TOL,
            format!("max opposite-parity |sz| = {worst_opposite:.2e}"),
        ),
    ]
}

// Criterion 6.

fn criterion_6() -> Vec<Check> {
    let gs = [0.4, 0.2, 0.1, 0.05];
    let errs: Vec<f64> = gs
        .iter()
        .map(|&g| {
            let p = device().with_g(ghz(g));
            let (es, _) = labelled(&p, 12);
            let fam = DoubletFamily::bloch_siegert(&p, MixingConvention::default(), Guard::Enforce).unwrap();
            let shift = fam.frame_offset();
            let mut worst = (es.energy_of(DressedLabel::Ground).unwrap() - (fam.ground_energy() - shift)).abs();
            for n in 1..=2 {
                let (ep, em) = fam.eigenvalues(n).unwrap();
                let np = es.energy_of(DressedLabel::doublet(n, Sign::Plus)).unwrap();
                let nm = es.energy_of(DressedLabel::doublet(n, Sign::Minus)).unwrap();
                worst = worst.max((np - (ep - shift)).abs()).max((nm - (em - shift)).abs());
            }
            to_mhz(worst)
        })
        .collect();
    let factors: Vec<f64> = errs.windows(2).map(|w| w[0] / w[1]).collect();
    let min = factors.iter().cloned().fold(f64::INFINITY, f64::min);
    vec![check(
        "6.order",
        min >= PERTURBATIVE_FACTOR,
        format!("max level error (MHz) {errs:.4?} for g/2pi {gs:?} GHz; factors {factors:.2?}"),
    )]
}

// Criterion 7.

fn gibbs_distance(temperature: f64) -> f64 {
    let bath = fitted_bath(temperature);
    let (es, _, diss) = dissipators(&device(), 6, &bath);
    let drive = DriveSpec::default();
    let solver = SteadySolver::new(&diss, &drive).unwrap();
    let mut pops = vec![0.0; es.len()];
    pops[0] = 0.5;
    pops[2] = 0.3;
    pops[5] = 0.2;
    let rho0 = DensityMatrix::from_populations(&pops).unwrap();
    let criteria = SteadyCriteria {
        rel_tol: STEADY_TOL,
        ..SteadyCriteria::default()
    };
    let (rho, _) = solver.solve(ghz(8.0), &rho0, &criteria).unwrap();
    rho.trace_distance(&thermal_state(&es, temperature).unwrap()).unwrap()
}

/// Largest |Tr ρ − 1| per ns of elapsed time along a trajectory.
fn drift_per_ns(times: &[f64], states: &[DensityMatrix]) -> f64 {
    times
        .iter()
        .zip(states)
        .skip(1)
        .map(|(&t, r)| (r.trace().re - 1.0).abs().max(r.trace().im.abs()) / (t * 1e9))
        .fold(0.0, f64::max)
}

fn criterion_7() -> Vec<Check> {
    let mut out = Vec::new();
    for t in [0.09, 0.15] {
        let d = gibbs_distance(t);
        out.push(check(
            format!("7a.gibbs.{:.0}mK", t * 1e3),
            d < GIBBS_TOL,
            format!("trace distance to Gibbs {d:.2e}"),
        ));
    }

    // Damped cavity: g = 0, resonator channel only, T = 0, start in |g,2>.
    let p = device().with_g(0.0);
    let gamma = mhz(10.0);
    let bath = Bath::new(0.0, gamma, 0.0, 0.0);
    let (es, s, diss) = dissipators(&p, 5, &bath);
    let n_op = es.transform(&number(&s));
    let start = (0..es.len())
        .filter(|&i| (n_op.get(i, i).re - 2.0).abs() < 1e-9)
        .min_by(|&i, &j| es.energies()[i].total_cmp(&es.energies()[j]))
        .expect("|g,2> present");
    let mut pops = vec![0.0; es.len()];
    pops[start] = 1.0;
    let rho0 = DensityMatrix::from_populations(&pops).unwrap();
    let undriven = DriveSpec::undriven(0.0);
    let traj = evolve(
        &rho0,
        &undriven,
        &diss,
        &EvolveOptions {
            t_end: 50e-9,
            dt: 1e-12,
            sample_interval: Some(5e-9),
        },
    )
    .unwrap();
    let mut worst_rel: f64 = 0.0;
    for (t, r) in traj.times.iter().zip(&traj.states) {
        let n = r.matrix().iter().zip(n_op.matrix().transpose().iter()).map(|(a, b)| a * b).sum::<num_complex::Complex64>().re;
        let exact = 2.0 * (-gamma * t).exp();
        worst_rel = worst_rel.max((n - exact).abs() / exact);
    }
    out.push(check(
        "7b.damped_cavity",
        worst_rel < DECAY_TOL,
        format!("max relative deviation of <n> from 2 exp(-Gt) over 50 ns: {worst_rel:.2e}"),
    ));

    // Driven evolution for drift and convergence order.
    let bath = fitted_bath(0.09);
    let (es, _, diss) = dissipators(&device(), 6, &bath);
    let m1 = es.index_of(DressedLabel::doublet(1, Sign::Minus)).unwrap();
    let mut pops = vec![0.0; es.len()];
    pops[m1] = 1.0;
    let rho0 = DensityMatrix::from_populations(&pops).unwrap();
    let drive = DriveSpec {
        a_qb: mhz(90.0),
        a_r: mhz(90.0),
        a_z: 0.0,
        omega_d: ghz(4.12),
    };
    let run = |dt: f64, samples: Option<f64>| {
        evolve(
            &rho0,
            &drive,
            &diss,
            &EvolveOptions {
                t_end: 10e-9,
                dt,
                sample_interval: samples,
            },
        )
        .unwrap()
    };
    let bound = rabisim::dynamics::Generator::new(&diss, &drive).max_step();
    let coarse = run(bound, Some(1e-9));
    let drift = drift_per_ns(&coarse.times, &coarse.states);
    out.push(check(
        "7c.trace_drift",
        drift <= TRACE_DRIFT_PER_NS,
        format!("max |Tr rho - 1| per ns = {drift:.2e} over 10 ns driven"),
    ));
    let half = run(bound / 2.0, None);
    let reference = run(bound / 16.0, None);
    let e1 = coarse.last().trace_distance(reference.last()).unwrap();
    let e2 = half.last().trace_distance(reference.last()).unwrap();
    let factor = e1 / e2;
    out.push(check(
        "7d.rk4_order",
        factor >= RK4_FACTOR,
        format!("errors {e1:.3e} -> {e2:.3e} on halving, factor {factor:.1}"),
    ));
    out
}

// Criterion 8.

fn low_drive_trace_config() -> SweepConfig {
    SweepConfig {
        params: device(),
        flux_offsets: vec![0.0],
        drive_freqs: (0..=70).map(|k| ghz(7.8 + 0.01 * k as f64)).collect(),
        n_fock: 6,
        bath: fitted_bath(0.09),
        drive: DriveSpec {
            a_qb: mhz(12.0),
            a_r: mhz(12.0),
            ..DriveSpec::default()
        },
        criteria: SteadyCriteria {
            rel_tol: STEADY_TOL,
            ..SteadyCriteria::default()
        },
        model: Arc::new(RabiModel),
        readout: Arc::new(Polarization),
        transduction: TransductionMap::default(),
        guard: Guard::Enforce,
    }
}

/// Local maxima of `|y|` above `threshold · max|y|`, as `(x, |y|)`.
fn peaks(xs: &[f64], ys: &[f64], threshold: f64) -> Vec<(f64, f64)> {
    let a: Vec<f64> = ys.iter().map(|y| y.abs()).collect();
    let top = a.iter().cloned().fold(0.0, f64::max);
    (0..a.len())
        .filter(|&i| {
            let left = i == 0 || a[i] > a[i - 1];
            let right = i + 1 == a.len() || a[i] >= a[i + 1];
            left && right && a[i] > threshold * top
        })
        .map(|i| (xs[i], a[i]))
        .collect()
}

fn criterion_8() -> Vec<Check> {
    let config = low_drive_trace_config();
    let records = line_trace(&config).unwrap();
    let failed = records.iter().filter(|r| !r.converged()).count();
    let xs: Vec<f64> = records.iter().map(|r| to_ghz(r.omega_d)).collect();
    let ys: Vec<f64> = records.iter().map(|r| r.p_switch - 50.0).collect();
    let found = peaks(&xs, &ys, 0.02);
    let dips = records.iter().all(|r| r.p_switch <= 50.0 + 1e-6);
    let mut out = vec![
        check("8.converged", failed == 0, format!("{failed} of {} points failed", records.len())),
        check("8.count", found.len() == 2, format!("resonances at {found:.3?} (GHz, |dP|)")),
        check("8.dips", dips, "response lowers P_sw at every point".into()),
    ];
    if found.len() == 2 {
        let (weak, strong) = (found[0], found[1]);
        out.push(check(
            "8.location",
            (weak.0 - 8.02).abs() <= LINE_TOL_GHZ && (strong.0 - 8.25).abs() <= LINE_TOL_GHZ,
            format!("{:.3} and {:.3} GHz", weak.0, strong.0),
        ));
        let ratio = weak.1 / strong.1;
        out.push(check(
            "8.asymmetry",
            ratio >= WEAK_LINE_RANGE.0 && ratio <= WEAK_LINE_RANGE.1,
            format!("weak/strong = {ratio:.3}"),
        ));
    }
    out
}

// Criterion 9.

struct Driven {
    pop_1m: f64,
    thermal_1m: f64,
    excited_shift: f64,
}

fn drive_at(flux_mphi0: f64, from: DressedLabel, to: DressedLabel) -> Driven {
    let temperature = 0.1;
    let p = device().with_flux_offset(milli_flux_quanta(flux_mphi0));
    let bath = fitted_bath(temperature);
    let (es, _, diss) = dissipators(&p, 6, &bath);
    let drive = DriveSpec {
        a_qb: mhz(50.0),
        a_r: mhz(50.0),
        ..DriveSpec::default()
    };
    let solver = SteadySolver::new(&diss, &drive).unwrap();
    let thermal = thermal_state(&es, temperature).unwrap();
    let criteria = SteadyCriteria {
        rel_tol: STEADY_TOL,
        ..SteadyCriteria::default()
    };
    let (rho, _) = solver.solve(es.transition(from, to).unwrap(), &thermal, &criteria).unwrap();
    let m1 = es.index_of(DressedLabel::doublet(1, Sign::Minus)).unwrap();
    let exc = |r: &DensityMatrix| 1.0 - r.population(0).powi(2);
    Driven {
        pop_1m: rho.population(m1),
        thermal_1m: thermal.population(m1),
        excited_shift: exc(&rho) - exc(&thermal),
    }
}

fn criterion_9() -> Vec<Check> {
    let g = DressedLabel::Ground;
    let m1 = DressedLabel::doublet(1, Sign::Minus);
    let p2 = DressedLabel::doublet(2, Sign::Plus);
    let m2 = DressedLabel::doublet(2, Sign::Minus);
    let cool = drive_at(0.0, m1, p2);
    let blue_sym = drive_at(0.0, g, m2);
    let blue_off = drive_at(-1.0, g, m2);
    let ratio = blue_sym.excited_shift.abs() / blue_off.excited_shift.abs();
    vec![
        check(
            "9.cooling",
            cool.pop_1m < cool.thermal_1m,
            format!("P(1,-) {:.5} vs thermal {:.5}", cool.pop_1m, cool.thermal_1m),
        ),
        check(
            "9.ridge",
            cool.excited_shift.abs() > 1e-3,
            format!("1 - P_g^2 shift at the symmetry point {:+.3e}", cool.excited_shift),
        ),
        check(
            "9.blue_sideband",
            ratio < BLUE_SIDEBAND_RATIO,
            format!(
                "(0,g)->(2,-) response {:.2e} at 0 vs {:.2e} at -1 mPhi0, ratio {ratio:.2e}",
                blue_sym.excited_shift, blue_off.excited_shift
            ),
        ),
    ]
}

// Criterion 10.

fn criterion_10() -> Vec<Check> {
    let mut out = Vec::new();
    let (l6, l12) = (lines_ghz(6), lines_ghz(12));
    for (a, b) in l6.iter().zip(&l12) {
        let d = (a.1 - b.1).abs();
        out.push(check(
            format!("10.{}", a.0),
            d <= LINE_TOL_GHZ && ((a.1 - a.2).abs() <= LINE_TOL_GHZ) == ((b.1 - b.2).abs() <= LINE_TOL_GHZ),
            format!("{:.6} vs {:.6} GHz", a.1, b.1),
        ));
    }
    let (r6, r12) = (ratios(6), ratios(12));
    for (a, b) in r6.iter().zip(&r12) {
        let same_verdict = within_rel(a.1, a.2, a.3) == within_rel(b.1, b.2, b.3);
        out.push(check(
            format!("10.{}", a.0),
            within_rel(a.1, b.1, a.3) && same_verdict,
            format!("{:.4} vs {:.4}", a.1, b.1),
        ));
    }
    // The shift is closed-form; recorded for completeness.
    out.push(check("10.shift", true, format!("{:.4} MHz, truncation-free", bs_shift_mhz())));
    out
}

fn main() -> ExitCode {
    let mut report = Report::default();
    report.criterion(1, "Bloch-Siegert shift", criterion_1);
    report.criterion(2, "transition frequencies at the symmetry point", criterion_2);
    report.criterion(3, "matrix-element ratios", criterion_3);
    report.criterion(4, "sign-changing selection rule", criterion_4);
    report.criterion(5, "parity dichotomy", criterion_5);
    report.criterion(6, "perturbative order of the Bloch-Siegert levels", criterion_6);
    report.criterion(7, "open-system fidelity", criterion_7);
    report.criterion(8, "two-line spectroscopy trace", criterion_8);
    report.criterion(9, "cooling and blue-sideband parity", criterion_9);
    report.criterion(10, "truncation robustness", criterion_10);
    if report.unexpected.is_empty() {
        println!("acceptance: no unexpected results ({} known-red checks)", KNOWN_RED.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results: {}", report.unexpected.join(", "));
        ExitCode::FAILURE
    }
}
