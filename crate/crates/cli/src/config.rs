// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Run configuration. Files are flat TOML; values are in laboratory units
//! (GHz, MHz, nA, mΦ₀, mK, ns, μs) unless `units = "si"`, in which case
//! they are rad/s, A, Wb, K and s. Everything is converted to SI here and
//! nowhere else.

use std::path::Path;

use anyhow::{anyhow, bail, Context};
use serde::{Deserialize, Serialize};

use rabisim::constants::{ghz, mhz, milli_flux_quanta};
use rabisim::dynamics::{spectral_registry, Bath, DriveSpec, SteadyCriteria};
use rabisim::models::{model_registry, DressedLabel, Guard, HamiltonianModel, MixingConvention, Sign, SystemParams};
use rabisim::spectroscopy::{readout_registry, CalibrationGrid, Readout, TransductionMap};
use rabisim::transitions::{element_registry, ElementModel, ElementOptions};

use std::sync::Arc;

pub const PRESETS: &[(&str, &str)] = &[
    ("fig2b", include_str!("../presets/fig2b.toml")),
    ("fig4e", include_str!("../presets/fig4e.toml")),
    ("fig4e_resonant", include_str!("../presets/fig4e_resonant.toml")),
    ("fig5b", include_str!("../presets/fig5b.toml")),
    ("fig7a", include_str!("../presets/fig7a.toml")),
    ("fig7b", include_str!("../presets/fig7b.toml")),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    #[default]
    Lab,
    Si,
}

/// Every key is optional; see [`RunConfig::effective`] for defaults.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub units: Option<Units>,

    pub omega_r: Option<f64>,
    pub delta: Option<f64>,
    pub i_p: Option<f64>,
    pub g: Option<f64>,
    pub n_fock: Option<usize>,
    pub model: Option<String>,
    pub allow_nonperturbative: Option<bool>,

    /// Single flux point for `elements`, `trace`, `steady`, `evolve`,
    /// `calibrate`.
    pub flux: Option<f64>,
    pub flux_start: Option<f64>,
    pub flux_stop: Option<f64>,
    pub flux_points: Option<usize>,
    pub freq_start: Option<f64>,
    pub freq_stop: Option<f64>,
    pub freq_points: Option<usize>,

    pub temperature: Option<f64>,
    pub gamma_r: Option<f64>,
    pub gamma_1: Option<f64>,
    pub gamma_z: Option<f64>,
    pub spectral: Option<String>,
    pub ohmic_reference: Option<f64>,

    pub a_qb: Option<f64>,
    pub a_r: Option<f64>,
    pub a_z: Option<f64>,
    pub omega_d: Option<f64>,

    pub window_periods: Option<usize>,
    pub rel_tol: Option<f64>,
    pub max_time: Option<f64>,

    pub readout: Option<String>,
    pub scale: Option<f64>,
    pub offset: Option<f64>,

    pub initial: Option<String>,
    pub t_end: Option<f64>,
    pub dt: Option<f64>,
    pub sample_interval: Option<f64>,

    pub max_level: Option<usize>,
    pub element_model: Option<String>,
    pub mixing: Option<String>,
    pub ratio_start: Option<f64>,
    pub ratio_stop: Option<f64>,
    pub ratio_points: Option<usize>,

    pub cal_gamma_r: Option<Vec<f64>>,
    pub cal_gamma_1: Option<Vec<f64>>,
    pub cal_amplitude: Option<Vec<f64>>,
    pub cal_temperature: Option<Vec<f64>>,
    pub cal_scale: Option<Vec<f64>>,
    pub cal_offset: Option<Vec<f64>>,
}

/// Conversion factors for one unit system.
#[derive(Debug, Clone, Copy)]
struct Scale {
    units: Units,
}

impl Scale {
    fn freq(self, x: f64) -> f64 {
        match self.units {
            Units::Lab => ghz(x),
            Units::Si => x,
        }
    }
    fn rate(self, x: f64) -> f64 {
        match self.units {
            Units::Lab => mhz(x),
            Units::Si => x,
        }
    }
    fn current(self, x: f64) -> f64 {
        match self.units {
            Units::Lab => x * 1e-9,
            Units::Si => x,
        }
    }
    fn flux(self, x: f64) -> f64 {
        match self.units {
            Units::Lab => milli_flux_quanta(x),
            Units::Si => x,
        }
    }
    fn temperature(self, x: f64) -> f64 {
        match self.units {
            Units::Lab => x * 1e-3,
            Units::Si => x,
        }
    }
    fn nanoseconds(self, x: f64) -> f64 {
        match self.units {
            Units::Lab => x * 1e-9,
            Units::Si => x,
        }
    }
    fn microseconds(self, x: f64) -> f64 {
        match self.units {
            Units::Lab => x * 1e-6,
            Units::Si => x,
        }
    }
}

/// Starting state for `evolve`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Initial {
    Thermal,
    Level(DressedLabel),
}

fn parse_initial(s: &str) -> anyhow::Result<Initial> {
    let t = s.trim();
    match t {
        "thermal" => return Ok(Initial::Thermal),
        "ground" | "(0,g)" => return Ok(Initial::Level(DressedLabel::Ground)),
        _ => {}
    }
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| anyhow!("initial: expected thermal, ground or (n,+/-), got {s:?}"))?;
    let (n, sign) = inner
        .split_once(',')
        .ok_or_else(|| anyhow!("initial: expected (n,+/-), got {s:?}"))?;
    let n: usize = n.trim().parse().map_err(|_| anyhow!("initial: bad photon number in {s:?}"))?;
    let sign = match sign.trim() {
        "+" => Sign::Plus,
        "-" => Sign::Minus,
        other => bail!("initial: sign must be + or -, got {other:?}"),
    };
    if n == 0 {
        bail!("initial: doublets start at n = 1");
    }
    Ok(Initial::Level(DressedLabel::doublet(n, sign)))
}

/// Evenly spaced points including both ends; a single point sits at `start`.
pub fn linspace(name: &str, start: f64, stop: f64, points: usize) -> anyhow::Result<Vec<f64>> {
    match points {
        0 => bail!("{name}: axis is empty (0 points)"),
        1 => Ok(vec![start]),
        n => {
            if start == stop {
                bail!("{name}: start equals stop with {n} points");
            }
            Ok((0..n).map(|k| start + (stop - start) * k as f64 / (n - 1) as f64).collect())
        }
    }
}

/// Fully resolved run settings, SI units.
pub struct Resolved {
    pub params: SystemParams,
    pub n_fock: usize,
    pub guard: Guard,
    pub model: Arc<dyn HamiltonianModel>,
    pub flux: f64,
    pub flux_axis: Vec<f64>,
    pub freq_axis: Vec<f64>,
    pub bath: Bath,
    pub drive: DriveSpec,
    pub criteria: SteadyCriteria,
    pub readout: Arc<dyn Readout>,
    pub transduction: TransductionMap,
    pub initial: Initial,
    pub t_end: f64,
    pub dt: Option<f64>,
    pub sample_interval: f64,
    pub max_level: usize,
    pub element_model: Arc<dyn ElementModel>,
    pub element_options: ElementOptions,
    pub ratio_axis: Vec<f64>,
    pub calibration: CalibrationGrid,
}

impl RunConfig {
    /// Layers `self` over `base`, key by key.
    pub fn merged_over(self, base: RunConfig) -> anyhow::Result<RunConfig> {
        let mut table = toml::Table::try_from(&base)?;
        table.extend(toml::Table::try_from(&self)?);
        Ok(table.try_into()?)
    }

    /// The same configuration with every default written out.
    pub fn effective(&self) -> RunConfig {
        let units = self.units.unwrap_or_default();
        // Defaults are stated in lab units and converted for SI files.
        let default = move |lab: f64, conv: fn(Scale, f64) -> f64| match units {
            Units::Lab => lab,
            Units::Si => conv(Scale { units: Units::Lab }, lab),
        };
        let f = |v: Option<f64>, lab: f64, conv: fn(Scale, f64) -> f64| Some(v.unwrap_or_else(|| default(lab, conv)));
        let id = |_: Scale, x: f64| x;
        let list = |v: &Option<Vec<f64>>, lab: &[f64], conv: fn(Scale, f64) -> f64| {
            Some(v.clone().unwrap_or_else(|| lab.iter().map(|&x| default(x, conv)).collect()))
        };
        RunConfig {
            units: Some(units),
            omega_r: f(self.omega_r, 8.13, Scale::freq),
            delta: f(self.delta, 4.2, Scale::freq),
            i_p: f(self.i_p, 500.0, Scale::current),
            g: f(self.g, 0.82, Scale::freq),
            n_fock: Some(self.n_fock.unwrap_or(6)),
            model: Some(self.model.clone().unwrap_or_else(|| "rabi".into())),
            allow_nonperturbative: Some(self.allow_nonperturbative.unwrap_or(false)),
            flux: f(self.flux, 0.0, Scale::flux),
            flux_start: f(self.flux_start, -1.0, Scale::flux),
            flux_stop: f(self.flux_stop, 1.0, Scale::flux),
            flux_points: Some(self.flux_points.unwrap_or(21)),
            freq_start: f(self.freq_start, 7.8, Scale::freq),
            freq_stop: f(self.freq_stop, 8.5, Scale::freq),
            freq_points: Some(self.freq_points.unwrap_or(71)),
            temperature: f(self.temperature, 90.0, Scale::temperature),
            gamma_r: f(self.gamma_r, 1.0, Scale::rate),
            gamma_1: f(self.gamma_1, 15.0, Scale::rate),
            gamma_z: f(self.gamma_z, 0.0, Scale::rate),
            spectral: Some(self.spectral.clone().unwrap_or_else(|| "flat".into())),
            ohmic_reference: f(self.ohmic_reference, 8.13, Scale::freq),
            a_qb: f(self.a_qb, 12.0, Scale::rate),
            a_r: f(self.a_r, 12.0, Scale::rate),
            a_z: f(self.a_z, 0.0, Scale::rate),
            omega_d: f(self.omega_d, 8.25, Scale::freq),
            window_periods: Some(self.window_periods.unwrap_or(50)),
            rel_tol: f(self.rel_tol, 1e-4, id),
            max_time: f(self.max_time, 20.0, Scale::microseconds),
            readout: Some(self.readout.clone().unwrap_or_else(|| "polarization".into())),
            scale: f(self.scale, -100.0, id),
            offset: f(self.offset, 50.0, id),
            initial: Some(self.initial.clone().unwrap_or_else(|| "thermal".into())),
            t_end: f(self.t_end, 100.0, Scale::nanoseconds),
            // Zero selects the largest stable step.
            dt: f(self.dt, 0.0, Scale::nanoseconds),
            sample_interval: f(self.sample_interval, 0.25, Scale::nanoseconds),
            max_level: Some(self.max_level.unwrap_or(6)),
            element_model: Some(self.element_model.clone().unwrap_or_else(|| "rabi".into())),
            mixing: Some(self.mixing.clone().unwrap_or_else(|| "box".into())),
            ratio_start: f(self.ratio_start, 0.02, id),
            ratio_stop: f(self.ratio_stop, 0.3, id),
            ratio_points: Some(self.ratio_points.unwrap_or(15)),
            cal_gamma_r: list(&self.cal_gamma_r, &[1.0], Scale::rate),
            cal_gamma_1: list(&self.cal_gamma_1, &[10.0, 15.0, 20.0], Scale::rate),
            cal_amplitude: list(&self.cal_amplitude, &[8.0, 12.0, 16.0], Scale::rate),
            cal_temperature: list(&self.cal_temperature, &[90.0, 120.0, 150.0], Scale::temperature),
            cal_scale: list(&self.cal_scale, &[-50.0, -100.0, -150.0, -200.0], id),
            cal_offset: list(&self.cal_offset, &[49.0, 50.0, 51.0], id),
        }
    }

    pub fn resolve(&self) -> anyhow::Result<Resolved> {
        let e = self.effective();
        let s = Scale {
            units: e.units.unwrap(),
        };
        let v = |x: Option<f64>| x.unwrap();
        let guard = Guard::from_allow(e.allow_nonperturbative.unwrap());

        let params = SystemParams {
            omega_r: s.freq(v(e.omega_r)),
            delta_gap: s.freq(v(e.delta)),
            i_p: s.current(v(e.i_p)),
            flux_offset: 0.0,
            g: s.freq(v(e.g)),
        };
        params.validate()?;
        let n_fock = e.n_fock.unwrap();
        if n_fock < 2 {
            bail!("n_fock must be at least 2, got {n_fock}");
        }
        let model = model_registry(guard).get(e.model.as_deref().unwrap())?;

        // Endpoints are converted before spacing so lab and SI inputs agree bitwise.
        let flux_axis =
            linspace("flux", s.flux(v(e.flux_start)), s.flux(v(e.flux_stop)), e.flux_points.unwrap())?;
        let freq_axis =
            linspace("freq", s.freq(v(e.freq_start)), s.freq(v(e.freq_stop)), e.freq_points.unwrap())?;

        let spectral = spectral_registry(s.freq(v(e.ohmic_reference))).get(e.spectral.as_deref().unwrap())?;
        let bath = Bath::new(
            s.temperature(v(e.temperature)),
            s.rate(v(e.gamma_r)),
            s.rate(v(e.gamma_1)),
            s.rate(v(e.gamma_z)),
        )
        .with_spectral(spectral);
        bath.validate()?;
        let drive = DriveSpec {
            a_qb: s.rate(v(e.a_qb)),
            a_r: s.rate(v(e.a_r)),
            a_z: s.rate(v(e.a_z)),
            omega_d: s.freq(v(e.omega_d)),
        };
        drive.validate()?;
        let criteria = SteadyCriteria {
            window_periods: e.window_periods.unwrap(),
            rel_tol: v(e.rel_tol),
            max_time: s.microseconds(v(e.max_time)),
        };
        if criteria.window_periods == 0 || !(criteria.rel_tol > 0.0) || !(criteria.max_time > 0.0) {
            bail!("window_periods, rel_tol and max_time must be positive");
        }

        let dt = s.nanoseconds(v(e.dt));
        let mixing = MixingConvention::parse(e.mixing.as_deref().unwrap())?;
        let ratio_axis = linspace("ratio", v(e.ratio_start), v(e.ratio_stop), e.ratio_points.unwrap())?;
        let conv = |xs: &Option<Vec<f64>>, f: fn(Scale, f64) -> f64| -> Vec<f64> {
            xs.as_ref().unwrap().iter().map(|&x| f(s, x)).collect()
        };
        let calibration = CalibrationGrid {
            gamma_r: conv(&e.cal_gamma_r, Scale::rate),
            gamma_1: conv(&e.cal_gamma_1, Scale::rate),
            amplitude: conv(&e.cal_amplitude, Scale::rate),
            temperature: conv(&e.cal_temperature, Scale::temperature),
            scale: e.cal_scale.clone().unwrap(),
            offset: e.cal_offset.clone().unwrap(),
        };

        Ok(Resolved {
            params,
            n_fock,
            guard,
            model,
            flux: s.flux(v(e.flux)),
            flux_axis,
            freq_axis,
            bath,
            drive,
            criteria,
            readout: readout_registry().get(e.readout.as_deref().unwrap())?,
            transduction: TransductionMap {
                scale: v(e.scale),
                offset: v(e.offset),
            },
            initial: parse_initial(e.initial.as_deref().unwrap())?,
            t_end: s.nanoseconds(v(e.t_end)),
            dt: (dt > 0.0).then_some(dt),
            sample_interval: s.nanoseconds(v(e.sample_interval)),
            max_level: e.max_level.unwrap(),
            element_model: element_registry().get(e.element_model.as_deref().unwrap())?,
            element_options: ElementOptions {
                n_fock,
                mixing,
                guard,
            },
            ratio_axis,
            calibration,
        })
    }
}

fn parse_toml(text: &str, origin: &str) -> anyhow::Result<RunConfig> {
    toml::from_str(text).with_context(|| format!("invalid config {origin}"))
}

pub fn preset(name: &str) -> anyhow::Result<RunConfig> {
    let (_, text) = PRESETS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| {
            let names: Vec<_> = PRESETS.iter().map(|(n, _)| *n).collect();
            anyhow!("unknown preset {name:?}; available: {}", names.join(", "))
        })?;
    parse_toml(text, &format!("preset {name}"))
}

/// Reads a TOML config, or the `config` block of a JSON metadata sidecar.
pub fn load(path: &Path) -> anyhow::Result<RunConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    if path.extension().is_some_and(|e| e == "json") {
        let mut v: serde_json::Value =
            serde_json::from_str(&text).with_context(|| format!("invalid JSON in {}", path.display()))?;
        let block = v
            .get_mut("config")
            .map(serde_json::Value::take)
            .ok_or_else(|| anyhow!("{} has no \"config\" block", path.display()))?;
        return serde_json::from_value(block).with_context(|| format!("invalid config block in {}", path.display()));
    }
    parse_toml(&text, &path.display().to_string())
}
