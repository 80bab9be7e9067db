//! Serialized forms of generated states: JSON records, CSV tables and SVG
//! density-matrix plots.
//!
//! JSON layout:
//!
//! ```text
//! { "meta": { "deformation": "h", "n_sites": 2, "state": "M0",
//!             "normalization": "unnormalized", "h": 0.5, "q": null,
//!             "generator": "deformed-dicke 0.1.0" },
//!   "amplitudes": [ { "basis": "↓↓", "exact": "0", "numeric": 0.0 }, ... ] }
//! ```
//!
//! `exact` uses the scalar grammar of [`HScalar`]'s `Display`, e.g.
//! `(-3/2)*h + (1/2)*sqrt(2)*h^3`, and parses back to the same value.
//! `numeric` holds unit-norm amplitudes at the recorded `h` or `q`.
//! Amplitudes list every ket in canonical order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decomp::{density, AcinResult, DensityMatrix, SchmidtResult, Unitary2};
use crate::hilbert::{BasisState, NumericState, StateVector};
use crate::scalar::HScalar;
use crate::selector::{Parameter, ResolvedState, Selector};
use crate::{Error, Result};

pub const GENERATOR: &str = concat!("deformed-dicke ", env!("CARGO_PKG_VERSION"));

/// `unnormalized` rows carry exact numerators; `unit` rows carry only numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Unnormalized,
    Unit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExportMeta {
    pub deformation: String,
    pub n_sites: usize,
    pub state: String,
    pub normalization: Normalization,
    pub h: Option<f64>,
    pub q: Option<f64>,
    pub generator: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmplitudeRecord {
    pub basis: String,
    pub exact: Option<String>,
    pub numeric: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateExport {
    pub meta: ExportMeta,
    pub amplitudes: Vec<AmplitudeRecord>,
}

impl StateExport {
    pub fn new(selector: &Selector, parameter: Parameter, state: &ResolvedState) -> Result<Self> {
        let n = state.n_sites();
        let (h, q) = parameter_values(parameter);
        let numeric = match (state, parameter) {
            (ResolvedState::Exact(s), Parameter::None) if s.iter().any(|(_, a)| a.degree().is_some_and(|d| d > 0)) => {
                None
            }
            _ => Some(state.numeric(h)?),
        };
        let (normalization, exact) = match state {
            ResolvedState::Exact(s) => (Normalization::Unnormalized, Some(s)),
            ResolvedState::Numeric(_) => (Normalization::Unit, None),
        };
        let amplitudes = BasisState::all(n)?
            .into_iter()
            .map(|b| AmplitudeRecord {
                basis: b.to_string(),
                exact: exact.map(|s| s.amplitude(&b).to_string()),
                numeric: numeric.as_ref().map(|s| s.amplitude(&b) + 0.0),
            })
            .collect();
        Ok(Self {
            meta: ExportMeta {
                deformation: selector.deformation().to_string(),
                n_sites: n,
                state: selector.label(),
                normalization,
                h,
                q,
                generator: GENERATOR.to_string(),
            },
            amplitudes,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self).map_err(|e| Error::Format(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }

    /// Parses and validates: one record per ket of the declared size, no
    /// repeats, every exact string a valid scalar, at least one column set.
    pub fn from_json(text: &str) -> Result<Self> {
        let export: StateExport = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        export.exact_state()?;
        export.numeric_state()?;
        Ok(export)
    }

    fn kets(&self) -> Result<Vec<BasisState>> {
        let n = self.meta.n_sites;
        let kets: Vec<BasisState> =
            self.amplitudes.iter().map(|r| r.basis.parse::<BasisState>()).collect::<Result<_>>()?;
        for (i, ket) in kets.iter().enumerate() {
            if ket.n_sites() != n {
                return Err(Error::SiteMismatch(n, ket.n_sites()));
            }
            if kets[..i].contains(ket) {
                return Err(Error::Format(format!("duplicate ket {ket}")));
            }
        }
        Ok(kets)
    }

    /// The exact amplitudes, if every record carries one.
    pub fn exact_state(&self) -> Result<Option<StateVector>> {
        let kets = self.kets()?;
        if self.amplitudes.iter().any(|r| r.exact.is_none()) {
            return Ok(None);
        }
        let mut state = StateVector::zero(self.meta.n_sites)?;
        for (ket, record) in kets.into_iter().zip(&self.amplitudes) {
            let value: HScalar = record.exact.as_deref().unwrap_or_default().parse()?;
            state.add_amplitude(ket, value);
        }
        Ok(Some(state))
    }

    /// The numeric amplitudes, if every record carries one.
    pub fn numeric_state(&self) -> Result<Option<NumericState>> {
        let kets = self.kets()?;
        let values: Option<Vec<f64>> = self.amplitudes.iter().map(|r| r.numeric).collect();
        let Some(values) = values else {
            return Ok(None);
        };
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Format("non-finite amplitude".into()));
        }
        Ok(Some(StateVector::from_entries(self.meta.n_sites, kets.into_iter().zip(values))?))
    }
}

/// A Schmidt or Acín decomposition as written by the command line.
/// Unitaries are row-major with each entry as `[re, im]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionExport {
    pub kind: &'static str,
    pub state: String,
    pub h: Option<f64>,
    pub q: Option<f64>,
    pub coefficients: Vec<f64>,
    pub phi: Option<f64>,
    pub conjugated: Option<bool>,
    pub unitaries: Vec<[[[f64; 2]; 2]; 2]>,
    pub residual: f64,
    pub degenerate: bool,
    pub generator: String,
}

fn unitary_entries(u: &Unitary2) -> [[[f64; 2]; 2]; 2] {
    // Adding 0.0 turns −0.0 into 0.0, keeping output stable across sign noise.
    let e = |r: usize, c: usize| [u[(r, c)].re + 0.0, u[(r, c)].im + 0.0];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn parameter_values(parameter: Parameter) -> (Option<f64>, Option<f64>) {
    match parameter {
        Parameter::None => (None, None),
        Parameter::H(h) => (Some(h), None),
        Parameter::Q(q) => (None, Some(q.value())),
    }
}

impl DecompositionExport {
    pub fn schmidt(selector: &Selector, parameter: Parameter, r: &SchmidtResult) -> Self {
        let (h, q) = parameter_values(parameter);
        Self {
            kind: "schmidt",
            state: selector.to_string(),
            h,
            q,
            coefficients: r.coefficients.to_vec(),
            phi: None,
            conjugated: None,
            unitaries: r.local_unitaries.iter().map(unitary_entries).collect(),
            residual: r.residual,
            degenerate: r.degenerate,
            generator: GENERATOR.to_string(),
        }
    }

    pub fn acin(selector: &Selector, parameter: Parameter, r: &AcinResult) -> Self {
        let (h, q) = parameter_values(parameter);
        Self {
            kind: "acin",
            state: selector.to_string(),
            h,
            q,
            coefficients: r.lambdas.to_vec(),
            phi: Some(r.phi),
            conjugated: Some(r.conjugated),
            unitaries: r.local_unitaries.iter().map(unitary_entries).collect(),
            residual: r.residual,
            degenerate: r.degenerate,
            generator: GENERATOR.to_string(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self).map_err(|e| Error::Format(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }
}

/// One-row CSV of a numeric state in the table layout (`state` column, then
/// one column per ket in canonical order).
pub fn numeric_csv(name: &str, state: &NumericState) -> Result<String> {
    let basis = BasisState::all(state.n_sites())?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("state".to_string()).chain(basis.iter().map(|b| b.to_string()));
    writer.write_record(header).map_err(|e| Error::Format(e.to_string()))?;
    let cells = std::iter::once(name.to_string()).chain(basis.iter().map(|b| state.amplitude(b).to_string()));
    writer.write_record(cells).map_err(|e| Error::Format(e.to_string()))?;
    let bytes = writer.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

/// SVG heatmap of the real part of `ρ`, rows and columns in tensor order.
/// Positive entries are red, negative blue, opacity scaled by magnitude.
pub fn density_svg(rho: &DensityMatrix, title: &str) -> String {
    let n = rho.n_sites();
    let dim = 1usize << n;
    let cell = 48.0_f64.min(384.0 / dim as f64);
    let label_w = 14.0 * n as f64 + 16.0;
    let top = 40.0 + label_w;
    let left = label_w;
    let width = left + cell * dim as f64 + 20.0;
    let height = top + cell * dim as f64 + 20.0;
    let scale = (0..dim)
        .flat_map(|r| (0..dim).map(move |c| (r, c)))
        .map(|(r, c)| rho.real_entry(r, c).abs())
        .fold(0.0, f64::max)
        .max(1e-300);
    let kets: Vec<String> = (0..dim).map(|i| BasisState::from_dense_index(n, i).to_string()).collect();

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="monospace" font-size="12">"#
    );
    let _ = writeln!(svg, "<!-- generator: {GENERATOR} -->");
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="20" text-anchor="middle" font-size="14">{}</text>"#,
        width / 2.0,
        escape(title)
    );
    for (i, ket) in kets.iter().enumerate() {
        let centre = i as f64 * cell + cell / 2.0;
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end" dominant-baseline="middle">|{ket}⟩</text>"#,
            left - 4.0,
            top + centre
        );
        let _ = writeln!(
            svg,
            r#"<text x="{0:.1}" y="{1:.1}" text-anchor="start" dominant-baseline="middle" transform="rotate(-90 {0:.1} {1:.1})">⟨{ket}|</text>"#,
            left + centre,
            top - 4.0
        );
    }
    for r in 0..dim {
        for c in 0..dim {
            let v = rho.real_entry(r, c);
            let v = if v.abs() < 1e-12 { 0.0 } else { v };
            let fill = if v >= 0.0 { "#c0392b" } else { "#2e6da4" };
            let _ = writeln!(
                svg,
                r##"<rect x="{:.1}" y="{:.1}" width="{cell:.1}" height="{cell:.1}" fill="{fill}" fill-opacity="{:.4}" stroke="#999" stroke-width="0.5"><title>{:+.6}</title></rect>"##,
                left + c as f64 * cell,
                top + r as f64 * cell,
                v.abs() / scale,
                v
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

/// Density plot of a unit state.
pub fn state_svg(state: &NumericState, title: &str) -> Result<String> {
    Ok(density_svg(&density(state)?, title))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
