//! Textual state selectors used on the command line.
//!
//! ```text
//! selector := deformation ":" N ":" target | "ket:" kets
//! deformation := "none" | "q" | "h"
//! target := "k=" int      Dicke state with k excitations
//!         | "W"           the one-excitation Dicke state
//!         | label int     coupled state, label in D M V T R Q, int = 2m
//! ```
//!
//! Examples: `h:4:D-4`, `none:3:k=1`, `q:2:M0`, `ket:↑↑`.

use std::fmt;
use std::str::FromStr;

use crate::clebsch::{
    couple_chain_bounded, find_state, CoupledBasis, CouplingPath, MAX_EXACT_SITES, MAX_NUMERIC_SITES,
};
use crate::coproducts::DeformationTag;
use crate::dicke::{dicke_classical, h_dicke, qdicke_explicit, w_state_h};
use crate::hilbert::{BasisState, NumericState, StateVector, MAX_SITES};
use crate::scalar::{HScalar, QValue};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Deformation {
    None,
    Q,
    H,
}

impl Deformation {
    pub fn as_str(self) -> &'static str {
        match self {
            Deformation::None => "none",
            Deformation::Q => "q",
            Deformation::H => "h",
        }
    }
}

impl FromStr for Deformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Deformation::None),
            "q" => Ok(Deformation::Q),
            "h" => Ok(Deformation::H),
            _ => Err(Error::Selector { input: s.to_string(), reason: "deformation must be none, q or h".into() }),
        }
    }
}

impl fmt::Display for Deformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Excitations(usize),
    W,
    Coupled { label: char, twice_m: i32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Family { deformation: Deformation, n_sites: usize, target: Target },
    Ket(BasisState),
}

impl Selector {
    pub fn n_sites(&self) -> usize {
        match self {
            Selector::Family { n_sites, .. } => *n_sites,
            Selector::Ket(b) => b.n_sites(),
        }
    }

    pub fn deformation(&self) -> Deformation {
        match self {
            Selector::Family { deformation, .. } => *deformation,
            Selector::Ket(_) => Deformation::None,
        }
    }

    /// Short name of the selected state, e.g. `D-2`, `k=1`, `W`, `↑↓`.
    pub fn label(&self) -> String {
        match self {
            Selector::Family { target, .. } => match target {
                Target::Excitations(k) => format!("k={k}"),
                Target::W => "W".to_string(),
                Target::Coupled { label, twice_m } => format!("{label}{twice_m}"),
            },
            Selector::Ket(b) => b.to_string(),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Family { deformation, n_sites, .. } => write!(f, "{deformation}:{n_sites}:{}", self.label()),
            Selector::Ket(b) => write!(f, "ket:{b}"),
        }
    }
}

fn selector_error(input: &str, reason: impl Into<String>) -> Error {
    Error::Selector { input: input.to_string(), reason: reason.into() }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        if let Some(kets) = s.strip_prefix("ket:") {
            let b: BasisState = kets.parse().map_err(|e: Error| selector_error(input, e.to_string()))?;
            return Ok(Selector::Ket(b));
        }
        let mut parts = s.splitn(3, ':');
        let (Some(d), Some(n), Some(t)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(selector_error(input, "expected deformation:N:target or ket:<spins>"));
        };
        let deformation: Deformation =
            d.parse().map_err(|_| selector_error(input, "deformation must be none, q or h"))?;
        let n_sites: usize = n.parse().map_err(|_| selector_error(input, "N must be a positive integer"))?;
        if n_sites == 0 || n_sites > MAX_SITES {
            return Err(selector_error(input, format!("N must be in 1..={MAX_SITES}")));
        }
        let target = if let Some(k) = t.strip_prefix("k=") {
            let k: usize = k.parse().map_err(|_| selector_error(input, "k must be a nonnegative integer"))?;
            if k > n_sites {
                return Err(selector_error(input, format!("k must be at most N = {n_sites}")));
            }
            Target::Excitations(k)
        } else if t == "W" {
            Target::W
        } else {
            let mut chars = t.chars();
            let label = chars
                .next()
                .filter(|c| "DMVTRQ".contains(*c))
                .ok_or_else(|| selector_error(input, "target must be k=<int>, W, or a label D/M/V/T/R/Q with 2m"))?;
            let twice_m: i32 = chars
                .as_str()
                .parse()
                .map_err(|_| selector_error(input, "label must be followed by the integer 2m"))?;
            if twice_m.unsigned_abs() as usize > n_sites || (twice_m + n_sites as i32) % 2 != 0 {
                return Err(selector_error(input, format!("2m = {twice_m} is impossible on {n_sites} sites")));
            }
            Target::Coupled { label, twice_m }
        };
        Ok(Selector::Family { deformation, n_sites, target })
    }
}

/// Deformation parameter supplied alongside a selector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Parameter {
    None,
    H(f64),
    Q(QValue),
}

/// A selected state: exact when the deformation allows it.
#[derive(Clone, Debug, PartialEq)]
pub enum ResolvedState {
    Exact(StateVector),
    Numeric(NumericState),
}

impl ResolvedState {
    /// Unit vector; `h` is required to evaluate an exact h-dependent state.
    pub fn numeric(&self, h: Option<f64>) -> Result<NumericState> {
        match self {
            ResolvedState::Exact(s) => {
                let depends_on_h = s.iter().any(|(_, a)| a.degree().is_some_and(|d| d > 0));
                if depends_on_h && h.is_none() {
                    return Err(Error::Format("an h value is needed to evaluate this state".into()));
                }
                s.normalize_at(h.unwrap_or(0.0))
            }
            ResolvedState::Numeric(s) => s.normalized(),
        }
    }

    pub fn n_sites(&self) -> usize {
        match self {
            ResolvedState::Exact(s) => s.n_sites(),
            ResolvedState::Numeric(s) => s.n_sites(),
        }
    }
}

/// Default chain-size cap: the exact coupling limit, or the numeric one
/// for q-deformed states.
pub fn default_site_cap(deformation: Deformation) -> usize {
    match deformation {
        Deformation::Q => MAX_NUMERIC_SITES,
        Deformation::None | Deformation::H => MAX_EXACT_SITES,
    }
}

/// Builds the selected state. `max_sites` caps the chain size; the
/// closed-form constructors keep their own limits.
pub fn resolve(selector: &Selector, parameter: Parameter, max_sites: usize) -> Result<ResolvedState> {
    let n = selector.n_sites();
    if n > max_sites {
        return Err(Error::range("number of sites", n, 1, max_sites as i64));
    }
    let (deformation, target) = match selector {
        Selector::Ket(b) => return Ok(ResolvedState::Exact(StateVector::basis(*b, HScalar::one()))),
        Selector::Family { deformation, target, .. } => (*deformation, target),
    };
    let q = match (deformation, parameter) {
        (Deformation::Q, Parameter::Q(q)) => Some(q),
        (Deformation::Q, _) => return Err(Error::Format("a q value is needed for q-deformed states".into())),
        (_, Parameter::Q(_)) => return Err(Error::Format("q only applies to q-deformed states".into())),
        (Deformation::None, Parameter::H(_)) => {
            return Err(Error::Format("h only applies to h-deformed states".into()))
        }
        _ => None,
    };
    let k = match target {
        Target::Excitations(k) => Some(*k),
        Target::W => Some(1),
        Target::Coupled { .. } => None,
    };
    match (deformation, target, k) {
        (Deformation::None, _, Some(k)) => Ok(ResolvedState::Exact(dicke_classical(n, k)?)),
        (Deformation::Q, _, Some(k)) => Ok(ResolvedState::Numeric(qdicke_explicit(n, k, &q.expect("checked"))?)),
        (Deformation::H, Target::W, _) => Ok(ResolvedState::Exact(w_state_h(n)?)),
        (Deformation::H, _, Some(k)) => Ok(ResolvedState::Exact(h_dicke(n, k)?)),
        (_, Target::Coupled { label, twice_m }, None) => {
            CouplingPath::from_label(n, *label)?;
            let tag = match deformation {
                Deformation::None => DeformationTag::Undeformed,
                Deformation::H => DeformationTag::HExact,
                Deformation::Q => DeformationTag::Q(q.expect("checked")),
            };
            let missing = || Error::Selector {
                input: selector.to_string(),
                reason: format!("no {label} state with 2m = {twice_m}"),
            };
            match couple_chain_bounded(n, tag, max_sites)? {
                CoupledBasis::Exact(states) => {
                    let s = find_state(&states, *label, *twice_m).ok_or_else(missing)?;
                    Ok(ResolvedState::Exact(s.state.clone()))
                }
                CoupledBasis::Numeric(states) => {
                    let s = find_state(&states, *label, *twice_m).ok_or_else(missing)?;
                    Ok(ResolvedState::Numeric(s.state.clone()))
                }
            }
        }
        _ => unreachable!("k is set exactly for the non-coupled targets"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_displays() {
        for s in ["h:4:D-4", "none:3:k=1", "q:2:M0", "h:5:W", "ket:↑↑"] {
            let sel: Selector = s.parse().unwrap();
            assert_eq!(sel.to_string(), s);
        }
        assert_eq!("ket:ud".parse::<Selector>().unwrap().to_string(), "ket:↑↓");
    }

    #[test]
    fn rejects_bad_selectors() {
        for s in
            ["", "h", "h:4", "x:4:D0", "h:0:D0", "h:4:k=5", "h:4:D1", "h:4:X0", "h:4:D", "h:99:D0", "ket:", "ket:ab"]
        {
            assert!(matches!(s.parse::<Selector>(), Err(Error::Selector { .. })), "{s}");
        }
    }

    #[test]
    fn resolves_states() {
        let sel: Selector = "h:4:D-4".parse().unwrap();
        let ResolvedState::Exact(s) = resolve(&sel, Parameter::None, 11).unwrap() else { panic!() };
        assert_eq!(s.support_len(), 16);
        let sel: Selector = "q:2:k=1".parse().unwrap();
        assert!(resolve(&sel, Parameter::None, 11).is_err());
        let q = QValue::new(0.5).unwrap();
        assert!(matches!(resolve(&sel, Parameter::Q(q), 11).unwrap(), ResolvedState::Numeric(_)));
        let sel: Selector = "h:5:M-3".parse().unwrap();
        assert!(resolve(&sel, Parameter::None, 11).is_err());
        let sel: Selector = "h:6:D0".parse().unwrap();
        assert!(matches!(resolve(&sel, Parameter::None, 4), Err(Error::OutOfRange { .. })));
        let sel: Selector = "ket:uu".parse().unwrap();
        let state = resolve(&sel, Parameter::None, 11).unwrap();
        assert_eq!(state.numeric(None).unwrap().norm(), 1.0);
        let sel: Selector = "h:2:M0".parse().unwrap();
        assert!(resolve(&sel, Parameter::None, 11).unwrap().numeric(None).is_err());
    }
}
