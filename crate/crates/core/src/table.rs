//! CSV tables of exact states: one row per state, one column per basis ket
//! in canonical order. The same layout serves golden files and exports.

use std::io;

use crate::hilbert::{BasisState, StateVector};
use crate::scalar::HScalar;
use crate::{Error, Result};

/// A named state; the name is a coupling label such as `D-2` or `M0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedState {
    pub name: String,
    pub state: StateVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateTable {
    n_sites: usize,
    rows: Vec<NamedState>,
}

impl StateTable {
    pub fn new(n_sites: usize, rows: Vec<NamedState>) -> Result<Self> {
        for row in &rows {
            if row.state.n_sites() != n_sites {
                return Err(Error::SiteMismatch(n_sites, row.state.n_sites()));
            }
        }
        Ok(Self { n_sites, rows })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn rows(&self) -> &[NamedState] {
        &self.rows
    }

    pub fn get(&self, name: &str) -> Option<&StateVector> {
        self.rows.iter().find(|r| r.name == name).map(|r| &r.state)
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<()> {
        let basis = BasisState::all(self.n_sites)?;
        let mut writer = csv::Writer::from_writer(out);
        let header = std::iter::once("state".to_string()).chain(basis.iter().map(|b| b.to_string()));
        writer.write_record(header).map_err(csv_error)?;
        for row in &self.rows {
            let cells =
                std::iter::once(row.name.clone()).chain(basis.iter().map(|b| row.state.amplitude(b).to_string()));
            writer.write_record(cells).map_err(csv_error)?;
        }
        writer.flush().map_err(|e| Error::Format(e.to_string()))?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Format(e.to_string()))
    }

    /// Columns may come in any order but must cover each ket at most once,
    /// all with the same site count.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(text.as_bytes());
        let header = reader.headers().map_err(csv_error)?.clone();
        if header.get(0) != Some("state") {
            return Err(Error::Format("first column must be `state`".into()));
        }
        let kets: Vec<BasisState> = header.iter().skip(1).map(|k| k.parse::<BasisState>()).collect::<Result<_>>()?;
        let n_sites =
            kets.first().map(BasisState::n_sites).ok_or_else(|| Error::Format("table has no basis columns".into()))?;
        for (i, ket) in kets.iter().enumerate() {
            if ket.n_sites() != n_sites {
                return Err(Error::SiteMismatch(n_sites, ket.n_sites()));
            }
            if kets[..i].contains(ket) {
                return Err(Error::Format(format!("duplicate column {ket}")));
            }
        }
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(csv_error)?;
            if record.len() != kets.len() + 1 {
                return Err(Error::Format(format!("row has {} cells, expected {}", record.len(), kets.len() + 1)));
            }
            let name = record[0].to_string();
            let mut state = StateVector::zero(n_sites)?;
            for (ket, cell) in kets.iter().zip(record.iter().skip(1)) {
                state.add_amplitude(*ket, cell.parse::<HScalar>()?);
            }
            rows.push(NamedState { name, state });
        }
        Ok(Self { n_sites, rows })
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Format(e.to_string())
}
