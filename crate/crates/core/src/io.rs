//! JSON file schemas shared by the library and the CLI.
//!
//! Matrix: `{"rows": int, "cols": int, "re": [[f64]], "im": [[f64]]}`,
//! row-major, with an optional `"meta"` object of string notes.
//! History: `{"label": str, "members": [{"weight": f64, "re": [f64], "im": [f64]}]}`.
//! Populations: `{"counts": [f64], "normalized": bool}`.
//! Expectations: `{"n_qubits": int, "values": {"XX": f64, ...}}`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::ensemble::EnsembleHistory;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::state::PureState;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<BTreeMap<String, String>>,
}

impl MatrixJson {
    pub fn with_meta(m: &ComplexMatrix, meta: BTreeMap<String, String>) -> Self {
        let mut out = Self::from(m.clone());
        out.meta = Some(meta);
        out
    }
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        let check = |part: &str, rows: &[Vec<f64>]| -> Result<()> {
            if rows.len() != j.rows {
                return Err(Error::Malformed(format!(
                    "\"{part}\" has {} rows, expected {}",
                    rows.len(),
                    j.rows
                )));
            }
            if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != j.cols) {
                return Err(Error::Malformed(format!(
                    "ragged \"{part}\": row {i} has {} entries, expected {}",
                    r.len(),
                    j.cols
                )));
            }
            Ok(())
        };
        check("re", &j.re)?;
        check("im", &j.im)?;
        let data =
            j.re.iter()
                .flatten()
                .zip(j.im.iter().flatten())
                .map(|(&re, &im)| Complex64::new(re, im))
                .collect();
        ComplexMatrix::from_vec(j.rows, j.cols, data)
    }
}

impl From<ComplexMatrix> for MatrixJson {
    fn from(m: ComplexMatrix) -> Self {
        let part = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..m.rows()).map(|i| m.row(i).iter().map(f).collect()).collect()
        };
        // adding +0.0 turns -0.0 into 0.0 and leaves every other value alone
        Self {
            rows: m.rows(),
            cols: m.cols(),
            re: part(|z| z.re + 0.0),
            im: part(|z| z.im + 0.0),
            meta: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MemberJson {
    pub weight: f64,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistoryJson {
    pub label: String,
    pub members: Vec<MemberJson>,
}

impl TryFrom<HistoryJson> for EnsembleHistory {
    type Error = Error;

    fn try_from(j: HistoryJson) -> Result<Self> {
        let members = j
            .members
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                if m.re.len() != m.im.len() {
                    return Err(Error::Malformed(format!(
                        "member {i}: {} real vs {} imaginary amplitudes",
                        m.re.len(),
                        m.im.len()
                    )));
                }
                let amps =
                    m.re.iter()
                        .zip(&m.im)
                        .map(|(&re, &im)| Complex64::new(re, im))
                        .collect();
                Ok((m.weight, PureState::new(amps)?))
            })
            .collect::<Result<Vec<_>>>()?;
        EnsembleHistory::new(j.label, members)
    }
}

impl From<&EnsembleHistory> for HistoryJson {
    fn from(h: &EnsembleHistory) -> Self {
        Self {
            label: h.label().to_string(),
            members: h
                .members()
                .iter()
                .map(|m| MemberJson {
                    weight: m.weight,
                    re: m.state.amplitudes().iter().map(|z| z.re).collect(),
                    im: m.state.amplitudes().iter().map(|z| z.im).collect(),
                })
                .collect(),
        }
    }
}

/// Parses any schema type, mapping syntax and schema errors to `Malformed`.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    from_json(text)
}

pub fn history_from_json(text: &str) -> Result<EnsembleHistory> {
    from_json::<HistoryJson>(text)?.try_into()
}
