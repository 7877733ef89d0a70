//! Helix period files:
//!
//! ```json
//! {"label": "4", "period": [[0,0,0,0,0,0], [1,-1,-1,0,0,0], ...]}
//! ```
//!
//! Vectors are raw coefficients over `(h, e_1..e_n)`. For label `8b` the
//! optional `"basis": "hyperbolic"` switches to `[x, y]` pairs over
//! `(f_1, f_2)`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use e8grade_core::{GradingLabel, HelixPeriod};

use crate::error::CliError;
use crate::format::{parse_hyperbolic, parse_picard, picard};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[default]
    Standard,
    Hyperbolic,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HelixFile {
    pub label: String,
    #[serde(default, skip_serializing_if = "is_standard")]
    pub basis: Basis,
    pub period: Vec<Vec<i64>>,
}

fn is_standard(b: &Basis) -> bool {
    *b == Basis::Standard
}

impl HelixFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn from_period(period: &HelixPeriod) -> Self {
        HelixFile {
            label: period.label.to_string(),
            basis: Basis::Standard,
            period: period
                .sequence
                .iter()
                .map(|v| picard(period.label, v))
                .collect(),
        }
    }

    pub fn to_period(&self) -> Result<HelixPeriod, CliError> {
        let label: GradingLabel = self
            .label
            .parse()
            .map_err(|e: e8grade_core::Error| CliError::Input(e.to_string()))?;
        let sequence = self
            .period
            .iter()
            .map(|coords| match self.basis {
                Basis::Standard => parse_picard(label, coords),
                Basis::Hyperbolic => parse_hyperbolic(label, coords),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HelixPeriod::new(label, sequence))
    }
}
