use alloc::boxed::Box;
use core::fmt;

use crate::delpezzo::HelixReport;
use crate::lattice::{GradingLabel, LatticeVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Reflection requested in a vector whose norm is not `-2`.
    NotARoot { norm: i64 },
    /// Label string outside `1..7, 8a, 8b, 9`.
    UnknownLabel,
    /// A degree argument outside the range the operation accepts.
    DegreeOutOfRange { m: i64, lo: i64, hi: i64 },
    /// `β·(β + ω)` was odd, so `χ` would not be an integer.
    OddEulerNumerator { beta: LatticeVector },
    /// A generator maps an element of the input outside of it.
    NotClosed {
        element: Box<LatticeVector>,
        image: Box<LatticeVector>,
    },
    /// Orbit closure exceeded [`crate::weyl::ORBIT_CAP`].
    OrbitTooLarge,
    /// The operation is only tabulated for some labels.
    LabelNotTabulated(GradingLabel),
    /// A vector that should lie in the Picard lattice has components in
    /// the second block.
    NotInPicardLattice {
        label: GradingLabel,
        v: LatticeVector,
    },
    /// A helix period failed validation.
    InvalidHelix(HelixReport),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotARoot { norm } => {
                write!(f, "reflection vector has norm {norm}, expected -2")
            }
            Error::UnknownLabel => {
                f.write_str("unknown grading label (expected 1..7, 8a, 8b or 9)")
            }
            Error::DegreeOutOfRange { m, lo, hi } => {
                write!(f, "degree {m} outside [{lo}, {hi}]")
            }
            Error::OddEulerNumerator { beta } => {
                write!(f, "β·(β-K) is odd for β = {beta}")
            }
            Error::NotClosed { element, image } => {
                write!(f, "set not closed: {element} reflects to {image}")
            }
            Error::OrbitTooLarge => f.write_str("orbit closure exceeded element cap"),
            Error::LabelNotTabulated(label) => {
                write!(f, "label {label} is not tabulated for this operation")
            }
            Error::NotInPicardLattice { label, v } => {
                write!(f, "{v} is not in the Picard lattice of dP_{label}")
            }
            Error::InvalidHelix(report) => write!(
                f,
                "invalid helix period: {} structural issue(s), {} failing pair(s)",
                report.structural.len(),
                report.failing_pairs.len()
            ),
        }
    }
}

impl core::error::Error for Error {}
