//! Exact-arithmetic construction of the `Z_d`-gradings of `E8` from
//! co-weights `ω_d` on the lattice `Z^{1,9}`, together with the matching
//! del Pezzo Picard-lattice computations: rational curve classes, helical
//! line bundles and helix periods.
//!
//! Everything is integer arithmetic on [`LatticeVector`]s; the crate is
//! `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod delpezzo;
mod error;
pub mod grading;
pub mod lattice;
pub mod roots;
pub mod weyl;

pub use delpezzo::{
    crosscheck_report, crosscheck_weights, curve_classes, euler_characteristic, is_helical,
    period_length, quiver, validate_helix_period, Helicality, HelixPeriod, HelixReport,
    PicardClass, Quiver,
};
pub use error::Error;
pub use grading::{build_grading, dims_table, duality_map, GradedRoot, Grading, GuAlgebra};
pub use lattice::{inner_product, reflect, split, GradingLabel, LatticeVector};
pub use roots::{degree, enumerate_root_classes, normalize_degree, RootClass, RootKind};
pub use weyl::{
    appendix_counts, gu_generators, orbit, orbit_decompose, OrbitDecomposition, ReflectionGroup,
};
