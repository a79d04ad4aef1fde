//! Exact enumeration of lozenge tilings of halved hexagons with triangular
//! defects.
//!
//! The crate has two independent routes to every tiling number and a
//! harness that proves they agree:
//!
//! - [`formulas`] evaluates closed-form products over exact rationals for
//!   each region family (`P`, `P'`, `Q`, `Q'`, `K`, `K'`, `H1`..`H8`, `S`).
//! - [`lattice`] builds the same regions as explicit weighted cell sets on
//!   the triangular lattice, and [`engine`] counts their tilings by
//!   weighted perfect-matching enumeration.
//! - [`verify`] sweeps parameter grids comparing the two routes exactly,
//!   checks the condensation recurrences and mirror factorization, and
//!   calibrates every ambiguous convention against the counting oracle.

pub mod combinat;
pub mod convention;
pub mod engine;
pub mod family;
pub mod formulas;
pub mod lattice;
pub mod rat;
pub mod render;
pub mod verify;

pub use combinat::HoleSeq;
pub use convention::Conventions;
pub use family::{Family, Params, RegionSpec};
pub use lattice::{Cell, Orient, Region};
pub use rat::Rat;
