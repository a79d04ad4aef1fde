//! Resolved readings for the handful of places where the closed-form
//! evaluators or region builders admit more than one plausible
//! interpretation.
//!
//! Each switch has exactly one reading that reproduces brute-force tiling
//! counts; `verify::calibrate_geometry` demonstrates that the frozen
//! defaults are the unique survivors. The non-default variants stay
//! implemented so the calibration can show they fail.

pub use crate::combinat::H2OddCase;

/// Upper limit of the leading correction product in the weighted halved
/// hexagon formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PprimeLimit {
    /// Product runs `i = 1..=a`.
    #[default]
    UpToA,
    /// Product runs `i = 1..=b`.
    UpToB,
    /// Product runs `i = 1..=(b-a)`.
    UpToDiff,
}

/// How an odd-length sequence argument is made even before a trapezoid
/// formula is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OddSeqRule {
    /// Append a trailing zero hole.
    #[default]
    AppendZero,
    /// Prepend a zero gap.
    PrependZero,
}

/// Second subscript of the weighted halved-hexagon factor in the H8
/// evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum H8SecondIndex {
    /// `z + b - 1` (matches the first subscript).
    #[default]
    ZShift,
    /// `y + b - 1`.
    YShift,
}

/// First halved-hexagon subscript in the H2/H4 evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StairIndex {
    /// `y, y+2a-1, b` — one less than the H1/H3 pattern.
    #[default]
    Shifted,
    /// `y, y+2a, b` — same as H1/H3.
    Plain,
}

/// Which pair of trapezoid values multiplies the base factor in the
/// many-hole H3 evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum H3Numerator {
    /// `Q'(0, a_1..a_2k, y) * Q'(a_1..a_2k + z)`, the pattern every other
    /// family follows.
    #[default]
    Standard,
    /// `Q'(a_1..a_2k, z) * Q'(0, a_1..a_2k + z)`.
    Swapped,
}

/// Whether the half-triangle cut at the western boundary keeps the column
/// of boundary cells it straddles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HoleCut {
    /// Keep every cell whose centroid is not strictly inside the cut
    /// triangle, so a one-cell-wide strip survives along the vertical side.
    #[default]
    KeepSliver,
    /// Additionally delete the straddling strip.
    TrimSliver,
}

/// The full set of resolved readings. `Conventions::default()` is the
/// frozen configuration used by the public evaluators and builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Conventions {
    pub h2_odd: H2OddCase,
    pub pprime_limit: PprimeLimit,
    pub odd_seq: OddSeqRule,
    pub h8_second: H8SecondIndex,
    pub stair_index: StairIndex,
    pub h3_numerator: H3Numerator,
    pub hole_cut: HoleCut,
}
