//! Triangular-lattice geometry: cells, regions, and the constructors that
//! realize every region family as an explicit weighted cell set.
//!
//! Coordinates: rows are indexed top to bottom. Within row `r`, cell
//! `(r, c)` is the unit triangle centered at `x = c/2`; it points up when
//! `r + c` is even and down otherwise. Two cells are adjacent exactly when
//! they share a lattice edge: `(r, c)` with `(r, c±1)`, and an up cell
//! `(r, c)` with the down cell `(r+1, c)` directly below it.
//!
//! Every family is built the same way: a convex row profile (the boundary
//! polygon) minus hole triangles, where a cell is cut when its centroid lies
//! strictly inside a hole. Lozenge weights attach to adjacent cell pairs;
//! any pair not in the weight map has weight 1.

use crate::combinat::HoleSeq;
use crate::convention::{Conventions, HoleCut};
use crate::family::{Family, Params, RegionSpec};
use crate::rat::{frac, Rat};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("parameter order violated: expected a <= b, got a={a}, b={b}")]
    ParameterOrder { a: i64, b: i64 },
    #[error("sequence has odd length {len}")]
    OddLength { len: usize },
    #[error("x and z must have the same parity, got x={x}, z={z}")]
    ParityMismatch { x: i64, z: i64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("region is not symmetric about a vertical axis")]
    NotSymmetric,
    #[error("axis cells do not form a valid cut: {0}")]
    AxisNotCutSet(String),
    #[error("cut does not split the region: {0}")]
    Indivisible(String),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

/// Triangle orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orient {
    Up,
    Down,
}

/// One unit triangle of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub fn orient(&self) -> Orient {
        if (self.row + self.col).rem_euclid(2) == 0 {
            Orient::Up
        } else {
            Orient::Down
        }
    }

    pub fn is_up(&self) -> bool {
        self.orient() == Orient::Up
    }

    /// The up-to-four lattice neighbors sharing an edge with this cell.
    pub fn neighbors(&self) -> [Cell; 3] {
        let vertical = if self.is_up() {
            Cell::new(self.row + 1, self.col)
        } else {
            Cell::new(self.row - 1, self.col)
        };
        [
            Cell::new(self.row, self.col - 1),
            Cell::new(self.row, self.col + 1),
            vertical,
        ]
    }

    /// Centroid in six-fold coordinates `(3*col, 6*row + 4 or 2)` so all
    /// point-in-triangle tests stay in integers.
    fn centroid6(&self) -> (i64, i64) {
        let y = if self.is_up() { 6 * self.row as i64 + 4 } else { 6 * self.row as i64 + 2 };
        (3 * self.col as i64, y)
    }
}

/// Normalize a cell pair so weight lookups are order-independent.
fn pair(a: Cell, b: Cell) -> (Cell, Cell) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// An explicit region: a finite set of cells plus weights on lozenge
/// positions (adjacent cell pairs). Missing pairs weigh 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Region {
    cells: BTreeSet<Cell>,
    weights: BTreeMap<(Cell, Cell), Rat>,
}

impl Region {
    pub fn new() -> Self {
        Region::default()
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        Region {
            cells: cells.into_iter().collect(),
            weights: BTreeMap::new(),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.contains(cell)
    }

    pub fn insert(&mut self, cell: Cell) {
        self.cells.insert(cell);
    }

    pub fn remove(&mut self, cell: &Cell) {
        self.cells.remove(cell);
        self.weights
            .retain(|(a, b), _| a != cell && b != cell);
    }

    /// Set the weight of the lozenge position on an adjacent cell pair.
    pub fn set_weight(&mut self, a: Cell, b: Cell, w: Rat) {
        debug_assert!(self.cells.contains(&a) && self.cells.contains(&b));
        self.weights.insert(pair(a, b), w);
    }

    pub fn weight(&self, a: Cell, b: Cell) -> Rat {
        self.weights
            .get(&pair(a, b))
            .cloned()
            .unwrap_or_else(Rat::one)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&(Cell, Cell), &Rat)> {
        self.weights.iter()
    }

    /// Neighbors of `cell` that belong to the region.
    pub fn live_neighbors(&self, cell: &Cell) -> Vec<Cell> {
        cell.neighbors()
            .into_iter()
            .filter(|n| self.cells.contains(n))
            .collect()
    }

    pub fn up_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_up()).count()
    }

    pub fn down_count(&self) -> usize {
        self.len() - self.up_count()
    }

    /// Equal numbers of up and down cells; necessary for tileability.
    pub fn is_balanced(&self) -> bool {
        2 * self.up_count() == self.len()
    }

    pub fn row_range(&self) -> Option<(i32, i32)> {
        let min = self.cells.iter().map(|c| c.row).min()?;
        let max = self.cells.iter().map(|c| c.row).max()?;
        Some((min, max))
    }

    pub fn col_range(&self) -> Option<(i32, i32)> {
        let min = self.cells.iter().map(|c| c.col).min()?;
        let max = self.cells.iter().map(|c| c.col).max()?;
        Some((min, max))
    }
}

// ---------------------------------------------------------------------------
// Hole carving

/// A triangle to carve out, in doubled-x / row coordinates. `x2` values are
/// twice the geometric x so half-integer corners stay integral.
#[derive(Debug, Clone, Copy)]
struct Carve {
    /// Base endpoints on the hole line, doubled.
    x2l: i64,
    x2r: i64,
    /// Lattice level of the base.
    level: i64,
    /// Level of the apex (or of the top of a vertical cut side).
    apex_level: i64,
    /// Apex x, doubled. For a half triangle this equals `x2l`, producing a
    /// vertical western side.
    apex_x2: i64,
}

impl Carve {
    fn triangle(x2l: i64, x2r: i64, level: i64, apex_level: i64) -> Carve {
        Carve {
            x2l,
            x2r,
            level,
            apex_level,
            apex_x2: (x2l + x2r) / 2,
        }
    }

    fn half_up(x2a: i64, x2r: i64, level: i64) -> Carve {
        // vertical side at x2a, hypotenuse from the apex to (x2r, level)
        Carve {
            x2l: x2a,
            x2r,
            level,
            apex_level: level - (x2r - x2a),
            apex_x2: x2a,
        }
    }

    /// True when the cell centroid lies strictly inside the triangle.
    fn contains(&self, cell: &Cell) -> bool {
        let (px, py) = cell.centroid6();
        let a = (3 * self.x2l, 6 * self.level);
        let b = (3 * self.x2r, 6 * self.level);
        let c = (3 * self.apex_x2, 6 * self.apex_level);
        let cross = |p: (i64, i64), q: (i64, i64), r: (i64, i64)| -> i64 {
            (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
        };
        let d1 = cross(a, b, (px, py));
        let d2 = cross(b, c, (px, py));
        let d3 = cross(c, a, (px, py));
        (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0)
    }
}

fn carve_all(region: &mut Region, carves: &[Carve]) {
    let doomed: Vec<Cell> = region
        .cells()
        .filter(|cell| carves.iter().any(|t| t.contains(cell)))
        .cloned()
        .collect();
    for cell in doomed {
        region.remove(&cell);
    }
}

// ---------------------------------------------------------------------------
// Builders

/// Fill rows `lo..hi` (exclusive) with cells `cmin(r)..=cmax(r)`.
fn fill_rows(
    rows: std::ops::Range<i64>,
    cmin: impl Fn(i64) -> i64,
    cmax: impl Fn(i64) -> i64,
) -> Region {
    let mut region = Region::new();
    for r in rows {
        let (lo, hi) = (cmin(r), cmax(r));
        for c in lo..=hi {
            region.insert(Cell::new(r as i32, c as i32));
        }
    }
    region
}

/// Weight the vertical lozenge in each western zigzag notch by 1/2.
/// Bumps pair rows `(2t, 2t+1)`; only pairs with both cells present count.
fn weight_west_bumps(region: &mut Region, rows: impl Iterator<Item = i64>) {
    let half = frac(1, 2);
    for r in rows {
        debug_assert!(r % 2 == 0);
        let up = Cell::new(r as i32, 0);
        let down = Cell::new(r as i32 + 1, 0);
        if region.contains(&up) && region.contains(&down) {
            region.set_weight(up, down, half.clone());
        }
    }
}

/// Halved hexagon: staircase western side with `a` bumps, then a straight
/// stretch; the eastern boundary slants out for `b` rows and back for the
/// rest. Requires `0 <= a <= b`, `c >= 0`.
pub fn build_p(a: i64, b: i64, c: i64) -> Result<Region> {
    if a > b {
        return Err(LatticeError::ParameterOrder { a, b });
    }
    if a < 0 || c < 0 {
        return Err(LatticeError::BadParameters(format!(
            "negative parameter in P({a},{b},{c})"
        )));
    }
    Ok(fill_rows(
        0..a + b,
        |r| if r < 2 * a { 0 } else { r - 2 * a + 1 },
        |r| if r < b { 2 * c + r } else { 2 * c + 2 * b - r - 1 },
    ))
}

/// Weighted halved hexagon: every staircase lozenge carries weight 1/2.
pub fn build_pprime(a: i64, b: i64, c: i64) -> Result<Region> {
    let mut region = build_p(a, b, c)?;
    weight_west_bumps(&mut region, (0..a).map(|t| 2 * t));
    Ok(region)
}

/// Base holes for the trapezoid families: up-pointing triangles of sizes
/// `t_2, t_4, ...` sitting on the base, separated by gaps `t_1, t_3, ...`,
/// measured from the western end of the base at doubled-x `west2`.
fn base_holes(t: &HoleSeq, base_level: i64, west2: i64) -> Vec<Carve> {
    let mut carves = Vec::new();
    let mut x2 = west2;
    for (i, &v) in t.entries().iter().enumerate() {
        let w2 = 2 * v as i64;
        if i % 2 == 1 && w2 > 0 {
            carves.push(Carve::triangle(x2, x2 + w2, base_level, base_level - v as i64));
        }
        x2 += w2;
    }
    carves
}

/// Trapezoid with a full zigzag western side (`E(t)` bumps) and up-pointing
/// triangles removed from the base.
pub fn build_q(t: &HoleSeq) -> Result<Region> {
    if t.len() % 2 != 0 {
        return Err(LatticeError::OddLength { len: t.len() });
    }
    let (o, e) = (t.sum_odd(), t.sum_even());
    let mut region = fill_rows(0..2 * e, |_| 0, |r| 2 * o + r);
    carve_all(&mut region, &base_holes(t, 2 * e, 0));
    Ok(region)
}

/// `build_q` with the western vertical lozenges weighted 1/2.
pub fn build_qprime(t: &HoleSeq) -> Result<Region> {
    let mut region = build_q(t)?;
    let e = t.sum_even();
    weight_west_bumps(&mut region, (0..e).map(|t| 2 * t));
    Ok(region)
}

/// Trapezoid variant one row shorter, with a half bump at the southwestern
/// corner; the base starts half a unit west of the zigzag column.
pub fn build_k(t: &HoleSeq) -> Result<Region> {
    if t.len() % 2 != 0 {
        return Err(LatticeError::OddLength { len: t.len() });
    }
    let (o, e) = (t.sum_odd(), t.sum_even());
    let mut region = fill_rows(0..2 * e - 1, |_| 0, |r| 2 * o + r);
    carve_all(&mut region, &base_holes(t, 2 * e - 1, -1));
    Ok(region)
}

/// `build_k` with the western vertical lozenges weighted 1/2 (the corner
/// half bump holds no lozenge, so there are `E(t) - 1` of them).
pub fn build_kprime(t: &HoleSeq) -> Result<Region> {
    let mut region = build_k(t)?;
    let e = t.sum_even();
    weight_west_bumps(&mut region, (0..e - 1).map(|t| 2 * t));
    Ok(region)
}

// ---------------------------------------------------------------------------
// Defected halved hexagons H1..H8

/// Shape data for one H-family build. All heights are in lattice rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HShape {
    /// Rows above the hole line.
    pub upper: i64,
    /// Rows below the hole line.
    pub lower: i64,
    /// Length of the northeastern side (rows before the widest point).
    pub ne: i64,
    /// Height of the western half-triangle cut (twice its base width).
    pub half: i64,
    /// Doubled x of the half-triangle's vertical side: 0 when the hole line
    /// is at an even level, -1 when it sits on an odd level.
    pub anchor2: i64,
    /// Weight the zigzag lozenges above the hole line.
    pub weighted_above: bool,
    /// Weight the zigzag lozenges below the hole line (on the phase-shifted
    /// column when `flipped_west_below` is set).
    pub weighted_below: bool,
    /// Remove the westernmost boundary column below the hole line.
    pub drop_west_below: bool,
    /// Remove the westernmost boundary column above the hole line.
    pub drop_west_above: bool,
    /// Append the phase-shifted boundary column (westward of the zigzag)
    /// below the hole line.
    pub flipped_west_below: bool,
}


/// Frozen per-family shape parameters. Validated against the closed forms
/// by the calibration suite.
pub fn h_shape(m: u8, x: i64, y: i64, z: i64, a: &HoleSeq) -> Result<HShape> {
    let _ = x;
    let (o, e) = (a.sum_odd(), a.sum_even());
    let a1 = a.entries().first().copied().unwrap_or(0) as i64;
    let base = HShape {
        upper: 0,
        lower: 0,
        ne: 0,
        half: 0,
        anchor2: 0,
        weighted_above: false,
        weighted_below: false,
        drop_west_below: false,
        drop_west_above: false,
        flipped_west_below: false,
    };
    let s = match m {
        1 => HShape {
            upper: 2 * (y + o),
            lower: 2 * (z + e),
            ne: y + z + 2 * o,
            half: 2 * a1,
            anchor2: 0,
            weighted_above: false,
            weighted_below: false,
            ..base
        },
        2 => HShape {
            upper: (2 * (y + o) - 1).max(0),
            lower: (2 * (z + e) - 1).max(0),
            ne: y + z - 1 + 2 * o,
            half: 2 * a1,
            // an empty upper piece drops the hole line onto the (even)
            // northern edge
            anchor2: if y + o == 0 { 0 } else { -1 },
            weighted_above: false,
            weighted_below: false,
            ..base
        },
        3 => HShape {
            weighted_above: true,
            weighted_below: true,
            ..h_shape(1, x, y, z, a)?
        },
        4 => HShape {
            weighted_above: true,
            weighted_below: true,
            ..h_shape(2, x, y, z, a)?
        },
        5 => HShape {
            upper: 2 * (y + o) + 1,
            lower: 2 * (z + e),
            ne: y + z + 1 + 2 * o,
            half: 2 * (a1 + 1),
            anchor2: -1,
            weighted_above: true,
            drop_west_below: true,
            ..base
        },
        // families 6 and 7 are the fully weighted region with one side of
        // its western boundary column peeled off
        6 => HShape {
            drop_west_below: true,
            ..h_shape(3, x, y, z, a)?
        },
        7 => HShape {
            drop_west_above: true,
            ..h_shape(3, x, y, z, a)?
        },
        8 => HShape {
            upper: 2 * (y + o),
            lower: 2 * (z + e),
            ne: y + z + 2 * o,
            half: 2 * a1,
            anchor2: 0,
            weighted_below: true,
            flipped_west_below: true,
            ..base
        },
        _ => return Err(LatticeError::BadParameters(format!("no H{m} family"))),
    };
    Ok(s)
}

/// Build a defected halved hexagon from explicit shape data. Exposed so the
/// calibration harness can probe non-default shapes.
#[doc(hidden)]
pub fn build_h_from_shape(
    shape: HShape,
    x: i64,
    a: &HoleSeq,
    conv: &Conventions,
) -> Result<Region> {
    let e = a.sum_even();
    let height = shape.upper + shape.lower;
    if height <= 0 {
        return Ok(Region::new());
    }
    // the hole line itself may fall outside the region (carves then clip),
    // but the boundary profile must stay convex
    let (ne, se) = (shape.ne, height - shape.ne);
    if ne < 0 || se < 0 {
        return Err(LatticeError::BadParameters(format!(
            "degenerate shape {shape:?}"
        )));
    }
    let line = shape.upper;

    let width2 = 2 * (x + e);
    let mut region = fill_rows(
        0..height,
        |_| 0,
        |r| if r < ne { width2 + r } else { width2 + 2 * ne - r - 1 },
    );
    if shape.flipped_west_below {
        // the boundary column west of the zigzag, on the opposite phase
        for r in line.max(0)..height {
            region.insert(Cell::new(r as i32, -1));
        }
    }

    // Hole array: a half triangle hugging the western boundary, then full
    // triangles of sizes a_2, a_3, ... with bases abutting along the line,
    // alternately hanging below (even positions) and rising above (odd).
    let mut carves = Vec::new();
    let mut x2 = shape.anchor2;
    if shape.half > 0 {
        carves.push(Carve::half_up(x2, x2 + shape.half, line));
    }
    x2 += shape.half;
    for (i, &v) in a.entries().iter().enumerate().skip(1) {
        let w2 = 2 * v as i64;
        if w2 > 0 {
            if i % 2 == 1 {
                // even position (1-based): hangs below the line
                carves.push(Carve::triangle(x2, x2 + w2, line, line + v as i64));
            } else {
                carves.push(Carve::triangle(x2, x2 + w2, line, line - v as i64));
            }
        }
        x2 += w2;
    }
    if conv.hole_cut == HoleCut::TrimSliver && shape.half > 0 && shape.anchor2 == 0 {
        // On even hole lines the vertical cut passes through the centroids
        // of the boundary column, so the strict carve leaves a straddling
        // strip behind; drop it. On odd lines the cut sits strictly west of
        // that column and the carve is already complete.
        for r in (line - shape.half)..line {
            region.remove(&Cell::new(r as i32, 0));
        }
    }
    carve_all(&mut region, &carves);

    if shape.drop_west_below {
        for r in line.max(0)..height {
            region.remove(&Cell::new(r as i32, 0));
        }
    }
    if shape.drop_west_above {
        for r in 0..line.min(height) {
            region.remove(&Cell::new(r as i32, 0));
        }
    }

    if shape.weighted_above {
        weight_west_bumps(&mut region, (0..line - 1).filter(|r| r % 2 == 0));
    }
    if shape.weighted_below {
        if shape.flipped_west_below {
            // notch lozenges of the phase-shifted column pair an odd row
            // over the even row beneath it
            let half = frac(1, 2);
            for r in (line.max(0)..height - 1).filter(|r| r % 2 == 1) {
                let up = Cell::new(r as i32, -1);
                let down = Cell::new(r as i32 + 1, -1);
                if region.contains(&up) && region.contains(&down) {
                    region.set_weight(up, down, half.clone());
                }
            }
        } else {
            weight_west_bumps(&mut region, (line.max(0)..height - 1).filter(|r| r % 2 == 0));
        }
    }
    if shape.weighted_above && shape.weighted_below && line % 2 == 1 {
        // the straddling bump on odd-level hole lines (survives only when
        // the half triangle is absent)
        weight_west_bumps(&mut region, std::iter::once(line - 1));
    }
    Ok(region)
}

/// Defected halved hexagon family `m` (1..=8).
pub fn build_h(m: u8, x: i64, y: i64, z: i64, a: &HoleSeq) -> Result<Region> {
    build_h_with(m, x, y, z, a, &Conventions::default())
}

pub fn build_h_with(
    m: u8,
    x: i64,
    y: i64,
    z: i64,
    a: &HoleSeq,
    conv: &Conventions,
) -> Result<Region> {
    if x < 0 || y < 0 || z < 0 {
        return Err(LatticeError::BadParameters(format!(
            "negative corner parameter (x={x}, y={y}, z={z})"
        )));
    }
    let shape = h_shape(m, x, y, z, a)?;
    build_h_from_shape(shape, x, a, conv)
}

// ---------------------------------------------------------------------------
// Symmetric hexagon S

/// Symmetric hexagon with a mirror-symmetric triangle array on the vertical
/// axis at height `z` above the southern side. Hole sizes must be positive
/// and `x == z (mod 2)`.
pub fn build_s(x: i64, y: i64, z: i64, a: &HoleSeq) -> Result<Region> {
    if x < 0 || y < 0 || z < 0 {
        return Err(LatticeError::BadParameters(format!(
            "negative parameter (x={x}, y={y}, z={z})"
        )));
    }
    if (x - z) % 2 != 0 {
        return Err(LatticeError::ParityMismatch { x, z });
    }
    if a.is_empty() || a.entries().iter().any(|&v| v == 0) {
        return Err(LatticeError::BadParameters(
            "axis hole sizes must be positive".into(),
        ));
    }
    let (o, e) = (a.sum_odd(), a.sum_even());
    let a1 = a.entries()[0] as i64;
    let alpha = y + 2 * o - a1; // length of the two upper slant sides
    let beta = y + 2 * e; // length of the two lower slant sides
    let height = alpha + beta;
    let width2 = 2 * (x + 2 * e);

    let mut region = fill_rows(
        0..height,
        |r| if r < alpha { -r } else { r - 2 * alpha + 1 },
        |r| {
            if r < alpha {
                width2 + r
            } else {
                width2 + 2 * alpha - r - 1
            }
        },
    );

    // Mirror-symmetric hole array on the axis: an up triangle of size a_1
    // in the middle, flanked by pairs of size a_2 (down), a_3 (up), ...
    let line = height - z;
    let axis2 = width2 / 2; // = x + 2e, the doubled x of the symmetry axis
    let mut carves = vec![Carve::triangle(axis2 - a1, axis2 + a1, line, line - a1)];
    let mut right = axis2 + a1;
    for (i, &v) in a.entries().iter().enumerate().skip(1) {
        let w2 = 2 * v as i64;
        let apex = if i % 2 == 1 { line + v as i64 } else { line - v as i64 };
        carves.push(Carve::triangle(right, right + w2, line, apex));
        carves.push(Carve::triangle(
            2 * axis2 - right - w2,
            2 * axis2 - right,
            line,
            apex,
        ));
        right += w2;
    }
    // the array must actually sit inside the hexagon; a triangle sticking
    // past the boundary leaves no sensible region to count
    for carve in &carves {
        let lo = carve.level.min(carve.apex_level);
        let hi = carve.level.max(carve.apex_level);
        for r in lo..hi {
            for c2 in carve.x2l.min(carve.apex_x2)..=carve.x2r.max(carve.apex_x2) {
                for c in [c2 - 1, c2, c2 + 1] {
                    let cell = Cell::new(r as i32, c as i32);
                    if carve.contains(&cell) && !region.contains(&cell) {
                        return Err(LatticeError::BadParameters(format!(
                            "hole array does not fit at level {z} from the base"
                        )));
                    }
                }
            }
        }
    }
    carve_all(&mut region, &carves);
    Ok(region)
}

// ---------------------------------------------------------------------------
// Mirror factorization

/// Split a vertically symmetric region along its axis.
///
/// Returns `(left, right, k)` where the axis column (cells centered on the
/// axis) joins the right part with its internal vertical lozenges weighted
/// by 1/2, the left part keeps only the cells strictly west of the axis,
/// and `2k` is the number of axis cells. The weighted matching counts then
/// satisfy `count(region) = 2^k * count(left) * count(right)`.
pub fn ciucu_split(region: &Region) -> Result<(Region, Region, u32)> {
    let (cmin, cmax) = region
        .col_range()
        .ok_or_else(|| LatticeError::BadParameters("empty region".into()))?;
    if (cmin + cmax).rem_euclid(2) != 0 {
        return Err(LatticeError::NotSymmetric);
    }
    let axis = (cmin + cmax) / 2;
    // cells and weights must be mirror images
    for cell in region.cells() {
        let mirror = Cell::new(cell.row, 2 * axis - cell.col);
        if !region.contains(&mirror) {
            return Err(LatticeError::NotSymmetric);
        }
    }
    for ((a, b), w) in region.weights() {
        let ma = Cell::new(a.row, 2 * axis - a.col);
        let mb = Cell::new(b.row, 2 * axis - b.col);
        if &region.weight(ma, mb) != w {
            return Err(LatticeError::NotSymmetric);
        }
    }

    let axis_cells: Vec<Cell> = region.cells().filter(|c| c.col == axis).cloned().collect();
    if axis_cells.is_empty() || axis_cells.len() % 2 != 0 {
        return Err(LatticeError::AxisNotCutSet(format!(
            "{} axis cells",
            axis_cells.len()
        )));
    }

    // An axis cell keeps its eastern edges when its orientation agrees with
    // the alternating top-to-bottom labeling (first cell east, second west,
    // ...), and its western edges otherwise. Across a hole of odd height the
    // labeling phase flips, so a run of axis cells can change sides.
    let goes_right = |idx: usize, cell: &Cell| -> bool {
        let first_up = axis_cells[0].is_up();
        (idx % 2 == 0) == (cell.is_up() == first_up)
    };

    let mut left = Region::new();
    let mut right = Region::new();
    for cell in region.cells() {
        if cell.col < axis {
            left.insert(*cell);
        } else if cell.col > axis {
            right.insert(*cell);
        }
    }
    for (idx, cell) in axis_cells.iter().enumerate() {
        if goes_right(idx, cell) {
            right.insert(*cell);
        } else {
            left.insert(*cell);
        }
    }
    for ((a, b), w) in region.weights() {
        if left.contains(a) && left.contains(b) {
            left.set_weight(*a, *b, w.clone());
        } else if right.contains(a) && right.contains(b) {
            right.set_weight(*a, *b, w.clone());
        }
        // pairs severed by the cut disappear
    }
    // halve the vertical lozenges lying on the axis (an up cell over the
    // down cell below it; other consecutive pairs share no edge)
    for w in axis_cells.windows(2) {
        let (top, bot) = (w[0], w[1]);
        if bot.row == top.row + 1 && top.is_up() {
            for part in [&mut left, &mut right] {
                if part.contains(&top) && part.contains(&bot) {
                    let halved = part.weight(top, bot) * frac(1, 2);
                    part.set_weight(top, bot, halved);
                }
            }
        }
    }
    Ok((left, right, (axis_cells.len() / 2) as u32))
}

// ---------------------------------------------------------------------------
// Region splitting along a horizontal line

/// Try to split a region along the horizontal lattice line at `level`.
///
/// The cut keeps cells in rows `< level` on one side and the rest on the
/// other. The one-orientation condition along a horizontal border holds
/// automatically (only up cells touch it from above, only down cells from
/// below), so the split succeeds exactly when both parts are balanced; the
/// weighted matching count then factors as the product of the parts.
pub fn region_split_check(region: &Region, level: i32) -> Result<(Region, Region)> {
    let mut upper = Region::new();
    let mut lower = Region::new();
    for cell in region.cells() {
        if cell.row < level {
            upper.insert(*cell);
        } else {
            lower.insert(*cell);
        }
    }
    for ((a, b), w) in region.weights() {
        if a.row < level && b.row < level {
            upper.set_weight(*a, *b, w.clone());
        } else if a.row >= level && b.row >= level {
            lower.set_weight(*a, *b, w.clone());
        } else {
            return Err(LatticeError::Indivisible(
                "a weighted lozenge position crosses the cut".into(),
            ));
        }
    }
    if upper.is_empty() || lower.is_empty() {
        return Err(LatticeError::Indivisible("cut misses the region".into()));
    }
    if !upper.is_balanced() || !lower.is_balanced() {
        return Err(LatticeError::Indivisible(format!(
            "parts are unbalanced ({}u/{}d and {}u/{}d)",
            upper.up_count(),
            upper.down_count(),
            lower.up_count(),
            lower.down_count()
        )));
    }
    Ok((upper, lower))
}

// ---------------------------------------------------------------------------
// Dispatch

/// Build the region named by a [`RegionSpec`].
pub fn build_for_spec(spec: &RegionSpec) -> Result<Region> {
    build_for_spec_with(spec, &Conventions::default())
}

pub fn build_for_spec_with(spec: &RegionSpec, conv: &Conventions) -> Result<Region> {
    match (&spec.family, &spec.params) {
        (Family::P, Params::Abc { a, b, c }) => build_p(*a, *b, *c),
        (Family::Pprime, Params::Abc { a, b, c }) => build_pprime(*a, *b, *c),
        (Family::Q, Params::Seq { t }) => build_q(&HoleSeq::new(t.clone())),
        (Family::Qprime, Params::Seq { t }) => build_qprime(&HoleSeq::new(t.clone())),
        (Family::K, Params::Seq { t }) => build_k(&HoleSeq::new(t.clone())),
        (Family::Kprime, Params::Seq { t }) => build_kprime(&HoleSeq::new(t.clone())),
        (Family::H(m), Params::Xyza { x, y, z, a }) => {
            build_h_with(*m, *x, *y, *z, &HoleSeq::new(a.clone()), conv)
        }
        (Family::S, Params::Xyza { x, y, z, a }) => {
            build_s(*x, *y, *z, &HoleSeq::new(a.clone()))
        }
        (fam, params) => Err(LatticeError::BadParameters(format!(
            "parameters {params} do not fit family {fam}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_and_adjacency() {
        let up = Cell::new(0, 0);
        assert!(up.is_up());
        let down = Cell::new(1, 0);
        assert!(!down.is_up());
        assert!(up.neighbors().contains(&down));
        assert!(down.neighbors().contains(&up));
    }

    #[test]
    fn halved_hexagon_cells() {
        // P(1,1,1) is a six-cell ring
        let region = build_p(1, 1, 1).unwrap();
        assert_eq!(region.len(), 6);
        assert!(region.is_balanced());
        // P(1,2,1): ten cells, staircase then a straight stretch
        let region = build_p(1, 2, 1).unwrap();
        assert_eq!(region.len(), 10);
        assert!(region.is_balanced());
        assert!(!region.contains(&Cell::new(2, 0)));
    }

    #[test]
    fn trapezoid_regions_balance_after_holes() {
        for t in [
            HoleSeq::from([1, 1]),
            HoleSeq::from([0, 2]),
            HoleSeq::from([2, 1, 0, 2]),
            HoleSeq::from([0, 1, 1, 1]),
        ] {
            assert!(build_q(&t).unwrap().is_balanced(), "Q{t:?}");
            assert!(build_k(&t).unwrap().is_balanced(), "K{t:?}");
        }
    }

    #[test]
    fn weighted_regions_carry_half_lozenges() {
        let region = build_qprime(&HoleSeq::from([1, 1])).unwrap();
        assert_eq!(region.weights().count(), 1);
        let region = build_kprime(&HoleSeq::from([1, 2])).unwrap();
        assert_eq!(region.weights().count(), 1);
        assert_eq!(
            region.weight(Cell::new(0, 0), Cell::new(1, 0)),
            frac(1, 2)
        );
    }

    #[test]
    fn h_regions_balance_across_families() {
        let a = HoleSeq::from([1, 2]);
        for m in 1..=8u8 {
            for (x, y, z) in [(1, 1, 1), (2, 1, 2), (0, 2, 1)] {
                match build_h(m, x, y, z, &a) {
                    Ok(region) => assert!(
                        region.is_balanced(),
                        "H{m} x={x} y={y} z={z}: {}u/{}d",
                        region.up_count(),
                        region.down_count()
                    ),
                    Err(e) => panic!("H{m} x={x} y={y} z={z}: {e}"),
                }
            }
        }
    }

    #[test]
    fn h1_side_lengths_match_parameters() {
        let (x, y, z) = (2, 1, 2);
        let a = HoleSeq::from([1, 2]);
        let (o, e) = (a.sum_odd(), a.sum_even());
        let region = build_h(1, x, y, z, &a).unwrap();
        let (rmin, rmax) = region.row_range().unwrap();
        // western zigzag spans the full height: y+z+E+O bumps
        assert_eq!((rmax - rmin + 1) as i64, 2 * (y + z + e + o));
        // top row holds 2(x+E)+1 cells, bottom row 2(x+O)+1
        let row_len = |r: i32| region.cells().filter(|c| c.row == r).count() as i64;
        assert_eq!(row_len(rmin), 2 * (x + e) + 1);
        assert_eq!(row_len(rmax), 2 * (x + o) + 1);
        // easternmost cell sits where the northeastern side ends
        let ne = y + z + 2 * o;
        let (_, cmax) = region.col_range().unwrap();
        assert_eq!(cmax as i64, 2 * (x + e) + ne - 1);
        // all rows reach the zigzag column
        for r in rmin..=rmax {
            assert!(region.contains(&Cell::new(r, 0)), "row {r} misses col 0");
        }
    }

    #[test]
    fn symmetric_hexagon_is_mirror_symmetric() {
        let a = HoleSeq::from([2, 1]);
        let region = build_s(0, 2, 2, &a).unwrap();
        let (cmin, cmax) = region.col_range().unwrap();
        let axis = (cmin + cmax) / 2;
        for cell in region.cells() {
            assert!(region.contains(&Cell::new(cell.row, 2 * axis - cell.col)));
        }
        assert!(build_s(1, 1, 0, &HoleSeq::from([1])).is_err());
    }

    #[test]
    fn ciucu_split_counts_axis_cells() {
        let a = HoleSeq::from([2]);
        let (x, y, z) = (0, 1, 2);
        let region = build_s(x, y, z, &a).unwrap();
        let (left, right, k) = ciucu_split(&region).unwrap();
        assert_eq!(k as i64, y); // y + a_2 + ... with a single entry
        assert_eq!(left.len() + right.len(), region.len());
        // right kept the axis column and its halved verticals
        assert!(right.weights().count() > 0);
        assert_eq!(left.weights().count(), 0);
    }

    #[test]
    fn split_check_rejects_unbalanced_cuts() {
        let region = build_p(1, 1, 1).unwrap();
        // cutting the hexagonal ring anywhere leaves unbalanced rows
        assert!(region_split_check(&region, 1).is_err());
    }
}
