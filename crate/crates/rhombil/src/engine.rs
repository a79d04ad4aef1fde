//! Exact weighted perfect-matching counter over a region's dual graph,
//! independent of every closed-form evaluator.
//!
//! The primary counter is a frontier (broken-profile) sweep: cells are
//! ordered along one axis and the state tracks which cells near the sweep
//! line are already matched. Cost is exponential only in the cross-section.
//! A brute-force recursive counter doubles as a second oracle on small
//! regions.

use crate::lattice::{Cell, Orient, Region};
use crate::rat::Rat;
use num_traits::{One, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("frontier state count exceeded {cap} (cross-section width {width})")]
    ResourceLimit { cap: usize, width: usize },
    #[error("region has {cells} cells, above the brute-force cap of {cap}")]
    TooLarge { cells: usize, cap: usize },
    #[error("cell ({row},{col}) is not in the region")]
    MissingCell { row: i32, col: i32 },
    #[error("corner cells must alternate orientation classes")]
    ClassViolation,
}

pub type Result<T> = std::result::Result<T, EngineError>;

/// Default cap on simultaneous frontier states (`RHOMBIL_STATE_CAP`
/// overrides it).
pub const DEFAULT_STATE_CAP: usize = 1 << 24;

/// Cell cap for the brute-force reference counter.
pub const REFERENCE_CELL_CAP: usize = 28;

fn state_cap() -> usize {
    std::env::var("RHOMBIL_STATE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_STATE_CAP)
}

/// The region's dual graph: one vertex per cell, one weighted edge per
/// adjacent pair. Bipartite with the orientation classes as parts.
#[derive(Debug, Clone)]
pub struct DualGraph {
    verts: Vec<Cell>,
    adj: Vec<Vec<(usize, Rat)>>,
}

impl DualGraph {
    pub fn from_region(region: &Region) -> Self {
        Self::from_region_ordered(region, region.cells().cloned().collect())
    }

    fn from_region_ordered(region: &Region, verts: Vec<Cell>) -> Self {
        let index: HashMap<Cell, usize> =
            verts.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut adj = vec![Vec::new(); verts.len()];
        for (i, cell) in verts.iter().enumerate() {
            for n in region.live_neighbors(cell) {
                let j = index[&n];
                if j > i {
                    let w = region.weight(*cell, n);
                    adj[i].push((j, w.clone()));
                    adj[j].push((i, w));
                }
            }
        }
        DualGraph { verts, adj }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.verts
    }
}

/// Maximum index gap any edge spans under the given cell ordering; the
/// frontier window must cover it.
fn max_span(graph: &DualGraph) -> usize {
    let mut span = 0;
    for (i, edges) in graph.adj.iter().enumerate() {
        for (j, _) in edges {
            if *j > i {
                span = span.max(j - i);
            }
        }
    }
    span
}

/// Sweep state: weights accumulated per profile of already-matched cells
/// inside the window ahead of the sweep line.
struct Frontier {
    states: HashMap<u64, Rat>,
    cap: usize,
    width: usize,
}

impl Frontier {
    fn run(graph: &DualGraph, cap: usize) -> Result<Rat> {
        let width = max_span(graph);
        if width >= 64 {
            return Err(EngineError::ResourceLimit { cap, width });
        }
        let mut frontier = Frontier {
            states: HashMap::from([(0u64, Rat::one())]),
            cap,
            width,
        };
        for i in 0..graph.len() {
            frontier.step(graph, i)?;
        }
        Ok(frontier
            .states
            .remove(&0)
            .unwrap_or_else(Rat::zero))
    }

    /// Process cell `i`: either it was matched by an earlier cell (its bit
    /// is set) or it must pair with an unmatched later neighbor now.
    fn step(&mut self, graph: &DualGraph, i: usize) -> Result<()> {
        let mut next: HashMap<u64, Rat> = HashMap::with_capacity(self.states.len());
        for (mask, weight) in self.states.drain() {
            if mask & 1 != 0 {
                let entry = next.entry(mask >> 1).or_insert_with(Rat::zero);
                *entry += weight;
                continue;
            }
            for (j, w) in &graph.adj[i] {
                if *j < i {
                    continue;
                }
                let offset = j - i;
                debug_assert!(offset <= self.width);
                if mask & (1 << offset) != 0 {
                    continue; // neighbor already claimed
                }
                if w.is_zero() {
                    continue;
                }
                let entry = next
                    .entry((mask | (1 << offset)) >> 1)
                    .or_insert_with(Rat::zero);
                *entry += weight.clone() * w;
            }
        }
        if next.len() > self.cap {
            return Err(EngineError::ResourceLimit {
                cap: self.cap,
                width: self.width,
            });
        }
        self.states = next;
        Ok(())
    }
}

/// Exact weighted count of lozenge tilings (perfect matchings of the dual
/// graph). Zero when no tiling exists; one for the empty region.
pub fn count_tilings(region: &Region) -> Result<Rat> {
    count_tilings_capped(region, state_cap())
}

pub fn count_tilings_capped(region: &Region, cap: usize) -> Result<Rat> {
    if region.up_count() != region.down_count() {
        return Ok(Rat::zero());
    }
    if region.is_empty() {
        return Ok(Rat::one());
    }
    // Sweep along whichever axis gives the narrower window; ties go to the
    // column sweep.
    let mut by_col: Vec<Cell> = region.cells().cloned().collect();
    by_col.sort_by_key(|c| (c.col, c.row));
    let col_graph = DualGraph::from_region_ordered(region, by_col);
    let mut by_row: Vec<Cell> = region.cells().cloned().collect();
    by_row.sort_by_key(|c| (c.row, c.col));
    let row_graph = DualGraph::from_region_ordered(region, by_row);
    let graph = if max_span(&col_graph) <= max_span(&row_graph) {
        col_graph
    } else {
        row_graph
    };
    Frontier::run(&graph, cap)
}

/// Brute-force second oracle: recursive enumeration over all matchings.
/// Restricted to small regions.
pub fn count_tilings_reference(region: &Region) -> Result<Rat> {
    if region.len() > REFERENCE_CELL_CAP {
        return Err(EngineError::TooLarge {
            cells: region.len(),
            cap: REFERENCE_CELL_CAP,
        });
    }
    if region.up_count() != region.down_count() {
        return Ok(Rat::zero());
    }
    let graph = DualGraph::from_region(region);
    let mut matched = vec![false; graph.len()];
    fn recurse(graph: &DualGraph, matched: &mut [bool]) -> Rat {
        let Some(i) = matched.iter().position(|m| !m) else {
            return Rat::one();
        };
        matched[i] = true;
        let mut total = Rat::zero();
        for (j, w) in &graph.adj[i] {
            if !matched[*j] {
                matched[*j] = true;
                total += w * recurse(graph, matched);
                matched[*j] = false;
            }
        }
        matched[i] = false;
        total
    }
    Ok(recurse(&graph, &mut matched))
}

/// Remove forced lozenges until none remain.
///
/// A cell with a single live neighbor can only be covered one way; the pair
/// is peeled off and its weight multiplies the returned factor. A cell with
/// no live neighbor makes the region untileable: the factor is zero.
pub fn reduce_forced(region: &Region) -> (Region, Rat) {
    let mut region = region.clone();
    let mut factor = Rat::one();
    loop {
        let mut forced: Option<(Cell, Vec<Cell>)> = None;
        for cell in region.cells() {
            let nbrs = region.live_neighbors(cell);
            if nbrs.len() <= 1 {
                forced = Some((*cell, nbrs));
                break;
            }
        }
        match forced {
            None => return (region, factor),
            Some((_, nbrs)) if nbrs.is_empty() => return (region, Rat::zero()),
            Some((cell, nbrs)) => {
                factor *= region.weight(cell, nbrs[0]);
                region.remove(&cell);
                region.remove(&nbrs[0]);
            }
        }
    }
}

/// Four boundary cells chosen for a condensation step: `u`, `w` in one
/// orientation class and `v`, `s` in the other, in cyclic order on the
/// outer face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KuoQuad {
    pub u: Cell,
    pub v: Cell,
    pub w: Cell,
    pub s: Cell,
}

impl KuoQuad {
    pub fn all(&self) -> [Cell; 4] {
        [self.u, self.v, self.w, self.s]
    }
}

/// Delete a set of cells, verifying they exist and (for four-cell
/// deletions) that they alternate orientation classes.
pub fn kuo_corner_delete(region: &Region, cells: &[Cell]) -> Result<Region> {
    for cell in cells {
        if !region.contains(cell) {
            return Err(EngineError::MissingCell {
                row: cell.row,
                col: cell.col,
            });
        }
    }
    let ups = cells.iter().filter(|c| c.orient() == Orient::Up).count();
    if ups * 2 != cells.len() {
        return Err(EngineError::ClassViolation);
    }
    let mut out = region.clone();
    for cell in cells {
        out.remove(cell);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn two_cell_region(weight: Option<Rat>) -> Region {
        let up = Cell::new(0, 0);
        let down = Cell::new(1, 0);
        let mut region = Region::from_cells([up, down]);
        if let Some(w) = weight {
            region.set_weight(up, down, w);
        }
        region
    }

    #[test]
    fn empty_region_has_one_tiling() {
        assert_eq!(count_tilings(&Region::new()).unwrap(), int(1));
    }

    #[test]
    fn single_lozenge_counts_its_weight() {
        assert_eq!(count_tilings(&two_cell_region(None)).unwrap(), int(1));
        assert_eq!(
            count_tilings(&two_cell_region(Some(frac(1, 2)))).unwrap(),
            frac(1, 2)
        );
    }

    #[test]
    fn unbalanced_region_counts_zero() {
        let region = Region::from_cells([Cell::new(0, 0), Cell::new(0, 2)]);
        assert_eq!(count_tilings(&region).unwrap(), int(0));
        assert_eq!(count_tilings_reference(&region).unwrap(), int(0));
    }

    #[test]
    fn hexagon_ring_has_two_tilings() {
        let region = crate::lattice::build_p(1, 1, 1).unwrap();
        assert_eq!(count_tilings(&region).unwrap(), int(2));
        assert_eq!(count_tilings_reference(&region).unwrap(), int(2));
    }

    #[test]
    fn forced_chain_reduces_completely() {
        // a strip of four cells: up-down-up-down along one row
        let cells: Vec<Cell> = (0..4).map(|c| Cell::new(0, c)).collect();
        let region = Region::from_cells(cells);
        let (rest, factor) = reduce_forced(&region);
        assert!(rest.is_empty());
        assert_eq!(factor, int(1));
    }

    #[test]
    fn isolated_cell_is_infeasible() {
        let region = Region::from_cells([Cell::new(0, 0)]);
        let (_, factor) = reduce_forced(&region);
        assert_eq!(factor, int(0));
    }

    #[test]
    fn corner_delete_validates_classes() {
        let region = crate::lattice::build_p(2, 2, 1).unwrap();
        let bad = kuo_corner_delete(&region, &[Cell::new(0, 0), Cell::new(0, 2)]);
        assert!(matches!(bad, Err(EngineError::ClassViolation)));
        let missing = kuo_corner_delete(&region, &[Cell::new(9, 9), Cell::new(0, 1)]);
        assert!(matches!(missing, Err(EngineError::MissingCell { .. })));
    }

    #[test]
    fn weight_scaling_is_affine_in_one_edge() {
        // count(q) = A + qB when one lozenge position has weight q
        let region = crate::lattice::build_p(2, 2, 1).unwrap();
        let up = Cell::new(0, 0);
        let down = Cell::new(1, 0);
        let with = |q: Rat| {
            let mut r = region.clone();
            r.set_weight(up, down, q);
            count_tilings(&r).unwrap()
        };
        let at0 = with(int(0));
        let at1 = with(int(1));
        let athalf = with(frac(1, 2));
        assert_eq!(athalf, (&at0 + &at1) / int(2));
    }
}
