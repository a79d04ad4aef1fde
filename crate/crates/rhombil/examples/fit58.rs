//! Dev scratch: derive the mixed-boundary families from their fully
//! calibrated parents by boundary-strip removal, searching over the strip
//! interpretations.

use rhombil::combinat::HoleSeq;
use rhombil::convention::*;
use rhombil::engine::count_tilings;
use rhombil::formulas::formula_h_with;
use rhombil::lattice::{build_h_with, h_shape, Cell, Region};
use rhombil::rat::display;

#[derive(Clone, Copy, Debug, PartialEq)]
enum Horiz {
    Edge,    // cells with an edge on the side
    FullRow, // the whole first/last row
    None,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Slant {
    Edge,   // cells with an edge on the slant side
    Double, // those plus their row neighbors (full unit-width strip)
    None,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum West {
    Both, // the whole boundary column in the range
    Ups,
    Downs,
    None,
}

fn bottom_row(region: &Region) -> i32 {
    region.row_range().map(|(_, hi)| hi).unwrap_or(0)
}
fn top_row(region: &Region) -> i32 {
    region.row_range().map(|(lo, _)| lo).unwrap_or(0)
}

fn rightmost(region: &Region, row: i32) -> Option<Cell> {
    region.cells().filter(|c| c.row == row).max_by_key(|c| c.col).copied()
}

fn remove_south(region: &mut Region, how: Horiz) {
    let r = bottom_row(region);
    let cells: Vec<Cell> = region
        .cells()
        .filter(|c| c.row == r && (how == Horiz::FullRow || c.is_up()))
        .copied()
        .collect();
    if how != Horiz::None {
        for c in cells {
            region.remove(&c);
        }
    }
}

fn remove_north(region: &mut Region, how: Horiz) {
    let r = top_row(region);
    let cells: Vec<Cell> = region
        .cells()
        .filter(|c| c.row == r && (how == Horiz::FullRow || !c.is_up()))
        .copied()
        .collect();
    if how != Horiz::None {
        for c in cells {
            region.remove(&c);
        }
    }
}

/// Remove along the southeastern side: the rightmost (down) cell of each
/// row from `from_row` to the bottom, optionally with its up neighbor.
fn remove_se(region: &mut Region, from_row: i32, how: Slant) {
    if how == Slant::None {
        return;
    }
    let bot = bottom_row(region);
    for r in from_row..=bot {
        if let Some(c) = rightmost(region, r) {
            region.remove(&c);
            if how == Slant::Double {
                if let Some(c2) = rightmost(region, r) {
                    if c2.col == c.col - 1 {
                        region.remove(&c2);
                    }
                }
            }
        }
    }
}

fn remove_west(region: &mut Region, rows: impl Iterator<Item = i64>, how: West) {
    if how == West::None {
        return;
    }
    for r in rows {
        let cell = Cell::new(r as i32, 0);
        let keep = match how {
            West::Both => false,
            West::Ups => !cell.is_up(),
            West::Downs => cell.is_up(),
            West::None => true,
        };
        if !keep && region.contains(&cell) {
            region.remove(&cell);
        }
    }
}

fn main() {
    let m: u8 = std::env::args().nth(1).expect("family").parse().unwrap();
    let mut conv = Conventions::default();
    conv.odd_seq = OddSeqRule::PrependZero;
    conv.hole_cut = HoleCut::TrimSliver;

    let mut points = Vec::new();
    for x in 0..=2i64 {
        for y in 0..=2i64 {
            for z in 0..=2i64 {
                for a1 in 0..=2u64 {
                    for a2 in 0..=2u64 {
                        if x + y + z + a1 as i64 + a2 as i64 <= 6 {
                            points.push((x, y, z, HoleSeq::from([a1, a2])));
                        }
                    }
                }
            }
        }
    }
    eprintln!("{} points", points.len());

    // parent builder per target family
    let parent = |x: i64, y: i64, z: i64, a: &HoleSeq| -> Option<(Region, i64, i64)> {
        let (pm, px, py, pz, pa) = match m {
            5 => {
                let mut e = a.entries().to_vec();
                e[0] += 1;
                (4u8, x, y, z + 1, HoleSeq::new(e))
            }
            6 => (3, x, y, z, a.clone()),
            7 => (3, x, y, z, a.clone()),
            8 => (4, x, y, z, a.clone()),
            _ => panic!("family must be 5..8"),
        };
        let shape = h_shape(pm, px, py, pz, &pa).ok()?;
        let region = build_h_with(pm, px, py, pz, &pa, &conv).ok()?;
        Some((region, shape.upper, shape.upper + shape.lower))
    };

    let south_opts = [Horiz::Edge, Horiz::FullRow, Horiz::None];
    let se_opts = [Slant::Edge, Slant::Double, Slant::None];
    let west_opts = [West::Both, West::Ups, West::Downs, West::None];
    let range_opts = [-1i64, 0, 1];

    for s_opt in south_opts {
        for se_opt in se_opts {
            for w_opt in west_opts {
                for rd in range_opts {
                    let mut ok = 0;
                    let mut bad = 0;
                    let mut skip = 0;
                    for (x, y, z, a) in &points {
                        let Ok(want) = formula_h_with(m, *x, *y, *z, a, &conv) else {
                            skip += 1;
                            continue;
                        };
                        let Some((mut region, line, height)) = parent(*x, *y, *z, a) else {
                            skip += 1;
                            continue;
                        };
                        match m {
                            5 | 6 => {
                                remove_south(&mut region, s_opt);
                                if m == 5 {
                                    let from = region
                                        .row_range()
                                        .map(|(lo, _)| lo)
                                        .unwrap_or(0)
                                        .max({
                                            // southeastern side starts at the widest row
                                            let shape_ne = {
                                                let mut e = a.entries().to_vec();
                                                e[0] += 1;
                                                h_shape(4, *x, *y, *z + 1, &HoleSeq::new(e))
                                                    .map(|s| s.ne)
                                                    .unwrap_or(0)
                                            };
                                            shape_ne as i32
                                        });
                                    remove_se(&mut region, from, se_opt);
                                }
                                remove_west(&mut region, (line + rd)..height, w_opt);
                            }
                            7 | 8 => {
                                remove_north(&mut region, s_opt);
                                remove_west(&mut region, 0..(line + rd), w_opt);
                            }
                            _ => unreachable!(),
                        }
                        match count_tilings(&region) {
                            Ok(c) if c == want => ok += 1,
                            Ok(_) => bad += 1,
                            Err(_) => skip += 1,
                        }
                        if bad > 0 {
                            break;
                        }
                    }
                    if bad == 0 && ok > 80 {
                        println!(
                            "H{m}: south/north={s_opt:?} se={se_opt:?} west={w_opt:?} range{rd:+}: ok={ok} skip={skip}"
                        );
                    }
                }
            }
        }
    }
    let _ = display;
}
