//! Dev scratch: diff ground-truth mixed-boundary regions (from mirror
//! splits) against the direct builders, as cell sets.

use rhombil::combinat::HoleSeq;
use rhombil::convention::*;
use rhombil::engine::count_tilings;
use rhombil::formulas::formula_h_with;
use rhombil::lattice::{build_h_with, build_s, ciucu_split, Cell, Region};
use rhombil::rat::display;

fn normalize(region: &Region) -> Region {
    let (rmin, _) = region.row_range().unwrap();
    let (cmin, _) = region.col_range().unwrap();
    let cshift = if (rmin + cmin) % 2 == 0 { cmin } else { cmin - 1 };
    let mut out = Region::new();
    for c in region.cells() {
        out.insert(Cell::new(c.row - rmin, c.col - cshift));
    }
    for ((a, b), w) in region.weights() {
        out.set_weight(
            Cell::new(a.row - rmin, a.col - cshift),
            Cell::new(b.row - rmin, b.col - cshift),
            w.clone(),
        );
    }
    out
}

fn mirror(region: &Region) -> Region {
    let (cmin, cmax) = region.col_range().unwrap();
    let flip = cmin + cmax;
    let shift = if flip % 2 == 0 { 0 } else { 1 };
    let mut out = Region::new();
    for c in region.cells() {
        out.insert(Cell::new(c.row, flip - c.col + shift));
    }
    for ((a, b), w) in region.weights() {
        out.set_weight(
            Cell::new(a.row, flip - a.col + shift),
            Cell::new(b.row, flip - b.col + shift),
            w.clone(),
        );
    }
    out
}

fn diff(label: &str, truth: &Region, mine: &Region) {
    let t: std::collections::BTreeSet<Cell> = truth.cells().copied().collect();
    let m: std::collections::BTreeSet<Cell> = mine.cells().copied().collect();
    let extra: Vec<&Cell> = m.difference(&t).collect();
    let missing: Vec<&Cell> = t.difference(&m).collect();
    let tw: Vec<String> = truth
        .weights()
        .map(|((a, b), _)| format!("({},{})+({},{})", a.row, a.col, b.row, b.col))
        .collect();
    let mw: Vec<String> = mine
        .weights()
        .map(|((a, b), _)| format!("({},{})+({},{})", a.row, a.col, b.row, b.col))
        .collect();
    println!(
        "{label}: mine-extra {extra:?} mine-missing {missing:?}\n    true-weights {tw:?}\n    mine-weights {mw:?}"
    );
}

fn main() {
    let mut conv = Conventions::default();
    conv.odd_seq = OddSeqRule::PrependZero;
    conv.hole_cut = HoleCut::TrimSliver;

    // odd-a1 hexagons across a spread of parameters
    let mut cases = Vec::new();
    for y in 1..=3i64 {
        for a1 in [1u64, 3] {
            for rest in [vec![], vec![1], vec![1, 1], vec![2, 1]] {
                let mut entries = vec![a1];
                entries.extend(&rest);
                let a = HoleSeq::new(entries);
                let e = a.sum_even();
                for z in (0..=(2 * y + 2 * e + 1)).step_by(2) {
                    cases.push((0i64, y, z, a.clone()));
                }
                for z in (1..=(2 * y + 2 * e)).step_by(2) {
                    cases.push((1i64, y, z, a.clone()));
                    cases.push((3i64, y, z, a.clone()));
                }
            }
        }
    }

    for (x, y, z, a) in cases {
        let Ok(s) = build_s(x, y, z, &a) else { continue };
        let Ok((left, right, _)) = ciucu_split(&s) else {
            continue;
        };
        if right.is_empty() || left.is_empty() {
            continue;
        }
        let e = a.sum_even();
        let a1 = a.entries()[0] as i64;
        let sub: Vec<u64> = a.entries()[1..].to_vec();
        let mk = |first: i64| {
            let mut v = vec![first as u64];
            v.extend(&sub);
            HoleSeq::new(v)
        };
        let h = if z % 2 == 0 { z / 2 } else { (z - 1) / 2 };
        let (sx5, sy5, sz5, sx8, sy8, sz8) = if x % 2 == 0 {
            (x / 2, y - h + e, h - e, x / 2, y - h + e, h - e)
        } else {
            ((x + 1) / 2, y - h + e - 1, h - e, (x - 1) / 2, y - h + e, h - e + 1)
        };
        if sy5 < 0 || sz5 < 0 || sz8 < 0 {
            continue;
        }
        let truth5 = normalize(&right);
        let truth8 = normalize(&mirror(&left));
        let lab = format!("S({x},{y},{z}){:?}", a.entries());
        for (m, sx, sy, sz, arg, truth) in [
            (5u8, sx5, sy5, sz5, mk((a1 - 1) / 2), truth5),
            (8, sx8, sy8, sz8, mk((a1 + 1) / 2), truth8),
        ] {
            let f = formula_h_with(m, sx, sy, sz, &arg, &conv)
                .map(|v| display(&v))
                .unwrap_or_else(|e| format!("err {e}"));
            let tc = display(&count_tilings(&truth).unwrap());
            if f != tc {
                println!("!! {lab} H{m}({sx},{sy},{sz}){:?}: formula {f} vs split {tc}", arg.entries());
                continue;
            }
            match build_h_with(m, sx, sy, sz, &arg, &conv) {
                Ok(mine) => {
                    let mc = display(&count_tilings(&mine).unwrap());
                    if mc != tc || mine != truth {
                        print!("{lab} H{m}({sx},{sy},{sz}){:?} [split {tc} mine {mc}] ", arg.entries());
                        diff("", &truth, &mine);
                    }
                }
                Err(e) => println!("{lab} H{m}: build err {e}"),
            }
        }
    }
}
