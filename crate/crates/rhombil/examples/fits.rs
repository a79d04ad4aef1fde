//! Dev scratch: extract ground-truth mixed-boundary regions from the mirror
//! split of a symmetric hexagon and compare against the direct builders.

use rhombil::combinat::HoleSeq;
use rhombil::convention::*;
use rhombil::engine::count_tilings;
use rhombil::formulas::formula_h_with;
use rhombil::lattice::{build_h_with, build_s, ciucu_split, Cell, Region};
use rhombil::rat::display;
use rhombil::render::{render_region, RenderFormat};

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
    let (_, cmax) = region.col_range().unwrap();
    let mut out = Region::new();
    for c in region.cells() {
        out.insert(Cell::new(c.row, cmax - c.col + (cmax % 2)));
    }
    for ((a, b), w) in region.weights() {
        out.set_weight(
            Cell::new(a.row, cmax - a.col + (cmax % 2)),
            Cell::new(b.row, cmax - b.col + (cmax % 2)),
            w.clone(),
        );
    }
    out
}

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|v| v.parse().unwrap()).collect();
    let (x, y, z, a1) = (args[0], args[1], args[2], args[3] as u64);
    let rest: Vec<u64> = args[4..].iter().map(|&v| v as u64).collect();
    let mut entries = vec![a1];
    entries.extend(&rest);
    let a = HoleSeq::new(entries);

    let mut conv = Conventions::default();
    conv.odd_seq = OddSeqRule::PrependZero;
    conv.hole_cut = HoleCut::TrimSliver;

    let s = build_s(x, y, z, &a).unwrap();
    let (left, right, k) = ciucu_split(&s).unwrap();
    println!(
        "S({x},{y},{z}){:?}: count {}  k={k}",
        a.entries(),
        display(&count_tilings(&s).unwrap())
    );

    let e = a.sum_even();
    let sub: Vec<u64> = a.entries()[1..].to_vec();
    let mk = |first: i64| {
        let mut v = vec![first as u64];
        v.extend(&sub);
        HoleSeq::new(v)
    };
    // case parameters (x even assumed)
    let (sx, sy, sz) = (x / 2 + e, y - z / 2 + e, z / 2 - e);
    let (m_plus, m_minus, a_plus, a_minus) = if a1 % 2 == 0 {
        (2u8, 3u8, mk(a1 as i64 / 2), mk(a1 as i64 / 2))
    } else {
        (5, 8, mk((a1 as i64 - 1) / 2), mk((a1 as i64 + 1) / 2))
    };

    let gplus = normalize(&mirror(&left));
    let gminus = normalize(&right);
    println!(
        "G+ count {}   formula H{m_plus}({sx},{sy},{sz}){:?} = {}",
        display(&count_tilings(&gplus).unwrap()),
        a_plus.entries(),
        formula_h_with(m_plus, sx, sy, sz, &a_plus, &conv)
            .map(|v| display(&v))
            .unwrap_or_else(|e| format!("err {e}"))
    );
    println!("{}", render_region(&gplus, RenderFormat::Ascii));
    if let Ok(mine) = build_h_with(m_plus, sx, sy, sz, &a_plus, &conv) {
        println!(
            "my H{m_plus} count {}:\n{}",
            display(&count_tilings(&mine).unwrap()),
            render_region(&mine, RenderFormat::Ascii)
        );
    }
    println!(
        "G- count {}   formula H{m_minus}({sx},{sy},{sz}){:?} = {}",
        display(&count_tilings(&gminus).unwrap()),
        a_minus.entries(),
        formula_h_with(m_minus, sx, sy, sz, &a_minus, &conv)
            .map(|v| display(&v))
            .unwrap_or_else(|e| format!("err {e}"))
    );
    println!("{}", render_region(&gminus, RenderFormat::Ascii));
    if let Ok(mine) = build_h_with(m_minus, sx, sy, sz, &a_minus, &conv) {
        println!(
            "my H{m_minus} count {}:\n{}",
            display(&count_tilings(&mine).unwrap()),
            render_region(&mine, RenderFormat::Ascii)
        );
    }
}
