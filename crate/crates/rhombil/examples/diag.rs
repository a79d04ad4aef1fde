//! Dev scratch: print formula vs engine for one family across a small slice.

use rhombil::combinat::HoleSeq;
use rhombil::convention::*;
use rhombil::engine::count_tilings;
use rhombil::formulas::formula_h_with;
use rhombil::lattice::build_h_with;
use rhombil::rat::display;

fn main() {
    let m: u8 = std::env::args().nth(1).expect("family").parse().unwrap();
    let mut conv = Conventions::default();
    conv.odd_seq = OddSeqRule::PrependZero;
    conv.hole_cut = HoleCut::TrimSliver;

    for (x, y, z) in [(0, 1, 0), (0, 1, 1), (1, 1, 1), (0, 2, 1), (1, 2, 1), (2, 1, 1)] {
        for (a1, a2) in [(0u64, 0u64), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)] {
            let a = HoleSeq::from([a1, a2]);
            let f = formula_h_with(m, x, y, z, &a, &conv)
                .map(|v| display(&v))
                .unwrap_or_else(|e| format!("err {e}"));
            let r = build_h_with(m, x, y, z, &a, &conv)
                .map(|rg| {
                    count_tilings(&rg)
                        .map(|v| display(&v))
                        .unwrap_or_else(|e| format!("err {e}"))
                })
                .unwrap_or_else(|e| format!("err {e}"));
            let flag = if f == r { " " } else { "*" };
            println!("{flag} H{m}({x},{y},{z})[{a1},{a2}]: formula {f:>10} engine {r:>10}");
        }
    }
}
