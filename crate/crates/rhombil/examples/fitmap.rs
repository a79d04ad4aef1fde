//! Dev scratch: for each symmetric-hexagon split, search which family and
//! parameters reproduce each piece's count, to pin the composition map.

use rhombil::combinat::HoleSeq;
use rhombil::convention::*;
use rhombil::engine::count_tilings;
use rhombil::formulas::formula_h_with;
use rhombil::lattice::{build_s, ciucu_split};
use rhombil::rat::{display, Rat};

fn main() {
    let mut conv = Conventions::default();
    conv.odd_seq = OddSeqRule::PrependZero;
    conv.hole_cut = HoleCut::TrimSliver;

    let mut cases = Vec::new();
    for x in 0..=3i64 {
        for y in 1..=2i64 {
            for a in [vec![2u64], vec![2, 1], vec![2, 2], vec![4, 1]] {
                let seq = HoleSeq::new(a);
                let e = seq.sum_even();
                for z in 0..=(2 * y + 2 * e + 1) {
                    if (x - z) % 2 == 0 {
                        cases.push((x, y, z, seq.clone()));
                    }
                }
            }
        }
    }

    for (x, y, z, a) in cases {
        let Ok(s) = build_s(x, y, z, &a) else { continue };
        let Ok((left, right, k)) = ciucu_split(&s) else { continue };
        if left.is_empty() || right.is_empty() {
            continue;
        }
        let gp = count_tilings(&left).unwrap();
        let gm = count_tilings(&right).unwrap();
        let a1 = a.entries()[0] as i64;
        let sub: Vec<u64> = a.entries()[1..].to_vec();
        let mk = |first: i64| {
            let mut v = vec![first as u64];
            v.extend(&sub);
            HoleSeq::new(v)
        };
        let total = count_tilings(&s).unwrap();
        let check: Rat = rhombil::rat::pow2(k as i64) * &gp * &gm;
        assert_eq!(total, check, "mirror factorization must hold");

        let find = |target: &Rat| -> Vec<String> {
            let mut hits = Vec::new();
            for m in [2u8, 3] {
                for sx in 0..=3i64 {
                    for sy in 0..=3i64 {
                        for sz in 0..=3i64 {
                            for arg in [
                                mk(a1 / 2),
                                mk((a1 - 1) / 2),
                                mk((a1 + 1) / 2),
                            ] {
                                if let Ok(v) = formula_h_with(m, sx, sy, sz, &arg, &conv) {
                                    if &v == target {
                                        hits.push(format!(
                                            "H{m}({sx},{sy},{sz}){:?}",
                                            arg.entries()
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            hits.dedup();
            hits
        };
        println!(
            "S({x},{y},{z}){:?} k={k} total={} G+={} G-={}",
            a.entries(),
            display(&total),
            display(&gp),
            display(&gm),
        );
        if total != Rat::from_integer(0.into()) {
            println!("   G+ in {:?}", find(&gp));
            println!("   G- in {:?}", find(&gm));
        }
    }
}
