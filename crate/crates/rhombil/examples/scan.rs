//! Dev scratch: sweep family grids comparing closed forms against the
//! counting engine, printing any disagreements.

use rhombil::combinat::HoleSeq;
use rhombil::engine::count_tilings;
use rhombil::formulas::*;
use rhombil::lattice::*;
use rhombil::rat::display;
use rhombil::convention::*;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let which = args.first().map(|s| s.as_str()).unwrap_or("all");
    let mut conv = Conventions::default();
    for flag in args.iter().skip(1) {
        match flag.as_str() {
            "prepend" => conv.odd_seq = OddSeqRule::PrependZero,
            "append" => conv.odd_seq = OddSeqRule::AppendZero,
            "trim" => conv.hole_cut = HoleCut::TrimSliver,
            "plain" => conv.stair_index = StairIndex::Plain,
            "yshift" => conv.h8_second = H8SecondIndex::YShift,
            "swapped" => conv.h3_numerator = H3Numerator::Swapped,
            other => panic!("unknown flag {other}"),
        }
    }

    if which == "all" || which == "pq" {
        println!("== P ==");
        for a in 0..=3i64 {
            for b in a..=3 {
                for c in 0..=3 {
                    let f = formula_p(a, b, c).unwrap();
                    let r = count_tilings(&build_p(a, b, c).unwrap()).unwrap();
                    if f != r {
                        println!("P({a},{b},{c}): formula {} vs engine {}", display(&f), display(&r));
                    }
                }
            }
        }
        println!("== P' ==");
        for a in 0..=3i64 {
            for b in a..=3 {
                for c in 0..=3 {
                    let f = formula_pprime(a, b, c).unwrap();
                    let r = count_tilings(&build_pprime(a, b, c).unwrap()).unwrap();
                    if f != r {
                        println!("P'({a},{b},{c}): formula {} vs engine {}", display(&f), display(&r));
                    }
                }
            }
        }
        for (name, ff, bb) in [
            ("Q", formula_q as fn(&HoleSeq) -> _, build_q as fn(&HoleSeq) -> _),
            ("Q'", formula_qprime, build_qprime),
            ("K", formula_k, build_k),
            ("K'", formula_kprime, build_kprime),
        ] {
            println!("== {name} ==");
            let mut seqs: Vec<Vec<u64>> = vec![];
            for a in 0..=2u64 {
                for b in 0..=2u64 {
                    seqs.push(vec![a, b]);
                    for c in 0..=2u64 {
                        for d in 0..=2u64 {
                            seqs.push(vec![a, b, c, d]);
                        }
                    }
                }
            }
            for t in seqs {
                let t = HoleSeq::new(t);
                let f: rhombil::formulas::Result<_> = ff(&t);
                let rg: rhombil::lattice::Result<Region> = bb(&t);
                match (f, rg) {
                    (Ok(f), Ok(rg)) => {
                        let r = count_tilings(&rg).unwrap();
                        if f != r {
                            println!("{name}{:?}: formula {} vs engine {}", t.entries(), display(&f), display(&r));
                        }
                    }
                    (f, r) => println!("{name}{:?}: err {:?} / {:?}", t.entries(), f.err(), r.err()),
                }
            }
        }
    }

    if which == "S" || which == "all" {
        println!("== S ==");
        let mut bad = 0;
        let mut skipped = 0;
        let mut total = 0;
        for x in 0..=2i64 {
            for y in 0..=2i64 {
                for aseq in [
                    vec![1u64], vec![2], vec![3], vec![1, 1], vec![2, 1],
                    vec![1, 2], vec![2, 2], vec![3, 1], vec![1, 1, 1], vec![2, 1, 2],
                ] {
                    let a = HoleSeq::new(aseq);
                    let e = a.sum_even();
                    let zmax = 2 * y + 2 * e + 3;
                    for z in ((x % 2)..=zmax).step_by(2) {
                        total += 1;
                        let f = rhombil::formulas::formula_s_with(x, y, z, &a, &conv);
                        let rg = rhombil::lattice::build_s(x, y, z, &a);
                        match (f, rg) {
                            (Ok(f), Ok(rg)) => {
                                let r = count_tilings(&rg).unwrap();
                                if f != r {
                                    bad += 1;
                                    if bad <= 15 {
                                        println!(
                                            "S({x},{y},{z}){:?}: formula {} vs engine {}",
                                            a.entries(), display(&f), display(&r)
                                        );
                                    }
                                }
                            }
                            (f, r) => {
                                skipped += 1;
                                if skipped <= 5 {
                                    println!(
                                        "S({x},{y},{z}){:?}: skip {:?} / {:?}",
                                        a.entries(),
                                        f.err().map(|e| e.to_string()),
                                        r.err().map(|e| e.to_string())
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        println!("S: {total} points, {bad} mismatches, {skipped} skipped");
    }

    for m in 1..=8u8 {
        let fam = format!("H{m}");
        if which != "all" && which != fam {
            continue;
        }
        println!("== {fam} ==");
        let mut bad = 0;
        let mut skipped = 0;
        let mut total = 0;
        for x in 0..=2i64 {
            for y in 0..=2i64 {
                for z in 0..=2i64 {
                    for a1 in 0..=2u64 {
                        for a2 in 0..=2u64 {
                            total += 1;
                            let a = HoleSeq::from([a1, a2]);
                            let f = formula_h_with(m, x, y, z, &a, &conv);
                            let rg = build_h_with(m, x, y, z, &a, &conv);
                            match (f, rg) {
                                (Ok(f), Ok(rg)) => {
                                    let r = count_tilings(&rg).unwrap();
                                    if f != r {
                                        bad += 1;
                                        if bad <= 12 {
                                            println!(
                                                "H{m}({x},{y},{z})[{a1},{a2}]: formula {} vs engine {}",
                                                display(&f),
                                                display(&r)
                                            );
                                        }
                                    }
                                }
                                (f, r) => {
                                    skipped += 1;
                                    if skipped <= 6 {
                                        println!(
                                            "H{m}({x},{y},{z})[{a1},{a2}]: skip {:?} / {:?}",
                                            f.err().map(|e| e.to_string()),
                                            r.err().map(|e| e.to_string())
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        println!("{fam}: {total} points, {bad} mismatches, {skipped} skipped");
    }
}
