//! Dev scratch: check the mixed-family evaluators against the identities
//! the formulas must satisfy regardless of geometry: the corner splits and
//! the three-term recurrence.

use rhombil::combinat::HoleSeq;
use rhombil::convention::*;
use rhombil::formulas::*;
use rhombil::rat::display;

fn main() {
    let mut conv = Conventions::default();
    conv.odd_seq = OddSeqRule::PrependZero;
    conv.hole_cut = HoleCut::TrimSliver;

    let two = |k: i64| rhombil::rat::pow2(k);
    let kp = |t: &[u64]| formula_kprime_with(&HoleSeq::new(t.to_vec()), &conv);
    let q = |t: &[u64]| formula_q_with(&HoleSeq::new(t.to_vec()), &conv);

    println!("== H5 corner splits ==");
    let mut bad = 0;
    for y in 0..=2i64 {
        for z in 0..=2i64 {
            for a1 in 0..=2u64 {
                for a2 in 0..=2u64 {
                    let a = HoleSeq::from([a1, a2]);
                    // x = 0 split
                    let lhs = formula_h_with(5, 0, y, z, &a, &conv);
                    let rhs = kp(&[0, a1 + 1, a2, y as u64])
                        .and_then(|k| Ok(k * q(&[a1, a2 + z as u64])? * two(a1 as i64)));
                    match (lhs, rhs) {
                        (Ok(l), Ok(r)) if l == r => {}
                        (Ok(l), Ok(r)) => {
                            bad += 1;
                            println!(
                                "x=0 y={y} z={z} a=({a1},{a2}): eq1 {} vs split {}",
                                display(&l),
                                display(&r)
                            );
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    for x in 0..=2i64 {
        for z in 0..=2i64 {
            for a1 in 0..=2u64 {
                for a2 in 0..=2u64 {
                    let a = HoleSeq::from([a1, a2]);
                    // y = 0 split: K'(0, a1+1) * Q(a1, a2, x, z)
                    let lhs = formula_h_with(5, x, 0, z, &a, &conv);
                    let rhs = kp(&[0, a1 + 1])
                        .and_then(|k| Ok(k * q(&[a1, a2, x as u64, z as u64])? * two(a1 as i64)));
                    match (lhs, rhs) {
                        (Ok(l), Ok(r)) if l == r => {}
                        (Ok(l), Ok(r)) => {
                            bad += 1;
                            println!(
                                "y=0 x={x} z={z} a=({a1},{a2}): eq1 {} vs split {}",
                                display(&l),
                                display(&r)
                            );
                        }
                        _ => {}
                    }
                    // z = 0 split: K'(0, a1+1, a2+x, y) * Q(a1, a2)
                    let y = z;
                    let lhs = formula_h_with(5, x, y, 0, &a, &conv);
                    let rhs = kp(&[0, a1 + 1, a2 + x as u64, y as u64])
                        .and_then(|k| Ok(k * q(&[a1, a2])? * two(a1 as i64)));
                    match (lhs, rhs) {
                        (Ok(l), Ok(r)) if l == r => {}
                        (Ok(l), Ok(r)) => {
                            bad += 1;
                            println!(
                                "z=0 x={x} y={y} a=({a1},{a2}): eq1 {} vs split {}",
                                display(&l),
                                display(&r)
                            );
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    println!("corner-split mismatches: {bad}");

    println!("== four-hole x=0 splits, families 5..8 ==");
    let qp = |t: &[u64]| formula_qprime_with(&HoleSeq::new(t.to_vec()), &conv);
    let kk = |t: &[u64]| formula_k_with(&HoleSeq::new(t.to_vec()), &conv);
    for m in 5..=8u8 {
        let mut bad = 0;
        let mut tested = 0;
        for a1 in 0..=2u64 {
            for a2 in 0..=2u64 {
                for a3 in 0..=2u64 {
                    for a4 in 0..=2u64 {
                        for y in 0..=2i64 {
                            for z in 0..=2i64 {
                                let a = HoleSeq::from([a1, a2, a3, a4]);
                                let yy = y as u64;
                                let zz = z as u64;
                                let lhs = formula_h_with(m, 0, y, z, &a, &conv);
                                let rhs = match m {
                                    5 => kp(&[0, a1 + 1, a2, a3, a4, yy]).and_then(|k| {
                                        Ok(k * q(&[a1, a2, a3, a4 + zz])? * two(a1 as i64))
                                    }),
                                    6 => qp(&[0, a1, a2, a3, a4, yy]).and_then(|k| {
                                        Ok(k * kk(&[a1, a2, a3, a4 + zz])? * two(a1 as i64))
                                    }),
                                    7 => kk(&[0, a1, a2, a3, a4, yy])
                                        .and_then(|k| Ok(k * qp(&[a1, a2, a3, a4 + zz])?)),
                                    8 => {
                                        if a1 == 0 {
                                            continue;
                                        }
                                        q(&[0, a1 - 1, a2, a3, a4, yy])
                                            .and_then(|k| Ok(k * kp(&[a1, a2, a3, a4 + zz])?))
                                    }
                                    _ => unreachable!(),
                                };
                                match (lhs, rhs) {
                                    (Ok(l), Ok(r)) => {
                                        tested += 1;
                                        if l != r {
                                            bad += 1;
                                            if bad <= 3 {
                                                println!(
                                                    "  H{m} x=0 y={y} z={z} a=({a1},{a2},{a3},{a4}): eq2 {} vs split {}",
                                                    display(&l),
                                                    display(&r)
                                                );
                                            }
                                        }
                                    }
                                    _ => {}
                                }
                            }
                        }
                    }
                }
            }
        }
        println!("H{m}: {bad} four-hole split failures of {tested}");
    }

    println!("== four-hole y=0 and z=0 splits, H5 and H8 ==");
    for m in [5u8, 8] {
        let mut bad = 0;
        let mut tested = 0;
        for a1 in 0..=2u64 {
            for a2 in 0..=2u64 {
                for a3 in 0..=2u64 {
                    for a4 in 0..=2u64 {
                        for x in 0..=2i64 {
                            for w in 0..=2i64 {
                                let a = HoleSeq::from([a1, a2, a3, a4]);
                                let xx = x as u64;
                                let ww = w as u64;
                                // y = 0 (w plays z), then z = 0 (w plays y)
                                let checks: [(i64, i64, _); 2] = [
                                    (0, w, match m {
                                        5 => kp(&[0, a1 + 1, a2, a3]).and_then(|k| {
                                            Ok(k * q(&[a1, a2, a3, a4, xx, ww])? * two(a1 as i64))
                                        }),
                                        8 => {
                                            if a1 == 0 { continue; }
                                            q(&[0, a1 - 1, a2, a3]).and_then(|k| {
                                                Ok(k * kp(&[a1, a2, a3, a4, xx, ww])?)
                                            })
                                        }
                                        _ => unreachable!(),
                                    }),
                                    (w, 0, match m {
                                        5 => kp(&[0, a1 + 1, a2, a3, a4 + xx, ww]).and_then(|k| {
                                            Ok(k * q(&[a1, a2, a3, a4])? * two(a1 as i64))
                                        }),
                                        8 => q(&[0, a1 - 1, a2, a3, a4 + xx, ww]).and_then(|k| {
                                            Ok(k * kp(&[a1, a2, a3, a4])?)
                                        }),
                                        _ => unreachable!(),
                                    }),
                                ];
                                for (y, z, rhs) in checks {
                                    let lhs = formula_h_with(m, x, y, z, &a, &conv);
                                    if let (Ok(l), Ok(r)) = (lhs, rhs) {
                                        tested += 1;
                                        if l != r {
                                            bad += 1;
                                            if bad <= 3 {
                                                println!(
                                                    "  H{m} x={x} y={y} z={z} a=({a1},{a2},{a3},{a4}): eq2 {} vs split {}",
                                                    display(&l), display(&r)
                                                );
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        println!("H{m}: {bad} y0/z0 split failures of {tested}");
    }

    println!("== three-term recurrence, families 5..8, two and four holes ==");
    for m in 5..=8u8 {
        let mut bad = 0;
        let mut tested = 0;
        for seq in [vec![1u64, 1], vec![2, 1], vec![1, 2], vec![1, 1, 1, 1]] {
            let a = HoleSeq::new(seq);
            for x in 1..=3i64 {
                for y in 1..=3i64 {
                    for z in 1..=3i64 {
                        let f = |xx, yy, zz| formula_h_with(m, xx, yy, zz, &a, &conv);
                        let vals = (
                            f(x, y, z),
                            f(x, y - 1, z - 1),
                            f(x, y - 1, z),
                            f(x, y, z - 1),
                            f(x + 1, y - 1, z - 1),
                            f(x - 1, y, z),
                        );
                        if let (Ok(v0), Ok(v1), Ok(v2), Ok(v3), Ok(v4), Ok(v5)) =
                            (vals.0, vals.1, vals.2, vals.3, vals.4, vals.5)
                        {
                            tested += 1;
                            if v0 * v1 != v2 * v3 + v4 * v5 {
                                bad += 1;
                                if bad < 4 {
                                    println!("  H{m} fails at x={x} y={y} z={z} a={:?}", a.entries());
                                }
                            }
                        }
                    }
                }
            }
        }
        println!("H{m}: {bad} recurrence failures of {tested}");
    }
}
