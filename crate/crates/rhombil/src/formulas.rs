//! Closed-form evaluators for the tiling numbers of every region family,
//! in exact rational arithmetic.
//!
//! Each evaluator transcribes its product formula factor by factor, with no
//! algebraic simplification, so the code can be audited term by term. Values
//! for the unweighted families are non-negative integers; the weighted
//! families produce non-negative dyadic rationals.

use crate::combinat::{
    factorial, hyperfactorial, hyperfactorial2_with, pochhammer, trapezoid_t, trapezoid_v,
    CombinatError, H2OddCase, HoleSeq,
};
use crate::convention::{Conventions, H3Numerator, H8SecondIndex, OddSeqRule, PprimeLimit, StairIndex};
use crate::family::{Family, Params, RegionSpec};
use crate::rat::{int, pow2, Rat};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("parameter order violated: expected a <= b, got a={a}, b={b}")]
    ParameterOrder { a: i64, b: i64 },
    #[error("sequence has odd length {len} and no padding rule applies here")]
    OddLength { len: usize },
    #[error("x and z must have the same parity, got x={x}, z={z}")]
    ParityMismatch { x: i64, z: i64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("formula is singular: {0}")]
    Singular(String),
}

impl From<CombinatError> for FormulaError {
    fn from(e: CombinatError) -> Self {
        FormulaError::Singular(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, FormulaError>;

/// A formula evaluation bundled with the spec it was evaluated for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub spec: RegionSpec,
    pub value: Rat,
}

// ---------------------------------------------------------------------------
// Halved hexagons P and P'

/// Tiling number of the halved hexagon with parameters `a <= b`, `c`.
pub fn formula_p(a: i64, b: i64, c: i64) -> Result<Rat> {
    if a > b {
        return Err(FormulaError::ParameterOrder { a, b });
    }
    if a < 0 || c < 0 {
        return Err(FormulaError::BadParameters(format!(
            "negative parameter in P({a},{b},{c})"
        )));
    }
    let mut acc = Rat::one();
    for i in 1..=a {
        for j in 1..=(b - a + 1) {
            acc *= int(c + i + j - 1) / int(i + j - 1);
        }
        for j in (b - a + 2)..=(b - a + i) {
            acc *= int(2 * c + i + j - 1) / int(i + j - 1);
        }
    }
    Ok(acc)
}

/// Weighted halved hexagon: staircase lozenges carry weight 1/2.
pub fn formula_pprime(a: i64, b: i64, c: i64) -> Result<Rat> {
    formula_pprime_with(a, b, c, &Conventions::default())
}

pub fn formula_pprime_with(a: i64, b: i64, c: i64, conv: &Conventions) -> Result<Rat> {
    if a > b {
        return Err(FormulaError::ParameterOrder { a, b });
    }
    if a < 0 || c < 0 {
        return Err(FormulaError::BadParameters(format!(
            "negative parameter in P'({a},{b},{c})"
        )));
    }
    let limit = match conv.pprime_limit {
        PprimeLimit::UpToA => a,
        PprimeLimit::UpToB => b,
        PprimeLimit::UpToDiff => b - a,
    };
    let mut acc = pow2(-a);
    for i in 1..=limit {
        let den = c + b - a + i;
        if den == 0 {
            return Err(FormulaError::Singular(format!(
                "zero factor in P'({a},{b},{c}) correction product"
            )));
        }
        acc *= int(2 * c + b - a + i) / int(den);
    }
    Ok(acc * formula_p(a, b, c)?)
}

/// Halved-hexagon value as the defected-hexagon evaluators need it: the
/// outer product is empty whenever `a <= 0` (value 1, any `b`, `c`), which
/// the composite formulas reach at corner parameters like a zero-height
/// staircase.
fn p_value(a: i64, b: i64, c: i64) -> Result<Rat> {
    if a <= 0 {
        return Ok(Rat::one());
    }
    if b < a {
        return Err(FormulaError::Singular(format!(
            "halved-hexagon factor with b < a: P({a},{b},{c})"
        )));
    }
    if c < 0 {
        return Err(FormulaError::Singular(format!("negative c in P({a},{b},{c})")));
    }
    formula_p(a, b, c)
}

/// Lenient weighted counterpart of [`p_value`].
fn pprime_value(a: i64, b: i64, c: i64, conv: &Conventions) -> Result<Rat> {
    if a <= 0 {
        // every product is empty; the counting oracle confirms the whole
        // factor degenerates to 1 (not to the literal 2^{-a} prefactor)
        return Ok(Rat::one());
    }
    if b < a {
        return Err(FormulaError::Singular(format!(
            "halved-hexagon factor with b < a: P'({a},{b},{c})"
        )));
    }
    if c < 0 {
        return Err(FormulaError::Singular(format!("negative c in P'({a},{b},{c})")));
    }
    formula_pprime_with(a, b, c, conv)
}

// ---------------------------------------------------------------------------
// Trapezoid families Q, Q', K, K'

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Qar {
    Q,
    Qprime,
    K,
    Kprime,
}

/// Hyperfactorial extended by empty products one step below zero, which the
/// trapezoid formulas reach when prefix sums vanish.
fn hf(n: i64) -> Result<Rat> {
    if n >= 0 {
        Ok(hyperfactorial(n)?)
    } else if n == -1 {
        Ok(Rat::one())
    } else {
        Err(FormulaError::Singular(format!("hyperfactorial at {n}")))
    }
}

fn hf2(n: i64, odd: H2OddCase) -> Result<Rat> {
    if n >= 0 {
        Ok(hyperfactorial2_with(n, odd)?)
    } else if n == -1 {
        Ok(Rat::one())
    } else {
        Err(FormulaError::Singular(format!("skip hyperfactorial at {n}")))
    }
}

/// Shared evaluator for the four trapezoid formulas. `t` must have even
/// length; prefix sums `s_j` drive every factor.
fn qar_value(t: &HoleSeq, which: Qar, conv: &Conventions) -> Result<Rat> {
    if t.len() % 2 != 0 {
        return Err(FormulaError::OddLength { len: t.len() });
    }
    let l = t.len() / 2;
    let e = t.sum_even();
    let s = |j: usize| -> i64 { t.prefix(j).expect("prefix within length") };
    let odd = conv.h2_odd;

    let mut acc = match which {
        Qar::Q => {
            let mut pre = Rat::one();
            for i in 1..=l {
                pre *= factorial(s(2 * i))? / factorial(s(2 * i - 1))?;
            }
            pre / hf2(2 * e + 1, odd)?
        }
        Qar::Qprime => pow2(-e) / hf2(2 * e + 1, odd)?,
        Qar::K | Qar::Kprime => hf2(2 * e, odd)?.recip(),
    };

    for i in 1..=l {
        let (s_even, s_odd) = (s(2 * i), s(2 * i - 1));
        acc *= match which {
            Qar::Q => hf2(2 * s_even + 1, odd)? * hf(2 * s_odd + 2)? / hf2(2 * s_odd + 3, odd)?,
            Qar::Qprime => hf2(2 * s_even + 1, odd)? * hf(2 * s_odd)? / hf2(2 * s_odd + 1, odd)?,
            Qar::K => hf2(2 * s_even, odd)? * hf(2 * s_odd + 1)? / hf2(2 * s_odd + 2, odd)?,
            Qar::Kprime => hf2(2 * s_even - 1, odd)? * hf(2 * s_odd)? / hf2(2 * s_odd + 1, odd)?,
        };
    }

    // Pairwise factors: the sum argument carries a family-specific shift.
    let shift = match which {
        Qar::Q => 1,
        Qar::Qprime | Qar::K => 0,
        Qar::Kprime => -1,
    };
    for i in 1..=(2 * l) {
        for j in (i + 1)..=(2 * l) {
            let diff = hf(s(j) - s(i))?;
            let sum = hf(s(j) + s(i) + shift)?;
            if (j - i) % 2 == 1 {
                acc *= diff / sum;
            } else {
                acc *= sum / diff;
            }
        }
    }
    Ok(acc)
}

/// Make an odd-length sequence even using the resolved convention.
fn evened(t: &HoleSeq, conv: &Conventions) -> HoleSeq {
    if t.len() % 2 == 0 {
        t.clone()
    } else {
        match conv.odd_seq {
            OddSeqRule::AppendZero => t.padded(),
            OddSeqRule::PrependZero => {
                let mut entries = vec![0];
                entries.extend_from_slice(t.entries());
                HoleSeq::new(entries)
            }
        }
    }
}

pub fn formula_q(t: &HoleSeq) -> Result<Rat> {
    qar_value(t, Qar::Q, &Conventions::default())
}
pub fn formula_qprime(t: &HoleSeq) -> Result<Rat> {
    qar_value(t, Qar::Qprime, &Conventions::default())
}
pub fn formula_k(t: &HoleSeq) -> Result<Rat> {
    qar_value(t, Qar::K, &Conventions::default())
}
pub fn formula_kprime(t: &HoleSeq) -> Result<Rat> {
    qar_value(t, Qar::Kprime, &Conventions::default())
}

pub fn formula_q_with(t: &HoleSeq, conv: &Conventions) -> Result<Rat> {
    qar_value(t, Qar::Q, conv)
}
pub fn formula_qprime_with(t: &HoleSeq, conv: &Conventions) -> Result<Rat> {
    qar_value(t, Qar::Qprime, conv)
}
pub fn formula_k_with(t: &HoleSeq, conv: &Conventions) -> Result<Rat> {
    qar_value(t, Qar::K, conv)
}
pub fn formula_kprime_with(t: &HoleSeq, conv: &Conventions) -> Result<Rat> {
    qar_value(t, Qar::Kprime, conv)
}

// ---------------------------------------------------------------------------
// Defected halved hexagons H1..H8

fn check_xyz(x: i64, y: i64, z: i64) -> Result<()> {
    if x < 0 || y < 0 || z < 0 {
        return Err(FormulaError::BadParameters(format!(
            "negative corner parameter (x={x}, y={y}, z={z})"
        )));
    }
    Ok(())
}

/// Ratio of two trapezoid products with identical `(n, m)`.
fn t_ratio(num_x: i64, den_x: i64, n: i64, m: i64) -> Result<Rat> {
    Ok(trapezoid_t(&int(num_x), n, m)? / nonzero(trapezoid_t(&int(den_x), n, m)?)?)
}

fn v_ratio(num_x: i64, den_x: i64, n: i64, m: i64) -> Result<Rat> {
    Ok(trapezoid_v(&int(num_x), n, m)? / nonzero(trapezoid_v(&int(den_x), n, m)?)?)
}

fn nonzero(r: Rat) -> Result<Rat> {
    if r.is_zero() {
        Err(FormulaError::Singular("zero trapezoid factor in denominator".into()))
    } else {
        Ok(r)
    }
}

fn nonzero_named(r: Rat, what: &str) -> Result<Rat> {
    if r.is_zero() {
        Err(FormulaError::Singular(format!("zero denominator factor {what}")))
    } else {
        Ok(r)
    }
}

/// Two-hole closed form for family `m` with hole sizes `(a, b)`.
fn h_two_hole(m: u8, x: i64, y: i64, z: i64, a: i64, b: i64, conv: &Conventions) -> Result<Rat> {
    let p = p_value;
    let pp = |a, b, c| pprime_value(a, b, c, conv);
    let seq4 = |t: [i64; 4]| -> Result<HoleSeq> {
        if t.iter().any(|&v| v < 0) {
            return Err(FormulaError::Singular(format!("negative sequence entry in {t:?}")));
        }
        Ok(HoleSeq::new(t.iter().map(|&v| v as u64).collect()))
    };
    let stair = |base: i64| match conv.stair_index {
        StairIndex::Shifted => base - 1,
        StairIndex::Plain => base,
    };

    match m {
        1 => {
            let head = p(y, y + 2 * a, b)? * p(z + b, z + b, a)?
                * formula_q_with(&seq4([a, b, x, y + z])?, conv)?
                / nonzero_named(p(y + z + b, y + z + b, a)?, "P(y+z+b,y+z+b,a)")?;
            let tail = t_ratio(x + b + 1, b + 1, y + a - 1, a)?
                * t_ratio(x + z + a + b + 2, z + a + b + 2, y + a - 1, a)?
                * t_ratio(2 * a + b + 2, x + 2 * a + b + 2, y + b - 1, b)?
                * t_ratio(z + 1, x + z + 1, y + b - 1, b)?;
            Ok(head * tail)
        }
        2 => {
            let head = p(y, y + stair(2 * a), b)? * p(z + b - 1, z + b - 1, a)?
                * formula_k_with(&seq4([a, b, x, y + z])?, conv)?
                / nonzero_named(p(y + z + b - 1, y + z + b - 1, a)?, "P(y+z+b-1,..)")?;
            let tail = t_ratio(x + b + 1, b + 1, y + a - 1, a)?
                * t_ratio(x + z + a + b + 1, z + a + b + 1, y + a - 1, a)?
                * t_ratio(2 * a + b + 1, x + 2 * a + b + 1, y + b - 1, b)?
                * t_ratio(z + 1, x + z + 1, y + b - 1, b)?;
            Ok(head * tail)
        }
        3 => {
            let arg = evened(&HoleSeq::new(seq_entries([0, a, b, x, y + z])?), conv);
            let head = pp(y, y + 2 * a, b)? * pp(z + b, z + b, a)?
                * formula_qprime_with(&arg, conv)?
                / nonzero_named(pp(y + z + b, y + z + b, a)?, "P'(y+z+b,..)")?;
            let tail = t_ratio(x + b + 1, b + 1, y + a - 1, a)?
                * t_ratio(x + z + a + b + 1, z + a + b + 1, y + a - 1, a)?
                * t_ratio(2 * a + b + 1, x + 2 * a + b + 1, y + b - 1, b)?
                * t_ratio(z + 1, x + z + 1, y + b - 1, b)?;
            Ok(head * tail)
        }
        4 => {
            let head = pp(y, y + stair(2 * a), b)? * pp(z + b - 1, z + b - 1, a)?
                * formula_kprime_with(&seq4([a, b, x, y + z])?, conv)?
                / nonzero_named(pp(y + z + b - 1, y + z + b - 1, a)?, "P'(y+z+b-1,..)")?;
            let tail = t_ratio(x + b + 1, b + 1, y + a - 1, a)?
                * t_ratio(x + z + a + b, z + a + b, y + a - 1, a)?
                * t_ratio(2 * a + b, x + 2 * a + b, y + b - 1, b)?
                * t_ratio(z + 1, x + z + 1, y + b - 1, b)?;
            Ok(head * tail)
        }
        5 => {
            let head = pp(y, y + 2 * a + 1, b)? * p(z + b, z + b, a)?
                * formula_q_with(&seq4([a, b, x, y + z])?, conv)?
                / nonzero_named(p(y + z + b, y + z + b, a)?, "P(y+z+b,..)")?;
            let v = v_ratio(2 * a + 2 * b + 3, 2 * x + 2 * a + 2 * b + 3, y + z - 1, y)?;
            let tail = t_ratio(x + b + 1, b + 1, y + z + 2 * a, y)?
                * t_ratio(2 * a + b + 2, x + 2 * a + b + 2, y + b - 1, b)?
                * t_ratio(z + 1, x + z + 1, y + b - 1, b)?;
            Ok(head * v * tail)
        }
        6 => {
            let head = pp(y, y + 2 * a, b)? * p(z + b - 1, z + b - 1, a)?
                * formula_k_with(&seq4([a, b, x, y + z])?, conv)?
                / nonzero_named(p(y + z + b - 1, y + z + b - 1, a)?, "P(y+z+b-1,..)")?;
            let v = v_ratio(2 * a + 2 * b + 3, 2 * x + 2 * a + 2 * b + 3, y + z - 2, y)?;
            let tail = t_ratio(x + b + 1, b + 1, y + z + 2 * a - 1, y)?
                * t_ratio(2 * a + b + 1, x + 2 * a + b + 1, y + b - 1, b)?
                * t_ratio(z + 1, x + z + 1, y + b - 1, b)?;
            Ok(head * v * tail)
        }
        7 => {
            let head = p(y, y + 2 * a - 1, b)? * pp(z + b, z + b, a)?
                * formula_qprime_with(&seq4([a, b, x, y + z])?, conv)?
                / nonzero_named(pp(y + z + b, y + z + b, a)?, "P'(y+z+b,..)")?;
            let v = v_ratio(2 * a + 2 * b + 1, 2 * x + 2 * a + 2 * b + 1, y + z, y)?;
            let tail = t_ratio(x + b + 1, b + 1, y + z + 2 * a - 1, y)?
                * t_ratio(2 * a + b + 1, x + 2 * a + b + 1, y + b - 1, b)?
                * t_ratio(z + 1, x + z + 1, y + b - 1, b)?;
            Ok(head * v * tail)
        }
        8 => {
            let second = match conv.h8_second {
                H8SecondIndex::ZShift => z + b - 1,
                H8SecondIndex::YShift => y + b - 1,
            };
            let head = p(y, y + 2 * a - 2, b)? * pp(z + b - 1, second, a)?
                * formula_kprime_with(&seq4([a, b, x, y + z])?, conv)?
                / nonzero_named(pp(y + z + b - 1, y + z + b - 1, a)?, "P'(y+z+b-1,..)")?;
            let v = v_ratio(2 * a + 2 * b + 1, 2 * x + 2 * a + 2 * b + 1, y + z - 1, y)?;
            let tail = t_ratio(x + b + 1, b + 1, y + z + 2 * a - 2, y)?
                * t_ratio(2 * a + b, x + 2 * a + b, y + b - 1, b)?
                * t_ratio(z + 1, x + z + 1, y + b - 1, b)?;
            Ok(head * v * tail)
        }
        _ => Err(FormulaError::BadParameters(format!("no H{m} family"))),
    }
}

fn seq_entries(vals: [i64; 5]) -> Result<Vec<u64>> {
    if vals.iter().any(|&v| v < 0) {
        return Err(FormulaError::Singular(format!("negative sequence entry in {vals:?}")));
    }
    Ok(vals.iter().map(|&v| v as u64).collect())
}

/// Sequence transforms used by the many-hole evaluators.
fn with_prefix_and_tail(prefix: i64, a: &HoleSeq, tail: i64) -> Result<HoleSeq> {
    let mut entries = Vec::with_capacity(a.len() + 2);
    if prefix < 0 {
        return Err(FormulaError::Singular("negative prefix entry".into()));
    }
    entries.push(prefix as u64);
    entries.extend_from_slice(a.entries());
    if tail < 0 {
        return Err(FormulaError::Singular("negative tail entry".into()));
    }
    entries.push(tail as u64);
    Ok(HoleSeq::new(entries))
}

fn with_last_plus(a: &HoleSeq, add: i64) -> Result<HoleSeq> {
    let mut entries = a.entries().to_vec();
    let last = entries.last_mut().expect("sequence is non-empty");
    let v = *last as i64 + add;
    if v < 0 {
        return Err(FormulaError::Singular("negative sequence entry".into()));
    }
    *last = v as u64;
    Ok(HoleSeq::new(entries))
}

fn with_first_plus(a: &HoleSeq, add: i64) -> Result<HoleSeq> {
    let mut entries = a.entries().to_vec();
    let first = entries.first_mut().expect("sequence is non-empty");
    let v = *first as i64 + add;
    if v < 0 {
        return Err(FormulaError::Singular("negative sequence entry".into()));
    }
    *first = v as u64;
    Ok(HoleSeq::new(entries))
}

/// The correction multiplying the two-hole base value when the hole array
/// has `2k >= 4` entries: a power of two, a pair of trapezoid values over a
/// pair of halved-hexagon values, and four telescoping trapezoid products.
fn h_multi_correction(m: u8, x: i64, y: i64, z: i64, a: &HoleSeq, conv: &Conventions) -> Result<Rat> {
    let (o, e) = (a.sum_odd(), a.sum_even());
    let a1 = a.entries()[0] as i64;
    let k = a.len() / 2;
    let p = p_value;
    let pp = |aa, bb, cc| pprime_value(aa, bb, cc, conv);
    let stair = |base: i64| match conv.stair_index {
        StairIndex::Shifted => base - 1,
        StairIndex::Plain => base,
    };

    // Power-of-two prefactor, upper/lower trapezoid values, and the two
    // halved-hexagon divisors.
    let (two_exp, upper, lower, div1, div2) = match m {
        1 => (
            0,
            formula_q_with(&with_prefix_and_tail(0, a, y)?, conv)?,
            formula_q_with(&with_last_plus(a, z)?, conv)?,
            p(y, y + 2 * o, e)?,
            p(z + e, z + e, o)?,
        ),
        2 => (
            0,
            formula_k_with(&with_prefix_and_tail(0, a, y)?, conv)?,
            formula_k_with(&with_last_plus(a, z)?, conv)?,
            p(y, y + stair(2 * o), e)?,
            p(z + e - 1, z + e - 1, o)?,
        ),
        3 => {
            let (upper, lower) = match conv.h3_numerator {
                H3Numerator::Standard => (
                    formula_qprime_with(&with_prefix_and_tail(0, a, y)?, conv)?,
                    formula_qprime_with(&with_last_plus(a, z)?, conv)?,
                ),
                H3Numerator::Swapped => {
                    let mut first = a.entries().to_vec();
                    first.push(z as u64);
                    (
                        formula_qprime_with(&evened(&HoleSeq::new(first), conv), conv)?,
                        formula_qprime_with(
                            &with_prefix_and_tail(0, &with_last_plus(a, z)?, 0)?,
                            conv,
                        )?,
                    )
                }
            };
            (a1, upper, lower, pp(y, y + 2 * o, e)?, pp(z + e, z + e, o)?)
        }
        4 => (
            a1 - 1,
            formula_kprime_with(&with_prefix_and_tail(0, a, y)?, conv)?,
            formula_kprime_with(&with_last_plus(a, z)?, conv)?,
            pp(y, y + stair(2 * o), e)?,
            pp(z + e - 1, z + e - 1, o)?,
        ),
        5 => (
            a1,
            formula_kprime_with(&with_prefix_and_tail(0, &with_first_plus(a, 1)?, y)?, conv)?,
            formula_q_with(&with_last_plus(a, z)?, conv)?,
            pp(y, y + 2 * o + 1, e)?,
            p(z + e, z + e, o)?,
        ),
        6 => (
            a1,
            formula_qprime_with(&with_prefix_and_tail(0, a, y)?, conv)?,
            formula_k_with(&with_last_plus(a, z)?, conv)?,
            pp(y, y + 2 * o, e)?,
            p(z + e - 1, z + e - 1, o)?,
        ),
        7 => (
            0,
            formula_k_with(&with_prefix_and_tail(0, a, y)?, conv)?,
            formula_qprime_with(&with_last_plus(a, z)?, conv)?,
            p(y, y + 2 * o - 1, e)?,
            pp(z + e, z + e, o)?,
        ),
        8 => {
            let second = match conv.h8_second {
                H8SecondIndex::ZShift => z + e - 1,
                H8SecondIndex::YShift => y + e - 1,
            };
            (
                0,
                formula_q_with(&with_prefix_and_tail(0, &with_first_plus(a, -1)?, y)?, conv)?,
                formula_kprime_with(&with_last_plus(a, z)?, conv)?,
                p(y, y + 2 * o - 2, e)?,
                pp(z + e - 1, second, o)?,
            )
        }
        _ => return Err(FormulaError::BadParameters(format!("no H{m} family"))),
    };

    let mut acc = pow2(two_exp) * upper * lower
        / nonzero_named(div1, "halved-hexagon divisor")?
        / nonzero_named(div2, "halved-hexagon divisor")?;

    // Trapezoid shift in the last two telescoping blocks.
    let delta = match m {
        1 | 5 => 2,
        2 | 3 | 6 | 7 => 1,
        4 | 8 => 0,
        _ => unreachable!(),
    };
    let s2k = a.prefix(2 * k).expect("even length");
    for i in 2..=k {
        let oi = a.tail_odd(i);
        let ei = a.tail_even(i);
        let n = a.entries()[2 * i - 3] as i64 + oi - 1; // a_{2i-2} + o_i - 1
        let sigma = a.prefix(2 * i - 1).expect("within length") + s2k + delta;
        acc *= t_ratio(x + z + ei + 1, x + y + ei + 1, n, oi)?;
        acc *= t_ratio(y + ei + 1, z + ei + 1, n, oi)?;
        acc *= t_ratio(x + y + sigma, x + z + sigma, n, oi)?;
        acc *= t_ratio(z + sigma, y + sigma, n, oi)?;
    }
    Ok(acc)
}

/// Tiling number of the defected halved hexagon family `m` (1..=8).
///
/// Odd-length hole sequences are evaluated by appending a trailing zero
/// hole; an empty sequence is the plain halved hexagon.
pub fn formula_h(m: u8, x: i64, y: i64, z: i64, a: &HoleSeq) -> Result<Rat> {
    formula_h_with(m, x, y, z, a, &Conventions::default())
}

pub fn formula_h_with(
    m: u8,
    x: i64,
    y: i64,
    z: i64,
    a: &HoleSeq,
    conv: &Conventions,
) -> Result<Rat> {
    check_xyz(x, y, z)?;
    if !(1..=8).contains(&m) {
        return Err(FormulaError::BadParameters(format!("no H{m} family")));
    }
    if a.is_empty() {
        return h_two_hole(m, x, y, z, 0, 0, conv);
    }
    let a = if a.len() % 2 == 1 { a.padded() } else { a.clone() };
    let (o, e) = (a.sum_odd(), a.sum_even());
    let base = h_two_hole(m, x, y, z, o, e, conv)?;
    if a.len() == 2 {
        return Ok(base);
    }
    Ok(base * h_multi_correction(m, x, y, z, &a, conv)?)
}

macro_rules! h_family {
    ($name:ident, $m:literal) => {
        pub fn $name(x: i64, y: i64, z: i64, a: &HoleSeq) -> Result<Rat> {
            formula_h($m, x, y, z, a)
        }
    };
}
h_family!(formula_h1, 1);
h_family!(formula_h2, 2);
h_family!(formula_h3, 3);
h_family!(formula_h4, 4);
h_family!(formula_h5, 5);
h_family!(formula_h6, 6);
h_family!(formula_h7, 7);
h_family!(formula_h8, 8);

// ---------------------------------------------------------------------------
// Symmetric hexagon S

/// Tiling number of the symmetric hexagon with a centered hole array.
///
/// Requires `x == z (mod 2)` and positive hole sizes. Outside the band
/// `2E - 1 <= z <= 2y + 2E + 1` the region has no tiling and the value is 0.
pub fn formula_s(x: i64, y: i64, z: i64, a: &HoleSeq) -> Result<Rat> {
    formula_s_with(x, y, z, a, &Conventions::default())
}

pub fn formula_s_with(x: i64, y: i64, z: i64, a: &HoleSeq, conv: &Conventions) -> Result<Rat> {
    check_xyz(x, y, z)?;
    if (x - z) % 2 != 0 {
        return Err(FormulaError::ParityMismatch { x, z });
    }
    if a.is_empty() || a.entries().iter().any(|&v| v == 0) {
        return Err(FormulaError::BadParameters(
            "hole sizes on the symmetry axis must be positive".into(),
        ));
    }
    let e = a.sum_even();
    if z < 2 * e - 1 || z > 2 * y + 2 * e + 1 {
        return Ok(Rat::zero());
    }
    let a1 = a.entries()[0] as i64;
    let rest: i64 = a.entries()[1..].iter().map(|&v| v as i64).sum();
    let two = pow2(y + rest);

    let sub_seq = |first: i64| -> HoleSeq {
        let mut entries = vec![first as u64];
        entries.extend_from_slice(&a.entries()[1..]);
        HoleSeq::new(entries)
    };

    // The mirror split halves the hexagon into a pair of defected halved
    // hexagons; which pair and at which corner parameters depends on the
    // parities of x (= parity of z) and of the central hole.
    let value = if a1 % 2 == 0 {
        let half = sub_seq(a1 / 2);
        if x % 2 == 0 {
            let h = z / 2;
            let (sx, sy, sz) = (x / 2, y - h + e, h - e);
            formula_h_with(2, sx, sy, sz, &half, conv)?
                * formula_h_with(3, sx, sy, sz, &half, conv)?
        } else {
            let h = (z - 1) / 2;
            formula_h_with(2, (x - 1) / 2, y - h + e, h - e + 1, &half, conv)?
                * formula_h_with(3, (x + 1) / 2, y - h + e - 1, h - e, &half, conv)?
        }
    } else {
        let low = sub_seq((a1 - 1) / 2);
        let high = sub_seq((a1 + 1) / 2);
        if x % 2 == 0 {
            let h = z / 2;
            let (sx, sy, sz) = (x / 2, y - h + e, h - e);
            formula_h_with(5, sx, sy, sz, &low, conv)?
                * formula_h_with(8, sx, sy, sz, &high, conv)?
        } else {
            let h = (z - 1) / 2;
            formula_h_with(5, (x + 1) / 2, y - h + e - 1, h - e, &low, conv)?
                * formula_h_with(8, (x - 1) / 2, y - h + e, h - e + 1, &high, conv)?
        }
    };
    Ok(two * value)
}

// ---------------------------------------------------------------------------
// Dispatch by region spec

/// Evaluate the closed form named by a [`RegionSpec`].
pub fn formula_for_spec(spec: &RegionSpec) -> Result<FormulaResult> {
    formula_for_spec_with(spec, &Conventions::default())
}

pub fn formula_for_spec_with(spec: &RegionSpec, conv: &Conventions) -> Result<FormulaResult> {
    let value = match (&spec.family, &spec.params) {
        (Family::P, Params::Abc { a, b, c }) => formula_p(*a, *b, *c)?,
        (Family::Pprime, Params::Abc { a, b, c }) => formula_pprime_with(*a, *b, *c, conv)?,
        (Family::Q, Params::Seq { t }) => formula_q_with(&HoleSeq::new(t.clone()), conv)?,
        (Family::Qprime, Params::Seq { t }) => formula_qprime_with(&HoleSeq::new(t.clone()), conv)?,
        (Family::K, Params::Seq { t }) => formula_k_with(&HoleSeq::new(t.clone()), conv)?,
        (Family::Kprime, Params::Seq { t }) => formula_kprime_with(&HoleSeq::new(t.clone()), conv)?,
        (Family::H(m), Params::Xyza { x, y, z, a }) => {
            formula_h_with(*m, *x, *y, *z, &HoleSeq::new(a.clone()), conv)?
        }
        (Family::S, Params::Xyza { x, y, z, a }) => {
            formula_s_with(*x, *y, *z, &HoleSeq::new(a.clone()), conv)?
        }
        (fam, params) => {
            return Err(FormulaError::BadParameters(format!(
                "parameters {params} do not fit family {fam}"
            )))
        }
    };
    Ok(FormulaResult { spec: spec.clone(), value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    #[test]
    fn halved_hexagon_values() {
        assert_eq!(formula_p(1, 1, 1).unwrap(), int(2));
        assert_eq!(formula_p(2, 2, 1).unwrap(), int(5));
        assert_eq!(formula_p(1, 2, 1).unwrap(), int(3));
        for a in 0..=3 {
            for b in a..=3 {
                assert_eq!(formula_p(a, b, 0).unwrap(), int(1));
            }
        }
        assert!(matches!(
            formula_p(3, 2, 1),
            Err(FormulaError::ParameterOrder { .. })
        ));
    }

    #[test]
    fn weighted_halved_hexagon_values() {
        // a = 0 empties every product
        assert_eq!(formula_pprime(0, 2, 3).unwrap(), int(1));
        assert_eq!(formula_pprime(1, 1, 1).unwrap(), frac(3, 2));
    }

    #[test]
    fn trapezoid_family_values() {
        let q = |t: &[u64]| formula_q(&HoleSeq::new(t.to_vec())).unwrap();
        assert_eq!(q(&[0, 0]), int(1));
        assert_eq!(q(&[1, 1]), int(2));
        assert_eq!(q(&[1, 2]), int(5));
        assert_eq!(q(&[0, 1, 1, 1]), int(4));
        assert_eq!(q(&[1, 1, 0, 2]), int(14));
        assert_eq!(
            formula_qprime(&HoleSeq::from([1, 1])).unwrap(),
            frac(3, 2)
        );
        assert_eq!(formula_qprime(&HoleSeq::from([2, 1])).unwrap(), frac(5, 2));
        assert_eq!(formula_k(&HoleSeq::from([1, 1])).unwrap(), int(1));
        assert_eq!(formula_k(&HoleSeq::from([1, 2])).unwrap(), int(2));
        assert_eq!(formula_k(&HoleSeq::from([0, 1, 1, 1])).unwrap(), int(3));
        assert_eq!(formula_k(&HoleSeq::from([1, 1, 0, 2])).unwrap(), int(5));
        assert_eq!(formula_kprime(&HoleSeq::from([1, 1])).unwrap(), int(1));
        assert_eq!(formula_kprime(&HoleSeq::from([1, 2])).unwrap(), frac(3, 2));
        assert!(matches!(
            formula_q(&HoleSeq::from([1, 1, 1])),
            Err(FormulaError::OddLength { .. })
        ));
    }

    #[test]
    fn h1_reduces_to_halved_hexagon_without_holes() {
        let empty = HoleSeq::default();
        for x in 0..=2 {
            for yz in [(1, 1), (2, 1), (0, 2)] {
                let (y, z) = yz;
                assert_eq!(
                    formula_h1(x, y, z, &empty).unwrap(),
                    formula_p(y + z, y + z, x).unwrap(),
                    "x={x} y={y} z={z}"
                );
            }
        }
    }

    #[test]
    fn h1_base_point() {
        // the x=0 two-hole region splits into two trapezoids: 4 * 5
        assert_eq!(formula_h1(0, 1, 1, &HoleSeq::from([1, 1])).unwrap(), int(20));
    }

    #[test]
    fn padding_a_trailing_zero_is_invariant() {
        let a3 = HoleSeq::from([1, 2, 1]);
        let a4 = HoleSeq::from([1, 2, 1, 0]);
        for m in 1..=8u8 {
            let lhs = formula_h(m, 1, 1, 1, &a3);
            let rhs = formula_h(m, 1, 1, 1, &a4);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => assert_eq!(l, r, "family H{m}"),
                (Err(_), Err(_)) => {}
                (l, r) => panic!("family H{m}: one side failed: {l:?} vs {r:?}"),
            }
        }
    }

    #[test]
    fn s_rejects_parity_mismatch_and_zero_outside_band() {
        let a = HoleSeq::from([2]);
        assert!(matches!(
            formula_s(1, 1, 0, &a),
            Err(FormulaError::ParityMismatch { .. })
        ));
        // band for y=1, E=0 is -1 <= z <= 3; z=5 is outside
        assert_eq!(formula_s(1, 1, 5, &a).unwrap(), int(0));
    }

    #[test]
    fn s_case_one_composes_h2_and_h3() {
        let a = HoleSeq::from([2]);
        let sub = HoleSeq::from([1]);
        let direct = formula_s(0, 1, 0, &a).unwrap();
        let composed = pow2(1)
            * formula_h2(0, 1, 0, &sub).unwrap()
            * formula_h3(0, 1, 0, &sub).unwrap();
        assert_eq!(direct, composed);
    }
}
