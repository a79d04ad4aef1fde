//! Number-theoretic product primitives: rising factorials, their step-two
//! variants, trapezoidal products, hyperfactorials, and the sequence
//! operators used to index hole arrays.
//!
//! All operations are pure and exact. Empty products are 1 everywhere.

use crate::rat::{int, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    /// A reciprocal product hit a zero factor.
    #[error("zero factor in reciprocal product at {context}")]
    ZeroDenominator { context: String },
    /// Argument outside the defining domain.
    #[error("negative argument {value} for {context}")]
    NegativeArgument { value: i64, context: String },
    /// Prefix-sum index past the end of the sequence.
    #[error("index {index} out of range for sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, CombinatError>;

/// Rising factorial `(x)_n`.
///
/// `x(x+1)...(x+n-1)` for `n > 0`, `1` for `n = 0`, and the reciprocal
/// `1/((x-1)(x-2)...(x+n))` for `n < 0`.
pub fn pochhammer(x: &Rat, n: i64) -> Result<Rat> {
    stepped_pochhammer(x, n, 1)
}

/// Step-two rising factorial `[x]_n`.
///
/// `x(x+2)...(x+2(n-1))` for `n > 0`, `1` for `n = 0`, and the reciprocal
/// `1/((x-2)(x-4)...(x+2n))` for `n < 0`.
pub fn skip_pochhammer(x: &Rat, n: i64) -> Result<Rat> {
    stepped_pochhammer(x, n, 2)
}

fn stepped_pochhammer(x: &Rat, n: i64, step: i64) -> Result<Rat> {
    let step = int(step);
    if n >= 0 {
        let mut acc = Rat::one();
        let mut factor = x.clone();
        for _ in 0..n {
            acc *= &factor;
            factor += &step;
        }
        Ok(acc)
    } else {
        // factors x-step, x-2*step, ..., x+n*step
        let mut acc = Rat::one();
        let mut factor = x - &step;
        for _ in 0..(-n) {
            if factor.is_zero() {
                return Err(CombinatError::ZeroDenominator {
                    context: format!("({})_{} with step {}", x, n, step),
                });
            }
            acc *= &factor;
            factor -= &step;
        }
        Ok(acc.recip())
    }
}

/// Trapezoidal product `T(x,n,m) = prod_{i=0}^{m-1} (x+i)_{n-2i}`.
pub fn trapezoid_t(x: &Rat, n: i64, m: i64) -> Result<Rat> {
    if m < 0 {
        return Err(CombinatError::NegativeArgument {
            value: m,
            context: "trapezoid_t".into(),
        });
    }
    let mut acc = Rat::one();
    for i in 0..m {
        acc *= pochhammer(&(x + int(i)), n - 2 * i)?;
    }
    Ok(acc)
}

/// Trapezoidal product `V(x,n,m) = prod_{i=0}^{m-1} [x+2i]_{n-2i}`.
pub fn trapezoid_v(x: &Rat, n: i64, m: i64) -> Result<Rat> {
    if m < 0 {
        return Err(CombinatError::NegativeArgument {
            value: m,
            context: "trapezoid_v".into(),
        });
    }
    let mut acc = Rat::one();
    for i in 0..m {
        acc *= skip_pochhammer(&(x + int(2 * i)), n - 2 * i)?;
    }
    Ok(acc)
}

/// `n!` as a rational. Errors on negative `n`.
pub fn factorial(n: i64) -> Result<Rat> {
    if n < 0 {
        return Err(CombinatError::NegativeArgument {
            value: n,
            context: "factorial".into(),
        });
    }
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Ok(Rat::from_integer(acc))
}

/// Hyperfactorial `H(n) = 0! 1! 2! ... (n-1)!`.
pub fn hyperfactorial(n: i64) -> Result<Rat> {
    if n < 0 {
        return Err(CombinatError::NegativeArgument {
            value: n,
            context: "hyperfactorial".into(),
        });
    }
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for i in 1..n {
        fact *= i;
        acc *= &fact;
    }
    Ok(Rat::from_integer(acc))
}

/// Which factorials the odd case of [`hyperfactorial2`] multiplies.
///
/// The even case is unambiguous (`0! 2! 4! ... (n-2)!`). For odd `n` two
/// readings are possible; `calibrate_geometry` in the verify module resolves
/// which one reproduces brute-force tiling counts, and `Strict` is the
/// frozen winner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum H2OddCase {
    /// `1! 3! 5! ... (n-2)!` — every other factorial, like the even case.
    #[default]
    Strict,
    /// `1! 2! 3! ... (n-2)!` — all factorials from 1 up.
    Consecutive,
}

/// Step-two hyperfactorial `H2(n)` under the frozen odd-case reading.
pub fn hyperfactorial2(n: i64) -> Result<Rat> {
    hyperfactorial2_with(n, H2OddCase::Strict)
}

/// Step-two hyperfactorial with an explicit odd-case reading (calibration).
pub fn hyperfactorial2_with(n: i64, odd: H2OddCase) -> Result<Rat> {
    if n < 0 {
        return Err(CombinatError::NegativeArgument {
            value: n,
            context: "hyperfactorial2".into(),
        });
    }
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    if n % 2 == 0 {
        // 0! * 2! * 4! * ... * (n-2)!
        for i in 1..=n - 2 {
            fact *= i;
            if i % 2 == 0 {
                acc *= &fact;
            }
        }
    } else {
        match odd {
            H2OddCase::Strict => {
                // 1! * 3! * 5! * ... * (n-2)!
                for i in 1..=n - 2 {
                    fact *= i;
                    if i % 2 == 1 {
                        acc *= &fact;
                    }
                }
            }
            H2OddCase::Consecutive => {
                // 1! * 2! * 3! * ... * (n-2)!
                for i in 1..=n - 2 {
                    fact *= i;
                    acc *= &fact;
                }
            }
        }
    }
    Ok(Rat::from_integer(acc))
}

/// A finite sequence of non-negative integers describing a hole array,
/// with the index conventions all the product formulas rely on (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HoleSeq {
    entries: Vec<u64>,
}

impl HoleSeq {
    pub fn new(entries: Vec<u64>) -> Self {
        HoleSeq { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the odd-indexed entries `a_1 + a_3 + ...`.
    pub fn sum_odd(&self) -> i64 {
        self.entries.iter().step_by(2).map(|&v| v as i64).sum()
    }

    /// Sum of the even-indexed entries `a_2 + a_4 + ...`.
    pub fn sum_even(&self) -> i64 {
        self.entries.iter().skip(1).step_by(2).map(|&v| v as i64).sum()
    }

    /// Prefix sum `a_1 + ... + a_k`. `k = 0` gives 0; `k > len` is an error.
    pub fn prefix(&self, k: usize) -> Result<i64> {
        if k > self.entries.len() {
            return Err(CombinatError::IndexOutOfRange {
                index: k,
                len: self.entries.len(),
            });
        }
        Ok(self.entries[..k].iter().map(|&v| v as i64).sum())
    }

    /// Tail sum over odd positions: `sum_{i >= k} a_{2i-1}`.
    pub fn tail_odd(&self, k: usize) -> i64 {
        assert!(k >= 1, "tail sums are 1-based");
        self.entries
            .iter()
            .skip(2 * k - 2)
            .step_by(2)
            .map(|&v| v as i64)
            .sum()
    }

    /// Tail sum over even positions: `sum_{i >= k} a_{2i}`.
    pub fn tail_even(&self, k: usize) -> i64 {
        assert!(k >= 1, "tail sums are 1-based");
        self.entries
            .iter()
            .skip(2 * k - 1)
            .step_by(2)
            .map(|&v| v as i64)
            .sum()
    }

    /// Copy with a trailing zero appended.
    pub fn padded(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.push(0);
        HoleSeq { entries }
    }
}

impl From<&[u64]> for HoleSeq {
    fn from(s: &[u64]) -> Self {
        HoleSeq::new(s.to_vec())
    }
}

impl<const N: usize> From<[u64; N]> for HoleSeq {
    fn from(s: [u64; N]) -> Self {
        HoleSeq::new(s.to_vec())
    }
}

/// Free-function spellings of the sequence operators.
pub fn seq_o_sum(a: &HoleSeq) -> i64 {
    a.sum_odd()
}
pub fn seq_e_sum(a: &HoleSeq) -> i64 {
    a.sum_even()
}
pub fn seq_s(a: &HoleSeq, k: usize) -> Result<i64> {
    if k < 1 || k > a.len() {
        return Err(CombinatError::IndexOutOfRange { index: k, len: a.len() });
    }
    a.prefix(k)
}
pub fn seq_o(a: &HoleSeq, k: usize) -> i64 {
    a.tail_odd(k)
}
pub fn seq_e(a: &HoleSeq, k: usize) -> i64 {
    a.tail_even(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    #[test]
    fn pochhammer_base_cases() {
        // (5)_0 = 1, (3)_2 = 12, (5)_{-2} = 1/12
        assert_eq!(pochhammer(&int(5), 0).unwrap(), int(1));
        assert_eq!(pochhammer(&int(3), 2).unwrap(), int(12));
        assert_eq!(pochhammer(&int(5), -2).unwrap(), frac(1, 12));
    }

    #[test]
    fn pochhammer_zero_factor_is_an_error() {
        let err = pochhammer(&int(1), -2).unwrap_err();
        assert!(matches!(err, CombinatError::ZeroDenominator { .. }));
    }

    #[test]
    fn skip_pochhammer_base_cases() {
        // [1]_2 = 3, [7]_0 = 1, [6]_{-1} = 1/4
        assert_eq!(skip_pochhammer(&int(1), 2).unwrap(), int(3));
        assert_eq!(skip_pochhammer(&int(7), 0).unwrap(), int(1));
        assert_eq!(skip_pochhammer(&int(6), -1).unwrap(), frac(1, 4));
    }

    #[test]
    fn trapezoid_products() {
        // T(2,3,0) = 1, T(2,3,2) = (2)_3 (3)_1 = 72, T(1,1,1) = 1
        assert_eq!(trapezoid_t(&int(2), 3, 0).unwrap(), int(1));
        assert_eq!(trapezoid_t(&int(2), 3, 2).unwrap(), int(72));
        assert_eq!(trapezoid_t(&int(1), 1, 1).unwrap(), int(1));
        // V(1,2,1) = [1]_2 = 3, V(9,4,0) = 1
        // V(1,4,2) = [1]_4 [3]_2 = (1*3*5*7)*(3*5) = 1575
        assert_eq!(trapezoid_v(&int(1), 2, 1).unwrap(), int(3));
        assert_eq!(trapezoid_v(&int(9), 4, 0).unwrap(), int(1));
        assert_eq!(trapezoid_v(&int(1), 4, 2).unwrap(), int(1575));
    }

    #[test]
    fn hyperfactorials() {
        assert_eq!(hyperfactorial(0).unwrap(), int(1));
        assert_eq!(hyperfactorial(1).unwrap(), int(1));
        assert_eq!(hyperfactorial(4).unwrap(), int(12));
        // even case: H2(6) = 0! 2! 4! = 48; H2(2) = 0! = 1
        assert_eq!(hyperfactorial2(6).unwrap(), int(48));
        assert_eq!(hyperfactorial2(2).unwrap(), int(1));
        // odd case under the frozen reading: H2(5) = 1! 3! = 6
        assert_eq!(hyperfactorial2(5).unwrap(), int(6));
        assert_eq!(
            hyperfactorial2_with(5, H2OddCase::Consecutive).unwrap(),
            int(12)
        );
        assert!(hyperfactorial(-1).is_err());
    }

    #[test]
    fn sequence_operators() {
        let a = HoleSeq::from([1, 2, 3]);
        assert_eq!(a.sum_odd(), 4);
        assert_eq!(a.sum_even(), 2);
        assert_eq!(seq_e(&a, 1), 2);
        assert_eq!(seq_o(&a, 2), 3);
        assert_eq!(seq_s(&a, 3).unwrap(), 6);
        assert!(seq_s(&a, 4).is_err());
    }
}
