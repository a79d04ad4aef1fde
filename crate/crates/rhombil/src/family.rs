//! Region family tags and their parameter records.

use crate::combinat::HoleSeq;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The region families this crate can build and evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    P,
    Pprime,
    Q,
    Qprime,
    K,
    Kprime,
    /// Defected halved hexagons, variants 1 through 8.
    H(u8),
    S,
}

impl Family {
    pub const ALL: [Family; 15] = [
        Family::P,
        Family::Pprime,
        Family::Q,
        Family::Qprime,
        Family::K,
        Family::Kprime,
        Family::H(1),
        Family::H(2),
        Family::H(3),
        Family::H(4),
        Family::H(5),
        Family::H(6),
        Family::H(7),
        Family::H(8),
        Family::S,
    ];

    /// Families whose tiling numbers may be non-integer dyadic rationals.
    pub fn is_weighted(self) -> bool {
        matches!(
            self,
            Family::Pprime | Family::Qprime | Family::Kprime | Family::H(3..=8)
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::P => write!(f, "P"),
            Family::Pprime => write!(f, "Pp"),
            Family::Q => write!(f, "Q"),
            Family::Qprime => write!(f, "Qp"),
            Family::K => write!(f, "K"),
            Family::Kprime => write!(f, "Kp"),
            Family::H(m) => write!(f, "H{}", m),
            Family::S => write!(f, "S"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" => Ok(Family::P),
            "Pp" | "P'" => Ok(Family::Pprime),
            "Q" => Ok(Family::Q),
            "Qp" | "Q'" => Ok(Family::Qprime),
            "K" => Ok(Family::K),
            "Kp" | "K'" => Ok(Family::Kprime),
            "S" => Ok(Family::S),
            _ => {
                if let Some(m) = s.strip_prefix('H') {
                    let m: u8 = m.parse().map_err(|_| format!("unknown family {s}"))?;
                    if (1..=8).contains(&m) {
                        return Ok(Family::H(m));
                    }
                }
                Err(format!("unknown family {s}"))
            }
        }
    }
}

/// Parameters for one region, matched to its family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Params {
    /// Halved hexagons P, P': side parameters `a <= b`, `c`.
    Abc { a: i64, b: i64, c: i64 },
    /// Trapezoid families Q, Q', K, K': an even-length hole sequence.
    Seq { t: Vec<u64> },
    /// H-families and S: corner parameters plus a hole sequence.
    Xyza { x: i64, y: i64, z: i64, a: Vec<u64> },
}

impl Params {
    pub fn seq(&self) -> Option<HoleSeq> {
        match self {
            Params::Seq { t } => Some(HoleSeq::new(t.clone())),
            Params::Xyza { a, .. } => Some(HoleSeq::new(a.clone())),
            Params::Abc { .. } => None,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Abc { a, b, c } => write!(f, "a={a} b={b} c={c}"),
            Params::Seq { t } => write!(
                f,
                "t=({})",
                t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ),
            Params::Xyza { x, y, z, a } => write!(
                f,
                "x={x} y={y} z={z} a=({})",
                a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }
}

/// A family together with its parameters; names one concrete region.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionSpec {
    pub family: Family,
    pub params: Params,
}

impl fmt::Display for RegionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.family, self.params)
    }
}
