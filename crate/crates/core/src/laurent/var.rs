use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Variable families. Declaration order fixes the variable order used for
/// canonical printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    X,
    Y,
    Z0,
    S,
    T,
    Q,
    A0,
    B0,
    A1,
    A2,
    B1,
    B2,
    A,
    B,
    C,
    U0,
    Eps,
}

impl Family {
    const ALL: [Family; 17] = [
        Family::X,
        Family::Y,
        Family::Z0,
        Family::S,
        Family::T,
        Family::Q,
        Family::A0,
        Family::B0,
        Family::A1,
        Family::A2,
        Family::B1,
        Family::B2,
        Family::A,
        Family::B,
        Family::C,
        Family::U0,
        Family::Eps,
    ];

    pub fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z0 => "z0",
            Family::S => "s",
            Family::T => "t",
            Family::Q => "q",
            Family::A0 => "a0",
            Family::B0 => "b0",
            Family::A1 => "a1_",
            Family::A2 => "a2_",
            Family::B1 => "b1_",
            Family::B2 => "b2_",
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::U0 => "u0",
            Family::Eps => "eps",
        }
    }

    /// Families whose only member is index 0 (printed without a number).
    pub fn indexless(self) -> bool {
        matches!(self, Family::Z0 | Family::A0 | Family::B0 | Family::U0)
    }
}

/// A named indeterminate such as `x3`, `z0`, `b2_1` or the bare `t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    pub family: Family,
    pub index: u16,
}

impl VarId {
    pub const fn new(family: Family, index: u16) -> Self {
        VarId { family, index }
    }
}

pub fn x(i: usize) -> VarId {
    VarId::new(Family::X, i as u16)
}
pub fn y(i: usize) -> VarId {
    VarId::new(Family::Y, i as u16)
}
pub fn z0() -> VarId {
    VarId::new(Family::Z0, 0)
}
pub fn s(i: usize) -> VarId {
    VarId::new(Family::S, i as u16)
}
/// `t(0)` is the single deformation parameter printed as `t`.
pub fn t(i: usize) -> VarId {
    VarId::new(Family::T, i as u16)
}
pub fn q(i: usize) -> VarId {
    VarId::new(Family::Q, i as u16)
}
pub fn c(i: usize) -> VarId {
    VarId::new(Family::C, i as u16)
}
pub fn a(i: usize) -> VarId {
    VarId::new(Family::A, i as u16)
}
pub fn b(i: usize) -> VarId {
    VarId::new(Family::B, i as u16)
}
pub fn a0() -> VarId {
    VarId::new(Family::A0, 0)
}
pub fn b0() -> VarId {
    VarId::new(Family::B0, 0)
}
pub fn a1(i: usize) -> VarId {
    VarId::new(Family::A1, i as u16)
}
pub fn a2(i: usize) -> VarId {
    VarId::new(Family::A2, i as u16)
}
pub fn b1(i: usize) -> VarId {
    VarId::new(Family::B1, i as u16)
}
pub fn b2(i: usize) -> VarId {
    VarId::new(Family::B2, i as u16)
}
pub fn u0() -> VarId {
    VarId::new(Family::U0, 0)
}
pub fn eps() -> VarId {
    VarId::new(Family::Eps, 0)
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.family.prefix();
        if self.family.indexless() || (self.index == 0 && matches!(self.family, Family::T | Family::Eps)) {
            write!(f, "{p}")
        } else {
            write!(f, "{p}{}", self.index)
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for VarId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        // Longest prefix first so that `a1_2` is not read as family `a`.
        let mut fams: Vec<Family> = Family::ALL.to_vec();
        fams.sort_by_key(|f| std::cmp::Reverse(f.prefix().len()));
        for fam in fams {
            let Some(rest) = s.strip_prefix(fam.prefix()) else { continue };
            if fam.indexless() {
                if rest.is_empty() {
                    return Ok(VarId::new(fam, 0));
                }
                continue;
            }
            if rest.is_empty() {
                if matches!(fam, Family::T | Family::Eps) {
                    return Ok(VarId::new(fam, 0));
                }
                continue;
            }
            if let Ok(idx) = rest.parse::<u16>() {
                if !rest.starts_with('+') {
                    return Ok(VarId::new(fam, idx));
                }
            }
        }
        Err(format!("unknown variable {s:?}"))
    }
}

impl Serialize for VarId {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for VarId {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
