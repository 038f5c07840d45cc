//! Static data for exceptional dual Lie algebras. Only the orbits needed by
//! the certificate engine are carried: regular, subregular, sub-subregular
//! (where defined) and the minimal solvable orbit. All of them lie in the
//! solvable-centralizer locus and form a chain under closure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Exceptional {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Exceptional {
    pub const ALL: [Exceptional; 5] = [
        Exceptional::G2,
        Exceptional::F4,
        Exceptional::E6,
        Exceptional::E7,
        Exceptional::E8,
    ];

    pub fn rank(self) -> usize {
        match self {
            Exceptional::G2 => 2,
            Exceptional::F4 => 4,
            Exceptional::E6 => 6,
            Exceptional::E7 => 7,
            Exceptional::E8 => 8,
        }
    }

    pub fn positive_roots(self) -> usize {
        match self {
            Exceptional::G2 => 6,
            Exceptional::F4 => 24,
            Exceptional::E6 => 36,
            Exceptional::E7 => 63,
            Exceptional::E8 => 120,
        }
    }

    /// Carried orbits, largest first: regular, subregular, [sub-subregular], minimal.
    pub fn carried_orbits(self) -> &'static [&'static str] {
        match self {
            Exceptional::G2 => &["G2", "G2(a1)"],
            Exceptional::F4 => &["F4", "F4(a1)", "F4(a2)", "F4(a3)"],
            Exceptional::E6 => &["E6", "E6(a1)", "D5", "D4(a1)"],
            Exceptional::E7 => &["E7", "E7(a1)", "E7(a2)", "A4+A1"],
            Exceptional::E8 => &["E8", "E8(a1)", "E8(a2)", "E8(a7)"],
        }
    }

    pub fn regular(self) -> &'static str {
        self.carried_orbits()[0]
    }

    pub fn subregular(self) -> &'static str {
        self.carried_orbits()[1]
    }

    /// Defined for rank at least 4.
    pub fn subsubregular(self) -> Option<&'static str> {
        (self.rank() >= 4).then(|| self.carried_orbits()[2])
    }

    pub fn o_min(self) -> &'static str {
        self.carried_orbits().last().expect("non-empty")
    }
}

impl fmt::Display for Exceptional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Exceptional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Exceptional::ALL
            .into_iter()
            .find(|e| e.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidDualType(s.to_string()))
    }
}
