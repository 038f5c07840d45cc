//! The certificate engine: Dirac-inequality checks on a declared module
//! profile, spectral-gap regions and the `⊗ refl` link graph.
//!
//! Verdicts are one-sided. The engine can prove non-unitarity or pin the
//! parameter to an orbit; it never asserts unitarity.

mod gaps;
mod link;

pub use gaps::{gap_bounds, spectral_gap, ssr_gap_bounds, GapBounds, GapRegion, GapReport};
pub use link::{refl_link_graph, springer_high, LinkGraph};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{h_half, h_half_norm_sq, special_orbit, w_orbit_contains, DualType, HVector, Orbit, Which};
use crate::rational::{self, Rational};
use crate::springer::{good_set, theta_hit};
use crate::weyl::{WType, WTypeSpec};

/// What is known about a module: its central character `ν` and the W-types
/// of its restriction to `W`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawProfile", into = "RawProfile")]
pub struct ModuleProfile {
    dual_type: DualType,
    nu: Vec<Rational>,
    wtypes: Vec<WType>,
    is_hermitian: bool,
}

#[derive(Serialize, Deserialize)]
struct RawProfile {
    dual_type: DualType,
    #[serde(with = "rational::serde_vec")]
    nu: Vec<Rational>,
    wtypes: Vec<WTypeSpec>,
    #[serde(default = "yes")]
    is_hermitian: bool,
}

fn yes() -> bool {
    true
}

impl TryFrom<RawProfile> for ModuleProfile {
    type Error = Error;

    fn try_from(raw: RawProfile) -> Result<Self> {
        let w = raw.dual_type.weyl_type()?;
        let wtypes = raw
            .wtypes
            .iter()
            .map(|s| WType::from_spec(w, s))
            .collect::<Result<Vec<_>>>()?;
        let mut p = ModuleProfile::new(raw.dual_type, raw.nu, wtypes)?;
        p.is_hermitian = raw.is_hermitian;
        Ok(p)
    }
}

impl From<ModuleProfile> for RawProfile {
    fn from(p: ModuleProfile) -> Self {
        RawProfile {
            dual_type: p.dual_type,
            nu: p.nu,
            wtypes: p.wtypes.iter().map(WType::to_spec).collect(),
            is_hermitian: p.is_hermitian,
        }
    }
}

impl ModuleProfile {
    pub fn new(dual_type: DualType, nu: Vec<Rational>, wtypes: Vec<WType>) -> Result<Self> {
        let w = dual_type.weyl_type()?;
        if nu.len() != dual_type.coordinate_len() {
            return Err(Error::CoordinateLength { expected: dual_type.coordinate_len(), got: nu.len() });
        }
        if let DualType::Sl(_) = dual_type {
            if nu.iter().sum::<Rational>() != rational::zero() {
                return Err(Error::Malformed("sl(n) parameters must have coordinate sum 0".into()));
            }
        }
        if wtypes.is_empty() {
            return Err(Error::Malformed("a profile needs at least one W-type".into()));
        }
        for s in &wtypes {
            s.check(w)?;
        }
        Ok(ModuleProfile { dual_type, nu, wtypes, is_hermitian: true })
    }

    pub fn with_hermitian(mut self, is_hermitian: bool) -> Self {
        self.is_hermitian = is_hermitian;
        self
    }

    pub fn dual_type(&self) -> DualType {
        self.dual_type
    }

    pub fn nu(&self) -> &[Rational] {
        &self.nu
    }

    pub fn wtypes(&self) -> &[WType] {
        &self.wtypes
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_hermitian
    }

    /// The Iwahori–Matsumoto dual profile: every W-type tensored with `sgn`.
    pub fn sign_twist(&self) -> ModuleProfile {
        ModuleProfile {
            wtypes: self.wtypes.iter().map(WType::sign_twist).collect(),
            ..self.clone()
        }
    }

    /// The same profile at `c·ν`.
    pub fn scaled(&self, c: &Rational) -> ModuleProfile {
        ModuleProfile {
            nu: self.nu.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    pub fn nu_norm_sq(&self) -> Rational {
        rational::norm_sq(&self.nu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    NonUnitary,
    ConstrainedToOrbit,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NonUnitary => "NonUnitary",
            Verdict::ConstrainedToOrbit => "ConstrainedToOrbit",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    GlobalBound,
    GoodType,
    OrbitRigidity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub orbit: Orbit,
    pub rule: Rule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wtype: Option<WTypeSpec>,
    #[serde(with = "rational::serde_str")]
    pub nu_norm_sq: Rational,
    #[serde(with = "rational::serde_str")]
    pub h_half_norm_sq: Rational,
}

/// The orbit a module is pinned to at equality, and whether `ν ∈ W·h∨/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub orbit: Orbit,
    pub h_half: HVector,
    pub nu_in_w_orbit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraint: Option<Constraint>,
    pub region: String,
    pub log: Vec<String>,
}

const ORBITS: [Which; 3] = [Which::Regular, Which::Subregular, Which::Subsubregular];

/// Applies, in order: the global bound, the good-type test for each covered
/// orbit, and equality rigidity. Uncovered orbits are skipped with a log line.
pub fn certify(p: &ModuleProfile) -> Result<CertificateReport> {
    let t = p.dual_type;
    let nn = p.nu_norm_sq();
    let mut log = Vec::new();
    let region = match spectral_gap(t, &nn) {
        Ok(r) => r.description,
        Err(e) => format!("unclassified: {e}"),
    };
    let report = |verdict, witnesses, constraint, log| CertificateReport {
        verdict,
        witnesses,
        constraint,
        region: region.clone(),
        log,
    };
    if !p.is_hermitian {
        log.push("profile is not hermitian; the Dirac inequality does not apply".into());
        return Ok(report(Verdict::Inconclusive, vec![], None, log));
    }

    let mut usable = Vec::new();
    for s in &p.wtypes {
        if s.is_split() {
            log.push(format!("split type {s} is not used for certificates"));
        } else if !usable.contains(&s) {
            usable.push(s);
        }
    }

    let regular = special_orbit(t, Which::Regular)?;
    let reg_norm = h_half_norm_sq(&regular)?;
    if nn > reg_norm {
        let w = Witness {
            orbit: regular,
            rule: Rule::GlobalBound,
            wtype: None,
            nu_norm_sq: nn,
            h_half_norm_sq: reg_norm,
        };
        return Ok(report(Verdict::NonUnitary, vec![w], None, log));
    }

    // Orbits whose norm is at most |ν|², with their Good sets where available.
    let mut covered = Vec::new();
    for which in ORBITS {
        let orbit = match special_orbit(t, which) {
            Ok(o) => o,
            Err(e) => {
                log.push(format!("{which}: skipped ({e})"));
                continue;
            }
        };
        let h = h_half_norm_sq(&orbit)?;
        if nn < h {
            continue;
        }
        covered.push((which, orbit, h));
    }

    let mut witnesses = Vec::new();
    for (which, orbit, h) in &covered {
        let good = match good_set(t, *which) {
            Ok(g) => g,
            Err(e) if e.is_hypothesis() => {
                log.push(format!("{which}: good-type test skipped ({e})"));
                continue;
            }
            Err(e) => return Err(e),
        };
        for s in &usable {
            if !good.contains(s) {
                witnesses.push(Witness {
                    orbit: orbit.clone(),
                    rule: Rule::GoodType,
                    wtype: Some(s.to_spec()),
                    nu_norm_sq: nn.clone(),
                    h_half_norm_sq: h.clone(),
                });
            }
        }
    }
    if !witnesses.is_empty() {
        return Ok(report(Verdict::NonUnitary, witnesses, None, log));
    }

    for (which, orbit, h) in &covered {
        if nn != *h {
            continue;
        }
        let mut hit = None;
        for s in &usable {
            match theta_hit(t, *which, s) {
                Ok(true) => {
                    hit = Some(*s);
                    break;
                }
                Ok(false) => {}
                Err(e) if e.is_hypothesis() => {
                    log.push(format!("{which}: rigidity test skipped ({e})"));
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        let Some(s) = hit else { continue };
        let target = h_half(orbit)?;
        let inside = w_orbit_contains(t, &p.nu, &target)?;
        let constraint = Constraint { orbit: orbit.clone(), h_half: target, nu_in_w_orbit: inside };
        if inside {
            log.push(format!("{s} meets the {which} orbit; nu is in W.h/2"));
            return Ok(report(Verdict::ConstrainedToOrbit, vec![], Some(constraint), log));
        }
        let w = Witness {
            orbit: orbit.clone(),
            rule: Rule::OrbitRigidity,
            wtype: Some(s.to_spec()),
            nu_norm_sq: nn.clone(),
            h_half_norm_sq: h.clone(),
        };
        log.push(format!("{s} meets the {which} orbit but nu is not in W.h/2"));
        return Ok(report(Verdict::NonUnitary, vec![w], Some(constraint), log));
    }

    Ok(report(Verdict::Inconclusive, vec![], None, log))
}
