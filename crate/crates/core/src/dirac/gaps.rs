use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{h_half_norm_sq, special_orbit, DualType, Which};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapRegion {
    AboveRegular,
    EndpointRegular,
    SrRegularGap,
    EqualsSubregular,
    SsrSrGap,
    EqualsSubsubregular,
    Below,
}

impl GapRegion {
    pub fn description(self) -> &'static str {
        match self {
            GapRegion::AboveRegular => "above-regular: no unitary subquotients",
            GapRegion::EndpointRegular => "endpoint: only trivial and Steinberg",
            GapRegion::SrRegularGap => "(sr,r) gap: no unitary subquotients",
            GapRegion::EqualsSubregular => "equals-sr: unitary modules only at W.h_sr/2",
            GapRegion::SsrSrGap => "(ssr,sr) gap: no unitary subquotients",
            GapRegion::EqualsSubsubregular => "equals-ssr: unitary modules only at W.h_ssr/2",
            GapRegion::Below => "below: no assertion",
        }
    }
}

impl fmt::Display for GapRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.description())
    }
}

/// Squared endpoint norms `|h∨/2|²` of the regular, subregular and (where
/// the gap theorem applies) sub-subregular orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapBounds {
    #[serde(with = "rational::serde_str")]
    pub regular: Rational,
    #[serde(with = "rational::serde_str")]
    pub subregular: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub subsubregular: Option<Rational>,
}

mod opt_rational {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&crate::rational::to_string(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| crate::rational::parse(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub dual_type: DualType,
    #[serde(with = "rational::serde_str")]
    pub norm_sq: Rational,
    pub region: GapRegion,
    pub description: String,
    pub bounds: GapBounds,
}

fn check_gap_type(t: DualType) -> Result<()> {
    if !t.is_classical() {
        return Err(Error::UseStaticTable(t.to_string()));
    }
    if !t.is_simple() || t.rank() < 2 {
        return Err(Error::Hypothesis(format!("spectral gaps need a simple algebra of rank >= 2, got {t}")));
    }
    Ok(())
}

/// Endpoints of the `(ssr, sr)` gap. Refused for `sp`, `so(2n)` and rank below 4.
pub fn ssr_gap_bounds(t: DualType) -> Result<(Rational, Rational)> {
    check_gap_type(t)?;
    match t.family().as_str() {
        "C" => return Err(Error::Hypothesis("the (ssr,sr) gap hypothesis excludes symplectic algebras".into())),
        "D" => return Err(Error::Hypothesis("the (ssr,sr) gap hypothesis excludes even orthogonal algebras".into())),
        _ => {}
    }
    let ssr = h_half_norm_sq(&special_orbit(t, Which::Subsubregular)?)?;
    let sr = h_half_norm_sq(&special_orbit(t, Which::Subregular)?)?;
    Ok((ssr, sr))
}

pub fn gap_bounds(t: DualType) -> Result<GapBounds> {
    check_gap_type(t)?;
    Ok(GapBounds {
        regular: h_half_norm_sq(&special_orbit(t, Which::Regular)?)?,
        subregular: h_half_norm_sq(&special_orbit(t, Which::Subregular)?)?,
        subsubregular: ssr_gap_bounds(t).ok().map(|(ssr, _)| ssr),
    })
}

/// Region of the parameter norm `|ν|²` relative to the gap endpoints.
pub fn spectral_gap(t: DualType, norm_sq: &Rational) -> Result<GapReport> {
    let bounds = gap_bounds(t)?;
    let x = norm_sq;
    let region = if *x > bounds.regular {
        GapRegion::AboveRegular
    } else if *x == bounds.regular {
        GapRegion::EndpointRegular
    } else if *x > bounds.subregular {
        GapRegion::SrRegularGap
    } else if *x == bounds.subregular {
        GapRegion::EqualsSubregular
    } else {
        match &bounds.subsubregular {
            Some(ssr) if x > ssr => GapRegion::SsrSrGap,
            Some(ssr) if x == ssr => GapRegion::EqualsSubsubregular,
            _ => GapRegion::Below,
        }
    };
    Ok(GapReport {
        dual_type: t,
        norm_sq: norm_sq.clone(),
        region,
        description: region.description().to_string(),
        bounds,
    })
}
