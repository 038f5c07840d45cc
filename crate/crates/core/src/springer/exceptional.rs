//! Good W-types for exceptional dual algebras, as static Carter labels
//! `phi_{d,b}` (degree `d`, fake degree `b`; primes distinguish equal pairs).

use crate::orbits::{Exceptional, Which};

fn regular(e: Exceptional) -> &'static [&'static str] {
    match e {
        Exceptional::G2 => &["phi_{1,0}", "phi_{1,6}"],
        Exceptional::F4 => &["phi_{1,0}", "phi_{1,24}"],
        Exceptional::E6 => &["phi_{1,0}", "phi_{1,36}"],
        Exceptional::E7 => &["phi_{1,0}", "phi_{1,63}"],
        Exceptional::E8 => &["phi_{1,0}", "phi_{1,120}"],
    }
}

fn subregular_extra(e: Exceptional) -> &'static [&'static str] {
    match e {
        Exceptional::G2 => &["phi'_{1,3}", "phi''_{1,3}", "phi_{2,1}", "phi_{2,2}"],
        Exceptional::F4 => &["phi_{4,1}", "phi_{4,13}", "phi'_{2,4}", "phi''_{2,16}"],
        Exceptional::E6 => &["phi_{6,1}", "phi_{6,25}"],
        Exceptional::E7 => &["phi_{7,1}", "phi_{7,46}"],
        Exceptional::E8 => &["phi_{8,1}", "phi_{8,91}"],
    }
}

fn subsubregular_extra(e: Exceptional) -> &'static [&'static str] {
    match e {
        Exceptional::G2 => &[],
        Exceptional::F4 => &[
            "phi_{9,2}",
            "phi_{9,10}",
            "phi''_{8,3}",
            "phi'_{8,3}",
            "phi'_{8,9}",
            "phi''_{8,9}",
            "phi''_{2,4}",
            "phi'_{2,16}",
        ],
        Exceptional::E6 => &["phi_{20,2}", "phi_{20,20}"],
        Exceptional::E7 => &["phi_{27,2}", "phi_{27,37}", "phi_{21,3}", "phi_{21,36}"],
        Exceptional::E8 => &["phi_{35,2}", "phi_{35,74}"],
    }
}

/// Cumulative good list; the caller has already checked that `which` is defined for `e`.
pub(super) fn good_labels(e: Exceptional, which: Which) -> Vec<&'static str> {
    let mut out = regular(e).to_vec();
    if which >= Which::Subregular {
        out.extend_from_slice(subregular_extra(e));
    }
    if which >= Which::Subsubregular {
        out.extend_from_slice(subsubregular_extra(e));
    }
    out
}
