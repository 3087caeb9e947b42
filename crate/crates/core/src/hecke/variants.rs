use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::linalg::{monoid_closure, Transformation};

/// Generating sets for monoids of operators on the basis of `kW`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonoidVariant {
    /// `{s_i, π_i}`
    SPi,
    /// `{π_i, π̄_i}`
    PiPibar,
}

impl fmt::Display for MonoidVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonoidVariant::SPi => "s-pi",
            MonoidVariant::PiPibar => "pi-pibar",
        })
    }
}

impl FromStr for MonoidVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s-pi" => Ok(MonoidVariant::SPi),
            "pi-pibar" => Ok(MonoidVariant::PiPibar),
            _ => Err(Error::Parse(format!("unknown monoid variant {s:?}; expected s-pi or pi-pibar"))),
        }
    }
}

fn as_map(group: &CoxeterGroup, f: impl Fn(crate::coxeter::Element) -> crate::coxeter::Element) -> Transformation {
    Transformation(group.elements().map(|w| f(w).0 as u32).collect())
}

/// Generators of the variant as maps on `W`.
pub fn variant_generators(group: &CoxeterGroup, variant: MonoidVariant) -> Vec<Transformation> {
    let mut out = Vec::new();
    for s in group.generators() {
        match variant {
            MonoidVariant::SPi => out.push(as_map(group, |w| group.act_s(w, s))),
            MonoidVariant::PiPibar => out.push(as_map(group, |w| group.act_pibar(w, s))),
        }
        out.push(as_map(group, |w| group.act_pi(w, s)));
    }
    out
}

/// All elements of the monoid, identity included.
pub fn variant_monoid(
    group: &CoxeterGroup,
    variant: MonoidVariant,
    limit: Option<usize>,
) -> Result<Vec<Transformation>> {
    let gens = variant_generators(group, variant);
    monoid_closure(&gens, Transformation::identity(group.order()), |a, b| a.then(b), limit)
}
