//! Left-orderability of integral surgeries on genus one fibered knots.
//!
//! The verdicts only ever restate known results:
//!
//! * trace > 2: the punctured torus bundle carries a suspension Anosov flow
//!   with orientable foliations, the knot is a closed orbit, and every
//!   integral surgery has left-orderable fundamental group (Fenley).
//! * trace < -2: Roberts–Shareshian rule out left orders for every
//!   surgery slope `n > 0`; nothing is claimed for `n ≤ 0`.
//! * |trace| ≤ 2: every surgery is Seifert fibered. Deciding those needs
//!   the Seifert invariants and is not attempted here.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::baker::{family_matrix, GofKnot, LoFamily};
use crate::mat2::{conjugate_gl2, Matrix2};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonodromyClass {
    Hyperbolic,
    Reducible,
    Periodic,
}

impl fmt::Display for MonodromyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonodromyClass::Hyperbolic => "hyperbolic",
            MonodromyClass::Reducible => "reducible",
            MonodromyClass::Periodic => "periodic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    LeftOrderable,
    NotLeftOrderable,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::LeftOrderable => "left-orderable",
            Status::NotLeftOrderable => "not left-orderable",
            Status::Unknown => "unknown",
        })
    }
}

/// The result a verdict rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// Trace > 2: closed orbit of an R-covered Anosov flow (Fenley).
    #[serde(rename = "prop3.3-fenley")]
    AnosovClosedOrbit,
    /// Trace < -2 and `n > 0` (Roberts–Shareshian).
    #[serde(rename = "rs-cor1.5")]
    RobertsShareshian,
    /// |trace| ≤ 2: Seifert fibered surgeries, not decided here.
    #[serde(rename = "out-of-scope-seifert")]
    SeifertUndecided,
    /// Trace < -2 and `n ≤ 0`: no known result applies.
    #[serde(rename = "out-of-scope-negative-slope")]
    NonPositiveSlopeUndecided,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::AnosovClosedOrbit => "Prop 3.3 / Fenley",
            Rule::RobertsShareshian => "Roberts-Shareshian Cor 1.5",
            Rule::SeifertUndecided => "Seifert fibered, not decided",
            Rule::NonPositiveSlopeUndecided => "slope <= 0, not decided",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurgeryVerdict {
    pub slope: i64,
    pub status: Status,
    pub rule: Rule,
}

impl fmt::Display for SurgeryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.status, self.rule)
    }
}

/// Whether every integral surgery is left-orderable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AllIntegral {
    AllLo,
    NotAllLo,
    Unknown,
}

impl fmt::Display for AllIntegral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AllIntegral::AllLo => "all-lo",
            AllIntegral::NotAllLo => "not-all-lo",
            AllIntegral::Unknown => "unknown",
        })
    }
}

pub fn class_of_trace(trace: i64) -> MonodromyClass {
    match trace.abs() {
        0 | 1 => MonodromyClass::Periodic,
        2 => MonodromyClass::Reducible,
        _ => MonodromyClass::Hyperbolic,
    }
}

pub fn monodromy_class(m: &Matrix2) -> Result<MonodromyClass> {
    match m.det()? {
        1 => Ok(class_of_trace(m.trace()?)),
        det => Err(Error::DeterminantNotOne(det)),
    }
}

pub fn surgery_verdict(knot: &GofKnot, slope: i64) -> SurgeryVerdict {
    let (status, rule) = match knot.trace {
        t if t > 2 => (Status::LeftOrderable, Rule::AnosovClosedOrbit),
        t if t < -2 && slope > 0 => (Status::NotLeftOrderable, Rule::RobertsShareshian),
        t if t < -2 => (Status::Unknown, Rule::NonPositiveSlopeUndecided),
        _ => (Status::Unknown, Rule::SeifertUndecided),
    };
    SurgeryVerdict { slope, status, rule }
}

/// Verdicts for every slope in `slopes`, in order.
pub fn verdicts(knot: &GofKnot, slopes: impl IntoIterator<Item = i64>) -> Vec<SurgeryVerdict> {
    slopes.into_iter().map(|n| surgery_verdict(knot, n)).collect()
}

pub fn all_integral_lo(knot: &GofKnot) -> AllIntegral {
    match knot.trace {
        t if t > 2 => AllIntegral::AllLo,
        t if t < -2 => AllIntegral::NotAllLo,
        _ => AllIntegral::Unknown,
    }
}

/// Every left-orderable family normal form that `m` is GL(2,Z)-conjugate
/// to: family 1 first, then family 2 by ascending `q`.
pub fn lo_family_matches(m: &Matrix2) -> Result<Vec<LoFamily>> {
    let det = m.det()?;
    if det != 1 {
        return Err(Error::DeterminantNotOne(det));
    }
    let t = m.trace()?;
    if t <= 2 {
        return Ok(Vec::new());
    }
    let mut candidates = vec![LoFamily::One { alpha: t - 2 }];
    // 3 + p + q + 2pq = t  ⇔  p = (t - 3 - q) / (2q + 1)
    let mut q = 1i64;
    while t - 3 - q > 2 * q {
        if (t - 3 - q) % (2 * q + 1) == 0 {
            candidates.push(LoFamily::Two { p: (t - 3 - q) / (2 * q + 1), q });
        }
        q += 1;
    }
    let mut out = Vec::new();
    for family in candidates {
        if conjugate_gl2(m, &family_matrix(family)?)? {
            out.push(family);
        }
    }
    Ok(out)
}

/// First entry of [`lo_family_matches`].
pub fn lo_family_membership(m: &Matrix2) -> Result<Option<LoFamily>> {
    Ok(lo_family_matches(m)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baker::{KnotParams, Label};

    fn knot(label: Label, params: KnotParams) -> GofKnot {
        GofKnot::build(label, params).unwrap()
    }

    #[test]
    fn classes() {
        assert_eq!(monodromy_class(&Matrix2::new(5, 4, 1, 1)).unwrap(), MonodromyClass::Hyperbolic);
        assert_eq!(monodromy_class(&Matrix2::new(1, 0, -1, 1)).unwrap(), MonodromyClass::Reducible);
        assert_eq!(monodromy_class(&Matrix2::new(0, 1, -1, 1)).unwrap(), MonodromyClass::Periodic);
        assert!(monodromy_class(&Matrix2::new(0, 1, 1, 0)).is_err());
    }

    #[test]
    fn verdict_examples() {
        let fig8 = knot(Label::B2, KnotParams::Alpha(1));
        assert_eq!(fig8.trace, 3);
        let v = surgery_verdict(&fig8, -3);
        assert_eq!((v.status, v.rule), (Status::LeftOrderable, Rule::AnosovClosedOrbit));
        let b1 = knot(Label::B1, KnotParams::Alpha(5));
        assert_eq!(surgery_verdict(&b1, 7).status, Status::NotLeftOrderable);
        assert_eq!(surgery_verdict(&b1, 7).rule, Rule::RobertsShareshian);
        assert_eq!(surgery_verdict(&b1, -1).status, Status::Unknown);
        assert_eq!(surgery_verdict(&b1, 0).rule, Rule::NonPositiveSlopeUndecided);
        let c = knot(Label::C, KnotParams::None);
        assert_eq!(surgery_verdict(&c, 0).rule, Rule::SeifertUndecided);
    }

    #[test]
    fn all_integral_examples() {
        assert_eq!(all_integral_lo(&knot(Label::D2, KnotParams::PQ { p: 1, q: 1 })), AllIntegral::AllLo);
        assert_eq!(all_integral_lo(&knot(Label::D1, KnotParams::PQ { p: 2, q: 2 })), AllIntegral::NotAllLo);
        assert_eq!(all_integral_lo(&knot(Label::A1, KnotParams::None)), AllIntegral::Unknown);
    }

    #[test]
    fn family_membership_examples() {
        assert_eq!(
            lo_family_membership(&Matrix2::new(5, 4, 1, 1)).unwrap(),
            Some(LoFamily::One { alpha: 4 })
        );
        let rl = Matrix2::R.checked_mul(&Matrix2::L).unwrap();
        let m = Matrix2::new(2, 3, 3, 5).conjugate_by(&rl).unwrap();
        // trace 7 = 2 + 5: family 1 with α = 5 is (6 5; 1 1), not conjugate
        assert_eq!(lo_family_membership(&m).unwrap(), Some(LoFamily::Two { p: 1, q: 1 }));
        assert_eq!(
            lo_family_membership(&Matrix2::new(1, 1, 1, 2)).unwrap(),
            Some(LoFamily::One { alpha: 1 })
        );
        assert_eq!(lo_family_membership(&Matrix2::new(-3, 4, -1, 1)).unwrap(), None);
    }

    #[test]
    fn verdict_json() {
        let v = SurgeryVerdict { slope: -1, status: Status::Unknown, rule: Rule::NonPositiveSlopeUndecided };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"slope":-1,"status":"unknown","rule":"out-of-scope-negative-slope"}"#
        );
        assert_eq!(
            surgery_verdict(&knot(Label::B2, KnotParams::Alpha(1)), -3).to_string(),
            "left-orderable (Prop 3.3 / Fenley)"
        );
    }
}
