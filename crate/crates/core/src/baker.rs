//! Genus one fibered knots in lens spaces.
//!
//! Up to homeomorphism a lens space carries three such knots (only
//! `L(4,1)`), two (`L(α,1)`, `α > 0`, `α ≠ 4`), one (`L(0,1)` and the
//! two-bridge families below) or none. Each knot is the lift of the axis of
//! a closed 3-braid whose double branched cover is the lens space:
//!
//! | label | braid                   | ambient                          |
//! |-------|-------------------------|----------------------------------|
//! | A1    | `s1^4 s2`               | `L(4,1)`                         |
//! | A2    | `s1^4 s2^-1`            | `L(4,1)`                         |
//! | A3    | `s1 s2^2 s1 s2^-1`      | `L(4,1)`                         |
//! | B1    | `s1^α s2`               | `L(α,1)`, `α > 0`, `α ≠ 4`       |
//! | B2    | `s1^α s2^-1`            | `L(α,1)`, `α > 0`, `α ≠ 4`       |
//! | C     | `s2`                    | `L(0,1)`                         |
//! | D1    | `s1^p s2^2 s1^q s2^-1`  | `L(2pq+p+q, 2q+1)`, `p,q > 1`    |
//! | D2    | `s1^p s2^2 s1^-q-1 s2^-1` | `L(2pq+p+q+1, 2q+1)`, `p,q > 0` |
//!
//! For D1 and D2 the parameters are stored with `p ≤ q`: swapping them
//! gives the same space, because `(2p+1)(2q+1) ≡ ±1 (mod α)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid3::{word, BraidWord, Generator};
use crate::lens::{normalize, LensSpace};
use crate::mat2::Matrix2;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    A1,
    A2,
    A3,
    B1,
    B2,
    C,
    D1,
    D2,
}

impl Label {
    pub const ALL: [Label; 8] = [Label::A1, Label::A2, Label::A3, Label::B1, Label::B2, Label::C, Label::D1, Label::D2];
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized: String = s
            .chars()
            .map(|c| match c {
                '₁' => '1',
                '₂' => '2',
                '₃' => '3',
                c => c.to_ascii_uppercase(),
            })
            .collect();
        Label::ALL
            .into_iter()
            .find(|l| l.to_string() == normalized)
            .ok_or_else(|| Error::Parse { offset: 0, message: format!("unknown knot label `{s}`") })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnotParams {
    None,
    Alpha(i64),
    PQ { p: i64, q: i64 },
}

#[derive(Serialize, Deserialize, Default)]
struct RawParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<i64>,
}

impl Serialize for KnotParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw = match *self {
            KnotParams::None => RawParams::default(),
            KnotParams::Alpha(a) => RawParams { alpha: Some(a), ..Default::default() },
            KnotParams::PQ { p, q } => RawParams { p: Some(p), q: Some(q), ..Default::default() },
        };
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for KnotParams {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match RawParams::deserialize(d)? {
            RawParams { alpha: None, p: None, q: None } => Ok(KnotParams::None),
            RawParams { alpha: Some(a), p: None, q: None } => Ok(KnotParams::Alpha(a)),
            RawParams { alpha: None, p: Some(p), q: Some(q) } => Ok(KnotParams::PQ { p, q }),
            _ => Err(serde::de::Error::custom("params must be {}, {alpha} or {p, q}")),
        }
    }
}

/// A classified genus one fibered knot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawKnot")]
pub struct GofKnot {
    pub label: Label,
    pub params: KnotParams,
    pub braid: BraidWord,
    pub matrix: Matrix2,
    pub trace: i64,
    pub ambient: LensSpace,
}

#[derive(Deserialize)]
struct RawKnot {
    label: Label,
    params: KnotParams,
    braid: BraidWord,
    matrix: Matrix2,
    trace: i64,
    ambient: LensSpace,
}

impl TryFrom<RawKnot> for GofKnot {
    type Error = Error;

    fn try_from(raw: RawKnot) -> Result<Self> {
        let knot = GofKnot::build(raw.label, raw.params)?;
        let claimed = GofKnot {
            label: raw.label,
            params: raw.params,
            braid: raw.braid,
            matrix: raw.matrix,
            trace: raw.trace,
            ambient: raw.ambient,
        };
        if knot != claimed {
            return Err(Error::Inconsistency(format!("record does not match the {} knot it names", knot.label)));
        }
        Ok(knot)
    }
}

fn checked(expr: Option<i64>) -> Result<i64> {
    expr.ok_or(Error::Overflow("knot parameters"))
}

/// `2pq + p + q`.
fn d_alpha(p: i64, q: i64) -> Result<i64> {
    let pq2 = checked(p.checked_mul(q).and_then(|x| x.checked_mul(2)))?;
    checked(pq2.checked_add(p).and_then(|x| x.checked_add(q)))
}

impl GofKnot {
    /// The knot with the given label and parameters, built from its braid
    /// template. D1/D2 parameters are reordered to `p ≤ q`.
    pub fn build(label: Label, params: KnotParams) -> Result<GofKnot> {
        use Generator::{S1, S2};
        let bad = |why: &str| Err(Error::InvalidParams(format!("{label} {why}")));
        let (params, braid, ambient) = match (label, params) {
            (Label::A1, KnotParams::None) => (params, word(&[(S1, 4), (S2, 1)]), normalize(4, 1)?),
            (Label::A2, KnotParams::None) => (params, word(&[(S1, 4), (S2, -1)]), normalize(4, 1)?),
            (Label::A3, KnotParams::None) => {
                (params, word(&[(S1, 1), (S2, 2), (S1, 1), (S2, -1)]), normalize(4, 1)?)
            }
            (Label::C, KnotParams::None) => (params, word(&[(S2, 1)]), normalize(0, 1)?),
            (Label::B1 | Label::B2, KnotParams::Alpha(alpha)) => {
                if alpha <= 0 || alpha == 4 {
                    return bad("needs alpha > 0 and alpha != 4");
                }
                let last = if label == Label::B1 { 1 } else { -1 };
                (params, word(&[(S1, alpha), (S2, last)]), normalize(alpha, 1)?)
            }
            (Label::D1, KnotParams::PQ { p, q }) => {
                if p <= 1 || q <= 1 {
                    return bad("needs p, q > 1");
                }
                let (p, q) = (p.min(q), p.max(q));
                let braid = word(&[(S1, p), (S2, 2), (S1, q), (S2, -1)]);
                (KnotParams::PQ { p, q }, braid, normalize(d_alpha(p, q)?, 2 * q + 1)?)
            }
            (Label::D2, KnotParams::PQ { p, q }) => {
                if p <= 0 || q <= 0 {
                    return bad("needs p, q > 0");
                }
                let (p, q) = (p.min(q), p.max(q));
                let braid = word(&[(S1, p), (S2, 2), (S1, -q - 1), (S2, -1)]);
                let alpha = checked(d_alpha(p, q)?.checked_add(1))?;
                (KnotParams::PQ { p, q }, braid, normalize(alpha, 2 * q + 1)?)
            }
            _ => return bad(&format!("does not take parameters {params:?}")),
        };
        let matrix = braid.monodromy()?;
        let trace = matrix.trace()?;
        Ok(GofKnot { label, params, braid, matrix, trace, ambient })
    }

    /// `label` followed by its parameters, e.g. `D2(p=1,q=1)`.
    pub fn name(&self) -> String {
        match self.params {
            KnotParams::None => self.label.to_string(),
            KnotParams::Alpha(a) => format!("{}(alpha={a})", self.label),
            KnotParams::PQ { p, q } => format!("{}(p={p},q={q})", self.label),
        }
    }
}

/// All genus one fibered knots in `space`, in label order.
pub fn classify(space: &LensSpace) -> Result<Vec<GofKnot>> {
    let (alpha, beta) = (space.alpha(), space.beta());
    if alpha == 0 {
        return Ok(vec![GofKnot::build(Label::C, KnotParams::None)?]);
    }
    if (alpha, beta) == (4, 1) {
        return [Label::A1, Label::A2, Label::A3]
            .into_iter()
            .map(|l| GofKnot::build(l, KnotParams::None))
            .collect();
    }
    if alpha == 1 || beta == 1 {
        return [Label::B1, Label::B2]
            .into_iter()
            .map(|l| GofKnot::build(l, KnotParams::Alpha(alpha)))
            .collect();
    }
    // one knot at most: look for an odd β'' = 2q+1 in the orbit of β that
    // solves one of the two-bridge family equations
    let mut found = BTreeSet::new();
    for b in space.beta_orbit() {
        if b % 2 == 0 {
            continue;
        }
        let q = (b - 1) / 2;
        if q > 0 && (alpha - q) % b == 0 {
            let p = (alpha - q) / b;
            if p > 1 && q > 1 {
                found.insert((Label::D1, p.min(q), p.max(q)));
            }
        }
        if q > 0 && (alpha - q - 1) % b == 0 {
            let p = (alpha - q - 1) / b;
            if p > 0 {
                found.insert((Label::D2, p.min(q), p.max(q)));
            }
        }
    }
    if found.len() > 1 {
        return Err(Error::Inconsistency(format!("{space} admits several single-knot solutions: {found:?}")));
    }
    let knots = found
        .into_iter()
        .map(|(label, p, q)| GofKnot::build(label, KnotParams::PQ { p, q }))
        .collect::<Result<Vec<_>>>()?;
    for knot in &knots {
        if knot.ambient != *space {
            return Err(Error::Inconsistency(format!("{} lives in {}, not {space}", knot.name(), knot.ambient)));
        }
    }
    Ok(knots)
}

/// Recognizes a braid as one of the eight templates and checks that it
/// lives in `ambient`.
pub fn knot_from_braid(braid: &BraidWord, ambient: &LensSpace) -> Result<GofKnot> {
    use Generator::{S1, S2};
    let reduced = braid.free_reduce()?;
    let shape: Vec<(Generator, i64)> = reduced.syllables().iter().map(|s| (s.generator, s.exponent)).collect();
    let (label, params) = match shape.as_slice() {
        [(S2, 1)] => (Label::C, KnotParams::None),
        [(S1, 4), (S2, 1)] => (Label::A1, KnotParams::None),
        [(S1, 4), (S2, -1)] => (Label::A2, KnotParams::None),
        [(S1, a), (S2, 1)] if *a > 0 => (Label::B1, KnotParams::Alpha(*a)),
        [(S1, a), (S2, -1)] if *a > 0 => (Label::B2, KnotParams::Alpha(*a)),
        [(S1, 1), (S2, 2), (S1, 1), (S2, -1)] => (Label::A3, KnotParams::None),
        [(S1, p), (S2, 2), (S1, q), (S2, -1)] if *p > 1 && *q > 1 => (Label::D1, KnotParams::PQ { p: *p, q: *q }),
        [(S1, p), (S2, 2), (S1, r), (S2, -1)] if *p > 0 && *r < -1 => {
            (Label::D2, KnotParams::PQ { p: *p, q: -*r - 1 })
        }
        _ => return Err(Error::NoTemplate(braid.to_string())),
    };
    let knot = GofKnot::build(label, params)?;
    if knot.ambient != *ambient {
        return Err(Error::AmbientMismatch {
            braid: braid.to_string(),
            expected: knot.ambient.to_string(),
            given: ambient.to_string(),
        });
    }
    Ok(knot)
}

/// Closed-form monodromy matrix for a label, independent of the braid.
pub fn closed_form_matrix(label: Label, params: KnotParams) -> Result<Matrix2> {
    let m = |a: i128, b: i128, c: i128, d: i128| -> Result<Matrix2> {
        let f = |x: i128| i64::try_from(x).map_err(|_| Error::Overflow("closed-form matrix"));
        Ok(Matrix2::new(f(a)?, f(b)?, f(c)?, f(d)?))
    };
    match (label, params) {
        (Label::A1, KnotParams::None) => m(-3, 4, -1, 1),
        (Label::A2, KnotParams::None) => m(5, 4, 1, 1),
        (Label::A3, KnotParams::None) => m(-1, 0, -3, -1),
        (Label::C, KnotParams::None) => m(1, 0, -1, 1),
        (Label::B1, KnotParams::Alpha(a)) => {
            let a = a as i128;
            m(1 - a, a, -1, 1)
        }
        (Label::B2, KnotParams::Alpha(a)) => {
            let a = a as i128;
            m(1 + a, a, 1, 1)
        }
        (Label::D1, KnotParams::PQ { p, q }) => {
            let (p, q) = (p as i128, q as i128);
            m(-2 * p * q - p + q + 1, -2 * p * q + p + q, -2 * q - 1, -2 * q + 1)
        }
        (Label::D2, KnotParams::PQ { p, q }) => {
            let (p, q) = (p as i128, q as i128);
            m(2 * p * q + p - q, 2 * p * q + 3 * p - q - 1, 2 * q + 1, 2 * q + 3)
        }
        _ => Err(Error::InvalidParams(format!("{label} does not take parameters {params:?}"))),
    }
}

/// Closed-form trace for a label.
pub fn closed_form_trace(label: Label, params: KnotParams) -> Result<i64> {
    let t: i128 = match (label, params) {
        (Label::A1 | Label::A3, KnotParams::None) => -2,
        (Label::A2, KnotParams::None) => 6,
        (Label::C, KnotParams::None) => 2,
        (Label::B1, KnotParams::Alpha(a)) => 2 - a as i128,
        (Label::B2, KnotParams::Alpha(a)) => 2 + a as i128,
        (Label::D1, KnotParams::PQ { p, q }) => {
            let (p, q) = (p as i128, q as i128);
            2 - q - p * (1 + 2 * q)
        }
        (Label::D2, KnotParams::PQ { p, q }) => {
            let (p, q) = (p as i128, q as i128);
            3 + p + q + 2 * p * q
        }
        _ => return Err(Error::InvalidParams(format!("{label} does not take parameters {params:?}"))),
    };
    i64::try_from(t).map_err(|_| Error::Overflow("closed-form trace"))
}

/// One row of the monodromy table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub label: Label,
    pub braid_template: &'static str,
    pub matrix_formula: &'static str,
    pub trace_formula: &'static str,
    /// The row instantiated at its sample parameters.
    pub sample: GofKnot,
}

const TEMPLATES: [(Label, &str, &str, &str, KnotParams); 8] = [
    (Label::A1, "s1^4 s2", "[[-3,4],[-1,1]]", "-2", KnotParams::None),
    (Label::A2, "s1^4 s2^-1", "[[5,4],[1,1]]", "6", KnotParams::None),
    (Label::A3, "s1 s2^2 s1 s2^-1", "[[-1,0],[-3,-1]]", "-2", KnotParams::None),
    (Label::B1, "s1^a s2", "[[1-a,a],[-1,1]]", "2-a", KnotParams::Alpha(5)),
    (Label::B2, "s1^a s2^-1", "[[1+a,a],[1,1]]", "2+a", KnotParams::Alpha(1)),
    (Label::C, "s2", "[[1,0],[-1,1]]", "2", KnotParams::None),
    (
        Label::D1,
        "s1^p s2^2 s1^q s2^-1",
        "[[-2pq-p+q+1,-2pq+p+q],[-2q-1,-2q+1]]",
        "2-q-p(1+2q)",
        KnotParams::PQ { p: 2, q: 2 },
    ),
    (
        Label::D2,
        "s1^p s2^2 s1^(-q-1) s2^-1",
        "[[2pq+p-q,2pq+3p-q-1],[2q+1,2q+3]]",
        "3+p+q+2pq",
        KnotParams::PQ { p: 1, q: 1 },
    ),
];

/// The eight monodromy rows. Each sample is built from its braid and
/// checked against the closed form before it is returned.
pub fn table1() -> Result<Vec<Table1Row>> {
    TEMPLATES
        .iter()
        .map(|&(label, braid_template, matrix_formula, trace_formula, params)| {
            let sample = GofKnot::build(label, params)?;
            check_closed_form(label, params)?;
            Ok(Table1Row { label, braid_template, matrix_formula, trace_formula, sample })
        })
        .collect()
}

/// Checks monodromy(braid) against the closed-form matrix and trace.
pub fn check_closed_form(label: Label, params: KnotParams) -> Result<()> {
    let knot = GofKnot::build(label, params)?;
    // closed forms use the parameters as given; D rows are symmetric only
    // up to conjugacy, so compare on the canonical order
    let expected = closed_form_matrix(label, knot.params)?;
    let trace = closed_form_trace(label, knot.params)?;
    if knot.matrix != expected || knot.trace != trace || expected.trace()? != trace {
        return Err(Error::Inconsistency(format!(
            "{}: braid gives {} (trace {}), closed form {} (trace {trace})",
            knot.name(),
            knot.matrix,
            knot.trace,
            expected
        )));
    }
    Ok(())
}

/// Normal forms of the monodromies whose integral surgeries are all
/// left-orderable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoFamily {
    /// `(1+α, α; 1, 1)`, `α > 0`.
    One { alpha: i64 },
    /// `(2pq+p-q, 2pq+3p-q-1; 2q+1, 2q+3)`, `p, q > 0`.
    Two { p: i64, q: i64 },
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    family: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<i64>,
}

impl Serialize for LoFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw = match *self {
            LoFamily::One { alpha } => RawFamily { family: 1, alpha: Some(alpha), p: None, q: None },
            LoFamily::Two { p, q } => RawFamily { family: 2, alpha: None, p: Some(p), q: Some(q) },
        };
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LoFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match RawFamily::deserialize(d)? {
            RawFamily { family: 1, alpha: Some(alpha), p: None, q: None } => Ok(LoFamily::One { alpha }),
            RawFamily { family: 2, alpha: None, p: Some(p), q: Some(q) } => Ok(LoFamily::Two { p, q }),
            _ => Err(serde::de::Error::custom("family must be {family:1, alpha} or {family:2, p, q}")),
        }
    }
}

impl fmt::Display for LoFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoFamily::One { alpha } => write!(f, "family 1 (alpha={alpha})"),
            LoFamily::Two { p, q } => write!(f, "family 2 (p={p},q={q})"),
        }
    }
}

pub fn family_matrix(family: LoFamily) -> Result<Matrix2> {
    match family {
        LoFamily::One { alpha } if alpha > 0 => closed_form_matrix(Label::B2, KnotParams::Alpha(alpha)),
        LoFamily::Two { p, q } if p > 0 && q > 0 => closed_form_matrix(Label::D2, KnotParams::PQ { p, q }),
        _ => Err(Error::InvalidParams(format!("{family} is outside its parameter range"))),
    }
}
