//! Lens spaces up to (unoriented) homeomorphism, two-bridge labels and the
//! continued fractions that relate them.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `L(alpha, beta)` in canonical form.
///
/// `L(0,1)` is `S²×S¹` and `L(1,0)` is `S³`. For `alpha ≥ 2`, `beta` is the
/// least element of `{±β, ±β⁻¹} mod α`, since `L(α,β) ≅ L(α,β')` exactly when
/// `β' ≡ ±β^{±1} (mod α)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLens")]
pub struct LensSpace {
    alpha: i64,
    beta: i64,
}

#[derive(Deserialize)]
struct RawLens {
    alpha: i64,
    beta: i64,
}

impl TryFrom<RawLens> for LensSpace {
    type Error = Error;

    fn try_from(raw: RawLens) -> Result<Self> {
        let space = LensSpace::new(raw.alpha, raw.beta)?;
        if (space.alpha, space.beta) != (raw.alpha, raw.beta) {
            return Err(Error::NotCanonical { alpha: raw.alpha, beta: raw.beta });
        }
        Ok(space)
    }
}

impl LensSpace {
    /// Normalizes `L(alpha, beta)`; same as [`normalize`].
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        normalize(alpha, beta)
    }

    pub fn s3() -> Self {
        LensSpace { alpha: 1, beta: 0 }
    }

    pub fn s2_x_s1() -> Self {
        LensSpace { alpha: 0, beta: 1 }
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// The residues `{±β, ±β⁻¹} mod α` in `(0, α)`, ascending. Empty for
    /// `α < 2`.
    pub fn beta_orbit(&self) -> Vec<i64> {
        if self.alpha < 2 {
            return Vec::new();
        }
        orbit(self.alpha, self.beta)
    }
}

fn mod_inverse(x: i64, m: i64) -> i64 {
    let e = x.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

/// Assumes `alpha ≥ 2` and `gcd(alpha, beta) = 1`.
fn orbit(alpha: i64, beta: i64) -> Vec<i64> {
    let b = beta.rem_euclid(alpha);
    let inv = mod_inverse(b, alpha);
    let mut out = vec![b, alpha - b, inv, alpha - inv];
    out.sort_unstable();
    out.dedup();
    out
}

/// Canonical representative of `L(alpha, beta)`.
///
/// A negative `alpha` is read as `L(-α,β) ≅ L(α,-β)`.
pub fn normalize(alpha: i64, beta: i64) -> Result<LensSpace> {
    let (alpha, beta) = if alpha < 0 {
        let a = alpha.checked_neg().ok_or(Error::Overflow("lens space normalization"))?;
        let b = beta.checked_neg().ok_or(Error::Overflow("lens space normalization"))?;
        (a, b)
    } else {
        (alpha, beta)
    };
    match alpha {
        0 if beta.abs() == 1 => Ok(LensSpace::s2_x_s1()),
        0 => Err(Error::NotCoprime { alpha, beta }),
        1 => Ok(LensSpace::s3()),
        _ => {
            if alpha.gcd(&beta) != 1 {
                return Err(Error::NotCoprime { alpha, beta });
            }
            Ok(LensSpace { alpha, beta: orbit(alpha, beta)[0] })
        }
    }
}

pub fn homeomorphic(l1: &LensSpace, l2: &LensSpace) -> bool {
    l1 == l2
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.alpha, self.beta)
    }
}

/// Value of `[a₁, …, aₙ] = 1/(a₁ + 1/(a₂ + ⋯ + 1/aₙ))` as a reduced
/// fraction `(num, den)` with `den > 0`.
pub fn cf_eval(terms: &[i64]) -> Result<(i64, i64)> {
    if terms.is_empty() {
        return Err(Error::EmptyContinuedFraction);
    }
    // tail value num/den, starting from 1/aₙ
    let (mut num, mut den): (i128, i128) = (0, 1);
    for (i, &t) in terms.iter().enumerate().rev() {
        // 1 / (t + num/den) = den / (t·den + num)
        let next_den = i128::from(t) * den + num;
        if next_den == 0 {
            return Err(Error::ZeroDenominator(i));
        }
        (num, den) = (den, next_den);
        let g = num.gcd(&den);
        (num, den) = (num / g, den / g);
        if num.abs() > i64::MAX as i128 || den.abs() > i64::MAX as i128 {
            return Err(Error::Overflow("continued fraction"));
        }
    }
    if den < 0 {
        (num, den) = (-num, -den);
    }
    Ok((num as i64, den as i64))
}

/// The two-bridge link `b(α, β)`, keyed like its double branched cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoBridgeLabel {
    space: LensSpace,
}

impl TwoBridgeLabel {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        Ok(TwoBridgeLabel { space: normalize(alpha, beta)? })
    }

    /// The link whose Conway notation is `terms`: `β/α = [terms]`.
    pub fn from_conway(terms: &[i64]) -> Result<Self> {
        let (beta, alpha) = cf_eval(terms)?;
        TwoBridgeLabel::new(alpha, beta)
    }

    pub fn alpha(&self) -> i64 {
        self.space.alpha
    }

    pub fn beta(&self) -> i64 {
        self.space.beta
    }
}

impl fmt::Display for TwoBridgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.space.alpha, self.space.beta)
    }
}

/// `L(α, β)` is the double branched cover of `S³` over `b(α, β)`.
pub fn double_branched_cover(label: &TwoBridgeLabel) -> LensSpace {
    label.space
}
