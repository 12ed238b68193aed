//! 2×2 integer matrices and exact conjugacy in SL(2,Z) and GL(2,Z).
//!
//! Every arithmetic step is checked; an overflow surfaces as
//! [`Error::Overflow`] rather than a wrapped value.
//!
//! Conjugacy is decided by trace class:
//!
//! * `|trace| > 2`: both matrices are reduced to a positive word in
//!   `R = (1 1; 0 1)` and `L = (1 0; 1 1)` and the words are compared up to
//!   cyclic rotation.
//! * `|trace| = 2`: a non-scalar matrix is `±(1 n; 0 1)` in a suitable
//!   basis, and `n` is a complete invariant.
//! * `|trace| < 2`: the associated binary form is definite; its sign
//!   (the sign of the lower-left entry) is a complete invariant.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Row-major `(a b; c d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

fn mul_add(x: i64, y: i64, z: i64, w: i64) -> Result<i64> {
    let p = x.checked_mul(y).ok_or(Error::Overflow("matrix product"))?;
    let q = z.checked_mul(w).ok_or(Error::Overflow("matrix product"))?;
    p.checked_add(q).ok_or(Error::Overflow("matrix product"))
}

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2::new(1, 0, 0, 1);
    /// `φ_A`, the image of `σ₁`; also the letter `R`.
    pub const R: Matrix2 = Matrix2::new(1, 1, 0, 1);
    /// `φ_B`; also the letter `L`. The image of `σ₂` is its inverse.
    pub const L: Matrix2 = Matrix2::new(1, 0, 1, 1);
    /// Orientation-reversing reflection `(1 0; 0 -1)`.
    pub const J: Matrix2 = Matrix2::new(1, 0, 0, -1);
    /// Quarter turn `(0 -1; 1 0)`.
    pub const S: Matrix2 = Matrix2::new(0, -1, 1, 0);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> Result<i64> {
        let ad = self.a.checked_mul(self.d);
        let bc = self.b.checked_mul(self.c);
        match (ad, bc) {
            (Some(ad), Some(bc)) => ad.checked_sub(bc).ok_or(Error::Overflow("determinant")),
            _ => Err(Error::Overflow("determinant")),
        }
    }

    pub fn trace(&self) -> Result<i64> {
        self.a.checked_add(self.d).ok_or(Error::Overflow("trace"))
    }

    pub fn checked_mul(&self, rhs: &Matrix2) -> Result<Matrix2> {
        Ok(Matrix2 {
            a: mul_add(self.a, rhs.a, self.b, rhs.c)?,
            b: mul_add(self.a, rhs.b, self.b, rhs.d)?,
            c: mul_add(self.c, rhs.a, self.d, rhs.c)?,
            d: mul_add(self.c, rhs.b, self.d, rhs.d)?,
        })
    }

    pub fn checked_neg(&self) -> Result<Matrix2> {
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("negation"));
        Ok(Matrix2::new(neg(self.a)?, neg(self.b)?, neg(self.c)?, neg(self.d)?))
    }

    /// Inverse over the integers; needs `det = ±1`.
    pub fn inverse(&self) -> Result<Matrix2> {
        let det = self.det()?;
        if det != 1 && det != -1 {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("inverse"));
        // adj(A) / det
        if det == 1 {
            Ok(Matrix2::new(self.d, neg(self.b)?, neg(self.c)?, self.a))
        } else {
            Ok(Matrix2::new(neg(self.d)?, self.b, self.c, neg(self.a)?))
        }
    }

    /// `self^n`; negative `n` needs `det = ±1`.
    pub fn pow(&self, n: i64) -> Result<Matrix2> {
        let mut base = if n < 0 { self.inverse()? } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = Matrix2::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `P · self · P⁻¹`.
    pub fn conjugate_by(&self, p: &Matrix2) -> Result<Matrix2> {
        p.checked_mul(self)?.checked_mul(&p.inverse()?)
    }

    pub fn is_scalar(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d
    }

    fn require_sl2(&self) -> Result<()> {
        match self.det()? {
            1 => Ok(()),
            det => Err(Error::DeterminantNotOne(det)),
        }
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Matrix2 {
    type Err = Error;

    /// Parses `[[a,b],[c,d]]`; whitespace between tokens is allowed.
    fn from_str(s: &str) -> Result<Self> {
        let rows: [[i64; 2]; 2] = serde_json::from_str(s).map_err(|e| Error::Parse {
            offset: e.column().saturating_sub(1),
            message: format!("expected [[a,b],[c,d]]: {e}"),
        })?;
        Ok(rows.into())
    }
}

impl From<[[i64; 2]; 2]> for Matrix2 {
    fn from(r: [[i64; 2]; 2]) -> Self {
        Matrix2::new(r[0][0], r[0][1], r[1][0], r[1][1])
    }
}

impl From<Matrix2> for [[i64; 2]; 2] {
    fn from(m: Matrix2) -> Self {
        [[m.a, m.b], [m.c, m.d]]
    }
}

impl Serialize for Matrix2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        <[[i64; 2]; 2]>::from(*self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        <[[i64; 2]; 2]>::deserialize(d).map(Matrix2::from)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    R,
    L,
}

impl Letter {
    pub fn matrix(self) -> Matrix2 {
        match self {
            Letter::R => Matrix2::R,
            Letter::L => Matrix2::L,
        }
    }
}

/// A positive cyclic word in `R` and `L`, kept in canonical rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RLWord {
    syllables: Vec<(Letter, u64)>,
}

impl RLWord {
    /// Builds the canonical cyclic form of the word `letters`.
    ///
    /// Adjacent equal letters (cyclically) are merged, then the rotation
    /// whose flattened letter string is lexicographically least (`R < L`)
    /// is chosen. Returns `None` unless both letters occur.
    pub fn cyclic(syllables: impl IntoIterator<Item = (Letter, u64)>) -> Option<RLWord> {
        let mut merged: Vec<(Letter, u64)> = Vec::new();
        for (letter, exp) in syllables {
            if exp == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((l, e)) if *l == letter => *e += exp,
                _ => merged.push((letter, exp)),
            }
        }
        if merged.len() > 1 && merged[0].0 == merged[merged.len() - 1].0 {
            let (_, tail) = merged.pop().unwrap();
            merged[0].1 += tail;
        }
        if merged.len() < 2 {
            return None;
        }
        // Letters now alternate and the length is even. The least flattened
        // rotation starts at an R syllable; comparing the sequence
        // (-r1, l1, -r2, l2, ...) lexicographically is the same as comparing
        // the flattened strings.
        let n = merged.len();
        let merged_ref = &merged;
        let key = |start: usize| {
            (0..n).map(move |i| {
                let (letter, e) = merged_ref[(start + i) % n];
                match letter {
                    Letter::R => -(e as i128),
                    Letter::L => e as i128,
                }
            })
        };
        let best = (0..n)
            .filter(|&i| merged[i].0 == Letter::R)
            .min_by(|&i, &j| key(i).cmp(key(j)).then(i.cmp(&j)))
            .expect("alternating word has an R syllable");
        let syllables = (0..n).map(|i| merged[(best + i) % n]).collect();
        Some(RLWord { syllables })
    }

    pub fn syllables(&self) -> &[(Letter, u64)] {
        &self.syllables
    }

    /// Product `R^{a1} L^{b1} ...` in the stored rotation.
    pub fn product(&self) -> Result<Matrix2> {
        self.syllables.iter().try_fold(Matrix2::IDENTITY, |acc, &(letter, e)| {
            let e = i64::try_from(e).map_err(|_| Error::Overflow("RL word exponent"))?;
            acc.checked_mul(&letter.matrix().pow(e)?)
        })
    }

    /// Total number of letters.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }
}

impl fmt::Display for RLWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(letter, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let l = match letter {
                Letter::R => "R",
                Letter::L => "L",
            };
            if e == 1 {
                f.write_str(l)?;
            } else {
                write!(f, "{l}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Conjugacy invariant of a hyperbolic SL(2,Z) matrix: `sign · word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedRLClass {
    pub sign: i8,
    pub word: RLWord,
}

impl SignedRLClass {
    /// `sign · product(word)`, a representative of the class.
    pub fn representative(&self) -> Result<Matrix2> {
        let m = self.word.product()?;
        if self.sign < 0 {
            m.checked_neg()
        } else {
            Ok(m)
        }
    }
}

impl fmt::Display for SignedRLClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-({})", self.word)
        } else {
            write!(f, "{}", self.word)
        }
    }
}

/// Floors of the two fixed points of `x ↦ (ax+b)/(cx+d)`, smaller first.
///
/// The fixed points are `((a-d) ± √(t²-4)) / 2c`, irrational for |t| > 2.
fn fixed_point_floors(m: &Matrix2) -> (i128, i128) {
    let t = m.a as i128 + m.d as i128;
    let disc = (t * t - 4) as u128;
    let s = disc.isqrt() as i128;
    let (mut p, mut q) = (m.a as i128 - m.d as i128, 2 * m.c as i128);
    if q < 0 {
        p = -p;
        q = -q;
    }
    // √disc is irrational, so floor(p ± √disc) is p + s or p - s - 1.
    ((p - s - 1).div_euclid(q), (p + s).div_euclid(q))
}

/// Conjugates a matrix with trace > 2 into the positive cone `b, c > 0`.
///
/// The fixed points of the Möbius action are separated by an integer
/// shift followed by the quarter turn `S` until 0 and ∞ lie between them;
/// this is the continued fraction expansion of the two fixed points, run
/// until they differ.
fn into_positive_cone(mut m: Matrix2) -> Result<Matrix2> {
    loop {
        if m.b > 0 && m.c > 0 {
            return Ok(m);
        }
        if m.b < 0 && m.c < 0 {
            m = m.conjugate_by(&Matrix2::S)?;
            continue;
        }
        let (lo, hi) = fixed_point_floors(&m);
        let shift = |k: i128| -> Result<Matrix2> {
            let k = i64::try_from(-k).map_err(|_| Error::Overflow("cone reduction"))?;
            Ok(Matrix2::new(1, k, 0, 1))
        };
        if lo < hi {
            m = m.conjugate_by(&shift(hi)?)?;
        } else {
            m = m.conjugate_by(&shift(lo)?)?.conjugate_by(&Matrix2::S)?;
        }
    }
}

/// Factors a nonnegative SL(2,Z) matrix as a word in `R` and `L`.
///
/// Greedy: strip `R` from the left while the second row is dominated by
/// the first, otherwise strip `L`. Runs of equal letters are stripped in
/// one step.
fn peel(mut m: Matrix2) -> Result<Vec<(Letter, u64)>> {
    let quota = |num: i64, den: i64| if den == 0 { i64::MAX } else { num / den };
    let mut word = Vec::new();
    while m != Matrix2::IDENTITY {
        if m.c <= m.a && m.d <= m.b {
            let k = quota(m.a, m.c).min(quota(m.b, m.d));
            m = Matrix2::new(m.a - k * m.c, m.b - k * m.d, m.c, m.d);
            word.push((Letter::R, k as u64));
        } else if m.a <= m.c && m.b <= m.d {
            let k = quota(m.c, m.a).min(quota(m.d, m.b));
            m = Matrix2::new(m.a, m.b, m.c - k * m.a, m.d - k * m.b);
            word.push((Letter::L, k as u64));
        } else {
            return Err(Error::Inconsistency(format!("{m} has no dominated row")));
        }
    }
    Ok(word)
}

/// Canonical conjugacy invariant of a hyperbolic matrix (`det = 1`,
/// `|trace| > 2`).
pub fn rl_class(m: &Matrix2) -> Result<SignedRLClass> {
    m.require_sl2()?;
    let t = m.trace()?;
    if t.abs() <= 2 {
        return Err(Error::NotHyperbolic(t));
    }
    let (sign, positive) = if t < 0 { (-1, m.checked_neg()?) } else { (1, *m) };
    let cone = into_positive_cone(positive)?;
    let word = RLWord::cyclic(peel(cone)?)
        .ok_or_else(|| Error::Inconsistency(format!("{m} reduced to a one-letter word")))?;
    Ok(SignedRLClass { sign, word })
}

/// The integer `n` with `εM ~ (1 n; 0 1)` in SL(2,Z), for a non-scalar
/// `M` of trace `2ε`.
pub fn parabolic_invariant(m: &Matrix2) -> Result<i64> {
    m.require_sl2()?;
    let t = m.trace()?;
    if t.abs() != 2 || m.is_scalar() {
        return Err(Error::InvalidParams(format!("{m} is not a non-scalar parabolic")));
    }
    let unipotent = if t < 0 { m.checked_neg()? } else { *m };
    // N = εM - I is nilpotent of rank one; its kernel is the fixed line.
    let n = Matrix2::new(unipotent.a - 1, unipotent.b, unipotent.c, unipotent.d - 1);
    let (x, y) = if n.a != 0 || n.b != 0 { (-n.b, n.a) } else { (-n.d, n.c) };
    let g = x.gcd(&y);
    let (v1, v2) = (x / g, y / g);
    // complete v to a basis (v, w) of determinant 1
    let e = v1.extended_gcd(&v2);
    let (w1, w2) = (-e.y * e.gcd, e.x * e.gcd);
    debug_assert_eq!(v1 * w2 - v2 * w1, 1);
    let nw1 = mul_add(n.a, w1, n.b, w2)?;
    let nw2 = mul_add(n.c, w1, n.d, w2)?;
    let k = if v1 != 0 { nw1 / v1 } else { nw2 / v2 };
    Ok(k)
}

/// Which group a conjugator may come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Sl2,
    Gl2,
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sl2" => Ok(Group::Sl2),
            "gl2" => Ok(Group::Gl2),
            other => Err(Error::Parse { offset: 0, message: format!("unknown group `{other}`") }),
        }
    }
}

/// Is there `P ∈ SL(2,Z)` with `P A P⁻¹ = B`? Both inputs need `det = 1`.
pub fn conjugate_sl2(a: &Matrix2, b: &Matrix2) -> Result<bool> {
    a.require_sl2()?;
    b.require_sl2()?;
    let t = a.trace()?;
    if t != b.trace()? {
        return Ok(false);
    }
    match t.abs().cmp(&2) {
        Ordering::Greater => Ok(rl_class(a)? == rl_class(b)?),
        Ordering::Equal => match (a.is_scalar(), b.is_scalar()) {
            (true, true) => Ok(true),
            (false, false) => Ok(parabolic_invariant(a)? == parabolic_invariant(b)?),
            _ => Ok(false),
        },
        // finite order: the form c x² + (d-a) xy - b y² is definite, and the
        // SL(2,Z) class is fixed by the trace and the sign of the form.
        Ordering::Less => Ok(a.c.signum() == b.c.signum()),
    }
}

/// Is there `P ∈ GL(2,Z)` with `P A P⁻¹ = B`? Both inputs need `det = 1`.
pub fn conjugate_gl2(a: &Matrix2, b: &Matrix2) -> Result<bool> {
    Ok(conjugate_sl2(a, b)? || conjugate_sl2(&a.conjugate_by(&Matrix2::J)?, b)?)
}

pub fn conjugate(group: Group, a: &Matrix2, b: &Matrix2) -> Result<bool> {
    match group {
        Group::Sl2 => conjugate_sl2(a, b),
        Group::Gl2 => conjugate_gl2(a, b),
    }
}

/// Order in which one coordinate is scanned: diagonal entries try
/// `1, -1, 0, 2, -2, ...`, off-diagonal entries `0, 1, -1, 2, -2, ...`.
fn scan_values(bound: i64, diagonal: bool) -> Vec<i64> {
    let mut out: Vec<i64> = if diagonal { vec![1, -1, 0] } else { vec![0, 1, -1] };
    out.retain(|v| v.abs() <= bound);
    for k in 2..=bound {
        out.push(k);
        out.push(-k);
    }
    out
}

/// Exhaustive search for `P` with entries in `[-bound, bound]`,
/// `det P = ±1` and `P A = B P`.
///
/// The scan is lexicographic in `(a, b, c, d)` with each coordinate
/// visited in the order of small absolute value first (see source), so
/// the identity is found first whenever it works.
pub fn brute_force_conjugator(a: &Matrix2, b: &Matrix2, bound: u32) -> Option<Matrix2> {
    brute_force_conjugator_in(Group::Gl2, a, b, bound)
}

/// As [`brute_force_conjugator`], restricted to `det P = 1` for
/// [`Group::Sl2`].
pub fn brute_force_conjugator_in(group: Group, a: &Matrix2, b: &Matrix2, bound: u32) -> Option<Matrix2> {
    let bound = i64::from(bound);
    let diag = scan_values(bound, true);
    let off = scan_values(bound, false);
    let ok_det = |det: i128| det == 1 || (group == Group::Gl2 && det == -1);
    let (a, b) = (widen(a), widen(b));
    for &p in &diag {
        for &q in &off {
            for &r in &off {
                for &s in &diag {
                    let (pw, qw, rw, sw) = (p as i128, q as i128, r as i128, s as i128);
                    if !ok_det(pw * sw - qw * rw) {
                        continue;
                    }
                    // P A == B P
                    let lhs = [pw * a[0] + qw * a[2], pw * a[1] + qw * a[3], rw * a[0] + sw * a[2], rw * a[1] + sw * a[3]];
                    let rhs = [b[0] * pw + b[1] * rw, b[0] * qw + b[1] * sw, b[2] * pw + b[3] * rw, b[2] * qw + b[3] * sw];
                    if lhs == rhs {
                        return Some(Matrix2::new(p, q, r, s));
                    }
                }
            }
        }
    }
    None
}

fn widen(m: &Matrix2) -> [i128; 4] {
    m.entries().map(i128::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Matrix2 {
        Matrix2::new(a, b, c, d)
    }

    #[test]
    fn products() {
        assert_eq!(m(1, 1, 0, 1).checked_mul(&m(1, 0, -1, 1)).unwrap(), m(0, 1, -1, 1));
        let a = m(3, -7, 2, 5);
        assert_eq!(a.checked_mul(&Matrix2::IDENTITY).unwrap(), a);
        assert_eq!(m(1, 4, 0, 1).checked_mul(&m(1, 0, 1, 1)).unwrap(), m(5, 4, 1, 1));
    }

    #[test]
    fn powers() {
        assert_eq!(Matrix2::R.pow(4).unwrap(), m(1, 4, 0, 1));
        assert_eq!(m(7, 3, 2, 1).pow(0).unwrap(), Matrix2::IDENTITY);
        assert_eq!(Matrix2::L.pow(-2).unwrap(), m(1, 0, -2, 1));
        assert!(matches!(m(2, 0, 0, 1).pow(-1), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn trace_det_inverse() {
        assert_eq!(m(5, 4, 1, 1).trace().unwrap(), 6);
        assert_eq!(Matrix2::R.det().unwrap(), 1);
        assert_eq!(Matrix2::L.inverse().unwrap(), m(1, 0, -1, 1));
        let g = m(2, 1, 1, 0); // det -1
        assert_eq!(g.inverse().unwrap().checked_mul(&g).unwrap(), Matrix2::IDENTITY);
        assert!(m(2, 0, 0, 2).inverse().is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = m(i64::MAX / 2, 1, 1, 0);
        assert!(matches!(big.pow(3), Err(Error::Overflow(_))));
        assert!(matches!(m(i64::MAX, 0, 0, 1).trace(), Err(Error::Overflow(_))));
        assert!(matches!(m(i64::MAX, 2, 2, i64::MAX).det(), Err(Error::Overflow(_))));
    }

    #[test]
    fn text_form() {
        let a: Matrix2 = "[[5, 4],[1,1]]".parse().unwrap();
        assert_eq!(a, m(5, 4, 1, 1));
        assert_eq!(m(-3, 4, -1, 1).to_string(), "[[-3,4],[-1,1]]");
        assert!("[[1,2],[3]]".parse::<Matrix2>().is_err());
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[5,4],[1,1]]");
    }

    #[test]
    fn rl_class_examples() {
        let c = rl_class(&m(2, 1, 1, 1)).unwrap();
        assert_eq!((c.sign, c.word.to_string()), (1, "R L".to_string()));
        let c = rl_class(&m(5, 4, 1, 1)).unwrap();
        assert_eq!((c.sign, c.word.to_string()), (1, "R^4 L".to_string()));
        assert!(matches!(rl_class(&m(-3, 4, -1, 1)), Err(Error::NotHyperbolic(-2))));
        assert!(matches!(rl_class(&m(0, 1, 1, 0)), Err(Error::DeterminantNotOne(-1))));
        let neg = rl_class(&m(-5, -4, -1, -1)).unwrap();
        assert_eq!(neg.sign, -1);
        assert_eq!(neg.representative().unwrap(), m(-5, -4, -1, -1));
    }

    #[test]
    fn canonical_rotation() {
        use Letter::*;
        let w = RLWord::cyclic([(L, 1), (R, 2), (L, 3), (R, 1)]).unwrap();
        // cyclically R^2 L^3 R L
        assert_eq!(w.to_string(), "R^2 L^3 R L");
        let w = RLWord::cyclic([(R, 1), (L, 2), (R, 1), (L, 1)]).unwrap();
        assert_eq!(w.to_string(), "R L R L^2");
        assert!(RLWord::cyclic([(R, 3)]).is_none());
        assert!(RLWord::cyclic([(R, 1), (R, 2)]).is_none());
    }

    #[test]
    fn sl2_examples() {
        let a = m(5, 4, 1, 1);
        assert!(conjugate_sl2(&a, &a).unwrap());
        let b = a.conjugate_by(&Matrix2::L).unwrap();
        assert!(conjugate_sl2(&a, &b).unwrap());
        assert!(!conjugate_sl2(&m(1, 1, 0, 1), &m(1, -1, 0, 1)).unwrap());
        assert!(brute_force_conjugator_in(Group::Sl2, &m(1, 1, 0, 1), &m(1, -1, 0, 1), 10).is_none());
    }

    #[test]
    fn gl2_examples() {
        assert!(conjugate_gl2(&m(1, 1, 0, 1), &m(1, -1, 0, 1)).unwrap());
        assert!(conjugate_gl2(&m(5, 4, 1, 1), &m(1 + 4, 4, 1, 1)).unwrap());
        assert!(!conjugate_gl2(&m(5, 4, 1, 1), &m(-3, 4, -1, 1)).unwrap());
        assert!(matches!(conjugate_gl2(&m(0, 1, 1, 0), &m(0, 1, 1, 0)), Err(Error::DeterminantNotOne(-1))));
    }

    #[test]
    fn parabolic_invariants() {
        assert_eq!(parabolic_invariant(&m(1, 1, 0, 1)).unwrap(), 1);
        assert_eq!(parabolic_invariant(&m(1, -1, 0, 1)).unwrap(), -1);
        assert_eq!(parabolic_invariant(&m(1, 0, -1, 1)).unwrap(), 1);
        assert_eq!(parabolic_invariant(&m(-3, 4, -1, 1)).unwrap(), -1);
        assert_eq!(parabolic_invariant(&m(-1, 0, -3, -1)).unwrap(), -3);
        assert!(parabolic_invariant(&Matrix2::IDENTITY).is_err());
    }

    #[test]
    fn scalar_parabolics() {
        let i = Matrix2::IDENTITY;
        let minus = m(-1, 0, 0, -1);
        assert!(conjugate_sl2(&i, &i).unwrap());
        assert!(!conjugate_sl2(&i, &m(1, 1, 0, 1)).unwrap());
        assert!(!conjugate_sl2(&minus, &i).unwrap());
        assert!(!conjugate_sl2(&minus, &m(-1, 1, 0, -1)).unwrap());
    }

    #[test]
    fn elliptic_classes() {
        // S and S^-1 are not SL2-conjugate but are GL2-conjugate
        let s = Matrix2::S;
        let s_inv = s.inverse().unwrap();
        assert!(!conjugate_sl2(&s, &s_inv).unwrap());
        assert!(conjugate_gl2(&s, &s_inv).unwrap());
        // large entries, beyond any small search box
        let p = Matrix2::R.pow(40).unwrap().checked_mul(&Matrix2::L.pow(-17).unwrap()).unwrap();
        let far = s.conjugate_by(&p).unwrap();
        assert!(conjugate_sl2(&s, &far).unwrap());
        assert!(!conjugate_sl2(&s_inv, &far).unwrap());
    }

    #[test]
    fn brute_force_examples() {
        let a = m(3, 2, 1, 1);
        assert_eq!(brute_force_conjugator(&a, &a, 1), Some(Matrix2::IDENTITY));
        assert_eq!(brute_force_conjugator(&m(1, 1, 0, 1), &m(1, -1, 0, 1), 1), Some(m(1, 0, 0, -1)));
        for bound in [1, 3, 10] {
            assert_eq!(brute_force_conjugator(&m(1, 1, 0, 1), &m(1, 2, 0, 1), bound), None);
        }
    }

    #[test]
    fn brute_force_result_conjugates() {
        let a = m(2, 1, 1, 1);
        let b = a.conjugate_by(&m(1, 2, 1, 3)).unwrap();
        let p = brute_force_conjugator(&a, &b, 4).unwrap();
        assert_eq!(a.conjugate_by(&p).unwrap(), b);
    }
}
