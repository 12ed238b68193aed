//! Words in the 3-strand braid group and their monodromy matrices.
//!
//! Text form: syllables `s1` / `s2` (or `σ1` / `σ2`) with an optional
//! `^k` exponent, separated by spaces, e.g. `s1^4 s2^-1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::mat2::Matrix2;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    S1,
    S2,
}

impl Generator {
    /// Image in SL(2,Z): `σ₁ ↦ (1 1; 0 1)`, `σ₂ ↦ (1 0; -1 1)`.
    pub fn matrix(self) -> Matrix2 {
        match self {
            Generator::S1 => Matrix2::R,
            Generator::S2 => Matrix2::new(1, 0, -1, 1),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Generator::S1 => "s1",
            Generator::S2 => "s2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(generator: Generator, exponent: i64) -> Self {
        Syllable { generator, exponent }
    }
}

/// A braid word as a list of syllables with nonzero exponents. The empty
/// word is the identity braid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    syllables: Vec<Syllable>,
}

/// Shorthand for building words in code: `word(&[(S1, 4), (S2, -1)])`.
pub fn word(syllables: &[(Generator, i64)]) -> BraidWord {
    BraidWord::new(syllables.iter().map(|&(g, e)| Syllable::new(g, e)))
}

impl BraidWord {
    /// Drops zero-exponent syllables; does not merge neighbours.
    pub fn new(syllables: impl IntoIterator<Item = Syllable>) -> Self {
        BraidWord { syllables: syllables.into_iter().filter(|s| s.exponent != 0).collect() }
    }

    pub fn identity() -> Self {
        BraidWord::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        BraidWord { syllables }
    }

    pub fn invert(&self) -> BraidWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable::new(s.generator, -s.exponent))
            .collect();
        BraidWord { syllables }
    }

    /// Merges adjacent syllables on the same generator and drops the ones
    /// that cancel, until nothing changes.
    pub fn free_reduce(&self) -> Result<BraidWord> {
        let mut out: Vec<Syllable> = Vec::with_capacity(self.syllables.len());
        for &s in &self.syllables {
            match out.last_mut() {
                Some(last) if last.generator == s.generator => {
                    last.exponent = last
                        .exponent
                        .checked_add(s.exponent)
                        .ok_or(Error::Overflow("braid exponent"))?;
                    if last.exponent == 0 {
                        out.pop();
                    }
                }
                _ => out.push(s),
            }
        }
        Ok(BraidWord { syllables: out })
    }

    /// Sum of all exponents.
    pub fn exponent_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.exponent).sum()
    }

    /// Monodromy matrix: the syllable images multiplied left to right.
    pub fn monodromy(&self) -> Result<Matrix2> {
        self.syllables.iter().try_fold(Matrix2::IDENTITY, |acc, s| {
            acc.checked_mul(&s.generator.matrix().pow(s.exponent)?)
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.generator.name())?;
            if s.exponent != 1 {
                write!(f, "^{}", s.exponent)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, prefix: &str) -> bool {
        if self.rest().starts_with(prefix) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn skip_spaces(&mut self) -> bool {
        let n = self.rest().len() - self.rest().trim_start_matches(' ').len();
        self.pos += n;
        n > 0
    }

    fn generator(&mut self) -> Result<Generator> {
        for (prefix, g) in [("s1", Generator::S1), ("s2", Generator::S2), ("σ1", Generator::S1), ("σ2", Generator::S2)] {
            if self.eat(prefix) {
                return Ok(g);
            }
        }
        self.error("expected a generator `s1` or `s2`")
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat("^") {
            return Ok(1);
        }
        let start = self.pos;
        self.eat("-");
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.error("expected an integer exponent");
        }
        let literal = &self.text[start..self.pos + digits];
        let value: i64 = match literal.parse() {
            Ok(v) if v != i64::MIN => v,
            _ => {
                self.pos = start;
                return self.error("exponent out of range");
            }
        };
        if value == 0 {
            self.pos = start;
            return self.error("zero exponent");
        }
        self.pos += digits;
        Ok(value)
    }

    fn word(&mut self) -> Result<BraidWord> {
        let mut syllables = Vec::new();
        self.skip_spaces();
        while !self.rest().is_empty() {
            let generator = self.generator()?;
            let exponent = self.exponent()?;
            syllables.push(Syllable { generator, exponent });
            let spaced = self.skip_spaces();
            if !spaced && !self.rest().is_empty() {
                return self.error("expected a space between syllables");
            }
        }
        Ok(BraidWord { syllables })
    }
}

/// Parses the text form. No free reduction is applied.
pub fn parse(text: &str) -> Result<BraidWord> {
    Parser { text, pos: 0 }.word()
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::Generator::{S1, S2};
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse("s1^4 s2^-1").unwrap(), word(&[(S1, 4), (S2, -1)]));
        assert_eq!(parse("").unwrap(), BraidWord::identity());
        assert_eq!(parse("σ1 σ2^2").unwrap(), word(&[(S1, 1), (S2, 2)]));
        assert_eq!(parse("s1  s1^-1").unwrap().syllables().len(), 2);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let offset = |t: &str| match parse(t) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{t:?} parsed as {other:?}"),
        };
        assert_eq!(offset("s1^p"), 3);
        assert_eq!(offset("s1 s3"), 3);
        assert_eq!(offset("s1^0"), 3);
        assert_eq!(offset("s1^-0"), 3);
        assert_eq!(offset("s1s2"), 2);
        assert_eq!(offset("s1^"), 3);
        assert_eq!(offset("s2^99999999999999999999"), 3);
        assert_eq!(offset("σ1 x"), 4);
    }

    #[test]
    fn group_operations() {
        let cancel = word(&[(S1, 2), (S1, -2)]);
        assert!(cancel.free_reduce().unwrap().is_identity());
        assert_eq!(word(&[(S1, 4), (S2, -1)]).invert(), word(&[(S2, 1), (S1, -4)]));
        let s = word(&[(S1, 1)]);
        assert_eq!(s.concat(&s).free_reduce().unwrap(), word(&[(S1, 2)]));
        let nested = word(&[(S2, 1), (S1, 3), (S1, -3), (S2, 2)]);
        assert_eq!(nested.free_reduce().unwrap(), word(&[(S2, 3)]));
    }

    #[test]
    fn monodromy_examples() {
        assert_eq!(word(&[(S1, 4), (S2, 1)]).monodromy().unwrap(), Matrix2::new(-3, 4, -1, 1));
        let a3 = word(&[(S1, 1), (S2, 2), (S1, 1), (S2, -1)]);
        assert_eq!(a3.monodromy().unwrap(), Matrix2::new(-1, 0, -3, -1));
        assert_eq!(BraidWord::identity().monodromy().unwrap(), Matrix2::IDENTITY);
        let d2 = word(&[(S1, 1), (S2, 2), (S1, -2), (S2, -1)]);
        assert_eq!(d2.monodromy().unwrap(), Matrix2::new(2, 3, 3, 5));
        assert_eq!(d2.monodromy().unwrap().trace().unwrap(), 7);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(word(&[(S1, 4), (S2, -1)]).exponent_sum(), 3);
        assert_eq!(BraidWord::identity().exponent_sum(), 0);
        assert_eq!(word(&[(S1, 2), (S2, 2), (S1, 2), (S2, -1)]).exponent_sum(), 5);
    }

    #[test]
    fn display() {
        assert_eq!(word(&[(S1, 1), (S2, 2), (S1, -2), (S2, -1)]).to_string(), "s1 s2^2 s1^-2 s2^-1");
        assert_eq!(BraidWord::identity().to_string(), "");
    }
}
