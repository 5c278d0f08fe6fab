//! Reduced words in the free group on `a` and `b`, stored run-length encoded.
//!
//! Internally every word is over `{a, b}`. The `{A, B}` view with
//! `a = A⁻¹`, `b = B` exists only at the text boundary; see [`Alphabet`].

use std::fmt;
use std::ops::Mul;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn other(self) -> Self {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }
}

/// How words are read and written. `AB` renders `a^k` as `A^-k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alphabet {
    #[default]
    Ab,
    AB,
}

impl Alphabet {
    fn render(self, g: Generator, exp: i64) -> (char, i64) {
        match (self, g) {
            (Alphabet::Ab, Generator::A) => ('a', exp),
            (Alphabet::Ab, Generator::B) => ('b', exp),
            (Alphabet::AB, Generator::A) => ('A', -exp),
            (Alphabet::AB, Generator::B) => ('B', exp),
        }
    }

    fn read(self, letter: char) -> Option<(Generator, i64)> {
        match (self, letter) {
            (Alphabet::Ab, 'a') => Some((Generator::A, 1)),
            (Alphabet::Ab, 'b') => Some((Generator::B, 1)),
            (Alphabet::AB, 'A') => Some((Generator::A, -1)),
            (Alphabet::AB, 'B') => Some((Generator::B, 1)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad word at byte {position}: {message}")]
pub struct ParseWordError {
    pub position: usize,
    pub message: String,
}

/// A maximal block `generator^exponent` of a reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Run {
    pub generator: Generator,
    pub exponent: i64,
}

/// A freely reduced word. Adjacent runs always carry different generators
/// and no exponent is zero; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    runs: Vec<Run>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn a() -> Self {
        Self::power(Generator::A, 1)
    }

    pub fn b() -> Self {
        Self::power(Generator::B, 1)
    }

    pub fn power(generator: Generator, exponent: i64) -> Self {
        let mut w = Self::identity();
        w.push(generator, exponent);
        w
    }

    /// Reduces an arbitrary sequence of `(generator, exponent)` pairs.
    pub fn from_runs(runs: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut w = Self::identity();
        for (g, e) in runs {
            w.push(g, e);
        }
        w
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Appends `g^e`, cancelling against the tail as needed.
    fn push(&mut self, g: Generator, e: i64) {
        if e == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some(last) if last.generator == g => {
                last.exponent = last
                    .exponent
                    .checked_add(e)
                    .expect("exponent overflow in free group product");
                if last.exponent == 0 {
                    self.runs.pop();
                }
            }
            _ => self.runs.push(Run {
                generator: g,
                exponent: e,
            }),
        }
    }

    /// The reduced product `self · other`.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for run in &other.runs {
            out.push(run.generator, run.exponent);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            runs: self
                .runs
                .iter()
                .rev()
                .map(|r| Run {
                    generator: r.generator,
                    exponent: -r.exponent,
                })
                .collect(),
        }
    }

    /// The mirror image: runs in reverse order, exponents unchanged.
    pub fn reverse(&self) -> FreeWord {
        FreeWord {
            runs: self.runs.iter().rev().copied().collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        self.runs.iter().eq(self.runs.iter().rev())
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.runs
            .iter()
            .filter(|r| r.generator == g)
            .map(|r| r.exponent)
            .sum()
    }

    /// Number of letters `g` or `g⁻¹`.
    pub fn factor_count(&self, g: Generator) -> u64 {
        self.runs
            .iter()
            .filter(|r| r.generator == g)
            .map(|r| r.exponent.unsigned_abs())
            .sum()
    }

    pub fn len(&self) -> u64 {
        self.factor_count(Generator::A) + self.factor_count(Generator::B)
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.runs.iter().any(|r| r.exponent < 0)
    }

    /// Image under the homomorphism `a ↦ image_a`, `b ↦ image_b`.
    pub fn substitute(&self, image_a: &FreeWord, image_b: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for run in &self.runs {
            let image = match run.generator {
                Generator::A => image_a,
                Generator::B => image_b,
            };
            out = out.concat(&image.pow(run.exponent));
        }
        out
    }

    /// Runs as rendered in the given alphabet.
    pub fn rendered_runs(&self, alphabet: Alphabet) -> Vec<(char, i64)> {
        self.runs
            .iter()
            .map(|r| alphabet.render(r.generator, r.exponent))
            .collect()
    }

    /// Space separated tokens, `^` only when the exponent is not 1.
    /// The identity is written `1`.
    pub fn format(&self, alphabet: Alphabet) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        self.rendered_runs(alphabet)
            .into_iter()
            .map(|(c, e)| {
                if e == 1 {
                    c.to_string()
                } else {
                    format!("{c}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Reads `b^3 a b^2`, `bab`, `A^-1 B` and so on. Tokens may be juxtaposed
    /// or separated by whitespace; `1` or an empty string is the identity.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<FreeWord, ParseWordError> {
        let bytes = text.as_bytes();
        let fail = |position: usize, message: String| ParseWordError { position, message };
        let mut word = FreeWord::identity();
        let mut i = 0;
        if text.trim() == "1" {
            return Ok(word);
        }
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let (g, sign) = alphabet
                .read(c)
                .ok_or_else(|| fail(i, format!("unexpected character {c:?}")))?;
            i += 1;
            let mut exp = 1i64;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                exp = digits
                    .parse()
                    .map_err(|_| fail(start, format!("expected an exponent, found {digits:?}")))?;
                if exp == 0 {
                    return Err(fail(start, "exponent must be nonzero".to_string()));
                }
            }
            let e = exp
                .checked_mul(sign)
                .ok_or_else(|| fail(i, "exponent out of range".to_string()))?;
            word.push(g, e);
        }
        Ok(word)
    }
}

pub fn concat(w1: &FreeWord, w2: &FreeWord) -> FreeWord {
    w1.concat(w2)
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.concat(rhs)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Alphabet::Ab))
    }
}

/// Serializes as `[["b",3],["a",1],...]` over `{a, b}`.
impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RenderedWord(self, Alphabet::Ab).serialize(serializer)
    }
}

/// A word paired with the alphabet it should be serialized in.
pub struct RenderedWord<'a>(pub &'a FreeWord, pub Alphabet);

impl Serialize for RenderedWord<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let runs = self.0.rendered_runs(self.1);
        let mut seq = serializer.serialize_seq(Some(runs.len()))?;
        for (c, e) in runs {
            seq.serialize_element(&(c.to_string(), e))?;
        }
        seq.end()
    }
}
