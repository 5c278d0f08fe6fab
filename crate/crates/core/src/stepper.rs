//! Generator stepping that keeps both generators E-words.
//!
//! A step replaces one generator of the ordered pair `(x, y)` by a product
//! of the two and keeps the other in place:
//!
//! | pair profile            | preserve left | preserve right |
//! |-------------------------|---------------|----------------|
//! | both palindromes        | `(x, yx)`     | `(yx, y)`      |
//! | `x` not a palindrome    | `(x, xy)`     | `(xy, y)`      |
//! | `y` not a palindrome    | `(x, xy)`     | `(xy, y)`      |
//!
//! Starting from `(a, b) = (E(0/1), E(1/0))`, an E-sequence
//! `[n0; n1, ..., nk]` runs `n0` steps preserving the right generator, then
//! `n1` preserving the left, alternating from there. The generator changed
//! last is `E([n0; n1, ..., nk])`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::enumeration::{e_word_integer, e_word_reciprocal};
use crate::farey::{self, parse_bracketed, write_bracketed, ContinuedFraction, ExtRational};
use crate::word::{Alphabet, FreeWord, Generator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("indices {0} and {1} must satisfy left < right")]
    Misordered(ExtRational, ExtRational),
    #[error("indices {0} and {1} are not Farey neighbors")]
    NotNeighbors(ExtRational, ExtRational),
    #[error("neither generator is a palindrome; no closed form applies")]
    TwoNonPalindromes,
    #[error("{0} does not match any stopping-pair table shape")]
    ShapeMismatch(ESequence),
    #[error("invalid E-sequence: {0}")]
    InvalidSequence(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "L",
            Side::Right => "R",
        })
    }
}

/// An ordered pair of generators together with the indices they carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorPair {
    left: FreeWord,
    right: FreeWord,
    left_index: ExtRational,
    right_index: ExtRational,
}

impl GeneratorPair {
    /// `(a, b)` carrying `(0/1, 1/0)`.
    pub fn initial() -> Self {
        Self {
            left: FreeWord::a(),
            right: FreeWord::b(),
            left_index: ExtRational::zero(),
            right_index: ExtRational::infinity(),
        }
    }

    /// Checks the index invariants; the words are taken as given.
    pub fn new(
        left: FreeWord,
        right: FreeWord,
        left_index: ExtRational,
        right_index: ExtRational,
    ) -> Result<Self, StepError> {
        if left_index >= right_index {
            return Err(StepError::Misordered(left_index, right_index));
        }
        if !farey::is_farey_neighbor(&left_index, &right_index) {
            return Err(StepError::NotNeighbors(left_index, right_index));
        }
        Ok(Self {
            left,
            right,
            left_index,
            right_index,
        })
    }

    pub fn left(&self) -> &FreeWord {
        &self.left
    }

    pub fn right(&self) -> &FreeWord {
        &self.right
    }

    pub fn left_index(&self) -> &ExtRational {
        &self.left_index
    }

    pub fn right_index(&self) -> &ExtRational {
        &self.right_index
    }

    pub fn word(&self, side: Side) -> &FreeWord {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn index_of(&self, side: Side) -> &ExtRational {
        match side {
            Side::Left => &self.left_index,
            Side::Right => &self.right_index,
        }
    }

    pub fn format(&self, alphabet: Alphabet) -> String {
        format!(
            "({}, {})",
            self.left.format(alphabet),
            self.right.format(alphabet)
        )
    }

    fn replace(&self, side: Side, word: FreeWord, index: ExtRational) -> Self {
        let mut next = self.clone();
        match side {
            Side::Left => {
                next.left = word;
                next.left_index = index;
            }
            Side::Right => {
                next.right = word;
                next.right_index = index;
            }
        }
        next
    }
}

impl fmt::Display for GeneratorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Alphabet::Ab))
    }
}

fn other(side: Side) -> Side {
    match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    }
}

/// One step of the palindrome-aware algorithm.
///
/// When both generators are non-palindromes the two non-palindrome rows of
/// the table agree, so the step is still defined; E-word pairs never reach
/// that case.
pub fn step(pair: &GeneratorPair, preserve: Side) -> GeneratorPair {
    let (x, y) = (&pair.left, &pair.right);
    let product = if x.is_palindrome() && y.is_palindrome() {
        y.concat(x)
    } else {
        x.concat(y)
    };
    let mediant = farey::farey_sum(&pair.left_index, &pair.right_index)
        .expect("pair indices are Farey neighbors");
    pair.replace(other(preserve), product, mediant)
}

/// `n` consecutive steps preserving the same side, by closed form.
///
/// With `E_n(x, y)` and `E_{1/n}(x, y)` the integer and reciprocal E-words
/// evaluated at `a = x`, `b = y`:
///
/// | pair profile         | preserve left         | preserve right          |
/// |----------------------|-----------------------|-------------------------|
/// | both palindromes     | `(x, E_{1/n}(x, y))`  | `(E_n(x, y), y)`        |
/// | `x` not a palindrome | `(x, xⁿy)`            | `(E_{1/n}(y, x), y)`    |
/// | `y` not a palindrome | `(x, E_n(y, x))`      | `(xyⁿ, y)`              |
pub fn run_preserving(
    pair: &GeneratorPair,
    preserve: Side,
    n: u64,
) -> Result<GeneratorPair, StepError> {
    if n == 0 {
        return Ok(pair.clone());
    }
    let (x, y) = (&pair.left, &pair.right);
    let (xp, yp) = (x.is_palindrome(), y.is_palindrome());
    let count = i64::try_from(n).map_err(|_| StepError::InvalidSequence(n.to_string()))?;
    let integer_word = || e_word_integer(count);
    let reciprocal_word = || e_word_reciprocal(count).expect("n is positive");
    let word = match (xp, yp, preserve) {
        (true, true, Side::Left) => reciprocal_word().substitute(x, y),
        (true, true, Side::Right) => integer_word().substitute(x, y),
        (false, true, Side::Left) => x.pow(count).concat(y),
        (false, true, Side::Right) => reciprocal_word().substitute(y, x),
        (true, false, Side::Left) => integer_word().substitute(y, x),
        (true, false, Side::Right) => x.concat(&y.pow(count)),
        (false, false, _) => return Err(StepError::TwoNonPalindromes),
    };
    let big_n = BigInt::from(n);
    let (p, q) = (pair.left_index.numer(), pair.left_index.denom());
    let (r, s) = (pair.right_index.numer(), pair.right_index.denom());
    let index = match preserve {
        Side::Left => ExtRational::new(r + &big_n * p, s + &big_n * q),
        Side::Right => ExtRational::new(p + &big_n * r, q + &big_n * s),
    }
    .expect("mediants of neighbors are well defined");
    Ok(pair.replace(other(preserve), word, index))
}

/// Step counts `[n0; n1, ..., nk]`: `n0 >= 0`, every later entry `>= 1`.
///
/// Unlike [`ContinuedFraction`], a trailing `1` is kept as written; the
/// stepping is well defined for it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ESequence {
    entries: Vec<u64>,
}

impl ESequence {
    pub fn new(entries: Vec<u64>) -> Result<Self, StepError> {
        if entries.is_empty() {
            return Err(StepError::InvalidSequence("no entries".into()));
        }
        if entries[1..].contains(&0) {
            return Err(StepError::InvalidSequence("only n0 may be zero".into()));
        }
        Ok(Self { entries })
    }

    pub fn from_continued_fraction(cf: &ContinuedFraction) -> Result<Self, StepError> {
        let entries = cf
            .entries()
            .iter()
            .map(|a| {
                u64::try_from(a)
                    .map_err(|_| StepError::InvalidSequence(format!("{a} is too large")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `k`, the index of the last entry.
    pub fn depth(&self) -> usize {
        self.entries.len() - 1
    }

    /// No trailing `1` after `n0`.
    pub fn is_canonical(&self) -> bool {
        self.entries.len() == 1 || *self.entries.last().unwrap() >= 2
    }

    /// `m_i = ⌊n_i / 2⌋`
    pub fn floor_half(&self, i: usize) -> u64 {
        self.entries[i] / 2
    }

    /// `M_i = ⌈n_i / 2⌉`
    pub fn ceil_half(&self, i: usize) -> u64 {
        self.entries[i].div_ceil(2)
    }

    /// Side preserved during phase `i`: the right generator for even `i`.
    pub fn preserved_side(i: usize) -> Side {
        if i.is_multiple_of(2) {
            Side::Right
        } else {
            Side::Left
        }
    }

    /// The slot rewritten by the final phase.
    pub fn last_changed_side(&self) -> Side {
        other(Self::preserved_side(self.depth()))
    }

    pub fn total_steps(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// The rational `[n0; n1, ..., nk]`.
    pub fn value(&self) -> ExtRational {
        let (g, h) = farey::approximants(&self.big_entries())
            .pop()
            .expect("nonempty");
        ExtRational::new(g, h).expect("approximants are never 0/0")
    }

    fn big_entries(&self) -> Vec<BigInt> {
        self.entries.iter().map(|&n| BigInt::from(n)).collect()
    }

    /// Fractions `p_i/q_i` (left) and `r_i/s_i` (right) carried by the run,
    /// from `p_0/q_0 = 0/1`, `r_0/s_0 = 1/0` and
    ///
    /// ```text
    /// p_i = n_{2i-2} r_{i-1} + p_{i-1}     r_i = n_{2i-1} p_i + r_{i-1}
    /// q_i = n_{2i-2} s_{i-1} + q_{i-1}     s_i = n_{2i-1} q_i + s_{i-1}
    /// ```
    pub fn tracked_fractions(&self) -> TrackedFractions {
        let mut left = vec![(BigInt::zero(), BigInt::one())];
        let mut right = vec![(BigInt::one(), BigInt::zero())];
        for (j, &n) in self.entries.iter().enumerate() {
            let n = BigInt::from(n);
            let (p, q) = left.last().unwrap().clone();
            let (r, s) = right.last().unwrap().clone();
            if j % 2 == 0 {
                left.push((&n * &r + p, &n * &s + q));
            } else {
                right.push((&n * &p + r, &n * &q + s));
            }
        }
        TrackedFractions { left, right }
    }
}

impl fmt::Display for ESequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.entries)
    }
}

impl FromStr for ESequence {
    type Err = StepError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let entries = parse_bracketed::<u64>(text)
            .map_err(|reason| StepError::InvalidSequence(format!("{text:?}: {reason}")))?;
        Self::new(entries)
    }
}

/// Unreduced numerator/denominator pairs as produced by the recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedFractions {
    /// `p_0/q_0, p_1/q_1, ...`
    pub left: Vec<(BigInt, BigInt)>,
    /// `r_0/s_0, r_1/s_1, ...`
    pub right: Vec<(BigInt, BigInt)>,
}

impl TrackedFractions {
    fn last_as_rationals(&self) -> (ExtRational, ExtRational) {
        let conv = |(a, b): &(BigInt, BigInt)| ExtRational::new(a.clone(), b.clone()).unwrap();
        (
            conv(self.left.last().unwrap()),
            conv(self.right.last().unwrap()),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub pair: GeneratorPair,
    pub preserved: Side,
}

/// Every pair visited while running an E-sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    pub sequence: ESequence,
    pub initial: GeneratorPair,
    pub steps: Vec<TraceStep>,
    pub fractions: TrackedFractions,
    pub last_changed: Side,
}

impl StepTrace {
    pub fn final_pair(&self) -> &GeneratorPair {
        self.steps.last().map_or(&self.initial, |s| &s.pair)
    }

    pub fn last_changed_word(&self) -> &FreeWord {
        self.final_pair().word(self.last_changed)
    }

    pub fn last_changed_index(&self) -> &ExtRational {
        self.final_pair().index_of(self.last_changed)
    }

    /// The pair after phase `i` has completed.
    pub fn pair_after_phase(&self, i: usize) -> &GeneratorPair {
        let done: u64 = self.sequence.entries()[..=i].iter().sum();
        match done {
            0 => &self.initial,
            d => &self.steps[d as usize - 1].pair,
        }
    }

    /// One line for the start pair, then one per step:
    /// `→ (left, right) [preserved: L|R] [indices: j/k, m/n]`.
    pub fn lines(&self, alphabet: Alphabet) -> Vec<String> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(format!(
            "  {} [indices: {}, {}]",
            self.initial.format(alphabet),
            self.initial.left_index,
            self.initial.right_index
        ));
        for s in &self.steps {
            out.push(format!(
                "→ {} [preserved: {}] [indices: {}, {}]",
                s.pair.format(alphabet),
                s.preserved,
                s.pair.left_index,
                s.pair.right_index
            ));
        }
        out
    }

    pub fn report(&self, alphabet: Alphabet) -> TraceReport {
        let fraction = |(a, b): &(BigInt, BigInt)| format!("{a}/{b}");
        let last = self.last_changed_word();
        TraceReport {
            sequence: self.sequence.to_string(),
            value: self.sequence.value().to_string(),
            initial: PairReport::new(&self.initial, alphabet),
            steps: self
                .steps
                .iter()
                .map(|s| StepReport {
                    preserved: s.preserved,
                    pair: PairReport::new(&s.pair, alphabet),
                })
                .collect(),
            p_q: self.fractions.left.iter().map(fraction).collect(),
            r_s: self.fractions.right.iter().map(fraction).collect(),
            last_changed: self.last_changed,
            last_changed_index: self.last_changed_index().to_string(),
            final_pair: PairReport::new(self.final_pair(), alphabet),
            exponent_sums: ExponentSums {
                a: last.exponent_sum(Generator::A),
                b: last.exponent_sum(Generator::B),
            },
        }
    }
}

/// JSON shape of a trace.
#[derive(Debug, Clone, Serialize)]
pub struct TraceReport {
    pub sequence: String,
    pub value: String,
    pub initial: PairReport,
    pub steps: Vec<StepReport>,
    pub p_q: Vec<String>,
    pub r_s: Vec<String>,
    pub last_changed: Side,
    pub last_changed_index: String,
    pub final_pair: PairReport,
    pub exponent_sums: ExponentSums,
}

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub preserved: Side,
    #[serde(flatten)]
    pub pair: PairReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub left: Vec<(String, i64)>,
    pub right: Vec<(String, i64)>,
    pub left_text: String,
    pub right_text: String,
    pub left_index: String,
    pub right_index: String,
}

impl PairReport {
    fn new(pair: &GeneratorPair, alphabet: Alphabet) -> Self {
        let runs = |w: &FreeWord| {
            w.rendered_runs(alphabet)
                .into_iter()
                .map(|(c, e)| (c.to_string(), e))
                .collect()
        };
        Self {
            left: runs(&pair.left),
            right: runs(&pair.right),
            left_text: pair.left.format(alphabet),
            right_text: pair.right.format(alphabet),
            left_index: pair.left_index.to_string(),
            right_index: pair.right_index.to_string(),
        }
    }
}

/// Exponent sums of the last changed generator, over `{a, b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExponentSums {
    pub a: i64,
    pub b: i64,
}

/// Runs the E-sequence from `(a, b)` one step at a time.
pub fn run_esequence(seq: &ESequence) -> StepTrace {
    let initial = GeneratorPair::initial();
    let mut pair = initial.clone();
    let mut steps = Vec::with_capacity(seq.total_steps() as usize);
    for (i, &n) in seq.entries().iter().enumerate() {
        let side = ESequence::preserved_side(i);
        for _ in 0..n {
            pair = step(&pair, side);
            steps.push(TraceStep {
                pair: pair.clone(),
                preserved: side,
            });
        }
    }
    StepTrace {
        sequence: seq.clone(),
        initial,
        steps,
        fractions: seq.tracked_fractions(),
        last_changed: seq.last_changed_side(),
    }
}

fn a_pow(e: i64) -> FreeWord {
    FreeWord::power(Generator::A, e)
}

fn b_pow(e: i64) -> FreeWord {
    FreeWord::power(Generator::B, e)
}

fn product(parts: &[FreeWord]) -> FreeWord {
    parts
        .iter()
        .fold(FreeWord::identity(), |acc, w| acc.concat(w))
}

/// The stopping pair read off the small-case tables, without stepping.
///
/// Shapes covered, with `m_i = ⌊n_i/2⌋` and `M_i = ⌈n_i/2⌉`:
///
/// ```text
/// [odd; n1]         (b^M0 a b^m0, b^M0 (ab^n0)^(n1-1) a b^M0)
/// [even; n1]        (b^m0 a b^m0, b^m0 (ab^n0)^(m1-1) a b^(n0+1) (ab^n0)^(M1-1) a b^m0)
/// [odd; 1, n2]      (b^M0 (ab^(n0+1))^m2 a b^n0 (ab^(n0+1))^(M2-1) a b^M0, b^M0 a b^M0)
/// [even; 1, n2]     (b^m0 (ab^(n0+1))^n2 a b^m0, b^(m0+1) a b^m0)
/// [0; odd; n2]      (a^M1 (ba^n1)^(n2-1) b a^M1, a^m1 b a^M1)
/// [0; even; n2]     (a^m1 (ba^n1)^(M2-1) b a^(n1+1) (ba^n1)^(m2-1) b a^m1, a^m1 b a^m1)
/// [0; odd; 1, n3]   (a^M1 b a^M1, a^M1 (ba^(n1+1))^(M3-1) b a^n1 (ba^(n1+1))^m3 b a^M1)
/// [0; even; 1, n3]  (a^m1 b a^(m1+1), a^m1 (ba^(n1+1))^n3 b a^m1)
/// ```
///
/// `[0; n1]` is covered by the `[even; n1]` row. Exponents of `-1` that
/// appear when an entry is 1 are reduced in the free group.
pub fn closed_form_stop(seq: &ESequence) -> Result<GeneratorPair, StepError> {
    let e: Vec<i64> = seq
        .entries()
        .iter()
        .map(|&n| i64::try_from(n).map_err(|_| StepError::ShapeMismatch(seq.clone())))
        .collect::<Result<_, _>>()?;
    let m = |i: usize| e[i] / 2;
    let big_m = |i: usize| (e[i] + 1) / 2;
    let odd = |i: usize| e[i] % 2 == 1;
    let (left, right) = match e.len() {
        3 | 4 if e[0] == 0 && (e.len() == 3 || e[2] == 1) => {
            let n1 = e[1];
            let ba = |k: i64| product(&[b_pow(1), a_pow(k)]);
            if e.len() == 3 {
                let n2 = e[2];
                if odd(1) {
                    (
                        product(&[a_pow(big_m(1)), ba(n1).pow(n2 - 1), ba(big_m(1))]),
                        product(&[a_pow(m(1)), ba(big_m(1))]),
                    )
                } else {
                    (
                        product(&[
                            a_pow(m(1)),
                            ba(n1).pow(big_m(2) - 1),
                            ba(n1 + 1),
                            ba(n1).pow(m(2) - 1),
                            ba(m(1)),
                        ]),
                        product(&[a_pow(m(1)), ba(m(1))]),
                    )
                }
            } else {
                let n3 = e[3];
                if odd(1) {
                    (
                        product(&[a_pow(big_m(1)), ba(big_m(1))]),
                        product(&[
                            a_pow(big_m(1)),
                            ba(n1 + 1).pow(big_m(3) - 1),
                            ba(n1),
                            ba(n1 + 1).pow(m(3)),
                            ba(big_m(1)),
                        ]),
                    )
                } else {
                    (
                        product(&[a_pow(m(1)), ba(m(1) + 1)]),
                        product(&[a_pow(m(1)), ba(n1 + 1).pow(n3), ba(m(1))]),
                    )
                }
            }
        }
        2 => {
            let (n0, n1) = (e[0], e[1]);
            let ab = |k: i64| product(&[a_pow(1), b_pow(k)]);
            if odd(0) {
                (
                    product(&[b_pow(big_m(0)), ab(m(0))]),
                    product(&[b_pow(big_m(0)), ab(n0).pow(n1 - 1), ab(big_m(0))]),
                )
            } else {
                (
                    product(&[b_pow(m(0)), ab(m(0))]),
                    product(&[
                        b_pow(m(0)),
                        ab(n0).pow(m(1) - 1),
                        ab(n0 + 1),
                        ab(n0).pow(big_m(1) - 1),
                        ab(m(0)),
                    ]),
                )
            }
        }
        3 if e[1] == 1 => {
            let (n0, n2) = (e[0], e[2]);
            let ab = |k: i64| product(&[a_pow(1), b_pow(k)]);
            if odd(0) {
                (
                    product(&[
                        b_pow(big_m(0)),
                        ab(n0 + 1).pow(m(2)),
                        ab(n0),
                        ab(n0 + 1).pow(big_m(2) - 1),
                        ab(big_m(0)),
                    ]),
                    product(&[b_pow(big_m(0)), ab(big_m(0))]),
                )
            } else {
                (
                    product(&[b_pow(m(0)), ab(n0 + 1).pow(n2), ab(m(0))]),
                    product(&[b_pow(m(0) + 1), ab(m(0))]),
                )
            }
        }
        _ => return Err(StepError::ShapeMismatch(seq.clone())),
    };
    let (left_index, right_index) = seq.tracked_fractions().last_as_rationals();
    GeneratorPair::new(left, right, left_index, right_index)
}

/// How a word compares with the `b^k1 a b^k2 a ⋯ a b^k(q+1)` shape
/// (or its `a`/`b`-swapped form when `n0 = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentForm {
    /// Filler exponents between consecutive separators, boundary ones
    /// included (and possibly zero).
    pub exponents: Vec<u64>,
    /// `k1` and `k(q+1)` both lie in `{m, M}`.
    pub boundary_ok: bool,
    /// Every interior exponent lies in `{n, n+1}`.
    pub interior_within: bool,
    /// Both `n` and `n+1` occur in the interior.
    pub interior_has_both: bool,
}

impl ExponentForm {
    /// Boundary in `{m, M}`, interior a subset of `{n, n+1}`.
    pub fn weak(&self) -> bool {
        self.boundary_ok && self.interior_within
    }

    /// Boundary in `{m, M}`, interior exactly `{n, n+1}`.
    pub fn full(&self) -> bool {
        self.weak() && self.interior_has_both
    }
}

/// Splits `word` into filler exponents around single separator letters.
/// Returns `None` when a negative exponent appears.
fn filler_exponents(word: &FreeWord, separator: Generator) -> Option<Vec<u64>> {
    let mut gaps = vec![0u64];
    for run in word.runs() {
        let e = u64::try_from(run.exponent).ok()?;
        if run.generator == separator {
            gaps.extend(std::iter::repeat_n(0, e as usize));
        } else {
            *gaps.last_mut().unwrap() += e;
        }
    }
    Some(gaps)
}

/// Analyzes `word` against the exponent shape predicted by `seq`. For
/// `n0 > 0` the separator is `a` and the reference entry is `n0`; for
/// `n0 = 0` the roles swap and the reference entry is `n1`.
pub fn exponent_form(word: &FreeWord, seq: &ESequence) -> Option<ExponentForm> {
    let (separator, i) = if seq.entries()[0] > 0 {
        (Generator::A, 0)
    } else if seq.depth() >= 1 {
        (Generator::B, 1)
    } else {
        return None;
    };
    let n = seq.entries()[i];
    let (lo, hi) = (seq.floor_half(i), seq.ceil_half(i));
    let exponents = filler_exponents(word, separator)?;
    if exponents.len() < 2 {
        return None;
    }
    let boundary = [exponents[0], *exponents.last().unwrap()];
    let interior = &exponents[1..exponents.len() - 1];
    Some(ExponentForm {
        boundary_ok: boundary.iter().all(|&k| k == lo || k == hi),
        interior_within: interior.iter().all(|&k| k == n || k == n + 1),
        interior_has_both: interior.contains(&n) && interior.contains(&(n + 1)),
        exponents,
    })
}

/// True iff `word` has boundary exponents in `{m, M}` and interior
/// exponents forming exactly `{n, n+1}`.
///
/// Guaranteed for the E-word of a canonical sequence with `n0 > 0, k >= 3`
/// or `n0 = 0, k >= 4`. Sequences ending in 1 can legitimately fail.
pub fn exponent_form_check(word: &FreeWord, seq: &ESequence) -> bool {
    exponent_form(word, seq).is_some_and(|f| f.full())
}
