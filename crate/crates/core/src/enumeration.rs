//! The enumeration scheme `E: ℚ ∪ {∞} → F₂`.
//!
//! `E(0/1) = a` and `E(1/0) = b`, where `a = A⁻¹` and `b = B`. Any other
//! index is split into its parents `lower < x < upper` and
//!
//! ```text
//! E(x) = E(upper)·E(lower)   if p·q is odd
//! E(x) = E(lower)·E(upper)   if p·q is even
//! ```
//!
//! The recursion can stop at the orphans (`TerminationMode::Orphan`) or
//! already at integers and reciprocals of integers, whose words have closed
//! forms (`TerminationMode::Shortcut`). Both give the same word.
//!
//! Negative indices run the same recursion with the real line read right to
//! left: the product order flips and the `0` parent contributes `A = a⁻¹`.
//! This is the convention under which the closed forms with the sign
//! function `s` hold, so `E(-x)` is `E(x)` with `a` replaced by `a⁻¹`.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::farey::{self, ExtRational};
use crate::word::{FreeWord, Generator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("E-word of {0} is too long to materialize")]
    TooLarge(ExtRational),
    #[error("1/0 is an orphan, not the reciprocal of an integer")]
    ZeroReciprocal,
    #[error("{0} and {1} are not Farey neighbors")]
    NotNeighbors(ExtRational, ExtRational),
    #[error("expected {0} < {1}")]
    Misordered(ExtRational, ExtRational),
    #[error("{0} is negative; the product table covers nonnegative neighbors only")]
    Negative(ExtRational),
}

/// Where the recursion bottoms out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TerminationMode {
    /// Recurse until `0/1` or `1/0`.
    #[default]
    Orphan,
    /// Stop at `n/1` and `±1/n` using the closed forms.
    Shortcut,
}

/// `s(x) = 1` for `x < 0` and `-1` for `x >= 0`.
pub fn sign_function(n: i64) -> i64 {
    if n < 0 {
        1
    } else {
        -1
    }
}

/// `E(n/1) = B^⌈|n|/2⌉ A^s(n) B^⌊|n|/2⌋`, returned over `{a, b}`.
pub fn e_word_integer(n: i64) -> FreeWord {
    let abs = n.unsigned_abs();
    let (floor, ceil) = ((abs / 2) as i64, abs.div_ceil(2) as i64);
    FreeWord::from_runs([
        (Generator::B, ceil),
        (Generator::A, -sign_function(n)),
        (Generator::B, floor),
    ])
}

/// `E(1/n) = A^(s(n)⌊|n|/2⌋) B A^(s(n)⌈|n|/2⌉)`, returned over `{a, b}`.
pub fn e_word_reciprocal(n: i64) -> Result<FreeWord, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::ZeroReciprocal);
    }
    let abs = n.unsigned_abs();
    let (floor, ceil) = ((abs / 2) as i64, abs.div_ceil(2) as i64);
    let a_exp = -sign_function(n);
    Ok(FreeWord::from_runs([
        (Generator::A, a_exp * floor),
        (Generator::B, 1),
        (Generator::A, a_exp * ceil),
    ]))
}

/// A word together with the number of distinct indices evaluated to get it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub word: FreeWord,
    pub evaluations: usize,
}

pub fn e_word(x: &ExtRational, mode: TerminationMode) -> Result<FreeWord, EnumerationError> {
    e_word_with_stats(x, mode).map(|e| e.word)
}

fn terminal(x: &ExtRational, mode: TerminationMode) -> Option<FreeWord> {
    if x.is_infinite() {
        return Some(FreeWord::b());
    }
    if x.is_zero() {
        return Some(FreeWord::a());
    }
    if mode == TerminationMode::Shortcut {
        // Sizes were bounded by the caller, so these conversions cannot fail.
        let (p, q) = x.to_i64_pair().expect("index fits in i64");
        if q == 1 {
            return Some(e_word_integer(p));
        }
        if p.abs() == 1 {
            return e_word_reciprocal(p * q).ok();
        }
    }
    None
}

/// Memoized evaluation with an explicit work stack, so deep Farey levels do
/// not exhaust the call stack. The memo lives for one call only.
pub fn e_word_with_stats(
    x: &ExtRational,
    mode: TerminationMode,
) -> Result<Evaluation, EnumerationError> {
    // Word length is |p| + q, and every exponent is bounded by it.
    if x.size().to_i64().is_none() {
        return Err(EnumerationError::TooLarge(x.clone()));
    }
    let mut memo: HashMap<ExtRational, FreeWord> = HashMap::new();
    let mut stack = vec![x.clone()];
    while let Some(top) = stack.last().cloned() {
        if memo.contains_key(&top) {
            stack.pop();
            continue;
        }
        if let Some(word) = terminal(&top, mode) {
            memo.insert(top, word);
            stack.pop();
            continue;
        }
        let (lower, upper) = farey::parents(&top).expect("non-orphan has parents");
        let negative = top.is_negative();
        let missing: Vec<ExtRational> = [&lower, &upper]
            .into_iter()
            .filter(|i| !(negative && i.is_zero()) && !memo.contains_key(*i))
            .cloned()
            .collect();
        if !missing.is_empty() {
            stack.extend(missing);
            continue;
        }
        let lookup = |i: &ExtRational| -> FreeWord {
            if negative && i.is_zero() {
                FreeWord::a().inverse()
            } else {
                memo[i].clone()
            }
        };
        let (lw, uw) = (lookup(&lower), lookup(&upper));
        let word = if top.product_is_odd() != negative {
            uw.concat(&lw)
        } else {
            lw.concat(&uw)
        };
        memo.insert(top, word);
        stack.pop();
    }
    let evaluations = memo.len();
    Ok(Evaluation {
        word: memo.remove(x).expect("root was evaluated"),
        evaluations,
    })
}

/// Which side goes first in `E(mediant)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOrder {
    /// `E(p/q)·E(r/s)`
    LowerUpper,
    /// `E(r/s)·E(p/q)`
    UpperLower,
}

/// The six parity patterns `(p, q, r, s) mod 2` a Farey-neighbor pair can
/// have, with the parity of `(p+r)(q+s)` and the resulting product order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityRow {
    EvenOddOddEven,
    OddOddEvenOdd,
    OddOddOddEven,
    OddEvenEvenOdd,
    EvenOddOddOdd,
    OddEvenOddOdd,
}

impl ParityRow {
    pub const ALL: [ParityRow; 6] = [
        ParityRow::EvenOddOddEven,
        ParityRow::OddOddEvenOdd,
        ParityRow::OddOddOddEven,
        ParityRow::OddEvenEvenOdd,
        ParityRow::EvenOddOddOdd,
        ParityRow::OddEvenOddOdd,
    ];

    /// Oddness of `p, q, r, s`.
    pub fn pattern(self) -> [bool; 4] {
        const E: bool = false;
        const O: bool = true;
        match self {
            ParityRow::EvenOddOddEven => [E, O, O, E],
            ParityRow::OddOddEvenOdd => [O, O, E, O],
            ParityRow::OddOddOddEven => [O, O, O, E],
            ParityRow::OddEvenEvenOdd => [O, E, E, O],
            ParityRow::EvenOddOddOdd => [E, O, O, O],
            ParityRow::OddEvenOddOdd => [O, E, O, O],
        }
    }

    pub fn mediant_product_is_odd(self) -> bool {
        matches!(self, ParityRow::EvenOddOddEven | ParityRow::OddEvenEvenOdd)
    }

    pub fn order(self) -> ProductOrder {
        if self.mediant_product_is_odd() {
            ProductOrder::UpperLower
        } else {
            ProductOrder::LowerUpper
        }
    }

    pub fn matching(x: &ExtRational, y: &ExtRational) -> Vec<ParityRow> {
        let odd = [x.numer(), x.denom(), y.numer(), y.denom()].map(|v| v.is_odd());
        Self::ALL
            .into_iter()
            .filter(|row| row.pattern() == odd)
            .collect()
    }
}

/// `E` of the mediant of nonnegative neighbors `x < y`, given `E(x)` and
/// `E(y)`, using the parity table.
pub fn child_word(
    x: &ExtRational,
    wx: &FreeWord,
    y: &ExtRational,
    wy: &FreeWord,
) -> Result<(ExtRational, FreeWord), EnumerationError> {
    for v in [x, y] {
        if v.is_negative() {
            return Err(EnumerationError::Negative(v.clone()));
        }
    }
    if x >= y {
        return Err(EnumerationError::Misordered(x.clone(), y.clone()));
    }
    let child =
        farey::farey_sum(x, y).map_err(|_| EnumerationError::NotNeighbors(x.clone(), y.clone()))?;
    let rows = ParityRow::matching(x, y);
    let [row] = rows[..] else {
        unreachable!("neighbors match exactly one parity row")
    };
    debug_assert_eq!(row.mediant_product_is_odd(), child.product_is_odd());
    let word = match row.order() {
        ProductOrder::LowerUpper => wx.concat(wy),
        ProductOrder::UpperLower => wy.concat(wx),
    };
    Ok((child, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn r(p: i64, q: i64) -> ExtRational {
        ExtRational::new(p, q).unwrap()
    }

    fn w(text: &str) -> FreeWord {
        FreeWord::parse(text, Alphabet::Ab).unwrap()
    }

    fn both(x: &ExtRational) -> FreeWord {
        let o = e_word(x, TerminationMode::Orphan).unwrap();
        let s = e_word(x, TerminationMode::Shortcut).unwrap();
        assert_eq!(o, s, "modes disagree at {x}");
        o
    }

    #[test]
    fn base_and_small_words() {
        assert_eq!(both(&r(0, 1)), w("a"));
        assert_eq!(both(&r(0, 1)).format(Alphabet::AB), "A^-1");
        assert_eq!(both(&r(1, 0)), w("b"));
        assert_eq!(both(&r(1, 1)), w("ba"));
        assert_eq!(both(&r(1, 2)), w("aba"));
        assert_eq!(both(&r(2, 1)), w("bab"));
    }

    #[test]
    fn worked_example_word() {
        assert_eq!(
            both(&r(68, 13)),
            w("b^3ab^5ab^5ab^5ab^6ab^5ab^5ab^5ab^5ab^6ab^5ab^5ab^5ab^3")
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(e_word_integer(2), w("bab"));
        assert_eq!(e_word_integer(0), w("a"));
        assert_eq!(e_word_integer(-1), w("b a^-1"));
        assert_eq!(e_word_integer(-1).format(Alphabet::AB), "B A");
        assert_eq!(e_word_integer(5), w("b^3ab^2"));
        assert_eq!(e_word_integer(4), w("b^2ab^2"));
        assert_eq!(e_word_reciprocal(2).unwrap(), w("aba"));
        assert_eq!(e_word_reciprocal(1).unwrap(), w("ba"));
        assert_eq!(e_word_reciprocal(-2).unwrap(), w("a^-1 b a^-1"));
        assert_eq!(e_word_reciprocal(-2).unwrap().format(Alphabet::AB), "A B A");
        assert_eq!(e_word_reciprocal(0), Err(EnumerationError::ZeroReciprocal));
        assert_eq!(sign_function(0), -1);
        assert_eq!(sign_function(-3), 1);
    }

    #[test]
    fn closed_forms_match_recursion() {
        for n in -40..=40i64 {
            let x = r(n, 1);
            assert_eq!(
                e_word(&x, TerminationMode::Orphan).unwrap(),
                e_word_integer(n),
                "{x}"
            );
            if n != 0 {
                let y = r(1, n);
                assert_eq!(
                    e_word(&y, TerminationMode::Orphan).unwrap(),
                    e_word_reciprocal(n).unwrap(),
                    "{y}"
                );
            }
        }
    }

    #[test]
    fn negative_indices() {
        assert_eq!(both(&r(-1, 1)), w("b a^-1"));
        assert_eq!(both(&r(-2, 1)), w("b a^-1 b"));
        assert_eq!(both(&r(-1, 2)), w("a^-1 b a^-1"));
        // the sign flip is the automorphism a -> a^-1
        for (p, q) in [(3, 5), (7, 2), (5, 8), (13, 4)] {
            let pos = both(&r(p, q));
            let neg = both(&r(-p, q));
            assert_eq!(
                neg,
                pos.substitute(&FreeWord::a().inverse(), &FreeWord::b())
            );
        }
    }

    #[test]
    fn shortcut_evaluates_fewer_indices() {
        for (p, q) in [(2, 3), (3, 5), (68, 13), (-5, 7), (4, 13)] {
            let x = r(p, q);
            let o = e_word_with_stats(&x, TerminationMode::Orphan).unwrap();
            let s = e_word_with_stats(&x, TerminationMode::Shortcut).unwrap();
            assert_eq!(o.word, s.word);
            assert!(
                s.evaluations < o.evaluations,
                "{x}: {} vs {}",
                s.evaluations,
                o.evaluations
            );
        }
        // 2/3 splits into 1/2 and 1/1, both closed forms
        assert_eq!(
            e_word_with_stats(&r(2, 3), TerminationMode::Shortcut)
                .unwrap()
                .evaluations,
            3
        );
        assert_eq!(
            e_word_with_stats(&r(2, 3), TerminationMode::Orphan)
                .unwrap()
                .evaluations,
            5
        );
    }

    #[test]
    fn deep_levels_do_not_recurse() {
        let x = r(1, 20_000);
        let w = e_word(&x, TerminationMode::Orphan).unwrap();
        assert_eq!(w.len(), 20_001);
        let huge = "1/100000000000000000000000".parse::<ExtRational>().unwrap();
        assert!(matches!(
            e_word(&huge, TerminationMode::Shortcut),
            Err(EnumerationError::TooLarge(_))
        ));
    }

    #[test]
    fn child_word_examples() {
        let (a, b) = (FreeWord::a(), FreeWord::b());
        assert_eq!(
            child_word(&r(0, 1), &a, &r(1, 0), &b).unwrap(),
            (r(1, 1), w("ba"))
        );
        assert_eq!(
            child_word(&r(1, 1), &w("ba"), &r(1, 0), &b).unwrap(),
            (r(2, 1), w("bab"))
        );
        assert_eq!(
            child_word(&r(0, 1), &a, &r(1, 1), &w("ba")).unwrap(),
            (r(1, 2), w("aba"))
        );
        assert_eq!(
            ParityRow::matching(&r(0, 1), &r(1, 0)),
            vec![ParityRow::EvenOddOddEven]
        );
        assert_eq!(
            ParityRow::matching(&r(1, 1), &r(1, 0)),
            vec![ParityRow::OddOddOddEven]
        );
        assert_eq!(
            ParityRow::matching(&r(0, 1), &r(1, 1)),
            vec![ParityRow::EvenOddOddOdd]
        );
    }

    #[test]
    fn child_word_rejects_bad_input() {
        let (a, b) = (FreeWord::a(), FreeWord::b());
        assert!(matches!(
            child_word(&r(1, 0), &b, &r(0, 1), &a),
            Err(EnumerationError::Misordered(..))
        ));
        assert!(matches!(
            child_word(&r(1, 3), &a, &r(2, 3), &b),
            Err(EnumerationError::NotNeighbors(..))
        ));
        assert!(matches!(
            child_word(&r(-1, 1), &a, &r(0, 1), &b),
            Err(EnumerationError::Negative(..))
        ));
    }
}
