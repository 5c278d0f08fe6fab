//! Exact arithmetic on the extended rationals ℚ ∪ {∞}.
//!
//! Every value is kept in lowest terms with a nonnegative denominator, so
//! equality of values is equality of fields. Infinity is `1/0` and zero is
//! `0/1`. Arithmetic is arbitrary precision throughout.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    #[error("0/0 is not an extended rational")]
    Indeterminate,
    #[error("{0} and {1} are not Farey neighbors")]
    NotNeighbors(ExtRational, ExtRational),
    #[error("orphan has no parents: {0}")]
    Orphan(ExtRational),
    #[error("expected a finite nonnegative rational, got {0}")]
    NotNonnegative(ExtRational),
    #[error("invalid rational {text:?}: {reason}")]
    ParseRational { text: String, reason: String },
    #[error("invalid continued fraction {text:?}: {reason}")]
    ParseContinuedFraction { text: String, reason: String },
    #[error("invalid continued fraction: {0}")]
    InvalidContinuedFraction(String),
}

/// An element of ℚ ∪ {∞} in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtRational {
    p: BigInt,
    q: BigInt,
}

impl ExtRational {
    /// Builds the canonical representative of `p/q`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, FareyError> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(FareyError::Indeterminate);
        }
        if q.is_zero() {
            return Ok(Self::infinity());
        }
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        let g = p.gcd(&q);
        if !g.is_one() {
            p /= &g;
            q /= &g;
        }
        Ok(Self { p, q })
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self {
            p: n.into(),
            q: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn infinity() -> Self {
        Self {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    /// `0/1` and `1/0`: the two indices with no parents.
    pub fn is_orphan(&self) -> bool {
        self.is_zero() || self.is_infinite()
    }

    pub fn is_negative(&self) -> bool {
        self.p.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.q.is_one()
    }

    /// True for `1/n` and `-1/n` with `n >= 1`.
    pub fn is_reciprocal(&self) -> bool {
        !self.is_infinite() && self.p.abs().is_one()
    }

    /// `|p| + q`, the word length of the associated E-word.
    pub fn size(&self) -> BigInt {
        self.p.abs() + &self.q
    }

    /// Parity of `p·q`.
    pub fn product_is_odd(&self) -> bool {
        self.p.is_odd() && self.q.is_odd()
    }

    /// Numerator and denominator as machine integers, if they fit.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.p.to_i64()?, self.q.to_i64()?))
    }
}

impl Ord for ExtRational {
    // Denominators are nonnegative, so cross multiplication orders ∞ above
    // every finite value.
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.p * &other.q).cmp(&(&other.p * &self.q))
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for ExtRational {
    type Err = FareyError;

    /// Accepts `p/q`, a bare integer, or `inf` / `∞` for `1/0`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| FareyError::ParseRational {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let s = text.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::infinity());
        }
        let parse_int = |part: &str| -> Result<BigInt, FareyError> {
            let part = part.trim();
            let digits = part.strip_prefix('+').unwrap_or(part);
            if digits.is_empty() || digits.starts_with('+') {
                return Err(err("empty integer"));
            }
            digits
                .parse::<BigInt>()
                .map_err(|_| err(&format!("{part:?} is not an integer")))
        };
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (parse_int(p)?, parse_int(q)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        Self::new(p, q).map_err(|_| err("0/0 is undefined"))
    }
}

/// Canonicalizes `p/q`: signs move to the numerator, common factors go away,
/// and every `n/0` becomes `1/0`.
pub fn normalize(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<ExtRational, FareyError> {
    ExtRational::new(p, q)
}

fn determinant(x: &ExtRational, y: &ExtRational) -> BigInt {
    &x.p * &y.q - &y.p * &x.q
}

/// `|ps - rq| = 1`.
pub fn is_farey_neighbor(x: &ExtRational, y: &ExtRational) -> bool {
    determinant(x, y).abs().is_one()
}

/// The mediant `(p+r)/(q+s)` of two Farey neighbors.
///
/// Infinity is always taken as `1/0`, so the sum with a negative neighbor of
/// `∞` is formed from the positive representative.
pub fn farey_sum(x: &ExtRational, y: &ExtRational) -> Result<ExtRational, FareyError> {
    if !is_farey_neighbor(x, y) {
        return Err(FareyError::NotNeighbors(x.clone(), y.clone()));
    }
    ExtRational::new(&x.p + &y.p, &x.q + &y.q)
}

/// The lower and upper parents of a non-orphan.
///
/// For `x >= 0` this is the unique Farey-neighbor pair `lower < x < upper`
/// whose mediant is `x`. For negative integers the lower parent is `∞`,
/// which bounds the negatives from below: `parents(-3) = (∞, -2)`.
pub fn parents(x: &ExtRational) -> Result<(ExtRational, ExtRational), FareyError> {
    if x.is_orphan() {
        return Err(FareyError::Orphan(x.clone()));
    }
    if x.is_integer() {
        let n = &x.p;
        return Ok(if n.is_positive() {
            (ExtRational::integer(n - 1), ExtRational::infinity())
        } else {
            (ExtRational::infinity(), ExtRational::integer(n + 1))
        });
    }
    // Lower parent m/n solves p·n - q·m = 1 with 0 < n < q.
    let (p, q) = (&x.p, &x.q);
    let egcd = p.extended_gcd(q);
    debug_assert!(egcd.gcd.is_one());
    let n = egcd.x.mod_floor(q);
    let m = (p * &n - BigInt::one()) / q;
    let lower = ExtRational::new(m.clone(), n.clone())?;
    let upper = ExtRational::new(p - m, q - n)?;
    Ok((lower, upper))
}

/// A continued fraction `[a0; a1, ..., ak]` in canonical form: `a0 >= 0`,
/// `ai >= 1`, and `ak >= 2` whenever `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    entries: Vec<BigInt>,
}

impl ContinuedFraction {
    /// Validates the entries and folds a trailing `1` into its predecessor.
    pub fn new(entries: Vec<BigInt>) -> Result<Self, FareyError> {
        let invalid = |reason: &str| FareyError::InvalidContinuedFraction(reason.to_string());
        let mut entries = entries;
        match entries.first() {
            None => return Err(invalid("no entries")),
            Some(a0) if a0.is_negative() => return Err(invalid("a0 must be nonnegative")),
            _ => {}
        }
        if entries[1..].iter().any(|a| !a.is_positive()) {
            return Err(invalid("entries after a0 must be positive"));
        }
        if entries.len() >= 2 && entries.last().is_some_and(|a| a.is_one()) {
            entries.pop();
            *entries.last_mut().unwrap() += 1;
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Index of the last entry.
    pub fn depth(&self) -> usize {
        self.entries.len() - 1
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.entries)
    }
}

impl FromStr for ContinuedFraction {
    type Err = FareyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let entries = parse_bracketed::<BigInt>(text).map_err(|reason| {
            FareyError::ParseContinuedFraction {
                text: text.to_string(),
                reason,
            }
        })?;
        Self::new(entries)
    }
}

/// Writes `[a0;a1,...,ak]`, or `[a0;]` for a single entry.
pub(crate) fn write_bracketed<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    entries: &[T],
) -> fmt::Result {
    write!(f, "[{};", entries[0])?;
    for (i, a) in entries[1..].iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str("]")
}

/// Parses `[a0;a1,...,ak]` with arbitrary whitespace. `[a0;]` and `[a0]` are
/// both accepted for a single entry.
pub(crate) fn parse_bracketed<T: FromStr>(text: &str) -> Result<Vec<T>, String> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or("expected the form [a0;a1,...,ak]")?;
    let (head, tail) = match inner.split_once(';') {
        Some((h, t)) => (h, t),
        None => (inner, ""),
    };
    let parse_one = |s: &str| -> Result<T, String> {
        let s = s.trim();
        s.parse::<T>()
            .map_err(|_| format!("{s:?} is not a valid entry"))
    };
    let mut entries = vec![parse_one(head)?];
    if !tail.trim().is_empty() {
        for part in tail.split(',') {
            entries.push(parse_one(part)?);
        }
    }
    Ok(entries)
}

/// Canonical expansion of a finite `x >= 0` by the Euclidean algorithm.
pub fn to_continued_fraction(x: &ExtRational) -> Result<ContinuedFraction, FareyError> {
    if x.is_infinite() || x.is_negative() {
        return Err(FareyError::NotNonnegative(x.clone()));
    }
    let (mut p, mut q) = (x.p.clone(), x.q.clone());
    let mut entries = Vec::new();
    while !q.is_zero() {
        let (a, r) = p.div_rem(&q);
        entries.push(a);
        p = q;
        q = r;
    }
    // Euclid already ends on an entry >= 2 unless the expansion is [a0;].
    Ok(ContinuedFraction { entries })
}

/// The approximants `g_i/h_i = [a0; a1, ..., ai]` from the three-term
/// recursion `g_i = a_i g_{i-1} + g_{i-2}`, `h_i = a_i h_{i-1} + h_{i-2}`.
///
/// Pairs are returned unreduced; consecutive approximants have determinant
/// ±1 so they are already in lowest terms.
pub fn approximants(entries: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let mut out: Vec<(BigInt, BigInt)> = Vec::with_capacity(entries.len());
    // Seeds g_{-1}/h_{-1} = 1/0 and g_{-2}/h_{-2} = 0/1.
    let (mut g1, mut h1) = (BigInt::one(), BigInt::zero());
    let (mut g2, mut h2) = (BigInt::zero(), BigInt::one());
    for a in entries {
        let g = a * &g1 + &g2;
        let h = a * &h1 + &h2;
        g2 = std::mem::replace(&mut g1, g.clone());
        h2 = std::mem::replace(&mut h1, h.clone());
        out.push((g, h));
    }
    out
}

pub fn from_continued_fraction(cf: &ContinuedFraction) -> ExtRational {
    let (g, h) = approximants(&cf.entries)
        .pop()
        .expect("continued fractions are nonempty");
    ExtRational { p: g, q: h }
}

/// Depth of first appearance in the mediant iteration started from
/// `{0/1, 1/0}`; equal to the sum of the continued fraction entries.
pub fn farey_level(x: &ExtRational) -> Result<BigInt, FareyError> {
    if x.is_infinite() {
        return Ok(BigInt::zero());
    }
    let cf = to_continued_fraction(x)?;
    Ok(cf.entries.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> ExtRational {
        ExtRational::new(p, q).unwrap()
    }

    fn cf(text: &str) -> ContinuedFraction {
        text.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(2, 4).unwrap(), r(1, 2));
        assert_eq!(normalize(3, -6).unwrap().to_string(), "-1/2");
        assert_eq!(normalize(5, 0).unwrap().to_string(), "1/0");
        assert_eq!(normalize(-5, 0).unwrap(), ExtRational::infinity());
        assert_eq!(normalize(0, -7).unwrap().to_string(), "0/1");
        assert_eq!(normalize(0, 0), Err(FareyError::Indeterminate));
    }

    #[test]
    fn neighbors() {
        assert!(is_farey_neighbor(&r(1, 2), &r(2, 3)));
        assert!(!is_farey_neighbor(&r(1, 3), &r(2, 3)));
        assert!(is_farey_neighbor(&r(0, 1), &r(1, 0)));
    }

    #[test]
    fn sums() {
        assert_eq!(farey_sum(&r(1, 2), &r(2, 3)).unwrap(), r(3, 5));
        assert_eq!(farey_sum(&r(0, 1), &r(1, 0)).unwrap(), r(1, 1));
        assert_eq!(farey_sum(&r(1, 2), &r(1, 3)).unwrap(), r(2, 5));
        assert!(matches!(
            farey_sum(&r(1, 3), &r(2, 3)),
            Err(FareyError::NotNeighbors(..))
        ));
    }

    #[test]
    fn parent_examples() {
        assert_eq!(parents(&r(5, 1)).unwrap(), (r(4, 1), r(1, 0)));
        assert_eq!(parents(&r(1, 4)).unwrap(), (r(0, 1), r(1, 3)));
        assert_eq!(parents(&r(-3, 1)).unwrap(), (r(1, 0), r(-2, 1)));
        assert_eq!(parents(&r(3, 5)).unwrap(), (r(1, 2), r(2, 3)));
        assert_eq!(parents(&r(1, 1)).unwrap(), (r(0, 1), r(1, 0)));
        assert_eq!(parents(&r(-1, 1)).unwrap(), (r(1, 0), r(0, 1)));
        // Negative reciprocals: 1/(n+1) below and 0 above.
        assert_eq!(parents(&r(1, -4)).unwrap(), (r(-1, 3), r(0, 1)));
        assert_eq!(parents(&r(-3, 2)).unwrap(), (r(-2, 1), r(-1, 1)));
    }

    #[test]
    fn orphans_have_no_parents() {
        assert!(matches!(parents(&r(0, 1)), Err(FareyError::Orphan(_))));
        assert!(matches!(parents(&r(1, 0)), Err(FareyError::Orphan(_))));
    }

    /// Independent oracle: try every splitting p = m + r, q = n + s with
    /// |ms - rn| = 1 and both halves strictly smaller.
    fn parents_by_splitting(p: i64, q: i64) -> Vec<((i64, i64), (i64, i64))> {
        let mut found = Vec::new();
        for n in 0..=q {
            let s = q - n;
            for m in -p.abs() - 1..=p.abs() + 1 {
                let rr = p - m;
                if (m * s - rr * n).abs() == 1
                    && m.abs() + n < p.abs() + q
                    && rr.abs() + s < p.abs() + q
                {
                    found.push(((m, n), (rr, s)));
                }
            }
        }
        found
    }

    #[test]
    fn parents_agree_with_splitting_search() {
        let got = parents(&r(3, 5)).unwrap();
        let oracle = parents_by_splitting(3, 5);
        assert_eq!(oracle.len(), 2, "{oracle:?}"); // both orderings
        let ((m, n), (rr, s)) = oracle[0];
        let pair = {
            let (a, b) = (r(m, n), r(rr, s));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        };
        assert_eq!(got, pair);

        for q in 2..25i64 {
            for p in 1..25i64 {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let (lo, hi) = parents(&r(p, q)).unwrap();
                let oracle = parents_by_splitting(p, q);
                assert!(!oracle.is_empty());
                assert!(oracle.iter().all(|&((m, n), (rr, s))| {
                    (r(m, n) == lo && r(rr, s) == hi) || (r(m, n) == hi && r(rr, s) == lo)
                }));
            }
        }
    }

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(to_continued_fraction(&r(68, 13)).unwrap(), cf("[5;4,3]"));
        assert_eq!(to_continued_fraction(&r(30, 7)).unwrap(), cf("[4;3,2]"));
        assert_eq!(to_continued_fraction(&r(4, 13)).unwrap(), cf("[0;3,4]"));
        assert_eq!(to_continued_fraction(&r(5, 1)).unwrap().to_string(), "[5;]");
        assert_eq!(to_continued_fraction(&r(0, 1)).unwrap().to_string(), "[0;]");
        assert!(to_continued_fraction(&r(-1, 2)).is_err());
        assert!(to_continued_fraction(&r(1, 0)).is_err());

        assert_eq!(from_continued_fraction(&cf("[5;4,3]")), r(68, 13));
        assert_eq!(from_continued_fraction(&cf("[7;]")), r(7, 1));
        assert_eq!(from_continued_fraction(&cf("[0; 2]")), r(1, 2));
    }

    #[test]
    fn continued_fraction_text() {
        assert_eq!(cf(" [ 4 ; 3 , 2 ] ").to_string(), "[4;3,2]");
        assert_eq!(cf("[5]").to_string(), "[5;]");
        // trailing 1 folds into its predecessor
        assert_eq!(cf("[4;3,1]").to_string(), "[4;4]");
        assert_eq!(cf("[2;1]").to_string(), "[3;]");
        assert!("4;3".parse::<ContinuedFraction>().is_err());
        assert!("[-1;2]".parse::<ContinuedFraction>().is_err());
        assert!("[1;0,2]".parse::<ContinuedFraction>().is_err());
        assert!("[1;x]".parse::<ContinuedFraction>().is_err());
    }

    #[test]
    fn rational_text() {
        assert_eq!("3/5".parse::<ExtRational>().unwrap(), r(3, 5));
        assert_eq!("-6/4".parse::<ExtRational>().unwrap(), r(-3, 2));
        assert_eq!("+2".parse::<ExtRational>().unwrap(), r(2, 1));
        assert_eq!("inf".parse::<ExtRational>().unwrap(), r(1, 0));
        assert_eq!("1/0".parse::<ExtRational>().unwrap(), r(1, 0));
        assert!("0/0".parse::<ExtRational>().is_err());
        assert!("1/".parse::<ExtRational>().is_err());
        assert!("a/b".parse::<ExtRational>().is_err());
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = vec![r(1, 0), r(3, 2), r(-7, 1), r(0, 1), r(1, 3)];
        v.sort();
        assert_eq!(v, vec![r(-7, 1), r(0, 1), r(1, 3), r(3, 2), r(1, 0)]);
    }

    /// Breadth-first mediant insertion from {0/1, 1/0}; records the round in
    /// which each value first appears.
    fn levels_by_mediants(rounds: usize) -> std::collections::HashMap<(i64, i64), usize> {
        let mut seq = vec![(0i64, 1i64), (1, 0)];
        let mut level = std::collections::HashMap::new();
        level.insert((0, 1), 0);
        level.insert((1, 0), 0);
        for round in 1..=rounds {
            let mut next = Vec::with_capacity(seq.len() * 2);
            for w in seq.windows(2) {
                next.push(w[0]);
                let m = (w[0].0 + w[1].0, w[0].1 + w[1].1);
                level.entry(m).or_insert(round);
                next.push(m);
            }
            next.push(*seq.last().unwrap());
            seq = next;
        }
        level
    }

    #[test]
    fn level_matches_mediant_iteration() {
        let oracle = levels_by_mediants(12);
        assert_eq!(oracle[&(1, 1)], 1);
        assert_eq!(oracle[&(3, 5)], 4);
        assert_eq!(farey_level(&r(1, 1)).unwrap(), BigInt::from(1));
        assert_eq!(farey_level(&r(3, 5)).unwrap(), BigInt::from(4));
        assert_eq!(farey_level(&r(0, 1)).unwrap(), BigInt::zero());
        assert_eq!(farey_level(&r(1, 0)).unwrap(), BigInt::zero());
        for (&(p, q), &lvl) in &oracle {
            assert_eq!(farey_level(&r(p, q)).unwrap(), BigInt::from(lvl), "{p}/{q}");
        }
    }

    #[test]
    fn parents_sum_back_exhaustively() {
        for total in 2..=60i64 {
            for q in 1..total {
                let p = total - q;
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let x = r(p, q);
                let (lo, hi) = parents(&x).unwrap();
                assert!(lo < x && x < hi, "{x}");
                assert!(is_farey_neighbor(&lo, &x) && is_farey_neighbor(&x, &hi));
                assert!(is_farey_neighbor(&lo, &hi));
                assert_eq!(farey_sum(&lo, &hi).unwrap(), x);
            }
        }
    }

    #[test]
    fn big_values_do_not_overflow() {
        let x: ExtRational = "123456789012345678901234567890/7".parse().unwrap();
        let back = from_continued_fraction(&to_continued_fraction(&x).unwrap());
        assert_eq!(back, x);
        let (lo, hi) = parents(&x).unwrap();
        assert_eq!(farey_sum(&lo, &hi).unwrap(), x);
    }
}
