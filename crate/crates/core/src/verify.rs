//! Exhaustive small-instance checks against independent recomputation.
//!
//! The [`oracle`] is the literal recursive definition: no memoization, parents
//! found by searching splittings, and words kept as flat letter vectors with
//! a stack-based free reduction. Nothing in it calls the production
//! enumeration, parent, or word-concatenation code.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::enumeration::{self, e_word, e_word_with_stats, ParityRow, TerminationMode};
use crate::farey::{self, ExtRational};
use crate::stepper::{self, ESequence};
use crate::word::{FreeWord, Generator};

pub mod oracle {
    //! Reference implementation of the enumeration scheme on machine
    //! integers. Letters: `1 = a`, `-1 = a⁻¹`, `2 = b`, `-2 = b⁻¹`.

    use num_integer::Integer;

    pub type Letters = Vec<i8>;

    /// Parents of `p/q` (lowest terms, not an orphan), lower first.
    pub fn parents(p: i64, q: i64) -> ((i64, i64), (i64, i64)) {
        if q == 1 {
            return if p > 0 {
                ((p - 1, 1), (1, 0))
            } else {
                ((1, 0), (p + 1, 1))
            };
        }
        for n in 1..q {
            if (p * n - 1).rem_euclid(q) == 0 {
                let m = (p * n - 1).div_euclid(q);
                return ((m, n), (p - m, q - n));
            }
        }
        unreachable!("{p}/{q} is not in lowest terms")
    }

    fn append(out: &mut Letters, tail: &[i8]) {
        for &l in tail {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
    }

    fn eval(p: i64, q: i64, negative_side: bool) -> Letters {
        match (p, q) {
            (0, 1) => vec![if negative_side { -1 } else { 1 }],
            (1, 0) => vec![2],
            _ => {
                let negative = p < 0;
                let ((m, n), (r, s)) = parents(p, q);
                let lower = eval(m, n, negative);
                let upper = eval(r, s, negative);
                let (first, second) = if (p * q).is_odd() != negative {
                    (upper, lower)
                } else {
                    (lower, upper)
                };
                let mut out = first;
                append(&mut out, &second);
                out
            }
        }
    }

    /// `E(p/q)` as a letter vector. `p/q` must be in lowest terms.
    pub fn e_letters(p: i64, q: i64) -> Letters {
        assert!(q >= 0 && (p, q) != (0, 0) && p.gcd(&q) == 1, "{p}/{q}");
        eval(p, q, false)
    }

    pub fn is_palindrome(w: &[i8]) -> bool {
        w.iter().eq(w.iter().rev())
    }
}

fn letters_to_word(letters: &[i8]) -> FreeWord {
    FreeWord::from_runs(letters.iter().map(|&l| {
        let g = if l.abs() == 1 {
            Generator::A
        } else {
            Generator::B
        };
        (g, l.signum() as i64)
    }))
}

/// `E(p/q)` from the oracle, as a [`FreeWord`].
pub fn oracle_word(x: &ExtRational) -> FreeWord {
    let (p, q) = x.to_i64_pair().expect("oracle works on small indices");
    letters_to_word(&oracle::e_letters(p, q))
}

/// All `(p, q)` in lowest terms with `|p| + q <= bound`, `q >= 0`.
pub fn indices(bound: u64) -> Vec<ExtRational> {
    let bound = bound as i64;
    let mut out = vec![ExtRational::infinity(), ExtRational::zero()];
    for q in 1..bound {
        for p in -(bound - q)..=(bound - q) {
            if p != 0 && p.gcd(&q) == 1 {
                out.push(ExtRational::new(p, q).unwrap());
            }
        }
    }
    out.sort();
    out
}

/// E-words of every index with `|p| + q <= bound`, via the oracle.
pub fn enumerate_ewords(bound: u64) -> BTreeMap<ExtRational, FreeWord> {
    indices(bound)
        .into_iter()
        .map(|x| {
            let w = oracle_word(&x);
            (x, w)
        })
        .collect()
}

/// `#{p : 0 < |p| < n, gcd(p, n) = 1}`.
pub fn phi_count(n: u64) -> u64 {
    let n = n as i64;
    (1 - n..n).filter(|&p| p != 0 && p.gcd(&n) == 1).count() as u64
}

/// Distinct E-words of each length in an enumeration.
pub fn length_histogram(words: &BTreeMap<ExtRational, FreeWord>) -> BTreeMap<u64, usize> {
    let mut by_len: BTreeMap<u64, BTreeSet<&FreeWord>> = BTreeMap::new();
    for w in words.values() {
        by_len.entry(w.len()).or_default().insert(w);
    }
    by_len.into_iter().map(|(k, v)| (k, v.len())).collect()
}

/// `(|Φ|, number of distinct E-words of length n)`.
///
/// Every index with `|p| + q <= n` is enumerated, so words of length `n`
/// coming from an unexpected index would be counted too. For `n = 1` the
/// result is `(0, 2)`: the orphans `a` and `b` have no counterpart in `Φ`.
pub fn count_ewords_of_length(n: u64) -> (u64, u64) {
    let words = enumerate_ewords(n);
    let count = length_histogram(&words).get(&n).copied().unwrap_or(0);
    (phi_count(n), count as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn record<E: fmt::Display, G: fmt::Display>(
        &mut self,
        ok: bool,
        input: impl fmt::Display,
        expected: E,
        got: G,
    ) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        input: impl fmt::Display,
        expected: T,
        got: T,
    ) {
        let ok = expected == got;
        self.record(ok, input, expected, got);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub bound: u64,
    pub checks: Vec<CheckResult>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table, with up to five counterexamples per failing check.
    pub fn table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        writeln!(out, "sweep bound {}", self.bound).unwrap();
        writeln!(
            out,
            "{:<width$}  {:>9}  {:>8}  status",
            "check", "instances", "failures"
        )
        .unwrap();
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            writeln!(
                out,
                "{:<width$}  {:>9}  {:>8}  {status}",
                c.name,
                c.instances,
                c.failures.len()
            )
            .unwrap();
            for f in c.failures.iter().take(5) {
                writeln!(
                    out,
                    "    {}: expected {}, got {}",
                    f.input, f.expected, f.got
                )
                .unwrap();
            }
        }
        let verdict = if self.passed() {
            "all checks passed"
        } else {
            "FAILURES"
        };
        write!(out, "{verdict} ({} failures)", self.failure_count()).unwrap();
        out
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.table())
    }
}

fn bools(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Parents against the splitting oracle, plus the mediant identity for
/// `x >= 0`.
pub fn check_parents(xs: &[ExtRational]) -> CheckResult {
    let mut c = CheckResult::new("parents");
    for x in xs.iter().filter(|x| !x.is_orphan()) {
        let (lo, hi) = farey::parents(x).expect("non-orphan");
        let (p, q) = x.to_i64_pair().unwrap();
        let ((m, n), (r, s)) = oracle::parents(p, q);
        let expected = format!("({m}/{n}, {r}/{s})");
        let got = format!("({lo}, {hi})");
        c.record(expected == got, x, &expected, &got);
        if !x.is_negative() {
            let ok = lo < *x
                && *x < hi
                && farey::is_farey_neighbor(&lo, &hi)
                && farey::farey_sum(&lo, &hi).as_ref() == Ok(x);
            c.record(ok, format!("{x} mediant"), x, format!("{lo} ⊕ {hi}"));
        }
    }
    c
}

/// Over all neighbor pairs: the parity exclusions hold and exactly one row
/// of the six-row table matches.
pub fn check_neighbor_parity(xs: &[ExtRational]) -> CheckResult {
    let mut c = CheckResult::new("neighbor-parity");
    for (i, x) in xs.iter().enumerate() {
        for y in &xs[i + 1..] {
            if !farey::is_farey_neighbor(x, y) {
                continue;
            }
            let odd = [x.numer(), x.denom(), y.numer(), y.denom()].map(|v| v.is_odd());
            let [p, q, r, s] = odd;
            let excluded = (!p && !q)
                || (!r && !s)
                || (p && q && r && s)
                || (!p && !r && q && s)
                || (p && r && !q && !s);
            let rows = ParityRow::matching(x, y);
            let mediant_odd = (x.numer() + y.numer()).is_odd() && (x.denom() + y.denom()).is_odd();
            let ok =
                !excluded && rows.len() == 1 && rows[0].mediant_product_is_odd() == mediant_odd;
            c.record(
                ok,
                format!("({x}, {y})"),
                "one admissible row",
                format!("{rows:?}"),
            );
        }
    }
    c
}

/// `child_word` on nonnegative neighbors against the oracle word of the
/// mediant.
pub fn check_child_words(xs: &[ExtRational]) -> CheckResult {
    let mut c = CheckResult::new("child-word");
    let nonneg: Vec<&ExtRational> = xs.iter().filter(|x| !x.is_negative()).collect();
    for (i, x) in nonneg.iter().enumerate() {
        for y in &nonneg[i + 1..] {
            if !farey::is_farey_neighbor(x, y) {
                continue;
            }
            let (lo, hi) = if x < y { (*x, *y) } else { (*y, *x) };
            let (child, word) = enumeration::child_word(lo, &oracle_word(lo), hi, &oracle_word(hi))
                .expect("valid neighbor pair");
            let sum = farey::farey_sum(lo, hi).unwrap();
            c.expect_eq(format!("({lo}, {hi})"), sum.to_string(), child.to_string());
            c.expect_eq(format!("E({sum})"), oracle_word(&sum), word);
        }
    }
    c
}

/// Per-index word properties: orphan/shortcut/oracle agreement, palindrome
/// parity, factor counts, and the shortcut doing less work.
pub fn check_words(xs: &[ExtRational]) -> Vec<CheckResult> {
    let mut modes = CheckResult::new("mode-equivalence");
    let mut parity = CheckResult::new("palindrome-parity");
    let mut length = CheckResult::new("length");
    let mut depth = CheckResult::new("shortcut-depth");
    for x in xs {
        let reference = oracle_word(x);
        let orphan = e_word_with_stats(x, TerminationMode::Orphan).unwrap();
        let shortcut = e_word_with_stats(x, TerminationMode::Shortcut).unwrap();
        let ok = orphan.word == reference && shortcut.word == reference;
        modes.record(
            ok,
            x,
            &reference,
            format!("{} | {}", orphan.word, shortcut.word),
        );

        let (p, q) = x.to_i64_pair().unwrap();
        let letters = oracle::e_letters(p, q);
        parity.expect_eq(
            x,
            bools(!x.product_is_odd()),
            bools(oracle::is_palindrome(&letters) && orphan.word.is_palindrome()),
        );

        let expected = format!(
            "b={} a={} len={}",
            p.unsigned_abs(),
            q,
            p.unsigned_abs() + q as u64
        );
        let w = &orphan.word;
        let got = format!(
            "b={} a={} len={}",
            w.factor_count(Generator::B),
            w.factor_count(Generator::A),
            w.len()
        );
        length.expect_eq(x, expected, got);

        if !x.is_orphan() && !x.is_integer() && !x.is_reciprocal() {
            depth.record(
                shortcut.evaluations < orphan.evaluations,
                x,
                format!("< {}", orphan.evaluations),
                shortcut.evaluations,
            );
        }
    }
    vec![modes, parity, length, depth]
}

pub fn check_continued_fractions(xs: &[ExtRational]) -> CheckResult {
    let mut c = CheckResult::new("cf-roundtrip");
    for x in xs.iter().filter(|x| !x.is_negative() && !x.is_infinite()) {
        let cf = farey::to_continued_fraction(x).unwrap();
        c.expect_eq(&cf, x.clone(), farey::from_continued_fraction(&cf));
        let reparsed: farey::ContinuedFraction = cf.to_string().parse().unwrap();
        c.expect_eq(x, cf.to_string(), reparsed.to_string());
    }
    c
}

/// Runs each sequence and checks: the last changed generator is the E-word
/// of its value; every intermediate generator is the E-word of its index;
/// each step keeps one generator and replaces the other by a product of
/// the two; tracked fractions are the approximants and match the indices.
pub fn check_sequences<'a>(seqs: impl IntoIterator<Item = &'a ESequence>) -> Vec<CheckResult> {
    let mut last = CheckResult::new("stepper-vs-enumeration");
    let mut ewords = CheckResult::new("step-e-words");
    let mut structure = CheckResult::new("step-structure");
    let mut fractions = CheckResult::new("approximants");
    let mut sums = CheckResult::new("exponent-sums");
    for seq in seqs {
        let trace = stepper::run_esequence(seq);
        let value = seq.value();
        last.expect_eq(
            format!("{seq} index"),
            value.clone(),
            trace.last_changed_index().clone(),
        );
        last.expect_eq(seq, oracle_word(&value), trace.last_changed_word().clone());

        let w = trace.last_changed_word();
        sums.expect_eq(
            seq,
            format!("a={} b={}", value.denom(), value.numer()),
            format!(
                "a={} b={}",
                w.exponent_sum(Generator::A),
                w.exponent_sum(Generator::B)
            ),
        );

        let mut prev = &trace.initial;
        for (i, s) in trace.steps.iter().enumerate() {
            let pair = &s.pair;
            let ok = oracle_word(pair.left_index()) == *pair.left()
                && oracle_word(pair.right_index()) == *pair.right()
                && pair.left_index() < pair.right_index()
                && farey::is_farey_neighbor(pair.left_index(), pair.right_index());
            ewords.record(ok, format!("{seq} step {}", i + 1), "E-word pair", pair);

            let (kept, changed, old_other) = match s.preserved {
                stepper::Side::Left => (pair.left() == prev.left(), pair.right(), prev.right()),
                stepper::Side::Right => (pair.right() == prev.right(), pair.left(), prev.left()),
            };
            let kept_word = pair.word(s.preserved);
            let ok = kept
                && (*changed == kept_word.concat(old_other)
                    || *changed == old_other.concat(kept_word));
            structure.record(
                ok,
                format!("{seq} step {}", i + 1),
                "one generator kept",
                pair,
            );
            prev = pair;
        }

        let big: Vec<BigInt> = seq.entries().iter().map(|&n| BigInt::from(n)).collect();
        let approx = farey::approximants(&big);
        let tracked = &trace.fractions;
        for (i, (p, q)) in tracked.left.iter().enumerate().skip(1) {
            let (g, h) = &approx[2 * i - 2];
            fractions.expect_eq(
                format!("{seq} p{i}/q{i}"),
                format!("{g}/{h}"),
                format!("{p}/{q}"),
            );
            let idx = trace.pair_after_phase(2 * i - 2).left_index();
            fractions.expect_eq(
                format!("{seq} left index after phase {}", 2 * i - 2),
                idx.to_string(),
                ExtRational::new(p.clone(), q.clone()).unwrap().to_string(),
            );
        }
        for (i, (r, s)) in tracked.right.iter().enumerate().skip(1) {
            let (g, h) = &approx[2 * i - 1];
            fractions.expect_eq(
                format!("{seq} r{i}/s{i}"),
                format!("{g}/{h}"),
                format!("{r}/{s}"),
            );
            let idx = trace.pair_after_phase(2 * i - 1).right_index();
            fractions.expect_eq(
                format!("{seq} right index after phase {}", 2 * i - 1),
                idx.to_string(),
                ExtRational::new(r.clone(), s.clone()).unwrap().to_string(),
            );
        }
    }
    vec![last, ewords, structure, fractions, sums]
}

/// `closed_form_stop` against stepping, for every sequence with a table
/// shape. Out-of-shape sequences are skipped.
pub fn check_closed_forms<'a>(seqs: impl IntoIterator<Item = &'a ESequence>) -> CheckResult {
    let mut c = CheckResult::new("closed-form");
    for seq in seqs {
        if let Ok(pair) = stepper::closed_form_stop(seq) {
            let stepped = stepper::run_esequence(seq);
            let fin = stepped.final_pair();
            let ok = pair == *fin;
            c.record(ok, seq, fin, &pair);
        }
    }
    c
}

/// The exponent shape of E-words for long sequences: `n0 > 0, k >= 3` or
/// `n0 = 0, k >= 4`, canonical only.
pub fn check_exponent_forms<'a>(seqs: impl IntoIterator<Item = &'a ESequence>) -> CheckResult {
    let mut c = CheckResult::new("exponent-form");
    for seq in seqs {
        let k = seq.depth();
        let applies = seq.is_canonical()
            && ((seq.entries()[0] > 0 && k >= 3) || (seq.entries()[0] == 0 && k >= 4));
        if !applies {
            continue;
        }
        let word = oracle_word(&seq.value());
        let form = stepper::exponent_form(&word, seq);
        c.record(
            stepper::exponent_form_check(&word, seq),
            seq,
            "boundary in {m,M}, interior = {n,n+1}",
            format!("{:?}", form.map(|f| f.exponents)),
        );
    }
    c
}

/// `|Φ|` against the number of distinct length-`n` words, `2 <= n <= bound`.
pub fn check_counting(words: &BTreeMap<ExtRational, FreeWord>, bound: u64) -> CheckResult {
    let mut c = CheckResult::new("counting");
    let hist = length_histogram(words);
    for n in 2..=bound {
        c.expect_eq(
            format!("n={n}"),
            phi_count(n),
            hist.get(&n).copied().unwrap_or(0) as u64,
        );
    }
    c
}

/// Every canonical E-sequence with `n0 <= max_entry`, later entries in
/// `1..=max_entry`, and depth `k <= max_depth`.
pub fn canonical_sequences(max_entry: u64, max_depth: usize) -> Vec<ESequence> {
    all_sequences(0, max_entry, max_depth)
        .into_iter()
        .filter(ESequence::is_canonical)
        .collect()
}

/// Every E-sequence (trailing 1 allowed) with depth in
/// `min_depth..=max_depth` and entries bounded by `max_entry`.
pub fn all_sequences(min_depth: usize, max_entry: u64, max_depth: usize) -> Vec<ESequence> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<u64>> = (0..=max_entry).map(|n| vec![n]).collect();
    for depth in 0..=max_depth {
        if depth >= min_depth {
            out.extend(frontier.iter().map(|e| ESequence::new(e.clone()).unwrap()));
        }
        frontier = frontier
            .iter()
            .flat_map(|e| {
                (1..=max_entry).map(move |n| {
                    let mut next = e.clone();
                    next.push(n);
                    next
                })
            })
            .collect();
    }
    out
}

/// Runs every check over indices with `|p| + q <= bound`. Sequence-level
/// checks use the canonical expansions of the nonnegative indices in range.
pub fn sweep(bound: u64) -> SweepReport {
    assert!(bound >= 2, "sweep bound must be at least 2");
    let xs = indices(bound);
    let words = enumerate_ewords(bound);
    let seqs: Vec<ESequence> = xs
        .iter()
        .filter(|x| !x.is_negative() && !x.is_infinite())
        .map(|x| {
            ESequence::from_continued_fraction(&farey::to_continued_fraction(x).unwrap()).unwrap()
        })
        .collect();

    let mut checks = vec![
        check_parents(&xs),
        check_neighbor_parity(&xs),
        check_child_words(&xs),
    ];
    checks.extend(check_words(&xs));
    checks.push(check_continued_fractions(&xs));
    checks.extend(check_sequences(&seqs));
    checks.push(check_closed_forms(&seqs));
    checks.push(check_exponent_forms(&seqs));
    checks.push(check_counting(&words, bound));
    SweepReport { bound, checks }
}

/// Production `e_word` for an index, in either mode. Convenience for callers
/// that want to compare against [`oracle_word`].
pub fn production_word(x: &ExtRational, mode: TerminationMode) -> FreeWord {
    e_word(x, mode).expect("small index")
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

    #[test]
    fn small_enumerations() {
        let one = enumerate_ewords(1);
        assert_eq!(one.len(), 2);
        assert_eq!(one[&r(0, 1)], w("a"));
        assert_eq!(one[&r(1, 0)], w("b"));

        let two = enumerate_ewords(2);
        assert_eq!(two[&r(1, 1)], w("ba"));
        assert_eq!(two[&r(-1, 1)], w("b a^-1"));

        let three = enumerate_ewords(3);
        assert_eq!(three[&r(2, 1)], w("bab"));
        assert_eq!(three[&r(1, 2)], w("aba"));
        assert_eq!(three[&r(-2, 1)], w("b a^-1 b"));
        assert_eq!(three[&r(-1, 2)], w("a^-1 b a^-1"));
        assert_eq!(three.len(), 8);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_ewords_of_length(5), (8, 8));
        assert_eq!(count_ewords_of_length(4), (4, 4));
        assert_eq!(count_ewords_of_length(2), (2, 2));
        assert_eq!(count_ewords_of_length(1), (0, 2));
    }

    #[test]
    fn length_five_indices() {
        let words = enumerate_ewords(5);
        let mut idx: Vec<String> = words
            .iter()
            .filter(|(_, w)| w.len() == 5)
            .map(|(x, _)| x.to_string())
            .collect();
        idx.sort();
        assert_eq!(
            idx,
            ["-1/4", "-2/3", "-3/2", "-4/1", "1/4", "2/3", "3/2", "4/1"]
        );
    }

    #[test]
    fn oracle_parents() {
        assert_eq!(oracle::parents(3, 5), ((1, 2), (2, 3)));
        assert_eq!(oracle::parents(-3, 1), ((1, 0), (-2, 1)));
        assert_eq!(oracle::parents(-1, 4), ((-1, 3), (0, 1)));
    }

    #[test]
    fn sweep_bound_ten_is_clean() {
        let report = sweep(10);
        assert!(report.passed(), "{}", report.table());
        for name in [
            "palindrome-parity",
            "mode-equivalence",
            "stepper-vs-enumeration",
        ] {
            let c = report.check(name).unwrap();
            assert!(c.instances > 0 && c.passed(), "{name}");
        }
    }

    #[test]
    fn report_renders() {
        let report = sweep(4);
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["bound"], 4);
        assert!(json["checks"].as_array().unwrap().len() >= 10);
        assert!(report.table().ends_with("all checks passed (0 failures)"));
    }

    #[test]
    fn failures_are_reported_with_data() {
        let mut c = CheckResult::new("demo");
        c.expect_eq("x", 1, 2);
        c.expect_eq("y", 3, 3);
        assert_eq!(c.instances, 2);
        assert_eq!(
            c.failures,
            vec![Failure {
                input: "x".into(),
                expected: "1".into(),
                got: "2".into()
            }]
        );
        let report = SweepReport {
            bound: 2,
            checks: vec![c],
        };
        assert!(!report.passed());
        assert!(report.table().contains("x: expected 1, got 2"));
    }

    #[test]
    fn sequence_families() {
        assert_eq!(canonical_sequences(4, 4).len(), 1280);
        assert!(all_sequences(1, 2, 2).iter().all(|s| s.depth() >= 1));
    }
}
