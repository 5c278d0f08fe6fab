use num_integer::Integer;
use proptest::prelude::*;

use eword::enumeration::{e_word, e_word_with_stats, TerminationMode};
use eword::farey::{self, ExtRational};
use eword::stepper::{self, ESequence};
use eword::{Alphabet, FreeWord, Generator};

fn coprime() -> impl Strategy<Value = (i64, i64)> {
    (-3000i64..3000, 1i64..3000).prop_filter_map("coprime", |(p, q)| {
        (p != 0 && p.gcd(&q) == 1).then_some((p, q))
    })
}

fn sequence() -> impl Strategy<Value = ESequence> {
    (0u64..8, prop::collection::vec(1u64..8, 0..6)).prop_map(|(n0, mut rest)| {
        rest.insert(0, n0);
        ESequence::new(rest).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn modes_agree_and_shortcut_is_cheaper((p, q) in coprime()) {
        let x = ExtRational::new(p, q).unwrap();
        let o = e_word_with_stats(&x, TerminationMode::Orphan).unwrap();
        let s = e_word_with_stats(&x, TerminationMode::Shortcut).unwrap();
        prop_assert_eq!(&o.word, &s.word);
        if q > 1 && p.abs() > 1 {
            prop_assert!(s.evaluations < o.evaluations);
        }
    }

    #[test]
    fn factor_counts_and_palindromes((p, q) in coprime()) {
        let w = e_word(&ExtRational::new(p, q).unwrap(), TerminationMode::Shortcut).unwrap();
        prop_assert_eq!(w.factor_count(Generator::B), p.unsigned_abs());
        prop_assert_eq!(w.factor_count(Generator::A), q as u64);
        prop_assert_eq!(w.is_palindrome(), (p * q).is_even());
        prop_assert_eq!(w.has_negative_exponent(), p < 0);
    }

    #[test]
    fn sign_flip_inverts_a((p, q) in coprime()) {
        let pos = e_word(&ExtRational::new(p.abs(), q).unwrap(), TerminationMode::Shortcut).unwrap();
        let neg = e_word(&ExtRational::new(-p.abs(), q).unwrap(), TerminationMode::Shortcut).unwrap();
        prop_assert_eq!(neg, pos.substitute(&FreeWord::a().inverse(), &FreeWord::b()));
    }

    #[test]
    fn printed_words_reparse((p, q) in coprime()) {
        let w = e_word(&ExtRational::new(p, q).unwrap(), TerminationMode::Orphan).unwrap();
        for alphabet in [Alphabet::Ab, Alphabet::AB] {
            prop_assert_eq!(&FreeWord::parse(&w.format(alphabet), alphabet).unwrap(), &w);
        }
    }

    #[test]
    fn parents_sum_back((p, q) in coprime()) {
        let x = ExtRational::new(p.abs(), q).unwrap();
        let (lo, hi) = farey::parents(&x).unwrap();
        prop_assert!(lo < x && x < hi);
        prop_assert_eq!(farey::farey_sum(&lo, &hi).unwrap(), x.clone());
        let cf = farey::to_continued_fraction(&x).unwrap();
        prop_assert_eq!(farey::from_continued_fraction(&cf), x);
    }

    #[test]
    fn stepping_reaches_the_e_word(seq in sequence()) {
        let trace = stepper::run_esequence(&seq);
        let x = seq.value();
        prop_assert_eq!(trace.last_changed_index(), &x);
        let expected = e_word(&x, TerminationMode::Shortcut).unwrap();
        prop_assert_eq!(trace.last_changed_word(), &expected);
        let w = trace.last_changed_word();
        prop_assert_eq!(ExponentPair::of(w), ExponentPair::from(&x));
        if let Ok(pair) = stepper::closed_form_stop(&seq) {
            prop_assert_eq!(&pair, trace.final_pair());
        }
    }

    #[test]
    fn long_sequences_have_two_adjacent_exponents(seq in sequence()) {
        let k = seq.depth();
        let n0 = seq.entries()[0];
        if seq.is_canonical() && ((n0 > 0 && k >= 3) || (n0 == 0 && k >= 4)) {
            let w = e_word(&seq.value(), TerminationMode::Shortcut).unwrap();
            prop_assert!(stepper::exponent_form_check(&w, &seq));
        }
    }
}

/// Exponent sums of a word next to the `(q, p)` of its index.
#[derive(Debug, PartialEq, Eq)]
struct ExponentPair(String, String);

impl ExponentPair {
    fn of(w: &FreeWord) -> Self {
        ExponentPair(
            w.exponent_sum(Generator::A).to_string(),
            w.exponent_sum(Generator::B).to_string(),
        )
    }
}

impl From<&ExtRational> for ExponentPair {
    fn from(x: &ExtRational) -> Self {
        ExponentPair(x.denom().to_string(), x.numer().to_string())
    }
}
