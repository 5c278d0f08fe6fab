//! E-words: palindromic and palindromic-product representatives of the
//! primitive conjugacy classes of the free group on two generators, indexed
//! by ℚ ∪ {∞}.
//!
//! The crate is split by concern:
//!
//! - [`farey`]: exact extended rationals, Farey neighbors, parents and
//!   continued fractions.
//! - [`word`]: reduced run-length words over `{a, b}`.
//! - [`enumeration`]: the recursive E-word scheme with orphan or shortcut
//!   termination, and the parity rule for products of neighbors.
//! - [`stepper`]: the palindrome-aware generator stepping driven by an
//!   E-sequence, with closed forms for runs and small stopping pairs.
//! - [`verify`]: brute-force oracles and exhaustive sweeps.

// Errors carry the offending rationals; they are cold paths.
#![allow(clippy::result_large_err)]

pub mod enumeration;
pub mod farey;
pub mod stepper;
pub mod verify;
pub mod word;

pub use enumeration::{e_word, TerminationMode};
pub use farey::{ContinuedFraction, ExtRational};
pub use stepper::{ESequence, GeneratorPair, Side, StepTrace};
pub use word::{Alphabet, FreeWord, Generator};
