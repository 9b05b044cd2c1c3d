//! Maximal repetitions (runs), maximal alpha-gapped repeats and maximal
//! delta-subrepetitions in words.
//!
//! ```
//! use repeatscan::{find_maximal_gapped_repeats, Rational, Word};
//!
//! let w = Word::from("abaab");
//! let alpha: Rational = "2".parse().unwrap();
//! let repeats = find_maximal_gapped_repeats(&w, alpha).unwrap().to_sorted_vec();
//! assert_eq!(repeats.len(), 2);
//! ```
//!
//! All positions in results are 1-based and inclusive.

pub mod census;
mod error;
pub mod extensions;
pub mod factorization;
pub mod gapped;
pub mod oracle;
pub mod random;
mod rational;
pub mod runs;
pub mod subreps;
mod types;
mod word;

pub use error::{Error, Result};
pub use factorization::s_factorize;
pub use gapped::{classify, find_maximal_gapped_repeats, StartLists};
pub use rational::{alpha_gapped_test, Rational};
pub use runs::{find_runs, sum_exponents, ExponentSum};
pub use subreps::{find_subrepetitions, is_principal_direct};
pub use types::{Factor, GappedRepeat, RepeatClass, Run, Subrepetition};
pub use word::Word;
