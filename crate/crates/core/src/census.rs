//! Aggregate counts for one word.

use num_traits::ToPrimitive;

use crate::error::Result;
use crate::gapped::{classify, find_maximal_gapped_repeats};
use crate::rational::Rational;
use crate::runs::{find_runs, sum_exponents, ExponentSum};
use crate::subreps::find_subrepetitions;
use crate::types::RepeatClass;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq)]
pub struct CensusReport {
    pub n: usize,
    pub alphabet_size: usize,
    pub alpha: Rational,
    pub delta: Option<Rational>,
    pub run_count: usize,
    pub sum_exponents: ExponentSum,
    pub repeat_count: usize,
    /// Indexed like [`RepeatClass::ALL`].
    pub counts_by_class: [usize; 4],
    pub subrep_count: Option<usize>,
    /// `repeat_count / (alpha * n)`, zero for the empty word.
    pub ratio_alpha_n: f64,
    /// `repeat_count / (alpha^2 * n)`, zero for the empty word.
    pub ratio_alpha_sq_n: f64,
}

impl CensusReport {
    pub fn class_count(&self, class: RepeatClass) -> usize {
        self.counts_by_class[RepeatClass::ALL.iter().position(|&c| c == class).unwrap()]
    }

    pub fn sum_exponents_f64(&self) -> f64 {
        self.sum_exponents.to_f64().unwrap_or(f64::INFINITY)
    }
}

pub fn census(w: &Word, alpha: Rational, delta: Option<Rational>) -> Result<CensusReport> {
    let lists = find_maximal_gapped_repeats(w, alpha)?;
    let mut counts_by_class = [0usize; 4];
    for g in lists.iter() {
        let class = classify(w, g);
        counts_by_class[RepeatClass::ALL.iter().position(|&c| c == class).unwrap()] += 1;
    }
    let runs = find_runs(w);
    let subrep_count = match delta {
        Some(d) => Some(find_subrepetitions(w, d)?.len()),
        None => None,
    };
    let n = w.len();
    let repeat_count = lists.len();
    let (ratio_alpha_n, ratio_alpha_sq_n) = if n == 0 {
        (0.0, 0.0)
    } else {
        let a = alpha.to_f64();
        (repeat_count as f64 / (a * n as f64), repeat_count as f64 / (a * a * n as f64))
    };
    Ok(CensusReport {
        n,
        alphabet_size: w.alphabet_size(),
        alpha,
        delta,
        run_count: runs.len(),
        sum_exponents: sum_exponents(&runs),
        repeat_count,
        counts_by_class,
        subrep_count,
        ratio_alpha_n,
        ratio_alpha_sq_n,
    })
}
