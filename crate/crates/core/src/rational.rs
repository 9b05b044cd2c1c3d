//! Exact positive rationals for the `alpha` and `delta` parameters.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A positive rational number `num/den` kept in lowest terms.
///
/// Floating-point literals are deliberately not accepted by [`FromStr`]:
/// the alpha-gapped test has to be exact at ties such as `p = alpha * c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 {
            return Err(Error::InvalidParameter("rational must be positive".into()));
        }
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let g = num.gcd(&den);
        Ok(Self {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(n: u64) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// Smallest integer not less than `self`.
    pub fn ceil(self) -> u64 {
        self.num.div_ceil(self.den)
    }

    pub fn recip(self) -> Self {
        Self {
            num: self.den,
            den: self.num,
        }
    }

    pub fn is_greater_than_one(self) -> bool {
        self.num > self.den
    }

    pub fn is_less_than_one(self) -> bool {
        self.num < self.den
    }

    /// `self * x <= y` compared exactly.
    pub(crate) fn mul_le(self, x: u64, y: u64) -> bool {
        (self.num as u128) * (x as u128) <= (self.den as u128) * (y as u128)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_component(input: &str, part: &str) -> Result<u64> {
    if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseRational {
            input: input.to_owned(),
            reason: "expected P or P/Q with decimal integers",
        });
    }
    part.parse().map_err(|_| Error::ParseRational {
        input: input.to_owned(),
        reason: "integer out of range",
    })
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (parse_component(s, n)?, parse_component(s, d)?),
            None => (parse_component(s, t)?, 1),
        };
        if den == 0 {
            return Err(Error::ParseRational {
                input: s.to_owned(),
                reason: "zero denominator",
            });
        }
        if num == 0 {
            return Err(Error::ParseRational {
                input: s.to_owned(),
                reason: "value must be positive",
            });
        }
        Rational::new(num, den)
    }
}

/// Whether a gapped repeat with the given period and copy length is
/// `alpha`-gapped, i.e. `period <= alpha * copy_len`.
pub fn alpha_gapped_test(period: u64, copy_len: u64, alpha: Rational) -> Result<bool> {
    if !alpha.is_greater_than_one() {
        return Err(Error::InvalidParameter(format!(
            "alpha must exceed 1, got {alpha}"
        )));
    }
    Ok(is_alpha_gapped(period, copy_len, alpha))
}

/// Unchecked variant for hot loops where `alpha > 1` was validated upstream.
#[inline]
pub(crate) fn is_alpha_gapped(period: u64, copy_len: u64, alpha: Rational) -> bool {
    (period as u128) * (alpha.den as u128) <= (alpha.num as u128) * (copy_len as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_test_examples() {
        assert!(alpha_gapped_test(3, 2, r("3/2")).unwrap());
        assert!(!alpha_gapped_test(4, 1, r("2")).unwrap());
        assert!(alpha_gapped_test(2, 1, r("2")).unwrap());
    }

    #[test]
    fn alpha_test_rejects_small_alpha() {
        assert!(matches!(
            alpha_gapped_test(2, 1, r("1")),
            Err(Error::InvalidParameter(_))
        ));
        assert!(alpha_gapped_test(2, 1, r("2/3")).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(r("6/4"), Rational::new(3, 2).unwrap());
        assert_eq!(r("2").to_string(), "2");
        assert_eq!(r("3/2").to_string(), "3/2");
        assert_eq!(r(" 1/2 ").to_string(), "1/2");
        for bad in ["1.5", "", "/2", "3/", "-1", "0", "0/3", "2/0", "1e3", "a/b", "1/2/3"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn ceil_and_recip() {
        assert_eq!(r("3/2").ceil(), 2);
        assert_eq!(r("4").ceil(), 4);
        assert_eq!(r("7/3").ceil(), 3);
        assert_eq!(r("1/3").recip(), r("3"));
        assert!(r("3/2") > r("4/3"));
        assert!(r("1/2").is_less_than_one());
    }

    proptest! {
        #[test]
        fn alpha_test_is_scale_invariant(p in 1u64..10_000, c in 1u64..10_000,
                                         num in 2u64..50, den in 1u64..50, m in 1u64..1000) {
            prop_assume!(num > den);
            let alpha = Rational::new(num, den).unwrap();
            prop_assert_eq!(
                alpha_gapped_test(p, c, alpha).unwrap(),
                alpha_gapped_test(p * m, c * m, alpha).unwrap()
            );
        }
    }
}
