use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational cost value.
///
/// All cost arithmetic in this crate is exact: integer inputs never go through
/// floating point, and parsing followed by serialization reproduces the input
/// verbatim. Values are kept in lowest terms with a positive denominator.
///
/// ```
/// use lpal::Cost;
///
/// let half: Cost = "1/2".parse().unwrap();
/// let sum = half + Cost::from_int(2);
/// assert_eq!(sum.to_string(), "5/2");
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cost(Rational64);

impl Cost {
    pub const ZERO: Cost = Cost(Rational64::new_raw(0, 1));

    pub fn from_int(n: u64) -> Cost {
        Cost(Rational64::from_integer(as_i64(n)))
    }

    /// Builds `numer/denom`, rejecting a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Result<Cost> {
        if denom == 0 {
            return Err(Error::InvalidInstance("cost with zero denominator".into()));
        }
        Ok(Cost(Rational64::new(numer, denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The value as an integer if the denominator is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.0.is_integer().then(|| self.0.to_integer())
    }
}

fn as_i64(n: u64) -> i64 {
    i64::try_from(n).expect("value exceeds i64 range")
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl Sub for Cost {
    type Output = Cost;
    fn sub(self, rhs: Cost) -> Cost {
        Cost(self.0 - rhs.0)
    }
}

impl AddAssign for Cost {
    fn add_assign(&mut self, rhs: Cost) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Cost {
    fn sub_assign(&mut self, rhs: Cost) {
        self.0 -= rhs.0;
    }
}

/// Scales a cost by a frequency.
impl Mul<u64> for Cost {
    type Output = Cost;
    fn mul(self, rhs: u64) -> Cost {
        Cost(self.0 * Rational64::from_integer(as_i64(rhs)))
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, Add::add)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Cost {
    type Err = Error;

    /// Parses `n` or `n/d`. Whitespace is not accepted inside the token.
    fn from_str(s: &str) -> Result<Cost> {
        let invalid = || Error::InvalidInstance(format!("malformed rational {s:?}"));
        match s.split_once('/') {
            None => {
                let n: i64 = s.parse().map_err(|_| invalid())?;
                Ok(Cost(Rational64::from_integer(n)))
            }
            Some((n, d)) => {
                let n: i64 = n.parse().map_err(|_| invalid())?;
                let d: i64 = d.parse().map_err(|_| invalid())?;
                if d == 0 {
                    return Err(invalid());
                }
                Ok(Cost(Rational64::new(n, d)))
            }
        }
    }
}
