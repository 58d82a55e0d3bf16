//! Exact rational curvature values.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A curvature value in units where the full sphere carries 2.
///
/// Always kept in lowest terms, so `==` is exact rational equality.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Curv(Ratio<i128>);

impl Curv {
    pub const ZERO: Curv = Curv(Ratio::new_raw(0, 1));

    pub fn new(numer: i128, denom: i128) -> Curv {
        Curv(Ratio::new(numer, denom))
    }

    pub fn int(n: i128) -> Curv {
        Curv(Ratio::from_integer(n))
    }

    /// `1/n`.
    pub fn recip_of(n: usize) -> Curv {
        Curv::new(1, n as i128)
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Whether the value is `i/12` for some integer `i`.
    pub fn is_twelfth_multiple(&self) -> bool {
        (self.0 * Ratio::from_integer(12)).is_integer()
    }

    pub fn ratio(&self) -> Ratio<i128> {
        self.0
    }
}

impl From<Ratio<i128>> for Curv {
    fn from(r: Ratio<i128>) -> Self {
        Curv(r)
    }
}

impl Add for Curv {
    type Output = Curv;
    fn add(self, rhs: Curv) -> Curv {
        Curv(self.0 + rhs.0)
    }
}

impl AddAssign for Curv {
    fn add_assign(&mut self, rhs: Curv) {
        self.0 += rhs.0;
    }
}

impl Sub for Curv {
    type Output = Curv;
    fn sub(self, rhs: Curv) -> Curv {
        Curv(self.0 - rhs.0)
    }
}

impl Neg for Curv {
    type Output = Curv;
    fn neg(self) -> Curv {
        Curv(-self.0)
    }
}

impl Mul<i128> for Curv {
    type Output = Curv;
    fn mul(self, rhs: i128) -> Curv {
        Curv(self.0 * Ratio::from_integer(rhs))
    }
}

impl Sum for Curv {
    fn sum<I: Iterator<Item = Curv>>(iter: I) -> Curv {
        iter.fold(Curv::ZERO, |a, b| a + b)
    }
}

impl<'a> Sum<&'a Curv> for Curv {
    fn sum<I: Iterator<Item = &'a Curv>>(iter: I) -> Curv {
        iter.fold(Curv::ZERO, |a, b| a + *b)
    }
}

impl fmt::Display for Curv {
    /// Always `p/q`, including integers (`2/1`), so reports never mix formats.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Curv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid fraction {0:?}, expected p/q or an integer")]
pub struct ParseCurvError(String);

impl FromStr for Curv {
    type Err = ParseCurvError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCurvError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i128 = p.trim().parse().map_err(|_| err())?;
                let q: i128 = q.trim().parse().map_err(|_| err())?;
                if q == 0 {
                    return Err(err());
                }
                Ok(Curv::new(p, q))
            }
            None => s.parse::<i128>().map(Curv::int).map_err(|_| err()),
        }
    }
}

impl Serialize for Curv {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Curv {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let c = Curv::new(6, 72);
        assert_eq!(c.numer(), 1);
        assert_eq!(c.denom(), 12);
        assert_eq!(c.to_string(), "1/12");
        assert_eq!(Curv::int(2).to_string(), "2/1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["1/12", "-5/66", "0/1", "3"] {
            let c: Curv = s.parse().unwrap();
            let again: Curv = c.to_string().parse().unwrap();
            assert_eq!(c, again);
        }
        assert!("1/0".parse::<Curv>().is_err());
        assert!("x".parse::<Curv>().is_err());
    }

    #[test]
    fn twelfths() {
        assert!(Curv::new(1, 12).is_twelfth_multiple());
        assert!(Curv::new(1, 6).is_twelfth_multiple());
        assert!(!Curv::new(1, 132).is_twelfth_multiple());
        assert!(!Curv::new(1, 24).is_twelfth_multiple());
    }
}
