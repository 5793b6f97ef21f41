use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};

/// Denominator shared by every charge: lcm(2, 3, 4, 5).
pub const DENOM: i64 = 60;

/// An exact rational charge stored as a whole number of sixtieths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Charge(i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);

    pub fn integer(k: i64) -> Charge {
        Charge(k * DENOM)
    }

    /// `p / q`, provided `q` divides 60.
    pub fn ratio(p: i64, q: i64) -> Option<Charge> {
        (q > 0 && DENOM % q == 0).then(|| Charge(p * (DENOM / q)))
    }

    pub fn from_sixtieths(s: i64) -> Charge {
        Charge(s)
    }

    pub fn sixtieths(self) -> i64 {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Reduced numerator and positive denominator.
    pub fn to_fraction(self) -> (i64, i64) {
        let g = gcd(self.0.unsigned_abs(), DENOM as u64) as i64;
        (self.0 / g, DENOM / g)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Always rendered as `p/q` in lowest terms, e.g. `-3/1`, `2/5`.
impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.to_fraction();
        write!(f, "{}/{}", p, q)
    }
}

impl Serialize for Charge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, rhs: Charge) -> Charge {
        Charge(self.0 + rhs.0)
    }
}

impl Sub for Charge {
    type Output = Charge;
    fn sub(self, rhs: Charge) -> Charge {
        Charge(self.0 - rhs.0)
    }
}

impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}

impl AddAssign for Charge {
    fn add_assign(&mut self, rhs: Charge) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Charge {
    fn sub_assign(&mut self, rhs: Charge) {
        self.0 -= rhs.0;
    }
}

impl Sum for Charge {
    fn sum<I: Iterator<Item = Charge>>(iter: I) -> Charge {
        Charge(iter.map(|c| c.0).sum())
    }
}

impl<'a> Sum<&'a Charge> for Charge {
    fn sum<I: Iterator<Item = &'a Charge>>(iter: I) -> Charge {
        Charge(iter.map(|c| c.0).sum())
    }
}
