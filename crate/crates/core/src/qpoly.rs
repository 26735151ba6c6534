//! Laurent polynomials in q with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// q^k.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(k, BigInt::one())
    }

    pub fn monomial(k: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> Self {
        QLaurent { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Value at q = 1, the ungraded dimension.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True iff the coefficient of q^k equals that of q^{-k} for every k.
    pub fn is_bar_symmetric(&self) -> bool {
        self.terms.iter().all(|(&k, c)| self.terms.get(&-k) == Some(c))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Canonical text form, e.g. `1 + 2*q^2` or `q^-1 + q`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Add<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(mut self, rhs: QLaurent) -> QLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl AddAssign for QLaurent {
    fn add_assign(&mut self, rhs: QLaurent) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: QLaurent) -> QLaurent {
        self + (-rhs)
    }
}

impl Mul<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> QLaurent {
        iter.fold(QLaurent::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a QLaurent> for QLaurent {
    fn sum<I: Iterator<Item = &'a QLaurent>>(iter: I) -> QLaurent {
        let mut acc = QLaurent::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&k, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QLaurentRepr {
    terms: Vec<(i64, String)>,
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QLaurentRepr {
            terms: self.terms.iter().map(|(&k, c)| (k, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = QLaurentRepr::deserialize(d)?;
        let mut p = QLaurent::zero();
        for (k, c) in repr.terms {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(k, c);
        }
        Ok(p)
    }
}
