use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in the formal parameter q with rational coefficients.
///
/// Stored densely by q-exponent with trailing zeros trimmed, so the zero
/// scalar is the empty vector and plain rationals have length one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar(Vec<BigRational>);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Vec::new())
    }

    pub fn one() -> Self {
        Scalar(vec![BigRational::one()])
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(vec![r]).trimmed()
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// c·q^exp
    pub fn monomial(exp: usize, c: BigRational) -> Self {
        let mut v = vec![BigRational::zero(); exp + 1];
        v[exp] = c;
        Scalar(v).trimmed()
    }

    pub fn q() -> Self {
        Self::monomial(1, BigRational::one())
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Highest q-exponent with a nonzero coefficient.
    pub fn q_degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// True when no positive power of q occurs.
    pub fn is_rational(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn coeff(&self, exp: usize) -> BigRational {
        self.0.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// The coefficient of q^0 as a scalar.
    pub fn constant_part(&self) -> Scalar {
        Scalar::from_rational(self.coeff(0))
    }

    pub fn scale(&self, r: &BigRational) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar(self.0.iter().map(|c| c * r).collect())
    }

    /// Adds `a·b` into `self`.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.0.len() + b.0.len() - 1;
        if self.0.len() < len {
            self.0.resize(len, BigRational::zero());
        }
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    self.0[i + j] += x * y;
                }
            }
        }
        let taken = std::mem::take(&mut self.0);
        *self = Scalar(taken).trimmed();
    }

    pub fn pow(&self, e: u32) -> Scalar {
        (0..e).fold(Scalar::one(), |acc, _| &acc * self)
    }

    /// Exact value at q = `at`.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Exponent-keyed map of rational strings, e.g. `{"0": "3/2", "1": "-1"}`.
    pub fn to_exponent_map(&self) -> BTreeMap<String, String> {
        self.terms().map(|(e, c)| (e.to_string(), c.to_string())).collect()
    }

    pub fn from_exponent_map(map: &BTreeMap<String, String>) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (e, c) in map {
            let exp: usize =
                e.trim().parse().map_err(|_| Error::Parse(format!("bad q-exponent {e:?}")))?;
            out += &Scalar::monomial(exp, parse_rational(c)?);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.0.len() > self.0.len() {
            self.0.resize(rhs.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        let taken = std::mem::take(&mut self.0);
        *self = Scalar(taken).trimmed();
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &-rhs;
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    /// Renders as e.g. `3/2 - q + 2*q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            let qpart = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if e == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&qpart)?;
            } else {
                write!(f, "{a}*{qpart}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if i > start && (ch == '+' || ch == '-') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut out = Scalar::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let (coeff, exp) = match body.split_once('q') {
                None => (parse_rational(body)?, 0),
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let coeff = if c.is_empty() { BigRational::one() } else { parse_rational(c)? };
                    let exp = match rest {
                        "" => 1,
                        r => r
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad q power in {s:?}")))?,
                    };
                    (coeff, exp)
                }
            };
            let coeff = if negative { -coeff } else { coeff };
            out += &Scalar::monomial(exp, coeff);
        }
        Ok(out)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
