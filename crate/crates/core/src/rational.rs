//! Exact rational scalars and their textual form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// The scalar field of every exact computation.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses `"p"`, `"p/q"` or a plain decimal like `"-0.25"`.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Q::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip_abs = ip.trim_start_matches(['-', '+']);
        let ip_val = if ip_abs.is_empty() { BigInt::zero() } else { BigInt::from_str(ip_abs).map_err(|_| bad())? };
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let frac = BigInt::from_str(fp).map_err(|_| bad())?;
        let mag = Q::new(ip_val * &den + frac, den);
        return Ok(if neg { -mag } else { mag });
    }
    BigInt::from_str(t).map(Q::from_integer).map_err(|_| bad())
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise (lowest terms, positive denominator).
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Scales a rational vector by a positive factor to the primitive integer vector on its ray.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Primitive integer vector with the first nonzero entry made positive.
pub fn primitive_line(v: &[Q]) -> Vec<BigInt> {
    let mut p = primitive_integer(v);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut p {
            *x = -x.clone();
        }
    }
    p
}

pub fn to_i64_vec(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("integer overflow")).collect()
}

/// A rational that serializes as its canonical string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QStr(pub Q);

impl From<Q> for QStr {
    fn from(x: Q) -> Self {
        QStr(x)
    }
}

impl From<&Q> for QStr {
    fn from(x: &Q) -> Self {
        QStr(x.clone())
    }
}

impl fmt::Display for QStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for QStr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(&self.0))
    }
}

impl<'de> Deserialize<'de> for QStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map(QStr).map_err(serde::de::Error::custom)
    }
}

pub fn to_qstr(v: &[Q]) -> Vec<QStr> {
    v.iter().map(QStr::from).collect()
}

pub fn from_qstr(v: &[QStr]) -> Vec<Q> {
    v.iter().map(|x| x.0.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("3").unwrap(), q(3));
        assert_eq!(parse_q("-6/4").unwrap(), qf(-3, 2));
        assert_eq!(parse_q("-0.25").unwrap(), qf(-1, 4));
        assert_eq!(parse_q(".5").unwrap(), qf(1, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn formatting_round_trips() {
        for s in ["0", "7", "-2/3", "5/12"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![qf(-2, 3), qf(4, 3), q(0)];
        assert_eq!(to_i64_vec(&primitive_integer(&v)), vec![-1, 2, 0]);
        assert_eq!(to_i64_vec(&primitive_line(&v)), vec![1, -2, 0]);
    }
}
