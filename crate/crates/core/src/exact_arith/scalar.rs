//! Exact scalars: rationals and Gaussian rationals.
//!
//! A [`Scalar`] is kept in canonical form at all times. Rationals are reduced
//! with a positive denominator (zero is `0/1`), and a Gaussian rational whose
//! imaginary part vanishes collapses back to [`Scalar::Rational`], so derived
//! equality is exact mathematical equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// Invariant: `im` is nonzero.
    Gaussian { re: BigRational, im: BigRational },
}

impl Scalar {
    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(n))
    }

    /// `num/den`, reduced. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(q: BigRational) -> Self {
        Scalar::Rational(q)
    }

    pub fn complex(re: BigRational, im: BigRational) -> Self {
        if im.is_zero() {
            Scalar::Rational(re)
        } else {
            Scalar::Gaussian { re, im }
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::complex(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Gaussian { re, .. } => re.clone(),
        }
    }

    pub fn im(&self) -> BigRational {
        match self {
            Scalar::Rational(_) => BigRational::zero(),
            Scalar::Gaussian { im, .. } => im.clone(),
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Rational(_) => self.clone(),
            Scalar::Gaussian { re, im } => Scalar::complex(re.clone(), -im),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Gaussian { .. } => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_one())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Gaussian { re, im } => {
                let norm = re * re + im * im;
                Scalar::complex(re / &norm, -(im / &norm))
            }
        })
    }

    /// Least common multiple of the denominators of both components.
    pub(crate) fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        match self {
            Scalar::Rational(q) => q.denom().clone(),
            Scalar::Gaussian { re, im } => re.denom().lcm(im.denom()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Rational(q) => Value::String(format_rational(q)),
            Scalar::Gaussian { re, im } => {
                json!({ "re": format_rational(re), "im": format_rational(im) })
            }
        }
    }

    /// Accepts `"p/q"` strings, JSON integers, and `{"re": .., "im": ..}` objects.
    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) => n
                .as_i64()
                .map(Scalar::from_int)
                .ok_or_else(|| Error::Parse(format!("scalar {n} is not an integer; use \"p/q\""))),
            Value::Object(map) => {
                let part = |key: &str| -> Result<BigRational> {
                    match map.get(key) {
                        None => Ok(BigRational::zero()),
                        Some(p) => match Scalar::from_json(p)? {
                            Scalar::Rational(q) => Ok(q),
                            Scalar::Gaussian { .. } => {
                                Err(Error::Parse(format!("nested complex scalar in {key}")))
                            }
                        },
                    }
                };
                Ok(Scalar::complex(part("re")?, part("im")?))
            }
            other => Err(Error::Parse(format!("invalid scalar {other}"))),
        }
    }
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p/q`, `bi`, `a+bi` and `a-bi`, the forms `Display` writes.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('i') else {
            return parse_rational(s).map(Scalar::Rational);
        };
        let split = body.rfind(['+', '-']).filter(|&k| k > 0);
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k])?, &body[k..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            m => parse_rational(m.strip_prefix('+').unwrap_or(m))?,
        };
        Ok(Scalar::complex(re, im))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => f.write_str(&format_rational(q)),
            Scalar::Gaussian { re, im } => {
                let sign = if im.is_negative() { '-' } else { '+' };
                let mag = format_rational(&im.abs());
                if re.is_zero() {
                    if im.is_negative() {
                        write!(f, "-{mag}i")
                    } else {
                        write!(f, "{mag}i")
                    }
                } else {
                    write!(f, "{}{sign}{mag}i", format_rational(re))
                }
            }
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => Scalar::complex(self.re() + rhs.re(), self.im() + rhs.im()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => Scalar::complex(self.re() - rhs.re(), self.im() - rhs.im()),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Rational(a), Scalar::Gaussian { re, im })
            | (Scalar::Gaussian { re, im }, Scalar::Rational(a)) => {
                Scalar::complex(a * re, a * im)
            }
            (Scalar::Gaussian { re: a, im: b }, Scalar::Gaussian { re: c, im: d }) => {
                Scalar::complex(a * c - b * d, a * d + b * c)
            }
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    /// Panics on division by zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a / b),
            _ => self * &rhs.recip().expect("division by zero scalar"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Gaussian { re, im } => Scalar::Gaussian { re: -re, im: -im },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn canonical_rationals() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, 7), Scalar::zero());
        assert_eq!(q(0, 7).to_string(), "0");
        assert_eq!(q(-3, 1).to_string(), "-3");
        assert_eq!(q(1, 6).to_string(), "1/6");
    }

    #[test]
    fn parse_text_encoding() {
        assert_eq!("-3".parse::<Scalar>().unwrap(), q(-3, 1));
        assert_eq!("1/6".parse::<Scalar>().unwrap(), q(1, 6));
        assert_eq!("4/-8".parse::<Scalar>().unwrap(), q(-1, 2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn gaussian_collapses_when_real() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
        assert!((&i * &i).is_real());
        let z = Scalar::complex(BigRational::from_integer(3.into()), BigRational::from_integer(4.into()));
        assert_eq!(&z * &z.conj(), Scalar::from_int(25));
        assert_eq!(&z / &z, Scalar::one());
        assert_eq!(z.to_string(), "3+4i");
        assert_eq!((-&i).to_string(), "-1i");
    }

    #[test]
    fn json_encoding() {
        assert_eq!(q(-1, 2).to_json(), json!("-1/2"));
        assert_eq!(Scalar::from_json(&json!(7)).unwrap(), Scalar::from_int(7));
        let z = Scalar::from_json(&json!({"re": "1/2", "im": "-3"})).unwrap();
        assert_eq!(z.to_json(), json!({"re": "1/2", "im": "-3"}));
        assert_eq!(Scalar::from_json(&json!({"re": "5", "im": "0"})).unwrap(), Scalar::from_int(5));
        assert!(Scalar::from_json(&json!(1.5)).is_err());
    }

    #[test]
    fn recip_of_zero_is_none() {
        assert!(Scalar::zero().recip().is_none());
        assert_eq!(q(2, 3).recip().unwrap(), q(3, 2));
    }
}
