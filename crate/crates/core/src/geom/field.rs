use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a + bω` with `ω² + ω + 1 = 0`, over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloRational {
    pub a: BigRational,
    pub b: BigRational,
}

impl CycloRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        CycloRational { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        CycloRational::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn rational(a: BigRational) -> Self {
        CycloRational::new(a, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The Galois conjugate, `ω ↦ ω² = -1 - ω`.
    pub fn conj(&self) -> Self {
        CycloRational::new(&self.a - &self.b, -&self.b)
    }

    /// `N(a + bω) = a² - ab + b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::Domain("division by zero in Q(ω)".into()));
        }
        let c = self.conj();
        Ok(CycloRational::new(c.a / &n, c.b / n))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }
}

impl Add for &CycloRational {
    type Output = CycloRational;
    fn add(self, o: &CycloRational) -> CycloRational {
        CycloRational::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &CycloRational {
    type Output = CycloRational;
    fn sub(self, o: &CycloRational) -> CycloRational {
        CycloRational::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &CycloRational {
    type Output = CycloRational;
    fn mul(self, o: &CycloRational) -> CycloRational {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = -1 - ω
        let bd = &self.b * &o.b;
        CycloRational::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - bd)
    }
}

impl Neg for &CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        CycloRational::new(-&self.a, -&self.b)
    }
}

impl fmt::Display for CycloRational {
    /// `a+b*w`, e.g. `1/2-3*w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*w", self.a, sign, self.b.abs())
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Accepts `a/b+c/d*w`, a bare rational, or `±w` forms such as `1-w`.
impl FromStr for CycloRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not an element of Q(ω): {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(head) = t.strip_suffix('w') else {
            return parse_rational(&t).map(CycloRational::rational).ok_or_else(bad);
        };
        let head = head.strip_suffix('*').unwrap_or(head);
        let split = head
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-') && !head[..k].ends_with(['/', '+', '-']))
            .map(|(k, _)| k)
            .last();
        let (a, b) = match split {
            Some(k) => (&head[..k], &head[k..]),
            None => ("0", head),
        };
        let b = match b {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other)).ok_or_else(bad)?,
        };
        Ok(CycloRational::new(parse_rational(a).ok_or_else(bad)?, b))
    }
}

impl serde::Serialize for CycloRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for CycloRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = CycloRational::omega();
        let w2 = &w * &w;
        assert_eq!(&(&w2 + &w) + &CycloRational::one(), CycloRational::zero());
        assert_eq!(&w2 * &w, CycloRational::one());
        assert_eq!(w.conj(), w2);
    }

    #[test]
    fn parse_and_display() {
        let x = CycloRational::new(q(1, 2), q(-3, 1));
        assert_eq!(x.to_string(), "1/2-3*w");
        assert_eq!("1/2-3*w".parse::<CycloRational>().unwrap(), x);
        assert_eq!("-1/2+-3/4*w".parse::<CycloRational>().unwrap(), CycloRational::new(q(-1, 2), q(-3, 4)));
        assert_eq!("w".parse::<CycloRational>().unwrap(), CycloRational::omega());
        assert_eq!("1-w".parse::<CycloRational>().unwrap(), CycloRational::from_ints(1, -1));
        assert_eq!("-7".parse::<CycloRational>().unwrap(), CycloRational::from_ints(-7, 0));
        assert!("1/0".parse::<CycloRational>().is_err());
        assert!("z".parse::<CycloRational>().is_err());
    }

    fn element() -> impl Strategy<Value = CycloRational> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| CycloRational::new(q(a, b), q(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in element(), y in element(), z in element()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inverse().unwrap(), CycloRational::one());
            }
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism(x in element(), y in element()) {
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        }

        #[test]
        fn display_round_trip(x in element()) {
            prop_assert_eq!(x.to_string().parse::<CycloRational>().unwrap(), x);
        }
    }
}
