//! Exact scalars over ℚ and GF(p).
//!
//! Rationals keep an `i64` fast path and promote to big integers on overflow;
//! every value is stored in canonical form (reduced, positive denominator) so
//! structural equality is mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Builds `GF(p)`, rejecting non-primes.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p < (1 << 62) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Parse(format!("{p} is not a supported prime modulus")))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Rational::Small(n, 1)),
            FieldSpec::Prime(p) => Scalar::Fp {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self {
            FieldSpec::Rationals => Scalar::Q(Rational::from_i128(num as i128, den as i128)),
            FieldSpec::Prime(_) => &self.from_i64(num) * &self.from_i64(den).inv(),
        }
    }

    /// Parses the serialized scalar form: `"a/b"` or `"a"` over ℚ, a residue over GF(p).
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num = BigInt::from_str(num.trim())
                    .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
                let den = BigInt::from_str(den.trim())
                    .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Q(Rational::from_big(BigRational::new(num, den))))
            }
            FieldSpec::Prime(p) => {
                let v = BigInt::from_str(s)
                    .map_err(|_| Error::Parse(format!("bad residue {s:?}")))?;
                let r = v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits");
                Ok(Scalar::Fp { value: r, modulus: p })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" | "rationals" => Ok(FieldSpec::Rationals),
            other => {
                let p = other
                    .strip_prefix("gf:")
                    .or_else(|| other.strip_prefix("GF:"))
                    .ok_or_else(|| Error::Parse(format!("unknown field {other:?}")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad modulus in {other:?}")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arbitrary-precision rational in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    /// numerator, denominator > 0, coprime
    Small(i64, i64),
    /// only used when the value does not fit `Small`
    Big(Box<BigRational>),
}

impl Rational {
    fn from_i128(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(BigRational::new(n.into(), d.into()))),
        }
    }

    fn from_big(r: BigRational) -> Rational {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw((*n).into(), (*d).into()),
            Rational::Big(b) => (**b).clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    fn add(&self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if b == d {
                    Rational::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                        (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                            Some(s) => Rational::from_i128(s, z),
                            None => Rational::from_big(self.to_big() + other.to_big()),
                        },
                        _ => Rational::from_big(self.to_big() + other.to_big()),
                    }
                }
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }

    fn mul(&self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) if *n != i64::MIN => Rational::Small(-n, *d),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    fn inv(&self) -> Rational {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Rational::Small(n, d) => Rational::from_i128(*d as i128, *n as i128),
            Rational::Big(b) => Rational::from_big(b.recip()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_big().cmp(&other.to_big())
    }
}

/// An exact field element. All scalars in one computation share a [`FieldSpec`];
/// mixing fields is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => matches!(r, Rational::Small(1, 1)),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(r.inv()),
            Scalar::Fp { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                Scalar::Fp {
                    value: pow_mod(*value, modulus - 2, *modulus),
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(Rational::Small(n, _)) => *n < 0,
            Scalar::Q(Rational::Big(b)) => b.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    fn mismatch(a: &Scalar, b: &Scalar) -> ! {
        panic!("field mismatch: {} vs {}", a.field(), b.field())
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    let m128 = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Scalars serialize as their canonical string so no float path exists.
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    #[inline]
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => {
                Scalar::Fp {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => Scalar::mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    #[inline]
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    #[inline]
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => {
                Scalar::Fp {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => Scalar::mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    #[inline]
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

/// `acc += a * b`, skipping the work when either factor is zero.
#[inline]
pub fn add_product(acc: &mut Scalar, a: &Scalar, b: &Scalar) {
    if a.is_zero() || b.is_zero() {
        return;
    }
    *acc = &*acc + &(a * b);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.from_ratio(2, -4), q.parse_scalar("-1/2").unwrap());
        assert_eq!(q.from_ratio(2, -4).to_string(), "-1/2");
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.from_i64(-1).to_string(), "6");
        assert_eq!((&f7.from_i64(3) * &f7.from_i64(3).inv()), f7.one());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FieldSpec::Rationals.parse_scalar("1/0").is_err());
        assert!(FieldSpec::prime(6).is_err());
        assert!("gf:9".parse::<FieldSpec>().is_err());
        assert_eq!("gf:5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
    }

    #[test]
    fn overflow_promotes_to_big() {
        let q = FieldSpec::Rationals;
        let big = q.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rational::Big(_))));
        let back = &sq * &big.inv();
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Q(Rational::Small(..))));
        assert_eq!(
            sq.to_string(),
            "85070591730234615847396907784232501249"
        );
    }

    proptest! {
        #[test]
        fn rational_field_laws(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let q = FieldSpec::Rationals;
            let x = q.from_ratio(a, b);
            let y = q.from_ratio(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) * &y.inv(), x.clone());
            }
            let parsed = q.parse_scalar(&x.to_string()).unwrap();
            prop_assert_eq!(parsed, x);
        }

        #[test]
        fn prime_field_inverse(v in 1u64..1_000_002) {
            let f = FieldSpec::prime(1_000_003).unwrap();
            let x = f.from_i64(v as i64);
            prop_assert!((&x * &x.inv()).is_one());
        }
    }
}
