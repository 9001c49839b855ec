//! Coefficient fields.
//!
//! A [`Field`] is a ring object: elements are plain values and every
//! operation goes through the field instance, so a prime field can carry its
//! modulus at runtime.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// Canonical printable form: `num` or `num/den`, with a leading `-` for
    /// negative values. Prime-field elements print in the symmetric range.
    fn render(&self, a: &Self::Elem) -> String;

    /// Whether the printed form is negative (used to emit `a - b` instead of
    /// `a + -b`).
    fn is_negative(&self, a: &Self::Elem) -> bool;

    fn descriptor(&self) -> FieldDescriptor;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    Prime(u64),
}

impl std::fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "QQ"),
            FieldDescriptor::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Exact rationals over arbitrary-precision integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rational
    }
}

/// The prime field `Z/pZ` for a prime `p < 2^31`, `p != 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub const MAX_MODULUS: u64 = 1 << 31;

    /// Characteristic 3 is refused: the coefficient 3 of the second-symbolic
    /// generator vanishes there.
    pub fn new(p: u64) -> Result<Self, PolyError> {
        if p == 3 {
            return Err(PolyError::InvalidField(
                "characteristic 3 is not supported".into(),
            ));
        }
        if p >= Self::MAX_MODULUS {
            return Err(PolyError::InvalidField(format!(
                "modulus {p} exceeds 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(PolyError::InvalidField(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn render(&self, a: &u64) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn is_negative(&self, a: &u64) -> bool {
        *a > self.p / 2
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_three_and_composites() {
        assert!(PrimeField::new(3).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            let ia = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ia), 1);
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.render(&100), "-1");
        assert_eq!(f.from_i64(-1), 100);
    }

    #[test]
    fn rational_render() {
        let q = Rationals;
        let half = q.div(&q.one(), &q.from_i64(-2)).unwrap();
        assert_eq!(q.render(&half), "-1/2");
        assert!(q.is_negative(&half));
    }
}
