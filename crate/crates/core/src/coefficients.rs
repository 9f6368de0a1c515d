//! Exact coefficient fields: word-sized prime fields and the rationals.
//!
//! Every polynomial routine in this crate is generic over [`Field`]. A field
//! value is a small descriptor (the modulus, or nothing for `Q`); elements are
//! plain values that the descriptor operates on.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};
use thiserror::Error;

/// Largest modulus accepted by [`PrimeField::new`].
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("attempted to invert zero")]
    ZeroInversion,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range 2..2^31")]
    ModulusOutOfRange(u64),
    #[error("cannot parse coefficient `{0}`")]
    Parse(String),
}

/// A coefficient field together with its element type.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// The element `num / den`.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, FieldError>;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// A random element. Uniform for prime fields; small integers for `Q`.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// Canonical signed text form (`-3`, `1/2`, ...). Prime field elements are
    /// printed as the representative of least absolute value.
    fn format(&self, a: &Self::Elem) -> String;

    /// Short descriptor accepted by the `--field` flag.
    fn descriptor(&self) -> String;
}

/// Deterministic primality test for word-sized integers (trial division).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `F_p`. The value is always fully reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u32,
    modulus: u32,
}

impl PrimeFieldElement {
    /// Reduces `value` into `[0, modulus)`. The modulus is not re-checked for
    /// primality; use [`PrimeField`] to obtain checked elements.
    pub fn new(value: i64, modulus: u32) -> Self {
        let m = modulus as i64;
        Self {
            value: value.rem_euclid(m) as u32,
            modulus,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        mod_inverse(*self)
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn signed(&self) -> i64 {
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed prime field moduli");
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        let s = self.value as u64 + rhs.value as u64;
        let m = self.modulus as u64;
        Self {
            value: if s >= m { (s - m) as u32 } else { s as u32 },
            modulus: self.modulus,
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + (self.modulus - rhs.value)
        };
        Self {
            value,
            modulus: self.modulus,
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        Self {
            value: ((self.value as u64 * rhs.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
}

/// Inverse of a nonzero element of `F_p`.
pub fn mod_inverse(a: PrimeFieldElement) -> Result<PrimeFieldElement, FieldError> {
    if a.value == 0 {
        return Err(FieldError::ZeroInversion);
    }
    let (mut old_r, mut r) = (a.value as i64, a.modulus as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    Ok(PrimeFieldElement::new(old_s, a.modulus))
}

/// The prime field `F_p` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(FieldError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { modulus: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn element(&self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement::new(v, self.modulus)
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        self.element(0)
    }

    fn one(&self) -> PrimeFieldElement {
        self.element(1)
    }

    fn from_i64(&self, v: i64) -> PrimeFieldElement {
        self.element(v)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<PrimeFieldElement, FieldError> {
        let p = BigInt::from(self.modulus);
        let reduce = |x: &BigInt| -> PrimeFieldElement {
            let r = x.mod_floor(&p);
            self.element(r.to_i64().expect("reduced value fits"))
        };
        let d = reduce(den);
        if d.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(reduce(num) * d.inverse()?)
    }

    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.value == 0
    }

    fn is_one(&self, a: &PrimeFieldElement) -> bool {
        a.value == 1
    }

    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a + *b
    }

    fn sub(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a - *b
    }

    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a * *b
    }

    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        -*a
    }

    fn inv(&self, a: &PrimeFieldElement) -> Result<PrimeFieldElement, FieldError> {
        mod_inverse(*a)
    }

    fn random(&self, rng: &mut dyn RngCore) -> PrimeFieldElement {
        self.element(rng.gen_range(0..self.modulus) as i64)
    }

    fn format(&self, a: &PrimeFieldElement) -> String {
        a.signed().to_string()
    }

    fn descriptor(&self) -> String {
        format!("fp:{}", self.modulus)
    }
}

/// A rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalElement(BigRational);

impl RationalElement {
    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }
}

/// Builds `n/d` in lowest terms with a positive denominator.
pub fn rational_normalize(
    n: impl Into<BigInt>,
    d: impl Into<BigInt>,
) -> Result<RationalElement, FieldError> {
    let (n, d) = (n.into(), d.into());
    if d.is_zero() {
        return Err(FieldError::ZeroDenominator);
    }
    // BigRational::new reduces by the gcd and moves the sign to the numerator.
    Ok(RationalElement(BigRational::new(n, d)))
}

impl fmt::Debug for RationalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RationalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for RationalElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for RationalElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul for RationalElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl Neg for RationalElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = RationalElement;

    fn zero(&self) -> RationalElement {
        RationalElement(BigRational::zero())
    }

    fn one(&self) -> RationalElement {
        RationalElement(BigRational::one())
    }

    fn from_i64(&self, v: i64) -> RationalElement {
        RationalElement::from_integer(v)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<RationalElement, FieldError> {
        rational_normalize(num.clone(), den.clone())
    }

    fn is_zero(&self, a: &RationalElement) -> bool {
        a.0.is_zero()
    }

    fn is_one(&self, a: &RationalElement) -> bool {
        a.0.is_one()
    }

    fn add(&self, a: &RationalElement, b: &RationalElement) -> RationalElement {
        RationalElement(&a.0 + &b.0)
    }

    fn sub(&self, a: &RationalElement, b: &RationalElement) -> RationalElement {
        RationalElement(&a.0 - &b.0)
    }

    fn mul(&self, a: &RationalElement, b: &RationalElement) -> RationalElement {
        RationalElement(&a.0 * &b.0)
    }

    fn neg(&self, a: &RationalElement) -> RationalElement {
        RationalElement(-&a.0)
    }

    fn inv(&self, a: &RationalElement) -> Result<RationalElement, FieldError> {
        if a.0.is_zero() {
            return Err(FieldError::ZeroInversion);
        }
        Ok(RationalElement(a.0.recip()))
    }

    fn random(&self, rng: &mut dyn RngCore) -> RationalElement {
        RationalElement::from_integer(rng.gen_range(-9i64..=9))
    }

    fn format(&self, a: &RationalElement) -> String {
        a.to_string()
    }

    fn descriptor(&self) -> String {
        "q".to_string()
    }
}

impl RationalElement {
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_examples() {
        let f = PrimeField::new(10007).unwrap();
        assert_eq!(mod_inverse(f.element(1)).unwrap().value(), 1);
        assert_eq!(mod_inverse(f.element(3)).unwrap().value(), 3336);
        let f5 = PrimeField::new(5).unwrap();
        // brute force over {1..4}
        let brute = (1..5).find(|b| (2 * b) % 5 == 1).unwrap();
        assert_eq!(brute, 3);
        assert_eq!(mod_inverse(f5.element(2)).unwrap().value(), 3);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(mod_inverse(f.element(0)), Err(FieldError::ZeroInversion));
        assert_eq!(Rationals.inv(&Rationals.zero()), Err(FieldError::ZeroInversion));
    }

    #[test]
    fn field_construction_rejects_composites_and_large_moduli() {
        assert_eq!(PrimeField::new(10006), Err(FieldError::NotPrime(10006)));
        assert_eq!(PrimeField::new(1), Err(FieldError::ModulusOutOfRange(1)));
        assert!(PrimeField::new(MAX_MODULUS + 11).is_err());
        assert!(PrimeField::new(2147483647).is_ok());
    }

    #[test]
    fn rational_normalization() {
        assert_eq!(rational_normalize(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(rational_normalize(3, -6).unwrap().to_string(), "-1/2");
        let z = rational_normalize(0, 7).unwrap();
        assert!(z.numerator().is_zero());
        assert!(z.denominator().is_one());
        assert_eq!(rational_normalize(1, 0), Err(FieldError::ZeroDenominator));
    }

    #[test]
    fn prime_field_from_ratio() {
        let f = PrimeField::new(7).unwrap();
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half.value(), 4);
        assert_eq!(
            f.from_ratio(&BigInt::from(1), &BigInt::from(14)),
            Err(FieldError::ZeroDenominator)
        );
        assert_eq!(f.format(&f.element(6)), "-1");
    }

    fn fp_triple() -> impl Strategy<Value = (u32, u32, u32)> {
        (0u32..10007, 0u32..10007, 0u32..10007)
    }

    proptest! {
        #[test]
        fn prime_field_axioms((a, b, c) in fp_triple()) {
            let f = PrimeField::new(10007).unwrap();
            let (a, b, c) = (f.element(a as i64), f.element(b as i64), f.element(c as i64));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a + (-a), f.zero());
            prop_assert_eq!(a - b + b, a);
            if !a.is_zero() {
                prop_assert_eq!(a * mod_inverse(a).unwrap(), f.one());
            }
        }

        #[test]
        fn rational_sum_matches_normalized_sum(
            a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50
        ) {
            let lhs = rational_normalize(a * d + c * b, b * d).unwrap();
            let rhs = rational_normalize(a, b).unwrap() + rational_normalize(c, d).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rational_field_axioms(
            a in -20i64..20, b in 1i64..20, c in -20i64..20, d in 1i64..20
        ) {
            let q = Rationals;
            let x = rational_normalize(a, b).unwrap();
            let y = rational_normalize(c, d).unwrap();
            prop_assert_eq!(q.mul(&x, &q.add(&y, &q.one())), q.add(&q.mul(&x, &y), &x));
            if !q.is_zero(&x) {
                prop_assert!(q.is_one(&q.mul(&x, &q.inv(&x).unwrap())));
            }
        }
    }
}
