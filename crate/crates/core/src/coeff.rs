//! Exact coefficient arithmetic: prime fields `F_p` for odd `p`, and
//! arbitrary-precision rationals for characteristic zero.
//!
//! Elements are kept in canonical form at all times: residues in `[0, p)` for
//! `F_p`, fully reduced fractions for the rationals. Equality is
//! representational equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("characteristic must be 0 or an odd prime, got {0}")]
    BadCharacteristic(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("division by zero")]
    DivisionByZero,
    #[error("quadratic residue test of zero")]
    ResidueTestOfZero,
}

/// The coefficient field: characteristic 0 (rationals) or an odd prime `p`.
///
/// Characteristic 2 is rejected at construction; the verified formulas divide
/// by 2 throughout.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldDescriptor {
    characteristic: u64,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor { characteristic: 0 }
    }

    pub fn prime_field(p: u64) -> Result<Self, CoeffError> {
        if p < 3 || p.is_multiple_of(2) || !is_prime_u64(p) {
            return Err(CoeffError::BadCharacteristic(p));
        }
        Ok(FieldDescriptor { characteristic: p })
    }

    /// 0 or an odd prime, validated at construction.
    pub fn new(characteristic: u64) -> Result<Self, CoeffError> {
        if characteristic == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime_field(characteristic)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn zero(&self) -> FieldElement {
        self.from_integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        match self.characteristic {
            0 => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
            p => {
                let r = n.rem_euclid(p as i64) as u64;
                FieldElement::Modular { p, value: r }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.characteristic {
            0 => FieldElement::Rational(BigRational::from_integer(n.clone())),
            p => {
                let m = BigInt::from(p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                let digits = r.to_u64_digits().1;
                let value = if digits.is_empty() { 0 } else { digits[0] };
                FieldElement::Modular { p, value }
            }
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "QQ"),
            p => write!(f, "F_{p}"),
        }
    }
}

/// A field element in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldElement {
    Rational(BigRational),
    Modular { p: u64, value: u64 },
}

impl FieldElement {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            FieldElement::Rational(_) => FieldDescriptor::rationals(),
            FieldElement::Modular { p, .. } => FieldDescriptor { characteristic: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular { value, .. } => *value == 1,
        }
    }

    fn check_same(&self, other: &FieldElement) -> Result<(), CoeffError> {
        let (a, b) = (self.descriptor(), other.descriptor());
        if a != b {
            return Err(CoeffError::FieldMismatch(a, b));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, CoeffError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a + b)
            }
            (FieldElement::Modular { p, value: a }, FieldElement::Modular { value: b, .. }) => {
                let s = a + b;
                FieldElement::Modular {
                    p: *p,
                    value: if s >= *p { s - p } else { s },
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement, CoeffError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, CoeffError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a * b)
            }
            (FieldElement::Modular { p, value: a }, FieldElement::Modular { value: b, .. }) => {
                FieldElement::Modular {
                    p: *p,
                    value: mul_mod(*a, *b, *p),
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Modular { p, value } => FieldElement::Modular {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    pub fn inv(&self) -> Result<FieldElement, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Modular { p, value } => FieldElement::Modular {
                p: *p,
                value: pow_mod(*value, p - 2, *p),
            },
        })
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement, CoeffError> {
        self.try_mul(&other.inv()?)
    }

    /// Quadratic residue test. Over `F_p` this is the Euler criterion
    /// `a^((p-1)/2) = 1`; over the rationals the fraction is tested for being
    /// a perfect square directly.
    pub fn is_square(&self) -> Result<bool, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::ResidueTestOfZero);
        }
        Ok(match self {
            FieldElement::Rational(_) => self.sqrt().is_some(),
            FieldElement::Modular { p, value } => pow_mod(*value, (p - 1) / 2, *p) == 1,
        })
    }

    /// A square root if one exists in the field, in canonical form: the
    /// numerically smaller residue over `F_p`, the nonnegative root over the
    /// rationals.
    pub fn sqrt(&self) -> Option<FieldElement> {
        match self {
            FieldElement::Rational(a) => {
                if a.is_negative() {
                    return None;
                }
                let nr = exact_int_sqrt(a.numer())?;
                let dr = exact_int_sqrt(a.denom())?;
                Some(FieldElement::Rational(BigRational::new(nr, dr)))
            }
            FieldElement::Modular { p, value } => {
                if *value == 0 {
                    return Some(self.clone());
                }
                let r = sqrt_mod(*value, *p)?;
                Some(FieldElement::Modular {
                    p: *p,
                    value: r.min(*p - r),
                })
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! binop_impl {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch")
            }
        }
    };
}

binop_impl!(Add, add, try_add);
binop_impl!(Sub, sub, try_sub);
binop_impl!(Mul, mul, try_mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

fn exact_int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Tonelli-Shanks modular square root for odd prime p; `None` for
/// non-residues.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    // p = q * 2^s + 1 with q odd
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    // any quadratic non-residue serves as the generator
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) == 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Deterministic Miller-Rabin, complete for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime_field(p).unwrap()
    }

    #[test]
    fn modular_addition_reduces() {
        let f = fp(5);
        assert_eq!(
            f.from_integer(2).try_add(&f.from_integer(4)).unwrap(),
            f.from_integer(1)
        );
    }

    #[test]
    fn rational_addition() {
        let q = FieldDescriptor::rationals();
        let half = q.from_integer(1).try_div(&q.from_integer(2)).unwrap();
        let third = q.from_integer(1).try_div(&q.from_integer(3)).unwrap();
        let sum = half.try_add(&third).unwrap();
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn additive_inverse() {
        let f = fp(7);
        for n in 0..7 {
            let a = f.from_integer(n);
            assert!(a.try_add(&a.neg()).unwrap().is_zero());
        }
    }

    #[test]
    fn inverses() {
        let f = fp(5);
        assert_eq!(f.from_integer(2).inv().unwrap(), f.from_integer(3));
        assert!(f.one().inv().unwrap().is_one());
        // (-1)^2 = 1
        let m1 = f.from_integer(-1);
        assert_eq!(m1.inv().unwrap(), m1);
        assert_eq!(f.zero().inv(), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn inv_is_a_bijection_on_units() {
        let p = 13;
        let f = fp(p);
        let mut seen = std::collections::BTreeSet::new();
        for n in 1..p as i64 {
            let a = f.from_integer(n);
            let b = a.inv().unwrap();
            assert!(a.try_mul(&b).unwrap().is_one());
            assert_eq!(b.inv().unwrap(), a);
            if let FieldElement::Modular { value, .. } = b {
                seen.insert(value);
            }
        }
        assert_eq!(seen.len(), p as usize - 1);
    }

    #[test]
    fn euler_criterion_matches_square_enumeration_mod_5() {
        let f = fp(5);
        // squares mod 5 are {0, 1, 4}
        let squares: std::collections::BTreeSet<u64> = (0u64..5).map(|x| (x * x) % 5).collect();
        for n in 1..5u64 {
            let expect = squares.contains(&n);
            assert_eq!(f.from_integer(n as i64).is_square().unwrap(), expect);
        }
        assert!(f.from_integer(4).is_square().unwrap());
        assert!(!f.from_integer(2).is_square().unwrap());
        assert!(f.one().is_square().unwrap());
        assert_eq!(f.zero().is_square(), Err(CoeffError::ResidueTestOfZero));
    }

    #[test]
    fn modular_sqrt_roundtrip() {
        for p in [3u64, 5, 7, 13, 17, 29, 97] {
            let f = fp(p);
            for n in 1..p {
                let a = f.from_integer(n as i64);
                match a.sqrt() {
                    Some(r) => assert_eq!(r.try_mul(&r).unwrap(), a),
                    None => assert!(!a.is_square().unwrap()),
                }
            }
        }
    }

    #[test]
    fn rational_sqrt() {
        let q = FieldDescriptor::rationals();
        let a = q.from_integer(9).try_div(&q.from_integer(4)).unwrap();
        assert_eq!(a.sqrt().unwrap().to_string(), "3/2");
        assert!(q.from_integer(2).sqrt().is_none());
        assert!(q.from_integer(-4).sqrt().is_none());
    }

    #[test]
    fn even_and_composite_characteristics_rejected() {
        assert!(FieldDescriptor::new(2).is_err());
        assert!(FieldDescriptor::new(9).is_err());
        assert!(FieldDescriptor::new(1).is_err());
        assert!(FieldDescriptor::new(0).is_ok());
        assert!(FieldDescriptor::new(3).is_ok());
        assert!(FieldDescriptor::new(1_000_003).is_ok());
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = fp(5).one();
        let b = fp(7).one();
        assert!(matches!(
            a.try_add(&b),
            Err(CoeffError::FieldMismatch(_, _))
        ));
        let q = FieldDescriptor::rationals().one();
        assert!(a.try_mul(&q).is_err());
    }

    #[test]
    fn field_axioms_hold_on_random_elements() {
        // distributivity, associativity, commutativity over F_p
        let f = fp(13);
        let mut x = 1u64;
        let mut next = || {
            x = x
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            f.from_integer((x % 13) as i64)
        };
        for _ in 0..200 {
            let (a, b, c) = (next(), next(), next());
            let ab = a.try_add(&b).unwrap();
            assert_eq!(ab, b.try_add(&a).unwrap());
            assert_eq!(
                a.try_mul(&b).unwrap(),
                b.try_mul(&a).unwrap()
            );
            assert_eq!(
                ab.try_mul(&c).unwrap(),
                a.try_mul(&c).unwrap().try_add(&b.try_mul(&c).unwrap()).unwrap()
            );
            assert_eq!(
                a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
                a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
            );
        }
    }
}
