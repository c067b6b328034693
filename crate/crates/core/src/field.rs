//! Exact scalar arithmetic over the rationals and over prime fields.
//!
//! Everything downstream (matrices, point sets, forms, searches) is generic
//! over a [`Scalar`] type. Two scalars are provided:
//!
//! * [`BigRational`] from `num-rational`, for the field Q;
//! * [`Fp`], a canonical residue in `[0, p)` carrying its modulus.
//!
//! A scalar knows which field it lives in through the associated
//! [`Scalar::Field`] descriptor, so prime-field elements with different
//! moduli can never be mixed silently. All arithmetic is exact; there is no
//! floating point anywhere in this crate.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::FieldError;

/// Moduli are kept desk-scale so that `u64`/`u128` arithmetic never overflows
/// and field enumeration stays feasible.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Runtime description of a coefficient field: the rationals, or F_p for a
/// verified prime p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Builds the prime-field descriptor, verifying primality by trial
    /// division and enforcing the desk-scale modulus bound.
    pub fn prime(p: u64) -> Result<FieldSpec, FieldError> {
        if p >= MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Field characteristic: 0 for Q, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Trial division. Moduli are bounded by [`MAX_MODULUS`], so this is cheap.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Descriptor for the rational field. Carries no data; it exists so that
/// `BigRational` fits the same [`Scalar`] interface as [`Fp`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct RationalField;

impl fmt::Display for RationalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")
    }
}

/// Descriptor for F_p. Construction verifies primality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField, FieldError> {
        match FieldSpec::prime(p)? {
            FieldSpec::Prime(p) => Ok(PrimeField { p }),
            FieldSpec::Rational => unreachable!(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical residue of a (possibly negative) integer.
    pub fn element(&self, v: i64) -> Fp {
        let p = self.p as i64;
        let r = ((v % p) + p) % p;
        Fp { value: r as u64, p: self.p }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// An exact field element. The interface is deliberately small: what the
/// elimination, evaluation and search kernels actually need.
pub trait Scalar: Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Runtime descriptor of the field this element belongs to.
    type Field: Clone + Copy + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static;

    fn field(&self) -> Self::Field;
    fn spec(field: &Self::Field) -> FieldSpec;
    fn zero(field: &Self::Field) -> Self;
    fn one(field: &Self::Field) -> Self;
    fn from_int(field: &Self::Field, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero"))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total order used for canonical sorting of generated data; it has no
    /// algebraic meaning.
    fn cmp_key(&self, rhs: &Self) -> Ordering;

    /// Reduced row echelon form of `rows`, returning the pivot columns in
    /// increasing order. The default is plain Gauss-Jordan over the field;
    /// scalar types may substitute a different exact strategy.
    fn rref_in_place(rows: &mut [Vec<Self>]) -> Vec<usize> {
        gauss_jordan_rows(rows)
    }
}

/// Textbook Gauss-Jordan elimination over any [`Scalar`] field, in place.
/// Returns the pivot columns. Kept public: it doubles as the independent
/// route when testing the fraction-free path used for Q.
pub fn gauss_jordan_rows<K: Scalar>(rows: &mut [Vec<K>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for j in c..ncols {
            rows[r][j] = rows[r][j].mul(&inv);
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            for j in c..ncols {
                let t = factor.mul(&rows[r][j]);
                rows[i][j] = rows[i][j].sub(&t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Scalar for BigRational {
    type Field = RationalField;

    fn field(&self) -> RationalField {
        RationalField
    }

    fn spec(_: &RationalField) -> FieldSpec {
        FieldSpec::Rational
    }

    fn zero(_: &RationalField) -> Self {
        <BigRational as Zero>::zero()
    }

    fn one(_: &RationalField) -> Self {
        <BigRational as One>::one()
    }

    fn from_int(_: &RationalField, v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn cmp_key(&self, rhs: &Self) -> Ordering {
        self.cmp(rhs)
    }

    fn rref_in_place(rows: &mut [Vec<Self>]) -> Vec<usize> {
        crate::bareiss::rational_rref_rows(rows)
    }
}

/// Canonical residue in `[0, p)` together with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(field: PrimeField, value: i64) -> Fp {
        field.element(value)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn same_field(&self, rhs: &Fp) {
        assert_eq!(self.p, rhs.p, "mixed prime-field moduli: {} vs {}", self.p, rhs.p);
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Scalar for Fp {
    type Field = PrimeField;

    fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    fn spec(field: &PrimeField) -> FieldSpec {
        FieldSpec::Prime(field.p)
    }

    fn zero(field: &PrimeField) -> Self {
        Fp { value: 0, p: field.p }
    }

    fn one(field: &PrimeField) -> Self {
        Fp { value: 1 % field.p, p: field.p }
    }

    fn from_int(field: &PrimeField, v: i64) -> Self {
        field.element(v)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let mut v = self.value + rhs.value;
        if v >= self.p {
            v -= self.p;
        }
        Fp { value: v, p: self.p }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.p - rhs.value
        };
        Fp { value: v, p: self.p }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let v = (self.value as u128 * rhs.value as u128 % self.p as u128) as u64;
        Fp { value: v, p: self.p }
    }

    fn neg(&self) -> Self {
        let v = if self.value == 0 { 0 } else { self.p - self.value };
        Fp { value: v, p: self.p }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Extended Euclid on (value, p); p prime makes the gcd 1.
        let (mut r0, mut r1) = (self.p as i128, self.value as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        let p = self.p as i128;
        let v = ((s0 % p) + p) % p;
        Some(Fp { value: v as u64, p: self.p })
    }

    fn cmp_key(&self, rhs: &Self) -> Ordering {
        self.value.cmp(&rhs.value)
    }
}

/// Every element of F_p, in canonical residue order.
pub fn fp_elements(field: &PrimeField) -> impl Iterator<Item = Fp> + '_ {
    let p = field.p;
    (0..p).map(move |v| Fp { value: v, p })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_checks() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(101).is_ok());
        assert!(matches!(FieldSpec::prime(1), Err(FieldError::NotPrime(1))));
        assert!(matches!(FieldSpec::prime(91), Err(FieldError::NotPrime(91))));
        assert!(matches!(
            FieldSpec::prime(1 << 32),
            Err(FieldError::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn fp_arithmetic_round_trip() {
        let f = PrimeField::new(11).unwrap();
        let a = f.element(7);
        let b = f.element(-3); // 8 mod 11
        assert_eq!(b.value(), 8);
        assert_eq!(a.add(&b).value(), 4);
        assert_eq!(a.sub(&b).value(), 10);
        assert_eq!(a.mul(&b).value(), 56 % 11);
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv).value(), 1);
        assert!(Fp::zero(&f).inv().is_none());
    }

    #[test]
    fn rational_exactness_two_routes() {
        let f = RationalField;
        let q = |n: i64, d: i64| {
            BigRational::new(BigInt::from(n), BigInt::from(d))
        };
        // a/b + c/d computed directly and via the common-denominator formula.
        let a = q(3, 7);
        let c = q(-5, 13);
        let direct = Scalar::add(&a, &c);
        let formula = q(3 * 13 + -5 * 7, 7 * 13);
        assert_eq!(direct, formula);
        assert_eq!(<BigRational as Scalar>::zero(&f), q(0, 5));
    }

    #[test]
    fn rational_normal_form() {
        // num-rational keeps fractions reduced with positive denominator.
        let v = BigRational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(v.numer(), &BigInt::from(-2));
        assert_eq!(v.denom(), &BigInt::from(3));
    }
}
