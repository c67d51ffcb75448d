//! Coefficient rings. Every supported ring is Euclidean, so Smith normal form,
//! kernels and subquotients are written once against [`CoefficientRing`].

use core::cmp::Ordering;
use core::fmt;

use super::int::Int;
use super::rational::Rat;
use crate::Error;

/// Ring selector used at API and CLI boundaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring, Error> {
        PrimeField::new(p).map(|_| Ring::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// Checks the primality invariant of `PrimeField`.
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            Ring::PrimeField(p) => PrimeField::new(*p).map(|_| ()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Runs `$body` with `$r` bound to the concrete ring for `$ring`.
/// Prime fields must already be validated.
#[macro_export]
macro_rules! with_ring {
    ($ring:expr, $r:ident => $body:expr) => {
        match $ring {
            $crate::homalg::Ring::Integers => {
                let $r = $crate::homalg::Integers;
                $body
            }
            $crate::homalg::Ring::Rationals => {
                let $r = $crate::homalg::Rationals;
                $body
            }
            $crate::homalg::Ring::PrimeField(p) => {
                let $r = $crate::homalg::PrimeField::new(p).expect("prime field validated");
                $body
            }
        }
    };
}

/// A Euclidean domain with exact arithmetic. Fields are Euclidean with
/// every nonzero element of norm one.
pub trait CoefficientRing: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn ring(&self) -> Ring;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: &Int) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// `a = q·b + r` with `r` of smaller norm than `b` (or zero).
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Compares Euclidean norms of two nonzero elements.
    fn norm_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// For a nonzero non-unit, its order as a cyclic torsion summand.
    fn torsion_order(&self, a: &Self::Elem) -> Option<Int>;
    /// Exact value as a rational (residues map to their least non-negative
    /// representative).
    fn to_rat(&self, a: &Self::Elem) -> Rat;

    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_int(&Int::from(v))
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.unit_inverse(a).is_some()
    }

    fn is_field(&self) -> bool {
        self.ring().is_field()
    }

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return None;
        }
        let (q, r) = self.div_rem(a, b);
        if self.is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }

    /// `a + c·b`
    fn add_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(c, b))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// Residue modulo the prime of the ambient [`PrimeField`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(pub u64);

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField, Error> {
        if !(2..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl CoefficientRing for Integers {
    type Elem = Int;

    fn ring(&self) -> Ring {
        Ring::Integers
    }
    fn zero(&self) -> Int {
        Int::ZERO
    }
    fn one(&self) -> Int {
        Int::ONE
    }
    fn from_int(&self, v: &Int) -> Int {
        v.clone()
    }
    fn is_zero(&self, a: &Int) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Int, b: &Int) -> Int {
        a + b
    }
    fn sub(&self, a: &Int, b: &Int) -> Int {
        a - b
    }
    fn mul(&self, a: &Int, b: &Int) -> Int {
        a * b
    }
    fn neg(&self, a: &Int) -> Int {
        -a
    }
    fn unit_inverse(&self, a: &Int) -> Option<Int> {
        if a.is_unit() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn is_unit(&self, a: &Int) -> bool {
        a.is_unit()
    }
    fn div_rem(&self, a: &Int, b: &Int) -> (Int, Int) {
        // Round to nearest so the remainder is as small as possible.
        let (mut q, mut r) = a.div_rem_euclid(b);
        let two_r = &r + &r;
        if two_r > b.abs() {
            r = &r - &b.abs();
            q = if b.is_negative() {
                &q - &Int::ONE
            } else {
                &q + &Int::ONE
            };
        }
        (q, r)
    }
    fn norm_cmp(&self, a: &Int, b: &Int) -> Ordering {
        a.abs().cmp(&b.abs())
    }
    fn torsion_order(&self, a: &Int) -> Option<Int> {
        if a.is_zero() || a.is_unit() {
            None
        } else {
            Some(a.abs())
        }
    }
    fn to_rat(&self, a: &Int) -> Rat {
        Rat::from_int(a.clone())
    }
    fn exact_div(&self, a: &Int, b: &Int) -> Option<Int> {
        a.checked_exact_div(b)
    }
}

impl CoefficientRing for Rationals {
    type Elem = Rat;

    fn ring(&self) -> Ring {
        Ring::Rationals
    }
    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn from_int(&self, v: &Int) -> Rat {
        Rat::from_int(v.clone())
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.add(b)
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.sub(b)
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.mul(b)
    }
    fn neg(&self, a: &Rat) -> Rat {
        a.neg()
    }
    fn unit_inverse(&self, a: &Rat) -> Option<Rat> {
        a.inv()
    }
    fn is_unit(&self, a: &Rat) -> bool {
        !a.is_zero()
    }
    fn div_rem(&self, a: &Rat, b: &Rat) -> (Rat, Rat) {
        (a.div(b).expect("nonzero divisor"), Rat::zero())
    }
    fn norm_cmp(&self, _: &Rat, _: &Rat) -> Ordering {
        Ordering::Equal
    }
    fn torsion_order(&self, _: &Rat) -> Option<Int> {
        None
    }
    fn to_rat(&self, a: &Rat) -> Rat {
        a.clone()
    }
}

impl CoefficientRing for PrimeField {
    type Elem = Fp;

    fn ring(&self) -> Ring {
        Ring::PrimeField(self.p)
    }
    fn zero(&self) -> Fp {
        Fp(0)
    }
    fn one(&self) -> Fp {
        Fp(1)
    }
    fn from_int(&self, v: &Int) -> Fp {
        let m = Int::from(self.p);
        let (_, r) = v.div_rem_euclid(&m);
        Fp(r.to_u64().expect("residue fits"))
    }
    fn from_i64(&self, v: i64) -> Fp {
        Fp(v.rem_euclid(self.p as i64) as u64)
    }
    fn is_zero(&self, a: &Fp) -> bool {
        a.0 == 0
    }
    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        Fp((a.0 + b.0) % self.p)
    }
    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        Fp((a.0 + self.p - b.0) % self.p)
    }
    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        Fp(a.0 * b.0 % self.p)
    }
    fn neg(&self, a: &Fp) -> Fp {
        Fp((self.p - a.0) % self.p)
    }
    fn unit_inverse(&self, a: &Fp) -> Option<Fp> {
        if a.0 == 0 {
            None
        } else {
            Some(Fp(self.pow(a.0, self.p - 2)))
        }
    }
    fn is_unit(&self, a: &Fp) -> bool {
        a.0 != 0
    }
    fn div_rem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        let inv = self.unit_inverse(b).expect("nonzero divisor");
        (self.mul(a, &inv), Fp(0))
    }
    fn norm_cmp(&self, _: &Fp, _: &Fp) -> Ordering {
        Ordering::Equal
    }
    fn torsion_order(&self, _: &Fp) -> Option<Int> {
        None
    }
    fn to_rat(&self, a: &Fp) -> Rat {
        Rat::from_int(Int::from(a.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(97).is_ok());
        assert_eq!(PrimeField::new(91), Err(Error::NotPrime(91)));
        assert!(Ring::prime_field(1).is_err());
    }

    #[test]
    fn field_inverse() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let x = Fp(a);
            assert_eq!(f.mul(&x, &f.unit_inverse(&x).unwrap()), Fp(1));
        }
        assert_eq!(f.from_i64(-1), Fp(6));
    }

    #[test]
    fn integer_division_rounds_to_nearest() {
        let z = Integers;
        let (q, r) = z.div_rem(&Int::from(7), &Int::from(4));
        assert_eq!((q, r), (Int::from(2), Int::from(-1)));
        let (q, r) = z.div_rem(&Int::from(-7), &Int::from(-4));
        assert_eq!(&(&q * &Int::from(-4)) + &r, Int::from(-7));
        assert!(r.abs() <= Int::from(2));
    }
}
