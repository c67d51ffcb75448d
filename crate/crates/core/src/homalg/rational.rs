//! Exact rationals over [`Int`], always kept in lowest terms with a positive
//! denominator.

use core::fmt;

use super::int::Int;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat {
    num: Int,
    den: Int,
}

impl Rat {
    pub fn zero() -> Rat {
        Rat {
            num: Int::ZERO,
            den: Int::ONE,
        }
    }

    pub fn one() -> Rat {
        Rat {
            num: Int::ONE,
            den: Int::ONE,
        }
    }

    pub fn from_int(v: Int) -> Rat {
        Rat {
            num: v,
            den: Int::ONE,
        }
    }

    /// `num / den`; panics if `den` is zero.
    pub fn new(num: Int, den: Int) -> Rat {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = Rat { num, den };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.den.is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
        if self.den.is_one() {
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.checked_exact_div(&g).expect("gcd divides");
            self.den = self.den.checked_exact_div(&g).expect("gcd divides");
        }
        if self.num.is_zero() {
            self.den = Int::ONE;
        }
    }

    pub fn numer(&self) -> &Int {
        &self.num
    }

    pub fn denom(&self) -> &Int {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &Rat) -> Rat {
        if self.den == o.den {
            return Rat::new(&self.num + &o.num, self.den.clone());
        }
        Rat::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn neg(&self) -> Rat {
        Rat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        if self.is_integer() && o.is_integer() {
            return Rat::from_int(&self.num * &o.num);
        }
        Rat::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn inv(&self) -> Option<Rat> {
        if self.num.is_zero() {
            None
        } else {
            Some(Rat::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, o: &Rat) -> Option<Rat> {
        o.inv().map(|i| self.mul(&i))
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(Int::from(v))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(a: i64, b: i64) -> Rat {
        Rat::new(Int::from(a), Int::from(b))
    }

    #[test]
    fn lowest_terms() {
        assert_eq!(q(2, -4), q(-1, 2));
        assert_eq!(q(0, -7), Rat::zero());
        assert_eq!(q(1, 2).add(&q(1, 3)), q(5, 6));
        assert_eq!(q(2, 3).mul(&q(3, 2)), Rat::one());
        assert_eq!(q(1, 2).div(&q(0, 1)), None);
        assert_eq!(q(-3, 4).to_string(), "-3/4");
    }
}
