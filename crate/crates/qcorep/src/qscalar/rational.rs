//! The field Q(q) as reduced fractions of Laurent polynomials.
//!
//! Canonical form: numerator and denominator share no polynomial factor,
//! the denominator has lowest exponent 0 and leading coefficient 1, and a
//! zero numerator forces denominator 1. Equality of canonical forms is
//! then structural equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::qscalar::laurent::LaurentPoly;

/// An element num/den of Q(q), always held in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct RationalScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalScalar {
    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self { num, den: LaurentPoly::one() }
    }

    /// Build num/den, reducing to canonical form. Fails on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("({num}) / 0")));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.divexact(&g).expect("gcd divides numerator");
        let mut den = den.divexact(&g).expect("gcd divides denominator");
        // normalize the denominator to lowest exponent 0, leading coeff 1
        let shift = den.min_exp().expect("nonzero denominator");
        let lead = den.coeff(den.max_exp().expect("nonzero denominator"));
        den = den.shift(-shift).scale(&lead.recip());
        num = num.shift(-shift).scale(&lead.recip());
        Ok(Self { num, den })
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(p) when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.as_laurent().and_then(LaurentPoly::as_constant)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator unchanged")
    }

    pub fn eval_f64(&self, q0: f64) -> f64 {
        self.num.eval_f64(q0) / self.den.eval_f64(q0)
    }
}

impl Add for &RationalScalar {
    type Output = RationalScalar;
    fn add(self, rhs: &RationalScalar) -> RationalScalar {
        RationalScalar::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators is nonzero")
    }
}

impl Sub for &RationalScalar {
    type Output = RationalScalar;
    fn sub(self, rhs: &RationalScalar) -> RationalScalar {
        self + &-rhs
    }
}

impl Mul for &RationalScalar {
    type Output = RationalScalar;
    fn mul(self, rhs: &RationalScalar) -> RationalScalar {
        RationalScalar::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators is nonzero")
    }
}

impl Neg for &RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        RationalScalar { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned_binop {
    ($($t:ident :: $f:ident, $assign:ident :: $af:ident;)*) => {$(
        impl $t for RationalScalar {
            type Output = RationalScalar;
            fn $f(self, rhs: RationalScalar) -> RationalScalar { (&self).$f(&rhs) }
        }
        impl $assign<&RationalScalar> for RationalScalar {
            fn $af(&mut self, rhs: &RationalScalar) { *self = (&*self).$f(rhs); }
        }
    )*};
}
forward_owned_binop! {
    Add::add, AddAssign::add_assign;
    Sub::sub, SubAssign::sub_assign;
    Mul::mul, MulAssign::mul_assign;
}

impl Neg for RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        -&self
    }
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
