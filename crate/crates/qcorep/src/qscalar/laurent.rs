//! Laurent polynomials in q with exact rational coefficients.
//!
//! The deformation parameter q is kept as a formal variable: every identity
//! the engine verifies holds identically in q, so exact coefficient
//! arithmetic over the rationals decides it. Only nonzero coefficients are
//! stored (`BTreeMap<i64, BigRational>`), and no key ever maps to zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial sum_e c_e q^e with c_e in Q, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

/// Shorthand for an exact rational from an integer pair.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), 0)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// The monomial q^e.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// The monomial c * q^e.
    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Build from (exponent, coefficient) pairs, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Some(c) when the polynomial is the constant c (including 0).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    /// Multiply by q^e.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient: returns c with `d * c == self`, or `NotDivisible`.
    pub fn divexact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero("divexact by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = d.to_dense();
        let (q, r) = dense_divmod(&a, &b);
        if !r.iter().all(Zero::is_zero) {
            return Err(Error::NotDivisible(format!("({self}) / ({d})")));
        }
        Ok(Self::from_dense(sa - sb, q))
    }

    /// Monic gcd (normalized to lowest exponent 0) of two Laurent polynomials;
    /// powers of q are units and do not count as common factors.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return normalize_unit(other);
        }
        if other.is_zero() {
            return normalize_unit(self);
        }
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        let g = dense_gcd(a, b);
        Self::from_dense(0, g)
    }

    pub fn eval_f64(&self, q0: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * q0.powi(*e as i32))
            .sum()
    }

    fn to_dense(&self) -> (i64, Vec<BigRational>) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(0);
        let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(shift: i64, v: Vec<BigRational>) -> Self {
        Self::from_terms(
            v.into_iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c)),
        )
    }
}

/// Divide out the unit q^min and the leading coefficient.
fn normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let lc = p.coeff(p.max_exp().unwrap());
    p.shift(-p.min_exp().unwrap()).scale(&lc.recip())
}

/// Dense little-endian polynomial division with remainder.
fn dense_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.iter().rposition(|c| !c.is_zero()).expect("nonzero divisor");
    let mut rem = a.to_vec();
    if a.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); a.len() - db];
    let lead = b[db].clone();
    for i in (0..quot.len()).rev() {
        let top = rem[i + db].clone();
        if top.is_zero() {
            continue;
        }
        let f = top / &lead;
        for (j, bc) in b.iter().enumerate().take(db + 1) {
            let delta = &f * bc;
            rem[i + j] -= delta;
        }
        quot[i] = f;
    }
    (quot, rem)
}

fn dense_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, mut r) = dense_divmod(&a, &b);
        trim(&mut r);
        a = b;
        b = r;
    }
    // make monic
    if let Some(lc) = a.last().cloned() {
        for c in &mut a {
            *c /= &lc;
        }
    }
    a
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($t:ident :: $f:ident, $assign:ident :: $af:ident;)*) => {$(
        impl $t for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
        impl $assign<&LaurentPoly> for LaurentPoly {
            fn $af(&mut self, rhs: &LaurentPoly) { *self = (&*self).$f(rhs); }
        }
    )*};
}
forward_owned_binop! {
    Add::add, AddAssign::add_assign;
    Sub::sub, SubAssign::sub_assign;
    Mul::mul, MulAssign::mul_assign;
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest exponent first, like the displayed identities
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let coeff_is_one = a.is_one();
            match (*e, coeff_is_one) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{a}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q_pow(1)
    }
    fn qi(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn add_cancels() {
        // (q - q^-1) + q^-1 = q
        let a = &q() - &qi(-1);
        assert_eq!(&a + &qi(-1), q());
    }

    #[test]
    fn add_identity_and_doubling() {
        let p = &qi(2) + &LaurentPoly::from_int(3);
        assert_eq!(&p + &LaurentPoly::zero(), p);
        let b = &LaurentPoly::one() + &qi(-2); // 1 + q^-2
        let twice = &b + &b;
        assert_eq!(twice, b.scale(&rat(2, 1)));
    }

    #[test]
    fn mul_difference_of_squares() {
        // (q - q^-1)(q + q^-1) = q^2 - q^-2
        let a = &q() - &qi(-1);
        let b = &q() + &qi(-1);
        assert_eq!(&a * &b, &qi(2) - &qi(-2));
    }

    #[test]
    fn mul_one_and_shift() {
        let p = &q() - &qi(-3);
        assert_eq!(&p * &LaurentPoly::one(), p);
        // (1 + q^-2) * q^2 = q^2 + 1
        let b = &LaurentPoly::one() + &qi(-2);
        assert_eq!(&b * &qi(2), &qi(2) + &LaurentPoly::one());
    }

    // independent long-division oracle used to freeze divexact expectations
    fn long_division_oracle(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
        let mut rem = a.clone();
        let mut quot = LaurentPoly::zero();
        let (bl, bc) = (b.max_exp()?, b.coeff(b.max_exp()?));
        while !rem.is_zero() {
            let e = rem.max_exp().unwrap();
            let f = LaurentPoly::monomial(rem.coeff(e) / &bc, e - bl);
            quot += &f;
            rem -= &(&f * b);
            if rem.max_exp().is_some_and(|m| m >= e) {
                return None; // no progress; not divisible
            }
        }
        Some(quot)
    }

    #[test]
    fn divexact_q_integer_two() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let a = &qi(2) - &qi(-2);
        let b = &q() - &qi(-1);
        assert_eq!(a.divexact(&b).unwrap(), &q() + &qi(-1));
    }

    #[test]
    fn divexact_self() {
        let a = &(&qi(3) - &qi(-1)) + &LaurentPoly::from_int(7);
        assert_eq!(a.divexact(&a).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn divexact_matches_long_division_oracle() {
        // (1 - q^-4) / (1 - q^-2): the oracle fixes the expected value 1 + q^-2
        let a = &LaurentPoly::one() - &qi(-4);
        let b = &LaurentPoly::one() - &qi(-2);
        let expected = long_division_oracle(&a, &b).unwrap();
        assert_eq!(expected, &LaurentPoly::one() + &qi(-2));
        assert_eq!(a.divexact(&b).unwrap(), expected);
    }

    #[test]
    fn divexact_rejects_inexact() {
        let a = &q() + &LaurentPoly::one();
        let b = &q() - &LaurentPoly::one();
        assert!(matches!(a.divexact(&b), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn gcd_common_factor() {
        // gcd((1-q^-2)(1-q^-4), (1-q^-2)) has the (1-q^-2) factor up to units
        let b = &LaurentPoly::one() - &qi(-2);
        let a = &b * &(&LaurentPoly::one() - &qi(-4));
        let g = a.gcd(&b);
        assert!(b.divexact(&g).is_ok());
        assert!(a.divexact(&g).is_ok());
        assert_eq!(g.min_exp(), Some(0));
    }

    #[test]
    fn eval_at_one() {
        let p = &q() - &qi(-1);
        assert_eq!(p.eval_f64(1.0), 0.0);
        let b = &LaurentPoly::one() + &qi(-2);
        assert!((b.eval_f64(1.0) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn display_reads_high_to_low() {
        let p = LaurentPoly::from_terms([(2, rat(1, 1)), (0, rat(1, 1)), (-2, rat(1, 1))]);
        assert_eq!(p.to_string(), "q^2 + 1 + q^-2");
        let m = &q() - &qi(-1);
        assert_eq!(m.to_string(), "q - q^-1");
    }
}
