//! Scalars of the form (rational function in q) x (product of square
//! roots of q-multinomial values).
//!
//! The renormalized corepresentation basis divides each quantum-plane
//! monomial by the square root of a q-multinomial, so matrix entries carry
//! prefactors like (1+q^-2)^{1/2} that live outside Q(q). They are kept
//! symbolic: a radical is a [`RadicalSymbol`] naming the multinomial, and
//! canonicalization guarantees that equal values get equal representations:
//!
//! * permuted multi-indices share one symbol (parts sorted, zeros dropped);
//! * symbols with at most one nonzero part have value 1 and are dropped;
//! * even powers of a square root are folded into the rational part, and
//!   odd powers are reduced to exponent +1 by folding the integer part, so
//!   sqrt(v)^-1 is stored as v^-1 * sqrt(v);
//! * a zero rational part clears all radicals.
//!
//! After that, structural equality is value equality, and sums only ever
//! need to combine scalars whose radical sets already agree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use crate::error::{Error, Result};
use crate::qcomb::{q_multinomial, MultiIndex};
use crate::qscalar::laurent::LaurentPoly;
use crate::qscalar::rational::RationalScalar;

/// The name of a q-multinomial [k; parts] at base q^{base_exponent},
/// canonicalized so equal values share one symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalSymbol {
    k: u32,
    parts: MultiIndex,
    base_exponent: i64,
}

impl RadicalSymbol {
    /// Canonical symbol for [k; parts] at base q^e. Parts are sorted
    /// descending and zero parts dropped (neither changes the value).
    pub fn new(k: u32, parts: &MultiIndex, base_exponent: i64) -> Result<Self> {
        if parts.degree() != k {
            return Err(Error::InvalidArgs(format!(
                "radical symbol parts {parts} sum to {}, expected {k}",
                parts.degree()
            )));
        }
        let mut kept: Vec<u32> = parts.parts().iter().copied().filter(|&p| p > 0).collect();
        kept.sort_unstable_by(|a, b| b.cmp(a));
        if kept.is_empty() {
            kept.push(0);
        }
        Ok(Self {
            k,
            parts: MultiIndex::new(kept).expect("nonempty by construction"),
            base_exponent,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn parts(&self) -> &MultiIndex {
        &self.parts
    }

    pub fn base_exponent(&self) -> i64 {
        self.base_exponent
    }

    /// The multinomial itself, as an exact Laurent polynomial.
    pub fn value(&self) -> LaurentPoly {
        q_multinomial(self.k, &self.parts, self.base_exponent)
            .expect("canonical symbol has matching degree")
    }

    /// True when the value is 1 (at most one nonzero part).
    pub fn is_trivial(&self) -> bool {
        self.parts.parts().iter().filter(|&&p| p > 0).count() <= 1
    }
}

impl fmt::Display for RadicalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]_(q^{})", self.k, self.parts, self.base_exponent)
    }
}

/// An exact scalar: rational part times prod_S sqrt(value(S))^t where the
/// map stores twice the half-integer exponent t/2. In canonical form every
/// stored exponent is +1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Scalar {
    rational: RationalScalar,
    radicals: BTreeMap<RadicalSymbol, i64>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(RationalScalar::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(RationalScalar::from_int(c))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_rational(RationalScalar::q_pow(e))
    }

    pub fn from_rational(rational: RationalScalar) -> Self {
        Self { rational, radicals: BTreeMap::new() }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self::from_rational(RationalScalar::from_laurent(p))
    }

    /// sqrt of the named multinomial value.
    pub fn sqrt_symbol(symbol: RadicalSymbol) -> Self {
        Self::with_radicals(RationalScalar::one(), [(symbol, 1)].into())
    }

    /// Build and canonicalize.
    pub fn with_radicals(rational: RationalScalar, radicals: BTreeMap<RadicalSymbol, i64>) -> Self {
        let mut s = Self { rational, radicals };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.rational.is_zero() {
            self.radicals.clear();
            return;
        }
        let old = std::mem::take(&mut self.radicals);
        for (sym, t) in old {
            if t == 0 || sym.is_trivial() {
                continue;
            }
            // fold the integer part of the exponent into the rational:
            // sqrt(v)^t = v^(t/2) for even t, v^((t-1)/2) * sqrt(v) for odd t
            let whole = if t % 2 == 0 { t / 2 } else { (t - 1) / 2 };
            if whole != 0 {
                let v = RationalScalar::from_laurent(sym.value());
                self.rational = &self.rational
                    * &v.pow(whole).expect("multinomial values are nonzero");
            }
            if t % 2 != 0 {
                self.radicals.insert(sym, 1);
            }
        }
    }

    pub fn rational(&self) -> &RationalScalar {
        &self.rational
    }

    pub fn radicals(&self) -> &BTreeMap<RadicalSymbol, i64> {
        &self.radicals
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rational.is_one() && self.radicals.is_empty()
    }

    /// True when the scalar lies in Q(q) (no radical factors).
    pub fn is_rational(&self) -> bool {
        self.radicals.is_empty()
    }

    /// Sum, defined only when the radical parts agree (each matrix entry
    /// carries a single radical prefactor, so mixed sums never arise).
    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.radicals != rhs.radicals {
            return Err(Error::RadicalMismatch);
        }
        Ok(Self::with_radicals(
            &self.rational + &rhs.rational,
            self.radicals.clone(),
        ))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&-rhs)
    }

    pub fn inv(&self) -> Result<Self> {
        let mut radicals = self.radicals.clone();
        for t in radicals.values_mut() {
            *t = -*t;
        }
        Ok(Self::with_radicals(self.rational.inv()?, radicals))
    }

    pub fn eval_f64(&self, q0: f64) -> f64 {
        let mut v = self.rational.eval_f64(q0);
        for (sym, t) in &self.radicals {
            v *= sym.value().eval_f64(q0).powf(*t as f64 / 2.0);
        }
        v
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut radicals = self.radicals.clone();
        for (sym, t) in &rhs.radicals {
            *radicals.entry(sym.clone()).or_insert(0) += t;
        }
        Scalar::with_radicals(&self.rational * &rhs.rational, radicals)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            rational: -&self.rational,
            radicals: self.radicals.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicals.is_empty() {
            return write!(f, "{}", self.rational);
        }
        if !self.rational.is_one() {
            write!(f, "{}*", self.rational)?;
        }
        for (i, (sym, t)) in self.radicals.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            match t {
                1 => write!(f, "sqrt({sym})")?,
                t => write!(f, "sqrt({sym})^{t}")?,
            }
        }
        Ok(())
    }
}
