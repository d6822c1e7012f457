//! q-combinatorics: q-integers, q-factorials, q-Pochhammer symbols, and
//! Gaussian binomials/multinomials at an arbitrary base q^e.
//!
//! The base exponent e is an explicit parameter throughout: the binomial
//! theorem on the quantum plane wants base q^-1 while the corepresentation
//! normalization wants base q^-2, and both reduce to the same Pochhammer
//! quotients. All quotients here are exact; `divexact` failing would mean
//! a wrong formula, so it is treated as unreachable.

use std::fmt;

use crate::error::{Error, Result};
use crate::qscalar::LaurentPoly;

/// An exponent tuple (i_1, ..., i_N) of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    parts: Vec<u32>,
}

impl MultiIndex {
    /// Build from parts; the tuple must have at least one slot.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidMultiIndex("multi-index has no parts".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of slots N.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total degree k = i_1 + ... + i_N.
    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Same multiset of parts, sorted descending (multinomial canonical form).
    pub fn sorted_desc(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All multi-indices with n slots and total degree k, in descending
/// lexicographic order: (k,0,...,0) first, (0,...,0,k) last.
pub fn enumerate_desc_lex(n: usize, k: u32) -> Vec<MultiIndex> {
    fn rec(slots: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if slots == 1 {
            prefix.push(k);
            out.push(MultiIndex { parts: prefix.clone() });
            prefix.pop();
            return;
        }
        for first in (0..=k).rev() {
            prefix.push(first);
            rec(slots - 1, k - first, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "need at least one slot");
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// The q-integer [a] = (q^a - q^-a)/(q - q^-1) = q^{a-1} + q^{a-3} + ... + q^{1-a}.
pub fn q_integer(a: i64) -> LaurentPoly {
    let s = a.abs();
    let mut p = LaurentPoly::from_terms((0..s).map(|j| (s - 1 - 2 * j, num::BigRational::from_integer(1.into()))));
    if a < 0 {
        p = -p;
    }
    p
}

/// [m]! = [m][m-1]...[1]; the empty product is 1.
pub fn q_factorial(m: u32) -> LaurentPoly {
    (1..=i64::from(m)).fold(LaurentPoly::one(), |acc, j| &acc * &q_integer(j))
}

/// (q^{a_exp}; q^e)_n = prod_{j=0}^{n-1} (1 - q^{a_exp + e*j}).
pub fn q_pochhammer(a_exp: i64, e: i64, n: u32) -> LaurentPoly {
    (0..i64::from(n)).fold(LaurentPoly::one(), |acc, j| {
        &acc * &(&LaurentPoly::one() - &LaurentPoly::q_pow(a_exp + e * j))
    })
}

/// Gaussian binomial [m n] at base q^e, as the exact Pochhammer quotient
/// (b;b)_m / ((b;b)_n (b;b)_{m-n}) with b = q^e. Base q^0 degenerates to
/// the ordinary binomial (the limit value).
pub fn gauss_binomial(m: i64, n: i64, e: i64) -> Result<LaurentPoly> {
    if n < 0 || n > m {
        return Err(Error::InvalidArgs(format!(
            "gauss_binomial requires 0 <= n <= m, got m={m}, n={n}"
        )));
    }
    if e == 0 {
        return Ok(LaurentPoly::from_int(num::integer::binomial(m, n)));
    }
    let top = q_pochhammer(e, e, m as u32);
    let bot = &q_pochhammer(e, e, n as u32) * &q_pochhammer(e, e, (m - n) as u32);
    Ok(top.divexact(&bot).expect("Gaussian binomial quotient is exact"))
}

/// q-multinomial [k; (m_1,...,m_N)] at base q^e: (b;b)_k / prod_i (b;b)_{m_i}.
pub fn q_multinomial(k: u32, parts: &MultiIndex, e: i64) -> Result<LaurentPoly> {
    if parts.degree() != k {
        return Err(Error::InvalidArgs(format!(
            "q_multinomial parts {parts} sum to {}, expected {k}",
            parts.degree()
        )));
    }
    if e == 0 {
        let mut v: i64 = 1;
        let mut rem = i64::from(k);
        for &p in parts.parts() {
            v *= num::integer::binomial(rem, i64::from(p));
            rem -= i64::from(p);
        }
        return Ok(LaurentPoly::from_int(v));
    }
    let top = q_pochhammer(e, e, k);
    let bot = parts
        .parts()
        .iter()
        .fold(LaurentPoly::one(), |acc, &p| &acc * &q_pochhammer(e, e, p));
    Ok(top.divexact(&bot).expect("q-multinomial quotient is exact"))
}
