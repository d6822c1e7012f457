//! The quantum matrix algebra on generators u_ij.
//!
//! Elements are kept in a PBW-style normal form: generators ordered
//! row-major lexicographically on (i,j), reached by the confluent rewriting
//! system in [`rewrite`]. The coproduct, counit, and tensor-square/cube
//! arithmetic needed for the coalgebra checks live in [`tensor`].

pub mod rewrite;
pub mod tensor;

pub use rewrite::{confluence_suite, normal_form, normal_form_seeded, reorder_pair};
pub use tensor::{coproduct, TensorPoly2, TensorPoly3};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qscalar::Scalar;

/// One generator u_ij, 1-based. The derived order is the normal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(i: u8, j: u8) -> Self {
        assert!(i >= 1 && j >= 1, "generator indices are 1-based");
        Self { i, j }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "u{}{}", self.i, self.j)
        } else {
            write!(f, "u[{},{}]", self.i, self.j)
        }
    }
}

/// A normal-ordered word: generators strictly increasing, exponents >= 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NCMonomial {
    factors: Vec<(Gen, u32)>,
}

impl NCMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_gen(g: Gen) -> Self {
        Self { factors: vec![(g, 1)] }
    }

    /// Run-length encode an already sorted word.
    pub fn from_sorted_word(word: &[Gen]) -> Self {
        let mut factors: Vec<(Gen, u32)> = Vec::new();
        for &g in word {
            match factors.last_mut() {
                Some((last, e)) if *last == g => *e += 1,
                Some((last, _)) => {
                    debug_assert!(*last < g, "word not sorted");
                    factors.push((g, 1));
                }
                None => factors.push((g, 1)),
            }
        }
        Self { factors }
    }

    pub fn factors(&self) -> &[(Gen, u32)] {
        &self.factors
    }

    /// The word with exponents expanded.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for &(g, e) in &self.factors {
            for _ in 0..e {
                w.push(g);
            }
        }
        w
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// epsilon(u_ij) = delta_ij extended multiplicatively: 1 on all-diagonal
    /// words, 0 otherwise.
    pub fn counit_is_one(&self) -> bool {
        self.factors.iter().all(|&(g, _)| g.i == g.j)
    }
}

impl fmt::Display for NCMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, &(g, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A normal-ordered polynomial over the N x N quantum matrix algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    n: u8,
    terms: BTreeMap<NCMonomial, Scalar>,
}

impl NCPoly {
    pub fn zero(n: u8) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u8) -> Self {
        Self::monomial(n, NCMonomial::one(), Scalar::one())
    }

    pub fn gen(n: u8, i: u8, j: u8) -> Self {
        assert!(i <= n && j <= n, "u{i}{j} does not exist for N={n}");
        Self::monomial(n, NCMonomial::from_gen(Gen::new(i, j)), Scalar::one())
    }

    pub fn monomial(n: u8, mono: NCMonomial, coeff: Scalar) -> Self {
        let mut p = Self::zero(n);
        p.add_term(mono, coeff).expect("single term cannot mismatch");
        p
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&NCMonomial::one())
                .is_some_and(Scalar::is_one)
    }

    /// Accumulate coeff on mono; fails only if radical parts collide.
    pub fn add_term(&mut self, mono: NCMonomial, coeff: Scalar) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().try_add(&coeff)?;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    fn check_n(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_n(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&-rhs)
    }

    /// Bilinear product: concatenate words, renormalize, collect.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_n(rhs)?;
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut word = ma.word();
                word.extend(mb.word());
                let nf = rewrite::normal_form(&word, self.n);
                let c = ca * cb;
                for (m, k) in nf.terms {
                    out.add_term(m, &c * &k)?;
                }
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// epsilon extended as an algebra morphism: substitute the identity
    /// matrix for the generators and sum the surviving coefficients.
    pub fn counit(&self) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            if m.counit_is_one() {
                acc = acc.try_add(c)?;
            }
        }
        Ok(acc)
    }

    /// Numeric evaluation with commuting generator values (used for the
    /// q -> 1 classical-limit checks only; never in verification paths).
    pub fn eval_f64(&self, q0: f64, gen_value: &dyn Fn(u8, u8) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono: f64 = m
                    .factors
                    .iter()
                    .map(|&(g, e)| gen_value(g.i, g.j).powi(e as i32))
                    .product();
                c.eval_f64(q0) * mono
            })
            .sum()
    }

    /// Largest word length among the terms.
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(NCMonomial::degree).max().unwrap_or(0)
    }
}

impl std::ops::Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let rendered = if c.is_one() && !m.is_identity() {
                m.to_string()
            } else if m.is_identity() {
                c.to_string()
            } else {
                format!("{c}*{m}")
            };
            if idx == 0 {
                write!(f, "{rendered}")?;
            } else if let Some(tail) = rendered.strip_prefix('-') {
                write!(f, " - {tail}")?;
            } else {
                write!(f, " + {rendered}")?;
            }
        }
        Ok(())
    }
}
