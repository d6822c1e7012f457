//! The quantum plane O(C^N_q), its coactions, and the unnormalized
//! coaction matrices M^R and M^L.
//!
//! Plane relations: x_i x_j = q x_j x_i for i < j, so monomials are stored
//! with variable indices increasing and each swap during collection
//! contributes q^-1.
//!
//! Coactions (the N=2 formulas of the source, with the summation bound
//! generalized to N):
//!
//!   phi_R(x_i) = sum_j x_j (x) u_{j,i}      (plane leg first)
//!   phi_L(x_i) = sum_j u_{i,j} (x) x_j      (algebra leg first)
//!
//! extended multiplicatively. Mixed products collect leg by leg:
//! (x_a (x) u)(x_b (x) v) = x_a x_b (x) u v with each leg independently
//! normal-ordered; the q^-2 cross-term weight the source remarks on is a
//! consequence, and is asserted as a test rather than assumed.
//!
//! Matrix convention: entries m_rs are defined by phi(x^s) = sum_r x^r (x)
//! m_rs, so the COLUMN index is the source monomial. The source's
//! row-vector display of the right matrix coincides with this layout; its
//! left display is the transpose.

use std::collections::BTreeMap;
use std::fmt;

use num::integer::binomial;

use crate::error::{Error, Result};
use crate::ncalg::{normal_form, Gen, NCMonomial, NCPoly};
use crate::qcomb::{enumerate_desc_lex, gauss_binomial, MultiIndex};
use crate::qscalar::Scalar;

/// A plane monomial x^a = x_1^{a_1} ... x_N^{a_N}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PlaneMono {
    exponents: MultiIndex,
}

impl PlaneMono {
    pub fn new(exponents: MultiIndex) -> Self {
        Self { exponents }
    }

    /// The constant monomial 1 in N variables.
    pub fn one(n: u8) -> Self {
        Self::new(MultiIndex::new(vec![0; n as usize]).expect("n >= 1"))
    }

    /// x_i in N variables (1-based).
    pub fn var(i: u8, n: u8) -> Self {
        assert!(i >= 1 && i <= n, "x{i} does not exist for N={n}");
        let mut parts = vec![0; n as usize];
        parts[i as usize - 1] = 1;
        Self::new(MultiIndex::new(parts).expect("n >= 1"))
    }

    pub fn exponents(&self) -> &MultiIndex {
        &self.exponents
    }

    pub fn n(&self) -> u8 {
        self.exponents.len() as u8
    }

    pub fn degree(&self) -> u32 {
        self.exponents.degree()
    }

    /// Normal-ordered product: x^a x^b = q^{-e} x^{a+b} with
    /// e = sum_{i<j} a_j b_i (one q^-1 per out-of-order variable pair).
    pub fn mul(&self, rhs: &Self) -> (Self, i64) {
        assert_eq!(self.n(), rhs.n(), "planes of different dimension");
        let a = self.exponents.parts();
        let b = rhs.exponents.parts();
        let mut e: i64 = 0;
        for (j, &aj) in a.iter().enumerate().skip(1) {
            for &bi in &b[..j] {
                e += i64::from(aj) * i64::from(bi);
            }
        }
        let sum: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| x + y).collect();
        (
            Self::new(MultiIndex::new(sum).expect("same length")),
            -e,
        )
    }
}

impl fmt::Display for PlaneMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (idx, &e) in self.exponents.parts().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", idx + 1)?;
            } else {
                write!(f, "x{}^{e}", idx + 1)?;
            }
        }
        Ok(())
    }
}

/// A polynomial on the quantum plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePoly {
    n: u8,
    terms: BTreeMap<PlaneMono, Scalar>,
}

impl PlanePoly {
    pub fn zero(n: u8) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u8) -> Self {
        Self::monomial(PlaneMono::one(n), Scalar::one())
    }

    pub fn var(i: u8, n: u8) -> Self {
        Self::monomial(PlaneMono::var(i, n), Scalar::one())
    }

    pub fn monomial(mono: PlaneMono, coeff: Scalar) -> Self {
        let mut p = Self::zero(mono.n());
        p.add_term(mono, coeff).expect("single term");
        p
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlaneMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: PlaneMono, coeff: Scalar) -> Result<()> {
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

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (m, e) = ma.mul(mb);
                out.add_term(m, &(ca * cb) * &Scalar::q_pow(e))?;
            }
        }
        Ok(out)
    }
}

/// Which leg carries the plane in a mixed tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// plane (x) algebra, the phi_R image.
    PlaneAlgebra,
    /// algebra (x) plane, the phi_L image.
    AlgebraPlane,
}

/// An element of O(C^N_q) (x) A (or A (x) O(C^N_q)), each leg normal-ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedPoly {
    n: u8,
    orientation: Orientation,
    terms: BTreeMap<(PlaneMono, NCMonomial), Scalar>,
}

impl MixedPoly {
    pub fn one(n: u8, orientation: Orientation) -> Self {
        let mut p = Self { n, orientation, terms: BTreeMap::new() };
        p.add_term(PlaneMono::one(n), NCMonomial::one(), Scalar::one())
            .expect("fresh term");
        p
    }

    pub fn zero(n: u8, orientation: Orientation) -> Self {
        Self { n, orientation, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PlaneMono, NCMonomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, plane: PlaneMono, alg: NCMonomial, coeff: Scalar) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry((plane, alg)) {
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

    /// (p (x) u)(p' (x) u') = p p' (x) u u', legs collected independently.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        assert_eq!(self.orientation, rhs.orientation, "mixed orientations");
        let mut out = Self::zero(self.n, self.orientation);
        for ((pa, ua), ca) in &self.terms {
            for ((pb, ub), cb) in &rhs.terms {
                let (pm, e) = pa.mul(pb);
                let mut word = ua.word();
                word.extend(ub.word());
                let nf = normal_form(&word, self.n);
                let c = &(ca * cb) * &Scalar::q_pow(e);
                for (um, uc) in nf.terms() {
                    out.add_term(pm.clone(), um.clone(), &c * uc)?;
                }
            }
        }
        Ok(out)
    }
}

/// phi_R(x_i) for one variable.
fn coact_right_var(i: u8, n: u8) -> MixedPoly {
    let mut out = MixedPoly::zero(n, Orientation::PlaneAlgebra);
    for j in 1..=n {
        out.add_term(
            PlaneMono::var(j, n),
            NCMonomial::from_gen(Gen::new(j, i)),
            Scalar::one(),
        )
        .expect("distinct terms");
    }
    out
}

/// phi_L(x_i) for one variable.
fn coact_left_var(i: u8, n: u8) -> MixedPoly {
    let mut out = MixedPoly::zero(n, Orientation::AlgebraPlane);
    for j in 1..=n {
        out.add_term(
            PlaneMono::var(j, n),
            NCMonomial::from_gen(Gen::new(i, j)),
            Scalar::one(),
        )
        .expect("distinct terms");
    }
    out
}

/// phi_R extended multiplicatively to the monomial x^m.
pub fn coact_right(m: &PlaneMono, n: u8) -> Result<MixedPoly> {
    let mut acc = MixedPoly::one(n, Orientation::PlaneAlgebra);
    for (idx, &e) in m.exponents().parts().iter().enumerate() {
        for _ in 0..e {
            acc = acc.try_mul(&coact_right_var(idx as u8 + 1, n))?;
        }
    }
    Ok(acc)
}

/// phi_L extended multiplicatively to the monomial x^m.
pub fn coact_left(m: &PlaneMono, n: u8) -> Result<MixedPoly> {
    let mut acc = MixedPoly::one(n, Orientation::AlgebraPlane);
    for (idx, &e) in m.exponents().parts().iter().enumerate() {
        for _ in 0..e {
            acc = acc.try_mul(&coact_left_var(idx as u8 + 1, n))?;
        }
    }
    Ok(acc)
}

/// The raw coaction matrix over the degree-k monomial basis, before any
/// renormalization. Row index = target monomial, column index = source,
/// both in descending lexicographic order of the multi-indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnnormalizedMatrix {
    n: u8,
    k: u32,
    basis: Vec<MultiIndex>,
    entries: Vec<Vec<NCPoly>>,
}

impl UnnormalizedMatrix {
    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// C(N+k-1, k), the number of degree-k monomials.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MultiIndex] {
        &self.basis
    }

    pub fn entry(&self, r: usize, s: usize) -> &NCPoly {
        &self.entries[r][s]
    }
}

/// Number of degree-k monomials in N variables.
pub fn plane_dim(n: u8, k: u32) -> usize {
    binomial(u64::from(n) + u64::from(k) - 1, u64::from(k)) as usize
}

/// Two-variable q-binomial theorem: the coefficient of x1^j x2^(m-j) in
/// (x1 + x2)^m is the Gaussian binomial [m j] at base q^-1, for all
/// m <= max_degree.
pub fn verify_q_binomial_theorem(max_degree: u32) -> Result<bool> {
    let sum = PlanePoly::var(1, 2).try_add(&PlanePoly::var(2, 2))?;
    let mut power = PlanePoly::one(2);
    for m in 0..=max_degree {
        if m > 0 {
            power = power.try_mul(&sum)?;
        }
        for j in 0..=m {
            let mono = PlaneMono::new(MultiIndex::new(vec![j, m - j])?);
            let got = power
                .terms()
                .find(|(pm, _)| **pm == mono)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(Scalar::zero);
            let expected =
                Scalar::from_laurent(gauss_binomial(i64::from(m), i64::from(j), -1)?);
            if got != expected {
                return Ok(false);
            }
        }
        if power.terms().count() != (m + 1) as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

/// M^R with phi_R(x^s) = sum_r x^r (x) m^R_rs.
pub fn matrix_right(n: u8, k: u32) -> Result<UnnormalizedMatrix> {
    coaction_matrix(n, k, true)
}

/// M^L with phi_L(x^s) = sum_r m^L_rs (x) x^r.
pub fn matrix_left(n: u8, k: u32) -> Result<UnnormalizedMatrix> {
    coaction_matrix(n, k, false)
}

fn coaction_matrix(n: u8, k: u32, right: bool) -> Result<UnnormalizedMatrix> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidArgs(format!(
            "coaction matrices need N >= 2 and k >= 1, got N={n}, k={k}"
        )));
    }
    let basis = enumerate_desc_lex(n as usize, k);
    let rank: BTreeMap<&MultiIndex, usize> =
        basis.iter().enumerate().map(|(r, m)| (m, r)).collect();
    let dim = basis.len();
    let mut entries = vec![vec![NCPoly::zero(n); dim]; dim];
    for (s, src) in basis.iter().enumerate() {
        let mono = PlaneMono::new(src.clone());
        let image = if right { coact_right(&mono, n)? } else { coact_left(&mono, n)? };
        for ((plane, alg), c) in image.terms() {
            let r = *rank
                .get(plane.exponents())
                .expect("coaction preserves degree");
            entries[r][s].add_term(alg.clone(), c.clone())?;
        }
    }
    Ok(UnnormalizedMatrix { n, k, basis, entries })
}
