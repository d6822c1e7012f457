//! Tensor squares and cubes of the quantum matrix algebra, and the
//! coproduct, for the coalgebra axiom checks.
//!
//! Delta(u_ij) = sum_k u_ik (x) u_kj, extended as an algebra morphism.
//! Each tensor leg is independently normal-ordered, so structural equality
//! of the maps decides equality of tensors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ncalg::rewrite::normal_form;
use crate::ncalg::{Gen, NCMonomial, NCPoly};
use crate::qscalar::Scalar;

/// An element of A (x) A with both legs normal-ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly2 {
    n: u8,
    terms: BTreeMap<(NCMonomial, NCMonomial), Scalar>,
}

/// An element of A (x) A (x) A (for coassociativity only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly3 {
    n: u8,
    terms: BTreeMap<(NCMonomial, NCMonomial, NCMonomial), Scalar>,
}

impl TensorPoly2 {
    pub fn zero(n: u8) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u8) -> Self {
        let mut t = Self::zero(n);
        t.add_term((NCMonomial::one(), NCMonomial::one()), Scalar::one())
            .expect("fresh term");
        t
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(NCMonomial, NCMonomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (NCMonomial, NCMonomial), coeff: Scalar) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(key) {
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
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        let neg = Self {
            n: rhs.n,
            terms: rhs.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        };
        self.try_add(&neg)
    }

    pub fn scalar_mul(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// a (x) b for plain polynomials.
    pub fn outer(a: &NCPoly, b: &NCPoly) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
        }
        let mut out = Self::zero(a.n());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term((ma.clone(), mb.clone()), ca * cb)?;
            }
        }
        Ok(out)
    }

    /// Componentwise product (a(x)b)(c(x)d) = ac (x) bd.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        let mut out = Self::zero(self.n);
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &rhs.terms {
                let mut lw = la.word();
                lw.extend(lb.word());
                let mut rw = ra.word();
                rw.extend(rb.word());
                let lp = normal_form(&lw, self.n);
                let rp = normal_form(&rw, self.n);
                let c = ca * cb;
                for (ml, cl) in lp.terms() {
                    for (mr, cr) in rp.terms() {
                        out.add_term((ml.clone(), mr.clone()), &(&c * cl) * cr)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// (epsilon (x) id): collapse the left leg.
    pub fn counit_left(&self) -> Result<NCPoly> {
        let mut out = NCPoly::zero(self.n);
        for ((l, r), c) in &self.terms {
            if l.counit_is_one() {
                out.add_term(r.clone(), c.clone())?;
            }
        }
        Ok(out)
    }

    /// (id (x) epsilon): collapse the right leg.
    pub fn counit_right(&self) -> Result<NCPoly> {
        let mut out = NCPoly::zero(self.n);
        for ((l, r), c) in &self.terms {
            if r.counit_is_one() {
                out.add_term(l.clone(), c.clone())?;
            }
        }
        Ok(out)
    }

    /// (Delta (x) id): coproduct applied to the left leg.
    pub fn coproduct_left(&self) -> Result<TensorPoly3> {
        let mut out = TensorPoly3::zero(self.n);
        for ((l, r), c) in &self.terms {
            let dl = coproduct_monomial(l, self.n)?;
            for ((a, b), cc) in &dl.terms {
                out.add_term((a.clone(), b.clone(), r.clone()), &(c * cc))?;
            }
        }
        Ok(out)
    }

    /// (id (x) Delta): coproduct applied to the right leg.
    pub fn coproduct_right(&self) -> Result<TensorPoly3> {
        let mut out = TensorPoly3::zero(self.n);
        for ((l, r), c) in &self.terms {
            let dr = coproduct_monomial(r, self.n)?;
            for ((a, b), cc) in &dr.terms {
                out.add_term((l.clone(), a.clone(), b.clone()), &(c * cc))?;
            }
        }
        Ok(out)
    }
}

impl TensorPoly3 {
    pub fn zero(n: u8) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(
        &mut self,
        key: (NCMonomial, NCMonomial, NCMonomial),
        coeff: &Scalar,
    ) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().try_add(coeff)?;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }
}

/// Delta extended to a full polynomial.
pub fn coproduct(p: &NCPoly) -> Result<TensorPoly2> {
    let mut out = TensorPoly2::zero(p.n());
    for (mono, c) in p.terms() {
        let d = coproduct_monomial(mono, p.n())?;
        for (key, cc) in &d.terms {
            out.add_term(key.clone(), c * cc)?;
        }
    }
    Ok(out)
}

/// Delta of a single normal word, letter by letter:
/// Delta(u_i1j1 ... u_imjm) = prod_t (sum_k u_itk (x) u_kjt).
fn coproduct_monomial(mono: &NCMonomial, n: u8) -> Result<TensorPoly2> {
    let mut acc = TensorPoly2::one(n);
    for g in mono.word() {
        let mut next = TensorPoly2::zero(n);
        for ((l, r), c) in &acc.terms {
            for k in 1..=n {
                let mut lw = l.word();
                lw.push(Gen::new(g.i, k));
                let mut rw = r.word();
                rw.push(Gen::new(k, g.j));
                let lp = normal_form(&lw, n);
                let rp = normal_form(&rw, n);
                for (ml, cl) in lp.terms() {
                    for (mr, cr) in rp.terms() {
                        next.add_term((ml.clone(), mr.clone()), &(c * cl) * cr)?;
                    }
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::rewrite::normal_form;
    use proptest::prelude::*;

    fn g(i: u8, j: u8) -> Gen {
        Gen::new(i, j)
    }

    fn m(word: &[Gen]) -> NCMonomial {
        NCMonomial::from_sorted_word(word)
    }

    #[test]
    fn coproduct_of_generator() {
        // Delta(u11) = u11 (x) u11 + u12 (x) u21 for N=2
        let d = coproduct(&NCPoly::gen(2, 1, 1)).unwrap();
        let mut expected = TensorPoly2::zero(2);
        expected
            .add_term((m(&[g(1, 1)]), m(&[g(1, 1)])), Scalar::one())
            .unwrap();
        expected
            .add_term((m(&[g(1, 2)]), m(&[g(2, 1)])), Scalar::one())
            .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn coproduct_of_one() {
        assert_eq!(coproduct(&NCPoly::one(3)).unwrap(), TensorPoly2::one(3));
    }

    #[test]
    fn coproduct_is_morphism_on_example() {
        // Delta(u11 u12) = Delta(u11) Delta(u12)
        let prod = NCPoly::gen(2, 1, 1).try_mul(&NCPoly::gen(2, 1, 2)).unwrap();
        let lhs = coproduct(&prod).unwrap();
        let rhs = coproduct(&NCPoly::gen(2, 1, 1))
            .unwrap()
            .try_mul(&coproduct(&NCPoly::gen(2, 1, 2)).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    fn poly_strategy() -> impl Strategy<Value = NCPoly> {
        let word = |n: u8| {
            proptest::collection::vec((1..=n, 1..=n).prop_map(|(i, j)| Gen::new(i, j)), 0..=2)
        };
        (2u8..=3).prop_flat_map(move |n| {
            (proptest::collection::vec((word(n), -2i64..=2), 1..=2)).prop_map(move |parts| {
                let mut p = NCPoly::zero(n);
                for (w, e) in parts {
                    let nf = normal_form(&w, n).scalar_mul(&Scalar::q_pow(e));
                    p = p.try_add(&nf).unwrap();
                }
                p
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prop_coproduct_morphism(a in poly_strategy(), b in poly_strategy()) {
            prop_assume!(a.n() == b.n());
            let lhs = coproduct(&a.try_mul(&b).unwrap()).unwrap();
            let rhs = coproduct(&a).unwrap().try_mul(&coproduct(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_counit_axiom(p in poly_strategy()) {
            let d = coproduct(&p).unwrap();
            prop_assert_eq!(d.counit_left().unwrap(), p.clone());
            prop_assert_eq!(d.counit_right().unwrap(), p);
        }

        #[test]
        fn prop_coassociativity(p in poly_strategy()) {
            let d = coproduct(&p).unwrap();
            let left = d.coproduct_left().unwrap();
            let right = d.coproduct_right().unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
