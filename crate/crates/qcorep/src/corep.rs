//! Normalized spin-ℓ matrix corepresentations T_ℓ.
//!
//! The degree-k homogeneous component of the quantum plane carries two
//! coactions of the matrix algebra. Rescaling the monomial basis by the
//! square roots of the q^-2-multinomial coefficients turns both into the
//! *same* matrix T_ℓ with ℓ = (dim - 1)/2; the constructor checks this
//! left/right match exactly and fails loudly if a convention drifts.
//!
//! Invariants:
//! - Basis monomials are listed in descending lexicographic order; rank r
//!   corresponds to the half-integer index 2r - (dim - 1) in twice-units.
//! - Each entry is stored as a radical prefactor (square-root symbols, all
//!   with twice-exponent +1) times a radical-free body polynomial; entry
//!   coefficients are exact.
//! - `corep_matrix` returns an error rather than a one-sided matrix when
//!   the left- and right-derived entries disagree.

use std::collections::BTreeMap;
use std::fmt;

use num::integer::binomial;

use crate::error::{Error, Result};
use crate::ncalg::{coproduct, NCPoly, TensorPoly2};
use crate::qcomb::{enumerate_desc_lex, q_multinomial, MultiIndex};
use crate::qplane::{matrix_left, matrix_right};
use crate::qscalar::{LaurentPoly, RadicalSymbol, Scalar};

/// A half-integer stored as twice its value, so arithmetic stays in i64.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(v: i64) -> Self {
        HalfInt { twice: 2 * v }
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Identifies which corepresentation a matrix is: T_ℓ built on the
/// degree-k component of the N-variable quantum plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinLabel {
    pub n: u8,
    pub k: u32,
    pub ell: HalfInt,
}

/// Spin of the degree-k component for N variables: ℓ = (dim - 1)/2 with
/// dim = C(N + k - 1, k).
pub fn ell_of(n: u8, k: u32) -> HalfInt {
    let dim = binomial(n as i64 + k as i64 - 1, k as i64);
    HalfInt::from_twice(dim - 1)
}

/// Normalization coefficient c_m: the multinomial of the monomial's
/// exponents at base q^-2.
pub fn normalization_coeff(m: &MultiIndex) -> Result<LaurentPoly> {
    q_multinomial(m.degree(), m, -2)
}

/// The square-root symbol whose value is `normalization_coeff(m)`.
pub fn normalization_symbol(m: &MultiIndex) -> Result<RadicalSymbol> {
    RadicalSymbol::new(m.degree(), m, -2)
}

fn check_shape(m: &MultiIndex, n: u8, k: u32) -> Result<()> {
    if m.len() != n as usize || m.degree() != k {
        return Err(Error::InvalidMultiIndex(format!(
            "{m} is not a degree-{k} multi-index in {n} variables"
        )));
    }
    Ok(())
}

/// Descending-lexicographic rank of `m` among all multi-indices of the same
/// length and degree, via the closed form
/// r = sum_{c=1}^{N-1} C(t_c + c - 1, c) with t_c the sum of the last c parts.
fn rank_of(m: &MultiIndex) -> i64 {
    let parts = m.parts();
    let n = parts.len();
    let mut tail = 0i64;
    let mut rank = 0i64;
    for c in 1..n as i64 {
        tail += parts[n - c as usize] as i64;
        rank += binomial(tail + c - 1, c);
    }
    rank
}

/// Half-integer index of basis monomial x^m: its descending-lex rank
/// recentred so the indices run -ℓ, ..., ℓ.
pub fn index_of(m: &MultiIndex, n: u8, k: u32) -> Result<HalfInt> {
    check_shape(m, n, k)?;
    let ell_twice = ell_of(n, k).twice();
    Ok(HalfInt::from_twice(2 * rank_of(m) - ell_twice))
}

/// Inverse of [`index_of`]: the basis monomial at half-integer index `s`.
pub fn mono_of_index(s: HalfInt, n: u8, k: u32) -> Result<MultiIndex> {
    let ell_twice = ell_of(n, k).twice();
    let numer = s.twice() + ell_twice;
    if numer % 2 != 0 {
        return Err(Error::IndexOutOfRange(format!(
            "index {s} has the wrong parity for ell = {}",
            ell_of(n, k)
        )));
    }
    let rank = numer / 2;
    if rank < 0 || rank > ell_twice {
        return Err(Error::IndexOutOfRange(format!(
            "index {s} lies outside [-{0}, {0}]",
            ell_of(n, k)
        )));
    }
    Ok(enumerate_desc_lex(n as usize, k)[rank as usize].clone())
}

/// One entry of T_ℓ: a product of square-root symbols (the radical
/// prefactor, all twice-exponents +1) times a polynomial with
/// radical-free coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorepEntry {
    radical: BTreeMap<RadicalSymbol, i64>,
    body: NCPoly,
}

impl CorepEntry {
    pub(crate) fn from_parts(radical: BTreeMap<RadicalSymbol, i64>, body: NCPoly) -> Self {
        CorepEntry { radical, body }
    }

    pub fn radical(&self) -> &BTreeMap<RadicalSymbol, i64> {
        &self.radical
    }

    pub fn body(&self) -> &NCPoly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// The entry as a single polynomial, radical prefactor folded into the
    /// coefficients.
    pub fn full(&self) -> NCPoly {
        if self.radical.is_empty() {
            return self.body.clone();
        }
        let pre = Scalar::with_radicals(
            crate::qscalar::RationalScalar::one(),
            self.radical.clone(),
        );
        self.body.scalar_mul(&pre)
    }

    /// Numeric value at q = q0 with generators sent to `gen_value(i, j)`.
    pub fn eval_f64(&self, q0: f64, gen_value: &dyn Fn(u8, u8) -> f64) -> f64 {
        let mut v = self.body.eval_f64(q0, gen_value);
        for (sym, t) in &self.radical {
            v *= sym.value().eval_f64(q0).powf(*t as f64 / 2.0);
        }
        v
    }
}

/// The matrix corepresentation T_ℓ with exact entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorepMatrix {
    label: SpinLabel,
    basis: Vec<MultiIndex>,
    entries: Vec<Vec<CorepEntry>>,
}

impl CorepMatrix {
    /// Reassembles a matrix from parsed entries; the basis and label are
    /// recomputed from (n, k) and the entry grid must be dim x dim.
    pub(crate) fn from_parts(n: u8, k: u32, entries: Vec<Vec<CorepEntry>>) -> Result<Self> {
        let basis = enumerate_desc_lex(n as usize, k);
        let dim = basis.len();
        if entries.len() != dim || entries.iter().any(|row| row.len() != dim) {
            return Err(Error::Parse(format!(
                "entry grid is not {dim} x {dim} for N = {n}, k = {k}"
            )));
        }
        Ok(CorepMatrix {
            label: SpinLabel { n, k, ell: ell_of(n, k) },
            basis,
            entries,
        })
    }

    pub fn label(&self) -> SpinLabel {
        self.label
    }

    pub fn n(&self) -> u8 {
        self.label.n
    }

    pub fn k(&self) -> u32 {
        self.label.k
    }

    pub fn ell(&self) -> HalfInt {
        self.label.ell
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MultiIndex] {
        &self.basis
    }

    /// Entry at ranks (r, s), both 0-based in descending-lex order.
    pub fn entry(&self, r: usize, s: usize) -> &CorepEntry {
        &self.entries[r][s]
    }

    /// Half-integer index of rank `r`.
    pub fn half_index(&self, r: usize) -> HalfInt {
        HalfInt::from_twice(2 * r as i64 - self.label.ell.twice())
    }

    fn rank_of_twice(&self, twice: i64) -> Result<usize> {
        let numer = twice + self.label.ell.twice();
        if numer % 2 != 0 || numer < 0 || numer / 2 >= self.dim() as i64 {
            return Err(Error::IndexOutOfRange(format!(
                "{}/2 is not an index of T_{}",
                twice, self.label.ell
            )));
        }
        Ok((numer / 2) as usize)
    }

    /// Entry addressed by half-integer indices, given as twice their values.
    pub fn entry_by_twice(&self, r_twice: i64, s_twice: i64) -> Result<&CorepEntry> {
        let r = self.rank_of_twice(r_twice)?;
        let s = self.rank_of_twice(s_twice)?;
        Ok(&self.entries[r][s])
    }
}

/// Builds T_ℓ for the degree-k component of the N-variable quantum plane.
///
/// The entry at (r, s) is sqrt(c_s / c_r) times the right unnormalized
/// matrix entry; the same value must arise as sqrt(c_r / c_s) times the
/// transposed left entry, and any discrepancy is reported as
/// [`Error::MatchFailure`] with the offending half-integer indices.
pub fn corep_matrix(n: u8, k: u32) -> Result<CorepMatrix> {
    let right = matrix_right(n, k)?;
    let left = matrix_left(n, k)?;
    let dim = right.dim();
    let basis = right.basis().to_vec();
    let ell = ell_of(n, k);

    let sqrts: Vec<Scalar> = basis
        .iter()
        .map(|m| Ok(Scalar::sqrt_symbol(normalization_symbol(m)?)))
        .collect::<Result<_>>()?;

    let mut entries = Vec::with_capacity(dim);
    for r in 0..dim {
        let mut row = Vec::with_capacity(dim);
        let inv_r = sqrts[r].inv()?;
        for s in 0..dim {
            let pre_rs = &sqrts[s] * &inv_r;
            let pre_sr = &sqrts[r] * &sqrts[s].inv()?;
            let t_right = right.entry(r, s).scalar_mul(&pre_rs);
            let t_left = left.entry(s, r).scalar_mul(&pre_sr);
            if t_right != t_left {
                return Err(Error::MatchFailure {
                    r: 2 * r as i64 - ell.twice(),
                    s: 2 * s as i64 - ell.twice(),
                });
            }
            let body = right
                .entry(r, s)
                .scalar_mul(&Scalar::from_rational(pre_rs.rational().clone()));
            row.push(CorepEntry {
                radical: if body.is_zero() {
                    BTreeMap::new()
                } else {
                    pre_rs.radicals().clone()
                },
                body,
            });
        }
        entries.push(row);
    }

    Ok(CorepMatrix {
        label: SpinLabel { n, k, ell },
        basis,
        entries,
    })
}

/// Checks Δ(t_rs) = Σ_p t_rp ⊗ t_ps for every entry.
pub fn verify_coassociativity(t: &CorepMatrix) -> Result<bool> {
    let dim = t.dim();
    for r in 0..dim {
        for s in 0..dim {
            let lhs = coproduct(&t.entry(r, s).full())?;
            let mut rhs = TensorPoly2::zero(t.n());
            for p in 0..dim {
                let term = TensorPoly2::outer(&t.entry(r, p).full(), &t.entry(p, s).full())?;
                rhs = rhs.try_add(&term)?;
            }
            if !lhs.try_sub(&rhs)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks ε(t_rs) = δ_rs for every entry.
pub fn verify_counit(t: &CorepMatrix) -> Result<bool> {
    let dim = t.dim();
    for r in 0..dim {
        for s in 0..dim {
            let value = t.entry(r, s).full().counit()?;
            let expected = if r == s { Scalar::one() } else { Scalar::zero() };
            if value != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Both corepresentation axioms together.
pub fn verify_corep_axioms(t: &CorepMatrix) -> Result<bool> {
    Ok(verify_coassociativity(t)? && verify_counit(t)?)
}

/// Largest absolute deviation between T evaluated at q = 1 (generators sent
/// to `gen_value`) and a classical reference matrix.
pub fn classical_limit_max_deviation(
    t: &CorepMatrix,
    gen_value: &dyn Fn(u8, u8) -> f64,
    reference: &dyn Fn(usize, usize) -> f64,
) -> f64 {
    let mut worst = 0.0f64;
    for r in 0..t.dim() {
        for s in 0..t.dim() {
            let got = t.entry(r, s).eval_f64(1.0, gen_value);
            let dev = (got - reference(r, s)).abs();
            if dev > worst {
                worst = dev;
            }
        }
    }
    worst
}
