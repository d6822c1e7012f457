//! Python bindings for the qcorep engine.
//!
//! Exposes the corepresentation matrix (construction, serialization,
//! verification, numeric evaluation), the index map, and the q-combinatorial
//! and determinant/minor helpers. All computation stays exact on the Rust
//! side; Python receives rendered strings, integers, or floats.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qcorep::corep::{self, HalfInt};
use qcorep::minors;
use qcorep::qcomb::{self, MultiIndex};
use qcorep::serialize;

fn to_py_err(e: qcorep::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// The exact corepresentation matrix T for (N, k).
#[pyclass(frozen, name = "CorepMatrix")]
struct PyCorepMatrix {
    inner: corep::CorepMatrix,
}

#[pymethods]
impl PyCorepMatrix {
    /// Computes T for the degree-k component of the N-variable quantum
    /// plane, verifying the left/right matching condition.
    #[staticmethod]
    fn compute(n: u8, k: u32) -> PyResult<Self> {
        let inner = corep::corep_matrix(n, k).map_err(to_py_err)?;
        Ok(PyCorepMatrix { inner })
    }

    /// Parses a matrix from the JSON produced by `to_json`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serialize::parse_json(text).map_err(to_py_err)?;
        Ok(PyCorepMatrix { inner })
    }

    #[getter]
    fn n(&self) -> u8 {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Twice the spin: dim - 1.
    #[getter]
    fn ell_twice(&self) -> i64 {
        self.inner.ell().twice()
    }

    /// Basis monomial exponents in descending lexicographic order.
    #[getter]
    fn basis(&self) -> Vec<Vec<u32>> {
        self.inner
            .basis()
            .iter()
            .map(|m| m.parts().to_vec())
            .collect()
    }

    fn to_json(&self) -> String {
        serialize::serialize_json(&self.inner)
    }

    fn to_latex(&self) -> String {
        serialize::serialize_latex(&self.inner)
    }

    fn to_text(&self) -> String {
        serialize::serialize_text(&self.inner)
    }

    /// Plain-text entry at half-integer indices given as twice their value.
    fn entry_text(&self, r_twice: i64, s_twice: i64) -> PyResult<String> {
        let e = self
            .inner
            .entry_by_twice(r_twice, s_twice)
            .map_err(to_py_err)?;
        Ok(serialize::entry_text(e))
    }

    /// LaTeX entry at half-integer indices given as twice their value.
    fn entry_latex(&self, r_twice: i64, s_twice: i64) -> PyResult<String> {
        let e = self
            .inner
            .entry_by_twice(r_twice, s_twice)
            .map_err(to_py_err)?;
        Ok(serialize::entry_latex(e))
    }

    /// Numeric value of one entry at q, with generator u_ij sent to
    /// gen_values[i-1][j-1].
    fn entry_eval(
        &self,
        r_twice: i64,
        s_twice: i64,
        q: f64,
        gen_values: Vec<Vec<f64>>,
    ) -> PyResult<f64> {
        let n = self.inner.n() as usize;
        if gen_values.len() != n || gen_values.iter().any(|row| row.len() != n) {
            return Err(PyValueError::new_err(format!(
                "gen_values must be an {n} x {n} table"
            )));
        }
        let e = self
            .inner
            .entry_by_twice(r_twice, s_twice)
            .map_err(to_py_err)?;
        Ok(e.eval_f64(q, &|i, j| gen_values[i as usize - 1][j as usize - 1]))
    }

    /// Runs the coassociativity and counit checks on this matrix.
    fn verify_axioms(&self) -> PyResult<bool> {
        corep::verify_corep_axioms(&self.inner).map_err(to_py_err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "CorepMatrix(N={}, k={}, ell={}, dim={})",
            self.inner.n(),
            self.inner.k(),
            self.inner.ell(),
            self.inner.dim()
        )
    }
}

/// Quantum determinant of the N x N generator matrix, as plain text.
#[pyfunction]
fn quantum_det_text(n: u8) -> String {
    minors::quantum_determinant(n).to_string()
}

/// Quantum minor for the given 1-based row and column sets, as plain text.
#[pyfunction]
fn minor_text(n: u8, rows: Vec<u8>, cols: Vec<u8>) -> PyResult<String> {
    let rows = minors::IndexSet::new(rows).map_err(to_py_err)?;
    let cols = minors::IndexSet::new(cols).map_err(to_py_err)?;
    let m = minors::minor(&rows, &cols, n).map_err(to_py_err)?;
    Ok(m.to_string())
}

/// Gaussian binomial [m n] at base q^e, as plain text.
#[pyfunction]
fn gauss_binomial_text(m: i64, n: i64, e: i64) -> PyResult<String> {
    Ok(qcomb::gauss_binomial(m, n, e).map_err(to_py_err)?.to_string())
}

/// q-multinomial of `parts` at base q^e, as plain text.
#[pyfunction]
fn q_multinomial_text(parts: Vec<u32>, e: i64) -> PyResult<String> {
    let parts = MultiIndex::new(parts).map_err(to_py_err)?;
    let k = parts.degree();
    Ok(qcomb::q_multinomial(k, &parts, e)
        .map_err(to_py_err)?
        .to_string())
}

/// The multi-index to half-integer index map: a list of
/// (exponents, twice-the-index) pairs in descending lexicographic order.
#[pyfunction]
fn index_table(n: u8, k: u32) -> PyResult<Vec<(Vec<u32>, i64)>> {
    if n < 2 || k < 1 {
        return Err(PyValueError::new_err("index tables need N >= 2 and k >= 1"));
    }
    qcomb::enumerate_desc_lex(n as usize, k)
        .into_iter()
        .map(|m| {
            let s = corep::index_of(&m, n, k).map_err(to_py_err)?;
            Ok((m.parts().to_vec(), s.twice()))
        })
        .collect()
}

/// The basis monomial at a given half-integer index (twice its value).
#[pyfunction]
fn mono_of_index(s_twice: i64, n: u8, k: u32) -> PyResult<Vec<u32>> {
    let m = corep::mono_of_index(HalfInt::from_twice(s_twice), n, k).map_err(to_py_err)?;
    Ok(m.parts().to_vec())
}

/// Runs the match/coassoc/counit checks for (N, k) and returns a
/// name -> passed mapping.
#[pyfunction]
fn verify_checks(n: u8, k: u32) -> PyResult<BTreeMap<String, bool>> {
    let mut out = BTreeMap::new();
    match corep::corep_matrix(n, k) {
        Ok(t) => {
            out.insert("match".to_string(), true);
            out.insert(
                "coassoc".to_string(),
                corep::verify_coassociativity(&t).map_err(to_py_err)?,
            );
            out.insert(
                "counit".to_string(),
                corep::verify_counit(&t).map_err(to_py_err)?,
            );
        }
        Err(qcorep::Error::MatchFailure { .. }) => {
            out.insert("match".to_string(), false);
        }
        Err(e) => return Err(to_py_err(e)),
    }
    Ok(out)
}

#[pymodule]
fn qcorep_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCorepMatrix>()?;
    m.add_function(wrap_pyfunction!(quantum_det_text, m)?)?;
    m.add_function(wrap_pyfunction!(minor_text, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_binomial_text, m)?)?;
    m.add_function(wrap_pyfunction!(q_multinomial_text, m)?)?;
    m.add_function(wrap_pyfunction!(index_table, m)?)?;
    m.add_function(wrap_pyfunction!(mono_of_index, m)?)?;
    m.add_function(wrap_pyfunction!(verify_checks, m)?)?;
    Ok(())
}
