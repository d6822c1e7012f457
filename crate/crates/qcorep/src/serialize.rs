//! Deterministic serialization of corepresentation matrices.
//!
//! Three renderings are provided: a JSON document (bijective — `parse_json`
//! inverts `serialize_json` exactly), a LaTeX matrix mirroring the layout of
//! the standard displays, and a plain-text listing with an optional numeric
//! mode that substitutes a concrete q value into the coefficients.
//!
//! Invariants:
//! - JSON output is byte-identical across runs: object keys are sorted,
//!   entry lists follow the canonical term order, and every rational is
//!   rendered as an explicit "p/q" string (including "1/1").
//! - The JSON document carries `schema_version`; parsing rejects any other
//!   version rather than guessing.

use std::collections::BTreeMap;

use num::BigRational;
use serde_json::{json, Map, Value};

use crate::corep::{CorepEntry, CorepMatrix, HalfInt};
use crate::error::{Error, Result};
use crate::ncalg::{Gen, NCMonomial, NCPoly};
use crate::qcomb::{enumerate_desc_lex, MultiIndex};
use crate::qscalar::{LaurentPoly, RadicalSymbol, RationalScalar, Scalar};

/// Version stamp embedded in every JSON document and cache key.
pub const SCHEMA_VERSION: i64 = 1;

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

// ---------------------------------------------------------------------------
// JSON emission
// ---------------------------------------------------------------------------

fn laurent_to_value(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([e, format!("{}/{}", c.numer(), c.denom())]))
            .collect(),
    )
}

fn coeff_to_value(c: &Scalar) -> Value {
    debug_assert!(
        c.radicals().is_empty(),
        "body coefficients are radical-free by construction"
    );
    json!({
        "den": laurent_to_value(c.rational().den()),
        "num": laurent_to_value(c.rational().num()),
    })
}

fn entry_to_value(e: &CorepEntry) -> Value {
    let radical: Vec<Value> = e
        .radical()
        .iter()
        .map(|(sym, t)| {
            json!({
                "exp_twice": t,
                "multinomial": {
                    "base_exp": sym.base_exponent(),
                    "k": sym.k(),
                    "parts": sym.parts().parts(),
                },
            })
        })
        .collect();
    let terms: Vec<Value> = e
        .body()
        .terms()
        .map(|(m, c)| {
            let mono: Vec<Value> = m
                .factors()
                .iter()
                .map(|(g, p)| json!([g.i, g.j, p]))
                .collect();
            json!({ "coeff": coeff_to_value(c), "monomial": mono })
        })
        .collect();
    json!({ "radical": radical, "terms": terms })
}

pub(crate) fn corep_to_value(t: &CorepMatrix) -> Value {
    let mut entries = Map::new();
    for r in 0..t.dim() {
        for s in 0..t.dim() {
            let key = format!("{},{}", t.half_index(r).twice(), t.half_index(s).twice());
            entries.insert(key, entry_to_value(t.entry(r, s)));
        }
    }
    let mut top = Map::new();
    top.insert("N".into(), json!(t.n()));
    top.insert("k".into(), json!(t.k()));
    top.insert("ell_twice".into(), json!(t.ell().twice()));
    top.insert("entries".into(), Value::Object(entries));
    top.insert("schema_version".into(), json!(SCHEMA_VERSION));
    Value::Object(top)
}

/// Serializes T as a deterministic JSON document.
pub fn serialize_json(t: &CorepMatrix) -> String {
    let mut text = serde_json::to_string_pretty(&corep_to_value(t))
        .expect("corep value serializes");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// JSON parsing
// ---------------------------------------------------------------------------

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| perr(format!("{what}: expected object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(format!("{what}: expected array")))
}

fn get<'a>(m: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    m.get(key).ok_or_else(|| perr(format!("missing field `{key}`")))
}

fn get_i64(m: &Map<String, Value>, key: &str) -> Result<i64> {
    get(m, key)?
        .as_i64()
        .ok_or_else(|| perr(format!("field `{key}`: expected integer")))
}

fn parse_big_rational(s: &str) -> Result<BigRational> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| perr(format!("rational `{s}`: expected \"p/q\"")))?;
    let p = p.parse().map_err(|_| perr(format!("rational `{s}`: bad numerator")))?;
    let q: num::BigInt = q
        .parse()
        .map_err(|_| perr(format!("rational `{s}`: bad denominator")))?;
    if q == num::BigInt::from(0) {
        return Err(perr(format!("rational `{s}`: zero denominator")));
    }
    Ok(BigRational::new(p, q))
}

fn laurent_from_value(v: &Value, what: &str) -> Result<LaurentPoly> {
    let mut terms = Vec::new();
    for item in as_array(v, what)? {
        let pair = as_array(item, what)?;
        if pair.len() != 2 {
            return Err(perr(format!("{what}: expected [exponent, \"p/q\"]")));
        }
        let e = pair[0]
            .as_i64()
            .ok_or_else(|| perr(format!("{what}: bad exponent")))?;
        let c = pair[1]
            .as_str()
            .ok_or_else(|| perr(format!("{what}: coefficient must be a string")))?;
        terms.push((e, parse_big_rational(c)?));
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn coeff_from_value(v: &Value) -> Result<Scalar> {
    let obj = as_object(v, "coeff")?;
    let num = laurent_from_value(get(obj, "num")?, "coeff.num")?;
    let den = laurent_from_value(get(obj, "den")?, "coeff.den")?;
    Ok(Scalar::from_rational(RationalScalar::new(num, den)?))
}

fn monomial_from_value(v: &Value, n: u8) -> Result<NCMonomial> {
    let mut word: Vec<Gen> = Vec::new();
    for item in as_array(v, "monomial")? {
        let triple = as_array(item, "monomial factor")?;
        if triple.len() != 3 {
            return Err(perr("monomial factor: expected [i, j, power]"));
        }
        let geti = |idx: usize| -> Result<i64> {
            triple[idx]
                .as_i64()
                .ok_or_else(|| perr("monomial factor: expected integers"))
        };
        let (i, j, p) = (geti(0)?, geti(1)?, geti(2)?);
        if i < 1 || j < 1 || i > n as i64 || j > n as i64 {
            return Err(perr(format!("generator u[{i},{j}] out of range for N = {n}")));
        }
        if !(1..=10_000).contains(&p) {
            return Err(perr(format!("unreasonable generator power {p}")));
        }
        for _ in 0..p {
            word.push(Gen::new(i as u8, j as u8));
        }
    }
    if word.windows(2).any(|w| w[0] > w[1]) {
        return Err(perr("monomial factors are not in normal order"));
    }
    Ok(NCMonomial::from_sorted_word(&word))
}

fn entry_from_value(v: &Value, n: u8) -> Result<CorepEntry> {
    let obj = as_object(v, "entry")?;

    let mut radical = BTreeMap::new();
    for item in as_array(get(obj, "radical")?, "radical")? {
        let rad = as_object(item, "radical item")?;
        let exp_twice = get_i64(rad, "exp_twice")?;
        if exp_twice == 0 {
            return Err(perr("radical item: zero exponent"));
        }
        let multi = as_object(get(rad, "multinomial")?, "multinomial")?;
        let base_exp = get_i64(multi, "base_exp")?;
        let k = get_i64(multi, "k")?;
        if !(0..=u32::MAX as i64).contains(&k) {
            return Err(perr("multinomial: bad k"));
        }
        let mut parts = Vec::new();
        for p in as_array(get(multi, "parts")?, "multinomial.parts")? {
            let p = p
                .as_i64()
                .ok_or_else(|| perr("multinomial.parts: expected integers"))?;
            if !(0..=u32::MAX as i64).contains(&p) {
                return Err(perr("multinomial.parts: part out of range"));
            }
            parts.push(p as u32);
        }
        let sym = RadicalSymbol::new(k as u32, &MultiIndex::new(parts)?, base_exp)?;
        if radical.insert(sym, exp_twice).is_some() {
            return Err(perr("radical item: duplicate symbol"));
        }
    }

    let mut body = NCPoly::zero(n);
    for item in as_array(get(obj, "terms")?, "terms")? {
        let term = as_object(item, "term")?;
        let mono = monomial_from_value(get(term, "monomial")?, n)?;
        let coeff = coeff_from_value(get(term, "coeff")?)?;
        body.add_term(mono, coeff)?;
    }
    if body.is_zero() && !radical.is_empty() {
        return Err(perr("zero entry must carry an empty radical"));
    }
    Ok(CorepEntry::from_parts(radical, body))
}

pub(crate) fn corep_from_value(v: &Value) -> Result<CorepMatrix> {
    let top = as_object(v, "document")?;
    let schema = get_i64(top, "schema_version")?;
    if schema != SCHEMA_VERSION {
        return Err(perr(format!(
            "unsupported schema version {schema} (expected {SCHEMA_VERSION})"
        )));
    }
    let n = get_i64(top, "N")?;
    if !(1..=64).contains(&n) {
        return Err(perr(format!("N = {n} out of range")));
    }
    let k = get_i64(top, "k")?;
    if !(1..=64).contains(&k) {
        return Err(perr(format!("k = {k} out of range")));
    }
    let basis = enumerate_desc_lex(n as usize, k as u32);
    let dim = basis.len();
    let ell_twice = get_i64(top, "ell_twice")?;
    if ell_twice != dim as i64 - 1 {
        return Err(perr(format!(
            "ell_twice = {ell_twice} does not match dim = {dim}"
        )));
    }

    let entries_obj = as_object(get(top, "entries")?, "entries")?;
    if entries_obj.len() != dim * dim {
        return Err(perr(format!(
            "expected {} entries, found {}",
            dim * dim,
            entries_obj.len()
        )));
    }
    let mut grid: Vec<Vec<Option<CorepEntry>>> = vec![vec![None; dim]; dim];
    for (key, ev) in entries_obj {
        let (rt, st) = key
            .split_once(',')
            .ok_or_else(|| perr(format!("entry key `{key}`: expected \"r,s\"")))?;
        let rank = |txt: &str| -> Result<usize> {
            let twice: i64 = txt
                .parse()
                .map_err(|_| perr(format!("entry key `{key}`: bad index")))?;
            let numer = twice + ell_twice;
            if numer % 2 != 0 || numer < 0 || numer / 2 >= dim as i64 {
                return Err(perr(format!("entry key `{key}`: index out of range")));
            }
            Ok((numer / 2) as usize)
        };
        let (r, s) = (rank(rt)?, rank(st)?);
        if grid[r][s].replace(entry_from_value(ev, n as u8)?).is_some() {
            return Err(perr(format!("duplicate entry key `{key}`")));
        }
    }
    let entries = grid
        .into_iter()
        .map(|row| row.into_iter().map(|e| e.expect("grid full")).collect())
        .collect();
    CorepMatrix::from_parts(n as u8, k as u32, entries)
}

/// Parses a document produced by [`serialize_json`].
pub fn parse_json(text: &str) -> Result<CorepMatrix> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| perr(format!("invalid JSON: {e}")))?;
    corep_from_value(&v)
}

// ---------------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------------

fn rat_tex(c: &BigRational) -> String {
    if c.denom() == &num::BigInt::from(1) {
        format!("{}", c.numer())
    } else if c < &BigRational::from_integer(0.into()) {
        format!("-\\frac{{{}}}{{{}}}", -c.numer(), c.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// LaTeX for a Laurent polynomial, highest power first.
pub fn laurent_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let one = BigRational::from_integer(1.into());
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let qpow = match e {
            0 => String::new(),
            1 => "q".into(),
            _ => format!("q^{{{e}}}"),
        };
        let abs = if c < &BigRational::from_integer(0.into()) { -c } else { c.clone() };
        let body = if *e == 0 {
            rat_tex(&abs)
        } else if abs == one {
            qpow
        } else {
            format!("{}{}", rat_tex(&abs), qpow)
        };
        let negative = c < &BigRational::from_integer(0.into());
        if idx == 0 {
            if negative {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

fn rational_scalar_latex(r: &RationalScalar) -> String {
    if r.den().is_one() {
        laurent_latex(r.num())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            laurent_latex(r.num()),
            laurent_latex(r.den())
        )
    }
}

fn monomial_latex(m: &NCMonomial) -> String {
    if m.is_identity() {
        return "1".into();
    }
    let mut out = String::new();
    for (g, p) in m.factors() {
        if g.i < 10 && g.j < 10 {
            out.push_str(&format!("u_{{{}{}}}", g.i, g.j));
        } else {
            out.push_str(&format!("u_{{{},{}}}", g.i, g.j));
        }
        if *p > 1 {
            out.push_str(&format!("^{{{p}}}"));
        }
    }
    out
}

/// LaTeX for a normal-ordered polynomial.
pub fn ncpoly_latex(p: &NCPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let r = c.rational();
        let piece = if m.is_identity() {
            rational_scalar_latex(r)
        } else if r.is_one() {
            monomial_latex(m)
        } else if (-r).is_one() {
            format!("-{}", monomial_latex(m))
        } else {
            let coeff = rational_scalar_latex(r);
            // A multi-term numerator needs brackets before a monomial; a
            // \frac carries its own grouping.
            if r.den().is_one() && r.num().num_terms() > 1 {
                format!("({}){}", coeff, monomial_latex(m))
            } else {
                format!("{}{}", coeff, monomial_latex(m))
            }
        };
        if idx == 0 {
            out.push_str(&piece);
        } else if let Some(tail) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(tail);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

fn radical_latex(radical: &BTreeMap<RadicalSymbol, i64>) -> String {
    let mut out = String::new();
    for (sym, t) in radical {
        out.push_str(&format!(
            "({})^{{{}}}",
            laurent_latex(&sym.value()),
            HalfInt::from_twice(*t)
        ));
    }
    out
}

/// LaTeX for one matrix entry, radical prefactor first.
pub fn entry_latex(e: &CorepEntry) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let pre = radical_latex(e.radical());
    let body = ncpoly_latex(e.body());
    if pre.is_empty() {
        body
    } else if e.body().num_terms() > 1 {
        format!("{pre}\\left({body}\\right)")
    } else {
        format!("{pre}{body}")
    }
}

/// LaTeX matrix with rows and columns in ascending index order.
pub fn serialize_latex(t: &CorepMatrix) -> String {
    let dim = t.dim();
    let mut out = format!(
        "T_{{{}}} = \\left(\\begin{{array}}{{{}}}\n",
        t.ell(),
        "c".repeat(dim)
    );
    let rows: Vec<String> = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|s| entry_latex(t.entry(r, s)))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    out.push_str(&rows.join(" \\\\\n"));
    out.push_str("\n\\end{array}\\right)\n");
    out
}

// ---------------------------------------------------------------------------
// Plain text
// ---------------------------------------------------------------------------

/// Plain text for one matrix entry, radical prefactor first.
pub fn entry_text(e: &CorepEntry) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut pre = String::new();
    for (sym, t) in e.radical() {
        if !pre.is_empty() {
            pre.push('*');
        }
        pre.push_str(&format!("({})^({})", sym.value(), HalfInt::from_twice(*t)));
    }
    let body = e.body().to_string();
    if pre.is_empty() {
        body
    } else if e.body().num_terms() > 1 {
        format!("{pre} * ({body})")
    } else {
        format!("{pre} * {body}")
    }
}

fn text_header(t: &CorepMatrix) -> String {
    format!(
        "T_{{{}}} (N = {}, k = {}, dim = {})\n",
        t.ell(),
        t.n(),
        t.k(),
        t.dim()
    )
}

/// Plain-text listing of all entries, addressed by half-integer indices.
pub fn serialize_text(t: &CorepMatrix) -> String {
    let mut out = text_header(t);
    for r in 0..t.dim() {
        for s in 0..t.dim() {
            out.push_str(&format!(
                "t[{},{}] = {}\n",
                t.half_index(r),
                t.half_index(s),
                entry_text(t.entry(r, s))
            ));
        }
    }
    out
}

fn float_terms_text(pieces: &[(f64, String)]) -> String {
    let mut out = String::new();
    for (idx, (v, mono)) in pieces.iter().enumerate() {
        let body = if mono.is_empty() {
            format!("{:.6}", v.abs())
        } else {
            format!("{:.6}*{}", v.abs(), mono)
        };
        if idx == 0 {
            if *v < 0.0 {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if *v < 0.0 { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

fn entry_eval_text(e: &CorepEntry, q0: f64) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut pre = 1.0f64;
    for (sym, t) in e.radical() {
        pre *= sym.value().eval_f64(q0).powf(*t as f64 / 2.0);
    }
    let pieces: Vec<(f64, String)> = e
        .body()
        .terms()
        .map(|(m, c)| {
            let mono = if m.is_identity() { String::new() } else { m.to_string() };
            (pre * c.eval_f64(q0), mono)
        })
        .collect();
    float_terms_text(&pieces)
}

/// Plain-text listing with coefficients evaluated at q = q0.
pub fn serialize_text_eval(t: &CorepMatrix, q0: f64) -> String {
    let mut out = text_header(t);
    out.push_str(&format!("q = {q0}\n"));
    for r in 0..t.dim() {
        for s in 0..t.dim() {
            out.push_str(&format!(
                "t[{},{}] = {}\n",
                t.half_index(r),
                t.half_index(s),
                entry_eval_text(t.entry(r, s), q0)
            ));
        }
    }
    out
}

/// Plain text of an algebra polynomial with coefficients evaluated at q = q0.
pub fn ncpoly_eval_text(p: &NCPoly, q0: f64) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let pieces: Vec<(f64, String)> = p
        .terms()
        .map(|(m, c)| {
            let mono = if m.is_identity() { String::new() } else { m.to_string() };
            (c.eval_f64(q0), mono)
        })
        .collect();
    float_terms_text(&pieces)
}
