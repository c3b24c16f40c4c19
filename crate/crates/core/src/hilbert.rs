//! Exact Hilbert-Poincaré series of graded quotients S/I.
//!
//! A series is stored as an integer-coefficient numerator over (1-t)^k. The
//! numerator of S/I for a monomial ideal I is computed by the standard pivot
//! recursion N(I) = N(I + (x)) + t * N(I : x).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{lead_term_ideal, GroebnerBasis, MonomialIdeal};
use crate::ring::Monomial;

/// Coefficients of an integer polynomial in t, index = degree, no trailing
/// zeros.
pub type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

pub(crate) fn poly_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub(crate) fn poly_sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

pub(crate) fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

/// Multiply by t^k.
pub(crate) fn poly_shift(a: &IntPoly, k: usize) -> IntPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(a.iter().cloned());
    out
}

pub fn poly_eval_one(p: &IntPoly) -> BigInt {
    p.iter().sum()
}

pub fn poly_degree(p: &IntPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Exact division by (1-t); `None` if not divisible (i.e. p(1) != 0).
pub(crate) fn poly_div_one_minus_t(p: &IntPoly) -> Option<IntPoly> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    // (1-t) * q = p with q_i = p_0 + ... + p_i; divisible iff the full sum is 0
    let mut q = Vec::with_capacity(p.len());
    let mut acc = BigInt::zero();
    for c in p {
        acc += c;
        q.push(acc.clone());
    }
    if q.pop().map(|c| c.is_zero()).unwrap_or(true) {
        Some(trim(q))
    } else {
        None
    }
}

/// Render as a polynomial-in-t string, e.g. `1 - 3*t^2 + 2*t^3`.
pub fn poly_to_string(p: &IntPoly) -> String {
    use num_traits::Signed;
    if p.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    let mut first = true;
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                s.push('-');
            }
            first = false;
        } else if c.is_negative() {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        let a = c.abs();
        if i == 0 {
            s.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            if i == 1 {
                s.push('t');
            } else {
                s.push_str(&format!("t^{i}"));
            }
        }
    }
    s
}

/// A Hilbert-Poincaré series numerator/(1-t)^denom_exp.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denom_exp: usize,
}

impl HilbertSeries {
    pub fn new(numerator: IntPoly, denom_exp: usize) -> Self {
        HilbertSeries { numerator: trim(numerator), denom_exp }
    }
}

/// An exact expansion prefix c_0..c_N of a series, with the eventually
/// constant value when the series has Krull dimension <= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub coeffs: Vec<BigInt>,
    pub stable_value: Option<BigInt>,
}

impl SeriesPrefix {
    pub fn coeffs_u64(&self) -> Vec<u64> {
        self.coeffs
            .iter()
            .map(|c| u64::try_from(c).expect("nonnegative series coefficient"))
            .collect()
    }
}

/// Numerator P(t) with HP(S/I)(t) = P(t)/(1-t)^nvars for a monomial ideal I.
pub fn hilbert_numerator(ideal: &MonomialIdeal, nvars: usize) -> IntPoly {
    assert_eq!(ideal.nvars(), nvars);
    numerator_rec(ideal.gens())
}

fn numerator_rec(gens: &[Monomial]) -> IntPoly {
    // unit ideal: quotient is zero
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    // base case: pure variable powers give a product of (1 - t^a)
    if gens.iter().all(|m| m.is_pure_power()) {
        let mut p: IntPoly = vec![BigInt::one()];
        for m in gens {
            let a = m.degree() as usize;
            let mut factor = vec![BigInt::zero(); a + 1];
            factor[0] = BigInt::one();
            factor[a] = -BigInt::one();
            p = poly_mul(&p, &factor);
        }
        return p;
    }
    // pivot: a variable occurring in a minimal generator of highest degree
    let pivot_gen = gens
        .iter()
        .filter(|m| !m.is_pure_power())
        .max_by_key(|m| m.degree())
        .expect("non-pure-power generator exists");
    let pivot = pivot_gen
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .max_by_key(|(_, &e)| e)
        .map(|(i, _)| i)
        .unwrap();
    let nvars = pivot_gen.nvars();
    let x = Monomial::var(nvars, pivot);
    // I + (x): generators with pivot dropped, plus x itself
    let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.exp(pivot) == 0).cloned().collect();
    plus.push(x.clone());
    let plus = minimal(plus);
    // I : x: pivot exponent reduced by one where present
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exp(pivot) > 0 {
                let mut e = m.exps().to_vec();
                e[pivot] -= 1;
                Monomial::new(e)
            } else {
                m.clone()
            }
        })
        .collect();
    let colon = minimal(colon);
    poly_add(&numerator_rec(&plus), &poly_shift(&numerator_rec(&colon), 1))
}

fn minimal(gens: Vec<Monomial>) -> Vec<Monomial> {
    let nvars = gens.first().map(|m| m.nvars()).unwrap_or(0);
    MonomialIdeal::new(nvars, gens).gens().to_vec()
}

/// Hilbert series of the quotient S/I from a reduced Gröbner basis of I,
/// via the lead-term ideal (Macaulay's principle).
pub fn quotient_series(gb: &GroebnerBasis) -> HilbertSeries {
    let nvars = gb.ring().nvars();
    let lt = lead_term_ideal(gb);
    HilbertSeries::new(hilbert_numerator(&lt, nvars), nvars)
}

/// Exact coefficients c_0..c_N of the power-series expansion.
pub fn expand(series: &HilbertSeries, n: usize) -> SeriesPrefix {
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for (i, c) in series.numerator.iter().enumerate() {
        if i <= n {
            coeffs[i] = c.clone();
        }
    }
    // multiply by 1/(1-t)^k == iterated prefix sums
    for _ in 0..series.denom_exp {
        for i in 1..=n {
            let prev = coeffs[i - 1].clone();
            coeffs[i] += prev;
        }
    }
    let stable_value = match reduce_form(series) {
        Ok((_, dim)) if dim == 0 => Some(BigInt::zero()),
        Ok((q, dim)) if dim == 1 => Some(poly_eval_one(&q)),
        Err(Error::ZeroModule) => Some(BigInt::zero()),
        _ => None,
    };
    SeriesPrefix { coeffs, stable_value }
}

/// Factor the maximal power of (1-t) out of the numerator: returns (Q, dim)
/// with series = Q/(1-t)^dim, Q(1) != 0. `dim` is the Krull dimension of the
/// module. The zero module is reported distinctly.
pub fn reduce_form(series: &HilbertSeries) -> Result<(IntPoly, usize)> {
    if series.numerator.is_empty() {
        return Err(Error::ZeroModule);
    }
    let mut q = series.numerator.clone();
    let mut dim = series.denom_exp;
    loop {
        match poly_div_one_minus_t(&q) {
            Some(next) if dim > 0 => {
                q = next;
                dim -= 1;
            }
            Some(next) => {
                // numerator still divisible but denominator exhausted: the
                // series is a polynomial times a positive power of (1-t),
                // which cannot happen for Hilbert series of quotients; keep
                // factoring anyway to maintain Q(1) != 0.
                q = next;
            }
            None => return Ok((q, dim)),
        }
    }
}

/// The Hilbert-Poincaré series prefix shared by all smooth hypersurfaces of
/// degree d in P^n: coefficients of (1 + t + ... + t^(d-2))^(n+1), length
/// T+1 where T = (n+1)(d-2).
pub fn smooth_series(n: usize, d: u32) -> SeriesPrefix {
    assert!(d >= 2 && n >= 1, "smooth series needs d >= 2, n >= 1");
    let ones: IntPoly = vec![BigInt::one(); (d - 1) as usize];
    let mut p: IntPoly = vec![BigInt::one()];
    for _ in 0..=n {
        p = poly_mul(&p, &ones);
    }
    let t = (n + 1) * (d as usize - 2);
    debug_assert_eq!(poly_degree(&p), Some(t));
    SeriesPrefix { coeffs: p, stable_value: Some(BigInt::zero()) }
}

/// Smooth reference series padded with zeros up to degree `n_bound`.
pub fn smooth_prefix(n: usize, d: u32, n_bound: usize) -> SeriesPrefix {
    let mut s = smooth_series(n, d);
    while s.coeffs.len() <= n_bound {
        s.coeffs.push(BigInt::zero());
    }
    s.coeffs.truncate(n_bound + 1);
    s
}
