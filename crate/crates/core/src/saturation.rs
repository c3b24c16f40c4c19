//! Saturation with respect to the irrelevant maximal ideal, the saturation
//! defect module SD(I) = Î/I and the saturation threshold sat(I).
//!
//! Strategy: Î = ∩_i (I : x_i^∞). Each single-variable saturation uses the
//! degrevlex order with that variable last (basis elements then split off
//! their maximal x_i power); intersections use elimination of an auxiliary
//! variable s from s*I + (1-s)*J under a block order with s strictly greater
//! than every ring variable.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_raw, GroebnerBasis};
use crate::hilbert::{
    poly_div_one_minus_t, poly_sub, quotient_series, IntPoly,
};
use crate::poly::Polynomial;
use crate::ring::{Monomial, MonomialOrder, Ring};

/// Saturation data of a homogeneous ideal.
#[derive(Debug, Clone)]
pub struct SaturationResult {
    pub saturated: GroebnerBasis,
    pub sat_threshold: u32,
    /// (degree k, dim SD(I)_k) for 0 <= k <= the requested bound.
    pub defect_dims: Vec<(u32, u64)>,
}

/// Split the maximal power of variable `i` out of `p`: returns (e, q) with
/// p = x_i^e * q.
fn divide_out_var(p: &Polynomial, i: usize) -> (u32, Polynomial) {
    let e = p.terms().iter().map(|(m, _)| m.exp(i)).min().unwrap_or(0);
    if e == 0 {
        return (0, p.clone());
    }
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps[i] -= e;
            (Monomial::new(exps), c.clone())
        })
        .collect();
    (e, Polynomial::from_terms(p.ring().clone(), terms))
}

/// Reduced Gröbner basis (canonical degrevlex) of I : x_i^infinity.
///
/// For a homogeneous ideal and a degrevlex order with x_i last, dividing
/// every basis element by its maximal x_i power yields generators of the
/// colon ideal; the loop repeats until the division step is a no-op.
pub fn colon_var_saturate(gb: &GroebnerBasis, i: usize) -> Result<GroebnerBasis> {
    let ring = gb.ring().clone();
    let nvars = ring.nvars();
    if i >= nvars {
        return Err(Error::IndexOutOfRange { index: i, nvars });
    }
    let order = MonomialOrder::degrevlex_with_last(nvars, i)?;
    let mut gens: Vec<Polynomial> = gb.elements().to_vec();
    loop {
        let basis = buchberger_raw(&ring, &gens, &order);
        let mut stripped_any = false;
        let divided: Vec<Polynomial> = basis
            .elements()
            .iter()
            .map(|g| {
                let (e, q) = divide_out_var(g, i);
                if e > 0 {
                    stripped_any = true;
                }
                q
            })
            .collect();
        if !stripped_any {
            let canonical = MonomialOrder::degrevlex(nvars);
            return Ok(buchberger_raw(&ring, basis.elements(), &canonical));
        }
        gens = divided;
    }
}

fn aux_var_name(ring: &Ring) -> String {
    let mut name = "s".to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

fn extend_to(p: &Polynomial, ext: &Arc<Ring>) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps.push(0);
            (Monomial::new(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(ext.clone(), terms)
}

fn restrict_to(p: &Polynomial, base: &Arc<Ring>, aux: usize) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            debug_assert_eq!(m.exp(aux), 0);
            let mut exps = m.exps().to_vec();
            exps.remove(aux);
            (Monomial::new(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(base.clone(), terms)
}

/// Reduced Gröbner basis (canonical degrevlex) of I ∩ J, by eliminating an
/// auxiliary variable s from s*I + (1-s)*J.
pub fn intersect(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<GroebnerBasis> {
    if a.ring().vars() != b.ring().vars() {
        return Err(Error::MismatchedRings(format!(
            "{:?} vs {:?}",
            a.ring().vars(),
            b.ring().vars()
        )));
    }
    let ring = a.ring().clone();
    let nvars = ring.nvars();
    let canonical = MonomialOrder::degrevlex(nvars);
    if a.is_unit() {
        return Ok(buchberger_raw(&ring, b.elements(), &canonical));
    }
    if b.is_unit() {
        return Ok(buchberger_raw(&ring, a.elements(), &canonical));
    }
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(buchberger_raw(&ring, &[], &canonical));
    }
    let mut ext_vars: Vec<String> = ring.vars().to_vec();
    ext_vars.push(aux_var_name(&ring));
    let ext = Ring::new(&ext_vars)?;
    let aux = nvars;
    let s = Polynomial::var(ext.clone(), aux)?;
    let one = Polynomial::constant(ext.clone(), BigRational::one());
    let one_minus_s = one.sub(&s)?;
    let mut gens = Vec::with_capacity(a.elements().len() + b.elements().len());
    for f in a.elements() {
        gens.push(s.mul(&extend_to(f, &ext))?);
    }
    for g in b.elements() {
        gens.push(one_minus_s.mul(&extend_to(g, &ext))?);
    }
    let order = MonomialOrder::elimination(nvars + 1, aux)?;
    let gb = buchberger_raw(&ext, &gens, &order);
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exp(aux) == 0))
        .map(|g| restrict_to(g, &ring, aux))
        .collect();
    Ok(buchberger_raw(&ring, &kept, &canonical))
}

/// Reduced Gröbner basis of Î = I : (x_0,...,x_n)^infinity.
///
/// The degenerate outcome Î = S (empty singular scheme, i.e. an
/// irrelevant-primary input) is returned as the unit-ideal basis, not an
/// error; the invariants layer maps it to the smooth verdict.
pub fn saturate_irrelevant(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let ring = gb.ring().clone();
    let nvars = ring.nvars();
    let canonical = MonomialOrder::degrevlex(nvars);
    if gb.is_zero_ideal() {
        return Ok(buchberger_raw(&ring, &[], &canonical));
    }
    let mut result: Option<GroebnerBasis> = None;
    for i in 0..nvars {
        let sat_i = colon_var_saturate(gb, i)?;
        if sat_i.is_unit() {
            continue;
        }
        result = Some(match result {
            None => sat_i,
            Some(acc) => intersect(&acc, &sat_i)?,
        });
    }
    match result {
        Some(r) => Ok(r),
        None => {
            // every I : x_i^infinity is the unit ideal
            let one = Polynomial::constant(ring.clone(), BigRational::one());
            Ok(buchberger_raw(&ring, &[one], &canonical))
        }
    }
}

/// The graded dimension differences dim Î_k - dim I_k as a polynomial in t.
/// Exact: the difference of the two quotient numerators must be divisible by
/// (1-t)^(n+1), otherwise the inputs were not in an inclusion relation.
fn defect_polynomial(i: &GroebnerBasis, isat: &GroebnerBasis) -> Result<IntPoly> {
    let nvars = i.ring().nvars();
    let si = quotient_series(i);
    let ss = quotient_series(isat);
    let mut diff = poly_sub(&si.numerator, &ss.numerator);
    for _ in 0..nvars {
        diff = poly_div_one_minus_t(&diff).ok_or_else(|| {
            Error::Internal(
                "saturation defect series is not a polynomial; inputs not in inclusion relation"
                    .into(),
            )
        })?;
    }
    for c in &diff {
        if c.is_negative() {
            return Err(Error::Internal(
                "negative saturation defect dimension".into(),
            ));
        }
    }
    Ok(diff)
}

/// The saturation threshold sat(I): least q with dim I_k = dim Î_k for all
/// k >= q, computed from the exact rational series.
pub fn sat_threshold(i: &GroebnerBasis, isat: &GroebnerBasis) -> Result<u32> {
    let d = defect_polynomial(i, isat)?;
    Ok(match d.len() {
        0 => 0,
        n => n as u32, // 1 + degree
    })
}

/// dim SD(I)_k = dim Î_k - dim I_k for 0 <= k <= bound.
pub fn defect_dims(i: &GroebnerBasis, isat: &GroebnerBasis, bound: u32) -> Result<Vec<(u32, u64)>> {
    let d = defect_polynomial(i, isat)?;
    Ok((0..=bound)
        .map(|k| {
            let c = d
                .get(k as usize)
                .map(|c| u64::try_from(c).expect("nonnegative"))
                .unwrap_or(0);
            (k, c)
        })
        .collect())
}

/// Full saturation computation for a proper homogeneous ideal.
pub fn saturation_result(gb: &GroebnerBasis, bound: u32) -> Result<SaturationResult> {
    let saturated = saturate_irrelevant(gb)?;
    let sat = sat_threshold(gb, &saturated)?;
    let dims = defect_dims(gb, &saturated, bound)?;
    // consistency: sat equals the least q with all defect dims 0 from q on
    if let Some((k, _)) = dims.iter().rev().find(|(_, d)| *d > 0) {
        if sat != k + 1 && (k + 1) <= bound {
            return Err(Error::Internal(format!(
                "sat threshold {sat} disagrees with defect dims (last nonzero at {k})"
            )));
        }
    }
    Ok(SaturationResult { saturated, sat_threshold: sat, defect_dims: dims })
}
