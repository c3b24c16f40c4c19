//! The headline invariants of a projective hypersurface with isolated
//! singularities: total Tjurina number, coincidence and stability thresholds,
//! saturation threshold, freeness and regularity, plus the checker for the
//! theorem relating st < ct to freeness.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_equal, GroebnerBasis, IdealGens};
use crate::hilbert::{
    expand, poly_degree, poly_eval_one, poly_to_string, quotient_series, reduce_form,
    smooth_prefix, HilbertSeries, SeriesPrefix,
};
use crate::poly::Polynomial;
use crate::ring::MonomialOrder;
use crate::saturation::saturation_result;

/// A threshold value that is infinite exactly in the smooth case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ThresholdRepr", try_from = "ThresholdRepr")]
pub enum Threshold {
    Finite(u32),
    Infinite,
}

impl Threshold {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Threshold::Finite(v) => Some(*v),
            Threshold::Infinite => None,
        }
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Threshold::Finite(v) => write!(f, "{v}"),
            Threshold::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Serialize, Deserialize, Clone)]
#[serde(untagged)]
enum ThresholdRepr {
    Num(u32),
    Text(String),
}

impl From<Threshold> for ThresholdRepr {
    fn from(t: Threshold) -> Self {
        match t {
            Threshold::Finite(v) => ThresholdRepr::Num(v),
            Threshold::Infinite => ThresholdRepr::Text("infinite".to_string()),
        }
    }
}

impl TryFrom<ThresholdRepr> for Threshold {
    type Error = String;
    fn try_from(r: ThresholdRepr) -> std::result::Result<Self, String> {
        match r {
            ThresholdRepr::Num(v) => Ok(Threshold::Finite(v)),
            ThresholdRepr::Text(s) if s == "infinite" => Ok(Threshold::Infinite),
            ThresholdRepr::Text(s) => Err(format!("invalid threshold {s:?}")),
        }
    }
}

/// Classification of S/J_f by Krull dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Isolation {
    /// Artinian Milnor algebra: the hypersurface is smooth.
    Smooth,
    /// Krull dimension 1: isolated singularities.
    Isolated,
    /// Krull dimension >= 2: the singular locus is positive-dimensional.
    NonIsolated(u32),
}

/// The artifact's main output record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub d: u32,
    pub n: u32,
    #[serde(rename = "T")]
    pub big_t: u32,
    pub tau: u64,
    pub ct: Threshold,
    pub st: u32,
    pub sat: u32,
    pub free: bool,
    /// Castelnuovo-Mumford regularity via max(T-ct, sat-1); undefined for
    /// smooth input.
    pub reg: Option<u32>,
    /// dim M(f)_k for 0 <= k <= T+2.
    pub series: Vec<u64>,
    #[serde(rename = "numerator_Q")]
    pub numerator_q: String,
    pub krull_dim: u32,
}

/// Sub-verdicts of the main theorem's checker. When `applicable` (st < ct),
/// every boolean must be true for any valid input; a false value indicates
/// an engine bug.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Verdict {
    pub applicable: bool,
    pub d_odd_ok: bool,
    pub ct_formula_ok: bool,
    pub st_formula_ok: bool,
    /// `None` means "not applicable" (n != 2).
    pub freeness_ok: Option<bool>,
}

/// Gröbner basis of the Jacobian ideal J_f and the exact Hilbert series of
/// the Milnor algebra M(f) = S/J_f.
pub fn milnor_algebra(f: &Polynomial) -> Result<(GroebnerBasis, HilbertSeries)> {
    if !f.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let d = f.degree();
    match d {
        Some(d) if d >= 3 => {}
        got => return Err(Error::DegreeTooSmall { min: 3, got }),
    }
    let ring = f.ring().clone();
    let nvars = ring.nvars();
    let mut partials = Vec::with_capacity(nvars);
    for i in 0..nvars {
        partials.push(f.partial_derivative(i)?);
    }
    let ideal = IdealGens::new(ring.clone(), partials)?;
    let gb = buchberger(&ideal, &MonomialOrder::degrevlex(nvars))?;
    let series = quotient_series(&gb);
    Ok((gb, series))
}

/// Classify by the Krull dimension read off the reduced rational form.
pub fn check_isolated(series: &HilbertSeries) -> Isolation {
    match reduce_form(series) {
        Err(_) => Isolation::Smooth, // zero module: vacuous, J_f = S cannot occur
        Ok((_, 0)) => Isolation::Smooth,
        Ok((_, 1)) => Isolation::Isolated,
        Ok((_, dim)) => Isolation::NonIsolated(dim as u32),
    }
}

/// Total Tjurina number tau = Q(1), the constant value of the Hilbert
/// polynomial of M(f). Requires the isolated case.
pub fn total_tjurina(series: &HilbertSeries) -> Result<u64> {
    let (q, dim) = reduce_form(series)?;
    if dim != 1 {
        return Err(Error::NotIsolated);
    }
    let v = poly_eval_one(&q);
    Ok(u64::try_from(&v).map_err(|_| Error::Internal(format!("negative tau {v}")))?)
}

/// Coincidence threshold: the largest q such that the actual series agrees
/// with the smooth reference in every degree <= q; infinite iff the prefixes
/// agree everywhere (smooth input).
pub fn coincidence_threshold(actual: &SeriesPrefix, smooth: &SeriesPrefix) -> Result<Threshold> {
    if actual.coeffs.len() != smooth.coeffs.len() || actual.coeffs.is_empty() {
        return Err(Error::PrefixTooShort {
            needed: smooth.coeffs.len().max(1),
            got: actual.coeffs.len(),
        });
    }
    for (k, (a, s)) in actual.coeffs.iter().zip(&smooth.coeffs).enumerate() {
        if a != s {
            if k == 0 {
                return Err(Error::Internal(
                    "series differ already in degree 0".into(),
                ));
            }
            return Ok(Threshold::Finite((k - 1) as u32));
        }
    }
    Ok(Threshold::Infinite)
}

/// Stability threshold: least q with dim M(f)_k = tau for all k >= q,
/// computed as deg Q where HP(M(f)) = Q/(1-t).
pub fn stability_threshold(series: &HilbertSeries, tau: u64) -> Result<u32> {
    let (q, dim) = reduce_form(series)?;
    if dim != 1 {
        return Err(Error::NotIsolated);
    }
    if poly_eval_one(&q) != BigInt::from(tau) {
        return Err(Error::Internal("tau does not match Q(1)".into()));
    }
    Ok(poly_degree(&q).expect("Q nonzero in the isolated case") as u32)
}

/// Independent route to st: scan the expanded prefix for the least q from
/// which every coefficient equals tau. The prefix must be long enough to
/// contain the stable range.
pub fn stability_threshold_by_scan(prefix: &SeriesPrefix, tau: u64) -> Result<u32> {
    let tau = BigInt::from(tau);
    let n = prefix.coeffs.len();
    if n == 0 || *prefix.coeffs.last().unwrap() != tau {
        return Err(Error::PrefixTooShort { needed: n + 1, got: n });
    }
    let mut q = n;
    while q > 0 && prefix.coeffs[q - 1] == tau {
        q -= 1;
    }
    Ok(q as u32)
}

/// Freeness via the saturation criterion: f = 0 is free iff J_f equals its
/// saturation. Smooth hypersurfaces are not free under this convention
/// (their Jacobian ideal is irrelevant-primary, its saturation is the unit
/// ideal).
pub fn freeness(f: &Polynomial) -> Result<bool> {
    let (gb, _) = milnor_algebra(f)?;
    let sat = crate::saturation::saturate_irrelevant(&gb)?;
    if sat.is_unit() {
        return Ok(false);
    }
    ideal_equal(&gb, &sat)
}

/// reg(M(f)) = max(T - ct, sat - 1). Defined only when ct is finite.
pub fn regularity(big_t: u32, ct: Threshold, sat: u32) -> Result<u32> {
    let ct = ct.finite().ok_or(Error::SmoothInput)?;
    if ct > big_t {
        return Err(Error::Internal(format!("ct {ct} exceeds T {big_t}")));
    }
    let a = (big_t - ct) as i64;
    let b = sat as i64 - 1;
    Ok(a.max(b) as u32)
}

/// The bound sat(J_f) <= max(T - ct, st). Must hold for every valid input.
pub fn sat_bound_check(big_t: u32, ct: Threshold, st: u32, sat: u32) -> bool {
    match ct.finite() {
        None => true, // smooth: nothing to check
        Some(ct) => {
            let bound = (big_t.saturating_sub(ct)).max(st);
            sat <= bound
        }
    }
}

/// Check the main theorem on a computed report: if st < ct then d is odd,
/// ct = (T+1)/2, st = (T-1)/2, and for n = 2 the curve is free.
pub fn theorem1_check(report: &InvariantReport) -> Theorem1Verdict {
    let applicable = match report.ct {
        Threshold::Finite(ct) => report.st < ct,
        Threshold::Infinite => false,
    };
    if !applicable {
        return Theorem1Verdict {
            applicable: false,
            d_odd_ok: true,
            ct_formula_ok: true,
            st_formula_ok: true,
            freeness_ok: if report.n == 2 { Some(true) } else { None },
        };
    }
    let ct = report.ct.finite().unwrap();
    Theorem1Verdict {
        applicable: true,
        d_odd_ok: report.d % 2 == 1,
        ct_formula_ok: 2 * ct == report.big_t + 1,
        st_formula_ok: 2 * report.st == report.big_t - 1,
        freeness_ok: if report.n == 2 { Some(report.free) } else { None },
    }
}

/// Compute every invariant of the report, with fail-fast internal
/// cross-checks (two independent routes each for tau and st, freeness vs the
/// saturation threshold, the sat bound and the theorem checker).
pub fn full_report(f: &Polynomial) -> Result<InvariantReport> {
    full_report_with(f, None)
}

/// Like [`full_report`], but the reported series prefix can be extended past
/// the default bound T+2 (all internal logic still uses T+2).
pub fn full_report_with(f: &Polynomial, series_bound: Option<u32>) -> Result<InvariantReport> {
    let (gb, series) = milnor_algebra(f)?;
    let d = f.degree().expect("nonzero by milnor_algebra");
    let n = (f.ring().nvars() - 1) as u32;
    let big_t = (n + 1) * (d - 2);
    let bound = (big_t + 2) as usize;
    let (q, krull_dim) = reduce_form(&series)?;
    if krull_dim >= 2 {
        return Err(Error::NonIsolated { dim: krull_dim as u32 });
    }
    let prefix = expand(&series, bound);
    let out_bound = bound.max(series_bound.unwrap_or(0) as usize);
    let out_series = if out_bound == bound {
        prefix.coeffs_u64()
    } else {
        expand(&series, out_bound).coeffs_u64()
    };
    let smooth = smooth_prefix(n as usize, d, bound);
    let satres = saturation_result(&gb, big_t + 2)?;
    let sat = satres.sat_threshold;
    let is_free = sat == 0;
    if ideal_equal(&gb, &satres.saturated).unwrap_or(false) != is_free {
        return Err(Error::Internal(
            "sat threshold and saturated-ideal equality disagree on freeness".into(),
        ));
    }

    if krull_dim == 0 {
        // smooth case: ct infinite by Definition 1.1(i), st = T+1 (the least
        // q with dim M(f)_k = tau = 0 for all k >= q, since dim M(f)_T = 1),
        // freeness false.
        if coincidence_threshold(&prefix, &smooth)? != Threshold::Infinite {
            return Err(Error::Internal(
                "artinian Milnor algebra with a non-smooth series".into(),
            ));
        }
        return Ok(InvariantReport {
            d,
            n,
            big_t,
            tau: 0,
            ct: Threshold::Infinite,
            st: big_t + 1,
            sat,
            free: false,
            reg: None,
            series: out_series,
            numerator_q: poly_to_string(&q),
            krull_dim: 0,
        });
    }

    let tau = total_tjurina(&series)?;
    let ct = coincidence_threshold(&prefix, &smooth)?;
    if ct == Threshold::Infinite {
        return Err(Error::Internal(
            "singular input with a smooth series prefix".into(),
        ));
    }
    let st = stability_threshold(&series, tau)?;
    let st_scan = stability_threshold_by_scan(&prefix, tau)?;
    if st != st_scan {
        return Err(Error::Internal(format!(
            "st via deg Q ({st}) disagrees with prefix scan ({st_scan})"
        )));
    }
    // tau cross-check: stable dimension of S/J_f-saturated in degree T+2
    let sat_series = quotient_series(&satres.saturated);
    let sat_prefix = expand(&sat_series, bound);
    if sat_prefix.coeffs[bound] != BigInt::from(tau) {
        return Err(Error::Internal(format!(
            "tau {} disagrees with the stable dimension {} of the saturated quotient",
            tau, sat_prefix.coeffs[bound]
        )));
    }
    let reg = regularity(big_t, ct, sat)?;
    if !sat_bound_check(big_t, ct, st, sat) {
        return Err(Error::Internal(format!(
            "saturation bound violated: sat {sat} > max(T-ct, st)"
        )));
    }
    let report = InvariantReport {
        d,
        n,
        big_t,
        tau,
        ct,
        st,
        sat,
        free: is_free,
        reg: Some(reg),
        series: out_series,
        numerator_q: poly_to_string(&q),
        krull_dim: 1,
    };
    let verdict = theorem1_check(&report);
    if verdict.applicable
        && !(verdict.d_odd_ok
            && verdict.ct_formula_ok
            && verdict.st_formula_ok
            && verdict.freeness_ok.unwrap_or(true))
    {
        return Err(Error::Internal(format!(
            "theorem checker failed on a valid input: {verdict:?}"
        )));
    }
    Ok(report)
}
