//! End-to-end acceptance gate. Each criterion is one test that prints a
//! single PASS/FAIL line (visible with --nocapture) and asserts both the
//! values and its runtime budget.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use milnor::corpus::{cd_family_poly, corpus, find_entry, st_family_poly};
use milnor::{
    expand, full_report, milnor_algebra, parse_with_vars, quotient_series, reduce_form,
    sat_bound_check, saturate_irrelevant, smooth_series, stability_threshold_by_scan,
    theorem1_check, InvariantReport, Threshold,
};

struct Criterion {
    name: &'static str,
    budget: Duration,
    start: Instant,
}

impl Criterion {
    fn new(name: &'static str, budget_secs: u64) -> Self {
        Criterion { name, budget: Duration::from_secs(budget_secs), start: Instant::now() }
    }

    fn finish(self, result: Result<(), String>) {
        let elapsed = self.start.elapsed();
        match &result {
            Ok(()) if elapsed <= self.budget => {
                println!("PASS {} ({:.2?})", self.name, elapsed);
            }
            Ok(()) => {
                println!(
                    "FAIL {}: over budget ({:.2?} > {:.2?})",
                    self.name, elapsed, self.budget
                );
                panic!("{}: runtime budget exceeded", self.name);
            }
            Err(msg) => {
                println!("FAIL {}: {msg}", self.name);
                panic!("{}: {msg}", self.name);
            }
        }
    }
}

fn report(poly: &str) -> Result<InvariantReport, String> {
    let f = parse_with_vars(poly, &["x", "y", "z"]).map_err(|e| e.to_string())?;
    full_report(&f).map_err(|e| e.to_string())
}

fn eq<T: std::fmt::Debug + PartialEq>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

#[test]
fn criterion_1_triangle_and_conic_tangent() {
    let c = Criterion::new("criterion 1 (xyz and conic plus tangent)", 2);
    c.finish((|| {
        for poly in ["x*y*z", "x*(x*z+y^2)"] {
            let t0 = Instant::now();
            let r = report(poly)?;
            if t0.elapsed() > Duration::from_secs(1) {
                return Err(format!("{poly}: single run over 1 s"));
            }
            eq("series prefix", r.series[..4].to_vec(), vec![1, 3, 3, 3])?;
            eq("ct", r.ct, Threshold::Finite(2))?;
            eq("st", r.st, 1)?;
            eq("sat", r.sat, 0)?;
            eq("free", r.free, true)?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_2_line_arrangements() {
    let c = Criterion::new("criterion 2 (A3 and xyz*A3 arrangements)", 30);
    c.finish((|| {
        let r = report("(x^2-y^2)*(y^2-z^2)*(x^2-z^2)")?;
        eq("A3 series", r.series[..7].to_vec(), vec![1, 3, 6, 10, 15, 18, 19])?;
        eq("A3 tau", r.tau, 19)?;
        eq("A3 ct", r.ct, Threshold::Finite(6))?;
        eq("A3 st", r.st, 6)?;
        eq("A3 free", r.free, true)?;

        let r = report("x*y*z*(x^2-y^2)*(y^2-z^2)*(x^2-z^2)")?;
        eq(
            "xyz*A3 12-coefficient prefix",
            r.series[..12].to_vec(),
            vec![1, 3, 6, 10, 15, 21, 28, 36, 42, 46, 48, 49],
        )?;
        eq("xyz*A3 tau", r.tau, 49)?;
        eq("xyz*A3 ct", r.ct, Threshold::Finite(10))?;
        eq("xyz*A3 st", r.st, 11)?;
        eq("xyz*A3 free", r.free, true)?;
        Ok(())
    })());
}

#[test]
fn criterion_3_st_family_sweep() {
    let c = Criterion::new("criterion 3 (free-divisor family d=5..15)", 600);
    c.finish((|| {
        for d in 5..=15u32 {
            let r = report(&st_family_poly(d))?;
            eq(&format!("d={d} free"), r.free, true)?;
            eq(&format!("d={d} sat"), r.sat, 0)?;
            let ct = r.ct.finite().ok_or(format!("d={d}: ct infinite"))?;
            match d {
                5 => {
                    eq("d=5 st", r.st, 4)?;
                    eq("d=5 ct", ct, 5)?;
                    let v = theorem1_check(&r);
                    if !(v.applicable
                        && v.d_odd_ok
                        && v.ct_formula_ok
                        && v.st_formula_ok
                        && v.freeness_ok == Some(true))
                    {
                        return Err(format!("d=5 theorem checker: {v:?}"));
                    }
                }
                6 => {
                    eq("d=6 st", r.st, 6)?;
                    eq("d=6 ct", ct, 6)?;
                }
                _ => {
                    if r.st <= ct {
                        return Err(format!("d={d}: expected st > ct, got st={} ct={ct}", r.st));
                    }
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_4_simis_sextic() {
    let c = Criterion::new("criterion 4 (free irreducible sextic)", 30);
    c.finish((|| {
        let r = report("4*(x^2+y^2+x*z)^3-27*(x^2+y^2)^2*z^2")?;
        eq("tau", r.tau, 19)?;
        eq("ct", r.ct, Threshold::Finite(6))?;
        eq("st", r.st, 6)?;
        eq("free", r.free, true)?;
        eq("series prefix", r.series[..7].to_vec(), vec![1, 3, 6, 10, 15, 18, 19])?;
        eq("reg", r.reg, Some(6))?;
        Ok(())
    })());
}

#[test]
fn criterion_5_cd_family_sweep() {
    let c = Criterion::new("criterion 5 (non-free family d=5..15)", 900);
    c.finish((|| {
        let mut anomalies = Vec::new();
        for d in 5..=15u32 {
            let r = report(&cd_family_poly(d))?;
            eq(&format!("d={d} tau"), r.tau, 10)?;
            eq(&format!("d={d} free"), r.free, false)?;
            if r.sat == 0 {
                return Err(format!("d={d}: not free but sat = 0"));
            }
            let want = Threshold::Finite(3 * d - 9);
            if r.ct != want || r.st != 3 * d - 9 {
                anomalies.push(format!("d={d}: ct={} st={} (pattern 3d-9={})", r.ct, r.st, 3 * d - 9));
            }
        }
        for a in &anomalies {
            println!("ANOMALY criterion 5: {a}");
        }
        eq("pattern ct=st=3d-9 deviations", anomalies.len(), 0)?;
        Ok(())
    })());
}

#[test]
fn criterion_6_nodal_quintic() {
    let c = Criterion::new("criterion 6 (one-node quintic)", 5);
    c.finish((|| {
        let r = report("x^4*y+x^3*y^2+y^5+x*y^2*z^2+(x^2+x*y+y^2)*z^3")?;
        eq(
            "series",
            r.series.clone(),
            vec![1, 3, 6, 10, 12, 12, 10, 6, 3, 1, 1, 1],
        )?;
        eq("tau", r.tau, 1)?;
        eq("T", r.big_t, 9)?;
        eq("ct", r.ct, Threshold::Finite(9))?;
        eq("st", r.st, 9)?;
        Ok(())
    })());
}

#[test]
fn criterion_7_property_suite() {
    let c = Criterion::new("criterion 7 (property suite)", 600);
    c.finish((|| {
        // smooth reference series: symmetric, strictly increasing up to T/2
        for n in 2..=3usize {
            for d in 3..=12u32 {
                let s = smooth_series(n, d);
                let t = (n + 1) * (d as usize - 2);
                eq(&format!("smooth n={n} d={d} length"), s.coeffs.len(), t + 1)?;
                for k in 0..=t {
                    if s.coeffs[k] != s.coeffs[t - k] {
                        return Err(format!("smooth n={n} d={d}: asymmetric at k={k}"));
                    }
                }
                for k in 1..=(t / 2) {
                    if s.coeffs[k - 1] >= s.coeffs[k] {
                        return Err(format!(
                            "smooth n={n} d={d}: not strictly increasing at k={k}"
                        ));
                    }
                }
            }
        }
        // corpus-wide inequalities and the theorem checker
        for entry in corpus() {
            let f = parse_with_vars(&entry.polynomial, &entry.variables)
                .map_err(|e| format!("{}: {e}", entry.name))?;
            let r = full_report(&f).map_err(|e| format!("{}: {e}", entry.name))?;
            if !sat_bound_check(r.big_t, r.ct, r.st, r.sat) {
                return Err(format!("{}: sat bound violated (sat={})", entry.name, r.sat));
            }
            let lower = if r.d % 2 == 1 { (r.big_t - 1) / 2 } else { r.big_t / 2 };
            if r.st < lower {
                return Err(format!("{}: st={} below lower bound {lower}", entry.name, r.st));
            }
            let v = theorem1_check(&r);
            if !(v.d_odd_ok && v.ct_formula_ok && v.st_formula_ok && v.freeness_ok.unwrap_or(true))
            {
                return Err(format!("{}: false theorem sub-check {v:?}", entry.name));
            }
        }
        Ok(())
    })());
}

/// Brute-force oracle: count the monomials of each degree that no Gröbner
/// lead monomial divides. Independent of the numerator recursion.
fn standard_monomial_counts(leads: &[Vec<u32>], nvars: usize, bound: usize) -> Vec<u64> {
    fn rec(
        leads: &[Vec<u32>],
        exps: &mut Vec<u32>,
        var: usize,
        remaining: u32,
        counts: &mut [u64],
        degree: u32,
    ) {
        if var + 1 == exps.capacity() {
            exps.push(remaining);
            let total = degree + remaining;
            let standard = !leads
                .iter()
                .any(|m| m.iter().zip(exps.iter()).all(|(a, b)| a <= b));
            if standard {
                counts[total as usize] += 1;
            }
            exps.pop();
            return;
        }
        for e in 0..=remaining {
            exps.push(e);
            rec(leads, exps, var + 1, remaining - e, counts, degree + e);
            exps.pop();
        }
    }
    let mut counts = vec![0u64; bound + 1];
    for deg in 0..=bound as u32 {
        let mut exps = Vec::with_capacity(nvars);
        rec(leads, &mut exps, 0, deg, &mut counts, 0);
    }
    counts
}

#[test]
fn criterion_8_oracle_equivalence() {
    let c = Criterion::new("criterion 8 (brute-force oracle equivalence)", 900);
    c.finish((|| {
        for entry in corpus() {
            let f = parse_with_vars(&entry.polynomial, &entry.variables)
                .map_err(|e| format!("{}: {e}", entry.name))?;
            let (gb, series) = milnor_algebra(&f).map_err(|e| format!("{}: {e}", entry.name))?;
            let d = f.degree().unwrap();
            let n = entry.variables.len() as u32 - 1;
            let bound = ((n + 1) * (d - 2) + 2) as usize;

            // series dimensions vs direct standard-monomial counting
            let leads: Vec<Vec<u32>> = gb
                .lead_monomials()
                .iter()
                .map(|m| m.exps().to_vec())
                .collect();
            let counted = standard_monomial_counts(&leads, entry.variables.len(), bound);
            let expanded = expand(&series, bound).coeffs_u64();
            if counted != expanded {
                return Err(format!(
                    "{}: standard-monomial counts {:?} differ from series {:?}",
                    entry.name, counted, expanded
                ));
            }

            // tau via Q(1) vs the stable dimension of the saturated quotient
            let (q, dim) = reduce_form(&series).map_err(|e| format!("{}: {e}", entry.name))?;
            if dim != 1 {
                return Err(format!("{}: unexpected Krull dimension {dim}", entry.name));
            }
            let tau: BigInt = q.iter().sum();
            let sat = saturate_irrelevant(&gb).map_err(|e| format!("{}: {e}", entry.name))?;
            let sat_prefix = expand(&quotient_series(&sat), bound);
            if sat_prefix.coeffs[bound] != tau {
                return Err(format!(
                    "{}: tau {tau} vs stable saturated dimension {}",
                    entry.name, sat_prefix.coeffs[bound]
                ));
            }

            // st via deg Q vs prefix scan
            let st_deg = (q.len() - 1) as u32;
            let tau_u64 = u64::try_from(&tau).map_err(|_| format!("{}: negative tau", entry.name))?;
            let st_scan = stability_threshold_by_scan(&expand(&series, bound), tau_u64)
                .map_err(|e| format!("{}: {e}", entry.name))?;
            if st_deg != st_scan {
                return Err(format!("{}: st {st_deg} vs scan {st_scan}", entry.name));
            }
        }
        Ok(())
    })());
}

#[test]
fn corpus_expected_values_all_match() {
    // every corpus entry against its published values, one shot
    for entry in corpus() {
        let f = parse_with_vars(&entry.polynomial, &entry.variables).unwrap();
        let r = full_report(&f).unwrap();
        let mismatches = milnor::corpus::check_expected(&r, &entry.expected);
        assert!(mismatches.is_empty(), "{}: {}", entry.name, mismatches.join("; "));
    }
    // explicit relation checks for the family entries
    let r5 = full_report(&parse_with_vars(&st_family_poly(5), &["x", "y", "z"]).unwrap()).unwrap();
    assert_eq!(r5.st.cmp(&r5.ct.finite().unwrap()), Ordering::Less);
    assert!(find_entry("st-d15").is_some() && find_entry("cd-d15").is_some());
}
