//! Built-in corpus of worked examples with their published invariants, plus
//! the two degree-parameterized curve families.
//!
//! Expected values record only what the source states; engine-computed
//! baselines beyond that (for instance the exact positive sat values of the
//! `cd` family) are never mixed into `expected` and belong in a separate
//! derived-baselines file. The `suggested` block holds values the source
//! marks as conjectural: a deviation there is an anomaly to report, not a
//! failure.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::invariants::{InvariantReport, Threshold};

/// Published values for one corpus entry. `None` means "not stated".
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    pub tau: Option<u64>,
    pub ct: Option<Threshold>,
    pub st: Option<u32>,
    pub sat: Option<u32>,
    pub free: Option<bool>,
    pub reg: Option<u32>,
    /// The printed series prefix, verbatim; compared against the leading
    /// coefficients of the computed series.
    pub series_prefix: Option<Vec<u64>>,
    /// Stated relation between st and ct when the values themselves are not
    /// published (family entries).
    pub st_vs_ct: Option<Ordering>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub polynomial: String,
    pub variables: Vec<String>,
    pub expected: Expected,
    /// Conjectural values: deviations are anomalies, not failures.
    pub suggested: Expected,
    pub source: String,
}

/// The two published curve families, both defined for d >= 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyId {
    /// Free divisors y^(d-1)*z + x^d + x^2*y^(d-2).
    St,
    /// Non-free curves x^2*y^2*z^(d-4) + x^5*z^(d-5) + y^5*z^(d-5) + x^d + y^d
    /// with a single T_{2,5,5} singularity.
    Cd,
}

impl FamilyId {
    pub fn parse(s: &str) -> Option<FamilyId> {
        match s.to_ascii_lowercase().as_str() {
            "st" => Some(FamilyId::St),
            "cd" | "c_d" => Some(FamilyId::Cd),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: FamilyId,
    pub d_min: u32,
    pub d_max: u32,
}

impl FamilySpec {
    pub fn new(family: FamilyId, d_min: u32, d_max: u32) -> crate::error::Result<Self> {
        if d_min < 5 || d_max < d_min {
            return Err(crate::error::Error::Internal(format!(
                "family degree range must satisfy 5 <= d_min <= d_max, got {d_min}..{d_max}"
            )));
        }
        Ok(FamilySpec { family, d_min, d_max })
    }
}

pub fn st_family_poly(d: u32) -> String {
    assert!(d >= 5);
    format!("y^{}*z+x^{}+x^2*y^{}", d - 1, d, d - 2)
}

pub fn cd_family_poly(d: u32) -> String {
    assert!(d >= 5);
    format!(
        "x^2*y^2*z^{}+x^5*z^{}+y^5*z^{}+x^{}+y^{}",
        d - 4,
        d - 5,
        d - 5,
        d,
        d
    )
}

fn xyz_vars() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

fn entry(
    name: &str,
    polynomial: &str,
    expected: Expected,
    suggested: Expected,
    source: &str,
) -> CorpusEntry {
    CorpusEntry {
        name: name.to_string(),
        polynomial: polynomial.to_string(),
        variables: xyz_vars(),
        expected,
        suggested,
        source: source.to_string(),
    }
}

/// Expected values for one member of the ST family: always free; st/ct are
/// published as values for d = 5, 6 and as a strict relation for d > 6.
pub fn st_family_expected(d: u32) -> Expected {
    let mut e = Expected { free: Some(true), sat: Some(0), ..Expected::default() };
    match d {
        5 => {
            e.st = Some(4);
            e.ct = Some(Threshold::Finite(5));
            e.st_vs_ct = Some(Ordering::Less);
        }
        6 => {
            e.st = Some(6);
            e.ct = Some(Threshold::Finite(6));
            e.st_vs_ct = Some(Ordering::Equal);
        }
        _ => {
            e.st_vs_ct = Some(Ordering::Greater);
        }
    }
    e
}

/// Hard expectations for one member of the C_d family: tau = 10 and not
/// free. The pattern ct = st = 3d-9 is conjectural (verified for d <= 15).
pub fn cd_family_expected(d: u32) -> (Expected, Expected) {
    let hard = Expected { tau: Some(10), free: Some(false), ..Expected::default() };
    let soft = Expected {
        ct: Some(Threshold::Finite(3 * d - 9)),
        st: Some(3 * d - 9),
        st_vs_ct: Some(Ordering::Equal),
        ..Expected::default()
    };
    (hard, soft)
}

/// The full built-in corpus: every worked example, the two families for
/// 5 <= d <= 15.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    out.push(entry(
        "triangle",
        "x*y*z",
        Expected {
            tau: Some(3),
            ct: Some(Threshold::Finite(2)),
            st: Some(1),
            sat: Some(0),
            free: Some(true),
            series_prefix: Some(vec![1, 3]),
            ..Expected::default()
        },
        Expected::default(),
        "golden example: three generic lines",
    ));
    out.push(entry(
        "conic-tangent",
        "x*(x*z+y^2)",
        Expected {
            tau: Some(3),
            ct: Some(Threshold::Finite(2)),
            st: Some(1),
            sat: Some(0),
            free: Some(true),
            series_prefix: Some(vec![1, 3]),
            ..Expected::default()
        },
        Expected::default(),
        "golden example: smooth conic plus a tangent line, same invariants",
    ));
    out.push(entry(
        "a3-arrangement",
        "(x^2-y^2)*(y^2-z^2)*(x^2-z^2)",
        Expected {
            tau: Some(19),
            ct: Some(Threshold::Finite(6)),
            st: Some(6),
            sat: Some(0),
            free: Some(true),
            series_prefix: Some(vec![1, 3, 6, 10, 15, 18, 19]),
            ..Expected::default()
        },
        Expected::default(),
        "golden example: free line arrangement A3",
    ));
    out.push(entry(
        "xyz-a3",
        "x*y*z*(x^2-y^2)*(y^2-z^2)*(x^2-z^2)",
        Expected {
            tau: Some(49),
            ct: Some(Threshold::Finite(10)),
            st: Some(11),
            sat: Some(0),
            free: Some(true),
            series_prefix: Some(vec![1, 3, 6, 10, 15, 21, 28, 36, 42, 46, 48, 49]),
            ..Expected::default()
        },
        Expected::default(),
        "golden example: degree-9 free arrangement xyz*A3",
    ));
    out.push(entry(
        "simis-sextic",
        "4*(x^2+y^2+x*z)^3-27*(x^2+y^2)^2*z^2",
        Expected {
            tau: Some(19),
            ct: Some(Threshold::Finite(6)),
            st: Some(6),
            sat: Some(0),
            free: Some(true),
            reg: Some(6),
            series_prefix: Some(vec![1, 3, 6, 10, 15, 18, 19]),
            ..Expected::default()
        },
        Expected::default(),
        "golden example: free irreducible sextic",
    ));
    out.push(entry(
        "nodal-quintic",
        "x^4*y+x^3*y^2+y^5+x*y^2*z^2+(x^2+x*y+y^2)*z^3",
        Expected {
            tau: Some(1),
            ct: Some(Threshold::Finite(9)),
            st: Some(9),
            series_prefix: Some(vec![1, 3, 6, 10, 12, 12, 10, 6, 3, 1, 1]),
            ..Expected::default()
        },
        Expected::default(),
        "golden example: one-node quintic with ct = st = T",
    ));
    for d in 5..=15 {
        out.push(entry(
            &format!("st-d{d}"),
            &st_family_poly(d),
            st_family_expected(d),
            Expected::default(),
            "golden family: free divisors for every degree",
        ));
    }
    for d in 5..=15 {
        let (hard, soft) = cd_family_expected(d);
        out.push(entry(
            &format!("cd-d{d}"),
            &cd_family_poly(d),
            hard,
            soft,
            "golden family: non-free curves with constant tau = 10",
        ));
    }
    out
}

pub fn find_entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// Compare a computed report against expected values; returns one line per
/// mismatch (empty = pass).
pub fn check_expected(report: &InvariantReport, expected: &Expected) -> Vec<String> {
    let mut mismatches = Vec::new();
    if let Some(tau) = expected.tau {
        if report.tau != tau {
            mismatches.push(format!("tau: expected {tau}, got {}", report.tau));
        }
    }
    if let Some(ct) = expected.ct {
        if report.ct != ct {
            mismatches.push(format!("ct: expected {ct}, got {}", report.ct));
        }
    }
    if let Some(st) = expected.st {
        if report.st != st {
            mismatches.push(format!("st: expected {st}, got {}", report.st));
        }
    }
    if let Some(sat) = expected.sat {
        if report.sat != sat {
            mismatches.push(format!("sat: expected {sat}, got {}", report.sat));
        }
    }
    if let Some(free) = expected.free {
        if report.free != free {
            mismatches.push(format!("free: expected {free}, got {}", report.free));
        }
    }
    if let Some(reg) = expected.reg {
        if report.reg != Some(reg) {
            mismatches.push(format!("reg: expected {reg}, got {:?}", report.reg));
        }
    }
    if let Some(prefix) = &expected.series_prefix {
        if report.series.len() < prefix.len() || &report.series[..prefix.len()] != &prefix[..] {
            mismatches.push(format!(
                "series prefix: expected {:?}, got {:?}",
                prefix,
                &report.series[..prefix.len().min(report.series.len())]
            ));
        }
    }
    if let Some(rel) = expected.st_vs_ct {
        let actual = match report.ct {
            Threshold::Infinite => Ordering::Less,
            Threshold::Finite(ct) => report.st.cmp(&ct),
        };
        if actual != rel {
            mismatches.push(format!(
                "st vs ct: expected {rel:?}, got {actual:?} (st = {}, ct = {})",
                report.st, report.ct
            ));
        }
    }
    mismatches
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_complete_and_names_unique() {
        let c = corpus();
        // 6 individual examples + 11 ST + 11 C_d
        assert_eq!(c.len(), 6 + 11 + 11);
        let mut names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len(), "duplicate corpus names");
        for required in [
            "triangle",
            "conic-tangent",
            "a3-arrangement",
            "xyz-a3",
            "simis-sextic",
            "nodal-quintic",
            "st-d5",
            "st-d15",
            "cd-d5",
            "cd-d15",
        ] {
            assert!(c.iter().any(|e| e.name == required), "missing {required}");
        }
    }

    #[test]
    fn family_polynomials_parse_and_are_homogeneous() {
        for d in 5..=15 {
            for text in [st_family_poly(d), cd_family_poly(d)] {
                let f = crate::parse::parse_with_vars(&text, &["x", "y", "z"]).unwrap();
                assert!(f.is_homogeneous(), "{text}");
                assert_eq!(f.degree(), Some(d), "{text}");
            }
        }
    }

    #[test]
    fn every_corpus_polynomial_satisfies_the_euler_identity() {
        for e in corpus() {
            let f = crate::parse::parse_with_vars(&e.polynomial, &["x", "y", "z"]).unwrap();
            assert_eq!(crate::poly::euler_check(&f), Ok(true), "{}", e.name);
        }
    }

    #[test]
    fn check_expected_reports_mismatches() {
        let report = crate::invariants::full_report(
            &crate::parse::parse_with_vars("x*y*z", &["x", "y", "z"]).unwrap(),
        )
        .unwrap();
        let entry = find_entry("triangle").unwrap();
        assert!(check_expected(&report, &entry.expected).is_empty());
        let mut corrupted = entry.expected.clone();
        corrupted.tau = Some(4);
        let mismatches = check_expected(&report, &corrupted);
        assert_eq!(mismatches.len(), 1);
        assert!(mismatches[0].contains("tau"));
    }

    #[test]
    fn family_spec_validation() {
        assert!(FamilySpec::new(FamilyId::St, 5, 7).is_ok());
        assert!(FamilySpec::new(FamilyId::St, 4, 7).is_err());
        assert!(FamilySpec::new(FamilyId::Cd, 6, 5).is_err());
    }
}
