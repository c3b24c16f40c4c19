//! Command-line front end: compute invariants of a hypersurface, run the
//! built-in golden corpus, sweep the curve families, or run the self-test
//! suite.
//!
//! Exit codes: 0 ok, 1 check failure, 2 parse/input error, 3 non-isolated
//! singularities, 4 timeout.

use std::cmp::Ordering;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use milnor::corpus::{
    cd_family_expected, cd_family_poly, check_expected, corpus, find_entry, st_family_expected,
    st_family_poly, CorpusEntry, Expected, FamilyId, FamilySpec,
};
use milnor::invariants::{full_report_with, theorem1_check, InvariantReport, Threshold};
use milnor::{parse_with_vars, Error};

const EXIT_CHECK_FAILURE: u8 = 1;
const EXIT_PARSE_ERROR: u8 = 2;
const EXIT_NON_ISOLATED: u8 = 3;
const EXIT_TIMEOUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "milnor",
    about = "Exact Milnor-algebra invariants of projective hypersurfaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonFlags {
    /// Emit line-delimited JSON instead of the human-readable table.
    #[arg(long)]
    json: bool,
    /// Per-polynomial timeout in seconds.
    #[arg(long, default_value_t = 300)]
    timeout_secs: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant report of one polynomial.
    Compute {
        /// Comma-separated variable names, e.g. x,y,z.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        /// Polynomial text, e.g. "x*y*z".
        #[arg(long)]
        poly: String,
        /// Extend the reported series prefix beyond the default T+2.
        #[arg(long)]
        max_degree: Option<u32>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Run one named corpus entry and diff against its published values.
    Example {
        name: String,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Sweep a curve family over a degree range.
    Family {
        /// Family id: st or cd.
        family: String,
        /// Degree range, e.g. 5..15 (inclusive).
        #[arg(long, default_value = "5..15")]
        degrees: String,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Run the whole corpus plus the property suites.
    Selftest {
        /// Only run checks whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// List the names of the built-in corpus entries.
    ListExamples,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute { vars, poly, max_degree, common } => {
            run_compute(&vars, &poly, max_degree, &common)
        }
        Command::Example { name, common } => run_example(&name, &common),
        Command::Family { family, degrees, common } => run_family(&family, &degrees, &common),
        Command::Selftest { filter, common } => run_selftest(filter.as_deref(), &common),
        Command::ListExamples => {
            for e in corpus() {
                println!("{:<16} {}", e.name, e.source);
            }
            ExitCode::SUCCESS
        }
    }
}

enum Outcome {
    Report(Box<InvariantReport>),
    Timeout,
    Failed(Error),
}

/// Run the full report on a worker thread with a wall-clock timeout.
fn compute_with_timeout(
    vars: Vec<String>,
    poly: String,
    max_degree: Option<u32>,
    timeout: Duration,
) -> Result<Outcome, Error> {
    let f = parse_with_vars(&poly, &vars)?;
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(full_report_with(&f, max_degree));
    });
    match rx.recv_timeout(timeout) {
        Ok(Ok(report)) => Ok(Outcome::Report(Box::new(report))),
        Ok(Err(e)) => Ok(Outcome::Failed(e)),
        Err(_) => Ok(Outcome::Timeout),
    }
}

fn print_human(report: &InvariantReport) {
    println!("d      = {}", report.d);
    println!("n      = {}", report.n);
    println!("T      = {}", report.big_t);
    println!("tau    = {}", report.tau);
    println!("ct     = {}", report.ct);
    println!("st     = {}", report.st);
    println!("sat    = {}", report.sat);
    println!("free   = {}", report.free);
    match report.reg {
        Some(r) => println!("reg    = {r}"),
        None => println!("reg    = undefined (smooth)"),
    }
    println!("dim    = {}", report.krull_dim);
    let series: Vec<String> = report.series.iter().map(|c| c.to_string()).collect();
    println!("series = {}", series.join(", "));
    println!("Q(t)   = {}", report.numerator_q);
    let v = theorem1_check(report);
    if v.applicable {
        println!(
            "theorem: applicable (st < ct); d odd: {}, ct = (T+1)/2: {}, st = (T-1)/2: {}, free: {}",
            v.d_odd_ok,
            v.ct_formula_ok,
            v.st_formula_ok,
            v.freeness_ok.map_or("n/a".to_string(), |b| b.to_string()),
        );
    } else {
        println!("theorem: not applicable (st >= ct or smooth)");
    }
}

fn input_error_exit(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::NonIsolated { .. } => ExitCode::from(EXIT_NON_ISOLATED),
        _ => ExitCode::from(EXIT_PARSE_ERROR),
    }
}

fn run_compute(
    vars: &[String],
    poly: &str,
    max_degree: Option<u32>,
    common: &CommonFlags,
) -> ExitCode {
    let outcome = match compute_with_timeout(
        vars.to_vec(),
        poly.to_string(),
        max_degree,
        Duration::from_secs(common.timeout_secs),
    ) {
        Ok(o) => o,
        Err(e) => return input_error_exit(&e),
    };
    match outcome {
        Outcome::Report(report) => {
            if common.json {
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                print_human(&report);
            }
            ExitCode::SUCCESS
        }
        Outcome::Failed(e) => input_error_exit(&e),
        Outcome::Timeout => {
            eprintln!("error: computation exceeded {} s", common.timeout_secs);
            ExitCode::from(EXIT_TIMEOUT)
        }
    }
}

fn run_example(name: &str, common: &CommonFlags) -> ExitCode {
    let Some(entry) = find_entry(name) else {
        eprintln!("unknown example {name:?}; available:");
        for e in corpus() {
            eprintln!("  {}", e.name);
        }
        return ExitCode::from(EXIT_CHECK_FAILURE);
    };
    let outcome = match compute_with_timeout(
        entry.variables.clone(),
        entry.polynomial.clone(),
        None,
        Duration::from_secs(common.timeout_secs),
    ) {
        Ok(o) => o,
        Err(e) => return input_error_exit(&e),
    };
    let report = match outcome {
        Outcome::Report(r) => r,
        Outcome::Failed(e) => return input_error_exit(&e),
        Outcome::Timeout => {
            eprintln!("error: computation exceeded {} s", common.timeout_secs);
            return ExitCode::from(EXIT_TIMEOUT);
        }
    };
    let mismatches = check_expected(&report, &entry.expected);
    let anomalies = check_expected(&report, &entry.suggested);
    if common.json {
        let record = serde_json::json!({
            "name": entry.name,
            "report": &*report,
            "mismatches": mismatches,
            "anomalies": anomalies,
            "pass": mismatches.is_empty(),
        });
        println!("{record}");
    } else {
        println!("example {} ({})", entry.name, entry.source);
        print_human(&report);
        for m in &mismatches {
            println!("MISMATCH {m}");
        }
        for a in &anomalies {
            println!("ANOMALY {a}");
        }
        if mismatches.is_empty() {
            println!("PASS {}", entry.name);
        } else {
            println!("FAIL {}", entry.name);
        }
    }
    if mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILURE)
    }
}

fn parse_degree_range(s: &str) -> Option<(u32, u32)> {
    let (a, b) = s.split_once("..")?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn run_family(family: &str, degrees: &str, common: &CommonFlags) -> ExitCode {
    let Some(family) = FamilyId::parse(family) else {
        eprintln!("unknown family {family:?}; available: st, cd");
        return ExitCode::from(EXIT_PARSE_ERROR);
    };
    let Some((d_min, d_max)) = parse_degree_range(degrees) else {
        eprintln!("invalid degree range {degrees:?}; expected A..B");
        return ExitCode::from(EXIT_PARSE_ERROR);
    };
    let spec = match FamilySpec::new(family, d_min, d_max) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE_ERROR);
        }
    };
    // evaluate degrees concurrently; assemble output in degree order
    let timeout = Duration::from_secs(common.timeout_secs);
    let start = Instant::now();
    let mut receivers = Vec::new();
    for d in spec.d_min..=spec.d_max {
        let poly = match spec.family {
            FamilyId::St => st_family_poly(d),
            FamilyId::Cd => cd_family_poly(d),
        };
        let (tx, rx) = mpsc::channel();
        std::thread::spawn(move || {
            let result = parse_with_vars(&poly, &["x", "y", "z"])
                .and_then(|f| full_report_with(&f, None));
            let _ = tx.send(result);
        });
        receivers.push((d, rx));
    }
    let mut any_failure = false;
    let mut any_timeout = false;
    if !common.json {
        println!("{:>3} {:>6} {:>4} {:>4} {:>4} {:>6} {:>4}  flags", "d", "tau", "ct", "st", "sat", "free", "reg");
    }
    for (d, rx) in receivers {
        let remaining = timeout.saturating_sub(start.elapsed());
        let outcome = match rx.recv_timeout(remaining) {
            Ok(Ok(report)) => Outcome::Report(Box::new(report)),
            Ok(Err(e)) => Outcome::Failed(e),
            Err(_) => Outcome::Timeout,
        };
        match outcome {
            Outcome::Timeout => {
                any_timeout = true;
                if common.json {
                    println!("{}", serde_json::json!({"d": d, "timeout": true}));
                } else {
                    println!("{d:>3} timeout after {} s", common.timeout_secs);
                }
            }
            Outcome::Failed(e) => {
                any_failure = true;
                if common.json {
                    println!("{}", serde_json::json!({"d": d, "error": e.to_string()}));
                } else {
                    println!("{d:>3} error: {e}");
                }
            }
            Outcome::Report(report) => {
                let (hard, soft) = match spec.family {
                    FamilyId::St => (st_family_expected(d), Expected::default()),
                    FamilyId::Cd => cd_family_expected(d),
                };
                let mismatches = check_expected(&report, &hard);
                let anomalies = check_expected(&report, &soft);
                if !mismatches.is_empty() {
                    any_failure = true;
                }
                if common.json {
                    let record = serde_json::json!({
                        "d": d,
                        "report": &*report,
                        "mismatches": mismatches,
                        "anomalies": anomalies,
                    });
                    println!("{record}");
                } else {
                    let mut flags = String::new();
                    for m in &mismatches {
                        flags.push_str(&format!(" FAIL[{m}]"));
                    }
                    for a in &anomalies {
                        flags.push_str(&format!(" ANOMALY[{a}]"));
                    }
                    println!(
                        "{:>3} {:>6} {:>4} {:>4} {:>4} {:>6} {:>4} {}",
                        d,
                        report.tau,
                        report.ct.to_string(),
                        report.st,
                        report.sat,
                        report.free,
                        report.reg.map_or("-".to_string(), |r| r.to_string()),
                        flags
                    );
                }
            }
        }
    }
    if any_failure {
        ExitCode::from(EXIT_CHECK_FAILURE)
    } else if any_timeout {
        ExitCode::from(EXIT_TIMEOUT)
    } else {
        ExitCode::SUCCESS
    }
}

struct SelftestRunner<'a> {
    filter: Option<&'a str>,
    failures: usize,
    ran: usize,
}

impl<'a> SelftestRunner<'a> {
    fn check(&mut self, name: &str, run: impl FnOnce() -> Result<(), String>) {
        if let Some(f) = self.filter {
            if !name.contains(f) {
                return;
            }
        }
        self.ran += 1;
        match run() {
            Ok(()) => println!("PASS {name}"),
            Err(msg) => {
                self.failures += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
}

fn corpus_report(entry: &CorpusEntry) -> Result<InvariantReport, String> {
    let f = parse_with_vars(&entry.polynomial, &entry.variables)
        .map_err(|e| format!("parse: {e}"))?;
    full_report_with(&f, None).map_err(|e| format!("compute: {e}"))
}

fn run_selftest(filter: Option<&str>, _common: &CommonFlags) -> ExitCode {
    let mut r = SelftestRunner { filter, failures: 0, ran: 0 };

    // corpus entries against their published values
    for entry in corpus() {
        let name = format!("corpus::{}", entry.name);
        r.check(&name, || {
            let report = corpus_report(&entry)?;
            let mismatches = check_expected(&report, &entry.expected);
            if mismatches.is_empty() {
                Ok(())
            } else {
                Err(mismatches.join("; "))
            }
        });
    }

    // smooth reference series: symmetry and strict growth up to T/2
    r.check("property::smooth-series-symmetry-log-concavity", || {
        for n in 2..=3usize {
            for d in 3..=12u32 {
                let s = milnor::smooth_series(n, d);
                let t = (n + 1) * (d as usize - 2);
                for k in 0..=t {
                    if s.coeffs[k] != s.coeffs[t - k] {
                        return Err(format!("asymmetric at n={n} d={d} k={k}"));
                    }
                }
                for k in 1..=(t / 2) {
                    if s.coeffs[k - 1] >= s.coeffs[k] {
                        return Err(format!("not strictly increasing at n={n} d={d} k={k}"));
                    }
                }
            }
        }
        Ok(())
    });

    // the section-2 inequalities and the theorem checker on small corpus entries
    let small: Vec<CorpusEntry> = corpus()
        .into_iter()
        .filter(|e| {
            matches!(
                e.name.as_str(),
                "triangle" | "conic-tangent" | "a3-arrangement" | "simis-sextic"
                    | "nodal-quintic" | "st-d5" | "st-d6" | "st-d7" | "cd-d5" | "cd-d6"
            )
        })
        .collect();
    for entry in &small {
        let name = format!("property::inequalities::{}", entry.name);
        let entry = entry.clone();
        r.check(&name, move || {
            let report = corpus_report(&entry)?;
            let t = report.big_t;
            if !milnor::sat_bound_check(t, report.ct, report.st, report.sat) {
                return Err(format!("sat bound violated: sat={}", report.sat));
            }
            let lower = if report.d % 2 == 1 { (t - 1) / 2 } else { t / 2 };
            if report.st < lower {
                return Err(format!("st {} below lower bound {lower}", report.st));
            }
            let v = theorem1_check(&report);
            if v.applicable
                && !(v.d_odd_ok && v.ct_formula_ok && v.st_formula_ok
                    && v.freeness_ok.unwrap_or(true))
            {
                return Err(format!("theorem sub-check false: {v:?}"));
            }
            Ok(())
        });
    }

    // saturation idempotence on small Jacobian ideals
    for entry_name in ["triangle", "conic-tangent", "nodal-quintic", "cd-d5"] {
        let name = format!("property::saturation-idempotence::{entry_name}");
        r.check(&name, || {
            let entry = find_entry(entry_name).unwrap();
            let f = parse_with_vars(&entry.polynomial, &entry.variables)
                .map_err(|e| e.to_string())?;
            let (gb, _) = milnor::milnor_algebra(&f).map_err(|e| e.to_string())?;
            let sat = milnor::saturate_irrelevant(&gb).map_err(|e| e.to_string())?;
            let sat2 = milnor::saturate_irrelevant(&sat).map_err(|e| e.to_string())?;
            if milnor::ideal_equal(&sat, &sat2).map_err(|e| e.to_string())? {
                Ok(())
            } else {
                Err("saturation not idempotent".into())
            }
        });
    }

    // st vs ct relations across the ST family, plus theorem applicability at d=5
    r.check("property::st-family-threshold-pattern", || {
        for (d, expected) in [(5u32, Ordering::Less), (6, Ordering::Equal), (7, Ordering::Greater)]
        {
            let f = parse_with_vars(&st_family_poly(d), &["x", "y", "z"])
                .map_err(|e| e.to_string())?;
            let report = milnor::full_report(&f).map_err(|e| e.to_string())?;
            let Threshold::Finite(ct) = report.ct else {
                return Err(format!("d={d}: unexpected smooth verdict"));
            };
            if report.st.cmp(&ct) != expected {
                return Err(format!("d={d}: st={} ct={ct}", report.st));
            }
            if d == 5 && !theorem1_check(&report).applicable {
                return Err("d=5 should be in the theorem's setting".into());
            }
        }
        Ok(())
    });

    println!(
        "selftest: {} checks, {} failures",
        r.ran, r.failures
    );
    if r.failures > 0 {
        ExitCode::from(EXIT_CHECK_FAILURE)
    } else {
        ExitCode::SUCCESS
    }
}
