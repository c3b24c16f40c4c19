//! Reduced Gröbner bases of ideals via Buchberger's algorithm.
//!
//! The public entry point `buchberger` accepts homogeneous ideals only (every
//! ideal in this artifact is homogeneous); the crate-internal `buchberger_raw`
//! skips that check, which the saturation module needs for the auxiliary
//! elimination ideal `s*I + (1-s)*J`.
//!
//! Internally the basis is kept over the integers: after each reduction the
//! polynomial is divided by its integer content, which bounds intermediate
//! coefficient blow-up. Only the final reduced basis is normalized to monic
//! rational polynomials.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{Monomial, MonomialOrder, Ring};

/// Generators of a homogeneous ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGens {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
}

impl IdealGens {
    /// Zero generators are dropped; non-homogeneous generators are rejected.
    pub fn new(ring: Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring().vars() != ring.vars() {
                return Err(Error::MismatchedRings(format!(
                    "generator ring {:?} vs ideal ring {:?}",
                    g.ring().vars(),
                    ring.vars()
                )));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous);
            }
            kept.push(g);
        }
        Ok(IdealGens { ring, gens: kept })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }
}

/// A reduced Gröbner basis: monic elements, lead monomials an antichain, no
/// monomial of any element divisible by another element's lead. Elements are
/// sorted ascending by lead monomial, so equal ideals (in the same order)
/// yield identical `elements` lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// True iff the basis generates the unit ideal (contains a constant).
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_term(&self.order).expect("nonzero element").0.clone())
            .collect()
    }
}

/// A monomial ideal presented by its minimal generators (an antichain under
/// divisibility).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let gens = minimalize(gens);
        MonomialIdeal { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

/// Drop generators divisible by another generator; sort for determinism.
fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens;
    sorted.sort_by_key(|m| (m.degree(), m.exps().to_vec()));
    sorted.dedup();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Lead-term (initial) ideal of a reduced basis.
pub fn lead_term_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.ring.nvars(), gb.lead_monomials())
}

// ---------------------------------------------------------------------------
// Integer polynomial core
// ---------------------------------------------------------------------------

type ITerm = (Monomial, BigInt);

/// Nonzero polynomial over Z, terms strictly descending in the active order,
/// coefficients with content 1 and positive lead.
#[derive(Debug, Clone)]
struct IPoly {
    terms: Vec<ITerm>,
}

impl IPoly {
    fn lead(&self) -> &ITerm {
        &self.terms[0]
    }
}

/// Divide by the integer content and normalize the lead sign to positive.
fn make_primitive(terms: &mut Vec<ITerm>) {
    if terms.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in terms.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `ca * a + cb * (shift * b)` with both inputs sorted descending; result
/// sorted descending with no zero coefficients.
fn linear_combine(
    order: &MonomialOrder,
    a: &[ITerm],
    ca: &BigInt,
    b: &[ITerm],
    cb: &BigInt,
    shift: &Monomial,
) -> Vec<ITerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(shift);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push((a[i].0.clone(), &a[i].1 * ca));
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, &b[j].1 * cb));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 * ca + &b[j].1 * cb;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &a[i..] {
        out.push((t.0.clone(), &t.1 * ca));
    }
    for t in &b[j..] {
        out.push((t.0.mul(shift), &t.1 * cb));
    }
    out
}

/// Full normal form of `terms` modulo `basis` (every term irreducible), up
/// to an overall positive rational factor.
fn reduce_full(
    mut terms: Vec<ITerm>,
    basis: &[IPoly],
    skip: Option<usize>,
    order: &MonomialOrder,
) -> Vec<ITerm> {
    let mut i = 0;
    let one = BigInt::one();
    'outer: while i < terms.len() {
        for (k, b) in basis.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            let (bm, bc) = b.lead();
            if bm.divides(&terms[i].0) {
                let q = bm.checked_div(&terms[i].0).unwrap();
                let c = -terms[i].1.clone();
                let ca = if bc.is_one() { one.clone() } else { bc.clone() };
                terms = linear_combine(order, &terms, &ca, &b.terms, &c, &q);
                make_primitive(&mut terms);
                continue 'outer;
            }
        }
        i += 1;
    }
    terms
}

fn s_polynomial(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> Vec<ITerm> {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let l = fm.lcm(gm);
    let uf = fm.checked_div(&l).unwrap();
    let ug = gm.checked_div(&l).unwrap();
    // gc * uf * f - fc * ug * g; lead terms cancel by construction
    let shifted_f: Vec<ITerm> = f.terms.iter().map(|(m, c)| (m.mul(&uf), c * gc)).collect();
    let neg_fc = -fc.clone();
    let mut s = linear_combine(order, &shifted_f, &BigInt::one(), &g.terms, &neg_fc, &ug);
    make_primitive(&mut s);
    s
}

fn to_int_poly(p: &Polynomial, order: &MonomialOrder) -> Option<IPoly> {
    if p.is_zero() {
        return None;
    }
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut terms: Vec<ITerm> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let v = c * BigRational::from(denom_lcm.clone());
            debug_assert!(v.is_integer());
            (m.clone(), v.to_integer())
        })
        .collect();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    make_primitive(&mut terms);
    Some(IPoly { terms })
}

fn to_monic_polynomial(p: &IPoly, ring: &Arc<Ring>) -> Polynomial {
    let lc = BigRational::from(p.lead().1.clone());
    let terms = p
        .terms
        .iter()
        .map(|(m, c)| (m.clone(), BigRational::from(c.clone()) / &lc))
        .collect();
    Polynomial::from_terms(ring.clone(), terms)
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Buchberger's algorithm with the normal selection strategy (minimal lcm
/// degree first, ties broken by pair indices) and both the coprime-lead and
/// the chain criterion, in the variant of the improved algorithm where the
/// chain criterion checks that the two companion pairs have already left the
/// queue.
fn buchberger_core(input: Vec<IPoly>, order: &MonomialOrder) -> Vec<IPoly> {
    let mut basis = input;
    let mut heap: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let mut in_queue: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let deg = basis[i].lead().0.lcm(&basis[j].lead().0).degree();
            heap.push(Reverse((deg, i, j)));
            in_queue.insert((i, j));
        }
    }
    while let Some(Reverse((_, i, j))) = heap.pop() {
        in_queue.remove(&(i, j));
        let lmi = &basis[i].lead().0;
        let lmj = &basis[j].lead().0;
        if lmi.is_coprime_with(lmj) {
            continue;
        }
        let l = lmi.lcm(lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().0.divides(&l)
                && !in_queue.contains(&pair_key(i, k))
                && !in_queue.contains(&pair_key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce_full(s, &basis, None, order);
        if !r.is_empty() {
            let t = basis.len();
            let lead = r[0].0.clone();
            basis.push(IPoly { terms: r });
            for k in 0..t {
                let deg = basis[k].lead().0.lcm(&lead).degree();
                heap.push(Reverse((deg, k, t)));
                in_queue.insert((k, t));
            }
        }
    }
    // minimize: drop elements whose lead is divisible by another lead
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if basis[j].lead().0.divides(&basis[i].lead().0) {
                // on equal leads keep the earlier element
                if basis[i].lead().0 == basis[j].lead().0 && i < j {
                    continue;
                }
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<IPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();
    // interreduce tails (leads form an antichain and cannot change)
    loop {
        let mut changed = false;
        for idx in 0..minimal.len() {
            let r = reduce_full(minimal[idx].terms.clone(), &minimal, Some(idx), order);
            debug_assert!(!r.is_empty());
            if r != minimal[idx].terms {
                minimal[idx] = IPoly { terms: r };
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal
}

/// Reduced Gröbner basis of a list of (possibly non-homogeneous) generators.
pub(crate) fn buchberger_raw(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> GroebnerBasis {
    let input: Vec<IPoly> = gens.iter().filter_map(|g| to_int_poly(g, order)).collect();
    let reduced = buchberger_core(input, order);
    let mut elements: Vec<Polynomial> = reduced
        .iter()
        .map(|p| to_monic_polynomial(p, ring))
        .collect();
    elements.sort_by(|a, b| {
        let la = a.leading_term(order).expect("nonzero").0;
        let lb = b.leading_term(order).expect("nonzero").0;
        order.cmp(la, lb)
    });
    GroebnerBasis { ring: ring.clone(), order: order.clone(), elements }
}

/// Reduced Gröbner basis of a homogeneous ideal. Deterministic: identical
/// input produces identical output.
pub fn buchberger(ideal: &IdealGens, order: &MonomialOrder) -> Result<GroebnerBasis> {
    if order.nvars() != ideal.ring().nvars() {
        return Err(Error::MismatchedOrders);
    }
    Ok(buchberger_raw(ideal.ring(), ideal.gens(), order))
}

/// Unique normal form of `f` modulo a reduced basis: no monomial of the
/// result is divisible by any lead monomial of `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring().vars() != gb.ring.vars() {
        return Err(Error::MismatchedRings(format!(
            "{:?} vs {:?}",
            f.ring().vars(),
            gb.ring.vars()
        )));
    }
    let order = &gb.order;
    let leads: Vec<(Monomial, Vec<(Monomial, BigRational)>)> = gb
        .elements
        .iter()
        .map(|g| {
            let lead = g.leading_term(order).expect("nonzero").0.clone();
            (lead, g.sorted_terms(order))
        })
        .collect();
    let mut terms = f.sorted_terms(order);
    let mut i = 0;
    'outer: while i < terms.len() {
        for (lead, gterms) in &leads {
            if lead.divides(&terms[i].0) {
                let q = lead.checked_div(&terms[i].0).unwrap();
                let c = terms[i].1.clone();
                // terms -= c * q * g (g monic, so the term at i cancels)
                let mut out = Vec::with_capacity(terms.len() + gterms.len());
                let (mut a, mut b) = (0usize, 0usize);
                while a < terms.len() && b < gterms.len() {
                    let bm = gterms[b].0.mul(&q);
                    match order.cmp(&terms[a].0, &bm) {
                        Ordering::Greater => {
                            out.push(terms[a].clone());
                            a += 1;
                        }
                        Ordering::Less => {
                            out.push((bm, -(&gterms[b].1 * &c)));
                            b += 1;
                        }
                        Ordering::Equal => {
                            let v = &terms[a].1 - &gterms[b].1 * &c;
                            if !v.is_zero() {
                                out.push((terms[a].0.clone(), v));
                            }
                            a += 1;
                            b += 1;
                        }
                    }
                }
                out.extend_from_slice(&terms[a..]);
                for t in &gterms[b..] {
                    out.push((t.0.mul(&q), -(&t.1 * &c)));
                }
                terms = out;
                continue 'outer;
            }
        }
        i += 1;
    }
    Ok(Polynomial::from_terms(f.ring().clone(), terms))
}

/// Ideal membership: true iff the normal form of `f` vanishes.
pub fn ideal_contains(gb: &GroebnerBasis, f: &Polynomial) -> Result<bool> {
    Ok(normal_form(f, gb)?.is_zero())
}

/// Ideal equality via uniqueness of the reduced Gröbner basis.
pub fn ideal_equal(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<bool> {
    if a.ring.vars() != b.ring.vars() {
        return Err(Error::MismatchedRings(format!(
            "{:?} vs {:?}",
            a.ring.vars(),
            b.ring.vars()
        )));
    }
    if a.order != b.order {
        return Err(Error::MismatchedOrders);
    }
    Ok(a.elements == b.elements)
}
