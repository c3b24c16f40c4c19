//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are stored strictly descending in the canonical degrevlex order of
//! the ambient ring; zero coefficients are never stored. Values are immutable
//! after construction, so they can be shared freely across threads.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialDisplay, MonomialOrder, Ring};

pub type Coeff = BigRational;

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    /// (monomial, nonzero coefficient), descending in canonical degrevlex.
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.vars() == other.ring.vars() && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: Arc<Ring>) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn constant(ring: Arc<Ring>, c: Coeff) -> Self {
        let nvars = ring.nvars();
        if c.is_zero() {
            Polynomial::zero(ring)
        } else {
            Polynomial { ring, terms: vec![(Monomial::one(nvars), c)] }
        }
    }

    pub fn var(ring: Arc<Ring>, i: usize) -> Result<Self> {
        if i >= ring.nvars() {
            return Err(Error::IndexOutOfRange { index: i, nvars: ring.nvars() });
        }
        let m = Monomial::var(ring.nvars(), i);
        Ok(Polynomial { ring, terms: vec![(m, Coeff::one())] })
    }

    pub fn monomial(ring: Arc<Ring>, m: Monomial, c: Coeff) -> Self {
        if c.is_zero() {
            Polynomial::zero(ring)
        } else {
            Polynomial { ring, terms: vec![(m, c)] }
        }
    }

    /// Normalizing constructor: merges duplicate monomials, drops zeros,
    /// sorts descending in canonical degrevlex.
    pub fn from_terms(ring: Arc<Ring>, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let ord = MonomialOrder::degrevlex(ring.nvars());
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial { ring, terms: merged }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Leading term under an arbitrary order (not necessarily the storage
    /// order).
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Terms sorted strictly descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Coeff)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.vars() != other.ring.vars() {
            return Err(Error::MismatchedRings(format!(
                "{:?} vs {:?}",
                self.ring.vars(),
                other.ring.vars()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let ord = MonomialOrder::degrevlex(self.ring.nvars());
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ord.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ring.clone()));
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                raw.push((m1.mul(m2), c1 * c2));
            }
        }
        Ok(Polynomial::from_terms(self.ring.clone(), raw))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        // multiplying by a fixed monomial preserves the degrevlex sort
        let terms = self
            .terms
            .iter()
            .map(|(t, k)| (t.mul(m), k * c))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::constant(self.ring.clone(), Coeff::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.ring.nvars() {
            return Err(Error::IndexOutOfRange { index: i, nvars: self.ring.nvars() });
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.derivative(i) {
                terms.push((dm, c * Coeff::from(BigInt::from(e))));
            }
        }
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }

    /// Make the polynomial monic with respect to `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }
}

/// Verify the Euler identity sum_i x_i * df/dx_i = d * f for a homogeneous
/// polynomial of degree d >= 1. Always true for valid inputs; exercised as an
/// internal self-test of differentiation and arithmetic.
pub fn euler_check(f: &Polynomial) -> Result<bool> {
    if !f.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        got => return Err(Error::DegreeTooSmall { min: 1, got }),
    };
    let ring = f.ring().clone();
    let mut sum = Polynomial::zero(ring.clone());
    for i in 0..ring.nvars() {
        let xi = Polynomial::var(ring.clone(), i)?;
        sum = sum.add(&xi.mul(&f.partial_derivative(i)?)?)?;
    }
    let df = f.scale(&Coeff::from(BigInt::from(d)));
    Ok(sum == df)
}

fn write_coeff_abs(f: &mut fmt::Formatter<'_>, c: &Coeff, is_one_mon: bool) -> fmt::Result {
    let a = c.abs();
    if a.is_one() && !is_one_mon {
        Ok(())
    } else if a.is_integer() {
        write!(f, "{}", a.numer())?;
        if !is_one_mon {
            write!(f, "*")?;
        }
        Ok(())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())?;
        if !is_one_mon {
            write!(f, "*")?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_coeff_abs(f, c, m.is_one())?;
            if !m.is_one() {
                write!(f, "{}", MonomialDisplay { monomial: m, ring: &self.ring })?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring3() -> Arc<Ring> {
        Ring::new(&["x", "y", "z"]).unwrap()
    }

    fn p(text: &str) -> Polynomial {
        parse_polynomial(text, &ring3()).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x*y*z").partial_derivative(0).unwrap(), p("y*z"));
        // ST family member at d=5
        let f = p("y^4*z+x^5+x^2*y^3");
        assert_eq!(f.partial_derivative(2).unwrap(), p("y^4"));
        assert_eq!(p("y^3").partial_derivative(0).unwrap(), p("0"));
        assert!(p("x").partial_derivative(3).is_err());
    }

    #[test]
    fn euler_identity() {
        assert_eq!(euler_check(&p("x*y*z")), Ok(true));
        let simis = p("4*(x^2+y^2+x*z)^3-27*(x^2+y^2)^2*z^2");
        assert_eq!(euler_check(&simis), Ok(true));
        assert_eq!(euler_check(&p("x^2+y")), Err(Error::NonHomogeneous));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        let z = p("x^2-x^2");
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn homogeneity() {
        assert!(p("x^3+x*y*z").is_homogeneous());
        assert!(!p("x^2+y").is_homogeneous());
        assert!(p("0").is_homogeneous());
    }

    #[test]
    fn display_round_trip() {
        let f = p("4*(x^2+y^2+x*z)^3-27*(x^2+y^2)^2*z^2");
        let again = parse_polynomial(&f.to_string(), &ring3()).unwrap();
        assert_eq!(f, again);
        assert_eq!(f.degree(), Some(6));
        assert!(f.is_homogeneous());
    }

    #[test]
    fn mul_term_keeps_sort() {
        let f = p("x^2+y^2+x*z");
        let g = f.mul_term(&Monomial::new(vec![1, 0, 2]), &Coeff::from(BigInt::from(3)));
        assert_eq!(g, p("3*x^3*z^2+3*x*y^2*z^2+3*x^2*z^3"));
    }
}
