//! Ambient polynomial ring, monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ambient graded polynomial ring, identified by its variable names.
///
/// Rings are shared via `Arc`; two rings are interchangeable iff their
/// variable lists are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Arc<Ring>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut names = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if v.is_empty()
                || !v.chars().next().unwrap().is_ascii_alphabetic()
                || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::InvalidRing(format!("invalid variable name {v:?}")));
            }
            if names.iter().any(|n| n == v) {
                return Err(Error::InvalidRing(format!("duplicate variable name {v:?}")));
            }
            names.push(v.to_string());
        }
        Ok(Arc::new(Ring { vars: names }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// A power product of the ring variables, with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn var_pow(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps, degree: e }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// True if the monomial is a power of a single variable (or 1).
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() <= 1
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Partial derivative exponent drop; returns the integer factor and the
    /// reduced monomial, or `None` if the variable is absent.
    pub fn derivative(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] = e - 1;
        Some((e, Monomial { exps, degree: self.degree - 1 }))
    }
}

/// A monomial order on a fixed number of variables.
///
/// The base order is degree-reverse-lexicographic over a permutation of the
/// variables (most significant first). An optional elimination variable is
/// compared before anything else; this is the block order used for ideal
/// intersection via an auxiliary variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    nvars: usize,
    elim: Option<usize>,
    perm: Vec<usize>,
}

impl MonomialOrder {
    /// Plain degrevlex with the natural variable order x_0 > x_1 > ... > x_n.
    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder { nvars, elim: None, perm: (0..nvars).collect() }
    }

    /// Degrevlex with the variable `last` moved to the least significant
    /// position; used for single-variable saturation.
    pub fn degrevlex_with_last(nvars: usize, last: usize) -> Result<Self> {
        if last >= nvars {
            return Err(Error::IndexOutOfRange { index: last, nvars });
        }
        let mut perm: Vec<usize> = (0..nvars).filter(|&i| i != last).collect();
        perm.push(last);
        Ok(MonomialOrder { nvars, elim: None, perm })
    }

    /// Block order eliminating variable `elim`: any monomial containing
    /// `elim` is greater than any monomial not containing it; ties are
    /// broken by degrevlex on the remaining variables.
    pub fn elimination(nvars: usize, elim: usize) -> Result<Self> {
        if elim >= nvars {
            return Err(Error::IndexOutOfRange { index: elim, nvars });
        }
        let perm: Vec<usize> = (0..nvars).filter(|&i| i != elim).collect();
        Ok(MonomialOrder { nvars, elim: Some(elim), perm })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_elimination(&self) -> bool {
        self.elim.is_some()
    }

    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), self.nvars);
        debug_assert_eq!(v.nvars(), self.nvars);
        if let Some(e) = self.elim {
            match u.exp(e).cmp(&v.exp(e)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        let (du, dv) = if self.elim.is_some() {
            let du: u32 = self.perm.iter().map(|&i| u.exp(i)).sum();
            let dv: u32 = self.perm.iter().map(|&i| v.exp(i)).sum();
            (du, dv)
        } else {
            (u.degree(), v.degree())
        };
        match du.cmp(&dv) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Reverse-lex tie break: the monomial with the smaller exponent on
        // the least significant variable where they differ is greater.
        for &i in self.perm.iter().rev() {
            match u.exp(i).cmp(&v.exp(i)) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// Render a monomial with the ring's variable names, e.g. `x^2*y`.
pub struct MonomialDisplay<'a> {
    pub monomial: &'a Monomial,
    pub ring: &'a Ring,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.monomial.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.ring.var_name(i))?;
            } else {
                write!(f, "{}^{}", self.ring.var_name(i), e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let ord = MonomialOrder::degrevlex(3);
        // x^2 vs x*y: equal degree, x^2 wins
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        // x*z vs y^2: x*z has the larger z-exponent, so it is smaller
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        let u = m(&[1, 2, 3]);
        assert_eq!(ord.cmp(&u, &u), Ordering::Equal);
        // higher total degree always wins
        assert_eq!(ord.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn permuted_degrevlex_moves_variable_last() {
        // with x last, x*z vs y^2 flips: now the least significant variable is x
        let ord = MonomialOrder::degrevlex_with_last(3, 0).unwrap();
        // xz=(1,0,1), y^2=(0,2,0): x-exponents 1 vs 0, xz has larger -> smaller
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // yz vs x^2: x-exponents 0 vs 2 -> yz greater
        assert_eq!(ord.cmp(&m(&[0, 1, 1]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_order_blocks_on_the_variable() {
        let ord = MonomialOrder::elimination(3, 2).unwrap();
        // any monomial with z beats any without, regardless of degree
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        // within the z-free block, degrevlex on x, y
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn monomial_division_and_lcm() {
        let u = m(&[2, 1, 0]);
        let v = m(&[1, 1, 0]);
        assert!(v.divides(&u));
        assert!(!u.divides(&v));
        assert_eq!(v.checked_div(&u), Some(m(&[1, 0, 0])));
        assert_eq!(u.checked_div(&v), None);
        assert_eq!(u.lcm(&m(&[0, 2, 3])), m(&[2, 2, 3]));
        assert!(m(&[1, 0, 0]).is_coprime_with(&m(&[0, 2, 1])));
    }
}
