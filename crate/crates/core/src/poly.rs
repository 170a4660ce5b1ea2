//! Sparse multivariate polynomials over `Z`, just enough to apply
//! derivations of the Cox ring symbolically.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub type Exponents = Vec<BigUint>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![BigUint::zero(); nvars];
        e[i] = BigUint::one();
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exponents: Exponents, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i].is_zero() {
                continue;
            }
            let mut e2 = e.clone();
            let k = BigInt::from(e[i].clone());
            e2[i] -= 1u32;
            out.add_term(e2, c * k);
        }
        out
    }

    pub fn mul_monomial(&self, m: &[BigUint]) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let e2 = e.iter().zip(m).map(|(a, b)| a + b).collect();
            out.add_term(e2, c.clone());
        }
        out
    }
}

/// `x1^2*x3`-style rendering: 1-based variables, factors in variable order,
/// exponent 1 omitted, exponent 0 dropped. Empty for the constant monomial.
pub fn render_monomial(exponents: &[BigUint]) -> String {
    let mut s = String::new();
    for (i, e) in exponents.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        write!(s, "x{}", i + 1).unwrap();
        if !e.is_one() {
            write!(s, "^{e}").unwrap();
        }
    }
    s
}
