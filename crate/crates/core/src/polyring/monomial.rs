use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Dense exponent vector, one slot per roster variable, with cached degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        Self::var_pow(nvars, k, 1)
    }

    pub fn var_pow(nvars: usize, k: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[k] = e;
        Monomial { exps, degree: e }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, k: usize) -> u32 {
        self.exps[k]
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

    /// Sum of exponents over the given positions.
    pub fn subdegree(&self, positions: &[usize]) -> u32 {
        positions.iter().map(|&k| self.exps[k]).sum()
    }

    /// The single variable this monomial is a power of, if any.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (k, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(k);
            }
        }
        found
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|a| a * e).collect(), degree: self.degree * e }
    }

    /// One bit per variable (mod 64) set when the exponent is positive.
    /// `a | b` implies `mask(a) & !mask(b) == 0`.
    pub fn divmask(&self) -> u64 {
        let mut m = 0u64;
        for (k, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (k % 64);
            }
        }
        m
    }

    /// Divides by one variable, if it occurs.
    pub fn without_one(&self, k: usize) -> Option<Monomial> {
        if self.exps[k] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[k] -= 1;
        Some(Monomial { exps, degree: self.degree - 1 })
    }

    pub fn times_var(&self, k: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[k] += 1;
        Monomial { exps, degree: self.degree + 1 }
    }
}

/// Monomial orders on a fixed roster.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Roster positions of the eliminated block. Compares the subdegree in
    /// the block first, then grevlex on the full exponent vector.
    Elimination(Vec<usize>),
}

impl MonomialOrder {
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }

    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination(block) => {
                a.subdegree(block).cmp(&b.subdegree(block)).then_with(|| grevlex(a, b))
            }
        }
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        for (x, y) in a.exps.iter().zip(&b.exps).rev() {
            if x != y {
                // smaller exponent in the last differing slot wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Compares two monomials under `order`.
pub fn compare(a: &Monomial, b: &Monomial, order: &MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::LengthMismatch(a.nvars(), b.nvars()));
    }
    Ok(order.cmp(a, b))
}
