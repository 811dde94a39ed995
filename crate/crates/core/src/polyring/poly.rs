use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{text, Monomial, RingRef, VarId};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Term<F> {
    pub coeff: F,
    pub mono: Monomial,
}

/// A polynomial with terms sorted strictly descending in its ring's order.
/// No zero coefficients, no repeated monomials; zero is the empty term list.
#[derive(Clone)]
pub struct Polynomial<F> {
    ring: RingRef,
    terms: Vec<Term<F>>,
}

impl<F: Scalar> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Scalar> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Scalar> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render_polynomial(self))
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Scalar> Polynomial<F> {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: F) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn term(ring: &RingRef, coeff: F, mono: Monomial) -> Self {
        assert_eq!(mono.nvars(), ring.nvars(), "monomial length does not match ring");
        let terms = if coeff.is_zero() { Vec::new() } else { vec![Term { coeff, mono }] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &RingRef, mono: Monomial) -> Self {
        Self::term(ring, F::one(), mono)
    }

    pub fn var(ring: &RingRef, v: VarId) -> Result<Self> {
        let k = ring.position(v).ok_or(Error::UnknownVariable(v))?;
        Ok(Self::monomial(ring, Monomial::var(ring.nvars(), k)))
    }

    /// Builds a normalized polynomial from arbitrary (possibly repeated, zero) terms.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (F, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length does not match ring");
            match acc.get_mut(&m) {
                Some(v) => *v = v.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term<F>> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { ring: ring.clone(), terms }
    }

    /// `ma - mb`.
    pub fn binomial(ring: &RingRef, ma: Monomial, mb: Monomial) -> Self {
        Self::from_terms(ring, [(F::one(), ma), (-F::one(), mb)])
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|u| u.mono.degree() == t.mono.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// A difference of two monomials with coefficients `±1`.
    pub fn is_unit_binomial(&self) -> bool {
        self.terms.len() == 2
            && self.terms.iter().all(|t| t.coeff.abs().is_one())
            && self.terms[0].coeff != self.terms[1].coeff
    }

    /// Variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<VarId> {
        let mut used = vec![false; self.ring.nvars()];
        for t in &self.terms {
            for k in t.mono.support() {
                used[k] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(k, _)| self.ring.var_at(k)).collect()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        // accumulate row by row: each row is already sorted
        for t in &other.terms {
            let row = self.mul_term(&t.coeff, &t.mono);
            acc = acc.merge(&row, false);
        }
        Ok(acc)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.mono, &y.mono),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let y = b.next().unwrap();
                    let coeff = if negate { -y.coeff.clone() } else { y.coeff.clone() };
                    out.push(Term { coeff, mono: y.mono.clone() });
                }
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let coeff = if negate {
                        x.coeff.clone() - y.coeff.clone()
                    } else {
                        x.coeff.clone() + y.coeff.clone()
                    };
                    if !coeff.is_zero() {
                        out.push(Term { coeff, mono: x.mono.clone() });
                    }
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    /// `c * m * self`. Order is preserved since monomial orders are multiplicative.
    pub fn mul_term(&self, c: &F, m: &Monomial) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff.clone() * c.clone(), mono: t.mono.mul(m) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    /// `self - c * m * g`, the reduction step.
    pub fn sub_mul_term(&self, c: &F, m: &Monomial, g: &Self) -> Self {
        self.merge(&g.mul_term(c, m), true)
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&(F::one() / lc.clone())),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    /// Fails if a variable in use is missing from the target roster.
    pub fn embed(&self, target: &RingRef) -> Result<Self> {
        if same_ring(&self.ring, target) {
            return Ok(Polynomial { ring: target.clone(), terms: self.terms.clone() });
        }
        let mut slot = Vec::with_capacity(self.ring.nvars());
        for &v in self.ring.roster() {
            slot.push(target.position(v));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0; target.nvars()];
            for k in t.mono.support() {
                match slot[k] {
                    Some(p) => exps[p] = t.mono.exponent(k),
                    None => return Err(Error::UnknownVariable(self.ring.var_at(k))),
                }
            }
            terms.push((t.coeff.clone(), Monomial::from_exponents(exps)));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Substitutes a polynomial in `target` for every variable: the ring
    /// homomorphism determined by `images`.
    pub fn apply_map(&self, images: &HashMap<VarId, Polynomial<F>>, target: &RingRef) -> Result<Self> {
        let n = self.ring.nvars();
        let mut imgs: Vec<Option<&Polynomial<F>>> = Vec::with_capacity(n);
        for &v in self.ring.roster() {
            let img = images.get(&v);
            if let Some(p) = img {
                if !same_ring(p.ring(), target) {
                    return Err(Error::RingMismatch);
                }
            }
            imgs.push(img);
        }
        let mut power_cache: HashMap<(usize, u32), Polynomial<F>> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for k in t.mono.support() {
                let img = imgs[k].ok_or(Error::MissingImage(self.ring.var_at(k)))?;
                let e = t.mono.exponent(k);
                let p = power_cache.entry((k, e)).or_insert_with(|| img.pow(e));
                prod = &prod * &*p;
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    /// Keeps only terms of degree below `bound`.
    pub fn truncate_below(&self, bound: u32) -> Self {
        let terms = self.terms.iter().filter(|t| t.mono.degree() < bound).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<Term<F>>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }
}

impl<'a, F: Scalar> Add for &'a Polynomial<F> {
    type Output = Polynomial<F>;

    /// Panics on ring mismatch; use [`Polynomial::try_add`] to handle it.
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a, F: Scalar> Sub for &'a Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a, F: Scalar> Mul for &'a Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl<'a, F: Scalar> Neg for &'a Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}
