use crate::error::{Error, Result};
use crate::polyring::Monomial;

use super::MonomialIdeal;

/// `HS(R/M; t) = Num(t) / (1 - t)^N` for a monomial ideal `M` in `N` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeriesNumerator {
    coeffs: Vec<i128>,
    nvars: usize,
}

impl HilbertSeriesNumerator {
    pub fn new(mut coeffs: Vec<i128>, nvars: usize) -> Self {
        trim(&mut coeffs);
        HilbertSeriesNumerator { coeffs, nvars }
    }

    /// Coefficients of `Num`, constant term first.
    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Divides out every factor `(1 - t)`; returns the quotient and how many were removed.
    pub fn reduced(&self) -> Result<(Vec<i128>, usize)> {
        if self.coeffs.is_empty() {
            return Err(Error::ZeroRing);
        }
        let mut p = self.coeffs.clone();
        let mut k = 0;
        while p.iter().sum::<i128>() == 0 {
            // synthetic division by (1 - t): q_i = sum_{j<=i} p_j
            let mut q = Vec::with_capacity(p.len() - 1);
            let mut acc = 0;
            for c in &p[..p.len() - 1] {
                acc += c;
                q.push(acc);
            }
            p = q;
            trim(&mut p);
            k += 1;
        }
        Ok((p, k))
    }

    /// Affine Krull dimension of `R/M`.
    pub fn krull_dim(&self) -> Result<usize> {
        let (_, k) = self.reduced()?;
        Ok(self.nvars - k)
    }

    /// Degree (multiplicity) of `R/M`: the reduced numerator at `t = 1`.
    pub fn degree(&self) -> Result<u64> {
        let (p, _) = self.reduced()?;
        Ok(p.iter().sum::<i128>() as u64)
    }

    /// Hilbert function value in degree `k`.
    pub fn hilbert_function(&self, k: u32) -> i128 {
        let n = self.nvars as i128;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(i, _)| *i as u32 <= k)
            .map(|(i, c)| {
                let top = k as i128 - i as i128 + n - 1;
                if n == 0 {
                    if k as usize == i {
                        *c
                    } else {
                        0
                    }
                } else {
                    c * binomial(top, n - 1)
                }
            })
            .sum()
    }
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn trim(p: &mut Vec<i128>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_add(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(&mut out);
    out
}

fn one_minus_t_pow(d: u32) -> Vec<i128> {
    let mut p = vec![0; d as usize + 1];
    p[0] += 1;
    p[d as usize] -= 1;
    trim(&mut p);
    p
}

/// Numerator of the Hilbert series of `R/M`, `R` having `nvars` variables.
pub fn hilbert_numerator(ideal: &MonomialIdeal, nvars: usize) -> HilbertSeriesNumerator {
    let gens = ideal.generators().to_vec();
    HilbertSeriesNumerator::new(numerator(gens), nvars)
}

/// Pivot recursion `N(M) = N(M + (p)) + t^deg(p) N(M : p)` with `p` a power
/// of the most frequent variable, plus splitting into variable-disjoint parts.
fn numerator(gens: Vec<Monomial>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let nv = gens[0].nvars();
    let gens = MonomialIdeal::new(nv, gens).generators().to_vec();

    // pairwise coprime: a complete intersection
    let mut used = vec![0usize; nv];
    for g in &gens {
        for k in g.support() {
            used[k] += 1;
        }
    }
    if used.iter().all(|&c| c <= 1) {
        return gens.iter().fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(g.degree())));
    }

    let parts = components(&gens);
    if parts.len() > 1 {
        return parts.into_iter().fold(vec![1], |acc, part| poly_mul(&acc, &numerator(part)));
    }

    let x = (0..nv).max_by_key(|&k| (used[k], std::cmp::Reverse(k))).unwrap();
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exponent(x)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let pivot = Monomial::var_pow(nv, x, e);

    let mut sum_gens: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    sum_gens.push(pivot.clone());
    let colon_gens: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exponents().to_vec();
            ex[x] = ex[x].saturating_sub(e);
            Monomial::from_exponents(ex)
        })
        .collect();

    let a = numerator(sum_gens);
    let mut shifted = vec![0; e as usize];
    shifted.extend(numerator(colon_gens));
    poly_add(&a, &shifted)
}

/// Groups generators into classes that share no variables.
fn components(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let nv = gens[0].nvars();
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut Vec<usize>, a: usize) -> usize {
        let mut a = a;
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for g in gens {
        let mut sup = g.support();
        if let Some(first) = sup.next() {
            for k in sup {
                let (ra, rb) = (find(&mut parent, first), find(&mut parent, k));
                parent[ra] = rb;
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Monomial>)> = Vec::new();
    for g in gens {
        let root = find(&mut parent, g.support().next().unwrap());
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, v)) => v.push(g.clone()),
            None => groups.push((root, vec![g.clone()])),
        }
    }
    groups.into_iter().map(|(_, v)| v).collect()
}
