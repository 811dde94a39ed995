use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, RingRef};

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Drops non-minimal generators; the survivors keep their input order.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        assert!(all.iter().all(|g| g.nvars() == nvars), "generator length does not match");
        let mut seen = HashSet::new();
        all.retain(|g| seen.insert(g.clone()));
        let mut by_degree: Vec<usize> = (0..all.len()).collect();
        by_degree.sort_by_key(|&k| all[k].degree());
        let mut keep = vec![true; all.len()];
        for (p, &a) in by_degree.iter().enumerate() {
            if !keep[a] {
                continue;
            }
            for &b in &by_degree[p + 1..] {
                if keep[b] && all[a].divides(&all[b]) {
                    keep[b] = false;
                }
            }
        }
        let gens = all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
        MonomialIdeal { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// First variable (by roster position) without a pure power among the generators.
    pub fn missing_pure_power(&self) -> Option<usize> {
        let mut seen = vec![false; self.nvars];
        for g in &self.gens {
            if let Some(k) = g.pure_power_of() {
                seen[k] = true;
            }
            if g.is_one() {
                return None;
            }
        }
        seen.iter().position(|s| !s)
    }

    /// Number of standard monomials; errors if the quotient is infinite.
    pub fn colength(&self, ring: &RingRef) -> Result<u64> {
        if let Some(k) = self.missing_pure_power() {
            return Err(Error::NotArtinian(ring.var_at(k)));
        }
        let lms: HashSet<Monomial> = self.gens.iter().cloned().collect();
        let mut walker = LevelWalker::new(self.nvars);
        let mut d = 0;
        while !walker.level_is_empty(d, &lms) {
            d += 1;
        }
        Ok(walker.counts.iter().sum())
    }

    /// Standard monomial counts in degrees `0..=max_degree`.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<u64> {
        let lms: HashSet<Monomial> = self.gens.iter().cloned().collect();
        let mut walker = LevelWalker::new(self.nvars);
        walker.level_is_empty(max_degree, &lms);
        walker.counts[..=max_degree as usize].to_vec()
    }
}

/// Degree-by-degree enumeration of standard monomials.
///
/// A monomial of degree `d` is standard iff all of its degree `d-1` divisors
/// are standard and it is not itself a generator, so each level needs only
/// the previous level and a hash set of generators.
pub(crate) struct LevelWalker {
    nvars: usize,
    counts: Vec<u64>,
    last: HashSet<Monomial>,
}

impl LevelWalker {
    pub(crate) fn new(nvars: usize) -> Self {
        LevelWalker { nvars, counts: Vec::new(), last: HashSet::new() }
    }

    /// Extends the enumeration through degree `d` and reports whether that
    /// level is empty. Levels already computed are not revisited, so `gens`
    /// must not change below the highest degree asked about so far.
    pub(crate) fn level_is_empty(&mut self, d: u32, gens: &HashSet<Monomial>) -> bool {
        let d = d as usize;
        while self.counts.len() <= d {
            let next = self.next_level(gens);
            self.counts.push(next.len() as u64);
            self.last = next;
        }
        self.counts[d] == 0
    }

    /// Like [`level_is_empty`](Self::level_is_empty) for `d >= 1`, but level
    /// `d` itself is not stored, so generators of degree `d` may still be added.
    pub(crate) fn peek_level_is_empty(&mut self, d: u32, gens: &HashSet<Monomial>) -> bool {
        if d == 0 || self.level_is_empty(d - 1, gens) {
            return d > 0 || self.level_is_empty(0, gens);
        }
        if self.counts.len() > d as usize {
            return self.counts[d as usize] == 0;
        }
        self.next_level(gens).is_empty()
    }

    fn next_level(&self, gens: &HashSet<Monomial>) -> HashSet<Monomial> {
        if self.counts.is_empty() {
            let one = Monomial::one(self.nvars);
            return if gens.contains(&one) { HashSet::new() } else { HashSet::from([one]) };
        }
        let mut next = HashSet::new();
        for u in &self.last {
            let start = u.support().last().unwrap_or(0);
            for k in start..self.nvars {
                let c = u.times_var(k);
                if gens.contains(&c) {
                    continue;
                }
                let ok = c.support().all(|v| v == k || self.last.contains(&c.without_one(v).unwrap()));
                if ok {
                    next.insert(c);
                }
            }
        }
        next
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Dims, Ring};

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn minimalization() {
        let i = MonomialIdeal::new(2, [m(&[2, 1]), m(&[1, 0]), m(&[0, 3]), m(&[1, 0])]);
        assert_eq!(i.generators(), &[m(&[1, 0]), m(&[0, 3])]);
        assert!(i.contains(&m(&[1, 5])));
        assert!(!i.contains(&m(&[0, 2])));
    }

    #[test]
    fn colength_of_box() {
        let ring = Ring::x_ring(Dims::new(1, 3, 1)).unwrap();
        let i = MonomialIdeal::new(3, [m(&[2, 0, 0]), m(&[0, 3, 0]), m(&[0, 0, 4])]);
        assert_eq!(i.colength(&ring).unwrap(), 24);
        let j = MonomialIdeal::new(3, [m(&[2, 0, 0]), m(&[0, 3, 0]), m(&[1, 1, 1])]);
        assert!(matches!(j.colength(&ring), Err(Error::NotArtinian(_))));
    }

    #[test]
    fn hilbert_function_matches_brute_force() {
        // (x^2, xy^2, z^3) in 3 variables, checked against explicit enumeration
        let i = MonomialIdeal::new(3, [m(&[2, 0, 0]), m(&[1, 2, 0]), m(&[0, 0, 3])]);
        let hf = i.hilbert_function(6);
        for (d, &h) in hf.iter().enumerate() {
            let mut count = 0;
            for a in 0..=d as u32 {
                for b in 0..=(d as u32 - a) {
                    let c = d as u32 - a - b;
                    if !i.contains(&m(&[a, b, c])) {
                        count += 1;
                    }
                }
            }
            assert_eq!(h, count, "degree {d}");
        }
    }
}
