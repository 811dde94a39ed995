//! Buchberger's algorithm with the Gebauer–Möller pair update, normal forms,
//! membership, elimination, and ideal equality.
//!
//! Pairs are selected by the normal strategy (smallest lcm degree first,
//! sugar as tie-break). Input generators are queued alongside the pairs at
//! their own degree, so for homogeneous input the basis is built degree by
//! degree and is a truncated Gröbner basis at every degree boundary. That
//! allows an early exit once the quotient is known to vanish from some
//! degree on.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::hilbert::LevelWalker;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingRef, Term, VarId};
use crate::scalar::{Scalar, Zz};

/// A reduced Gröbner basis: monic, inter-reduced, sorted by ascending leading monomial.
#[derive(Clone)]
pub struct GroebnerBasis<F> {
    ring: RingRef,
    basis: Vec<Polynomial<F>>,
}

impl<F: Scalar> std::fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.basis).finish()
    }
}

impl<F: Scalar> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(|p| p.leading_monomial().cloned()).collect()
    }

    /// Normal form of `f` (embedded into the basis ring if needed).
    pub fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        let f = f.embed(&self.ring)?;
        Ok(exact_normal_form(&f, &self.integral(), &self.ring))
    }

    pub fn ideal_member(&self, f: &Polynomial<F>) -> Result<bool> {
        let f = f.embed(&self.ring)?;
        let basis = self.integral();
        let nf = z_normal_form(primitive(&f).0, &basis.polys, &basis.all(), &basis.masks, self.ring.order());
        Ok(nf.terms.is_empty())
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    }

    /// Checks the defining property directly: every S-polynomial reduces to zero.
    pub fn all_s_polynomials_reduce(&self) -> bool {
        let basis = self.integral();
        let idx = basis.all();
        let order = self.ring.order();
        for i in 0..basis.polys.len() {
            for j in i + 1..basis.polys.len() {
                let s = s_polynomial(&basis.polys[i], &basis.polys[j], order);
                if !z_normal_form(s, &basis.polys, &idx, &basis.masks, order).terms.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn integral(&self) -> IntegralSet<Zz> {
        IntegralSet::new(self.basis.iter().map(|p| primitive(p).0).collect())
    }
}

/// Polynomial with integer coefficients, terms descending.
type ZPoly<I> = Vec<Term<I>>;

struct IntegralSet<I> {
    polys: Vec<ZPoly<I>>,
    masks: Vec<u64>,
}

impl<I> IntegralSet<I> {
    fn new(polys: Vec<ZPoly<I>>) -> Self {
        let masks = polys.iter().map(|p| p.first().map_or(0, |t| t.mono.divmask())).collect();
        IntegralSet { polys, masks }
    }

    fn all(&self) -> Vec<usize> {
        (0..self.polys.len()).collect()
    }
}

/// Clears denominators and content: returns the primitive integer multiple
/// of `p` with positive leading coefficient, and the factor `c` with `p = c * result`.
fn primitive<F: Scalar>(p: &Polynomial<F>) -> (ZPoly<Zz>, F) {
    let parts: Vec<(Zz, Zz)> = p.terms().iter().map(|t| t.coeff.to_fraction()).collect();
    let mut den = Zz::one();
    for (_, d) in &parts {
        den = den.lcm(d);
    }
    let mut z: ZPoly<Zz> = parts
        .into_iter()
        .zip(p.terms())
        .map(|((n, d), t)| Term { coeff: n * (den.clone() / d), mono: t.mono.clone() })
        .collect();
    let c = make_primitive(&mut z);
    (z, F::from_fraction(c, den))
}

/// Divides by the content, sign chosen so the leading coefficient is positive.
/// Returns the (signed) factor removed.
fn make_primitive<I: Clone + Integer + Signed>(z: &mut [Term<I>]) -> I {
    let Some(first) = z.first() else {
        return I::one();
    };
    let mut g = first.coeff.abs();
    for t in z.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(&t.coeff);
    }
    if first.coeff.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in z.iter_mut() {
            t.coeff = t.coeff.clone() / g.clone();
        }
    }
    g
}

fn to_monic<F: Scalar>(ring: &RingRef, z: &[Term<Zz>]) -> Polynomial<F> {
    let Some(first) = z.first() else {
        return Polynomial::zero(ring);
    };
    let lc = first.coeff.clone();
    let terms = z.iter().map(|t| Term { coeff: F::from_fraction(t.coeff.clone(), lc.clone()), mono: t.mono.clone() }).collect();
    Polynomial::from_sorted_terms(ring, terms)
}

fn s_polynomial<I: Clone + Integer + Signed>(f: &[Term<I>], g: &[Term<I>], order: &MonomialOrder) -> ZPoly<I> {
    let (lf, lg) = (&f[0], &g[0]);
    let lcm = lf.mono.lcm(&lg.mono);
    let gcd = lf.coeff.gcd(&lg.coeff);
    let (cf, cg) = (lg.coeff.clone() / gcd.clone(), lf.coeff.clone() / gcd);
    let uf = lf.mono.quotient_of(&lcm).unwrap();
    let ug = lg.mono.quotient_of(&lcm).unwrap();
    let a: Vec<Term<I>> =
        f[1..].iter().rev().map(|t| Term { coeff: t.coeff.clone() * cf.clone(), mono: t.mono.mul(&uf) }).collect();
    let b: Vec<Term<I>> =
        g[1..].iter().rev().map(|t| Term { coeff: -(t.coeff.clone() * cg.clone()), mono: t.mono.mul(&ug) }).collect();
    let mut out = merge_ascending(a, b, order);
    out.reverse();
    out
}

fn find_reducer<I>(m: &Monomial, polys: &[ZPoly<I>], active: &[usize], masks: &[u64]) -> Option<usize> {
    let mm = m.divmask();
    active.iter().copied().find(|&k| masks[k] & !mm == 0 && polys[k][0].mono.divides(m))
}

/// Result of a fraction-free reduction: `scale * f - (combination of reducers) = terms`.
struct ZNormalForm<I> {
    terms: ZPoly<I>,
    scale_num: I,
    scale_den: I,
}

/// Number of reduction steps between content removals.
const CONTENT_PERIOD: usize = 8;

/// Full fraction-free reduction of `f` by `polys[active]`. Terms are kept in
/// ascending order internally so the current head can be popped from the back.
fn z_normal_form<I: Clone + Integer + Signed>(
    f: ZPoly<I>,
    polys: &[ZPoly<I>],
    active: &[usize],
    masks: &[u64],
    order: &MonomialOrder,
) -> ZNormalForm<I> {
    let mut work = f;
    work.reverse();
    let mut rem: ZPoly<I> = Vec::new();
    let (mut scale_num, mut scale_den) = (I::one(), I::one());
    let mut steps = 0usize;
    while let Some(head) = work.pop() {
        let Some(k) = find_reducer(&head.mono, polys, active, masks) else {
            rem.push(head);
            continue;
        };
        let g = &polys[k];
        let lt = &g[0];
        let d = head.coeff.gcd(&lt.coeff);
        let a = lt.coeff.clone() / d.clone();
        let c = head.coeff / d;
        if !a.is_one() {
            for t in work.iter_mut().chain(rem.iter_mut()) {
                t.coeff = t.coeff.clone() * a.clone();
            }
            scale_num = scale_num * a;
        }
        let q = lt.mono.quotient_of(&head.mono).unwrap();
        // subtract c*q*tail(g); the head cancels by construction
        let sub: Vec<Term<I>> =
            g[1..].iter().rev().map(|t| Term { coeff: -(t.coeff.clone() * c.clone()), mono: t.mono.mul(&q) }).collect();
        work = merge_ascending(work, sub, order);
        steps += 1;
        if steps % CONTENT_PERIOD == 0 {
            let removed = remove_content(&mut work, &mut rem);
            scale_den = scale_den * removed;
        }
    }
    let removed = remove_content(&mut work, &mut rem);
    scale_den = scale_den * removed;
    ZNormalForm { terms: rem, scale_num, scale_den }
}

/// Divides `a` and `b` by the gcd of all their coefficients; returns it.
fn remove_content<I: Clone + Integer + Signed>(a: &mut [Term<I>], b: &mut [Term<I>]) -> I {
    let mut g = I::zero();
    for t in a.iter().chain(b.iter()) {
        g = g.gcd(&t.coeff);
        if g.is_one() {
            return g;
        }
    }
    if g.is_zero() {
        return I::one();
    }
    for t in a.iter_mut().chain(b.iter_mut()) {
        t.coeff = t.coeff.clone() / g.clone();
    }
    g
}

fn merge_ascending<I: Clone + Integer>(a: Vec<Term<I>>, b: Vec<Term<I>>, order: &MonomialOrder) -> Vec<Term<I>> {
    if b.is_empty() {
        return a;
    }
    if a.is_empty() {
        return b;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        let ord = match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some(x), Some(y)) => order.cmp(&x.mono, &y.mono),
        };
        match ord {
            Ordering::Less => out.push(ai.next().unwrap()),
            Ordering::Greater => out.push(bi.next().unwrap()),
            Ordering::Equal => {
                let x = ai.next().unwrap();
                let y = bi.next().unwrap();
                let c = x.coeff + y.coeff;
                if !c.is_zero() {
                    out.push(Term { coeff: c, mono: x.mono });
                }
            }
        }
    }
    out
}

/// Exact normal form over the field: `f - sum q_i g_i`.
fn exact_normal_form<F: Scalar>(f: &Polynomial<F>, basis: &IntegralSet<Zz>, ring: &RingRef) -> Polynomial<F> {
    let (z, factor) = primitive(f);
    let nf = z_normal_form(z, &basis.polys, &basis.all(), &basis.masks, ring.order());
    // scale_num * (f / factor) reduces to terms * scale_den
    let mult = factor * F::from_fraction(nf.scale_den, nf.scale_num);
    let terms = nf.terms.into_iter().map(|t| Term { coeff: F::from_fraction(t.coeff, Zz::one()) * mult.clone(), mono: t.mono }).collect();
    Polynomial::from_sorted_terms(ring, terms)
}

/// Normal form of `f` with respect to `gens` (any generating list, not
/// necessarily a Gröbner basis), in the order of `f`'s ring.
pub fn reduce<F: Scalar>(f: &Polynomial<F>, gens: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    let gens: Vec<ZPoly<Zz>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Ok(primitive(&g.embed(f.ring())?).0))
        .collect::<Result<_>>()?;
    Ok(exact_normal_form(f, &IntegralSet::new(gens), f.ring()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct QueueKey {
    degree: u32,
    sugar: u32,
    seq: u64,
}

enum Item<I> {
    Pair(usize),
    Generator(ZPoly<I>),
}

struct PairRecord {
    i: usize,
    j: usize,
    lcm: Monomial,
    mask: u64,
    live: bool,
}

struct Engine<I> {
    ring: RingRef,
    polys: Vec<ZPoly<I>>,
    masks: Vec<u64>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<PairRecord>,
    queue: BinaryHeap<Reverse<(QueueKey, usize)>>,
    items: Vec<Option<Item<I>>>,
    seq: u64,
}

impl<I: Clone + Integer + Signed> Engine<I> {
    fn new(ring: RingRef) -> Self {
        Engine {
            ring,
            polys: Vec::new(),
            masks: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            queue: BinaryHeap::new(),
            items: Vec::new(),
            seq: 0,
        }
    }

    fn push_item(&mut self, degree: u32, sugar: u32, item: Item<I>) {
        let id = self.items.len();
        self.items.push(Some(item));
        self.seq += 1;
        self.queue.push(Reverse((QueueKey { degree, sugar, seq: self.seq }, id)));
    }

    fn lm(&self, k: usize) -> &Monomial {
        &self.polys[k][0].mono
    }

    fn is_monomial(&self, k: usize) -> bool {
        self.polys[k].len() == 1
    }

    /// Adds a primitive, fully reduced element and updates the pair set
    /// (Gebauer–Möller).
    fn insert(&mut self, h: ZPoly<I>, sugar: u32) {
        let hk = self.polys.len();
        let lmh = h[0].mono.clone();
        let hmask = lmh.divmask();
        let h_is_monomial = h.len() == 1;
        self.polys.push(h);
        self.masks.push(hmask);
        self.sugar.push(sugar);

        // candidate new pairs; monomial/monomial pairs have zero S-polynomial
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for &g in &self.active {
            if h_is_monomial && self.is_monomial(g) {
                continue;
            }
            let lmg = self.lm(g);
            cands.push((g, lmg.lcm(&lmh), lmg.is_coprime(&lmh)));
        }
        // chain criterion among the new pairs; of several equal lcms the last survives,
        // and none does if one of them is coprime
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                continue;
            }
            let la = &cands[a].1;
            let la_mask = la.divmask();
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let lb = &cands[b].1;
                if lb.divmask() & !la_mask == 0 && lb.divides(la) && (lb != la || b > a || cands[b].2) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // old pairs whose lcm lm(h) divides, unless lm(h) meets one of its ends at that lcm
        for p in self.pairs.iter_mut().filter(|p| p.live) {
            if hmask & !p.mask != 0 || !lmh.divides(&p.lcm) {
                continue;
            }
            let li = self.polys[p.i][0].mono.lcm(&lmh);
            let lj = self.polys[p.j][0].mono.lcm(&lmh);
            if li != p.lcm && lj != p.lcm {
                p.live = false;
            }
        }
        // coprime leading monomials: the S-polynomial reduces to zero
        for (a, (g, lcm, coprime)) in cands.into_iter().enumerate() {
            if !keep[a] || coprime {
                continue;
            }
            let sg = self.sugar[g] + lcm.degree() - self.lm(g).degree();
            let sh = sugar + lcm.degree() - lmh.degree();
            let pid = self.pairs.len();
            let degree = lcm.degree();
            self.pairs.push(PairRecord { i: g, j: hk, mask: lcm.divmask(), lcm, live: true });
            self.push_item(degree, sg.max(sh), Item::Pair(pid));
        }
        let polys = &self.polys;
        self.active.retain(|&g| !lmh.divides(&polys[g][0].mono));
        self.active.push(hk);
    }

    /// True if every variable has a pure power among the active leading monomials.
    fn has_all_pure_powers(&self) -> bool {
        let mut seen = vec![false; self.ring.nvars()];
        for &k in &self.active {
            if let Some(v) = self.lm(k).pure_power_of() {
                seen[v] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    fn run(&mut self, homogeneous: bool) {
        let mut walker: Option<LevelWalker> = None;
        let mut current_degree = 0u32;
        let order = self.ring.order().clone();
        while let Some(Reverse((key, id))) = self.queue.pop() {
            if homogeneous && key.degree > current_degree {
                current_degree = key.degree;
                if walker.is_none() && self.has_all_pure_powers() {
                    walker = Some(LevelWalker::new(self.ring.nvars()));
                }
                if let Some(w) = walker.as_mut() {
                    // everything below `current_degree` is final; if the leading
                    // monomials already cover degree current_degree, the quotient
                    // vanishes from there on and the pending pairs cannot change it
                    let lms: HashSet<Monomial> = self.active.iter().map(|&k| self.lm(k).clone()).collect();
                    if w.peek_level_is_empty(current_degree, &lms) {
                        self.queue.clear();
                        break;
                    }
                }
            }
            let item = self.items[id].take().unwrap();
            let (spoly, sugar) = match item {
                Item::Pair(pid) => {
                    let p = &self.pairs[pid];
                    if !p.live {
                        continue;
                    }
                    (s_polynomial(&self.polys[p.i], &self.polys[p.j], &order), key.sugar)
                }
                Item::Generator(g) => (g, key.sugar),
            };
            let mut h = z_normal_form(spoly, &self.polys, &self.active, &self.masks, &order).terms;
            if !h.is_empty() {
                make_primitive(&mut h);
                self.insert(h, sugar);
            }
        }
    }

    fn leading_monomials(&self) -> Vec<Monomial> {
        self.active.iter().map(|&k| self.lm(k).clone()).collect()
    }

}

impl Engine<Zz> {
    fn finish<F: Scalar>(self) -> GroebnerBasis<F> {
        let order = self.ring.order().clone();
        let mut basis: Vec<ZPoly<Zz>> = self.active.iter().map(|&k| self.polys[k].clone()).collect();
        basis.sort_by(|a, b| order.cmp(&a[0].mono, &b[0].mono));
        // tail reduction against the other elements; leading terms are already minimal
        let n = basis.len();
        let mk: Vec<u64> = basis.iter().map(|p| p[0].mono.divmask()).collect();
        for k in 0..n {
            let others: Vec<usize> = (0..n).filter(|&o| o != k).collect();
            let reduced = z_normal_form(basis[k].clone(), &basis, &others, &mk, &order).terms;
            basis[k] = reduced;
        }
        let basis = basis.iter().map(|z| to_monic(&self.ring, z)).collect();
        GroebnerBasis { ring: self.ring, basis }
    }
}

fn run_engine<F: Scalar>(gens: &[Polynomial<F>], ring: &RingRef) -> Result<Engine<Zz>> {
    let mut engine = Engine::new(ring.clone());
    let mut homogeneous = true;
    for g in gens {
        let g = g.embed(ring)?;
        if g.is_zero() {
            continue;
        }
        homogeneous &= g.is_homogeneous();
        let d = g.total_degree().unwrap();
        engine.push_item(d, d, Item::Generator(primitive(&g).0));
    }
    engine.run(homogeneous);
    Ok(engine)
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`
/// (generators are embedded into `ring`, which fixes the order).
pub fn buchberger<F: Scalar>(gens: &[Polynomial<F>], ring: &RingRef) -> Result<GroebnerBasis<F>> {
    Ok(run_engine(gens, ring)?.finish())
}

/// Minimal generators of the initial ideal, without inter-reducing the basis.
pub(crate) fn leading_monomials<F: Scalar>(gens: &[Polynomial<F>], ring: &RingRef) -> Result<Vec<Monomial>> {
    Ok(run_engine(gens, ring)?.leading_monomials())
}

/// Gröbner basis in the ring of the first generator. An empty or all-zero
/// list needs the ring explicitly, see [`buchberger`].
pub fn groebner_basis<F: Scalar>(gens: &[Polynomial<F>]) -> Result<GroebnerBasis<F>> {
    let ring = gens.first().ok_or_else(|| Error::InvalidParams("empty generator list".into()))?.ring().clone();
    buchberger(gens, &ring)
}

/// Generators of `(gens) ∩ k[remaining variables]`, expressed in the ring of
/// the generators.
pub fn eliminate<F: Scalar>(gens: &[Polynomial<F>], elim_vars: &[VarId]) -> Result<Vec<Polynomial<F>>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let base = first.ring().clone();
    let ering = base.with_elimination(elim_vars)?;
    let block: Vec<usize> = elim_vars.iter().filter_map(|v| ering.position(*v)).collect();
    let gb = buchberger(gens, &ering)?;
    gb.basis()
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.mono.subdegree(&block) == 0))
        .map(|p| p.embed(&base))
        .collect()
}

/// Whether `a` and `b` generate the same ideal, decided by mutual reduction
/// modulo Gröbner bases in the ring of the inputs.
pub fn ideal_equal<F: Scalar>(a: &[Polynomial<F>], b: &[Polynomial<F>], ring: &RingRef) -> Result<bool> {
    Ok(contained_in(a, b, ring)? && contained_in(b, a, ring)?)
}

/// Whether every element of `a` lies in the ideal generated by `b`.
pub fn contained_in<F: Scalar>(a: &[Polynomial<F>], b: &[Polynomial<F>], ring: &RingRef) -> Result<bool> {
    let gb = buchberger(b, ring)?;
    for f in a {
        if !gb.ideal_member(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ddideal::{dd_ideal_in, h_matrix, minors, DDParams};
    use crate::polyring::{parse_polynomial, Dims, Ring};
    use crate::Q;

    fn p(s: &str, ring: &RingRef) -> Polynomial<Q> {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let ring = Ring::x_ring(Dims::new(1, 2, 1)).unwrap();
        let (x, y) = ("x[1,1,1]", "x[1,1,2]");
        let g = p(&format!("{x}^2 - {y}"), &ring);
        assert_eq!(reduce(&p(&format!("{x}^2"), &ring), &[g.clone()]).unwrap(), p(y, &ring));
        assert!(reduce(&g, &[g.clone()]).unwrap().is_zero());
        let f = p(&format!("3/2*{x}^3 + {y}"), &ring);
        assert_eq!(reduce(&f, &[]).unwrap(), f);
        // x^3 - x*y = x*g, so 3/2 x^3 + y reduces to 3/2 x y + y
        assert_eq!(reduce(&f, &[g.scale(&Q::from_int(7))]).unwrap(), p(&format!("3/2*{x}*{y} + {y}"), &ring));
    }

    #[test]
    fn basis_examples() {
        let ring = Ring::x_ring(Dims::new(1, 2, 1)).unwrap();
        let g = p("x[1,1,1] - 1", &ring);
        assert_eq!(buchberger(&[g.scale(&Q::from_int(-3))], &ring).unwrap().basis(), &[g]);
        assert!(buchberger::<Q>(&[Polynomial::zero(&ring)], &ring).unwrap().is_empty());

        let ring = Ring::x_ring(Dims::new(2, 3, 1)).unwrap();
        let m = minors(&h_matrix::<Q>(&ring), 2);
        let gb = buchberger(&m, &ring).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.all_s_polynomials_reduce());
        for f in &m {
            assert!(gb.basis().contains(&f.make_monic()));
        }
    }

    #[test]
    fn membership_in_the_smallest_ideal() {
        let params = DDParams::toric(Dims::new(2, 2, 2));
        let ring = Ring::x_ring(params.dims()).unwrap();
        let gens = dd_ideal_in::<Q>(&params, &ring).unwrap();
        let gb = buchberger(&gens, &ring).unwrap();
        assert!(gb.all_s_polynomials_reduce());
        assert!(gens.iter().all(|g| gb.ideal_member(g).unwrap()));
        assert!(gb.ideal_member(&Polynomial::zero(&ring)).unwrap());
        assert!(!gb.ideal_member(&p("x[1,1,1]", &ring)).unwrap());
        assert!(!gb.is_unit());
        // exact normal form: f - nf(f) is in the ideal
        let f = p("2/3*x[1,1,2]*x[1,2,1]*x[2,2,2] + x[1,1,1]^2 - 5", &ring);
        let nf = gb.reduce(&f).unwrap();
        assert!(gb.ideal_member(&(&f - &nf)).unwrap());
        assert_eq!(gb.reduce(&nf).unwrap(), nf);
    }

    #[test]
    fn elimination_and_equality() {
        let ring = Ring::new(Dims::new(1, 1, 1), vec![VarId::x(1, 1, 1), VarId::S(1)], MonomialOrder::Grevlex).unwrap();
        let f = p("x[1,1,1] - s[1]", &ring);
        assert!(eliminate(&[f.clone()], &[VarId::S(1)]).unwrap().is_empty());
        let same = eliminate(&[f.clone()], &[]).unwrap();
        assert!(ideal_equal(&same, &[f.clone()], &ring).unwrap());
        assert!(ideal_equal(&[f.clone()], &[f.scale(&Q::from_int(2))], &ring).unwrap());
        assert!(!contained_in(&[p("x[1,1,1]", &ring)], &[f], &ring).unwrap());
    }
}
