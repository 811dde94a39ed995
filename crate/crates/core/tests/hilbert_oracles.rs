use std::collections::HashSet;

use proptest::prelude::*;
use toricdd_core::ddideal::{dd_ideal, DDParams};
use toricdd_core::hilbert::{
    degree_monomials, hs_multiplicity, initial_ideal, newton_multiplicity, quotient_numerator, Ambient,
    MultiplicityConfig, MultiplicityMethod,
};
use toricdd_core::groebner::groebner_basis;
use toricdd_core::polyring::{Dims, Monomial, Polynomial, Ring, RingRef};
use toricdd_core::Q;

/// Row, column and block sums of an `X` monomial: its point in the Segre semigroup.
fn lattice_point(dims: Dims, ring: &RingRef, mono: &Monomial) -> Vec<u32> {
    let (m, n) = (dims.m as usize, dims.n as usize);
    let mut p = vec![0u32; m + n + dims.r as usize];
    for k in mono.support() {
        let (l, i, j) = ring.var_at(k).triple().unwrap();
        let e = mono.exponent(k);
        p[i as usize - 1] += e;
        p[m + j as usize - 1] += e;
        p[m + n + l as usize - 1] += e;
    }
    p
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn toric_ideal(dims: Dims) -> (RingRef, Vec<Polynomial<Q>>) {
    let gens = dd_ideal::<Q>(&DDParams::toric(dims)).unwrap();
    (Ring::x_ring(dims).unwrap(), gens)
}

#[test]
fn hilbert_function_counts_lattice_points() {
    for (dims, top) in [(Dims::new(2, 2, 2), 5), (Dims::new(2, 3, 2), 4), (Dims::new(3, 2, 2), 4)] {
        let (ring, gens) = toric_ideal(dims);
        let num = quotient_numerator(&gens, &ring).unwrap();
        let init = initial_ideal(&groebner_basis(&gens).unwrap());
        let standard = init.hilbert_function(top);
        for k in 0..=top {
            let points: HashSet<Vec<u32>> =
                degree_monomials(ring.nvars(), k).iter().map(|mo| lattice_point(dims, &ring, mo)).collect();
            let segre = binom((k + dims.m - 1) as u64, (dims.m - 1) as u64)
                * binom((k + dims.n - 1) as u64, (dims.n - 1) as u64)
                * binom((k + dims.r - 1) as u64, (dims.r - 1) as u64);
            assert_eq!(points.len() as u64, segre);
            assert_eq!(num.hilbert_function(k), segre as i128, "{dims} k={k}");
            assert_eq!(standard[k as usize], segre, "{dims} k={k}");
        }
    }
}

#[test]
fn hilbert_function_of_smallest_case_is_a_cube() {
    let (ring, gens) = toric_ideal(Dims::new(2, 2, 2));
    let num = quotient_numerator(&gens, &ring).unwrap();
    for k in 0..=11u32 {
        assert_eq!(num.hilbert_function(k), ((k + 1) as i128).pow(3));
    }
    // first differences of the cumulative lengths 1, 9, 36, 100, ...
    let mut total = 0;
    for k in 1..=12u32 {
        total += num.hilbert_function(k - 1);
        assert_eq!(total, ((k * (k + 1) / 2) as i128).pow(2));
    }
}

#[test]
fn dimension_and_degree_follow_segre_formulas() {
    for (m, n, r) in [(2, 2, 2), (3, 2, 2), (2, 3, 2), (3, 3, 2), (2, 2, 3)] {
        let dims = Dims::new(m, n, r);
        let (ring, gens) = toric_ideal(dims);
        let num = quotient_numerator(&gens, &ring).unwrap();
        let proj = (m + n + r - 3) as u64;
        assert_eq!(num.krull_dim().unwrap() as u64, proj + 1, "{dims}");
        let deg = factorial(proj) / (factorial((m - 1) as u64) * factorial((n - 1) as u64) * factorial((r - 1) as u64));
        assert_eq!(num.degree().unwrap(), deg, "{dims}");
    }
}

fn compositions(d: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(d - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `length(S/JS)` by counting semigroup points outside `J + S`. Every triple
/// of compositions of `d` is a point of degree `d`.
fn lattice_colength(dims: Dims, ring: &RingRef, gens: &[Monomial]) -> u64 {
    let gpts: Vec<Vec<u32>> = gens.iter().map(|g| lattice_point(dims, ring, g)).collect();
    let mut total = 0;
    for d in 0.. {
        let (a, b, c) =
            (compositions(d, dims.m as usize), compositions(d, dims.n as usize), compositions(d, dims.r as usize));
        let mut outside = 0;
        for x in &a {
            for y in &b {
                for z in &c {
                    let p: Vec<u32> = x.iter().chain(y).chain(z).copied().collect();
                    if !gpts.iter().any(|g| g.iter().zip(&p).all(|(u, v)| u <= v)) {
                        outside += 1;
                    }
                }
            }
        }
        if outside == 0 {
            return total;
        }
        total += outside;
    }
    unreachable!()
}

fn monomial_ideal(ring: &RingRef, pure: u32, extras: &[Vec<u32>]) -> Vec<Monomial> {
    let nv = ring.nvars();
    let mut gens: Vec<Monomial> = (0..nv).map(|k| Monomial::var_pow(nv, k, pure)).collect();
    for e in extras {
        let mono = Monomial::from_exponents(e.clone());
        if !mono.is_one() {
            gens.push(mono);
        }
    }
    gens
}

fn polys(ring: &RingRef, gens: &[Monomial]) -> Vec<Polynomial<Q>> {
    gens.iter().map(|g| Polynomial::monomial(ring, g.clone())).collect()
}

fn extras(nv: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..=1, nv), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn colength_matches_lattice_count(pure in 2u32..=3, ex in extras(8)) {
        let dims = Dims::new(2, 2, 2);
        let ambient = Ambient::<Q>::toric(dims).unwrap();
        let ring = ambient.ring().clone();
        let gens = monomial_ideal(&ring, pure, &ex);
        prop_assert_eq!(ambient.colength(&polys(&ring, &gens)).unwrap(), lattice_colength(dims, &ring, &gens));
    }

    #[test]
    fn colength_matches_lattice_count_rectangular(ex in extras(12)) {
        let dims = Dims::new(2, 3, 2);
        let ambient = Ambient::<Q>::toric(dims).unwrap();
        let ring = ambient.ring().clone();
        let gens = monomial_ideal(&ring, 2, &ex);
        prop_assert_eq!(ambient.colength(&polys(&ring, &gens)).unwrap(), lattice_colength(dims, &ring, &gens));
    }

    #[test]
    fn newton_volume_matches_hilbert_samuel_fit(ex in extras(8)) {
        let dims = Dims::new(2, 2, 2);
        let ambient = Ambient::<Q>::toric(dims).unwrap();
        let ring = ambient.ring().clone();
        let gens = monomial_ideal(&ring, 2, &ex);
        let newton = newton_multiplicity(dims, &ring, &gens).unwrap();
        let fit = hs_multiplicity(&polys(&ring, &gens), &ambient, MultiplicityMethod::HsFit, &MultiplicityConfig::default())
            .unwrap();
        prop_assert_eq!(newton, fit.value);
    }

    #[test]
    fn smaller_ideals_have_larger_invariants(ex in extras(8), more in extras(8)) {
        let dims = Dims::new(2, 2, 2);
        let ambient = Ambient::<Q>::toric(dims).unwrap();
        let ring = ambient.ring().clone();
        let small = monomial_ideal(&ring, 3, &ex);
        let mut big = small.clone();
        big.extend(monomial_ideal(&ring, 3, &more));
        let ls = ambient.colength(&polys(&ring, &small)).unwrap();
        let lb = ambient.colength(&polys(&ring, &big)).unwrap();
        prop_assert!(ls >= lb);
        prop_assert!(newton_multiplicity(dims, &ring, &small).unwrap() >= newton_multiplicity(dims, &ring, &big).unwrap());
    }
}

#[test]
fn three_methods_agree_on_squares() {
    let dims = Dims::new(2, 2, 2);
    let ambient = Ambient::<Q>::toric(dims).unwrap();
    let ring = ambient.ring().clone();
    let gens = monomial_ideal(&ring, 2, &[]);
    let cfg = MultiplicityConfig::default();
    let newton = newton_multiplicity(dims, &ring, &gens).unwrap();
    // the Newton polyhedron is twice that of the maximal ideal
    assert_eq!(newton, 16 * 6);
    for method in [MultiplicityMethod::HsFit, MultiplicityMethod::GenericReduction] {
        assert_eq!(hs_multiplicity(&polys(&ring, &gens), &ambient, method, &cfg).unwrap().value, newton, "{method}");
    }
    assert_eq!(ambient.colength(&polys(&ring, &gens)).unwrap(), lattice_colength(dims, &ring, &gens));
}

#[test]
fn maximal_ideal_has_the_ring_degree() {
    let dims = Dims::new(2, 2, 2);
    let ambient = Ambient::<Q>::toric(dims).unwrap();
    let ring = ambient.ring().clone();
    let mu = degree_monomials(ring.nvars(), 1);
    assert_eq!(newton_multiplicity(dims, &ring, &mu).unwrap(), 6);
    assert_eq!(ambient.colength(&polys(&ring, &mu)).unwrap(), 1);
    let mu2 = degree_monomials(ring.nvars(), 2);
    assert_eq!(newton_multiplicity(dims, &ring, &mu2).unwrap(), 16 * 6);
    assert_eq!(ambient.colength(&polys(&ring, &mu2)).unwrap(), 9);
    let mu3 = degree_monomials(ring.nvars(), 3);
    assert_eq!(ambient.colength(&polys(&ring, &mu3)).unwrap(), 36);
}
