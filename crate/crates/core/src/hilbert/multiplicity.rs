use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{colength, newton_multiplicity, quotient_numerator, MonomialIdeal};
use crate::ddideal::{dd_ideal, DDParams};
use crate::error::{Error, Result};
use crate::polyring::{Dims, Monomial, Polynomial, Ring, RingRef};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplicityMethod {
    /// Length of a generic parameter ideal inside `J` (the ring is Cohen–Macaulay).
    GenericReduction,
    /// `d`-th difference of `n -> length(R/J^n)`.
    HsFit,
    /// Volume under the Newton polyhedron; monomial `J` in the toric ring only.
    NewtonVolume,
}

impl std::fmt::Display for MultiplicityMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MultiplicityMethod::GenericReduction => "generic-reduction",
            MultiplicityMethod::HsFit => "hs-fit",
            MultiplicityMethod::NewtonVolume => "newton-volume",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiplicityDiagnostics {
    /// Values produced by the successful generic draws, in draw order.
    pub draw_values: Vec<u64>,
    /// Draws that were not a system of parameters.
    pub failed_draws: usize,
    /// Largest power of the maximal ideal needed for a local length.
    pub stabilization_exponent: u32,
    /// `length(R/J^n)` for `n = 1, 2, ...` (hs-fit only).
    pub fit_lengths: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityResult {
    pub value: u64,
    pub method: MultiplicityMethod,
    pub diagnostics: MultiplicityDiagnostics,
}

#[derive(Clone, Debug)]
pub struct MultiplicityConfig {
    pub seed: u64,
    pub max_draws: usize,
    /// Coefficients are nonzero integers in `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    pub mu_cap: u32,
    pub fit_cap: u32,
}

impl Default for MultiplicityConfig {
    fn default() -> Self {
        MultiplicityConfig { seed: 0, max_draws: 6, coeff_bound: 100, mu_cap: 120, fit_cap: 14 }
    }
}

/// The ring `J` lives in: a polynomial ring, or the toric ring `R/I` of some shape.
#[derive(Clone)]
pub struct Ambient<F> {
    ring: RingRef,
    relations: Vec<Polynomial<F>>,
    dim: usize,
    toric: Option<Dims>,
}

impl<F: Scalar> std::fmt::Debug for Ambient<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ambient")
            .field("relations", &self.relations)
            .field("dim", &self.dim)
            .field("toric", &self.toric)
            .finish()
    }
}

impl<F: Scalar> Ambient<F> {
    pub fn free(ring: &RingRef) -> Self {
        Ambient { ring: ring.clone(), relations: Vec::new(), dim: ring.nvars(), toric: None }
    }

    /// `R/I` with `I` the ideal of 2-minors of both concatenations.
    pub fn toric(dims: Dims) -> Result<Self> {
        let ring = Ring::x_ring(dims)?;
        let relations = dd_ideal(&DDParams::toric(dims))?;
        let dim = quotient_numerator(&relations, &ring)?.krull_dim()?;
        Ok(Ambient { ring, relations, dim, toric: Some(dims) })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial<F>] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn toric_dims(&self) -> Option<Dims> {
        self.toric
    }

    /// `length(ambient / J)`.
    pub fn colength(&self, gens: &[Polynomial<F>]) -> Result<u64> {
        let mut all = self.relations.clone();
        for g in gens {
            all.push(g.embed(&self.ring)?);
        }
        colength(&all, &self.ring)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalColength {
    pub value: u64,
    /// Power of the maximal ideal at which the value stabilized (0 for homogeneous input).
    pub exponent: u32,
}

/// Length of the localization at the maximal ideal of the variables.
///
/// Homogeneous input is supported only at the origin, so this is the plain
/// colength. Otherwise `length(R/(gens + m^N))` is computed for `N = 1, 2, ...`
/// until two consecutive values agree.
pub fn local_colength<F: Scalar>(gens: &[Polynomial<F>], ring: &RingRef, cap: u32) -> Result<LocalColength> {
    let gens: Vec<Polynomial<F>> = gens.iter().map(|g| g.embed(ring)).collect::<Result<_>>()?;
    if gens.iter().all(|g| g.is_homogeneous()) {
        return match colength(&gens, ring) {
            Ok(value) => Ok(LocalColength { value, exponent: 0 }),
            Err(Error::NotArtinian(_)) => Err(Error::NoStabilization(0)),
            Err(e) => Err(e),
        };
    }
    let nv = ring.nvars();
    let mut prev: Option<u64> = None;
    for big_n in 1..=cap {
        let mut all = gens.clone();
        all.extend(degree_monomials(nv, big_n).into_iter().map(|m| Polynomial::monomial(ring, m)));
        let value = colength(&all, ring)?;
        if prev == Some(value) {
            return Ok(LocalColength { value, exponent: big_n - 1 });
        }
        prev = Some(value);
    }
    Err(Error::NoStabilization(cap))
}

/// All monomials of degree `d` in `nv` variables.
pub fn degree_monomials(nv: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nv];
    fn go(k: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == exps.len() {
            exps[k] = left;
            out.push(Monomial::from_exponents(exps.clone()));
            exps[k] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[k] = e;
            go(k + 1, left - e, exps, out);
        }
        exps[k] = 0;
    }
    if nv > 0 {
        go(0, d, &mut exps, &mut out);
    }
    out
}

fn nonzero_coeff(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

/// Generators of `J^n`, minimalized when `J` is monomial.
fn power_generators<F: Scalar>(gens: &[Polynomial<F>], n: u32, ring: &RingRef) -> Vec<Polynomial<F>> {
    if gens.iter().all(|g| g.is_monomial()) {
        let base: Vec<Monomial> = gens.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
        let mut cur = MonomialIdeal::new(ring.nvars(), base.clone());
        for _ in 1..n {
            let prod = cur.generators().iter().flat_map(|a| base.iter().map(move |b| a.mul(b)));
            cur = MonomialIdeal::new(ring.nvars(), prod.collect::<Vec<_>>());
        }
        return cur.generators().iter().map(|m| Polynomial::monomial(ring, m.clone())).collect();
    }
    let mut cur: Vec<Polynomial<F>> = gens.to_vec();
    for _ in 1..n {
        let mut next: Vec<Polynomial<F>> = Vec::new();
        for a in &cur {
            for b in gens {
                let p = (a * b).make_monic();
                if !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        cur = next;
    }
    cur
}

/// Hilbert–Samuel multiplicity of the ideal generated by `gens` in `ambient`.
pub fn hs_multiplicity<F: Scalar>(
    gens: &[Polynomial<F>],
    ambient: &Ambient<F>,
    method: MultiplicityMethod,
    config: &MultiplicityConfig,
) -> Result<MultiplicityResult> {
    let ring = ambient.ring();
    let gens: Vec<Polynomial<F>> =
        gens.iter().map(|g| g.embed(ring)).filter(|g| !matches!(g, Ok(p) if p.is_zero())).collect::<Result<_>>()?;
    // primary to the maximal ideal: finite colength
    ambient.colength(&gens)?;
    let d = ambient.dim();
    let mut diag = MultiplicityDiagnostics::default();
    let value = match method {
        MultiplicityMethod::NewtonVolume => {
            let dims = ambient
                .toric_dims()
                .ok_or_else(|| Error::Unsupported("Newton volume needs the toric ring".into()))?;
            if !gens.iter().all(|g| g.is_monomial()) {
                return Err(Error::Unsupported("Newton volume needs a monomial ideal".into()));
            }
            let monos: Vec<Monomial> = gens.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
            newton_multiplicity(dims, ring, &monos)?
        }
        MultiplicityMethod::GenericReduction => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut found = None;
            for _ in 0..config.max_draws {
                let mut sys = ambient.relations().to_vec();
                for _ in 0..d {
                    let mut comb = Polynomial::zero(ring);
                    for g in &gens {
                        let c = F::from_int(nonzero_coeff(&mut rng, config.coeff_bound));
                        comb = &comb + &g.scale(&c);
                    }
                    sys.push(comb);
                }
                match local_colength(&sys, ring, config.mu_cap) {
                    Ok(lc) => {
                        diag.draw_values.push(lc.value);
                        diag.stabilization_exponent = diag.stabilization_exponent.max(lc.exponent);
                    }
                    Err(Error::NoStabilization(_) | Error::NotArtinian(_)) => diag.failed_draws += 1,
                    Err(e) => return Err(e),
                }
                if let Some(&min) = diag.draw_values.iter().min() {
                    if diag.draw_values.iter().filter(|&&v| v == min).count() >= 2 {
                        found = Some(min);
                        break;
                    }
                }
            }
            found.ok_or_else(|| Error::RetryCapExceeded {
                draws: config.max_draws,
                seen: diag.draw_values.clone(),
            })?
        }
        MultiplicityMethod::HsFit => {
            let mut diffs: Vec<i128> = Vec::new();
            let mut found = None;
            for n in 1..=config.fit_cap {
                let pw = power_generators(&gens, n, ring);
                diag.fit_lengths.push(ambient.colength(&pw)?);
                if diag.fit_lengths.len() > d {
                    let tail = &diag.fit_lengths[diag.fit_lengths.len() - d - 1..];
                    diffs.push(finite_difference(tail));
                    let k = diffs.len();
                    if k >= 2 && diffs[k - 1] == diffs[k - 2] {
                        found = Some(diffs[k - 1]);
                        break;
                    }
                }
            }
            match found {
                Some(v) if v > 0 => v as u64,
                Some(v) => return Err(Error::Unsupported(format!("fitted multiplicity {v} is not positive"))),
                None => return Err(Error::NoStabilization(config.fit_cap)),
            }
        }
    };
    Ok(MultiplicityResult { value, method, diagnostics: diag })
}

/// `d`-th forward difference of `d + 1` consecutive values.
fn finite_difference(vals: &[u64]) -> i128 {
    let mut v: Vec<i128> = vals.iter().map(|&x| x as i128).collect();
    while v.len() > 1 {
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
    }
    v[0]
}
