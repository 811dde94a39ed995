//! Double determinantal ideals and the affine charts of their projective varieties.
//!
//! `H` is the `m × rn` horizontal concatenation `[X_1 | ... | X_r]` and `V`
//! the `rm × n` vertical one. The ideal is `I_a(H) + I_b(V)`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::polyring::{Dims, Monomial, MonomialOrder, Polynomial, Ring, RingRef, VarId};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DDParams {
    pub m: u32,
    pub n: u32,
    pub r: u32,
    pub a: u32,
    pub b: u32,
}

impl DDParams {
    pub fn new(m: u32, n: u32, r: u32, a: u32, b: u32) -> Result<Self> {
        if m == 0 || n == 0 || r == 0 {
            return Err(Error::InvalidParams(format!("m, n, r must be positive (got {m}, {n}, {r})")));
        }
        if a < 2 || b < 2 {
            return Err(Error::InvalidParams(format!("minor sizes must be at least 2 (got a={a}, b={b})")));
        }
        Ok(DDParams { m, n, r, a, b })
    }

    /// The `a = b = 2` case.
    pub fn toric(dims: Dims) -> Self {
        DDParams { m: dims.m, n: dims.n, r: dims.r, a: 2, b: 2 }
    }

    pub fn dims(&self) -> Dims {
        Dims::new(self.m, self.n, self.r)
    }

    pub fn is_toric(&self) -> bool {
        self.a == 2 && self.b == 2
    }
}

fn var<F: Scalar>(ring: &RingRef, v: VarId) -> Polynomial<F> {
    Polynomial::var(ring, v).expect("variable is in the ring")
}

/// `H[i][(l-1)n + j] = x[l,i,j]`.
pub fn h_matrix<F: Scalar>(ring: &RingRef) -> Vec<Vec<Polynomial<F>>> {
    let Dims { m, n, r } = ring.dims();
    (1..=m)
        .map(|i| (1..=r).flat_map(|l| (1..=n).map(move |j| (l, j))).map(|(l, j)| var(ring, VarId::x(l, i, j))).collect())
        .collect()
}

/// `V[(l-1)m + i][j] = x[l,i,j]`.
pub fn v_matrix<F: Scalar>(ring: &RingRef) -> Vec<Vec<Polynomial<F>>> {
    let Dims { m, n, r } = ring.dims();
    (1..=r)
        .flat_map(|l| (1..=m).map(move |i| (l, i)))
        .map(|(l, i)| (1..=n).map(|j| var(ring, VarId::x(l, i, j))).collect())
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(p) = (0..k).rev().find(|&p| cur[p] != p + n - k) else {
            return out;
        };
        cur[p] += 1;
        for q in p + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

/// Determinant by expansion along the first row.
fn determinant<F: Scalar>(grid: &[Vec<Polynomial<F>>], rows: &[usize], cols: &[usize]) -> Polynomial<F> {
    if rows.len() == 1 {
        return grid[rows[0]][cols[0]].clone();
    }
    let mut acc = Polynomial::zero(grid[rows[0]][cols[0]].ring());
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &grid[rows[0]][c] * &determinant(grid, &rows[1..], &rest);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// All `size`-minors, row sets then column sets in lexicographic order.
/// Empty when `size` exceeds a dimension.
pub fn minors<F: Scalar>(grid: &[Vec<Polynomial<F>>], size: usize) -> Vec<Polynomial<F>> {
    let nrows = grid.len();
    let ncols = grid.first().map_or(0, |r| r.len());
    if size == 0 || size > nrows || size > ncols {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rows in combinations(nrows, size) {
        for cols in combinations(ncols, size) {
            out.push(determinant(grid, &rows, &cols));
        }
    }
    out
}

/// Keeps the first occurrence of each polynomial up to sign.
fn dedup_up_to_sign<F: Scalar>(polys: impl IntoIterator<Item = Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut seen: HashSet<String> = HashSet::new();
    let mut out = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let p = if p.leading_coeff().unwrap().is_negative() { -&p } else { p };
        if seen.insert(p.to_string()) {
            out.push(p);
        }
    }
    out
}

/// Generators of `I_a(H) + I_b(V)`: minors of `H` first, then the new ones from `V`.
pub fn dd_ideal<F: Scalar>(params: &DDParams) -> Result<Vec<Polynomial<F>>> {
    let ring = Ring::x_ring(params.dims())?;
    dd_ideal_in(params, &ring)
}

/// [`dd_ideal`] in a given ring on (at least) the `X` variables.
pub fn dd_ideal_in<F: Scalar>(params: &DDParams, ring: &RingRef) -> Result<Vec<Polynomial<F>>> {
    if ring.dims() != params.dims() {
        return Err(Error::RingMismatch);
    }
    let h = minors(&h_matrix::<F>(ring), params.a as usize);
    let v = minors(&v_matrix::<F>(ring), params.b as usize);
    Ok(dedup_up_to_sign(h.into_iter().chain(v)))
}

/// Variables split by how many of (same row, same column, same block) they share with the pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartPartition {
    pub pivot: VarId,
    /// At least two coincidences; the pivot itself is here.
    pub y1: Vec<VarId>,
    /// Exactly one.
    pub y2: Vec<VarId>,
    /// None.
    pub y3: Vec<VarId>,
}

fn coincidences(pivot: (u32, u32, u32), v: (u32, u32, u32)) -> (bool, bool, bool) {
    (v.1 == pivot.1, v.2 == pivot.2, v.0 == pivot.0)
}

fn check_pivot(params: &DDParams, pivot: VarId) -> Result<(u32, u32, u32)> {
    let t = pivot.triple().filter(|_| pivot.is_x());
    match t {
        Some((l, i, j)) if (1..=params.r).contains(&l) && (1..=params.m).contains(&i) && (1..=params.n).contains(&j) => {
            Ok((l, i, j))
        }
        _ => Err(Error::InvalidParams(format!("pivot {pivot} is not a variable of shape {}", params.dims()))),
    }
}

pub fn chart_partition(params: &DDParams, pivot: VarId) -> Result<ChartPartition> {
    if !params.is_toric() {
        return Err(Error::InvalidParams("charts are defined for a = b = 2".into()));
    }
    let p = check_pivot(params, pivot)?;
    let mut part = ChartPartition { pivot, y1: Vec::new(), y2: Vec::new(), y3: Vec::new() };
    for v in params.dims().x_vars() {
        let (a, b, c) = coincidences(p, v.triple().unwrap());
        match a as u8 + b as u8 + c as u8 {
            0 => part.y3.push(v),
            1 => part.y2.push(v),
            _ => part.y1.push(v),
        }
    }
    Ok(part)
}

/// Image of a variable in the chart: `numerator / pivot^denominator_exponent`,
/// the numerator a product of `z` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartFraction {
    pub numerator: Vec<VarId>,
    pub denominator_exponent: u32,
    pub pivot: VarId,
}

impl fmt::Display for ChartFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<String> = self.numerator.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", num.join("*"))?;
        match self.denominator_exponent {
            0 => Ok(()),
            1 => write!(f, " / {}", self.pivot),
            e => write!(f, " / {}^{}", self.pivot, e),
        }
    }
}

/// The chart map on one `X` variable.
pub fn chart_phi(params: &DDParams, pivot: VarId, v: VarId) -> Result<ChartFraction> {
    let (lp, ip, jp) = check_pivot(params, pivot)?;
    let (l, i, j) = check_pivot(params, v)?;
    let zp = VarId::z(lp, ip, jp);
    let (same_i, same_j, same_l) = coincidences((lp, ip, jp), (l, i, j));
    let (numerator, e) = match (same_i, same_j, same_l) {
        (a, b, c) if a as u8 + b as u8 + c as u8 >= 2 => (vec![VarId::z(l, i, j)], 0),
        (false, false, true) => (vec![VarId::z(lp, i, jp), VarId::z(lp, ip, j)], 1),
        (true, false, false) => (vec![VarId::z(lp, ip, j), VarId::z(l, ip, jp)], 1),
        (false, true, false) => (vec![VarId::z(lp, i, jp), VarId::z(l, ip, jp)], 1),
        _ => (vec![VarId::z(lp, ip, j), VarId::z(lp, i, jp), VarId::z(l, ip, jp)], 2),
    };
    Ok(ChartFraction { numerator, denominator_exponent: e, pivot: zp })
}

/// Outcome of checking one chart.
#[derive(Clone, Debug)]
pub struct ChartReport {
    pub partition: ChartPartition,
    /// Generators whose image did not vanish.
    pub failed_generators: Vec<String>,
    /// Variables `v` with `pivot^e v - psi(numerator)` outside the ideal.
    pub failed_variables: Vec<VarId>,
    pub y1_size: usize,
    pub expected_y1_size: usize,
}

impl ChartReport {
    pub fn passed(&self) -> bool {
        self.failed_generators.is_empty() && self.failed_variables.is_empty() && self.y1_size == self.expected_y1_size
    }
}

/// Holds the generators and a Gröbner basis of the ideal so several pivots
/// can be checked without recomputation.
pub struct ChartVerifier<F> {
    params: DDParams,
    xring: RingRef,
    gens: Vec<Polynomial<F>>,
    gb: GroebnerBasis<F>,
}

impl<F: Scalar> ChartVerifier<F> {
    pub fn new(params: DDParams) -> Result<Self> {
        if !params.is_toric() {
            return Err(Error::InvalidParams("charts are defined for a = b = 2".into()));
        }
        let xring = Ring::x_ring(params.dims())?;
        let gens = dd_ideal_in(&params, &xring)?;
        let gb = buchberger(&gens, &xring)?;
        Ok(ChartVerifier { params, xring, gens, gb })
    }

    pub fn verify(&self, pivot: VarId) -> Result<ChartReport> {
        let params = &self.params;
        let partition = chart_partition(params, pivot)?;
        let zring = Ring::new(
            params.dims(),
            partition.y1.iter().map(|v| v.swap_family()).collect(),
            MonomialOrder::Grevlex,
        )?;
        let mut images: HashMap<VarId, ChartFraction> = HashMap::new();
        for v in params.dims().x_vars() {
            images.insert(v, chart_phi(params, pivot, v)?);
        }
        let zpos = zring.position(pivot.swap_family()).unwrap();

        let mut failed_generators = Vec::new();
        for g in &self.gens {
            if !cleared_image(g, &images, &zring, zpos)?.is_zero() {
                failed_generators.push(g.to_string());
            }
        }

        let xpos = self.xring.position(pivot).unwrap();
        let nx = self.xring.nvars();
        let mut failed_variables = Vec::new();
        for v in params.dims().x_vars() {
            let frac = &images[&v];
            let mut lhs = vec![0u32; nx];
            lhs[xpos] += frac.denominator_exponent;
            lhs[self.xring.position(v).unwrap()] += 1;
            let mut rhs = vec![0u32; nx];
            for z in &frac.numerator {
                rhs[self.xring.position(z.swap_family()).unwrap()] += 1;
            }
            let diff = Polynomial::binomial(&self.xring, Monomial::from_exponents(lhs), Monomial::from_exponents(rhs));
            if !self.gb.ideal_member(&diff)? {
                failed_variables.push(v);
            }
        }

        let Dims { m, n, r } = params.dims();
        Ok(ChartReport {
            y1_size: partition.y1.len(),
            expected_y1_size: (m + n + r - 2) as usize,
            partition,
            failed_generators,
            failed_variables,
        })
    }
}

/// `pivot^E * phi(g)` for the smallest `E` clearing every denominator.
fn cleared_image<F: Scalar>(
    g: &Polynomial<F>,
    images: &HashMap<VarId, ChartFraction>,
    zring: &RingRef,
    zpos: usize,
) -> Result<Polynomial<F>> {
    let ring = g.ring();
    let mut terms = Vec::with_capacity(g.len());
    let mut max_e = 0;
    for t in g.terms() {
        let mut exps = vec![0u32; zring.nvars()];
        let mut e = 0;
        for k in t.mono.support() {
            let pw = t.mono.exponent(k);
            let frac = &images[&ring.var_at(k)];
            e += frac.denominator_exponent * pw;
            for z in &frac.numerator {
                exps[zring.position(*z).ok_or(Error::UnknownVariable(*z))?] += pw;
            }
        }
        max_e = max_e.max(e);
        terms.push((t.coeff.clone(), exps, e));
    }
    Ok(Polynomial::from_terms(
        zring,
        terms.into_iter().map(|(c, mut exps, e)| {
            exps[zpos] += max_e - e;
            (c, Monomial::from_exponents(exps))
        }),
    ))
}

/// Checks one chart from scratch.
pub fn verify_chart<F: Scalar>(params: &DDParams, pivot: VarId) -> Result<ChartReport> {
    ChartVerifier::<F>::new(*params)?.verify(pivot)
}

/// Result of checking that the larger minors lie in the ideal of 2-minors of the other concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentReport {
    /// Number of large minors reduced.
    pub checked: usize,
    /// Indices (in [`minors`] order) of those that did not reduce to zero.
    pub failures: Vec<usize>,
}

impl ContainmentReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    /// No minors of the requested size exist.
    pub fn is_vacuous(&self) -> bool {
        self.checked == 0
    }
}

/// For `r = 2` with one of `a, b` equal to 2 and the other larger: whether the
/// larger minors already lie in the ideal of 2-minors (`I_b(V) ⊆ I_2(H)` when
/// `a = 2`, `I_a(H) ⊆ I_2(V)` when `b = 2`).
pub fn containment_check<F: Scalar>(params: &DDParams) -> Result<ContainmentReport> {
    if params.r != 2 {
        return Err(Error::InvalidParams(format!("containment needs r = 2 (got r = {})", params.r)));
    }
    let ring = Ring::x_ring(params.dims())?;
    let (small, large) = match (params.a, params.b) {
        (2, b) if b > 2 => (minors(&h_matrix::<F>(&ring), 2), minors(&v_matrix::<F>(&ring), b as usize)),
        (a, 2) if a > 2 => (minors(&v_matrix::<F>(&ring), 2), minors(&h_matrix::<F>(&ring), a as usize)),
        _ => {
            return Err(Error::InvalidParams(format!(
                "need one of a, b equal to 2 and the other larger (got a={}, b={})",
                params.a, params.b
            )))
        }
    };
    let mut failures = Vec::new();
    if !large.is_empty() {
        let gb = buchberger(&small, &ring)?;
        for (k, d) in large.iter().enumerate() {
            if !gb.ideal_member(d)? {
                failures.push(k);
            }
        }
    }
    Ok(ContainmentReport { checked: large.len(), failures })
}
