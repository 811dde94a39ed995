//! The monomial parametrization `x[l,i,j] -> s_i t_{(l-1)n+j}` and the
//! kernel computation identifying the toric ideal.
//!
//! The bare map only sees the horizontal concatenation: its kernel is
//! `I_2(H)`. The vertical minors become relations once the column parameters
//! are arranged in the `r × n` matrix `T` with `T[l][j] = t_{(l-1)n+j}` and
//! its 2-minors are imposed. The kernel computed here is therefore that of
//! `k[x] -> k[s, t] / I_2(T)`, obtained by eliminating `s, t` from the graph
//! ideal together with `I_2(T)`.

use std::collections::HashMap;

use crate::ddideal::{dd_ideal_in, minors, DDParams};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate, ideal_equal};
use crate::polyring::{Dims, MonomialOrder, Polynomial, Ring, RingRef, VarId};
use crate::scalar::Scalar;

pub const DEFAULT_VAR_CAP: usize = 20;

/// The parameter variables `s_1..s_m, t_1..t_{rn}`.
pub fn parameter_vars(dims: Dims) -> Vec<VarId> {
    (1..=dims.m).map(VarId::S).chain((1..=dims.r * dims.n).map(VarId::T)).collect()
}

/// Index of the column parameter for `x[l,i,j]`.
pub fn t_index(dims: Dims, l: u32, j: u32) -> u32 {
    (l - 1) * dims.n + j
}

pub fn parameter_ring(dims: Dims) -> Result<RingRef> {
    Ring::new(dims, parameter_vars(dims), MonomialOrder::Grevlex)
}

/// Images of the `X` variables, as polynomials in `target` (which must contain the parameters).
pub fn segre_map<F: Scalar>(params: &DDParams, target: &RingRef) -> Result<HashMap<VarId, Polynomial<F>>> {
    if !params.is_toric() {
        return Err(Error::InvalidParams("the parametrization is for a = b = 2".into()));
    }
    let dims = params.dims();
    let mut out = HashMap::new();
    for v in dims.x_vars() {
        let (l, i, j) = v.triple().unwrap();
        let s = Polynomial::var(target, VarId::S(i))?;
        let t = Polynomial::var(target, VarId::T(t_index(dims, l, j)))?;
        out.insert(v, &s * &t);
    }
    Ok(out)
}

/// 2-minors of `T[l][j] = t_{(l-1)n+j}`.
pub fn column_parameter_relations<F: Scalar>(dims: Dims, ring: &RingRef) -> Result<Vec<Polynomial<F>>> {
    let grid: Vec<Vec<Polynomial<F>>> = (1..=dims.r)
        .map(|l| (1..=dims.n).map(|j| Polynomial::var(ring, VarId::T(t_index(dims, l, j)))).collect())
        .collect::<Result<_>>()?;
    Ok(minors(&grid, 2))
}

fn elimination_ring(dims: Dims, cap: usize) -> Result<RingRef> {
    let mut roster = dims.x_vars();
    roster.extend(parameter_vars(dims));
    if roster.len() > cap {
        return Err(Error::VarCapExceeded { vars: roster.len(), cap });
    }
    Ring::new(dims, roster, MonomialOrder::Grevlex)
}

fn graph_ideal<F: Scalar>(params: &DDParams, ring: &RingRef) -> Result<Vec<Polynomial<F>>> {
    let images = segre_map::<F>(params, ring)?;
    params
        .dims()
        .x_vars()
        .into_iter()
        .map(|v| Ok(&Polynomial::var(ring, v)? - &images[&v]))
        .collect()
}

/// Kernel of `x[l,i,j] -> s_i t_{(l-1)n+j}` into `k[s, t] / I_2(T)`, in the `X` ring.
pub fn kernel_ideal<F: Scalar>(params: &DDParams, var_cap: usize) -> Result<Vec<Polynomial<F>>> {
    let dims = params.dims();
    let big = elimination_ring(dims, var_cap)?;
    let mut gens = graph_ideal::<F>(params, &big)?;
    gens.extend(column_parameter_relations(dims, &big)?);
    kernel_in_x_ring(&gens, dims)
}

/// Kernel of the bare monomial map into the polynomial ring `k[s, t]`.
pub fn monomial_map_kernel<F: Scalar>(params: &DDParams, var_cap: usize) -> Result<Vec<Polynomial<F>>> {
    let dims = params.dims();
    let big = elimination_ring(dims, var_cap)?;
    kernel_in_x_ring(&graph_ideal::<F>(params, &big)?, dims)
}

fn kernel_in_x_ring<F: Scalar>(gens: &[Polynomial<F>], dims: Dims) -> Result<Vec<Polynomial<F>>> {
    let xring = Ring::x_ring(dims)?;
    eliminate(gens, &parameter_vars(dims))?.iter().map(|p| p.embed(&xring)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricReport {
    pub generators: usize,
    /// Generators sent to zero by the bare map (the horizontal minors).
    pub mapped_to_zero: usize,
    /// Every generator maps into `I_2(T)`.
    pub contained: bool,
    pub kernel_size: usize,
    /// The generators and the kernel define the same ideal.
    pub equal: bool,
}

impl ToricReport {
    pub fn passed(&self) -> bool {
        self.contained && self.equal
    }
}

/// Compares the ideal of 2-minors with the kernel of the parametrization.
pub fn toric_equality<F: Scalar>(params: &DDParams, var_cap: usize) -> Result<ToricReport> {
    if !params.is_toric() {
        return Err(Error::InvalidParams("toric equality is for a = b = 2".into()));
    }
    let dims = params.dims();
    let xring = Ring::x_ring(dims)?;
    // check the cap before doing anything expensive
    elimination_ring(dims, var_cap)?;
    let gens = dd_ideal_in::<F>(params, &xring)?;

    let pring = parameter_ring(dims)?;
    let images = segre_map::<F>(params, &pring)?;
    let rel_gb = buchberger(&column_parameter_relations::<F>(dims, &pring)?, &pring)?;
    let mut mapped_to_zero = 0;
    let mut contained = true;
    for g in &gens {
        let img = g.apply_map(&images, &pring)?;
        if img.is_zero() {
            mapped_to_zero += 1;
        } else if !rel_gb.ideal_member(&img)? {
            contained = false;
        }
    }

    let kernel = kernel_ideal::<F>(params, var_cap)?;
    let equal = contained && ideal_equal(&gens, &kernel, &xring)?;
    Ok(ToricReport { generators: gens.len(), mapped_to_zero, contained, kernel_size: kernel.len(), equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ddideal::{h_matrix, minors};
    use crate::Q;

    #[test]
    fn map_images() {
        let p = DDParams::toric(Dims::new(2, 2, 2));
        let ring = parameter_ring(p.dims()).unwrap();
        let imgs = segre_map::<Q>(&p, &ring).unwrap();
        assert_eq!(imgs[&VarId::x(1, 1, 1)].to_string(), "s[1]*t[1]");
        assert_eq!(imgs[&VarId::x(2, 1, 1)].to_string(), "s[1]*t[3]");
        assert_eq!(ring.nvars(), 2 + 4);
        // every (s_i, t_k) product is hit exactly once
        let mut seen: Vec<String> = imgs.values().map(|f| f.to_string()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn classical_segre_kernel() {
        let p = DDParams::toric(Dims::new(2, 2, 1));
        let k = kernel_ideal::<Q>(&p, DEFAULT_VAR_CAP).unwrap();
        let xring = Ring::x_ring(p.dims()).unwrap();
        let det = minors(&h_matrix::<Q>(&xring), 2);
        assert!(ideal_equal(&k, &det, &xring).unwrap());
        assert!(k.iter().all(|g| g.is_unit_binomial()));
    }

    #[test]
    fn bare_map_only_sees_the_horizontal_minors() {
        let p = DDParams::toric(Dims::new(2, 2, 2));
        let xring = Ring::x_ring(p.dims()).unwrap();
        let bare = monomial_map_kernel::<Q>(&p, DEFAULT_VAR_CAP).unwrap();
        let h = minors(&h_matrix::<Q>(&xring), 2);
        assert!(ideal_equal(&bare, &h, &xring).unwrap());
        let full = dd_ideal_in::<Q>(&p, &xring).unwrap();
        assert!(!ideal_equal(&bare, &full, &xring).unwrap());
    }

    #[test]
    fn smallest_toric_case() {
        let rep = toric_equality::<Q>(&DDParams::toric(Dims::new(2, 2, 2)), DEFAULT_VAR_CAP).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.generators, 10);
        assert_eq!(rep.mapped_to_zero, 6);
    }

    #[test]
    fn cap_is_enforced() {
        let p = DDParams::toric(Dims::new(3, 3, 2));
        assert!(matches!(
            toric_equality::<Q>(&p, DEFAULT_VAR_CAP),
            Err(Error::VarCapExceeded { vars: 27, cap: 20 })
        ));
    }
}
