//! Multiplicity of a monomial ideal in the toric ring through the volume of
//! its Newton polyhedron.
//!
//! The quotient ring is the semigroup ring of the points `e_i + f_j + g_l`,
//! one per variable `x[l,i,j]`. In the coordinates
//! `(s_1..s_{m-1}, t_1..t_{n-1}, u_1..u_{r-1}, degree)` those points generate
//! `Z^D` and the ring is normal, so for a monomial ideal `J`
//! `e(J) = D! vol(cone \ Newt(J))`, which is the sum over the compact facets
//! `F` of the normalized volume of the pyramid `conv(0, F)`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Dims, Monomial, RingRef};
use crate::Q;

/// Lattice point of a monomial in the `X` variables of `ring`.
pub fn segre_point(dims: Dims, ring: &RingRef, mono: &Monomial) -> Result<Vec<i64>> {
    let d = (dims.m + dims.n + dims.r - 2) as usize;
    let mut p = vec![0i64; d];
    for k in mono.support() {
        let v = ring.var_at(k);
        let (l, i, j) = match v.triple() {
            Some(t) if v.is_x() => t,
            _ => return Err(Error::UnknownVariable(v)),
        };
        let e = mono.exponent(k) as i64;
        if i < dims.m {
            p[(i - 1) as usize] += e;
        }
        if j < dims.n {
            p[(dims.m - 1 + j - 1) as usize] += e;
        }
        if l < dims.r {
            p[(dims.m + dims.n - 2 + l - 1) as usize] += e;
        }
        p[d - 1] += e;
    }
    Ok(p)
}

fn to_q(p: &[i64]) -> Vec<Q> {
    p.iter().map(|&c| Q::from_integer(c.into())).collect()
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Row echelon form in place; returns the pivot columns.
fn echelon(rows: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[k].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// A nonzero vector orthogonal to every row, when the rows have corank one.
fn normal_vector(rows: &[Vec<Q>], ncols: usize) -> Option<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m, ncols);
    if pivots.len() + 1 != ncols {
        return None;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c)).unwrap();
    let mut n = vec![Q::zero(); ncols];
    n[free] = Q::one();
    for (r, &c) in pivots.iter().enumerate() {
        n[c] = -m[r][free].clone();
    }
    Some(n)
}

fn affine_rank(pts: &[Vec<Q>]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let ncols = pts[0].len();
    let mut rows: Vec<Vec<Q>> = pts[1..].iter().map(|p| sub(p, &pts[0])).collect();
    echelon(&mut rows, ncols).len()
}

fn determinant(mut rows: Vec<Vec<Q>>) -> Q {
    let n = rows.len();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&k| !rows[k][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            rows.swap(p, c);
            det = -det;
        }
        det = &det * &rows[c][c];
        for k in c + 1..n {
            if !rows[k][c].is_zero() {
                let f = &rows[k][c] / &rows[c][c];
                let pivot_row = rows[c].clone();
                for (x, y) in rows[k].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    det
}

/// Every `k`-subset of `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Coordinates on which the projection of the affine hull of `pts` is injective.
fn injective_coordinates(pts: &[Vec<Q>], k: usize) -> Vec<usize> {
    let ncols = pts[0].len();
    let mut chosen = Vec::new();
    for c in 0..ncols {
        let mut trial = chosen.clone();
        trial.push(c);
        let proj: Vec<Vec<Q>> = pts.iter().map(|p| trial.iter().map(|&t| p[t].clone()).collect()).collect();
        if affine_rank(&proj) == trial.len() {
            chosen = trial;
            if chosen.len() == k {
                break;
            }
        }
    }
    chosen
}

/// Facets of `conv(pts)` for full-dimensional `pts`, as index sets with their hyperplanes.
fn facets(pts: &[Vec<Q>]) -> Vec<(Vec<usize>, Vec<Q>, Q)> {
    let dim = pts[0].len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in subsets(pts.len(), dim) {
        let rows: Vec<Vec<Q>> = s[1..].iter().map(|&k| sub(&pts[k], &pts[s[0]])).collect();
        let Some(n) = normal_vector(&rows, dim) else {
            continue;
        };
        let c = dot(&n, &pts[s[0]]);
        let vals: Vec<Q> = pts.iter().map(|p| dot(&n, p) - &c).collect();
        let above = vals.iter().all(|v| !v.is_negative());
        let below = vals.iter().all(|v| !v.is_positive());
        if !above && !below {
            continue;
        }
        let on: Vec<usize> = (0..pts.len()).filter(|&k| vals[k].is_zero()).collect();
        if seen.insert(on.clone()) {
            out.push((on, n, c));
        }
    }
    out
}

/// Pulling triangulation of `conv(pts)`; simplices are index lists of length `dim + 1`.
fn triangulate(pts: &[Vec<Q>]) -> Vec<Vec<usize>> {
    let k = affine_rank(pts);
    if pts.len() == k + 1 {
        return vec![(0..pts.len()).collect()];
    }
    let coords = injective_coordinates(pts, k);
    let proj: Vec<Vec<Q>> = pts.iter().map(|p| coords.iter().map(|&c| p[c].clone()).collect()).collect();
    let mut out = Vec::new();
    for (face, n, c) in facets(&proj) {
        if dot(&n, &proj[0]) == c {
            continue;
        }
        let sub_pts: Vec<Vec<Q>> = face.iter().map(|&f| pts[f].clone()).collect();
        for simplex in triangulate(&sub_pts) {
            let mut s = vec![0];
            s.extend(simplex.iter().map(|&t| face[t]));
            out.push(s);
        }
    }
    out
}

/// `e(J)` for the monomial ideal generated by `gens` in the toric ring of shape `dims`.
pub fn newton_multiplicity(dims: Dims, ring: &RingRef, gens: &[Monomial]) -> Result<u64> {
    let d = (dims.m + dims.n + dims.r - 2) as usize;
    let mut raw: Vec<Vec<i64>> = gens.iter().map(|g| segre_point(dims, ring, g)).collect::<Result<_>>()?;
    raw.sort();
    raw.dedup();
    if raw.iter().any(|p| p.iter().all(|&c| c == 0)) {
        return Err(Error::ZeroRing);
    }
    let xring = crate::polyring::Ring::x_ring(dims)?;
    let rays: Vec<(crate::polyring::VarId, Vec<i64>)> = dims
        .x_vars()
        .into_iter()
        .enumerate()
        .map(|(k, v)| Ok((v, segre_point(dims, &xring, &Monomial::var(xring.nvars(), k))?)))
        .collect::<Result<_>>()?;
    // primary to the maximal ideal iff every ray carries a generator
    for (v, ray) in &rays {
        let on_ray = raw.iter().any(|p| {
            let t = p[d - 1];
            t > 0 && p.iter().zip(ray).all(|(a, b)| *a == b * t)
        });
        if !on_ray {
            return Err(Error::NotArtinian(*v));
        }
    }
    let pts: Vec<Vec<Q>> = raw.iter().map(|p| to_q(p)).collect();
    let rays: Vec<Vec<Q>> = rays.iter().map(|(_, r)| to_q(r)).collect();

    let mut seen = BTreeSet::new();
    let mut total = Q::zero();
    for s in subsets(pts.len(), d) {
        let rows: Vec<Vec<Q>> = s[1..].iter().map(|&k| sub(&pts[k], &pts[s[0]])).collect();
        let Some(mut n) = normal_vector(&rows, d) else {
            continue;
        };
        if dot(&n, &rays[0]).is_negative() {
            n = n.into_iter().map(|x| -x).collect();
        }
        if !rays.iter().all(|r| dot(&n, r).is_positive()) {
            continue;
        }
        let c = dot(&n, &pts[s[0]]);
        if pts.iter().any(|p| dot(&n, p) < c) {
            continue;
        }
        let face: Vec<usize> = (0..pts.len()).filter(|&k| dot(&n, &pts[k]) == c).collect();
        if !seen.insert(face.clone()) {
            continue;
        }
        let face_pts: Vec<Vec<Q>> = face.iter().map(|&k| pts[k].clone()).collect();
        for simplex in triangulate(&face_pts) {
            let rows: Vec<Vec<Q>> = simplex.iter().map(|&t| face_pts[t].clone()).collect();
            total += determinant(rows).abs();
        }
    }
    if !total.is_integer() {
        return Err(Error::Unsupported(format!("non-integral volume {total}")));
    }
    use num_traits::ToPrimitive;
    total.to_integer().to_u64().ok_or_else(|| Error::Unsupported("volume out of range".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Ring;

    fn pow_all(dims: Dims, e: u32) -> Vec<Monomial> {
        let n = (dims.m * dims.n * dims.r) as usize;
        (0..n).map(|k| Monomial::var_pow(n, k, e)).collect()
    }

    #[test]
    fn maximal_ideal_has_multiplicity_six() {
        let dims = Dims::new(2, 2, 2);
        let ring = Ring::x_ring(dims).unwrap();
        assert_eq!(newton_multiplicity(dims, &ring, &pow_all(dims, 1)).unwrap(), 6);
        assert_eq!(newton_multiplicity(dims, &ring, &pow_all(dims, 3)).unwrap(), 6 * 81);
    }

    #[test]
    fn segre_plane_and_three_by_two() {
        // r = 1, m = n = 2: quadric cone, degree 2
        let dims = Dims::new(2, 2, 1);
        let ring = Ring::x_ring(dims).unwrap();
        assert_eq!(newton_multiplicity(dims, &ring, &pow_all(dims, 1)).unwrap(), 2);
        // degree of the Segre product of P^2, P^1, P^1 is 4!/(2!1!1!) = 12
        let dims = Dims::new(3, 2, 2);
        let ring = Ring::x_ring(dims).unwrap();
        assert_eq!(newton_multiplicity(dims, &ring, &pow_all(dims, 1)).unwrap(), 12);
    }

    #[test]
    fn missing_ray_is_rejected() {
        let dims = Dims::new(2, 2, 2);
        let ring = Ring::x_ring(dims).unwrap();
        let mut gens = pow_all(dims, 2);
        gens.pop();
        assert!(matches!(newton_multiplicity(dims, &ring, &gens), Err(Error::NotArtinian(_))));
    }

    #[test]
    fn triangulation_of_a_square() {
        let sq: Vec<Vec<Q>> = [[0, 0], [1, 0], [0, 1], [1, 1]].iter().map(|p| to_q(p)).collect();
        let tri = triangulate(&sq);
        assert_eq!(tri.len(), 2);
        let area: Q = tri
            .iter()
            .map(|s| determinant(vec![sub(&sq[s[1]], &sq[s[0]]), sub(&sq[s[2]], &sq[s[0]])]).abs())
            .sum();
        assert_eq!(area, Q::from_integer(2.into()));
    }
}
