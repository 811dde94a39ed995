//! Exact multivariate polynomials over indexed variable families.
//!
//! A [`Ring`] is a roster of variables together with a monomial order. Rings
//! are shared behind an `Arc` and every [`Polynomial`] carries the ring it
//! lives in, so arithmetic between polynomials of different rings is caught
//! instead of silently misaligning exponent vectors.

mod monomial;
mod poly;
mod text;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub use monomial::{compare, Monomial, MonomialOrder};
pub use poly::{Polynomial, Term};
pub use text::{parse_polynomial, parse_polynomial_lines, render_polynomial};

use crate::error::{Error, Result};

/// One indeterminate.
///
/// `X` and `Z` carry (block, row, column); `S` and `T` are the row and column
/// parameters of the monomial parametrization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarId {
    X { l: u32, i: u32, j: u32 },
    S(u32),
    T(u32),
    Z { l: u32, i: u32, j: u32 },
}

impl VarId {
    pub fn x(l: u32, i: u32, j: u32) -> Self {
        VarId::X { l, i, j }
    }

    pub fn z(l: u32, i: u32, j: u32) -> Self {
        VarId::Z { l, i, j }
    }

    pub fn is_x(&self) -> bool {
        matches!(self, VarId::X { .. })
    }

    /// `(l, i, j)` for `X`/`Z` variables.
    pub fn triple(&self) -> Option<(u32, u32, u32)> {
        match *self {
            VarId::X { l, i, j } | VarId::Z { l, i, j } => Some((l, i, j)),
            _ => None,
        }
    }

    /// The `Z` variable carrying the same indices as an `X` variable (and vice versa).
    pub fn swap_family(&self) -> Self {
        match *self {
            VarId::X { l, i, j } => VarId::Z { l, i, j },
            VarId::Z { l, i, j } => VarId::X { l, i, j },
            other => other,
        }
    }

    fn fits(&self, dims: Dims) -> bool {
        let Dims { m, n, r } = dims;
        match *self {
            VarId::X { l, i, j } | VarId::Z { l, i, j } => {
                (1..=r).contains(&l) && (1..=m).contains(&i) && (1..=n).contains(&j)
            }
            VarId::S(i) => (1..=m).contains(&i),
            VarId::T(j) => (1..=r * n).contains(&j),
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::X { l, i, j } => write!(f, "x[{l},{i},{j}]"),
            VarId::S(i) => write!(f, "s[{i}]"),
            VarId::T(j) => write!(f, "t[{j}]"),
            VarId::Z { l, i, j } => write!(f, "z[{l},{i},{j}]"),
        }
    }
}

/// Shape of the matrix family: `r` blocks of size `m × n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dims {
    pub m: u32,
    pub n: u32,
    pub r: u32,
}

impl Dims {
    pub fn new(m: u32, n: u32, r: u32) -> Self {
        Dims { m, n, r }
    }

    /// All `X` variables, block-major, then row, then column.
    pub fn x_vars(&self) -> Vec<VarId> {
        let mut out = Vec::with_capacity((self.m * self.n * self.r) as usize);
        for l in 1..=self.r {
            for i in 1..=self.m {
                for j in 1..=self.n {
                    out.push(VarId::x(l, i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m, self.n, self.r)
    }
}

/// A polynomial ring: roster of variables plus a monomial order.
#[derive(Clone, Debug)]
pub struct Ring {
    dims: Dims,
    roster: Vec<VarId>,
    index: HashMap<VarId, usize>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.roster == other.roster && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(dims: Dims, roster: Vec<VarId>, order: MonomialOrder) -> Result<RingRef> {
        if dims.m == 0 || dims.n == 0 || dims.r == 0 {
            return Err(Error::InvalidRing(format!("dimensions must be positive: {dims}")));
        }
        let mut index = HashMap::with_capacity(roster.len());
        for (k, v) in roster.iter().enumerate() {
            if !v.fits(dims) {
                return Err(Error::InvalidRing(format!("{v} out of range for {dims}")));
            }
            if index.insert(*v, k).is_some() {
                return Err(Error::InvalidRing(format!("duplicate variable {v}")));
            }
        }
        if let MonomialOrder::Elimination(ref elim) = order {
            if elim.iter().any(|&k| k >= roster.len()) {
                return Err(Error::InvalidRing("elimination block outside the roster".into()));
            }
        }
        Ok(Arc::new(Ring { dims, roster, index, order }))
    }

    /// The ring on the `X` variables of the given shape, grevlex.
    pub fn x_ring(dims: Dims) -> Result<RingRef> {
        Ring::new(dims, dims.x_vars(), MonomialOrder::Grevlex)
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn roster(&self) -> &[VarId] {
        &self.roster
    }

    pub fn nvars(&self) -> usize {
        self.roster.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn position(&self, v: VarId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn var_at(&self, k: usize) -> VarId {
        self.roster[k]
    }

    /// Same roster under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Ring::new(self.dims, self.roster.clone(), order)
    }

    /// Same roster with a block-elimination order on `vars` (inner order grevlex).
    pub fn with_elimination(&self, vars: &[VarId]) -> Result<RingRef> {
        let mut block = Vec::with_capacity(vars.len());
        for v in vars {
            block.push(self.position(*v).ok_or(Error::UnknownVariable(*v))?);
        }
        block.sort_unstable();
        block.dedup();
        self.with_order(MonomialOrder::Elimination(block))
    }
}
