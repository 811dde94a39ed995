//! Hilbert series, dimension, degree, lengths and multiplicities.

mod monomial_ideal;
mod multiplicity;
mod newton;
mod series;

pub use monomial_ideal::MonomialIdeal;
pub(crate) use monomial_ideal::LevelWalker;
pub use multiplicity::{
    degree_monomials, hs_multiplicity, local_colength, Ambient, LocalColength, MultiplicityConfig, MultiplicityDiagnostics,
    MultiplicityMethod, MultiplicityResult,
};
pub use newton::{newton_multiplicity, segre_point};
pub use series::{hilbert_numerator, HilbertSeriesNumerator};

use crate::error::{Error, Result};
use crate::groebner::{leading_monomials, GroebnerBasis};
use crate::polyring::{MonomialOrder, Polynomial, RingRef};
use crate::scalar::Scalar;

/// Leading monomials of a Gröbner basis, minimalized.
pub fn initial_ideal<F: Scalar>(gb: &GroebnerBasis<F>) -> MonomialIdeal {
    MonomialIdeal::new(gb.ring().nvars(), gb.leading_monomials())
}

/// Hilbert series numerator of `ring / (gens)` for homogeneous `gens`,
/// through a grevlex Gröbner basis.
pub fn quotient_numerator<F: Scalar>(gens: &[Polynomial<F>], ring: &RingRef) -> Result<HilbertSeriesNumerator> {
    if !gens.iter().all(|g| g.is_homogeneous()) {
        return Err(Error::Unsupported("Hilbert series of an inhomogeneous ideal".into()));
    }
    let grevlex = ring.with_order(MonomialOrder::Grevlex)?;
    let lms = leading_monomials(gens, &grevlex)?;
    Ok(hilbert_numerator(&MonomialIdeal::new(grevlex.nvars(), lms), grevlex.nvars()))
}

/// Affine Krull dimension.
pub fn krull_dim(num: &HilbertSeriesNumerator) -> Result<usize> {
    num.krull_dim()
}

/// Degree of the graded ring, `Num` divided by all its `(1 - t)` factors, at `t = 1`.
pub fn ring_degree(num: &HilbertSeriesNumerator) -> Result<u64> {
    num.degree()
}

/// Vector-space dimension of `ring / (gens)`. Errors with the first variable
/// that has no pure power in the initial ideal when the quotient is infinite.
pub fn colength<F: Scalar>(gens: &[Polynomial<F>], ring: &RingRef) -> Result<u64> {
    let embedded: Vec<Polynomial<F>> = gens.iter().map(|g| g.embed(ring)).collect::<Result<_>>()?;
    if embedded.iter().all(|g| g.is_zero() || g.is_monomial()) {
        let ideal = MonomialIdeal::new(
            ring.nvars(),
            embedded.iter().filter_map(|g| g.leading_monomial().cloned()),
        );
        return ideal.colength(ring);
    }
    MonomialIdeal::new(ring.nvars(), leading_monomials(&embedded, ring)?).colength(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::polyring::{parse_polynomial, Dims, Ring};
    use crate::Q;

    #[test]
    fn initial_ideal_of_simple_basis() {
        let ring = Ring::x_ring(Dims::new(1, 2, 1)).unwrap();
        let f: Polynomial<Q> = parse_polynomial("x[1,1,1]^2 - x[1,1,2]", &ring).unwrap();
        let gb = buchberger(&[f], &ring).unwrap();
        let m = initial_ideal(&gb);
        assert_eq!(m.generators().len(), 1);
        assert_eq!(m.generators()[0].exponents(), &[2, 0]);
        let zero = buchberger::<Q>(&[], &ring).unwrap();
        assert!(initial_ideal(&zero).is_zero());
    }

    #[test]
    fn colength_of_inhomogeneous_ideal() {
        let ring = Ring::x_ring(Dims::new(1, 2, 1)).unwrap();
        let f: Polynomial<Q> = parse_polynomial("x[1,1,1]^2 - x[1,1,2]", &ring).unwrap();
        let g: Polynomial<Q> = parse_polynomial("x[1,1,2]^2", &ring).unwrap();
        // k[x,y]/(x^2-y, y^2) = k[x]/(x^4)
        assert_eq!(colength(&[f, g], &ring).unwrap(), 4);
    }
}
