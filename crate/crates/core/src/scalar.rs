//! Coefficient fields.
//!
//! Everything in the crate is generic over [`Scalar`], a thin layer on top of
//! `num-traits`. The only instantiations that make sense for Gröbner
//! computations are exact fields, so the trait is implemented for
//! `num_rational::Ratio<T>` over any signed integer type. The crate root
//! fixes `Ratio<BigInt>` as the working field.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Integers used internally by the fraction-free Gröbner routines.
pub(crate) type Zz = malachite_bigint::BigInt;

fn to_zz(v: BigInt) -> Zz {
    Zz::from_signed_bytes_le(&v.to_signed_bytes_le())
}

fn from_zz(v: &Zz) -> BigInt {
    BigInt::from_signed_bytes_le(&v.to_signed_bytes_le())
}

/// An exact field usable as polynomial coefficients.
pub trait Scalar: Clone + PartialEq + Debug + Num + Signed + Send + Sync + 'static {
    fn from_int(v: i64) -> Self;

    /// Parses `p` or `p/q` (no sign handling beyond what the integer parser accepts).
    fn parse_scalar(s: &str) -> Option<Self>;

    /// Renders the absolute value as `p` or `p/q` in lowest terms.
    fn render_abs(&self) -> String;

    /// The value as an integer, if it is one and fits.
    fn to_int(&self) -> Option<i64>;

    /// Numerator and (positive) denominator in lowest terms.
    fn to_fraction(&self) -> (Zz, Zz);

    /// `numer / denom`; panics if the value does not fit the scalar type.
    fn from_fraction(numer: Zz, denom: Zz) -> Self;
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Display + FromStr + Debug + Send + Sync + 'static,
    T: num_traits::ToPrimitive + Into<BigInt> + TryFrom<BigInt>,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p = T::from_str(p.trim()).ok()?;
                let q = T::from_str(q.trim()).ok()?;
                if q.is_zero() {
                    return None;
                }
                Some(Ratio::new(p, q))
            }
            None => T::from_str(s).ok().map(Ratio::from_integer),
        }
    }

    fn render_abs(&self) -> String {
        let a = self.abs();
        if a.denom().is_one() {
            format!("{}", a.numer())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn to_int(&self) -> Option<i64> {
        if self.denom().is_one() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn to_fraction(&self) -> (Zz, Zz) {
        (to_zz(self.numer().clone().into()), to_zz(self.denom().clone().into()))
    }

    fn from_fraction(numer: Zz, denom: Zz) -> Self {
        let conv = |z: Zz| T::try_from(from_zz(&z)).ok().expect("integer out of range for scalar type");
        Ratio::new(conv(numer), conv(denom))
    }
}
