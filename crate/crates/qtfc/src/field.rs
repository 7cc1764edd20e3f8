//! Exact coefficient fields.
//!
//! All linear algebra and polynomial arithmetic in this crate is generic
//! over an exact field implementing [`Coeff`].  Two fields are provided:
//! arbitrary-precision rationals (used whenever the group is defined over
//! the reals, i.e. its phases are `±1`) and cyclotomic extensions
//! `Q(zeta_k)` (see [`crate::cyclotomic`]).  Floating point is deliberately
//! not supported.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number in lowest terms with positive
/// denominator (both invariants are maintained by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Construct a rational from an integer numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Construct a rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// An exact field the engine can compute over.
///
/// The trait extends the `num-traits` arithmetic vocabulary with the three
/// operations reflection-group computations need and the generic polynomial
/// layer cannot synthesise: multiplicative inverse, complex conjugation and
/// embedding of roots of unity.
pub trait Coeff:
    Clone
    + PartialEq
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + 'static
{
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Complex conjugation (identity on rationals, `zeta -> zeta^{-1}` on
    /// cyclotomics).
    fn conj(&self) -> Self;

    /// Embed a rational number.
    fn from_rational(r: Rational) -> Self;

    /// The primitive `order`-th root of unity raised to `exponent`, if the
    /// field contains it.  Rationals only represent `±1`.
    fn root_of_unity(order: u32, exponent: i64) -> Option<Self>;

    /// The rational value of this element if it lies in the prime field.
    fn as_rational(&self) -> Option<Rational>;

    /// In-place fused accumulate `self += a * b`, the hot operation of row
    /// reduction and restricted products.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.clone() * b.clone();
        *self = self.clone() + prod;
    }

    /// Reference-based product (override to avoid clones where it matters).
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// Scale a row so that entries stay small: divide a rational row by its
    /// content, make a cyclotomic row's leading coefficient one.  Rows are
    /// only rescaled by nonzero field elements, so spans are unchanged.
    fn normalize_row(row: &mut [Self]) {
        if let Some(first) = row.iter().find(|c| !c.is_zero()) {
            if let Some(inv) = first.inv() {
                for c in row.iter_mut() {
                    if !c.is_zero() {
                        *c = c.mul_ref(&inv);
                    }
                }
            }
        }
    }

    fn from_integer(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }
}

impl Coeff for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn root_of_unity(order: u32, exponent: i64) -> Option<Self> {
        let k = order as i64;
        let e = exponent.rem_euclid(k);
        if e == 0 {
            Some(Rational::one())
        } else if 2 * e == k {
            Some(-Rational::one())
        } else {
            None
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    /// Divide by the row content (gcd of numerators over lcm of
    /// denominators) and normalise the sign of the leading entry.
    fn normalize_row(row: &mut [Self]) {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        let mut lead_negative = None;
        for c in row.iter() {
            if c.is_zero() {
                continue;
            }
            if lead_negative.is_none() {
                lead_negative = Some(c.is_negative());
            }
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return;
        }
        let mut scale = Rational::new(den_lcm, num_gcd);
        if lead_negative == Some(true) {
            scale = -scale;
        }
        for c in row.iter_mut() {
            if !c.is_zero() {
                *c *= &scale;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_unity() {
        assert_eq!(Rational::root_of_unity(5, 0), Some(rat_int(1)));
        assert_eq!(Rational::root_of_unity(2, 1), Some(rat_int(-1)));
        assert_eq!(Rational::root_of_unity(4, 2), Some(rat_int(-1)));
        assert_eq!(Rational::root_of_unity(4, 1), None);
        assert_eq!(Rational::root_of_unity(6, 3), Some(rat_int(-1)));
        assert_eq!(Rational::root_of_unity(6, -3), Some(rat_int(-1)));
    }

    #[test]
    fn row_normalization_clears_denominators() {
        let mut row = vec![rat(-2, 3), rat(4, 9), Rational::zero()];
        Rational::normalize_row(&mut row);
        assert_eq!(row, vec![rat_int(3), rat_int(-2), Rational::zero()]);
    }
}
