//! Exact rational scalars and their extended (±∞) variant.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// All breakpoints, scalars and function values are exact 64-bit rationals.
pub type Rat = Rational64;

/// Shorthand constructor.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

/// A rational extended with the two infinities, ordered in the obvious way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRat {
    NegInf,
    Fin(Rat),
    PosInf,
}

impl ExtRat {
    pub fn finite(self) -> Option<Rat> {
        match self {
            ExtRat::Fin(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtRat::Fin(_))
    }

    /// Extended addition. `PosInf + NegInf` is undefined and returns `None`;
    /// callers decide whether that is an error.
    pub fn checked_add(self, other: ExtRat) -> Option<ExtRat> {
        use ExtRat::*;
        match (self, other) {
            (Fin(a), Fin(b)) => Some(Fin(a + b)),
            (PosInf, NegInf) | (NegInf, PosInf) => None,
            (PosInf, _) | (_, PosInf) => Some(PosInf),
            (NegInf, _) | (_, NegInf) => Some(NegInf),
        }
    }

    /// Multiplication by a strictly positive rational.
    pub fn scale_pos(self, lambda: Rat) -> ExtRat {
        debug_assert!(lambda > Rat::zero());
        match self {
            ExtRat::Fin(r) => ExtRat::Fin(r * lambda),
            inf => inf,
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Fin(r)
    }
}

/// Order isomorphism ℚ → ℚ∩(−1,1), used to squeeze an everywhere-finite
/// function into a bounded range: p ↦ p/(1+|p|).
pub fn alpha(p: Rat) -> Rat {
    p / (Rat::one() + p.abs())
}

/// Inverse of [`alpha`] on (−1,1): y ↦ y/(1−|y|).
pub fn alpha_inv(y: Rat) -> Rat {
    debug_assert!(y.abs() < Rat::one());
    y / (Rat::one() - y.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn alpha_round_trip() {
        for n in -20i64..=20 {
            for d in 1i64..=5 {
                let p = rat(n, d);
                let y = alpha(p);
                assert!(y.abs() < Rat::one());
                assert_eq!(alpha_inv(y), p);
            }
        }
    }

    #[test]
    fn ext_add_undefined_cases() {
        assert_eq!(ExtRat::PosInf.checked_add(ExtRat::NegInf), None);
        assert_eq!(
            ExtRat::PosInf.checked_add(ExtRat::Fin(rat(3, 1))),
            Some(ExtRat::PosInf)
        );
    }

    proptest! {
        #[test]
        fn alpha_is_monotone(a in -50i64..50, b in -50i64..50, d in 1i64..6) {
            let (p, q) = (rat(a, d), rat(b, d));
            prop_assert_eq!(p < q, alpha(p) < alpha(q));
        }
    }
}
