//! Rational quaternion algebras (a, b | Q): Hilbert symbols at every place,
//! ramification sets, and an exhaustive p-adic norm-equation oracle.
//!
//! The fast path computes local symbols with the standard valuation and
//! Legendre-symbol formulas; the oracle decides solvability of
//! x² − ay² − bz² + abw² ≡ 0 (mod p^h) over primitive tuples by exhausting
//! residues, which certifies division algebras without trusting the closed
//! formulas.

mod hilbert;
mod oracle;
mod places;

pub use hilbert::{hilbert_symbol, legendre_symbol};
pub use oracle::{norm_equation_oracle, NormEquationOutcome};
pub use places::{norm_scaling_check, ramified_places, NormScalingReport, Place, RamificationReport};

use num_rational::Ratio;
use thiserror::Error;

/// Rational numbers used throughout this crate.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuaternionError {
    #[error("quaternion parameters must be nonzero")]
    ZeroParameter,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("oracle budget exceeded: p^h = {0} is too large")]
    BudgetExceeded(u128),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Strip square factors: returns the squarefree integer in the same square
/// class. Sign is preserved.
pub fn squarefree_part(x: i64) -> i64 {
    assert!(x != 0);
    let sign = x.signum();
    let mut n = x.unsigned_abs();
    let mut out: i64 = 1;
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e % 2 == 1 {
            out *= d as i64;
        }
        d += 1;
    }
    out * n as i64 * sign
}

/// Clear denominators and square factors: (a, b) as a pair of squarefree
/// integers defining the same algebra.
pub fn normalize_pair(a: Rational, b: Rational) -> Result<(i64, i64), QuaternionError> {
    use num_traits::Zero;
    if a.is_zero() || b.is_zero() {
        return Err(QuaternionError::ZeroParameter);
    }
    // multiply by the square of the denominator, then strip squares
    let na = a.numer() * a.denom();
    let nb = b.numer() * b.denom();
    Ok((squarefree_part(na), squarefree_part(nb)))
}
