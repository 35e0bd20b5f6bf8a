use serde::Serialize;

use crate::hilbert::hilbert_symbol_int;
use crate::{normalize_pair, QuaternionError, Rational};

/// A place of the rationals: a finite prime or the archimedean place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Place {
    #[serde(rename = "infinity")]
    Infinity,
    #[serde(untagged)]
    Finite(u64),
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Infinity => write!(f, "infinity"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// CLI-facing ramification report.
#[derive(Debug, Clone, Serialize)]
pub struct RamificationReport {
    pub a: String,
    pub b: String,
    pub places: Vec<Place>,
    /// Ramification sets always have even cardinality.
    pub even_check: bool,
}

/// The finite set of places where (a, b | Q) is a division algebra.
///
/// A symbol can be −1 only at infinity, at 2, and at odd primes dividing
/// the squarefree parts of a and b, so the scan is finite and complete.
pub fn ramified_places(a: Rational, b: Rational) -> Result<Vec<Place>, QuaternionError> {
    let (sa, sb) = normalize_pair(a, b)?;
    let mut candidates = vec![Place::Infinity, Place::Finite(2)];
    let mut m = (sa.unsigned_abs()).max(1) * (sb.unsigned_abs()).max(1);
    while m % 2 == 0 {
        m /= 2;
    }
    let mut d = 3u64;
    while d * d <= m {
        if m % d == 0 {
            candidates.push(Place::Finite(d));
            while m % d == 0 {
                m /= d;
            }
        }
        d += 2;
    }
    if m > 2 {
        candidates.push(Place::Finite(m));
    }
    let mut out: Vec<Place> = candidates
        .into_iter()
        .filter(|&v| hilbert_symbol_int(sa, sb, v) == -1)
        .collect();
    out.sort();
    Ok(out)
}

pub fn ramification_report(a: Rational, b: Rational) -> Result<RamificationReport, QuaternionError> {
    let places = ramified_places(a, b)?;
    Ok(RamificationReport {
        a: a.to_string(),
        b: b.to_string(),
        even_check: places.len() % 2 == 0,
        places,
    })
}

/// Report of the norm-scaling comparison for (a, b) versus (a, b·m).
#[derive(Debug, Clone, Serialize)]
pub struct NormScalingReport {
    /// A witness (x, y) with x² − a·y² = m, if the bounded search found one.
    pub norm_witness: Option<(String, String)>,
    pub sets_equal: bool,
}

/// Verifies that scaling the second parameter by a norm from Q(√a) leaves
/// the ramification set unchanged. The caller asserts that m is such a
/// norm; a bounded search tries to produce a witness x² − a·y² = m.
pub fn norm_scaling_check(
    a: Rational,
    b: Rational,
    m: Rational,
) -> Result<NormScalingReport, QuaternionError> {
    use num_traits::Zero;
    if m.is_zero() {
        return Err(QuaternionError::ZeroParameter);
    }
    let left = ramified_places(a, b)?;
    let right = ramified_places(a, b * m)?;
    Ok(NormScalingReport {
        norm_witness: norm_witness(a, m).map(|(x, y)| (x.to_string(), y.to_string())),
        sets_equal: left == right,
    })
}

/// Bounded search for x, y ∈ Q with x² − a·y² = m, over denominators and
/// numerators up to 24.
fn norm_witness(a: Rational, m: Rational) -> Option<(Rational, Rational)> {
    const BOUND: i64 = 24;
    for den in 1..=BOUND {
        for xn in -BOUND..=BOUND {
            for yn in -BOUND..=BOUND {
                let x = Rational::new(xn, den);
                let y = Rational::new(yn, den);
                if x * x - a * y * y == m {
                    return Some((x, y));
                }
            }
        }
    }
    None
}
