use crate::places::Place;
use crate::{is_prime, normalize_pair, QuaternionError, Rational};

/// Legendre symbol (a | p) for odd prime p, via Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> i32 {
    debug_assert!(p % 2 == 1 && is_prime(p));
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    // a^((p-1)/2) mod p
    let mut base = a % p;
    let mut exp = (p - 1) / 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

fn two_adic_val(mut n: i64) -> (u32, i64) {
    debug_assert!(n != 0);
    let mut v = 0;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    (v, n)
}

fn p_adic_val(mut n: i64, p: u64) -> (u32, i64) {
    debug_assert!(n != 0);
    let mut v = 0;
    while n % p as i64 == 0 {
        n /= p as i64;
        v += 1;
    }
    (v, n)
}

/// The local Hilbert symbol (a, b)_v ∈ {+1, −1}; −1 exactly when (a, b) is
/// a division algebra over the completion at v.
pub fn hilbert_symbol(a: Rational, b: Rational, place: Place) -> Result<i32, QuaternionError> {
    let (a, b) = normalize_pair(a, b)?;
    Ok(hilbert_symbol_int(a, b, place))
}

/// Symbol for integer parameters (not necessarily squarefree).
pub fn hilbert_symbol_int(a: i64, b: i64, place: Place) -> i32 {
    assert!(a != 0 && b != 0);
    match place {
        Place::Infinity => {
            if a < 0 && b < 0 {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let (alpha, u) = two_adic_val(a);
            let (beta, v) = two_adic_val(b);
            let eps = |m: i64| ((m - 1) / 2).rem_euclid(2);
            let omega = |m: i64| ((m * m - 1) / 8).rem_euclid(2);
            let exp = eps(u) * eps(v)
                + i64::from(alpha) * omega(v)
                + i64::from(beta) * omega(u);
            if exp % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            assert!(is_prime(p) && p % 2 == 1, "finite place must be prime");
            let (alpha, u) = p_adic_val(a, p);
            let (beta, v) = p_adic_val(b, p);
            let mut sym = 1;
            if alpha % 2 == 1 && beta % 2 == 1 && (p - 1) / 2 % 2 == 1 {
                sym = -sym;
            }
            if beta % 2 == 1 {
                sym *= legendre_symbol(u, p);
            }
            if alpha % 2 == 1 {
                sym *= legendre_symbol(v, p);
            }
            sym
        }
    }
}
