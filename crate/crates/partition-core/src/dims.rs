use num_bigint::BigUint;
use num_traits::One;

use crate::Partition;

/// Dimension of the Specht module S^λ via the hook-length formula:
/// n! divided by the product of all hook lengths.
pub fn specht_dim(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut numer = BigUint::one();
    for k in 1..=u64::from(n) {
        numer *= BigUint::from(k);
    }
    let mut hooks = BigUint::one();
    for (i, &len) in lambda.parts().iter().enumerate() {
        let r = i as u32 + 1;
        for c in 1..=len {
            let arm = len - c;
            let leg = conj.part(c as usize) - r;
            hooks *= BigUint::from(u64::from(arm + leg + 1));
        }
    }
    let (q, rem) = num_integer::Integer::div_rem(&numer, &hooks);
    debug_assert!(num_traits::Zero::is_zero(&rem));
    q
}

/// Order of the centralizer of a permutation of this cycle type:
/// z_α = Π k^{m_k} · m_k! over the distinct part sizes k.
pub fn centralizer_order(cycle_type: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for run in cycle_type.parts().chunk_by(|a, b| a == b) {
        let k = u64::from(run[0]);
        let m = run.len() as u64;
        for _ in 0..m {
            z *= BigUint::from(k);
        }
        for j in 1..=m {
            z *= BigUint::from(j);
        }
    }
    z
}
