use partition_core::Partition;

use crate::clifford::Cover;
use crate::coeff::Sqrt2Dyadic;
use crate::cover::{CoverElement, CoverError, CLASS_DEGREE_BOUND};

/// Cached per-cycle-length trace data for a cover model.
///
/// The canonical lift of a cycle type is a product of blocks on disjoint
/// letters, one per cycle, and the identity-blade coefficient (`tr0`) is
/// multiplicative across disjoint blocks. This makes traces of canonical
/// lifts and of their squares cheap for degrees up to the class bound: a
/// block of length c is built by c−1 two-term generator multiplications.
#[derive(Debug, Clone)]
pub struct CycleTraces {
    cover: Cover,
    /// tr0 of the canonical block lift t_c, indexed by c (entry 0 unused).
    block: Vec<Sqrt2Dyadic>,
    /// tr0 of t_c², same indexing.
    block_squared: Vec<Sqrt2Dyadic>,
}

impl CycleTraces {
    pub fn new(n: u32, cover: Cover) -> Result<Self, CoverError> {
        if n > CLASS_DEGREE_BOUND {
            return Err(CoverError::DegreeBound(n, CLASS_DEGREE_BOUND));
        }
        let mut block = vec![Sqrt2Dyadic::ZERO; n as usize + 1];
        let mut block_squared = vec![Sqrt2Dyadic::ZERO; n as usize + 1];
        for c in 1..=n {
            let t = cycle_block(c, cover)?;
            block[c as usize] = t.tr0();
            // square by extending the word: every step multiplies by a
            // two-term generator, keeping the cost linear in the support
            let mut tsq = t;
            for i in 1..c {
                tsq = tsq.mul(&CoverElement::generator(i, c.max(2), cover)?)?;
            }
            block_squared[c as usize] = tsq.tr0();
        }
        Ok(CycleTraces {
            cover,
            block,
            block_squared,
        })
    }

    pub fn cover(&self) -> Cover {
        self.cover
    }

    /// tr0 of the canonical lift of a cycle type.
    pub fn canonical_tr0(&self, cycle_type: &Partition) -> Sqrt2Dyadic {
        let mut acc = Sqrt2Dyadic::ONE;
        for &c in cycle_type.parts() {
            acc = acc * self.block[c as usize];
        }
        acc
    }

    /// tr0 of the square of the canonical lift of a cycle type.
    ///
    /// The square of a product of disjoint blocks is, up to the sign from
    /// commuting odd blocks past each other, the product of the block
    /// squares; two blocks anticommute exactly when both have even length.
    pub fn canonical_square_tr0(&self, cycle_type: &Partition) -> Sqrt2Dyadic {
        let even_blocks = cycle_type.parts().iter().filter(|&&c| c % 2 == 0).count() as u64;
        let swaps = even_blocks * (even_blocks.saturating_sub(1)) / 2;
        let mut acc = if swaps % 2 == 1 {
            -Sqrt2Dyadic::ONE
        } else {
            Sqrt2Dyadic::ONE
        };
        for &c in cycle_type.parts() {
            acc = acc * self.block_squared[c as usize];
        }
        acc
    }
}

/// The canonical lift of a single ascending cycle on letters
/// offset+1 … offset+c (1-based), built inside a degree-n model. With
/// offset 0 this is the block used by `CycleTraces`; tr0 values do not
/// depend on the offset.
fn cycle_block(c: u32, cover: Cover) -> Result<CoverElement, CoverError> {
    let n = c.max(2);
    let mut x = CoverElement::identity(n, cover);
    for i in 1..c {
        x = x.mul(&CoverElement::generator(i, n, cover)?)?;
    }
    Ok(x)
}

/// The cycle type of the square of a permutation of the given type: odd
/// cycles square to cycles of the same length, even cycles split in half.
pub fn squared_cycle_type(cycle_type: &Partition) -> Partition {
    let mut parts = Vec::new();
    for &c in cycle_type.parts() {
        if c % 2 == 1 {
            parts.push(c);
        } else {
            parts.push(c / 2);
            parts.push(c / 2);
        }
    }
    Partition::from_unsorted(parts)
}
