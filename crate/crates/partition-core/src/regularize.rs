use std::collections::BTreeMap;

use crate::Partition;

/// The p-regularisation λ^reg.
///
/// Uses the classical ladder-sliding construction: nodes move to the top of
/// their ladders, where the ladder through (r, c) consists of the positions
/// (r − k(p−1), c + k). These ladders climb p−1 rows per column and are not
/// the residue ladders used for spin combinatorics. The output is p-regular,
/// has the same size, and is a fixed point exactly when λ is p-regular.
pub fn james_regularize(lambda: &Partition, p: u32) -> Partition {
    assert!(p >= 2, "regularisation needs p >= 2");
    let step = p - 1;
    // ladder id: the topmost position (r0, c0) of the ladder, r0 in 1..=step
    let mut counts: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for (i, &len) in lambda.parts().iter().enumerate() {
        let r = i as u32 + 1;
        for c in 1..=len {
            let k = (r - 1) / step;
            let top = (r - k * step, c + k);
            *counts.entry(top).or_insert(0) += 1;
        }
    }
    let mut rows: BTreeMap<u32, u32> = BTreeMap::new();
    for (&(r0, c0), &m) in &counts {
        // fill the m topmost positions of this ladder
        debug_assert!(m <= c0, "ladder has c0 positions");
        for k in 0..m {
            let r = r0 + k * step;
            *rows.entry(r).or_insert(0) += 1;
        }
    }
    let parts: Vec<u32> = rows.values().copied().collect();
    Partition::new(parts).expect("ladder tops form a partition")
}


/// Multiset of (James-ladder id, node count) pairs; used by the
/// regularisation oracle.
#[doc(hidden)]
pub fn ladder_population(lambda: &Partition, p: u32) -> Vec<((u32, u32), u32)> {
    let step = p - 1;
    let mut counts: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for (i, &len) in lambda.parts().iter().enumerate() {
        let r = i as u32 + 1;
        for c in 1..=len {
            let k = (r - 1) / step;
            let top = (r - k * step, c + k);
            *counts.entry(top).or_insert(0) += 1;
        }
    }
    counts.into_iter().collect()
}
