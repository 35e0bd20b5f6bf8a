use crate::{Partition, PartitionError};

/// Largest n accepted by the enumeration routines. Classification runs stay
/// desk-scale, so this is deliberately modest.
pub const ENUMERATION_BOUND: u32 = 60;

fn check_bound(n: u32) -> Result<(), PartitionError> {
    if n > ENUMERATION_BOUND {
        Err(PartitionError::BoundExceeded(n, ENUMERATION_BOUND))
    } else {
        Ok(())
    }
}

/// All strict partitions of n in descending lexicographic order.
pub fn strict_partitions(n: u32) -> Result<Vec<Partition>, PartitionError> {
    check_bound(n)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, true, &mut stack, &mut out);
    Ok(out)
}

/// All partitions of n in descending lexicographic order.
pub fn all_partitions(n: u32) -> Result<Vec<Partition>, PartitionError> {
    check_bound(n)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, false, &mut stack, &mut out);
    Ok(out)
}

/// All partitions of n into odd parts (the odd cycle types), descending
/// lexicographic.
pub fn odd_partitions(n: u32) -> Result<Vec<Partition>, PartitionError> {
    check_bound(n)?;
    Ok(all_partitions(n)?
        .into_iter()
        .filter(|a| a.parts().iter().all(|&x| x % 2 == 1))
        .collect())
}

fn descend(left: u32, max: u32, strict: bool, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition::new(stack.clone()).expect("descending stack"));
        return;
    }
    let mut k = left.min(max);
    while k >= 1 {
        stack.push(k);
        let next_max = if strict { k.saturating_sub(1) } else { k };
        descend(left - k, next_max, strict, stack, out);
        stack.pop();
        k -= 1;
    }
}
