use crate::{Node, Partition, PartitionError};

/// Addable and removable nodes of a strict partition, both sorted by
/// (row, col).
///
/// A node is removable when deleting it leaves the diagram of a strict
/// partition, and a position is addable when inserting it gives the diagram
/// of a strict partition. This is the restrictive, prime-independent notion:
/// only row-end positions qualify, and the row lengths must stay strictly
/// decreasing.
pub fn addable_removable_nodes(
    lambda: &Partition,
) -> Result<(Vec<Node>, Vec<Node>), PartitionError> {
    if !lambda.is_strict() {
        return Err(PartitionError::NotStrict(lambda.clone()));
    }
    let h = lambda.len();
    let mut addable = Vec::new();
    let mut removable = Vec::new();
    for r in 1..=h {
        let cur = lambda.part(r);
        // Removing the last node of row r must keep strictness; a row of
        // length 1 simply disappears.
        if cur - 1 > lambda.part(r + 1) || cur == 1 {
            removable.push(Node::new(r as u32, cur));
        }
        // Adding a node at the end of row r must stay below row r-1.
        if r == 1 || lambda.part(r - 1) > cur + 1 {
            addable.push(Node::new(r as u32, cur + 1));
        }
    }
    // A new row of length 1 below the diagram.
    if h == 0 || lambda.part(h) > 1 {
        addable.push(Node::new(h as u32 + 1, 1));
    }
    addable.sort();
    removable.sort();
    Ok((addable, removable))
}

/// Whether permutations of this cycle type are even (lie in the alternating
/// group): true iff n − (number of parts) is even.
pub fn is_even_cycle_type(cycle_type: &Partition) -> bool {
    (cycle_type.size() as usize - cycle_type.len()) % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn nodes(pairs: &[(u32, u32)]) -> Vec<Node> {
        pairs.iter().map(|&(r, c)| Node::new(r, c)).collect()
    }

    /// Brute-force oracle: test strictness after each single-node change.
    fn oracle(lambda: &Partition) -> (Vec<Node>, Vec<Node>) {
        let h = lambda.len();
        let mut addable = Vec::new();
        let mut removable = Vec::new();
        for r in 1..=(h + 1) {
            for c in 1..=(lambda.part(1) + 2) {
                let mut rows: Vec<u32> = (1..=(h + 1)).map(|i| lambda.part(i)).collect();
                // removal: (r,c) must be the last node of its row
                if r <= h && c == lambda.part(r) {
                    rows[r - 1] -= 1;
                    if rows_strict(&rows) {
                        removable.push(Node::new(r as u32, c));
                    }
                    rows[r - 1] += 1;
                }
                // addition: (r,c) must extend a row by exactly one
                if c == lambda.part(r) + 1 {
                    rows[r - 1] += 1;
                    if rows_strict(&rows) {
                        addable.push(Node::new(r as u32, c));
                    }
                    rows[r - 1] -= 1;
                }
            }
        }
        addable.sort();
        removable.sort();
        (addable, removable)
    }

    fn rows_strict(rows: &[u32]) -> bool {
        let positive: Vec<u32> = rows.iter().copied().take_while(|&x| x > 0).collect();
        positive.len() == rows.iter().filter(|&&x| x > 0).count()
            && positive.windows(2).all(|w| w[0] > w[1])
    }

    #[test]
    fn examples() {
        let (add, rem) = addable_removable_nodes(&p(&[4, 1])).unwrap();
        assert_eq!(rem, nodes(&[(1, 4), (2, 1)]));
        assert_eq!(add, nodes(&[(1, 5), (2, 2)]));

        let (add, rem) = addable_removable_nodes(&p(&[5])).unwrap();
        assert_eq!(rem, nodes(&[(1, 5)]));
        assert_eq!(add, nodes(&[(1, 6), (2, 1)]));

        // removing (1,2) would leave (1,1), which is not strict
        let (add, rem) = addable_removable_nodes(&p(&[2, 1])).unwrap();
        assert_eq!(rem, nodes(&[(2, 1)]));
        assert_eq!(add, nodes(&[(1, 3)]));

        assert!(addable_removable_nodes(&p(&[3, 3, 1])).is_err());
    }

    #[test]
    fn matches_bruteforce_oracle() {
        for n in 0..=14u32 {
            for lam in crate::strict_partitions(n).unwrap() {
                let fast = addable_removable_nodes(&lam).unwrap();
                assert_eq!(fast, oracle(&lam), "mismatch for {lam}");
            }
        }
    }

    #[test]
    fn remove_then_add_roundtrip() {
        for lam in crate::strict_partitions(11).unwrap() {
            let (add, rem) = addable_removable_nodes(&lam).unwrap();
            for node in &rem {
                let mut rows: Vec<u32> = lam.parts().to_vec();
                rows[(node.row - 1) as usize] -= 1;
                let smaller = Partition::from_unsorted(rows);
                let (add2, _) = addable_removable_nodes(&smaller).unwrap();
                assert!(add2.contains(node), "cannot re-add {node} to {smaller}");
            }
            // addable and removable positions are disjoint
            assert!(add.iter().all(|a| !rem.contains(a)));
        }
    }
}
