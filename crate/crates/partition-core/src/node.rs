use std::fmt;

/// A node (r, c) of a Young diagram, with rows and columns numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "nodes live in rows/columns >= 1");
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The p-residue of a node. It depends only on the column.
///
/// For p = 2 the residue is 0 when c ≡ 0 or 1 (mod 4) and 1 otherwise,
/// giving the column pattern 0,1,1,0,0,1,1,0,…  For odd p = 2l+1 it is the
/// smaller of the residues of c−1 and −c modulo p, giving the pattern
/// 0,1,…,l−1,l,l−1,…,1,0 repeating with period p.
pub fn residue(node: Node, p: u32) -> u32 {
    let c = node.col;
    if p == 2 {
        match c % 4 {
            0 | 1 => 0,
            _ => 1,
        }
    } else {
        let a = (c - 1) % p;
        let b = (p - (c % p)) % p;
        a.min(b)
    }
}

/// The index k of the ladder containing a node.
///
/// For odd p this is ⌊(p−1)c/p⌋ + (p−1)(r−1); for p = 2 it is
/// ⌊c/2⌋ + 2(r−1). All nodes of one ladder share a residue, and larger k
/// means a longer ladder.
pub fn ladder_index(node: Node, p: u32) -> u64 {
    let r = u64::from(node.row);
    let c = u64::from(node.col);
    let p = u64::from(p);
    if p == 2 {
        c / 2 + 2 * (r - 1)
    } else {
        (p - 1) * c / p + (p - 1) * (r - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_examples() {
        assert_eq!(residue(Node::new(1, 3), 5), 2);
        assert_eq!(residue(Node::new(2, 2), 2), 1);
        assert_eq!(residue(Node::new(1, 1), 2), 0);
        assert_eq!(residue(Node::new(1, 1), 7), 0);
        // p = 5 column pattern 0,1,2,1,0 | 0,1,2,1,0
        let pat: Vec<u32> = (1..=10).map(|c| residue(Node::new(1, c), 5)).collect();
        assert_eq!(pat, vec![0, 1, 2, 1, 0, 0, 1, 2, 1, 0]);
        // p = 2 column pattern 0,1,1,0 repeating
        let pat: Vec<u32> = (1..=8).map(|c| residue(Node::new(1, c), 2)).collect();
        assert_eq!(pat, vec![0, 1, 1, 0, 0, 1, 1, 0]);
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(ladder_index(Node::new(2, 1), 5), 4);
        assert_eq!(ladder_index(Node::new(1, 3), 2), 1);
        assert_eq!(ladder_index(Node::new(1, 1), 3), 0);
        assert_eq!(ladder_index(Node::new(1, 1), 2), 0);
        // row 1 of the p = 5 ladder diagram: 0,1,2,3,4,4,5,6,7,8,8,9
        let row1: Vec<u64> = (1..=12).map(|c| ladder_index(Node::new(1, c), 5)).collect();
        assert_eq!(row1, vec![0, 1, 2, 3, 4, 4, 5, 6, 7, 8, 8, 9]);
        // row 2 begins 4,5,6,7,8,8,9
        let row2: Vec<u64> = (1..=7).map(|c| ladder_index(Node::new(2, c), 5)).collect();
        assert_eq!(row2, vec![4, 5, 6, 7, 8, 8, 9]);
        // p = 2 diagram row 1: 0,1,1,2,2,3,3,4,4,5,5
        let row1: Vec<u64> = (1..=11).map(|c| ladder_index(Node::new(1, c), 2)).collect();
        assert_eq!(row1, vec![0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5]);
    }
}
