use partition_core::Partition;

/// A permutation of {0, …, n−1} in one-line notation: `img[x] = σ(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: u32) -> Self {
        Perm {
            img: (0..n as u8).collect(),
        }
    }

    pub fn from_images(img: Vec<u8>) -> Self {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            assert!(
                (x as usize) < img.len() && !seen[x as usize],
                "not a permutation"
            );
            seen[x as usize] = true;
        }
        Perm { img }
    }

    pub fn degree(&self) -> u32 {
        self.img.len() as u32
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.img[x as usize]
    }

    /// Adjacent transposition of i and i+1 (0-based).
    pub fn adjacent(n: u32, i: u32) -> Self {
        let mut img: Vec<u8> = (0..n as u8).collect();
        img.swap(i as usize, i as usize + 1);
        Perm { img }
    }

    /// Function composition: (self ∘ rhs)(x) = self(rhs(x)).
    pub fn compose(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree());
        Perm {
            img: rhs.img.iter().map(|&x| self.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (x, &y) in self.img.iter().enumerate() {
            img[y as usize] = x as u8;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(x, &y)| x as u8 == y)
    }

    /// True for even permutations.
    pub fn is_even(&self) -> bool {
        let ct = self.cycle_type();
        (ct.size() as usize - ct.len()) % 2 == 0
    }

    /// Cycles of length ≥ 1, each starting at its minimal element, sorted by
    /// (length descending, minimal element ascending).
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start as u8];
            seen[start] = true;
            let mut x = self.img[start] as usize;
            while x != start {
                seen[x] = true;
                cyc.push(x as u8);
                x = self.img[x] as usize;
            }
            cycles.push(cyc);
        }
        cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        cycles
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// A word i_1, …, i_k of adjacent transpositions (0-based) with
    /// self = adjacent(i_1) ∘ … ∘ adjacent(i_k).
    pub fn adjacent_word(&self) -> Vec<u32> {
        let mut img = self.img.clone();
        let mut rev = Vec::new();
        loop {
            let mut done = true;
            for i in 0..img.len().saturating_sub(1) {
                if img[i] > img[i + 1] {
                    img.swap(i, i + 1);
                    rev.push(i as u32);
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        rev.reverse();
        rev
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_reconstructs_permutation() {
        // all of S_5
        fn perms(n: u8) -> Vec<Vec<u8>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        for img in perms(5) {
            let sigma = Perm::from_images(img);
            let word = sigma.adjacent_word();
            let mut acc = Perm::identity(5);
            for &i in &word {
                acc = acc.compose(&Perm::adjacent(5, i));
            }
            assert_eq!(acc, sigma);
        }
    }

    #[test]
    fn cycle_types() {
        let sigma = Perm::from_images(vec![1, 2, 0, 4, 3]);
        assert_eq!(sigma.cycle_type().to_string(), "3,2");
        assert!(!sigma.is_even()); // 3-cycle times 2-cycle is odd
        assert!(Perm::adjacent(4, 1).cycle_type().to_string() == "2,1,1");
    }
}
