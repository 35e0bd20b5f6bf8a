use std::collections::HashMap;
use std::fmt;

use partition_core::Partition;
use thiserror::Error;

use crate::clifford::{CliffordElement, Cover};
use crate::coeff::Sqrt2Dyadic;
use crate::perm::Perm;

/// Bound for element-by-element enumeration of a whole double cover.
pub const ENUMERATION_DEGREE_BOUND: u32 = 6;
/// Bound for class-representative computations (canonical lifts, squares).
pub const CLASS_DEGREE_BOUND: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("generator index {0} out of range 1..={1}")]
    GeneratorIndex(u32, u32),
    #[error("degree {0} exceeds bound {1}")]
    DegreeBound(u32, u32),
    #[error("elements belong to different groups")]
    GroupMismatch,
}

/// Conjugacy-class label in a double cover: the underlying cycle type and a
/// z-twist relative to the canonical lift of that cycle type.
///
/// The twist is only canonical relative to the fixed choice of lift made
/// here (ascending products of generators along consecutive cycles);
/// aggregate quantities such as indicator sums do not depend on the choice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub cycle_type: Partition,
    pub z_twist: bool,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}){}",
            self.cycle_type,
            if self.z_twist { "·z" } else { "" }
        )
    }
}

/// An element of Ŝ_n^±: an exact Clifford-algebra element together with the
/// permutation it covers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverElement {
    n: u32,
    perm: Perm,
    clifford: CliffordElement,
}

impl CoverElement {
    pub fn identity(n: u32, cover: Cover) -> Self {
        CoverElement {
            n,
            perm: Perm::identity(n),
            clifford: CliffordElement::one(cover),
        }
    }

    /// The central element z (the scalar −1 in the model).
    pub fn central(n: u32, cover: Cover) -> Self {
        CoverElement {
            n,
            perm: Perm::identity(n),
            clifford: CliffordElement::one(cover).neg(),
        }
    }

    /// Image of the generator s_i, 1 ≤ i ≤ n−1.
    pub fn generator(i: u32, n: u32, cover: Cover) -> Result<Self, CoverError> {
        if i < 1 || i >= n {
            return Err(CoverError::GeneratorIndex(i, n.saturating_sub(1)));
        }
        Ok(CoverElement {
            n,
            perm: Perm::adjacent(n, i - 1),
            clifford: CliffordElement::generator(cover, i),
        })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn cover(&self) -> Cover {
        self.clifford.cover()
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn clifford(&self) -> &CliffordElement {
        &self.clifford
    }

    pub fn mul(&self, rhs: &CoverElement) -> Result<CoverElement, CoverError> {
        if self.n != rhs.n || self.cover() != rhs.cover() {
            return Err(CoverError::GroupMismatch);
        }
        Ok(CoverElement {
            n: self.n,
            perm: self.perm.compose(&rhs.perm),
            clifford: self.clifford.mul(&rhs.clifford),
        })
    }

    pub fn neg(&self) -> CoverElement {
        CoverElement {
            n: self.n,
            perm: self.perm.clone(),
            clifford: self.clifford.neg(),
        }
    }

    /// Group inverse. Uses the reversal anti-automorphism: for a word of k
    /// generators the inverse is reversal(x) in the minus cover and
    /// sgn(σ)·reversal(x) in the plus cover.
    pub fn inverse(&self) -> CoverElement {
        let rev = self.clifford.reversal();
        let clifford = match self.cover() {
            Cover::Minus => rev,
            Cover::Plus => {
                if self.perm.is_even() {
                    rev
                } else {
                    rev.neg()
                }
            }
        };
        CoverElement {
            n: self.n,
            perm: self.perm.inverse(),
            clifford,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.clifford == CliffordElement::one(self.cover())
    }

    /// Multiplicative order (intended for small-degree use).
    pub fn order(&self) -> u32 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.mul(self).expect("same group");
            k += 1;
            assert!(k <= 4 * self.n * self.n + 4, "order runaway");
        }
        k
    }

    pub fn tr0(&self) -> Sqrt2Dyadic {
        self.clifford.tr0()
    }

    /// True if this element lies in the preimage of the alternating group.
    pub fn is_alternating(&self) -> bool {
        self.perm.is_even()
    }
}

/// The two lifts of a permutation, as (x, z·x).
pub fn lift(sigma: &Perm, cover: Cover) -> Result<(CoverElement, CoverElement), CoverError> {
    let n = sigma.degree();
    if n > CLASS_DEGREE_BOUND {
        return Err(CoverError::DegreeBound(n, CLASS_DEGREE_BOUND));
    }
    let mut x = CoverElement::identity(n, cover);
    for i in sigma.adjacent_word() {
        x = x.mul(&CoverElement::generator(i + 1, n, cover)?)?;
    }
    debug_assert_eq!(x.perm, *sigma);
    let zx = x.neg();
    Ok((x, zx))
}

/// The canonical lift of the canonical permutation of a cycle type: cycles
/// laid out on consecutive letters in the stored (descending) order, each
/// lifted to the ascending product of generators along its letters.
pub fn canonical_class_lift(
    cycle_type: &Partition,
    n: u32,
    cover: Cover,
) -> Result<CoverElement, CoverError> {
    assert_eq!(cycle_type.size(), n, "cycle type must partition n");
    if n > CLASS_DEGREE_BOUND {
        return Err(CoverError::DegreeBound(n, CLASS_DEGREE_BOUND));
    }
    let mut x = CoverElement::identity(n, cover);
    let mut offset = 0u32;
    for &c in cycle_type.parts() {
        for i in (offset + 1)..(offset + c) {
            x = x.mul(&CoverElement::generator(i, n, cover)?)?;
        }
        offset += c;
    }
    Ok(x)
}

/// Conjugate x by the lift of an adjacent transposition word, letterwise.
fn conjugate_by_word(x: &CoverElement, word: &[u32]) -> CoverElement {
    let n = x.degree();
    let cover = x.cover();
    let mut y = x.clone();
    for &i in word.iter().rev() {
        let g = CoverElement::generator(i + 1, n, cover).expect("index in range");
        let ginv = g.inverse();
        y = g.mul(&y).unwrap().mul(&ginv).unwrap();
    }
    y
}

/// The class of x²: the cycle type of the squared permutation together with
/// the z-twist of x² against the canonical lift of that type.
pub fn square_class(x: &CoverElement) -> Result<ClassLabel, CoverError> {
    let n = x.degree();
    if n > CLASS_DEGREE_BOUND {
        return Err(CoverError::DegreeBound(n, CLASS_DEGREE_BOUND));
    }
    let y = x.mul(x)?;
    class_of(&y)
}

/// Identify the class of an arbitrary element by conjugating it onto the
/// canonical lift of its cycle type.
pub fn class_of(y: &CoverElement) -> Result<ClassLabel, CoverError> {
    let n = y.degree();
    if n > CLASS_DEGREE_BOUND {
        return Err(CoverError::DegreeBound(n, CLASS_DEGREE_BOUND));
    }
    let beta = y.perm().cycle_type();
    let canonical = canonical_class_lift(&beta, n, y.cover())?;
    // build τ with τ σ τ⁻¹ = canonical permutation
    let mut tau_img = vec![0u8; n as usize];
    let mut offset = 0u8;
    for cyc in y.perm().cycles() {
        for (j, &el) in cyc.iter().enumerate() {
            tau_img[el as usize] = offset + j as u8;
        }
        offset += cyc.len() as u8;
    }
    let tau = Perm::from_images(tau_img);
    let conj = conjugate_by_word(y, &tau.adjacent_word());
    debug_assert_eq!(conj.perm(), canonical.perm());
    if conj == canonical {
        Ok(ClassLabel {
            cycle_type: beta,
            z_twist: false,
        })
    } else if conj == canonical.neg() {
        Ok(ClassLabel {
            cycle_type: beta,
            z_twist: true,
        })
    } else {
        unreachable!("conjugate of a lift must be one of the two lifts")
    }
}

/// All 2·n! elements of the double cover, by breadth-first closure over the
/// generators.
pub fn enumerate_group(n: u32, cover: Cover) -> Result<Vec<CoverElement>, CoverError> {
    if n > ENUMERATION_DEGREE_BOUND {
        return Err(CoverError::DegreeBound(n, ENUMERATION_DEGREE_BOUND));
    }
    let gens: Vec<CoverElement> = (1..n)
        .map(|i| CoverElement::generator(i, n, cover).expect("in range"))
        .collect();
    let id = CoverElement::identity(n, cover);
    let z = CoverElement::central(n, cover);
    let mut seen: HashMap<CoverElement, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    seen.insert(z, ());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.mul(g).unwrap();
            let yz = y.neg();
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), ());
                seen.insert(yz, ());
                frontier.push(y);
            }
        }
    }
    Ok(seen.into_keys().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_relations_by_cover() {
        for cover in [Cover::Plus, Cover::Minus] {
            let s1 = CoverElement::generator(1, 4, cover).unwrap();
            let s3 = CoverElement::generator(3, 4, cover).unwrap();
            let sq = s1.mul(&s1).unwrap();
            match cover {
                Cover::Plus => assert_eq!(sq, CoverElement::central(4, cover)),
                Cover::Minus => assert!(sq.is_identity()),
            }
            // distant generators differ by z
            let ab = s1.mul(&s3).unwrap();
            let ba = s3.mul(&s1).unwrap();
            assert_eq!(ab, ba.neg());
        }
    }

    #[test]
    fn braid_relation() {
        for cover in [Cover::Plus, Cover::Minus] {
            let s1 = CoverElement::generator(1, 3, cover).unwrap();
            let s2 = CoverElement::generator(2, 3, cover).unwrap();
            let lhs = s1.mul(&s2).unwrap().mul(&s1).unwrap();
            let rhs = s2.mul(&s1).unwrap().mul(&s2).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lifts_of_three_cycle_have_orders_three_and_six() {
        for cover in [Cover::Plus, Cover::Minus] {
            let sigma = Perm::from_images(vec![1, 2, 0, 3]);
            let (a, b) = lift(&sigma, cover).unwrap();
            let mut orders = [a.order(), b.order()];
            orders.sort();
            assert_eq!(orders, [3, 6], "cover {cover}");
        }
    }

    #[test]
    fn lift_of_identity_and_transposition() {
        let (a, b) = lift(&Perm::identity(3), Cover::Minus).unwrap();
        assert!(a.is_identity() || b.is_identity());
        let sigma = Perm::adjacent(3, 0);
        let (a, _) = lift(&sigma, Cover::Plus).unwrap();
        let s1 = CoverElement::generator(1, 3, Cover::Plus).unwrap();
        assert!(a == s1 || a == s1.neg());
    }

    #[test]
    fn inverse_is_group_inverse() {
        for cover in [Cover::Plus, Cover::Minus] {
            for x in enumerate_group(4, cover).unwrap() {
                assert!(x.mul(&x.inverse()).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn enumeration_cardinality() {
        for n in 1..=5u32 {
            let mut fact = 1u64;
            for k in 1..=u64::from(n) {
                fact *= k;
            }
            for cover in [Cover::Plus, Cover::Minus] {
                assert_eq!(enumerate_group(n, cover).unwrap().len() as u64, 2 * fact);
            }
        }
    }

    #[test]
    fn square_class_examples() {
        let n = 4;
        let s1p = CoverElement::generator(1, n, Cover::Plus).unwrap();
        let cls = square_class(&s1p).unwrap();
        assert_eq!(cls.cycle_type, Partition::new(vec![1, 1, 1, 1]).unwrap());
        assert!(cls.z_twist);

        let s1m = CoverElement::generator(1, n, Cover::Minus).unwrap();
        let cls = square_class(&s1m).unwrap();
        assert!(!cls.z_twist);

        // odd-order lift of a 3-cycle: x² lies in the class of x⁻¹
        for cover in [Cover::Plus, Cover::Minus] {
            let sigma = Perm::from_images(vec![1, 2, 0, 3]);
            let (a, b) = lift(&sigma, cover).unwrap();
            let x = if a.order() == 3 { a } else { b };
            assert_eq!(
                square_class(&x).unwrap(),
                class_of(&x.inverse()).unwrap(),
                "cover {cover}"
            );
        }
    }
}
