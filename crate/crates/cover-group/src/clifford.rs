use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Sqrt2Dyadic;

/// Which double cover is being modelled. The model sends the generator s_i
/// to (e_i − e_{i+1})/√2 inside a rank-n Clifford algebra; the plus cover
/// uses e_i² = −1 (so s_i² = z), the minus cover e_i² = +1 (so s_i² = 1).
/// In both models the central element z acts as the scalar −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cover {
    Plus,
    Minus,
}

impl Cover {
    /// The common square e_i² as a sign.
    pub fn vector_square(self) -> i32 {
        match self {
            Cover::Plus => -1,
            Cover::Minus => 1,
        }
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cover::Plus => write!(f, "+"),
            Cover::Minus => write!(f, "-"),
        }
    }
}

/// An exact element of the rank-n Clifford algebra over Z[√2, 1/2], stored
/// as a sparse map from basis blades (bitmasks over e_1..e_n) to
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    cover: Cover,
    terms: BTreeMap<u32, Sqrt2Dyadic>,
}

/// Number of index swaps needed to merge the ascending blades a and b:
/// counts pairs (i ∈ a, j ∈ b) with i > j.
fn swap_count(a: u32, b: u32) -> u32 {
    let mut total = 0u32;
    let mut shifted = a >> 1;
    while shifted != 0 {
        total += (shifted & b).count_ones();
        shifted >>= 1;
    }
    total
}

impl CliffordElement {
    pub fn zero(cover: Cover) -> Self {
        CliffordElement {
            cover,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(cover: Cover, c: Sqrt2Dyadic) -> Self {
        let mut el = CliffordElement::zero(cover);
        el.add_term(0, c);
        el
    }

    pub fn one(cover: Cover) -> Self {
        CliffordElement::scalar(cover, Sqrt2Dyadic::ONE)
    }

    pub fn cover(&self) -> Cover {
        self.cover
    }

    pub fn add_term(&mut self, mask: u32, c: Sqrt2Dyadic) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert(Sqrt2Dyadic::ZERO);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, Sqrt2Dyadic)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the identity blade; a trace functional up to scale.
    pub fn tr0(&self) -> Sqrt2Dyadic {
        self.terms.get(&0).copied().unwrap_or(Sqrt2Dyadic::ZERO)
    }

    /// The generator image s_i = (e_i − e_{i+1})/√2 with 1-based i.
    pub fn generator(cover: Cover, i: u32) -> Self {
        assert!(i >= 1);
        let h = Sqrt2Dyadic::inv_sqrt2();
        let mut el = CliffordElement::zero(cover);
        el.add_term(1 << (i - 1), h);
        el.add_term(1 << i, -h);
        el
    }

    pub fn mul(&self, rhs: &CliffordElement) -> CliffordElement {
        assert_eq!(self.cover, rhs.cover);
        let eta = self.cover.vector_square();
        let mut out = CliffordElement::zero(self.cover);
        for (&ma, &ca) in &self.terms {
            for (&mb, &cb) in &rhs.terms {
                let mut sign = swap_count(ma, mb) % 2 == 1;
                if eta < 0 && (ma & mb).count_ones() % 2 == 1 {
                    sign = !sign;
                }
                let c = if sign { -(ca * cb) } else { ca * cb };
                out.add_term(ma ^ mb, c);
            }
        }
        out
    }

    pub fn neg(&self) -> CliffordElement {
        CliffordElement {
            cover: self.cover,
            terms: self.terms.iter().map(|(&m, &c)| (m, -c)).collect(),
        }
    }

    pub fn add(&self, rhs: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        for (&m, &c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }

    /// The reversal anti-automorphism e_{i1}…e_{ik} ↦ e_{ik}…e_{i1}, i.e.
    /// the blade sign (−1)^{k(k−1)/2}.
    pub fn reversal(&self) -> CliffordElement {
        let mut out = CliffordElement::zero(self.cover);
        for (&m, &c) in &self.terms {
            let k = m.count_ones();
            let flip = (k * k.wrapping_sub(1) / 2) % 2 == 1;
            out.add_term(m, if flip { -c } else { c });
        }
        out
    }

    /// Debug dump as a signed monomial list.
    pub fn dump(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&m, &c) in &self.terms {
            let mut blade = String::new();
            for i in 0..32 {
                if m & (1 << i) != 0 {
                    blade.push_str(&format!("e{}", i + 1));
                }
            }
            if blade.is_empty() {
                blade.push('1');
            }
            parts.push(format!("{c}·{blade}"));
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(cover: Cover, i: u32) -> CliffordElement {
        let mut el = CliffordElement::zero(cover);
        el.add_term(1 << (i - 1), Sqrt2Dyadic::ONE);
        el
    }

    #[test]
    fn vector_relations() {
        for cover in [Cover::Plus, Cover::Minus] {
            let e1 = e(cover, 1);
            let e2 = e(cover, 2);
            let sq = e1.mul(&e1);
            assert_eq!(
                sq,
                CliffordElement::scalar(cover, Sqrt2Dyadic::from_int(cover.vector_square().into()))
            );
            let ab = e1.mul(&e2);
            let ba = e2.mul(&e1);
            assert_eq!(ab, ba.neg());
        }
    }

    #[test]
    fn associativity_small() {
        // brute force over blades of a rank-4 algebra
        for cover in [Cover::Plus, Cover::Minus] {
            let blades: Vec<CliffordElement> = (0u32..16)
                .map(|m| {
                    let mut el = CliffordElement::zero(cover);
                    el.add_term(m, Sqrt2Dyadic::ONE);
                    el
                })
                .collect();
            for a in &blades {
                for b in &blades {
                    for c in &blades {
                        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                    }
                }
            }
        }
    }

    #[test]
    fn reversal_is_anti_automorphism() {
        for cover in [Cover::Plus, Cover::Minus] {
            let x = CliffordElement::generator(cover, 1)
                .mul(&CliffordElement::generator(cover, 2))
                .add(&e(cover, 3));
            let y = CliffordElement::generator(cover, 2).mul(&e(cover, 1));
            assert_eq!(x.mul(&y).reversal(), y.reversal().mul(&x.reversal()));
        }
    }
}
