use crate::clifford::Cover;
use crate::cover::{CoverElement, CoverError, CLASS_DEGREE_BOUND};

/// Outcome of checking one defining relation on concrete generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub n: u32,
    pub cover: Cover,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks every defining relation of the chosen cover on the generator
/// images: s_i² = z (plus) or 1 (minus), z² = 1, z central, the braid
/// relations, and s_i s_j = s_j s_i z for |i − j| > 1.
pub fn verify_presentation(n: u32, cover: Cover) -> Result<PresentationReport, CoverError> {
    if n > CLASS_DEGREE_BOUND {
        return Err(CoverError::DegreeBound(n, CLASS_DEGREE_BOUND));
    }
    let gens: Vec<CoverElement> = (1..n)
        .map(|i| CoverElement::generator(i, n, cover).expect("in range"))
        .collect();
    verify_on_images(n, cover, &gens)
}

/// Same checks against arbitrary candidate generator images (used by the
/// negative-control tests).
pub fn verify_on_images(
    n: u32,
    cover: Cover,
    gens: &[CoverElement],
) -> Result<PresentationReport, CoverError> {
    let z = CoverElement::central(n, cover);
    let id = CoverElement::identity(n, cover);
    let mut checks = Vec::new();

    checks.push(RelationCheck {
        relation: "z^2 = 1".into(),
        pass: z.mul(&z)? == id,
    });
    for (idx, s) in gens.iter().enumerate() {
        let i = idx + 1;
        let expected = match cover {
            Cover::Plus => &z,
            Cover::Minus => &id,
        };
        checks.push(RelationCheck {
            relation: format!("s{i}^2 = {}", if cover == Cover::Plus { "z" } else { "1" }),
            pass: s.mul(s)? == *expected,
        });
        checks.push(RelationCheck {
            relation: format!("s{i} z = z s{i}"),
            pass: s.mul(&z)? == z.mul(s)?,
        });
    }
    for a in 0..gens.len() {
        for b in (a + 1)..gens.len() {
            let (si, sj) = (&gens[a], &gens[b]);
            let (i, j) = (a + 1, b + 1);
            if b == a + 1 {
                let lhs = si.mul(sj)?.mul(si)?;
                let rhs = sj.mul(si)?.mul(sj)?;
                checks.push(RelationCheck {
                    relation: format!("s{i} s{j} s{i} = s{j} s{i} s{j}"),
                    pass: lhs == rhs,
                });
            } else {
                let lhs = si.mul(sj)?;
                let rhs = sj.mul(si)?.mul(&z)?;
                checks.push(RelationCheck {
                    relation: format!("s{i} s{j} = s{j} s{i} z"),
                    pass: lhs == rhs,
                });
            }
        }
    }
    Ok(PresentationReport { n, cover, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentations_hold_up_to_ten() {
        for n in 1..=10 {
            for cover in [Cover::Plus, Cover::Minus] {
                let report = verify_presentation(n, cover).unwrap();
                assert!(report.all_pass(), "n={n} cover={cover}");
            }
        }
    }

    #[test]
    fn flipped_generator_breaks_a_braid_relation() {
        let n = 4;
        let cover = Cover::Minus;
        let mut gens: Vec<CoverElement> = (1..n)
            .map(|i| CoverElement::generator(i, n, cover).unwrap())
            .collect();
        gens[1] = gens[1].neg();
        let report = verify_on_images(n, cover, &gens).unwrap();
        let braid_failures: Vec<&RelationCheck> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .collect();
        assert!(!braid_failures.is_empty());
        assert!(braid_failures
            .iter()
            .all(|c| c.relation.contains(" s") && c.relation.matches('s').count() == 6));
    }
}
