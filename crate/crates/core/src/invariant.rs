//! The invariant `φ_{D₀}` and three-valued isotopy verdicts.

use std::fmt;

use serde::Serialize;

use crate::disc::{normalize_unchecked, validate, ManifoldModel, SrData};
use crate::error::{Error, Result};
use crate::kernel::reduce_unchecked;
use crate::ring::{dax_sum, RingElement};

/// `φ(D) = Σ λ̂ᵢ + Σ σⱼ(gⱼ + gⱼ⁻¹)`, reduced modulo the Dax kernel.
pub fn phi(d: &SrData, m: &ManifoldModel) -> Result<RingElement> {
    validate(d, m)?;
    Ok(phi_unchecked(d, m))
}

fn phi_unchecked(d: &SrData, m: &ManifoldModel) -> RingElement {
    let mut sum: RingElement = d.double_tubes.iter().cloned().map(RingElement::from).sum();
    for s in &d.sr_discs {
        sum = sum + dax_sum(&s.element, s.sign, &m.group).expect("validated disc data");
    }
    reduce_unchecked(&sum, &m.kernel, &m.group)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Isotopic,
    NotIsotopic,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Isotopic => "ISOTOPIC",
            Outcome::NotIsotopic => "NOT_ISOTOPIC",
            Outcome::Unknown => "UNKNOWN",
        })
    }
}

/// Which rule decided a comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Every disc is isotopic to the base disc when the group is trivial.
    TrivialGroup,
    /// Both discs normalize to the same data.
    NormalForm,
    /// The reduced invariants differ.
    PhiDifference,
    /// The invariants agree but the data differ.
    PhiEqual,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::TrivialGroup => "trivial-group",
            Rule::NormalForm => "normal-form",
            Rule::PhiDifference => "phi-difference",
            Rule::PhiEqual => "phi-equal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub rule: Rule,
    /// `φ(D₁) - φ(D₂)` after reduction.
    pub difference: RingElement,
    pub certificate: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  certificate: {}", self.outcome, self.certificate)
    }
}

pub fn compare(d1: &SrData, d2: &SrData, m: &ManifoldModel) -> Result<Verdict> {
    validate(d1, m).map_err(|r| Error::from(r).within("lhs"))?;
    validate(d2, m).map_err(|r| Error::from(r).within("rhs"))?;
    let spec = &m.group;

    if spec.is_trivial() {
        return Ok(Verdict {
            outcome: Outcome::Isotopic,
            rule: Rule::TrivialGroup,
            difference: RingElement::zero(),
            certificate: "pi_1 = 1".to_string(),
        });
    }

    let (n1, n2) = (normalize_unchecked(d1), normalize_unchecked(d2));
    if n1 == n2 {
        return Ok(Verdict {
            outcome: Outcome::Isotopic,
            rule: Rule::NormalForm,
            difference: RingElement::zero(),
            certificate: format!("normal form {}", spec.display_disc(&n1)),
        });
    }

    let diff = reduce_unchecked(
        &(phi_unchecked(d1, m) - phi_unchecked(d2, m)),
        &m.kernel,
        spec,
    );
    let certificate = spec.display_ring(&diff).to_string();
    let (outcome, rule) = if diff.is_zero() {
        (Outcome::Unknown, Rule::PhiEqual)
    } else {
        (Outcome::NotIsotopic, Rule::PhiDifference)
    };
    Ok(Verdict {
        outcome,
        rule,
        difference: diff,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc::{concat, normalize, SrDisc};
    use crate::group::{Factor, GroupElement, GroupSpec, Syllable};
    use crate::kernel::KernelSpec;

    fn model(kernel: KernelSpec) -> ManifoldModel {
        let g = GroupSpec::new(vec![Factor::infinite("t"), Factor::finite("a", 2)]).unwrap();
        ManifoldModel::new(g, kernel, "test").unwrap()
    }

    fn el(f: usize, e: i64) -> GroupElement {
        model(KernelSpec::Trivial)
            .group
            .word([Syllable::new(f, e)])
            .unwrap()
    }

    fn m(g: GroupElement, c: i64) -> RingElement {
        RingElement::monomial(g, c).unwrap()
    }

    #[test]
    fn phi_examples() {
        let mm = model(KernelSpec::Trivial);
        assert!(phi(&SrData::empty(), &mm).unwrap().is_zero());
        assert_eq!(
            phi(&SrData::sr_disc(1, el(0, 1)), &mm).unwrap(),
            m(el(0, 1), 1) + m(el(0, -1), 1)
        );
        assert_eq!(
            phi(&SrData::double_tube(el(1, 1)), &mm).unwrap(),
            m(el(1, 1), 1)
        );
        assert!(phi(&SrData::double_tube(el(0, 1)), &mm).is_err());
    }

    #[test]
    fn compare_examples() {
        let mm = model(KernelSpec::Trivial);
        let dt = |k| SrData::sr_disc(1, el(0, k));
        let v = compare(&dt(1), &SrData::empty(), &mm).unwrap();
        assert_eq!(v.outcome, Outcome::NotIsotopic);
        assert_eq!(v.certificate, "t + t^-1");
        assert_eq!(v.to_string(), "NOT_ISOTOPIC  certificate: t + t^-1");
        assert_eq!(
            compare(&dt(2), &dt(3), &mm).unwrap().outcome,
            Outcome::NotIsotopic
        );
        let v = compare(&dt(1), &dt(-1), &mm).unwrap();
        assert_eq!(v.outcome, Outcome::Unknown);
        assert_eq!(v.rule, Rule::PhiEqual);
    }

    #[test]
    fn compare_by_normal_form() {
        let mm = model(KernelSpec::Trivial);
        let d1 = SrData {
            double_tubes: vec![el(1, 1), el(1, 1)],
            sr_discs: vec![SrDisc::new(1, el(0, 2))],
        };
        let d2 = SrData {
            double_tubes: vec![],
            sr_discs: vec![SrDisc::new(1, el(0, 2)), SrDisc::new(1, el(1, 1))],
        };
        let v = compare(&d1, &d2, &mm).unwrap();
        assert_eq!((v.outcome, v.rule), (Outcome::Isotopic, Rule::NormalForm));
    }

    #[test]
    fn kernel_can_hide_difference() {
        let mm = model(KernelSpec::InversePairs);
        let v = compare(
            &SrData::sr_disc(1, el(0, 1)),
            &SrData::sr_disc(-1, el(0, 1)),
            &mm,
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::NotIsotopic);
        assert_eq!(v.certificate, "4*t");
    }

    #[test]
    fn phi_respects_moves_and_sums() {
        let mm = model(KernelSpec::Trivial);
        let d = SrData {
            double_tubes: vec![el(1, 1), el(1, 1), el(1, 1)],
            sr_discs: vec![
                SrDisc::new(-1, el(0, 2)),
                SrDisc::new(1, el(0, 2)),
                SrDisc::new(1, el(0, 1)),
            ],
        };
        let n = normalize(&d, &mm).unwrap();
        assert_eq!(phi(&n, &mm).unwrap(), phi(&d, &mm).unwrap());
        let e = SrData::sr_disc(-1, el(0, 3));
        let sum = concat(&d, &e, &mm).unwrap();
        assert_eq!(
            phi(&sum, &mm).unwrap(),
            phi(&d, &mm).unwrap() + phi(&e, &mm).unwrap()
        );
    }

    #[test]
    fn trivial_group_always_isotopic() {
        let mm = ManifoldModel::new(GroupSpec::trivial(), KernelSpec::Trivial, "S4").unwrap();
        let v = compare(&SrData::empty(), &SrData::empty(), &mm).unwrap();
        assert_eq!((v.outcome, v.rule), (Outcome::Isotopic, Rule::TrivialGroup));
    }
}
