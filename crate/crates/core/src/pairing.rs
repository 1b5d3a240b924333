//! Signed double-point sums `Σ σ_x g_x` of homotopies of arcs and of
//! compositions of spin maps.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::ring::{check_sign, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoublePoint {
    pub sign: i8,
    pub loop_element: GroupElement,
}

impl DoublePoint {
    pub fn new(sign: i8, loop_element: GroupElement) -> Self {
        DoublePoint { sign, loop_element }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DoublePointList {
    pub points: Vec<DoublePoint>,
}

impl DoublePointList {
    pub fn new(points: Vec<DoublePoint>) -> Self {
        DoublePointList { points }
    }

    /// Concatenation of homotopies.
    pub fn then(&self, other: &DoublePointList) -> DoublePointList {
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        DoublePointList { points }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaxValue {
    pub value: RingElement,
    /// Double points whose loop is trivial; these do not contribute.
    pub dropped: usize,
}

pub fn dax_value(dp: &DoublePointList, spec: &GroupSpec) -> Result<DaxValue> {
    let mut value = RingElement::zero();
    let mut dropped = 0;
    for (i, p) in dp.points.iter().enumerate() {
        let path = format!("points[{i}]");
        check_sign(p.sign, &path)?;
        spec.check(&p.loop_element).map_err(|e| e.within(&path))?;
        if p.loop_element.is_identity() {
            dropped += 1;
        } else {
            value.add_term(p.loop_element.clone(), BigInt::from(p.sign));
        }
    }
    Ok(DaxValue { value, dropped })
}

/// Dax value of the composition `τ_{σ₁g₁} ∘ … ∘ τ_{σₙgₙ}`. Spin maps commute
/// up to homotopy, so the order of `spins` is irrelevant.
pub fn spin_composition_value(
    spins: &[(i8, GroupElement)],
    spec: &GroupSpec,
) -> Result<RingElement> {
    let mut value = RingElement::zero();
    for (i, (sign, g)) in spins.iter().enumerate() {
        let path = format!("spins[{i}]");
        check_sign(*sign, &path)?;
        spec.check(g).map_err(|e| e.within(&path))?;
        if g.is_identity() {
            return Err(Error::validation(
                path,
                "spin map along the trivial element",
            ));
        }
        value.add_term(g.clone(), BigInt::from(*sign));
    }
    Ok(value)
}
