//! Self-referential form data of a disc relative to the base disc, and the
//! moves that normalize it.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::kernel::KernelSpec;

/// The group and Dax kernel standing for a 4-manifold with base disc, dual
/// sphere and base arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldModel {
    pub group: GroupSpec,
    pub kernel: KernelSpec,
    pub label: String,
}

impl ManifoldModel {
    pub fn new(group: GroupSpec, kernel: KernelSpec, label: impl Into<String>) -> Result<Self> {
        group.validate()?;
        kernel.check(&group)?;
        Ok(ManifoldModel {
            group,
            kernel,
            label: label.into(),
        })
    }
}

/// A signed self-referential disc `σg`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrDisc {
    pub sign: i8,
    pub element: GroupElement,
}

impl SrDisc {
    pub fn new(sign: i8, element: GroupElement) -> Self {
        SrDisc { sign, element }
    }

    fn sort_key(&self) -> (&GroupElement, i8) {
        // positive before negative for the same element
        (&self.element, -self.sign)
    }
}

/// Self-referential form data `(λ₁, …, λₙ, σ₁g₁, …, σₖgₖ)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SrData {
    pub double_tubes: Vec<GroupElement>,
    pub sr_discs: Vec<SrDisc>,
}

/// One failed data constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl From<ViolationReport> for Error {
    fn from(r: ViolationReport) -> Self {
        match r.violations.as_slice() {
            [only] => Error::validation(only.path.clone(), only.message.clone()),
            _ => Error::validation("disc", r.to_string()),
        }
    }
}

impl SrData {
    pub fn empty() -> Self {
        SrData::default()
    }

    pub fn is_empty(&self) -> bool {
        self.double_tubes.is_empty() && self.sr_discs.is_empty()
    }

    /// `D_λ`: a single double tube.
    pub fn double_tube(lambda: GroupElement) -> Self {
        SrData {
            double_tubes: vec![lambda],
            sr_discs: Vec::new(),
        }
    }

    /// `D_{σg}`: a single self-referential disc.
    pub fn sr_disc(sign: i8, g: GroupElement) -> Self {
        SrData {
            double_tubes: Vec::new(),
            sr_discs: vec![SrDisc::new(sign, g)],
        }
    }
}

/// Check the raw data constraints: tubes are nontrivial involutions, discs
/// carry nontrivial elements and unit signs. Repeated entries are allowed.
pub fn validate(d: &SrData, m: &ManifoldModel) -> std::result::Result<(), ViolationReport> {
    let spec = &m.group;
    let mut violations = Vec::new();
    let mut push = |path: String, message: String| violations.push(Violation { path, message });

    for (i, lambda) in d.double_tubes.iter().enumerate() {
        let path = format!("double_tubes[{i}]");
        if let Err(e) = spec.check(lambda) {
            push(path, e.to_string());
        } else if !spec.is_two_torsion_unchecked(lambda) {
            push(
                path,
                "double tube must be a nontrivial 2-torsion element".into(),
            );
        }
    }
    for (j, disc) in d.sr_discs.iter().enumerate() {
        let path = format!("sr_discs[{j}]");
        if disc.sign != 1 && disc.sign != -1 {
            push(
                path.clone(),
                format!("sign must be +1 or -1, got {}", disc.sign),
            );
        }
        if let Err(e) = spec.check(&disc.element) {
            push(path, e.to_string());
        } else if disc.element.is_identity() {
            push(
                path,
                "self-referential disc element must be nontrivial".into(),
            );
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(ViolationReport { violations })
    }
}

/// The sum `D₁ + D₂`: concatenation of both data lists.
pub fn concat(d1: &SrData, d2: &SrData, m: &ManifoldModel) -> Result<SrData> {
    validate(d1, m).map_err(|r| Error::from(r).within("lhs"))?;
    validate(d2, m).map_err(|r| Error::from(r).within("rhs"))?;
    let mut out = d1.clone();
    out.double_tubes.extend(d2.double_tubes.iter().cloned());
    out.sr_discs.extend(d2.sr_discs.iter().cloned());
    Ok(out)
}

/// Data whose sum with `d` has vanishing invariant.
///
/// Self-referential discs flip sign. A double tube `λ` has no inverse of its
/// own kind; since two copies of `λ` equal `+λ`, its inverse is modeled as
/// `λ` together with `-λ`.
pub fn negate_data(d: &SrData) -> SrData {
    let mut out = SrData {
        double_tubes: d.double_tubes.clone(),
        sr_discs: d
            .sr_discs
            .iter()
            .map(|s| SrDisc::new(-s.sign, s.element.clone()))
            .collect(),
    };
    out.sr_discs
        .extend(d.double_tubes.iter().map(|l| SrDisc::new(-1, l.clone())));
    out
}

/// Apply the data moves to a fixed point:
///
/// 1. each pair of equal double tubes becomes one disc `+λ`;
/// 2. opposite-sign discs on the same element cancel;
/// 3. both lists are sorted canonically.
pub fn normalize(d: &SrData, m: &ManifoldModel) -> Result<SrData> {
    validate(d, m)?;
    Ok(normalize_unchecked(d))
}

pub(crate) fn normalize_unchecked(d: &SrData) -> SrData {
    let mut tube_counts: BTreeMap<&GroupElement, usize> = BTreeMap::new();
    for lambda in &d.double_tubes {
        *tube_counts.entry(lambda).or_default() += 1;
    }

    // Net signed multiplicity of each self-referential disc.
    let mut net: BTreeMap<GroupElement, i64> = BTreeMap::new();
    for s in &d.sr_discs {
        *net.entry(s.element.clone()).or_default() += i64::from(s.sign);
    }

    let mut double_tubes = Vec::new();
    for (lambda, count) in tube_counts {
        *net.entry(lambda.clone()).or_default() += (count / 2) as i64;
        if count % 2 == 1 {
            double_tubes.push(lambda.clone());
        }
    }

    let mut sr_discs: Vec<SrDisc> = Vec::new();
    for (g, n) in net {
        let sign = if n > 0 { 1 } else { -1 };
        sr_discs.extend((0..n.unsigned_abs()).map(|_| SrDisc::new(sign, g.clone())));
    }
    sr_discs.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    SrData {
        double_tubes,
        sr_discs,
    }
}
