//! The additive group of ℤ[G \ 1]: finitely supported integer combinations of
//! nontrivial group elements.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

/// An element of ℤ[G \ 1]. Keys are never the identity and coefficients are
/// never zero; iteration follows the canonical order of group elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RingElement {
    terms: BTreeMap<GroupElement, BigInt>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl ExactSizeIterator<Item = &GroupElement> {
        self.terms.keys()
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    /// `c·g`. A zero coefficient gives the zero element.
    pub fn monomial(g: GroupElement, c: impl Into<BigInt>) -> Result<Self> {
        let c = c.into();
        let mut out = RingElement::zero();
        if c.is_zero() {
            return Ok(out);
        }
        if g.is_identity() {
            return Err(Error::validation(
                "term",
                "the identity element is not a basis element of Z[pi_1 \\ 1]",
            ));
        }
        out.terms.insert(g, c);
        Ok(out)
    }

    /// Add `c·g` in place. The caller guarantees `g` is not the identity.
    pub(crate) fn add_term(&mut self, g: GroupElement, c: BigInt) {
        debug_assert!(!g.is_identity());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Checked constructor from arbitrary terms; like terms combine.
    pub fn from_terms(
        spec: &GroupSpec,
        terms: impl IntoIterator<Item = (GroupElement, BigInt)>,
    ) -> Result<Self> {
        let mut out = RingElement::zero();
        for (i, (g, c)) in terms.into_iter().enumerate() {
            spec.check(&g)
                .map_err(|e| e.within(&format!("terms[{i}]")))?;
            if g.is_identity() && !c.is_zero() {
                return Err(Error::validation(
                    format!("terms[{i}]"),
                    "the identity element is not a basis element of Z[pi_1 \\ 1]",
                ));
            }
            if !g.is_identity() {
                out.add_term(g, c);
            }
        }
        Ok(out)
    }

    /// Verify that every key is a nontrivial reduced word over `spec` and no
    /// coefficient is zero.
    pub fn check(&self, spec: &GroupSpec) -> Result<()> {
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let path = format!("terms[{i}]");
            spec.check(g).map_err(|e| e.within(&path))?;
            if g.is_identity() {
                return Err(Error::validation(path, "identity key"));
            }
            if c.is_zero() {
                return Err(Error::validation(path, "zero coefficient"));
            }
        }
        Ok(())
    }

    /// `x + y` after checking both are elements over `spec`.
    pub fn add_checked(&self, other: &Self, spec: &GroupSpec) -> Result<Self> {
        self.check(spec).map_err(|e| e.within("lhs"))?;
        other.check(spec).map_err(|e| e.within("rhs"))?;
        Ok(self + other)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return RingElement::zero();
        }
        RingElement {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * k)).collect(),
        }
    }
}

/// `sign·(g + g⁻¹)`; equal to `sign·2g` when `g` is an involution.
pub fn dax_sum(g: &GroupElement, sign: i8, spec: &GroupSpec) -> Result<RingElement> {
    spec.check(g)?;
    check_sign(sign, "sign")?;
    if g.is_identity() {
        return Err(Error::validation(
            "element",
            "dax_sum is undefined on the identity element",
        ));
    }
    let s = BigInt::from(sign);
    let mut out = RingElement::zero();
    out.add_term(spec.inverse_unchecked(g), s.clone());
    out.add_term(g.clone(), s);
    Ok(out)
}

pub(crate) fn check_sign(sign: i8, path: &str) -> Result<()> {
    if sign == 1 || sign == -1 {
        Ok(())
    } else {
        Err(Error::validation(
            path,
            format!("sign must be +1 or -1, got {sign}"),
        ))
    }
}

impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }
}

impl Add for RingElement {
    type Output = RingElement;

    fn add(mut self, rhs: RingElement) -> RingElement {
        for (g, c) in rhs.terms {
            self.add_term(g, c);
        }
        self
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        RingElement {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(mut self) -> RingElement {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Sub for RingElement {
    type Output = RingElement;

    fn sub(self, rhs: RingElement) -> RingElement {
        self + (-rhs)
    }
}

impl std::iter::Sum for RingElement {
    fn sum<I: Iterator<Item = RingElement>>(iter: I) -> Self {
        iter.fold(RingElement::zero(), |acc, x| acc + x)
    }
}

impl From<GroupElement> for RingElement {
    /// `1·g`; the identity maps to zero.
    fn from(g: GroupElement) -> Self {
        let mut out = RingElement::zero();
        if !g.is_identity() {
            out.add_term(g, BigInt::one());
        }
        out
    }
}
