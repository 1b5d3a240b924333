//! Free products of cyclic groups and their reduced words.
//!
//! An element is stored as its unique reduced word: a list of syllables
//! `x_i^e_i` in which adjacent syllables belong to different factors, no
//! exponent is zero, and exponents of a finite factor of order `n` lie in
//! `[1, n-1]`. The word problem is then decided by syntactic equality.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One cyclic free factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Factor {
    #[serde(rename = "Z")]
    Infinite { name: String },
    #[serde(rename = "Zn")]
    Finite { name: String, n: u64 },
}

impl Factor {
    pub fn infinite(name: impl Into<String>) -> Self {
        Factor::Infinite { name: name.into() }
    }

    pub fn finite(name: impl Into<String>, n: u64) -> Self {
        Factor::Finite {
            name: name.into(),
            n,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Factor::Infinite { name } | Factor::Finite { name, .. } => name,
        }
    }

    /// `None` for an infinite cyclic factor.
    pub fn order(&self) -> Option<u64> {
        match self {
            Factor::Infinite { .. } => None,
            Factor::Finite { n, .. } => Some(*n),
        }
    }

    /// Reduce a raw exponent to the canonical range for this factor. Finite
    /// factors map into `[0, n)`, where `0` means the syllable vanishes.
    fn normalize_exponent(&self, e: BigInt) -> BigInt {
        match self.order() {
            None => e,
            Some(n) => e.mod_floor(&BigInt::from(n)),
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A free product of cyclic groups. The empty product is the trivial group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
}

/// `x^e` for the factor at `factor`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub factor: usize,
    pub exp: BigInt,
}

impl Syllable {
    pub fn new(factor: usize, exp: impl Into<BigInt>) -> Self {
        Syllable {
            factor,
            exp: exp.into(),
        }
    }

    /// Sort key: factor index, then magnitude, then positive before negative.
    fn cmp_key(&self, other: &Self) -> Ordering {
        self.factor
            .cmp(&other.factor)
            .then_with(|| self.exp.abs().cmp(&other.exp.abs()))
            .then_with(|| self.exp.is_negative().cmp(&other.exp.is_negative()))
    }
}

/// A reduced word. The empty word is the identity.
///
/// `Ord` is the canonical order used for all serialization: shorter words
/// first, then syllable by syllable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupElement {
    syllables: Vec<Syllable>,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement::default()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Wrap a syllable list without reducing it. Use
    /// [`GroupSpec::check`] or [`GroupSpec::word`] before trusting the result.
    pub fn from_syllables_unchecked(syllables: Vec<Syllable>) -> Self {
        GroupElement { syllables }
    }
}

pub fn compare_canonical(a: &GroupElement, b: &GroupElement) -> Ordering {
    a.syllables.len().cmp(&b.syllables.len()).then_with(|| {
        a.syllables
            .iter()
            .zip(&b.syllables)
            .map(|(x, y)| x.cmp_key(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_canonical(self, other)
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl GroupSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        let spec = GroupSpec { factors };
        spec.validate()?;
        Ok(spec)
    }

    pub fn trivial() -> Self {
        GroupSpec::default()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for (i, f) in self.factors.iter().enumerate() {
            let path = format!("group.factors[{i}]");
            if !is_identifier(f.name()) {
                return Err(Error::validation(
                    path,
                    format!("factor name {:?} is not an identifier", f.name()),
                ));
            }
            if let Some(n) = f.order() {
                if n < 2 {
                    return Err(Error::validation(
                        path,
                        "finite factor order must be at least 2",
                    ));
                }
            }
            if self.factors[..i].iter().any(|g| g.name() == f.name()) {
                return Err(Error::validation(
                    path,
                    format!("duplicate factor name {:?}", f.name()),
                ));
            }
        }
        Ok(())
    }

    pub fn factor_index(&self, name: &str) -> Option<usize> {
        self.factors.iter().position(|f| f.name() == name)
    }

    /// The generator of the named factor.
    pub fn generator(&self, name: &str) -> Result<GroupElement> {
        let idx = self
            .factor_index(name)
            .ok_or_else(|| Error::validation("word", format!("unknown factor {name:?}")))?;
        self.word([Syllable::new(idx, 1)])
    }

    /// Check that `g` is a reduced word over this group.
    pub fn check(&self, g: &GroupElement) -> Result<()> {
        for (i, s) in g.syllables.iter().enumerate() {
            let path = format!("word.syllables[{i}]");
            let factor = self.factors.get(s.factor).ok_or_else(|| {
                Error::validation(
                    path.clone(),
                    format!("factor index {} out of range", s.factor),
                )
            })?;
            if s.exp.is_zero() {
                return Err(Error::validation(path, "zero exponent"));
            }
            if let Some(n) = factor.order() {
                if s.exp.is_negative() || s.exp >= BigInt::from(n) {
                    return Err(Error::validation(
                        path,
                        format!("exponent {} outside [1, {}]", s.exp, n - 1),
                    ));
                }
            }
            if i > 0 && g.syllables[i - 1].factor == s.factor {
                return Err(Error::validation(path, "adjacent syllables share a factor"));
            }
        }
        Ok(())
    }

    /// Build the reduced word of an arbitrary product of syllables. Exponents
    /// may be zero or out of range; equal neighbours merge, cascading as
    /// needed.
    pub fn word(&self, syllables: impl IntoIterator<Item = Syllable>) -> Result<GroupElement> {
        let mut out: Vec<Syllable> = Vec::new();
        for (i, s) in syllables.into_iter().enumerate() {
            let factor = self.factors.get(s.factor).ok_or_else(|| {
                Error::validation(
                    format!("word.syllables[{i}]"),
                    format!("factor index {} out of range", s.factor),
                )
            })?;
            push_syllable(&mut out, factor, s);
        }
        Ok(GroupElement { syllables: out })
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.multiply_unchecked(a, b))
    }

    pub(crate) fn multiply_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut out = a.syllables.clone();
        for s in &b.syllables {
            push_syllable(&mut out, &self.factors[s.factor], s.clone());
        }
        GroupElement { syllables: out }
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.inverse_unchecked(a))
    }

    pub(crate) fn inverse_unchecked(&self, a: &GroupElement) -> GroupElement {
        let syllables = a
            .syllables
            .iter()
            .rev()
            .map(|s| {
                let factor = &self.factors[s.factor];
                Syllable {
                    factor: s.factor,
                    exp: factor.normalize_exponent(-&s.exp),
                }
            })
            .collect();
        GroupElement { syllables }
    }

    pub fn is_two_torsion(&self, a: &GroupElement) -> Result<bool> {
        self.check(a)?;
        Ok(self.is_two_torsion_unchecked(a))
    }

    pub(crate) fn is_two_torsion_unchecked(&self, a: &GroupElement) -> bool {
        !a.is_identity() && self.multiply_unchecked(a, a).is_identity()
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: &GroupElement, k: i64) -> Result<GroupElement> {
        self.check(a)?;
        let base = if k < 0 {
            self.inverse_unchecked(a)
        } else {
            a.clone()
        };
        let mut acc = GroupElement::identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.multiply_unchecked(&acc, &base);
        }
        Ok(acc)
    }
}

fn push_syllable(out: &mut Vec<Syllable>, factor: &Factor, s: Syllable) {
    let exp = factor.normalize_exponent(s.exp);
    if exp.is_zero() {
        return;
    }
    match out.last_mut() {
        Some(top) if top.factor == s.factor => {
            let merged = factor.normalize_exponent(&top.exp + exp);
            if merged.is_zero() {
                out.pop();
            } else {
                top.exp = merged;
            }
        }
        _ => out.push(Syllable {
            factor: s.factor,
            exp,
        }),
    }
}
