//! The Dax kernel and reduction to canonical coset representatives in
//! ℤ[G \ 1] / D.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::lattice::Hnf;
use crate::ring::RingElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelSpec {
    /// D = 0.
    Trivial,
    /// D spanned by `w - w⁻¹` for every nontrivial `w`.
    InversePairs,
    /// D spanned by a finite list of elements.
    ExplicitList(Vec<RingElement>),
}

impl KernelSpec {
    pub fn check(&self, spec: &GroupSpec) -> Result<()> {
        if let KernelSpec::ExplicitList(gens) = self {
            for (i, g) in gens.iter().enumerate() {
                let path = format!("dax_kernel.generators[{i}]");
                g.check(spec).map_err(|e| e.within(&path))?;
                if g.is_zero() {
                    return Err(Error::validation(path, "generator is zero"));
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        match self {
            KernelSpec::Trivial => "trivial".to_string(),
            KernelSpec::InversePairs => "inverse_pairs (g - g^-1)".to_string(),
            KernelSpec::ExplicitList(g) => format!("explicit ({} generators)", g.len()),
        }
    }
}

/// Generator lattice of an explicit kernel, in coordinates over the union of
/// generator supports taken in descending canonical order. Pivots therefore
/// land on the larger keys and reduced representatives favour the smaller
/// ones, as with [`KernelSpec::InversePairs`].
struct ExplicitLattice {
    basis: Vec<GroupElement>,
    hnf: Hnf,
}

impl ExplicitLattice {
    fn new(gens: &[RingElement]) -> Self {
        let basis: Vec<GroupElement> = gens
            .iter()
            .flat_map(|g| g.support().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .rev()
            .collect();
        let columns = gens
            .iter()
            .map(|g| basis.iter().map(|b| g.coefficient(b)).collect())
            .collect();
        let hnf = Hnf::new(basis.len(), columns);
        ExplicitLattice { basis, hnf }
    }

    fn reduce(&self, x: &RingElement) -> RingElement {
        let coords: Vec<BigInt> = self.basis.iter().map(|b| x.coefficient(b)).collect();
        let reduced = self.hnf.reduce(&coords);
        let mut out = RingElement::zero();
        for (g, c) in x.terms() {
            if self.basis.binary_search_by(|b| g.cmp(b)).is_err() {
                out.add_term(g.clone(), c.clone());
            }
        }
        for (g, c) in self.basis.iter().zip(reduced) {
            if !c.is_zero() {
                out.add_term(g.clone(), c);
            }
        }
        out
    }
}

/// Canonical representative of `x + D`.
pub fn reduce(x: &RingElement, kernel: &KernelSpec, spec: &GroupSpec) -> Result<RingElement> {
    x.check(spec)?;
    kernel.check(spec)?;
    Ok(reduce_unchecked(x, kernel, spec))
}

pub(crate) fn reduce_unchecked(
    x: &RingElement,
    kernel: &KernelSpec,
    spec: &GroupSpec,
) -> RingElement {
    match kernel {
        KernelSpec::Trivial => x.clone(),
        KernelSpec::InversePairs => {
            let mut out = RingElement::zero();
            for (w, c) in x.terms() {
                let inv = spec.inverse_unchecked(w);
                let target = if inv < *w { inv } else { w.clone() };
                out.add_term(target, c.clone());
            }
            out
        }
        KernelSpec::ExplicitList(gens) => ExplicitLattice::new(gens).reduce(x),
    }
}

pub fn equal_mod_kernel(
    x: &RingElement,
    y: &RingElement,
    kernel: &KernelSpec,
    spec: &GroupSpec,
) -> Result<bool> {
    x.check(spec).map_err(|e| e.within("lhs"))?;
    y.check(spec).map_err(|e| e.within("rhs"))?;
    kernel.check(spec)?;
    Ok(reduce_unchecked(&(x - y), kernel, spec).is_zero())
}
