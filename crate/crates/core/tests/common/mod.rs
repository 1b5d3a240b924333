//! Random instance generators and an independent lattice-membership oracle
//! shared by the integration suites.

#![allow(dead_code)]

use daxcalc::{
    DoublePoint, DoublePointList, Factor, GroupElement, GroupSpec, KernelSpec, ManifoldModel,
    RingElement, SrData, SrDisc, Syllable,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Gen {
    pub rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sign(&mut self) -> i8 {
        if self.rng.gen_bool(0.5) {
            1
        } else {
            -1
        }
    }

    /// 1 to 3 factors, a mix of ℤ and ℤ/n with n in 2..=6.
    pub fn group(&mut self) -> GroupSpec {
        let k = self.rng.gen_range(1..=3);
        let factors = (0..k)
            .map(|i| {
                let name = ["t", "a", "b"][i];
                if self.rng.gen_bool(0.4) {
                    Factor::infinite(name)
                } else {
                    Factor::finite(name, self.rng.gen_range(2..=6))
                }
            })
            .collect();
        GroupSpec::new(factors).unwrap()
    }

    /// A reduced word of at most `max_syllables` syllables.
    pub fn word(&mut self, spec: &GroupSpec, max_syllables: usize) -> GroupElement {
        loop {
            let len = self.rng.gen_range(0..=max_syllables);
            let raw: Vec<Syllable> = (0..len)
                .map(|_| {
                    Syllable::new(
                        self.rng.gen_range(0..spec.factors.len()),
                        self.rng.gen_range(-3i64..=3),
                    )
                })
                .collect();
            let w = spec.word(raw).unwrap();
            if w.len() <= max_syllables {
                return w;
            }
        }
    }

    pub fn nontrivial_word(&mut self, spec: &GroupSpec, max_syllables: usize) -> GroupElement {
        loop {
            let w = self.word(spec, max_syllables);
            if !w.is_identity() {
                return w;
            }
        }
    }

    /// A conjugate `w x^{n/2} w⁻¹` of an order-2 element, if the group has
    /// an even-order factor. At most three syllables.
    pub fn involution(&mut self, spec: &GroupSpec) -> Option<GroupElement> {
        let even: Vec<(usize, u64)> = spec
            .factors
            .iter()
            .enumerate()
            .filter_map(|(i, f)| f.order().filter(|n| n % 2 == 0).map(|n| (i, n)))
            .collect();
        let &(idx, n) = even.choose(&mut self.rng)?;
        let half = spec.word([Syllable::new(idx, (n / 2) as i64)]).unwrap();
        let w = self.word(spec, 1);
        let conj = spec
            .multiply(
                &spec.multiply(&w, &half).unwrap(),
                &spec.inverse(&w).unwrap(),
            )
            .unwrap();
        assert!(spec.is_two_torsion(&conj).unwrap());
        Some(conj)
    }

    pub fn ring(&mut self, spec: &GroupSpec, terms: usize, max_syllables: usize) -> RingElement {
        (0..terms)
            .map(|_| {
                let g = self.nontrivial_word(spec, max_syllables);
                RingElement::monomial(g, self.rng.gen_range(-3i64..=3)).unwrap()
            })
            .sum()
    }

    pub fn kernel(&mut self, spec: &GroupSpec) -> KernelSpec {
        match self.rng.gen_range(0..3) {
            0 => KernelSpec::Trivial,
            1 => KernelSpec::InversePairs,
            _ => {
                let k = self.rng.gen_range(1..=3);
                let gens: Vec<RingElement> = (0..k)
                    .map(|_| self.ring(spec, 3, 2))
                    .filter(|g| !g.is_zero())
                    .collect();
                KernelSpec::ExplicitList(gens)
            }
        }
    }

    pub fn manifold(&mut self) -> ManifoldModel {
        let g = self.group();
        let k = self.kernel(&g);
        ManifoldModel::new(g, k, "random").unwrap()
    }

    /// Valid self-referential data with words of at most 4 syllables.
    pub fn data(&mut self, m: &ManifoldModel) -> SrData {
        let mut d = SrData::empty();
        for _ in 0..self.rng.gen_range(0..=4) {
            if let Some(l) = self.involution(&m.group) {
                d.double_tubes.push(l);
            }
        }
        // Repeat some tubes so the pair-merge move fires.
        if !d.double_tubes.is_empty() && self.rng.gen_bool(0.5) {
            let l = d.double_tubes[0].clone();
            d.double_tubes.push(l);
        }
        for _ in 0..self.rng.gen_range(0..=5) {
            let sign = self.sign();
            d.sr_discs
                .push(SrDisc::new(sign, self.nontrivial_word(&m.group, 4)));
        }
        // And some opposite pairs for the cancellation move.
        if !d.sr_discs.is_empty() && self.rng.gen_bool(0.5) {
            let s = d.sr_discs[0].clone();
            d.sr_discs.push(SrDisc::new(-s.sign, s.element));
        }
        d.double_tubes.shuffle(&mut self.rng);
        d.sr_discs.shuffle(&mut self.rng);
        d
    }

    /// Random double points, identity loops included.
    pub fn points(&mut self, spec: &GroupSpec) -> DoublePointList {
        let n = self.rng.gen_range(0..=8);
        DoublePointList::new(
            (0..n)
                .map(|_| {
                    let sign = self.sign();
                    let g = if self.rng.gen_bool(0.25) {
                        GroupElement::identity()
                    } else {
                        self.word(spec, 3)
                    };
                    DoublePoint::new(sign, g)
                })
                .collect(),
        )
    }
}

// ---------------------------------------------------------------------------
// Lattice membership oracle, exact and independent of Hermite normal forms.
//
// Given integer generators g_1..g_k in ℤ^m, pick a maximal independent subset
// I with a nonsingular r×r minor of determinant D. For every dependent
// generator j, D·g_j lies in the ℤ-span of I (Cramer), so any integer
// combination can be rewritten with coefficients of dependent generators in
// [0, D). Enumerate those, then solve for the independent coefficients by
// Cramer's rule and check integrality.
// ---------------------------------------------------------------------------

fn det(mat: &[Vec<i128>]) -> i128 {
    let n = mat.len();
    match n {
        0 => 1,
        1 => mat[0][0],
        _ => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i128>> = mat[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * mat[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|b| b.count_ones() as usize == r)
        .map(|b| (0..n).filter(|i| b & (1 << i) != 0).collect())
        .collect()
}

/// Is `target` an integer combination of `gens`? Vectors must have equal length.
pub fn in_lattice(gens: &[Vec<i128>], target: &[i128]) -> bool {
    let m = target.len();
    let k = gens.len();
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    // Largest nonsingular minor.
    for r in (1..=k.min(m)).rev() {
        for cols in subsets(k, r) {
            for rows in subsets(m, r) {
                let minor: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| gens[j][i]).collect())
                    .collect();
                let d = det(&minor);
                if d == 0 {
                    continue;
                }
                let dependent: Vec<usize> = (0..k).filter(|j| !cols.contains(j)).collect();
                return enumerate_dependent(gens, target, &cols, &rows, &dependent, d.abs());
            }
        }
    }
    false
}

fn enumerate_dependent(
    gens: &[Vec<i128>],
    target: &[i128],
    cols: &[usize],
    rows: &[usize],
    dependent: &[usize],
    bound: i128,
) -> bool {
    let total = (bound as u128).pow(dependent.len() as u32);
    for code in 0..total {
        let mut v = target.to_vec();
        let mut c = code;
        for &j in dependent {
            let b = (c % bound as u128) as i128;
            c /= bound as u128;
            for (vi, gi) in v.iter_mut().zip(&gens[j]) {
                *vi -= b * gi;
            }
        }
        if solves_integrally(gens, &v, cols, rows) {
            return true;
        }
    }
    false
}

fn solves_integrally(gens: &[Vec<i128>], v: &[i128], cols: &[usize], rows: &[usize]) -> bool {
    let minor: Vec<Vec<i128>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| gens[j][i]).collect())
        .collect();
    let d = det(&minor);
    let mut coeffs = Vec::with_capacity(cols.len());
    for c in 0..cols.len() {
        let mut replaced = minor.clone();
        for (ri, &i) in rows.iter().enumerate() {
            replaced[ri][c] = v[i];
        }
        let num = det(&replaced);
        if num % d != 0 {
            return false;
        }
        coeffs.push(num / d);
    }
    // Check every row, not just the minor's.
    (0..v.len()).all(|i| {
        cols.iter()
            .zip(&coeffs)
            .map(|(&j, a)| a * gens[j][i])
            .sum::<i128>()
            == v[i]
    })
}

/// Coordinates of ring elements over a shared basis, for the oracle.
pub fn coordinates(basis: &[GroupElement], x: &RingElement) -> Vec<i128> {
    basis.iter().map(|b| big(&x.coefficient(b))).collect()
}

pub fn big(x: &BigInt) -> i128 {
    x.to_i128().expect("small coefficient")
}

/// Basis covering all supports.
pub fn joint_basis<'a>(xs: impl IntoIterator<Item = &'a RingElement>) -> Vec<GroupElement> {
    let mut basis: Vec<GroupElement> = xs.into_iter().flat_map(|x| x.support().cloned()).collect();
    basis.sort();
    basis.dedup();
    basis
}
