//! Integer lattices in ℤ^m given by spanning vectors, put into column Hermite
//! normal form so that cosets have unique reduced representatives.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// One basis column of the echelon form. Entries above `pivot_row` are zero
/// and the pivot entry is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotColumn {
    pub pivot_row: usize,
    pub entries: Vec<BigInt>,
}

impl PivotColumn {
    pub fn pivot(&self) -> &BigInt {
        &self.entries[self.pivot_row]
    }
}

/// Column Hermite normal form of the lattice spanned by `columns` (each of
/// length `dim`). Pivot rows strictly increase, and in each pivot row the
/// entries of earlier columns lie in `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub dim: usize,
    pub columns: Vec<PivotColumn>,
}

fn axpy(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

impl Hnf {
    pub fn new(dim: usize, columns: Vec<Vec<BigInt>>) -> Self {
        let mut pending: Vec<Vec<BigInt>> = columns
            .into_iter()
            .inspect(|c| assert_eq!(c.len(), dim, "column length mismatch"))
            .filter(|c| c.iter().any(|x| !x.is_zero()))
            .collect();
        let mut basis: Vec<PivotColumn> = Vec::new();

        for row in 0..dim {
            // Euclid on the entries of this row until one column remains.
            loop {
                let nonzero: Vec<usize> = (0..pending.len())
                    .filter(|&i| !pending[i][row].is_zero())
                    .collect();
                if nonzero.len() <= 1 {
                    if let Some(&i) = nonzero.first() {
                        let mut col = pending.swap_remove(i);
                        if col[row].is_negative() {
                            col.iter_mut().for_each(|x| *x = -std::mem::take(x));
                        }
                        basis.push(PivotColumn {
                            pivot_row: row,
                            entries: col,
                        });
                    }
                    break;
                }
                let &min = nonzero
                    .iter()
                    .min_by(|&&i, &&j| pending[i][row].abs().cmp(&pending[j][row].abs()))
                    .expect("nonempty");
                let src = pending[min].clone();
                for &i in &nonzero {
                    if i != min {
                        let q = pending[i][row].div_floor(&src[row]);
                        axpy(&mut pending[i], &q, &src);
                    }
                }
                pending.retain(|c| c.iter().any(|x| !x.is_zero()));
            }
        }

        // Reduce entries of earlier columns in each later pivot row.
        for j in 0..basis.len() {
            let (head, tail) = basis.split_at_mut(j);
            let pj = &tail[0];
            for earlier in head.iter_mut() {
                let q = earlier.entries[pj.pivot_row].div_floor(pj.pivot());
                axpy(&mut earlier.entries, &q, &pj.entries);
            }
        }

        Hnf {
            dim,
            columns: basis,
        }
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    /// The unique representative of `v + L` whose pivot-row coordinates lie
    /// in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        let mut out = v.to_vec();
        for col in &self.columns {
            let q = out[col.pivot_row].div_floor(col.pivot());
            axpy(&mut out, &q, &col.entries);
        }
        out
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}
