//! Sparse exact row reduction over the rationals.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type SparseVec = BTreeMap<usize, BigRational>;

/// Row echelon form built one row at a time.
///
/// Each stored row is normalized so its leading (lowest) column holds 1,
/// and no two rows share a leading column. Elimination always targets the
/// lowest column first.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `v` against the stored rows; keeps it and returns `true` if
    /// it was independent of them.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.retain(|_, c| !c.is_zero());
        let mut floor = 0;
        loop {
            let Some((&col, lead)) = v.range(floor..).next() else {
                return false;
            };
            match self.rows.get(&col) {
                Some(row) => {
                    let factor = lead.clone();
                    for (&j, a) in row {
                        let entry = v.entry(j).or_insert_with(BigRational::zero);
                        *entry -= &factor * a;
                        if entry.is_zero() {
                            v.remove(&j);
                        }
                    }
                    floor = col + 1;
                }
                None => {
                    let inv = BigRational::one() / lead;
                    for c in v.values_mut() {
                        *c *= &inv;
                    }
                    self.rows.insert(col, v);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Basis of `{x : row . x = 0 for every stored row}` in dimension
    /// `ncols`, one vector per free column in increasing order. Each vector
    /// has a 1 at its free column and 0 at the other free columns.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec> {
        let free: Vec<usize> = (0..ncols).filter(|c| !self.rows.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = SparseVec::new();
                x.insert(f, BigRational::one());
                for (&col, row) in self.rows.iter().rev() {
                    let mut acc = BigRational::zero();
                    for (&j, a) in row.range(col + 1..) {
                        if let Some(xj) = x.get(&j) {
                            acc -= a * xj;
                        }
                    }
                    if !acc.is_zero() {
                        x.insert(col, acc);
                    }
                }
                x
            })
            .collect()
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut ech = Echelon::new();
    rows.into_iter().for_each(|r| {
        ech.insert(r);
    });
    ech.rank()
}
