use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};

use super::cartan::CartanDatum;
use crate::error::{Error, Result};

/// A root written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        debug_assert!(
            coords.iter().all(|&c| c >= 0) || coords.iter().all(|&c| c <= 0),
            "roots are never mixed-sign"
        );
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn negated(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

fn reflect(matrix: &[Vec<i64>], i: usize, coords: &[i64]) -> Vec<i64> {
    let pairing: i64 = coords.iter().enumerate().map(|(j, &c)| matrix[i][j] * c).sum();
    let mut out = coords.to_vec();
    out[i] -= pairing;
    out
}

fn checked_reflect(matrix: &[Vec<i64>], i: usize, coords: &[i64]) -> Option<Vec<i64>> {
    let mut pairing: i64 = 0;
    for (j, &c) in coords.iter().enumerate() {
        pairing = pairing.checked_add(matrix[i][j].checked_mul(c)?)?;
    }
    let mut out = coords.to_vec();
    out[i] = out[i].checked_sub(pairing)?;
    Some(out)
}

/// Positive roots by closure of the simple roots under simple reflections,
/// ordered by height and then by descending coordinates (so `alpha_1` comes
/// before `alpha_2`).
///
/// Fails with [`Error::NotFiniteType`] once more than `bound` roots appear.
pub(crate) fn root_closure(matrix: &[Vec<i64>], bound: usize) -> Result<Vec<Root>> {
    let rank = matrix.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    seen.extend(queue.iter().cloned());
    while let Some(beta) = queue.pop() {
        for i in 0..rank {
            // Coordinates of infinite-type systems can outgrow i64 before
            // `bound` roots are seen.
            let image = checked_reflect(matrix, i, &beta).ok_or(Error::NotFiniteType { bound })?;
            // s_i permutes the positive roots other than alpha_i.
            if image.iter().all(|&c| c >= 0) && !seen.contains(&image) {
                if seen.len() >= bound {
                    return Err(Error::NotFiniteType { bound });
                }
                seen.insert(image.clone());
                queue.push(image);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().map(Root::new).collect();
    roots.sort_by(|a, b| {
        (a.height(), Reverse(&a.coords)).cmp(&(b.height(), Reverse(&b.coords)))
    });
    Ok(roots)
}

/// A finite root system together with the action of the simple reflections
/// on all roots.
///
/// Roots are indexed so that `0..n` are the positive roots in
/// [`positive_roots`] order and `n + i` is the negative of root `i`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    positive: Vec<Root>,
    simple_action: Vec<Vec<u32>>,
}

impl RootSystem {
    pub fn new(datum: CartanDatum) -> Self {
        let positive = positive_roots(&datum);
        let n = positive.len();
        let index: HashMap<&[i64], usize> =
            positive.iter().enumerate().map(|(k, r)| (r.coords(), k)).collect();
        let lookup = |coords: &[i64]| -> u32 {
            if let Some(&k) = index.get(coords) {
                return k as u32;
            }
            let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
            (index[neg.as_slice()] + n) as u32
        };
        let simple_action = (0..datum.rank())
            .map(|i| {
                (0..2 * n)
                    .map(|k| {
                        let (root, sign) = if k < n { (&positive[k], 1) } else { (&positive[k - n], -1) };
                        let coords: Vec<i64> = root.coords().iter().map(|c| sign * c).collect();
                        lookup(&reflect(datum.matrix(), i, &coords))
                    })
                    .collect()
            })
            .collect();
        RootSystem { datum, positive, simple_action }
    }

    pub fn from_type(name: &str) -> Result<Self> {
        CartanDatum::from_type(name).map(Self::new)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Index of the root `s_i(root_k)`, over all `2n` roots.
    pub fn reflect_index(&self, i: usize, k: u32) -> u32 {
        self.simple_action[i][k as usize]
    }

    /// Root `k` over all `2n` roots.
    pub fn root(&self, k: u32) -> Root {
        let n = self.num_positive();
        let k = k as usize;
        if k < n {
            self.positive[k].clone()
        } else {
            self.positive[k - n].negated()
        }
    }

    /// The index of `alpha_i` among the positive roots.
    pub fn simple_root_index(&self, i: usize) -> u32 {
        self.positive
            .iter()
            .position(|r| r.height() == 1 && r.coords()[i] == 1)
            .expect("simple roots are positive roots") as u32
    }

    /// The positive roots whose support lies in `subset` (a bitmask).
    pub fn count_supported_on(&self, mask: u64) -> usize {
        self.positive
            .iter()
            .filter(|r| r.coords().iter().enumerate().all(|(i, &c)| c == 0 || mask >> i & 1 == 1))
            .count()
    }
}

/// Positive roots of a validated datum.
pub fn positive_roots(datum: &CartanDatum) -> Vec<Root> {
    // Validation already ran the closure under the same bound.
    root_closure(datum.matrix(), usize::MAX).expect("validated data are of finite type")
}
