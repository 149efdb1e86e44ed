//! Standard parabolic subgroups `W_J` and `(W_J, W_K)`-double cosets.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{WeylElement, WeylGroup};

/// A set of simple-reflection indices (0-based), kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct SimpleSubset {
    indices: Vec<usize>,
}

impl SimpleSubset {
    /// Validates `indices` against `rank`; duplicates are merged.
    pub fn new(indices: impl IntoIterator<Item = usize>, rank: usize) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        if let Some(&index) = indices.iter().find(|&&i| i >= rank) {
            return Err(Error::InvalidSubset { index, rank });
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(SimpleSubset { indices })
    }

    pub fn empty() -> Self {
        SimpleSubset::default()
    }

    pub fn full(rank: usize) -> Self {
        SimpleSubset { indices: (0..rank).collect() }
    }

    /// The subset whose bit `i` is set in `mask`.
    pub fn from_mask(mask: u64) -> Self {
        SimpleSubset { indices: (0..64).filter(|i| mask >> i & 1 == 1).collect() }
    }

    pub fn mask(&self) -> u64 {
        self.indices.iter().fold(0, |m, &i| m | 1 << i)
    }

    /// Parses comma-separated indices such as `"0,2"`; the empty string is
    /// the empty subset.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let indices = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad simple index {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(indices, rank)
    }

    /// All `2^rank` subsets, ordered by bitmask.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSubset> {
        assert!(rank < 64);
        (0..1u64 << rank).map(Self::from_mask)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `W_J`, by closure of the identity under left multiplication by `s_j`,
/// returned in enumeration order.
pub fn parabolic_elements(group: &WeylGroup, subset: &SimpleSubset) -> Vec<WeylElement> {
    let mut seen = vec![false; group.order()];
    let mut out = vec![group.identity()];
    seen[0] = true;
    let mut i = 0;
    while i < out.len() {
        let w = out[i];
        for s in subset.iter() {
            let sw = group.left_mul_simple(s, w);
            if !seen[sw.index()] {
                seen[sw.index()] = true;
                out.push(sw);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// One double coset `W_J w W_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Members in enumeration order.
    pub elements: Vec<WeylElement>,
    pub min_rep: WeylElement,
    pub max_rep: WeylElement,
}

impl DoubleCoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: WeylElement) -> bool {
        self.elements.binary_search(&w).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetDecomposition {
    pub left: SimpleSubset,
    pub right: SimpleSubset,
    /// Ordered by length of the minimal representative, then by its
    /// canonical word.
    pub cosets: Vec<DoubleCoset>,
}

impl DoubleCosetDecomposition {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing `w`.
    pub fn coset_of(&self, w: WeylElement) -> usize {
        self.cosets
            .iter()
            .position(|c| c.contains(w))
            .expect("cosets partition the group")
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as representative.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Partitions `W` into `(W_J, W_K)`-double cosets.
pub fn double_cosets(group: &WeylGroup, left: &SimpleSubset, right: &SimpleSubset) -> DoubleCosetDecomposition {
    let mut uf = UnionFind::new(group.order());
    for w in group.elements() {
        for s in left.iter() {
            uf.union(w.index() as u32, group.left_mul_simple(s, w).index() as u32);
        }
        for s in right.iter() {
            uf.union(w.index() as u32, group.right_mul_simple(w, s).index() as u32);
        }
    }
    let mut classes: Vec<Vec<WeylElement>> = Vec::new();
    let mut slot = vec![usize::MAX; group.order()];
    for w in group.elements() {
        let root = uf.find(w.index() as u32) as usize;
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[root]].push(w);
    }
    // Classes appear in order of their smallest index, which is the minimal
    // representative: shortest, and lexicographically first among equals.
    let cosets = classes
        .into_iter()
        .map(|elements| {
            let min_rep = elements[0];
            let max_rep = *elements
                .iter()
                .max_by_key(|&&w| group.length(w))
                .expect("cosets are nonempty");
            DoubleCoset { elements, min_rep, max_rep }
        })
        .collect();
    DoubleCosetDecomposition { left: left.clone(), right: right.clone(), cosets }
}

/// Unique shortest element of `W_J w W_K`, by descending through left
/// descents in `J` and right descents in `K`.
pub fn min_double_coset_rep(
    group: &WeylGroup,
    w: WeylElement,
    left: &SimpleSubset,
    right: &SimpleSubset,
) -> WeylElement {
    let mut x = w;
    'descend: loop {
        for s in left.iter() {
            if group.is_left_descent(s, x) {
                x = group.left_mul_simple(s, x);
                continue 'descend;
            }
        }
        for s in right.iter() {
            if group.is_right_descent(x, s) {
                x = group.right_mul_simple(x, s);
                continue 'descend;
            }
        }
        return x;
    }
}

/// Unique longest element of `W_J w W_K`.
pub fn max_double_coset_rep(
    group: &WeylGroup,
    w: WeylElement,
    left: &SimpleSubset,
    right: &SimpleSubset,
) -> WeylElement {
    let mut x = w;
    'ascend: loop {
        for s in left.iter() {
            if !group.is_left_descent(s, x) {
                x = group.left_mul_simple(s, x);
                continue 'ascend;
            }
        }
        for s in right.iter() {
            if !group.is_right_descent(x, s) {
                x = group.right_mul_simple(x, s);
                continue 'ascend;
            }
        }
        return x;
    }
}

/// Maximal-length representatives of all double cosets, in decomposition
/// order.
pub fn maximal_reps(group: &WeylGroup, left: &SimpleSubset, right: &SimpleSubset) -> Vec<WeylElement> {
    double_cosets(group, left, right).cosets.iter().map(|c| c.max_rep).collect()
}

/// `w` has no left descent in `J` and no right descent in `K`.
pub fn is_minimal_in_double_coset(
    group: &WeylGroup,
    w: WeylElement,
    left: &SimpleSubset,
    right: &SimpleSubset,
) -> bool {
    left.iter().all(|s| !group.is_left_descent(s, w)) && right.iter().all(|s| !group.is_right_descent(w, s))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn subset(indices: &[usize], rank: usize) -> SimpleSubset {
        SimpleSubset::new(indices.iter().copied(), rank).unwrap()
    }

    /// `W_J w W_K` by explicit products.
    fn coset_by_products(g: &WeylGroup, w: WeylElement, j: &SimpleSubset, k: &SimpleSubset) -> BTreeSet<WeylElement> {
        let wj = parabolic_elements(g, j);
        let wk = parabolic_elements(g, k);
        let mut out = BTreeSet::new();
        for &a in &wj {
            for &b in &wk {
                out.insert(g.multiply(g.multiply(a, w).unwrap(), b).unwrap());
            }
        }
        out
    }

    #[test]
    fn subset_parsing() {
        assert_eq!(SimpleSubset::parse("", 3).unwrap(), SimpleSubset::empty());
        assert_eq!(SimpleSubset::parse("2, 0,2", 3).unwrap().indices(), [0, 2]);
        assert_eq!(SimpleSubset::parse("3", 3), Err(Error::InvalidSubset { index: 3, rank: 3 }));
        assert!(matches!(SimpleSubset::parse("a", 3), Err(Error::Parse(_))));
        assert_eq!(SimpleSubset::all(2).count(), 4);
        assert_eq!(SimpleSubset::from_mask(0b101).to_string(), "{0,2}");
    }

    #[test]
    fn parabolic_subgroups() {
        let a2 = WeylGroup::from_type("A2").unwrap();
        assert_eq!(parabolic_elements(&a2, &SimpleSubset::empty()), vec![a2.identity()]);
        assert_eq!(parabolic_elements(&a2, &subset(&[0], 2)), vec![a2.identity(), a2.simple_reflection(0)]);
        let b2 = WeylGroup::from_type("B2").unwrap();
        assert_eq!(parabolic_elements(&b2, &SimpleSubset::full(2)).len(), 8);
    }

    #[test]
    fn a2_double_cosets() {
        let g = WeylGroup::from_type("A2").unwrap();
        let d = double_cosets(&g, &SimpleSubset::empty(), &SimpleSubset::empty());
        assert_eq!(d.len(), 6);
        assert!(d.cosets.iter().all(|c| c.len() == 1));

        let j = subset(&[0], 2);
        let k = subset(&[1], 2);
        let d = double_cosets(&g, &j, &k);
        let sizes: Vec<usize> = d.cosets.iter().map(DoubleCoset::len).collect();
        assert_eq!(sizes, [4, 2]);
        let maxes: Vec<String> = maximal_reps(&g, &j, &k).into_iter().map(|w| g.word_string(w)).collect();
        assert_eq!(maxes, ["s1s2", "s1s2s1"]);

        let full = SimpleSubset::full(2);
        let d = double_cosets(&g, &full, &full);
        assert_eq!(d.len(), 1);
        assert_eq!(d.cosets[0].max_rep, g.longest_element(&full));
    }

    #[test]
    fn representatives() {
        let g = WeylGroup::from_type("A2").unwrap();
        let (e, s1, s2) = (g.identity(), g.simple_reflection(0), g.simple_reflection(1));
        let j = subset(&[0], 2);
        let k = subset(&[1], 2);
        let none = SimpleSubset::empty();
        assert_eq!(min_double_coset_rep(&g, e, &j, &k), e);
        assert_eq!(min_double_coset_rep(&g, s1, &j, &none), e);
        assert_eq!(g.word_string(max_double_coset_rep(&g, e, &j, &k)), "s1s2");
        assert!(is_minimal_in_double_coset(&g, e, &j, &k));
        assert!(!is_minimal_in_double_coset(&g, s1, &j, &none));
        assert!(is_minimal_in_double_coset(&g, s2, &j, &none));
    }

    #[test]
    fn representatives_match_enumeration() {
        for name in ["A3", "B2", "G2"] {
            let g = WeylGroup::from_type(name).unwrap();
            let rank = g.rank();
            for j in SimpleSubset::all(rank) {
                for k in SimpleSubset::all(rank) {
                    for w in g.elements() {
                        let coset = coset_by_products(&g, w, &j, &k);
                        let min = *coset.iter().min_by_key(|&&x| g.length(x)).unwrap();
                        let max = *coset.iter().max_by_key(|&&x| g.length(x)).unwrap();
                        assert_eq!(min_double_coset_rep(&g, w, &j, &k), min);
                        assert_eq!(max_double_coset_rep(&g, w, &j, &k), max);
                        assert_eq!(is_minimal_in_double_coset(&g, w, &j, &k), w == min);
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_matches_enumeration_and_index_formula() {
        let g = WeylGroup::from_type("B3").unwrap();
        for j in SimpleSubset::all(3) {
            for k in SimpleSubset::all(3) {
                let d = double_cosets(&g, &j, &k);
                assert_eq!(d.cosets.iter().map(DoubleCoset::len).sum::<usize>(), g.order());
                let wj = parabolic_elements(&g, &j);
                let wk: BTreeSet<_> = parabolic_elements(&g, &k).into_iter().collect();
                for c in &d.cosets {
                    let expected: Vec<_> = coset_by_products(&g, c.min_rep, &j, &k).into_iter().collect();
                    assert_eq!(c.elements, expected);
                    let m = c.min_rep;
                    let minv = g.invert(m);
                    let meet = wj
                        .iter()
                        .filter(|&&a| wk.contains(&g.multiply(g.multiply(minv, a).unwrap(), m).unwrap()))
                        .count();
                    assert_eq!(c.len() * meet, wj.len() * wk.len());
                }
                for pair in d.cosets.windows(2) {
                    let (a, b) = (pair[0].min_rep, pair[1].min_rep);
                    assert!((g.length(a), g.word(a)) < (g.length(b), g.word(b)));
                }
            }
        }
    }
}
