use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use super::roots::RootSystem;
use crate::error::{Error, Result};
use crate::parabolic::SimpleSubset;

/// Default cap on `|W|`; large enough for E6.
pub const DEFAULT_ORDER_CAP: usize = 51_840;

/// Groups up to this order keep a full multiplication table.
const CAYLEY_TABLE_LIMIT: usize = 1_200;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(u64);

/// Handle to an element of an enumerated [`WeylGroup`].
///
/// Indices follow the enumeration order: by length, then lexicographically
/// by canonical word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    group: GroupId,
    index: u32,
}

impl WeylElement {
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn group_id(self) -> GroupId {
        self.group
    }
}

/// A finite Weyl group, fully enumerated.
///
/// Each element is stored as the signed permutation it induces on the
/// positive roots, together with its lexicographically minimal reduced word.
pub struct WeylGroup {
    id: GroupId,
    roots: RootSystem,
    /// `perms[w][k]` is the index of `w(beta_k)` among all `2n` roots.
    perms: Vec<Vec<u32>>,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    /// `left[s][w]` is `s * w`; `right[s][w]` is `w * s`.
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    by_perm: HashMap<Vec<u32>, u32>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.roots.datum().type_name())
            .field("rank", &self.rank())
            .field("order", &self.order())
            .finish()
    }
}

/// Enumerates the Weyl group of `roots` with the default order cap.
pub fn enumerate_weyl(roots: RootSystem) -> Result<WeylGroup> {
    WeylGroup::enumerate(roots, DEFAULT_ORDER_CAP)
}

impl WeylGroup {
    /// Breadth-first closure of the identity under left multiplication by
    /// simple reflections.
    pub fn enumerate(roots: RootSystem, order_cap: usize) -> Result<Self> {
        let n = roots.num_positive();
        let rank = roots.rank();
        let identity: Vec<u32> = (0..n as u32).collect();

        let mut perms = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut by_perm: HashMap<Vec<u32>, u32> = HashMap::from([(identity, 0)]);
        let mut level_start = 0;
        let mut length = 0;
        let mut lengths = vec![0];

        while level_start < perms.len() {
            let level_end = perms.len();
            // New element -> (smallest left descent, predecessor).
            let mut next: HashMap<Vec<u32>, (usize, u32)> = HashMap::new();
            for w in level_start..level_end {
                for s in 0..rank {
                    let image: Vec<u32> = perms[w].iter().map(|&k| roots.reflect_index(s, k)).collect();
                    if by_perm.contains_key(&image) {
                        continue;
                    }
                    let entry = next.entry(image).or_insert((s, w as u32));
                    if s < entry.0 {
                        *entry = (s, w as u32);
                    }
                }
            }
            if perms.len() + next.len() > order_cap {
                return Err(Error::OrderCapExceeded { cap: order_cap });
            }
            let mut level: Vec<(Vec<usize>, Vec<u32>)> = next
                .into_iter()
                .map(|(perm, (s, pred))| {
                    let mut word = Vec::with_capacity(length + 1);
                    word.push(s);
                    word.extend_from_slice(&words[pred as usize]);
                    (word, perm)
                })
                .collect();
            level.sort_unstable();
            length += 1;
            for (word, perm) in level {
                by_perm.insert(perm.clone(), perms.len() as u32);
                perms.push(perm);
                words.push(word);
                lengths.push(length);
            }
            level_start = level_end;
        }

        let order = perms.len();
        let left: Vec<Vec<u32>> = (0..rank)
            .map(|s| {
                (0..order)
                    .map(|w| {
                        let image: Vec<u32> = perms[w].iter().map(|&k| roots.reflect_index(s, k)).collect();
                        by_perm[&image]
                    })
                    .collect()
            })
            .collect();
        let apply_word = |word: &[usize], mut w: u32| {
            for &s in word.iter().rev() {
                w = left[s][w as usize];
            }
            w
        };
        let inverse: Vec<u32> = words
            .iter()
            .map(|word| {
                let rev: Vec<usize> = word.iter().rev().copied().collect();
                apply_word(&rev, 0)
            })
            .collect();
        let right: Vec<Vec<u32>> = (0..rank)
            .map(|s| (0..order).map(|w| inverse[left[s][inverse[w] as usize] as usize]).collect())
            .collect();
        let table = (order <= CAYLEY_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(order * order);
            for u in 0..order {
                for w in 0..order {
                    t.push(apply_word(&words[u], w as u32));
                }
            }
            t
        });

        Ok(WeylGroup {
            id: GroupId(NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed)),
            roots,
            perms,
            words,
            lengths,
            left,
            right,
            inverse,
            by_perm,
            table,
        })
    }

    /// Convenience: `RootSystem::from_type` followed by enumeration.
    pub fn from_type(name: &str) -> Result<Self> {
        enumerate_weyl(RootSystem::from_type(name)?)
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Number of positive roots; also the length of the longest element.
    pub fn num_positive_roots(&self) -> usize {
        self.roots.num_positive()
    }

    fn handle(&self, index: u32) -> WeylElement {
        WeylElement { group: self.id, index }
    }

    #[track_caller]
    fn idx(&self, w: WeylElement) -> usize {
        assert_eq!(w.group, self.id, "element does not belong to this Weyl group");
        w.index as usize
    }

    pub fn contains(&self, w: WeylElement) -> bool {
        w.group == self.id
    }

    pub fn element(&self, index: usize) -> WeylElement {
        assert!(index < self.order());
        self.handle(index as u32)
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(|i| self.handle(i))
    }

    pub fn identity(&self) -> WeylElement {
        self.handle(0)
    }

    pub fn simple_reflection(&self, s: usize) -> WeylElement {
        self.handle(self.left[s][0])
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.lengths[self.idx(w)]
    }

    /// `(-1)^length(w)`.
    pub fn sign(&self, w: WeylElement) -> i64 {
        if self.length(w).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Lexicographically minimal reduced word, as 0-based simple indices.
    pub fn word(&self, w: WeylElement) -> &[usize] {
        &self.words[self.idx(w)]
    }

    /// Images of the positive roots under `w`, as indices into all `2n`
    /// roots (see [`RootSystem`]).
    pub fn root_perm(&self, w: WeylElement) -> &[u32] {
        &self.perms[self.idx(w)]
    }

    pub fn from_root_perm(&self, perm: &[u32]) -> Option<WeylElement> {
        self.by_perm.get(perm).map(|&i| self.handle(i))
    }

    /// Product of simple reflections; the word need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = 0u32;
        for &s in word.iter().rev() {
            if s >= self.rank() {
                return Err(Error::InvalidSubset { index: s, rank: self.rank() });
            }
            w = self.left[s][w as usize];
        }
        Ok(self.handle(w))
    }

    /// `s * w`.
    pub fn left_mul_simple(&self, s: usize, w: WeylElement) -> WeylElement {
        self.handle(self.left[s][self.idx(w)])
    }

    /// `w * s`.
    pub fn right_mul_simple(&self, w: WeylElement, s: usize) -> WeylElement {
        self.handle(self.right[s][self.idx(w)])
    }

    pub fn multiply(&self, u: WeylElement, w: WeylElement) -> Result<WeylElement> {
        if u.group != self.id || w.group != self.id {
            return Err(Error::MixedGroups);
        }
        Ok(self.mul(u, w))
    }

    /// Unchecked-group product used on hot paths; panics on foreign elements.
    pub(crate) fn mul(&self, u: WeylElement, w: WeylElement) -> WeylElement {
        let (ui, wi) = (self.idx(u), self.idx(w));
        if let Some(table) = &self.table {
            return self.handle(table[ui * self.order() + wi]);
        }
        let mut x = wi as u32;
        for &s in self.words[ui].iter().rev() {
            x = self.left[s][x as usize];
        }
        self.handle(x)
    }

    pub fn invert(&self, w: WeylElement) -> WeylElement {
        self.handle(self.inverse[self.idx(w)])
    }

    /// `length(s * w) < length(w)`.
    pub fn is_left_descent(&self, s: usize, w: WeylElement) -> bool {
        let i = self.idx(w);
        self.lengths[self.left[s][i] as usize] < self.lengths[i]
    }

    /// `length(w * s) < length(w)`.
    pub fn is_right_descent(&self, w: WeylElement, s: usize) -> bool {
        let i = self.idx(w);
        self.lengths[self.right[s][i] as usize] < self.lengths[i]
    }

    /// Bruhat order via the subword property, scanning the canonical word of
    /// `w` once.
    pub fn bruhat_leq(&self, u: WeylElement, w: WeylElement) -> bool {
        let (mut x, wi) = (self.idx(u) as u32, self.idx(w));
        if self.lengths[x as usize] > self.lengths[wi] {
            return false;
        }
        for &s in &self.words[wi] {
            let sx = self.left[s][x as usize];
            if self.lengths[sx as usize] < self.lengths[x as usize] {
                x = sx;
            }
        }
        x == 0
    }

    /// The longest element of the parabolic subgroup `W_J`.
    pub fn longest_element(&self, subset: &SimpleSubset) -> WeylElement {
        let mut w = self.identity();
        'grow: loop {
            for s in subset.iter() {
                if !self.is_left_descent(s, w) {
                    w = self.left_mul_simple(s, w);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    /// Renders a word as `s1s2...` with 1-based indices; the identity is
    /// the empty string.
    pub fn word_string(&self, w: WeylElement) -> String {
        self.word(w).iter().map(|s| format!("s{}", s + 1)).collect()
    }

    /// Inverse of [`word_string`](Self::word_string). Also accepts `e`.
    pub fn parse_word(&self, text: &str) -> Result<WeylElement> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(self.identity());
        }
        let bad = || Error::Parse(format!("bad word {text:?}"));
        let body = text.strip_prefix('s').ok_or_else(bad)?;
        let mut letters = Vec::new();
        for part in body.split('s') {
            let k: usize = part.parse().map_err(|_| bad())?;
            if k == 0 {
                return Err(bad());
            }
            letters.push(k - 1);
        }
        self.from_word(&letters)
    }
}
