//! Brute-force oracles. These only use group multiplication, inversion and
//! lengths, never the library's Bruhat, descent, or coset routines.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use steinberg_core::parabolic::SimpleSubset;
use steinberg_core::{WeylElement, WeylGroup};

pub const LISTED_TYPES: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"];

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Classical order formulas.
pub fn classical_order(name: &str) -> usize {
    let (family, rank) = name.split_at(1);
    let n: usize = rank.parse().unwrap();
    match family {
        "A" => factorial(n + 1),
        "B" | "C" => (1 << n) * factorial(n),
        "D" => (1 << (n - 1)) * factorial(n),
        "G" => 12,
        "F" => 1152,
        "E" => match n {
            6 => 51_840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!(),
        },
        _ => unreachable!(),
    }
}

pub fn mul(g: &WeylGroup, u: WeylElement, w: WeylElement) -> WeylElement {
    g.multiply(u, w).unwrap()
}

/// `W_J` by closure under products with the generators.
pub fn subgroup(g: &WeylGroup, j: &SimpleSubset) -> Vec<WeylElement> {
    let gens: Vec<WeylElement> = j.iter().map(|s| g.simple_reflection(s)).collect();
    let mut seen: BTreeSet<WeylElement> = BTreeSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in &gens {
            let y = mul(g, x, s);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Double cosets `W_J w W_K` by explicit products, each sorted.
pub fn double_cosets_by_products(g: &WeylGroup, j: &SimpleSubset, k: &SimpleSubset) -> Vec<Vec<WeylElement>> {
    let wj = subgroup(g, j);
    let wk = subgroup(g, k);
    let mut assigned = vec![false; g.order()];
    let mut out = Vec::new();
    for w in g.elements() {
        if assigned[w.index()] {
            continue;
        }
        let mut coset = BTreeSet::new();
        for &a in &wj {
            let aw = mul(g, a, w);
            for &b in &wk {
                coset.insert(mul(g, aw, b));
            }
        }
        for x in &coset {
            assigned[x.index()] = true;
        }
        out.push(coset.into_iter().collect());
    }
    out
}

/// All reflections `w s w^-1`.
pub fn reflections(g: &WeylGroup) -> Vec<WeylElement> {
    let mut out = BTreeSet::new();
    for w in g.elements() {
        for s in 0..g.rank() {
            out.insert(mul(g, mul(g, w, g.simple_reflection(s)), g.invert(w)));
        }
    }
    out.into_iter().collect()
}

/// `below[w]` = `{u : u <= w}` via chains `u -> t u` with increasing length.
pub fn bruhat_by_reflection_chains(g: &WeylGroup) -> Vec<HashSet<WeylElement>> {
    let ts = reflections(g);
    let mut above: Vec<HashSet<WeylElement>> = vec![HashSet::new(); g.order()];
    // Process from longest to shortest so `above` of longer elements is final.
    let mut order: Vec<WeylElement> = g.elements().collect();
    order.sort_by_key(|&w| std::cmp::Reverse(g.length(w)));
    for &u in &order {
        let mut set = HashSet::from([u]);
        for &t in &ts {
            let tu = mul(g, t, u);
            if g.length(tu) > g.length(u) {
                set.extend(above[tu.index()].iter().copied());
            }
        }
        above[u.index()] = set;
    }
    let mut below: Vec<HashSet<WeylElement>> = vec![HashSet::new(); g.order()];
    for u in g.elements() {
        for &w in &above[u.index()] {
            below[w.index()].insert(u);
        }
    }
    below
}

/// Every reduced word of `w`, built by peeling off left descents found by
/// length comparison.
pub fn reduced_words(g: &WeylGroup, w: WeylElement) -> Vec<Vec<usize>> {
    if g.length(w) == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in 0..g.rank() {
        let sw = mul(g, g.simple_reflection(s), w);
        if g.length(sw) < g.length(w) {
            for mut rest in reduced_words(g, sw) {
                rest.insert(0, s);
                out.push(rest);
            }
        }
    }
    out
}

/// `u <= w` iff some subword of some reduced word of `w` is a reduced word
/// of `u`.
pub fn bruhat_by_subwords(g: &WeylGroup, u: WeylElement, w: WeylElement) -> bool {
    let target = g.length(u);
    reduced_words(g, w).iter().any(|word| {
        (0u64..1 << word.len()).any(|mask| {
            if mask.count_ones() as usize != target {
                return false;
            }
            let letters: Vec<usize> =
                word.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
            g.from_word(&letters).unwrap() == u
        })
    })
}
