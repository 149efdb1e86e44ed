//! The rational group algebra `QW` as a `W x W`-bimodule.
//!
//! `W x W` acts by `(w, w') . v = w' v w^-1`, so for simple subsets `J` and
//! `K` the `(W_J x W_K)`-invariants are `e_K QW e_J` and the anti-invariants
//! are `eps_K QW eps_J`.

mod element;
pub mod linalg;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

pub use element::AlgebraElement;
use linalg::{Echelon, SparseVec};

use crate::error::{Error, Result};
use crate::parabolic::{double_cosets, parabolic_elements, SimpleSubset};
use crate::rootsys::{WeylElement, WeylGroup};

/// An ordered list of linearly independent algebra elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub vectors: Vec<AlgebraElement>,
}

impl SubspaceBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// `QW` over an enumerated group.
#[derive(Debug, Clone, Copy)]
pub struct GroupAlgebra<'g> {
    group: &'g WeylGroup,
}

impl<'g> GroupAlgebra<'g> {
    pub fn new(group: &'g WeylGroup) -> Self {
        GroupAlgebra { group }
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.group
    }

    fn check(&self, a: &AlgebraElement) -> Result<()> {
        if a.group_id() == self.group.id() {
            Ok(())
        } else {
            Err(Error::MixedGroups)
        }
    }

    #[track_caller]
    fn assert_member(&self, a: &AlgebraElement) {
        assert_eq!(a.group_id(), self.group.id(), "algebra element belongs to a different Weyl group");
    }

    fn elem(&self, index: usize) -> WeylElement {
        self.group.element(index)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.group)
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::delta(self.group.identity())
    }

    /// Convolution product.
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (u, x) in a.terms() {
            for (w, y) in b.terms() {
                let uw = self.group.mul(self.elem(u), self.elem(w));
                out.add_term(uw.index() as u32, x * y);
            }
        }
        Ok(out)
    }

    fn subgroup_mean(&self, subset: &SimpleSubset, signed: bool) -> AlgebraElement {
        let members = parabolic_elements(self.group, subset);
        let weight = BigRational::new(BigInt::one(), BigInt::from(members.len()));
        let mut out = self.zero();
        for w in members {
            let c = if signed && self.group.sign(w) < 0 { -weight.clone() } else { weight.clone() };
            out.add_term(w.index() as u32, c);
        }
        out
    }

    /// `e_J = |W_J|^-1 sum_{w in W_J} delta_w`.
    pub fn trivial_idempotent(&self, subset: &SimpleSubset) -> AlgebraElement {
        self.subgroup_mean(subset, false)
    }

    /// `eps_J = |W_J|^-1 sum_{w in W_J} (-1)^l(w) delta_w`.
    pub fn sign_idempotent(&self, subset: &SimpleSubset) -> AlgebraElement {
        self.subgroup_mean(subset, true)
    }

    /// `(w, w') . v = delta_w' v delta_w^-1`.
    pub fn biact(&self, w: WeylElement, w_prime: WeylElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        if !self.group.contains(w) || !self.group.contains(w_prime) {
            return Err(Error::MixedGroups);
        }
        self.check(v)?;
        let w_inv = self.group.invert(w);
        let mut out = self.zero();
        for (x, c) in v.terms() {
            let y = self.group.mul(self.group.mul(w_prime, self.elem(x)), w_inv);
            out.add_term(y.index() as u32, c.clone());
        }
        Ok(out)
    }

    /// `mean over (a, b) in W_K x W_J of chi(a) chi(b) a v b`, where `chi`
    /// is trivial or the sign character.
    fn two_sided_mean(&self, right: &SimpleSubset, left: &SimpleSubset, v: &AlgebraElement, signed: bool) -> AlgebraElement {
        self.assert_member(v);
        let g = self.group;
        let right_elems = parabolic_elements(g, right);
        let left_elems = parabolic_elements(g, left);
        let chi = |w: WeylElement| if signed { g.sign(w) } else { 1 };
        let mut out = self.zero();
        let mut counts: HashMap<u32, i64> = HashMap::new();
        for (x, c) in v.terms() {
            counts.clear();
            let x = self.elem(x);
            for &b in &right_elems {
                let xb = g.mul(x, b);
                for &a in &left_elems {
                    *counts.entry(g.mul(a, xb).index() as u32).or_insert(0) += chi(a) * chi(b);
                }
            }
            for (&y, &m) in &counts {
                if m != 0 {
                    out.add_term(y, c * BigRational::from_integer(m.into()));
                }
            }
        }
        let total = BigInt::from(right_elems.len() * left_elems.len());
        out.scale(&BigRational::new(BigInt::one(), total))
    }

    /// The averaging projector `v -> e_K v e_J` onto the
    /// `(W_J x W_K)`-invariants.
    pub fn average(&self, j: &SimpleSubset, k: &SimpleSubset, v: &AlgebraElement) -> AlgebraElement {
        self.two_sided_mean(j, k, v, false)
    }

    /// The projector `v -> eps_K v eps_J` onto the anti-invariants.
    pub fn sign_average(&self, j: &SimpleSubset, k: &SimpleSubset, v: &AlgebraElement) -> AlgebraElement {
        self.two_sided_mean(j, k, v, true)
    }

    /// Is `v` fixed by `(w, w')` for all `w in W_J`, `w' in W_K`? Checked on
    /// the generators `(s_j, e)` and `(e, s_k)`.
    pub fn is_invariant(&self, j: &SimpleSubset, k: &SimpleSubset, v: &AlgebraElement) -> bool {
        self.assert_member(v);
        let e = self.group.identity();
        j.iter().all(|s| &self.biact(self.group.simple_reflection(s), e, v).unwrap() == v)
            && k.iter().all(|s| &self.biact(e, self.group.simple_reflection(s), v).unwrap() == v)
    }

    pub fn to_sparse(&self, v: &AlgebraElement) -> SparseVec {
        v.terms().map(|(k, c)| (k, c.clone())).collect()
    }

    pub fn from_sparse(&self, v: SparseVec) -> AlgebraElement {
        let mut out = self.zero();
        for (k, c) in v {
            assert!(k < self.group.order());
            out.add_term(k as u32, c);
        }
        out
    }

    /// Independent subset of `vectors`, in input order, by exact row
    /// reduction.
    pub fn span_dimension<'a>(&self, vectors: impl IntoIterator<Item = &'a AlgebraElement>) -> SubspaceBasis {
        let mut ech = Echelon::new();
        let kept = vectors
            .into_iter()
            .filter(|v| {
                self.assert_member(v);
                ech.insert(self.to_sparse(v))
            })
            .cloned()
            .collect();
        SubspaceBasis { vectors: kept }
    }

    /// Basis of `e_K QW e_J`: for each `(W_J, W_K)`-double coset `D`, the
    /// mean of `delta_x` over `x in D^-1`, which is a `(W_K, W_J)`-double
    /// coset.
    pub fn invariant_basis(&self, j: &SimpleSubset, k: &SimpleSubset) -> SubspaceBasis {
        let decomposition = double_cosets(self.group, j, k);
        let vectors: Vec<AlgebraElement> = decomposition
            .cosets
            .iter()
            .map(|coset| {
                let weight = BigRational::new(BigInt::one(), BigInt::from(coset.len()));
                let mut v = self.zero();
                for &w in &coset.elements {
                    v.add_term(self.group.invert(w).index() as u32, weight.clone());
                }
                v
            })
            .collect();
        self.span_dimension(&vectors)
    }

    /// Basis of `eps_K QW eps_J`: `eps_K delta_(m^-1) eps_J` for each maximal
    /// representative `m` of a `(W_J, W_K)`-double coset.
    pub fn anti_invariant_basis(&self, j: &SimpleSubset, k: &SimpleSubset) -> SubspaceBasis {
        let decomposition = double_cosets(self.group, j, k);
        let vectors: Vec<AlgebraElement> = decomposition
            .cosets
            .iter()
            .map(|coset| self.sign_average(j, k, &AlgebraElement::delta(self.group.invert(coset.max_rep))))
            .filter(|v| !v.is_zero())
            .collect();
        self.span_dimension(&vectors)
    }

    /// Basis of `{x : x delta_s = -x}`, as the kernel of `x -> x delta_s + x`.
    pub fn right_sign_eigenspace(&self, s: usize) -> SubspaceBasis {
        let g = self.group;
        let mut ech = Echelon::new();
        // (x delta_s)[y] = x[y s].
        for y in g.elements() {
            let ys = g.right_mul_simple(y, s);
            let row: SparseVec = [(y.index(), BigRational::one()), (ys.index(), BigRational::one())].into();
            ech.insert(row);
        }
        let vectors = ech.nullspace(g.order()).into_iter().map(|x| self.from_sparse(x)).collect();
        SubspaceBasis { vectors }
    }

    /// Matrix rank of the linear map given by its images of all `delta_w`.
    pub fn image_rank(&self, f: impl Fn(&AlgebraElement) -> AlgebraElement) -> usize {
        linalg::rank(self.group.elements().map(|w| self.to_sparse(&f(&AlgebraElement::delta(w)))))
    }
}

/// Shorthand for the rational `n / d`; panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(indices: &[usize], rank: usize) -> SimpleSubset {
        SimpleSubset::new(indices.iter().copied(), rank).unwrap()
    }

    fn word(g: &WeylGroup, w: &str) -> WeylElement {
        g.parse_word(w).unwrap()
    }

    fn combo(g: &WeylGroup, terms: &[(&str, i64, i64)]) -> AlgebraElement {
        AlgebraElement::from_terms(g, terms.iter().map(|&(w, n, d)| (word(g, w), rational(n, d)))).unwrap()
    }

    #[test]
    fn products() {
        let g = WeylGroup::from_type("A2").unwrap();
        let alg = GroupAlgebra::new(&g);
        let a = combo(&g, &[("s1", 2, 3), ("s1s2", -1, 1)]);
        assert_eq!(alg.mul(&alg.one(), &a).unwrap(), a);
        let s1 = combo(&g, &[("s1", 1, 1)]);
        assert_eq!(alg.mul(&s1, &s1).unwrap(), alg.one());
        let lhs = combo(&g, &[("s1", 1, 1), ("s2", 1, 1)]);
        assert_eq!(alg.mul(&lhs, &s1).unwrap(), combo(&g, &[("", 1, 1), ("s2s1", 1, 1)]));
    }

    #[test]
    fn idempotents() {
        let g = WeylGroup::from_type("A2").unwrap();
        let alg = GroupAlgebra::new(&g);
        let none = SimpleSubset::empty();
        let j = subset(&[0], 2);
        assert_eq!(alg.trivial_idempotent(&none), alg.one());
        assert_eq!(alg.sign_idempotent(&none), alg.one());
        assert_eq!(alg.trivial_idempotent(&j), combo(&g, &[("", 1, 2), ("s1", 1, 2)]));
        assert_eq!(alg.sign_idempotent(&j), combo(&g, &[("", 1, 2), ("s1", -1, 2)]));
        let full = alg.trivial_idempotent(&SimpleSubset::full(2));
        assert_eq!(full.support_len(), 6);
        assert!(g.elements().all(|w| full.coeff(w) == rational(1, 6)));
        let prod = alg.mul(&alg.sign_idempotent(&j), &alg.trivial_idempotent(&j)).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn bimodule_action() {
        let g = WeylGroup::from_type("A2").unwrap();
        let alg = GroupAlgebra::new(&g);
        let (e, s1, s2) = (g.identity(), g.simple_reflection(0), g.simple_reflection(1));
        let v = combo(&g, &[("s1", 1, 3), ("s2s1", 5, 1)]);
        assert_eq!(alg.biact(e, e, &v).unwrap(), v);
        let d1 = AlgebraElement::delta(s1);
        assert_eq!(alg.biact(s1, s1, &d1).unwrap(), d1);
        assert_eq!(alg.biact(s1, s2, &alg.one()).unwrap(), combo(&g, &[("s2s1", 1, 1)]));
        let other = WeylGroup::from_type("A2").unwrap();
        assert_eq!(alg.biact(other.identity(), e, &v), Err(Error::MixedGroups));
    }

    #[test]
    fn averages() {
        let g = WeylGroup::from_type("A2").unwrap();
        let alg = GroupAlgebra::new(&g);
        let none = SimpleSubset::empty();
        let j = subset(&[0], 2);
        let k = subset(&[1], 2);
        let v = combo(&g, &[("s1", 1, 3), ("s2s1", 5, 1)]);
        assert_eq!(alg.average(&none, &none, &v), v);
        assert_eq!(alg.sign_average(&none, &none, &v), v);
        assert_eq!(alg.average(&j, &none, &alg.one()), combo(&g, &[("", 1, 2), ("s1", 1, 2)]));
        assert_eq!(alg.sign_average(&j, &none, &alg.one()), combo(&g, &[("", 1, 2), ("s1", -1, 2)]));
        assert_eq!(
            alg.average(&j, &k, &alg.one()),
            combo(&g, &[("", 1, 4), ("s1", 1, 4), ("s2", 1, 4), ("s2s1", 1, 4)])
        );
        let once = alg.sign_average(&j, &k, &v);
        assert_eq!(alg.sign_average(&j, &k, &once), once);
    }

    #[test]
    fn average_matches_idempotent_products() {
        let g = WeylGroup::from_type("B2").unwrap();
        let alg = GroupAlgebra::new(&g);
        let j = subset(&[0], 2);
        let k = subset(&[1], 2);
        let v = combo(&g, &[("s1", 1, 3), ("s2s1", 5, 1), ("s1s2s1s2", -2, 7)]);
        let ek = alg.trivial_idempotent(&k);
        let ej = alg.trivial_idempotent(&j);
        let expected = alg.mul(&alg.mul(&ek, &v).unwrap(), &ej).unwrap();
        assert_eq!(alg.average(&j, &k, &v), expected);
        let sk = alg.sign_idempotent(&k);
        let sj = alg.sign_idempotent(&j);
        let expected = alg.mul(&alg.mul(&sk, &v).unwrap(), &sj).unwrap();
        assert_eq!(alg.sign_average(&j, &k, &v), expected);
    }

    #[test]
    fn spans() {
        let g = WeylGroup::from_type("A2").unwrap();
        let alg = GroupAlgebra::new(&g);
        assert_eq!(alg.span_dimension(&[alg.one(), alg.one()]).dimension(), 1);
        let deltas: Vec<_> = g.elements().map(AlgebraElement::delta).collect();
        assert_eq!(alg.span_dimension(&deltas).dimension(), 6);
        let j = subset(&[0], 2);
        let k = subset(&[1], 2);
        let images: Vec<_> = deltas.iter().map(|d| alg.average(&j, &k, d)).collect();
        assert_eq!(alg.span_dimension(&images).dimension(), 2);
    }

    #[test]
    fn invariant_and_anti_invariant_bases() {
        let g = WeylGroup::from_type("A2").unwrap();
        let alg = GroupAlgebra::new(&g);
        let none = SimpleSubset::empty();
        let full = SimpleSubset::full(2);
        let j = subset(&[0], 2);
        let k = subset(&[1], 2);
        assert_eq!(alg.invariant_basis(&none, &none).dimension(), 6);
        assert_eq!(alg.anti_invariant_basis(&none, &none).dimension(), 6);
        for (a, b, dim) in [(&j, &k, 2), (&full, &full, 1), (&k, &j, 2)] {
            let inv = alg.invariant_basis(a, b);
            let anti = alg.anti_invariant_basis(a, b);
            assert_eq!(inv.dimension(), dim);
            assert_eq!(anti.dimension(), dim);
            for v in &inv.vectors {
                assert!(alg.is_invariant(a, b, v));
                assert_eq!(&alg.average(a, b, v), v);
            }
            for v in &anti.vectors {
                assert_eq!(&alg.sign_average(a, b, v), v);
            }
        }
    }

    #[test]
    fn sign_eigenspaces() {
        for (name, s, dim) in [("A1", 0, 1), ("A2", 0, 3), ("B2", 0, 4), ("B2", 1, 4)] {
            let g = WeylGroup::from_type(name).unwrap();
            let alg = GroupAlgebra::new(&g);
            let basis = alg.right_sign_eigenspace(s);
            assert_eq!(basis.dimension(), dim, "{name} s{s}");
            let ds = AlgebraElement::delta(g.simple_reflection(s));
            for x in &basis.vectors {
                assert_eq!(alg.mul(x, &ds).unwrap(), x.scale(&rational(-1, 1)));
            }
        }
        let g = WeylGroup::from_type("A1").unwrap();
        let alg = GroupAlgebra::new(&g);
        let basis = alg.right_sign_eigenspace(0);
        let expected = combo(&g, &[("", -1, 1), ("s1", 1, 1)]);
        assert!(basis.vectors[0] == expected || basis.vectors[0] == expected.scale(&rational(-1, 1)));
    }
}
