//! Dimensions, degrees, components and verification reports for the
//! Steinberg variety `Z` and the generalized Steinberg varieties
//! `X^{P,Q}` and `Y^{P,Q}`.
//!
//! Top Borel-Moore homology of `Z` is modeled by `QW`. Only statements that
//! do not depend on a choice of basis of `H_4n(Z)` are checked: dimensions
//! of invariant and anti-invariant subspaces, eigenspace dimensions,
//! projector ranks, and index sets of components.

use serde::Serialize;

use crate::algebra::linalg::{Echelon, SparseVec};
use crate::algebra::{AlgebraElement, GroupAlgebra, SubspaceBasis};
use crate::parabolic::{double_cosets, is_minimal_in_double_coset, maximal_reps, SimpleSubset};
use crate::rootsys::{RootSystem, WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeometryProfile {
    /// Number of positive roots, the dimension of the flag variety.
    pub n: usize,
    /// Dimension of the Lie algebra, `2n + rank`.
    pub d: usize,
    /// The rank, `d - 2n`.
    pub l: usize,
    pub top_degree_z: usize,
}

pub fn geometry_profile(roots: &RootSystem) -> GeometryProfile {
    let n = roots.num_positive();
    let l = roots.rank();
    GeometryProfile { n, d: 2 * n + l, l, top_degree_z: 4 * n }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairProfile {
    #[serde(rename = "J")]
    pub j: SimpleSubset,
    #[serde(rename = "K")]
    pub k: SimpleSubset,
    /// `dim P/B + dim Q/B`, the sum of the lengths of the longest elements
    /// of `W_J` and `W_K`.
    pub f: usize,
    pub dim_x: usize,
    pub dim_y: usize,
    pub top_degree_x: usize,
    pub top_degree_y: usize,
    /// `dim G/P = n - l(w_0,J)`.
    pub dim_flag_p: usize,
    pub dim_flag_q: usize,
}

/// Uses `l(w_0,J) = #{positive roots supported on J}`.
pub fn pair_profile(roots: &RootSystem, j: &SimpleSubset, k: &SimpleSubset) -> PairProfile {
    let n = roots.num_positive();
    let len_j = roots.count_supported_on(j.mask());
    let len_k = roots.count_supported_on(k.mask());
    let f = len_j + len_k;
    let dim_y = 2 * n - f;
    PairProfile {
        j: j.clone(),
        k: k.clone(),
        f,
        dim_x: 2 * n,
        dim_y,
        top_degree_x: 4 * n,
        top_degree_y: 2 * dim_y,
        dim_flag_p: n - len_j,
        dim_flag_q: n - len_k,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentReport {
    pub label: WeylElement,
    pub dim_zw: usize,
    pub dim_yw: usize,
    /// Whether `eta` keeps the dimension of `Z_label`, i.e. the label is
    /// minimal in its double coset.
    pub eta_dim_preserved: bool,
}

/// One component `Z_w` per `w in W`, each of dimension `2n`.
pub fn steinberg_components(group: &WeylGroup) -> Vec<ComponentReport> {
    let n = group.num_positive_roots();
    group
        .elements()
        .map(|w| ComponentReport { label: w, dim_zw: 2 * n, dim_yw: 2 * n, eta_dim_preserved: true })
        .collect()
}

/// Components of `Y^{P,Q}`, labeled by maximal double-coset representatives.
pub fn y_components(group: &WeylGroup, j: &SimpleSubset, k: &SimpleSubset) -> Vec<ComponentReport> {
    let profile = pair_profile(group.root_system(), j, k);
    maximal_reps(group, j, k)
        .into_iter()
        .map(|w| ComponentReport {
            label: w,
            dim_zw: profile.dim_x,
            dim_yw: profile.dim_flag_p + profile.dim_flag_q,
            eta_dim_preserved: is_minimal_in_double_coset(group, w, j, k),
        })
        .collect()
}

/// One equality checked by a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: usize,
    pub computed: usize,
}

impl Check {
    fn new(name: &str, expected: usize, computed: usize) -> Self {
        Check { name: name.to_string(), expected, computed }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub expected: usize,
    pub computed: usize,
    /// True iff `expected == computed` and every supplementary check holds.
    pub passed: bool,
    pub witness: Option<SubspaceBasis>,
    /// Secondary equalities; `expected`/`computed` repeat the first one.
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn from_checks(claim: String, checks: Vec<Check>, witness: Option<SubspaceBasis>) -> Self {
        let primary = &checks[0];
        VerificationReport {
            claim,
            expected: primary.expected,
            computed: primary.computed,
            passed: checks.iter().all(Check::passed),
            witness,
            checks,
        }
    }
}

fn pair_label(j: &SimpleSubset, k: &SimpleSubset) -> String {
    format!("J={j} K={k}")
}

/// `dim e_K QW e_J` equals the number of `(W_J, W_K)`-double cosets, which
/// index the components of `X^{P,Q}`.
///
/// `computed` counts witness vectors that are independent and fixed by
/// `W_J x W_K`.
pub fn verify_invariant_isomorphism(group: &WeylGroup, j: &SimpleSubset, k: &SimpleSubset) -> VerificationReport {
    let alg = GroupAlgebra::new(group);
    let cosets = double_cosets(group, j, k).len();
    let basis = alg.invariant_basis(j, k);
    let fixed = basis.vectors.iter().filter(|v| alg.is_invariant(j, k, v)).count();
    VerificationReport::from_checks(
        format!("invariant_isomorphism {}", pair_label(j, k)),
        vec![Check::new("dim e_K QW e_J", cosets, fixed)],
        Some(basis),
    )
}

/// `dim eps_K QW eps_J = |W^{P,Q}|`, the number of components of
/// `Y^{P,Q}`.
pub fn verify_anti_invariant_isomorphism(group: &WeylGroup, j: &SimpleSubset, k: &SimpleSubset) -> VerificationReport {
    let alg = GroupAlgebra::new(group);
    let reps = maximal_reps(group, j, k).len();
    let components = y_components(group, j, k).len();
    let basis = alg.anti_invariant_basis(j, k);
    let anti = basis.vectors.iter().filter(|v| &alg.sign_average(j, k, v) == *v).count();
    VerificationReport::from_checks(
        format!("anti_invariant_isomorphism {}", pair_label(j, k)),
        vec![
            Check::new("dim eps_K QW eps_J", reps, anti),
            Check::new("components of Y", reps, components),
        ],
        Some(basis),
    )
}

/// For a simple reflection `s`: `|{w : sw < w}| = |W|/2 = dim{x : x s = -x}`,
/// and `{w : sw < w}` is the set of elements that are not minimal in their
/// `(<s>, {e})`-double coset.
pub fn hotta_verification(group: &WeylGroup, s: usize) -> VerificationReport {
    let alg = GroupAlgebra::new(group);
    let half = group.order() / 2;
    let descents: Vec<WeylElement> = group.elements().filter(|&w| group.is_left_descent(s, w)).collect();
    let eigen = alg.right_sign_eigenspace(s).dimension();
    let single = SimpleSubset::from_mask(1 << s);
    let none = SimpleSubset::empty();
    let nonminimal: Vec<WeylElement> =
        group.elements().filter(|&w| !is_minimal_in_double_coset(group, w, &single, &none)).collect();
    let agree = group
        .elements()
        .filter(|&w| group.is_left_descent(s, w) == !is_minimal_in_double_coset(group, w, &single, &none))
        .count();
    VerificationReport::from_checks(
        format!("hotta s={s}"),
        vec![
            Check::new("dim {x : x s = -x}", half, eigen),
            Check::new("#{w : sw < w}", half, descents.len()),
            Check::new("#non-minimal in (<s>,{e})-cosets", half, nonminimal.len()),
            Check::new("descent and non-minimality agree", group.order(), agree),
        ],
        None,
    )
}

/// The averaging projector `v -> e_K v e_J` has rank equal to the number of
/// double cosets and kernel of the complementary dimension. The kernel is
/// computed separately, from the rows of the projector matrix.
pub fn averaging_image_check(group: &WeylGroup, j: &SimpleSubset, k: &SimpleSubset) -> VerificationReport {
    let alg = GroupAlgebra::new(group);
    let cosets = double_cosets(group, j, k).len();
    let images: Vec<AlgebraElement> =
        group.elements().map(|w| alg.average(j, k, &AlgebraElement::delta(w))).collect();
    let rank = alg.span_dimension(&images).dimension();
    let mut rows: Vec<SparseVec> = vec![SparseVec::new(); group.order()];
    for (col, image) in images.iter().enumerate() {
        for (row, c) in image.terms() {
            rows[row].insert(col, c.clone());
        }
    }
    let mut ech = Echelon::new();
    for row in rows {
        ech.insert(row);
    }
    let kernel = ech.nullspace(group.order()).len();
    VerificationReport::from_checks(
        format!("averaging_image {}", pair_label(j, k)),
        vec![
            Check::new("rank of averaging map", cosets, rank),
            Check::new("kernel dimension", group.order() - cosets, kernel),
        ],
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(indices: &[usize], rank: usize) -> SimpleSubset {
        SimpleSubset::new(indices.iter().copied(), rank).unwrap()
    }

    #[test]
    fn geometry_profiles() {
        for (name, n, d, l) in [("A1", 1, 3, 1), ("A2", 3, 8, 2), ("B2", 4, 10, 2)] {
            let p = geometry_profile(&RootSystem::from_type(name).unwrap());
            assert_eq!((p.n, p.d, p.l, p.top_degree_z), (n, d, l, 4 * n), "{name}");
        }
    }

    #[test]
    fn pair_profiles() {
        let roots = RootSystem::from_type("A2").unwrap();
        let none = SimpleSubset::empty();
        let p = pair_profile(&roots, &none, &none);
        assert_eq!((p.f, p.dim_x, p.dim_y), (0, 6, 6));

        let p = pair_profile(&roots, &subset(&[0], 2), &subset(&[1], 2));
        assert_eq!((p.f, p.dim_x, p.dim_y, p.top_degree_x, p.top_degree_y), (2, 6, 4, 12, 8));
        assert_eq!((p.dim_flag_p, p.dim_flag_q), (2, 2));

        let full = SimpleSubset::full(2);
        let p = pair_profile(&roots, &full, &full);
        assert_eq!((p.f, p.dim_y), (6, 0));
    }

    #[test]
    fn components() {
        for (name, count, dim) in [("A1", 2, 2), ("A2", 6, 6), ("B2", 8, 8)] {
            let g = WeylGroup::from_type(name).unwrap();
            let comps = steinberg_components(&g);
            assert_eq!(comps.len(), count);
            assert!(comps.iter().all(|c| c.dim_zw == dim));
        }
        let g = WeylGroup::from_type("A2").unwrap();
        let ys = y_components(&g, &subset(&[0], 2), &subset(&[1], 2));
        assert_eq!(ys.len(), 2);
        assert!(ys.iter().all(|c| c.dim_yw == 4 && !c.eta_dim_preserved));
        let none = SimpleSubset::empty();
        let ys = y_components(&g, &none, &none);
        assert_eq!(ys.len(), 6);
        assert!(ys.iter().all(|c| c.dim_yw == 6 && c.eta_dim_preserved));
        let full = SimpleSubset::full(2);
        let ys = y_components(&g, &full, &full);
        assert_eq!(ys.len(), 1);
        assert_eq!(ys[0].dim_yw, 0);
        assert_eq!(ys[0].label, g.longest_element(&full));
    }

    #[test]
    fn verification_examples() {
        let a2 = WeylGroup::from_type("A2").unwrap();
        let j = subset(&[0], 2);
        let k = subset(&[1], 2);
        let none = SimpleSubset::empty();
        let full = SimpleSubset::full(2);
        for (a, b, expected) in [(&j, &k, 2), (&none, &none, 6), (&full, &full, 1)] {
            let r = verify_invariant_isomorphism(&a2, a, b);
            assert!(r.passed && r.expected == expected && r.computed == expected);
            assert_eq!(r.witness.as_ref().unwrap().dimension(), expected);
            let r = verify_anti_invariant_isomorphism(&a2, a, b);
            assert!(r.passed && r.expected == expected, "{r:?}");
        }
        let b2 = WeylGroup::from_type("B2").unwrap();
        let r = verify_anti_invariant_isomorphism(&b2, &j, &k);
        assert!(r.passed && r.expected == 2);
    }

    #[test]
    fn hotta_examples() {
        let a1 = WeylGroup::from_type("A1").unwrap();
        let r = hotta_verification(&a1, 0);
        assert!(r.passed && r.expected == 1);

        let a2 = WeylGroup::from_type("A2").unwrap();
        let r = hotta_verification(&a2, 0);
        assert!(r.passed && r.expected == 3);
        let d: Vec<String> =
            a2.elements().filter(|&w| a2.is_left_descent(0, w)).map(|w| a2.word_string(w)).collect();
        assert_eq!(d, ["s1", "s1s2", "s1s2s1"]);

        let b2 = WeylGroup::from_type("B2").unwrap();
        assert!(hotta_verification(&b2, 1).passed);
    }

    #[test]
    fn averaging_examples() {
        let a2 = WeylGroup::from_type("A2").unwrap();
        let j = subset(&[0], 2);
        let k = subset(&[1], 2);
        let none = SimpleSubset::empty();
        let r = averaging_image_check(&a2, &j, &none);
        assert!(r.passed);
        assert_eq!((r.checks[0].computed, r.checks[1].computed), (3, 3));
        let r = averaging_image_check(&a2, &none, &none);
        assert_eq!((r.checks[0].computed, r.checks[1].computed), (6, 0));
        let r = averaging_image_check(&a2, &j, &k);
        assert_eq!((r.checks[0].computed, r.checks[1].computed), (2, 4));
    }
}
