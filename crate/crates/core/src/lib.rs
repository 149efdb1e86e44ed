//! Exact Weyl group combinatorics behind the top Borel-Moore homology of
//! Steinberg and generalized Steinberg varieties.
//!
//! The crate is organized bottom-up:
//!
//! * [`rootsys`]: Cartan data, positive roots, and the enumerated Weyl group
//!   with lengths, descents and Bruhat order.
//! * [`parabolic`]: standard parabolic subgroups and
//!   `(W_J, W_K)`-double cosets with their extremal representatives.
//! * [`algebra`]: the rational group algebra `QW` as a `W x W`-bimodule,
//!   the trivial and sign idempotents, averaging projectors and exact row
//!   reduction.
//! * [`steinberg`]: dimensions, degrees, component inventories and the
//!   verification reports tying the pieces together.
//! * [`json`]: the JSON encodings used by the command-line tool.

pub mod algebra;
pub mod error;
pub mod json;
pub mod parabolic;
pub mod rootsys;
pub mod steinberg;

pub use algebra::{AlgebraElement, GroupAlgebra, SubspaceBasis};
pub use error::{Error, Result};
pub use parabolic::{DoubleCoset, DoubleCosetDecomposition, SimpleSubset};
pub use rootsys::{CartanDatum, Root, RootSystem, WeylElement, WeylGroup};
pub use steinberg::{
    ComponentReport, GeometryProfile, PairProfile, VerificationReport,
};

pub use num_rational::BigRational;
