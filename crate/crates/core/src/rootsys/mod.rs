//! Root systems from Cartan data and their enumerated Weyl groups.

mod cartan;
mod group;
mod roots;

pub use cartan::{
    standard_matrix, validate_cartan, validate_cartan_with_bound, CartanDatum, DEFAULT_ROOT_BOUND,
};
pub use group::{enumerate_weyl, GroupId, WeylElement, WeylGroup, DEFAULT_ORDER_CAP};
pub use roots::{positive_roots, Root, RootSystem};
