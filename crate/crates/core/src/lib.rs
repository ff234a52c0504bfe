pub mod disjointness;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod hamilton;
pub mod metrics;
pub mod ordertype;
pub mod plotnikov;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/geometry.md")]
    struct Geometry;
    #[doc = include_str!("../../../book/src/disjointness.md")]
    struct Disjointness;
    #[doc = include_str!("../../../book/src/order-types.md")]
    struct OrderTypes;
    #[doc = include_str!("../../../book/src/hamilton.md")]
    struct Hamilton;
    #[doc = include_str!("../../../book/src/metrics.md")]
    struct Metrics;
    #[doc = include_str!("../../../book/src/separator.md")]
    struct Separator;
}
