//! Finite quandles, coset quandles `(P\G, m)`, the group `Adconj(Q)`,
//! finitely presented groups, and Wirtinger presentations of knot and arc
//! diagrams given as signed Gauss codes.

#![allow(clippy::needless_range_loop)]

pub mod adconj;
pub mod corpus;
pub mod coset;
pub mod diagram;
pub mod error;
pub mod fp;
pub mod group;
pub mod invariants;
pub mod io;
pub mod limits;
pub mod perm;
pub mod quandle;
pub mod report;

pub use diagram::{parse_gauss, Diagram, QuandlePresentation};
pub use error::{Error, Result};
pub use fp::GroupPresentation;
pub use group::FiniteGroup;
pub use limits::Limits;
pub use perm::{Permutation, PermutationGroup};
pub use quandle::FiniteQuandle;
