//! Exact-arithmetic combinatorics for Whittaker-module Kostant problems.
//!
//! The crate implements the weight-level machinery behind Kostant-positivity
//! decisions for standard and simple Whittaker modules over reductive Lie
//! algebras and the type I Lie superalgebras gl(m|n), osp(2|2n) and pe(n):
//!
//! * [`rootdata`] — algebra descriptors, root systems, bilinear forms and
//!   weight predicates (integrality, anti-dominance, root-lattice membership);
//! * [`weyl`] — Weyl group elements as signed permutations, the dot-action,
//!   parabolic subgroups and canonical orbit representatives;
//! * [`kostant`] — the verdict engine returning cited positivity decisions;
//! * [`search`] — constructive negativity witnesses and the rank-one
//!   translation/linkage oracle.
//!
//! Every scalar is an arbitrary-precision rational ([`Rat`]); there is no
//! floating point and no tolerance parameter anywhere. The crate is
//! `no_std`-compatible (requires `alloc`); the default `std` feature only
//! forwards to the numeric dependencies.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod error;
pub mod kostant;
pub mod rootdata;
pub mod search;
pub mod weyl;

pub use error::Error;
pub use rootdata::{build_root_datum, AlgebraSpec, CharacterSupport, RootDatum, Weight};

/// Exact rational scalar used for all weight coordinates and form values.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Convenience constructor for the rational `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}
