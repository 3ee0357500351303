//! Superextensions of finite groups.
//!
//! The superextension `λ(X)` of a finite set `X` is the set of all maximal
//! linked upfamilies on `X`; equivalently, of all self-dual monotone Boolean
//! functions of `|X|` variables. When `X` carries an associative operation the
//! superextension does too, and this crate builds that semigroup explicitly
//! for small groups: its Cayley table, idempotents, ideals, orbits, and its
//! automorphism group.
//!
//! The crate is organized bottom-up:
//!
//! - [`setfam`]: bit-level subsets and set families, with the upfamily /
//!   linked / maximal-linked predicates;
//! - [`lambdaenum`]: enumeration and counting of maximal linked families
//!   (`λ(n)` for `n ≤ 7`), with a binary cache format;
//! - [`groups`]: finite groups as Cayley tables, automorphisms, products,
//!   holomorphs, and a small catalog for naming;
//! - [`lambdaop`]: the extended binary operation on maximal linked families
//!   and construction of the full semigroup `λ(G)`;
//! - [`structure`]: idempotents, ideals, orbit semigroups, transversals and
//!   square-root sets of a finite semigroup;
//! - [`morphisms`]: automorphism and isomorphism search for the constructed
//!   semigroups;
//! - [`verify`]: the end-to-end verification suite behind `superext
//!   verify-paper`.

pub mod error;
pub mod groups;
pub mod lambdaenum;
pub mod lambdaop;
pub mod morphisms;
pub mod setfam;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
