//! Exact arithmetic with numerical semigroups.
//!
//! A numerical semigroup is an additively closed subset of ℕ containing 0
//! whose complement (the *gap* set) is finite. This crate computes their
//! elementary invariants and the structures built on top of them:
//!
//! - [`NumSgp`]: membership, gaps, multiplicity, Frobenius number, genus,
//!   minimal generators, fundamental gaps ([`semigroup`]);
//! - [`AperySet`]: residue-class minima w.r.t. a nonzero member, with the
//!   Frobenius number and genus read off the set;
//! - quotients `S/d`, intersections, [`KunzVec`] coordinates and their join
//!   law, and the transport of Apéry sets along quotients ([`quotient`]);
//! - the complete family of arithmetic extensions of a semigroup, the
//!   six-semigroup classifier, and brute-force oracles ([`extensions`]);
//! - proportionally modular inequalities `a·x mod b ≤ c·x`, the quotient
//!   form `⟨a,a+1⟩/b` with closed-form Frobenius number and genus, and
//!   finite intersections of such quotients ([`pm`]).
//!
//! All arithmetic is exact: values are checked 64-bit integers, ceilings of
//! possibly negative rationals are evaluated in integer arithmetic, and any
//! overflow is a hard [`Error`], never a wraparound.
//!
//! Values are immutable after construction; the lazily cached minimal
//! generators sit behind a once-only guard, so everything is safe to share
//! across threads.
//!
//! ```
//! use numsgp::NumSgp;
//!
//! let s = NumSgp::from_generators(&[5, 7, 9])?;
//! assert_eq!(s.frobenius(), 13);
//! assert_eq!(s.genus(), 8);
//! assert_eq!(s.fundamental_gaps(), vec![6, 8, 11, 13]);
//!
//! // the Apéry set of S/3 w.r.t. 5, without materializing S/3
//! let ap = s.apery_of_quotient(5, 3)?;
//! assert_eq!(ap, s.quotient(3)?.apery(5)?);
//! # Ok::<(), numsgp::Error>(())
//! ```

pub mod error;
pub mod extensions;
pub mod pm;
pub mod quotient;
pub mod semigroup;

mod arith;

pub use error::{Error, Result};
pub use extensions::{
    arithmetic_extensions, delta_of, enumerate_oversemigroups, has_only_arithmetic_extensions,
    is_arithmetic_extension, min_proper_arithmetic, ExtResult, DEFAULT_GENUS_LIMIT,
};
pub use pm::{
    pm_frobenius, pm_genus, pm_quotient, pm_semigroup, pm_to_quotient_search, t_semigroup, PMIneq,
    TSemigroup, TSpec,
};
pub use quotient::{apery_of_intersection, kunz_join, semigroup_from_kunz, KunzVec};
pub use semigroup::{AperySet, NumSgp};
