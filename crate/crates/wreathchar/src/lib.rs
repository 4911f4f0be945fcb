//! Exact character values of symmetric groups and wreath products.
//!
//! The library computes irreducible character values of `S_n` and of wreath
//! products `G wr S_n` (for finite abelian `G`, plus a linear-characters-only
//! model of arbitrary `G`) by Murnaghan-Nakayama strip recursions, entirely in
//! exact arithmetic over the ring of integers `Z[zeta_L]`.
//!
//! On top of the evaluators sit the combinatorial transforms that relate the
//! two groups — boundary words, abacus bead configurations, r-cores,
//! r-quotients, the hat bijection `r-Par(n) -> P_{rn}(empty core)` and the
//! `sign_r` statistic — and a set of verification drivers that sweep both
//! computation paths over exhaustive desk-scale parameter ranges and report
//! any disagreement.
//!
//! Module map:
//! - [`partitions`]: partitions, compositions, r-partite tuples, boundary
//!   words, rim-hook surgery, beta/abacus encodings, cores, quotients, hat.
//! - [`tableaux`]: border-strip tableau enumeration with height and
//!   component statistics; counts and signed sums.
//! - [`cyclotomic`]: exact arithmetic in `Z[zeta_L]`.
//! - [`symchar`]: `S_n` characters by the classical MN recursion, character
//!   tables, `sign_r`.
//! - [`groups`]: color-group models (abelian, quotient-linear), character
//!   fibers over a distinguished element, the `alpha` exponent.
//! - [`wreath`]: colored permutations, conjugacy types, Stembridge's MN rule.
//! - [`identities`]: end-to-end verification sweeps and reports.
//! - [`cli`]: command-line front end.

pub mod cli;
pub mod cyclotomic;
mod error;
pub mod groups;
pub mod identities;
pub mod partitions;
pub mod symchar;
pub mod tableaux;
pub mod wreath;

pub use error::Error;
pub use partitions::{Composition, Partition, RPartitePartition};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
