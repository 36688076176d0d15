//! Arity of first-order theories of finite structures.
//!
//! On a finite structure the ∅-definable relations are exactly the
//! automorphism-invariant ones, so every question here reduces to
//! permutation-group computations:
//!
//! * [`structures`]: parse, serialize, classify and generate finite algebras;
//! * [`automorph`]: automorphism groups as stabilizer chains;
//! * [`orbits`]: tuple ranking and `Aut`-orbit partitions of `M^m`;
//! * [`arity`]: subtype signatures, relation and theory arity, almost-arity
//!   and Δ-basedness checks, aritization hypotheses;
//! * [`expansions`]: arity-reducing expansions by new predicates;
//! * [`oracle`]: brute-force twins used to validate the engine;
//! * [`cli`]: the `aritylab` command line and its JSON reports.

pub mod arity;
pub mod automorph;
pub mod cli;
pub mod corpus;
mod error;
pub mod expansions;
pub mod limits;
pub mod oracle;
pub mod orbits;
pub mod structures;

pub use error::{Error, Result};
pub use limits::Limits;
