//! Exact computer algebra for separators, idealizers and principal
//! congruences on finite commutative semigroups, and for the gcd relation
//! they induce on unique factorization domains.
//!
//! The toolkit has four layers:
//!
//! - [`semigroup`]: finite commutative semigroups as Cayley tables:
//!   validation, ideals, idealizers, separators, contexts, principal
//!   congruences, quotients, and checkers for the structural laws connecting
//!   them (star condition, natural partial order, maximal-ideal
//!   equivalences).
//! - [`domain`]: exact arithmetic in three unique factorization domain
//!   families (arbitrary-precision integers, polynomials over a prime field,
//!   the nine class-number-one imaginary quadratic rings), with gcd, units,
//!   canonical associates, residue transversals and a brute-force divisor
//!   oracle.
//! - [`tau`]: the gcd relation `a ~ b iff gcd(a,m) and gcd(b,m) are
//!   associated` for a modulus `m`, realized exactly on the finite residue
//!   ring, and its agreement with the principal congruence of the ideal
//!   `(m)`.
//! - [`quad`]: ideal arithmetic in the nine imaginary quadratic rings:
//!   Hermite normal forms, products, conjugates, and principal-generator
//!   extraction by two-dimensional lattice reduction.
//!
//! Every operation is a pure function over immutable values; results are
//! deterministic, and randomized searches take explicit seeds.
//!
//! See the crate examples for end-to-end walkthroughs of each capability,
//! and the `taucong` binary for the scriptable command line interface.

pub mod cli;
pub mod domain;
pub mod quad;
pub mod semigroup;
pub mod tau;

pub use domain::{DomainError, DomainId, Element};
pub use quad::QuadIdeal;
pub use semigroup::laws::Verdict;
pub use semigroup::{CommSemigroup, ElementSet, PairContext, Partition, SemigroupError};
