//! Binomial ideals attached to linear codes over small finite fields.
//!
//! Words are encoded as square-free monomials, and the reduced Gröbner basis
//! of the code ideal is computed by a traversal of cosets. On top of that the
//! crate checks when the basis recovers the second generalized Hamming weight,
//! computes graded Betti numbers of the ideal generated by the minimal-support
//! codewords, and builds the family of codes on which recovery fails.

pub mod betti;
pub mod codes;
pub mod counterexample;
pub mod d2;
pub mod error;
pub mod examples;
pub mod gf;
pub mod groebner;
pub mod orders;

pub use codes::{LinearCode, Word};
pub use error::{Error, Result};
pub use gf::FieldSpec;
pub use orders::{Monomial, OrderKind};

/// Resource caps shared by the exhaustive routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of codewords that may be listed.
    pub enumeration: u128,
    /// Largest number of subspaces (or word pairs) a weight scan may visit.
    pub pairs: u128,
    /// Largest number of cosets a basis traversal may visit.
    pub cosets: u128,
    /// Largest number of pending candidates in a basis traversal.
    pub frontier: usize,
    /// Largest vertex count for which Betti numbers are computed.
    pub betti_vertices: usize,
    /// Largest dense generator matrix (rows times length) that may be materialized.
    pub generator_entries: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enumeration: 2_000_000,
            pairs: 100_000_000,
            cosets: 2_000_000,
            frontier: 50_000_000,
            betti_vertices: 16,
            generator_entries: 100_000_000,
        }
    }
}
