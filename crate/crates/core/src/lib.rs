//! Exact computation of the level-`N` unified link invariant `AΓ^N` from a
//! braid word, with its coloured Jones and ADO specializations.
//!
//! The invariant lives in `Z[u_i^±, x_i^±, y, d^±]` ([`ring`]). It is a state
//! sum over the generic Verma action of the braid ([`verma`]). The maps of
//! [`specialize`] send it to the coloured Jones polynomials and to the ADO
//! invariants, and [`unify`] assembles the levels into one coherent sequence.
//! The [`oracles`] module computes the Alexander and Jones polynomials
//! independently for cross-checks.

pub mod braid;
pub mod cli;
pub mod error;
pub mod localsystem;
pub mod oracles;
pub mod ring;
pub mod specialize;
pub mod unify;
pub mod verify;
pub mod verma;
