//! Exact-arithmetic toolkit for promotion orbits on invariant words of
//! crystal graphs and for checking the cyclic sieving phenomenon against
//! fake-degree polynomials.
//!
//! The crate is organized around six building blocks:
//!
//! * [`qpoly`] — integer polynomials in `q`, q-integers, Gauss binomials;
//! * [`symfunc`] — partitions, symmetric-group characters, fake degrees,
//!   symmetric functions in the Schur and homogeneous bases;
//! * [`liechar`] — root systems, Weyl characters, Adams operations and the
//!   symmetric-group character of invariant tensors;
//! * [`crystal`] — crystal graphs, tensor words and the promotion map;
//! * [`diagrams`] — Temperley-Lieb diagrams, rectangular tableaux with
//!   jeu-de-taquin sliding, perfect matchings and derangements;
//! * [`csp`] — orbit reports of finite cyclic actions and the cyclic
//!   sieving verdict.
//!
//! [`repro`] wires everything into the reproduction suite used both by the
//! `csp-lab repro` subcommand and the acceptance tests.

pub mod crystal;
pub mod csp;
pub mod diagrams;
pub mod liechar;
pub mod qpoly;
pub mod repro;
pub mod symfunc;

/// Default cap on the number of partial states an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 5_000_000;
