//! Exact computational character theory for small finite groups.
//!
//! The crate computes complete complex character tables (Dixon–Schneider
//! over GF(p), lifted to exact root-of-unity count vectors), decomposes
//! χ·conj(χ) into irreducible constituents, builds maximal reducing chains
//! through the kernel-intersection lattice, and machine-checks the
//! structural facts that relate the number of distinct constituents to the
//! derived length and to the prime factorization of χ(1).

pub mod algebra;
pub mod chains;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod lattice;
pub mod modp;
pub mod table;
pub mod verify;
pub mod zoo;

pub use error::{Error, Result};
