//! Exact symbolic engine for matrix corepresentations of the quantum
//! groups SL_q(N).
//!
//! Everything is computed over Q(q) extended by explicit square-root
//! symbols; no floating point enters any verification path. The crate
//! builds the coordinate algebra of SL_q(N), its quantum minors and
//! antipode, the coactions on the quantum plane, and from those the
//! corepresentation matrices T_l for arbitrary N >= 2 and degree k >= 1.

pub mod cache;
pub mod cli;
pub mod corep;
pub mod error;
pub mod minors;
pub mod ncalg;
pub mod qcomb;
pub mod qplane;
pub mod qscalar;
pub mod serialize;

pub use error::{Error, Result};
