//! Exact machinery for integral lattices whose minimal vectors form spherical designs.
//!
//! Two halves:
//!
//! * the abstract side ([`moments`], [`feasibility`], [`dualclass`], [`classify`]) turns
//!   the design moment identities into linear systems, scans dimensions for integral
//!   solutions and runs the dual-class elimination that pins down which lattices can
//!   exist for a given minimum and strength;
//! * the concrete side ([`lattice`]) loads Gram matrices, enumerates minimal vectors
//!   and certifies the design strength of an explicit lattice.
//!
//! All decisions are made in exact integer or rational arithmetic.

#![allow(clippy::needless_range_loop, clippy::large_enum_variant)]

pub mod classify;
pub mod dualclass;
pub mod error;
pub mod exactmath;
pub mod feasibility;
pub mod lattice;
pub mod moments;

pub use error::{Error, Result};
