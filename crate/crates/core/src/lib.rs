//! Parity-check codes built from disjunct matrices.
//!
//! Three matrix families (subset inclusion, Steiner-system packings, and
//! unit-vector expansion of q-ary codes) together with exhaustive verifiers
//! for disjunctness, separability, girth, cycle counts, minimum distance and
//! stopping distance, and a one-round majority-logic bit-flipping decoder.

pub mod analysis;
pub mod binmat;
pub mod bits;
pub mod cli;
pub mod combinat;
pub mod constructions;
pub mod decode;
pub mod designs;
pub mod galois;
pub mod report;
pub mod reproduce;

pub use binmat::{BitMatrix, ColumnSupport};
pub use bits::BitVec;
