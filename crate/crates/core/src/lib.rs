//! FFT-based unified decoding of generalized Reed-Solomon, alternant and
//! separable Goppa codes over GF(2^m).
//!
//! The decoder computes a generalized syndrome from block inverse transforms of
//! the received word, solves the key equation with the extended Euclidean
//! algorithm, finds error locations with forward transforms and recovers error
//! values with Forney's formula. A slow power-sum/Berlekamp-Massey decoder lives
//! in [`oracle`] as ground truth and as the conventional baseline for operation
//! counts.

pub mod arith;
pub mod bench;
pub mod binary;
pub mod code;
pub mod decode;
pub mod error;
pub mod gf;
pub mod io;
pub mod lch;
pub mod oracle;
pub mod poly;
pub mod selftest;

pub use arith::{counting_field, Arith, CountingField, OpCounts};
pub use bench::{bench, BenchReport};
pub use code::{CodeKind, CodeSpec, Layout};
pub use decode::{
    DecodeResult, DecodeStatus, DecoderContext, FailureReason, KeySolution, KeySolver,
};
pub use error::{Error, Result};
pub use gf::{Field, FieldDescriptor, Gf};
pub use lch::{BasisContext, XbarCoeffs};
pub use oracle::oracle_decode;
pub use poly::Poly;
