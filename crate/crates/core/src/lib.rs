//! Construction and verification of single-error-correcting
//! function-correcting codes for the Hamming-code membership function.
//!
//! For each order `n`, the data words are the vectors of `F_2^(2^n - 1)` and
//! the protected function is membership in the `[2^n-1, 2^n-1-n, 3]` Hamming
//! code. The encoder appends a 2-bit parity chosen so that codewords and
//! non-codewords are forced at least distance 3 apart, the whole code keeps
//! minimum distance 2, and the number of distance-2 pairs is minimized.
//!
//! The crate is organized around that pipeline:
//!
//! - [`gf2`]: packed bit vectors, rank/span/dual computations;
//! - [`hamming`]: the code, its spheres, weight classes, and weight-4
//!   generator set;
//! - [`graphs`]: fixed-distance graphs over codeword sets, bipartiteness and
//!   connectivity certificates, the class-exchange isomorphism;
//! - [`boolfn`]: truth tables, the Walsh transform, bent functions, and the
//!   degree-4 Krawtchouk polynomial;
//! - [`spectral`]: the eigenvalue theory of the distance-4 graph, the
//!   fourth-moment objective, and exhaustive spectrum sweeps;
//! - [`sefcc`]: the encoder table itself, validity checking, exact minimum
//!   distance, and distance-2 pair accounting;
//! - [`oracle`]: brute-force recomputation of the headline results from
//!   definitions alone.
//!
//! All arithmetic is exact; nothing here touches floating point.

pub mod boolfn;
pub mod error;
pub mod gf2;
pub mod graphs;
pub mod hamming;
pub mod oracle;
pub mod sefcc;
pub mod spectral;

pub use boolfn::{BooleanFunction, WalshSpectrum};
pub use error::{Error, Result};
pub use gf2::{BitVector, Gf2Matrix};
pub use graphs::{DistanceGraph, VertexPermutation};
pub use hamming::{HammingCode, SpherePartition};
pub use sefcc::{PairCountReport, Parity, ParityAssignment, SefccTable};
pub use spectral::{CharacterVector, SpectrumReport};
