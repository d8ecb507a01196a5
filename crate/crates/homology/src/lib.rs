//! Khovanov and filtered Lee homology over ℚ, by the full cube or by scanning
//! the diagram crossing by crossing with delooping and Gaussian elimination.

pub mod complex;
pub mod cube;
pub mod error;
pub mod jones;
pub mod khovanov;
pub mod laurent;
pub mod lee;
pub mod linalg;
pub mod q;
pub mod scan;
pub mod table;

pub use complex::{gr_homology, homology_betti, ChainComplex, FilteredComplex, Generator, Theory};
pub use error::{HomologyError, Result};
pub use khovanov::{khovanov_homology, Method};
pub use lee::{lee_gr, lee_h_degrees, nu_s, s_invariant, Applicability, SResult};
pub use table::{BettiTable, Bigraded, GrTable};
