//! Entry points that pick a construction path for the complex.

use linkconc_core::Diagram;
use crate::complex::{homology_betti, ChainComplex, Theory};
use crate::cube::{cube_complex, DEFAULT_NAIVE_LIMIT};
use crate::error::Result;
use crate::scan::{scan_complex_with, ScanOptions};
use crate::table::BettiTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Full resolution cube; refuses diagrams above `limit` crossings.
    Naive { limit: usize },
    Scan(ScanOptions),
}

impl Default for Method {
    fn default() -> Self {
        Method::Scan(ScanOptions::from_env())
    }
}

impl Method {
    pub fn naive() -> Self {
        Method::Naive { limit: DEFAULT_NAIVE_LIMIT }
    }
}

pub fn complex(d: &Diagram, theory: Theory, method: Method) -> Result<ChainComplex> {
    match method {
        Method::Naive { limit } => cube_complex(d, theory, limit),
        Method::Scan(opts) => scan_complex_with(d, theory, opts),
    }
}

/// Bigraded Khovanov homology over ℚ.
pub fn khovanov_homology(d: &Diagram, method: Method) -> Result<BettiTable> {
    homology_betti(&complex(d, Theory::Khovanov, method)?)
}
