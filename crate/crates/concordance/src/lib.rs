//! The Whitehead-double functions F, F̄, F′, F̄′ built from ν_s, and the
//! cube obstruction to strong concordance with split links.

pub mod cube;
pub mod error;
pub mod ftable;

pub use cube::{cube_search, split_obstruction, Cube, CubeReport, Functions, SplitReport, Verdict};
pub use error::{ConcordanceError, Result};
pub use ftable::{f_value, f_window, FEntry, FTable, FValue, Variant, Window, WindowOptions};
