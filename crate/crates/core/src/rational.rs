//! Formatting helpers for small exact rationals.

use num_rational::Rational64;
use serde::Serializer;

/// `3`, `-1/2`.
pub fn fmt_q(q: &Rational64) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn serialize_q<S: Serializer>(q: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(q))
}
