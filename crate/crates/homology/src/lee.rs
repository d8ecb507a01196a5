//! Filtered Lee homology, the s-invariant and ν_s.

use std::collections::BTreeMap;

use linkconc_core::rational::serialize_q;
use linkconc_core::{Diagram, LinkingMatrix};
use num_rational::Rational64;
use serde::Serialize;

use crate::complex::{gr_homology, FilteredComplex, Theory};
use crate::error::{HomologyError, Result};
use crate::khovanov::{complex, Method};
use crate::table::GrTable;

pub fn lee_complex(d: &Diagram, method: Method) -> Result<FilteredComplex> {
    complex(d, Theory::Lee, method)
}

/// Associated graded of Lee homology of `d`.
pub fn lee_gr(d: &Diagram, method: Method) -> Result<GrTable> {
    Ok(gr_homology(&lee_complex(d, method)?))
}

/// Homological degree of the Lee class of every orientation, keyed by the
/// bitmask of reversed components: h(E) = 2·Σ_{i∈E, j∉E} lk(i,j).
pub fn lee_h_degrees(lk: &LinkingMatrix) -> BTreeMap<u64, i64> {
    let l = lk.size();
    assert!(l < 64, "too many components");
    (0..1u64 << l)
        .map(|e| {
            let inside = |i: usize| e >> i & 1 == 1;
            let h: i64 = (0..l)
                .filter(|&i| inside(i))
                .flat_map(|i| (0..l).filter(move |&j| !inside(j)).map(move |j| lk.get(i, j)))
                .sum();
            (e, 2 * h)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    UnconditionalKnot,
    UnconditionalByLinking,
    HypothesisAssumed,
}

/// How s may be read off for this diagram, before any flag is considered.
/// `None` means only the symmetric-orientation hypothesis would justify it.
pub fn applicability(d: &Diagram) -> Option<Applicability> {
    let l = d.component_count();
    if l == 1 {
        return Some(Applicability::UnconditionalKnot);
    }
    let full = (1u64 << l) - 1;
    let only_pm = lee_h_degrees(&d.linking_matrix())
        .iter()
        .all(|(&e, &h)| h != 0 || e == 0 || e == full);
    only_pm.then_some(Applicability::UnconditionalByLinking)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SResult {
    pub s: i64,
    #[serde(serialize_with = "serialize_q")]
    pub nu_s: Rational64,
    pub applicability: Applicability,
    pub warnings: Vec<String>,
    pub gr: GrTable,
}

/// 1 + the lowest filtration degree carrying Lee homology in degree 0.
pub fn s_from_gr(gr: &GrTable) -> Result<i64> {
    gr.column(0)
        .keys()
        .next()
        .map(|&j| 1 + j as i64)
        .ok_or(HomologyError::EmptyDegreeZero)
}

/// (s + ℓ − 1)/2, which must be an integer.
pub fn nu_from_s(s: i64, components: usize) -> Result<Rational64> {
    let twice = s + components as i64 - 1;
    if twice % 2 != 0 {
        return Err(HomologyError::Parity { s, components });
    }
    Ok(Rational64::from_integer(twice / 2))
}

/// s and ν_s from an already computed Gr table.
pub fn s_from_table(d: &Diagram, gr: GrTable, assume_symmetric: bool) -> Result<SResult> {
    let mut warnings = Vec::new();
    let applicability = match applicability(d) {
        Some(a) => a,
        None if assume_symmetric => {
            warnings.push(
                "several orientations share degree 0; s read off assuming the diagram is isotopic to its orientation-reversed self"
                    .into(),
            );
            Applicability::HypothesisAssumed
        }
        None => {
            return Err(HomologyError::Hypothesis(
                "orientations other than ±o share homological degree 0; pass --assume-symmetric".into(),
            ))
        }
    };
    let l = d.component_count();
    let total = gr.total();
    if l < 64 && total != 1 << l {
        warnings.push(format!("Lee homology has dimension {total}, expected {}", 1u64 << l));
    }
    let s = s_from_gr(&gr)?;
    let nu_s = nu_from_s(s, l)?;
    Ok(SResult { s, nu_s, applicability, warnings, gr })
}

pub fn s_invariant(d: &Diagram, assume_symmetric: bool, method: Method) -> Result<SResult> {
    if applicability(d).is_none() && !assume_symmetric {
        return Err(HomologyError::Hypothesis(
            "orientations other than ±o share homological degree 0; pass --assume-symmetric".into(),
        ));
    }
    s_from_table(d, lee_gr(d, method)?, assume_symmetric)
}

pub fn nu_s(d: &Diagram, assume_symmetric: bool, method: Method) -> Result<Rational64> {
    Ok(s_invariant(d, assume_symmetric, method)?.nu_s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkconc_core::catalog;

    fn nu(name: &str) -> i64 {
        let d = catalog::resolve(name).unwrap();
        nu_s(&d, false, Method::default()).unwrap().to_integer()
    }

    #[test]
    fn small_values() {
        assert_eq!(nu("unknot"), 0);
        assert_eq!(nu("trefoil+"), 1);
        assert_eq!(nu("trefoil-"), -1);
        assert_eq!(nu("figure8"), 0);
        assert_eq!(nu("hopf+"), 1);
        assert_eq!(nu("hopf-"), 0);
        assert_eq!(nu("T(3,4)"), 3);
    }

    #[test]
    fn hopf_degrees() {
        let h = catalog::resolve("hopf+").unwrap();
        let deg = lee_h_degrees(&h.linking_matrix());
        assert_eq!(deg, BTreeMap::from([(0, 0), (1, 2), (2, 2), (3, 0)]));
        let gr = lee_gr(&h, Method::naive()).unwrap();
        assert_eq!(gr.by_degree(), BTreeMap::from([(0, 2), (2, 2)]));
        assert_eq!(applicability(&h), Some(Applicability::UnconditionalByLinking));
    }

    #[test]
    fn zero_linking_needs_flag() {
        let u = catalog::resolve("unlink2").unwrap();
        assert!(matches!(s_invariant(&u, false, Method::default()), Err(HomologyError::Hypothesis(_))));
        let r = s_invariant(&u, true, Method::default()).unwrap();
        assert_eq!((r.s, r.applicability), (-1, Applicability::HypothesisAssumed));
        assert_eq!(r.nu_s, Rational64::from_integer(0));
    }

    #[test]
    fn wrong_parity_is_rejected() {
        assert!(nu_from_s(0, 2).is_err());
        assert_eq!(nu_from_s(-5, 2).unwrap(), Rational64::from_integer(-2));
    }
}
