//! Closed-form slice-torus values and bounds.

use num_rational::Rational64;
use num_traits::Signed;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::diagram::{Diagram, LinkingMatrix};
use crate::error::{LinkError, Result};
use crate::rational::serialize_q;
use crate::seifert::{classify, oriented_resolution, s_plus, seifert_graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    PositiveFormula,
    NegativeFormula,
    TorusFormula,
    Quasipositive,
    CombinatorialBound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    /// Exact ν when `exact`, otherwise a lower bound for ν.
    #[serde(serialize_with = "serialize_q")]
    pub value: Rational64,
    pub exact: bool,
    pub provenance: Provenance,
    pub assumptions: Vec<String>,
}

const NON_SPLIT: &str = "diagram assumed non-splittable; split count taken from diagram connectivity";

fn half(x: i64) -> Rational64 {
    Rational64::new(x, 2)
}

/// (w − O + 2s₊ + ℓ − 2ℓ_s)/2, a lower bound for every slice-torus invariant.
pub fn combinatorial_lower_bound(d: &Diagram) -> BoundReport {
    let w = d.writhe();
    let o = oriented_resolution(d).count() as i64;
    let sp = s_plus(d) as i64;
    let l = d.component_count() as i64;
    let ls = d.split_components() as i64;
    BoundReport {
        value: half(w - o + 2 * sp + l - 2 * ls),
        exact: false,
        provenance: Provenance::CombinatorialBound,
        assumptions: vec![NON_SPLIT.into()],
    }
}

/// (n − O + ℓ)/2 for a positive diagram.
pub fn positive_link_value(d: &Diagram) -> Result<BoundReport> {
    if !classify(d).positive {
        return Err(LinkError::WrongClass("positive"));
    }
    let n = d.crossing_count() as i64;
    let o = oriented_resolution(d).count() as i64;
    let l = d.component_count() as i64;
    let mut assumptions = Vec::new();
    if d.split_components() == 1 {
        assumptions.push("non-split diagram: also g4 + l - 1 equals this value".into());
    }
    Ok(BoundReport {
        value: half(n - o + l),
        exact: true,
        provenance: Provenance::PositiveFormula,
        assumptions,
    })
}

/// (−n + O + ℓ − 2ℓ_s)/2 for a negative diagram.
pub fn negative_link_value(d: &Diagram) -> Result<BoundReport> {
    if !classify(d).negative {
        return Err(LinkError::WrongClass("negative"));
    }
    let n = d.crossing_count() as i64;
    let o = oriented_resolution(d).count() as i64;
    let l = d.component_count() as i64;
    let ls = d.split_components() as i64;
    Ok(BoundReport {
        value: half(-n + o + l - 2 * ls),
        exact: true,
        provenance: Provenance::NegativeFormula,
        assumptions: vec![NON_SPLIT.into()],
    })
}

/// Every report that applies to the diagram, exact ones first.
pub fn all_reports(d: &Diagram) -> Vec<BoundReport> {
    let mut out = Vec::new();
    if let Ok(r) = positive_link_value(d) {
        out.push(r);
    }
    if let Ok(r) = negative_link_value(d) {
        out.push(r);
    }
    out.push(combinatorial_lower_bound(d));
    out
}

/// ν of the torus link T(p,q) (`positive`) or of its mirror.
pub fn torus_link_value(p: u64, q: u64, positive: bool) -> Result<Rational64> {
    if p == 0 || q == 0 {
        return Err(LinkError::Braid("torus link needs p, q ≥ 1".into()));
    }
    let l = num_integer::gcd(p, q) as i64;
    let core = ((p - 1) * (q - 1)) as i64;
    Ok(if positive {
        half(core + l - 1)
    } else {
        half(l - 1 - core)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivizeStats {
    pub crossings: usize,
    pub seifert_circles: usize,
    pub changed: usize,
    pub smoothed: usize,
    /// −n₋(D) + s₊(D) − 1.
    pub euler_characteristic: i64,
}

/// Smooths every negative crossing and re-joins the s₊ positive pieces along a
/// spanning tree of crossing changes, giving a positive diagram.
pub fn positivize(d: &Diagram) -> Result<(Diagram, PositivizeStats)> {
    let pieces = d.split_components();
    if pieces != 1 {
        return Err(LinkError::Disconnected(pieces));
    }
    let g = seifert_graph(d);
    let mut uf = UnionFind::<usize>::new(g.vertices);
    for &(a, b, s) in &g.edges {
        if s > 0 {
            uf.union(a, b);
        }
    }
    // Kruskal over negative crossings in index order.
    let mut change = vec![false; d.crossing_count()];
    for (k, &(a, b, s)) in g.edges.iter().enumerate() {
        if s < 0 && uf.union(a, b) {
            change[k] = true;
        }
    }

    let max = d.max_edge() as usize;
    let mut merge = UnionFind::<usize>::new(max + 1);
    let mut tuples = Vec::new();
    let mut dirs = Vec::new();
    let (mut changed, mut smoothed) = (0, 0);
    for (k, c) in d.crossings().iter().enumerate() {
        let [a, b, cc, dd] = c.edges;
        if c.is_positive() {
            tuples.push(c.edges);
            dirs.push(true);
        } else if change[k] {
            tuples.push([b, cc, dd, a]);
            dirs.push(true);
            changed += 1;
        } else {
            merge.union(a as usize, dd as usize);
            merge.union(b as usize, cc as usize);
            smoothed += 1;
        }
    }
    let mut used = vec![false; max + 1];
    for t in tuples.iter_mut() {
        for e in t.iter_mut() {
            *e = merge.find(*e as usize) as u32;
            used[*e as usize] = true;
        }
    }
    let mut new_loops = 0;
    let mut seen = vec![false; max + 1];
    for e in d.edges() {
        let r = merge.find(e as usize);
        if !used[r] && !seen[r] {
            seen[r] = true;
            new_loops += 1;
        }
    }
    let out = Diagram::from_oriented(tuples, dirs, d.loops() + new_loops, None)?.normalized();
    let stats = PositivizeStats {
        crossings: out.crossing_count(),
        seifert_circles: oriented_resolution(&out).count(),
        changed,
        smoothed,
        euler_characteristic: -(d.n_minus() as i64) + s_plus(d) as i64 - 1,
    };
    Ok((out, stats))
}

/// Lower bound for g₄ from −g₄ ≤ ν ≤ g₄ + ℓ − 1.
pub fn slice_genus_lower_bound(nu: Rational64, ell: i64) -> Rational64 {
    let zero = Rational64::from_integer(0);
    (-nu).max(nu - Rational64::from_integer(ell - 1)).max(zero)
}

/// True when ν ≠ 0, which rules out strong sliceness.
pub fn strong_slice_obstruction(nu: Rational64) -> bool {
    nu != Rational64::from_integer(0)
}

/// |ν(L) − Σ ν(K_i)|, a lower bound for the splitting number.
pub fn splitting_lower_bound(nu_link: Rational64, nu_components: &[Rational64]) -> Rational64 {
    let s: Rational64 = nu_components.iter().copied().sum();
    (nu_link - s).abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of Σ_{i<j} lk(i,j), which the strong splitting number shares.
pub fn spl_parity(lk: &LinkingMatrix) -> Parity {
    if lk.total().rem_euclid(2) == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Smallest integer ≥ `bound` with the given parity.
pub fn strong_splitting_lower_bound(bound: Rational64, parity: Parity) -> i64 {
    let mut m = bound.ceil().to_integer().max(0);
    let want = if parity == Parity::Even { 0 } else { 1 };
    if m.rem_euclid(2) != want {
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn torus_values() {
        assert_eq!(torus_link_value(3, 4, true).unwrap(), q(3));
        assert_eq!(torus_link_value(2, 2, true).unwrap(), q(1));
        assert_eq!(torus_link_value(1, 7, true).unwrap(), q(0));
        assert_eq!(torus_link_value(1, 7, false).unwrap(), q(0));
        assert_eq!(torus_link_value(2, 4, false).unwrap(), q(-1));
    }

    #[test]
    fn genus_and_obstructions() {
        assert_eq!(slice_genus_lower_bound(q(3), 1), q(3));
        assert_eq!(slice_genus_lower_bound(q(0), 2), q(0));
        assert_eq!(slice_genus_lower_bound(q(-1), 2), q(1));
        assert!(strong_slice_obstruction(q(1)));
        assert!(!strong_slice_obstruction(q(0)));
        assert!(strong_slice_obstruction(q(2)));
    }

    #[test]
    fn splitting() {
        assert_eq!(splitting_lower_bound(q(3), &[q(0), q(0)]), q(3));
        assert_eq!(splitting_lower_bound(q(1), &[q(1)]), q(0));
        let lk = LinkingMatrix(vec![vec![0, 2], vec![2, 0]]);
        assert_eq!(spl_parity(&lk), Parity::Even);
        assert_eq!(strong_splitting_lower_bound(q(3), Parity::Even), 4);
        assert_eq!(strong_splitting_lower_bound(q(1), Parity::Odd), 1);
        assert_eq!(strong_splitting_lower_bound(Rational64::new(1, 2), Parity::Odd), 1);
    }

    #[test]
    fn negative_hopf_positivized() {
        let d = Diagram::parse("PD[X[4,1,3,2],X[2,3,1,4]]").unwrap();
        let (p, st) = positivize(&d).unwrap();
        assert_eq!(st.crossings, 1);
        assert_eq!(st.seifert_circles, 2);
        assert!(classify(&p).positive);
        // The smoothing is a band move joining the two components.
        assert_eq!(p.component_count(), 1);
        assert_eq!(st.euler_characteristic, -2 + 2 - 1);
    }

    #[test]
    fn wrong_class() {
        let d = Diagram::parse("PD[X[4,1,3,2],X[2,3,1,4]]").unwrap();
        assert!(positive_link_value(&d).is_err());
        assert_eq!(negative_link_value(&d).unwrap().value, q(0));
        assert_eq!(combinatorial_lower_bound(&d).value, q(0));
    }
}
