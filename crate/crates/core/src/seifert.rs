//! Seifert circles of the oriented resolution and the signed Seifert graph.

use std::collections::HashMap;

use num_rational::Rational64;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::diagram::{Diagram, EdgeId};
use crate::error::{LinkError, Result};

#[derive(Debug, Clone, Serialize)]
pub struct SeifertState {
    /// Circles through at least one crossing, as edge sets.
    pub circles: Vec<Vec<EdgeId>>,
    /// Crossing-free loops, each of which is its own circle.
    pub loops: usize,
    #[serde(skip)]
    circle_of: HashMap<EdgeId, usize>,
}

impl SeifertState {
    /// Total number of Seifert circles O(D).
    pub fn count(&self) -> usize {
        self.circles.len() + self.loops
    }

    pub fn circle_of(&self, e: EdgeId) -> usize {
        self.circle_of[&e]
    }
}

/// Replaces every crossing by its orientation-respecting smoothing.
pub fn oriented_resolution(d: &Diagram) -> SeifertState {
    let edges: Vec<EdgeId> = d.edges().collect();
    let index: HashMap<EdgeId, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut uf = UnionFind::<usize>::new(edges.len());
    for c in d.crossings() {
        for (x, y) in c.smoothing(c.oriented_bit()) {
            uf.union(index[&x], index[&y]);
        }
    }
    let mut root_to_circle = HashMap::new();
    let mut circles: Vec<Vec<EdgeId>> = Vec::new();
    let mut circle_of = HashMap::new();
    for (i, &e) in edges.iter().enumerate() {
        let r = uf.find(i);
        let idx = *root_to_circle.entry(r).or_insert_with(|| {
            circles.push(Vec::new());
            circles.len() - 1
        });
        circles[idx].push(e);
        circle_of.insert(e, idx);
    }
    SeifertState {
        circles,
        loops: d.loops(),
        circle_of,
    }
}

/// Seifert graph: one vertex per circle, one signed edge per crossing.
#[derive(Debug, Clone, Serialize)]
pub struct SeifertGraph {
    pub vertices: usize,
    /// (circle, circle, sign) per crossing, in crossing order.
    pub edges: Vec<(usize, usize, i32)>,
}

impl SeifertGraph {
    /// Connected components after keeping only edges of the given sign.
    pub fn components_with_sign(&self, sign: i32) -> usize {
        let mut uf = UnionFind::<usize>::new(self.vertices);
        for &(a, b, s) in &self.edges {
            if s == sign {
                uf.union(a, b);
            }
        }
        let mut roots: Vec<usize> = (0..self.vertices).map(|v| uf.find(v)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }
}

pub fn seifert_graph(d: &Diagram) -> SeifertGraph {
    let st = oriented_resolution(d);
    let edges = d
        .crossings()
        .iter()
        .map(|c| {
            let [(x, _), (y, _)] = c.smoothing(c.oriented_bit());
            (st.circle_of(x), st.circle_of(y), c.sign())
        })
        .collect();
    SeifertGraph {
        vertices: st.count(),
        edges,
    }
}

/// Components of Γ(D) with all negative edges deleted.
pub fn s_plus(d: &Diagram) -> usize {
    seifert_graph(d).components_with_sign(1)
}

/// Components of Γ(D) with all positive edges deleted.
pub fn s_minus(d: &Diagram) -> usize {
    seifert_graph(d).components_with_sign(-1)
}

/// Genus of the Seifert surface, 1 + (n − O − ℓ)/2, for connected diagrams.
pub fn seifert_genus(d: &Diagram) -> Result<Rational64> {
    let pieces = d.split_components();
    if pieces != 1 {
        return Err(LinkError::Disconnected(pieces));
    }
    let n = d.crossing_count() as i64;
    let o = oriented_resolution(d).count() as i64;
    let l = d.component_count() as i64;
    Ok(Rational64::from_integer(1) + Rational64::new(n - o - l, 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub positive: bool,
    pub negative: bool,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match (self.positive, self.negative) {
            (true, true) => "positive and negative",
            (true, false) => "positive",
            (false, true) => "negative",
            (false, false) => "mixed",
        }
    }
}

pub fn classify(d: &Diagram) -> Classification {
    Classification {
        positive: d.n_minus() == 0,
        negative: d.n_plus() == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Diagram {
        Diagram::parse(s).unwrap()
    }

    #[test]
    fn hopf_and_unlink_circles() {
        let hm = parse("PD[X[4,1,3,2],X[2,3,1,4]]");
        assert_eq!(oriented_resolution(&hm).count(), 2);
        assert_eq!(s_plus(&hm), 2);
        assert_eq!(s_minus(&hm), 1);
        assert_eq!(seifert_genus(&hm).unwrap(), Rational64::from_integer(0));
        assert_eq!(oriented_resolution(&Diagram::unlink(3)).count(), 3);
    }

    #[test]
    fn figure_eight() {
        let d = parse("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
        assert_eq!(d.writhe(), 0);
        assert_eq!(oriented_resolution(&d).count(), 3);
        assert_eq!(s_plus(&d), 2);
        assert_eq!(classify(&d).label(), "mixed");
    }

    #[test]
    fn split_diagram_has_no_genus() {
        let d = parse("PD[X[4,1,3,2],X[2,3,1,4]]").disjoint_union(&Diagram::unlink(1));
        assert!(matches!(seifert_genus(&d), Err(LinkError::Disconnected(2))));
    }
}
