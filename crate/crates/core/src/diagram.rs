//! Oriented link diagrams encoded as PD codes.
//!
//! A crossing `X[a,b,c,d]` lists its four edge ids counterclockwise, starting
//! at the incoming under-edge `a`. The under-strand runs `a -> c`; the crossing
//! is positive iff the over-strand runs `d -> b`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{LinkError, Result};

pub type EdgeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [EdgeId; 4],
    over_d_to_b: bool,
}

impl Crossing {
    pub fn sign(&self) -> i32 {
        if self.over_d_to_b {
            1
        } else {
            -1
        }
    }

    pub fn is_positive(&self) -> bool {
        self.over_d_to_b
    }

    pub fn under_in(&self) -> EdgeId {
        self.edges[0]
    }

    pub fn under_out(&self) -> EdgeId {
        self.edges[2]
    }

    pub fn over_in(&self) -> EdgeId {
        if self.over_d_to_b {
            self.edges[3]
        } else {
            self.edges[1]
        }
    }

    pub fn over_out(&self) -> EdgeId {
        if self.over_d_to_b {
            self.edges[1]
        } else {
            self.edges[3]
        }
    }

    /// Slot pairs joined by the `bit`-smoothing: 0 joins {a,b},{c,d}; 1 joins {a,d},{b,c}.
    pub fn smoothing_slots(bit: u8) -> [(usize, usize); 2] {
        if bit == 0 {
            [(0, 1), (2, 3)]
        } else {
            [(0, 3), (1, 2)]
        }
    }

    /// Edge pairs joined by the `bit`-smoothing.
    pub fn smoothing(&self, bit: u8) -> [(EdgeId, EdgeId); 2] {
        let s = Self::smoothing_slots(bit);
        [
            (self.edges[s[0].0], self.edges[s[0].1]),
            (self.edges[s[1].0], self.edges[s[1].1]),
        ]
    }

    /// The smoothing that respects orientation (0 for positive, 1 for negative).
    pub fn oriented_bit(&self) -> u8 {
        if self.over_d_to_b {
            0
        } else {
            1
        }
    }
}

/// Symmetric integer matrix of pairwise linking numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingMatrix(pub Vec<Vec<i64>>);

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|&x| x == 0)
    }

    /// Σ_{i<j} lk(i,j).
    pub fn total(&self) -> i64 {
        let n = self.size();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.0[i][j])
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    name: Option<String>,
    crossings: Vec<Crossing>,
    loops: usize,
    components: Vec<Vec<EdgeId>>,
    edge_component: BTreeMap<EdgeId, usize>,
}

const IN: i8 = 1;
const OUT: i8 = -1;

struct Orienter {
    role: Vec<i8>,
    stack: Vec<usize>,
    partner: Vec<usize>,
}

impl Orienter {
    fn set(&mut self, s: usize, r: i8) -> Result<()> {
        match self.role[s] {
            0 => {
                self.role[s] = r;
                self.stack.push(s);
                Ok(())
            }
            x if x == r => Ok(()),
            _ => Err(LinkError::InconsistentOrientation(s / 4)),
        }
    }

    fn propagate(&mut self) -> Result<()> {
        while let Some(s) = self.stack.pop() {
            let r = self.role[s];
            self.set(self.partner[s], -r)?;
            self.set(s - s % 4 + (s % 4 + 2) % 4, -r)?;
        }
        Ok(())
    }
}

/// Assigns a direction to every over-strand. Returns `d -> b` flags per crossing.
fn orient(tuples: &[[EdgeId; 4]], hint: Option<&[bool]>) -> Result<Vec<bool>> {
    let n = tuples.len();
    let mut slots: BTreeMap<EdgeId, Vec<usize>> = BTreeMap::new();
    for (k, t) in tuples.iter().enumerate() {
        for (p, &e) in t.iter().enumerate() {
            if e == 0 {
                return Err(LinkError::ZeroEdge(k));
            }
            slots.entry(e).or_default().push(4 * k + p);
        }
    }
    let mut partner = vec![0usize; 4 * n];
    for (&e, v) in &slots {
        match v.len() {
            1 => return Err(LinkError::DanglingEdge(e)),
            2 => {
                partner[v[0]] = v[1];
                partner[v[1]] = v[0];
            }
            c => return Err(LinkError::EdgeOveruse { edge: e, count: c }),
        }
    }

    let mut st = Orienter {
        role: vec![0i8; 4 * n],
        stack: Vec::new(),
        partner,
    };
    for k in 0..n {
        st.set(4 * k, IN)?;
        st.set(4 * k + 2, OUT)?;
        if let Some(h) = hint {
            st.set(4 * k + 3, if h[k] { IN } else { OUT })?;
        }
    }
    st.propagate()?;
    for k in 0..n {
        if st.role[4 * k + 3] == 0 {
            // Component never passes under: read the direction off the labels.
            let (b, d) = (tuples[k][1], tuples[k][3]);
            let d_to_b = b == d + 1 || d > b + 1;
            st.set(4 * k + 3, if d_to_b { IN } else { OUT })?;
            st.propagate()?;
        }
    }
    let role = st.role;
    Ok((0..n).map(|k| role[4 * k + 3] == IN).collect())
}

impl Diagram {
    /// Builds a diagram from PD tuples, inferring over-strand directions.
    pub fn from_pd(tuples: Vec<[EdgeId; 4]>, loops: usize, name: Option<String>) -> Result<Self> {
        let dirs = orient(&tuples, None)?;
        Self::assemble(tuples, dirs, loops, name)
    }

    /// Builds a diagram whose over-strand directions are given explicitly.
    pub fn from_oriented(
        tuples: Vec<[EdgeId; 4]>,
        d_to_b: Vec<bool>,
        loops: usize,
        name: Option<String>,
    ) -> Result<Self> {
        assert_eq!(tuples.len(), d_to_b.len());
        let dirs = orient(&tuples, Some(&d_to_b))?;
        Self::assemble(tuples, dirs, loops, name)
    }

    /// The crossing-free unlink with `loops` components.
    pub fn unlink(loops: usize) -> Self {
        Self::assemble(Vec::new(), Vec::new(), loops, None).expect("empty diagram is valid")
    }

    fn assemble(
        tuples: Vec<[EdgeId; 4]>,
        dirs: Vec<bool>,
        loops: usize,
        name: Option<String>,
    ) -> Result<Self> {
        let crossings: Vec<Crossing> = tuples
            .iter()
            .zip(&dirs)
            .map(|(&edges, &over_d_to_b)| Crossing { edges, over_d_to_b })
            .collect();
        // next[e] = edge that follows e along its component.
        let mut next: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        for c in &crossings {
            next.insert(c.under_in(), c.under_out());
            next.insert(c.over_in(), c.over_out());
        }
        let mut edge_component = BTreeMap::new();
        let mut components = Vec::new();
        for &start in next.keys() {
            if edge_component.contains_key(&start) {
                continue;
            }
            let idx = components.len();
            let mut comp = Vec::new();
            let mut e = start;
            loop {
                if edge_component.insert(e, idx).is_some() {
                    return Err(LinkError::BrokenSuccession(e));
                }
                comp.push(e);
                e = *next.get(&e).ok_or(LinkError::BrokenSuccession(e))?;
                if e == start {
                    break;
                }
                if comp.len() > next.len() {
                    return Err(LinkError::BrokenSuccession(start));
                }
            }
            components.push(comp);
        }
        Ok(Diagram {
            name,
            crossings,
            loops,
            components,
            edge_component,
        })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    /// Cyclic edge sequences of the components that meet at least one crossing.
    pub fn crossing_components(&self) -> &[Vec<EdgeId>] {
        &self.components
    }

    /// Number of link components ℓ (crossing-free loops included, listed last).
    pub fn component_count(&self) -> usize {
        self.components.len() + self.loops
    }

    pub fn component_of(&self, e: EdgeId) -> usize {
        self.edge_component[&e]
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_component.keys().copied()
    }

    pub fn max_edge(&self) -> EdgeId {
        self.edge_component.keys().next_back().copied().unwrap_or(0)
    }

    pub fn n_plus(&self) -> usize {
        self.crossings.iter().filter(|c| c.is_positive()).count()
    }

    pub fn n_minus(&self) -> usize {
        self.crossings.len() - self.n_plus()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign() as i64).sum()
    }

    /// Component indices (under, over) of a crossing.
    pub fn crossing_components_of(&self, k: usize) -> (usize, usize) {
        let c = &self.crossings[k];
        (self.component_of(c.edges[0]), self.component_of(c.edges[1]))
    }

    fn check_component(&self, i: usize) -> Result<()> {
        if i >= self.component_count() {
            return Err(LinkError::BadComponent {
                index: i,
                count: self.component_count(),
            });
        }
        Ok(())
    }

    /// Signed count of self-crossings of component `i`.
    pub fn component_writhe(&self, i: usize) -> Result<i64> {
        self.check_component(i)?;
        Ok((0..self.crossings.len())
            .filter(|&k| self.crossing_components_of(k) == (i, i))
            .map(|k| self.crossings[k].sign() as i64)
            .sum())
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let l = self.component_count();
        let mut m = vec![vec![0i64; l]; l];
        for k in 0..self.crossings.len() {
            let (i, j) = self.crossing_components_of(k);
            if i != j {
                let s = self.crossings[k].sign() as i64;
                m[i][j] += s;
                m[j][i] += s;
            }
        }
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                assert!(*x % 2 == 0, "odd signed inter-component crossing count");
                *x /= 2;
            }
        }
        LinkingMatrix(m)
    }

    fn tuples(&self) -> Vec<[EdgeId; 4]> {
        self.crossings.iter().map(|c| c.edges).collect()
    }

    fn directions(&self) -> Vec<bool> {
        self.crossings.iter().map(|c| c.over_d_to_b).collect()
    }

    /// Renumbers edges 1..2n consecutively along each component in order.
    pub fn normalized(&self) -> Diagram {
        let mut map = HashMap::new();
        let mut next = 1;
        for comp in &self.components {
            for &e in comp {
                map.insert(e, next);
                next += 1;
            }
        }
        let tuples = self
            .crossings
            .iter()
            .map(|c| c.edges.map(|e| map[&e]))
            .collect();
        Diagram::from_oriented(tuples, self.directions(), self.loops, self.name.clone())
            .expect("relabelling preserves validity")
    }

    /// Mirror image: every crossing switches, every sign negates.
    pub fn mirror(&self) -> Diagram {
        let mut tuples = Vec::new();
        let mut dirs = Vec::new();
        for c in &self.crossings {
            let [a, b, cc, d] = c.edges;
            if c.over_d_to_b {
                tuples.push([d, a, b, cc]);
            } else {
                tuples.push([b, cc, d, a]);
            }
            dirs.push(!c.over_d_to_b);
        }
        Diagram::from_oriented(tuples, dirs, self.loops, self.name.clone())
            .expect("mirror preserves validity")
            .normalized()
    }

    /// Reverses the orientation of component `i`.
    pub fn reverse(&self, i: usize) -> Result<Diagram> {
        self.check_component(i)?;
        if i >= self.components.len() {
            return Ok(self.clone());
        }
        let mut tuples = Vec::new();
        let mut dirs = Vec::new();
        for k in 0..self.crossings.len() {
            let c = &self.crossings[k];
            let (u, o) = self.crossing_components_of(k);
            let [a, b, cc, d] = c.edges;
            let mut dir = c.over_d_to_b;
            if u == i {
                tuples.push([cc, d, a, b]);
                dir = !dir;
            } else {
                tuples.push(c.edges);
            }
            if o == i {
                dir = !dir;
            }
            dirs.push(dir);
        }
        Ok(
            Diagram::from_oriented(tuples, dirs, self.loops, self.name.clone())?
                .normalized(),
        )
    }

    /// The sublink with component `i` deleted. Strands that crossed it are
    /// rejoined; components left without crossings become loops.
    pub fn remove_component(&self, i: usize) -> Result<Diagram> {
        self.remove_components(&[i])
    }

    /// The sublink made of the listed components.
    pub fn sublink(&self, keep: &[usize]) -> Result<Diagram> {
        for &i in keep {
            self.check_component(i)?;
        }
        let drop: Vec<usize> = (0..self.component_count()).filter(|i| !keep.contains(i)).collect();
        self.remove_components(&drop)
    }

    fn remove_components(&self, drop: &[usize]) -> Result<Diagram> {
        for &i in drop {
            self.check_component(i)?;
        }
        let gone = |c: usize| drop.contains(&c);
        let ncc = self.components.len();
        let loops = self.loops - (ncc..ncc + self.loops).filter(|&c| gone(c)).count();
        let max = self.max_edge() as usize;
        let mut merge = UnionFind::<usize>::new(max + 1);
        let mut kept = Vec::new();
        let mut dirs = Vec::new();
        for (k, c) in self.crossings.iter().enumerate() {
            let (u, o) = self.crossing_components_of(k);
            match (gone(u), gone(o)) {
                (true, true) => {}
                (true, false) => {
                    merge.union(c.over_in() as usize, c.over_out() as usize);
                }
                (false, true) => {
                    merge.union(c.under_in() as usize, c.under_out() as usize);
                }
                (false, false) => {
                    kept.push(c.edges);
                    dirs.push(c.over_d_to_b);
                }
            }
        }
        let mut used = vec![false; max + 1];
        for t in kept.iter_mut() {
            for e in t.iter_mut() {
                *e = merge.find(*e as usize) as EdgeId;
                used[*e as usize] = true;
            }
        }
        let orphans = (0..ncc)
            .filter(|&j| !gone(j))
            .filter(|&j| !used[merge.find(self.components[j][0] as usize)])
            .count();
        Ok(Diagram::from_oriented(kept, dirs, loops + orphans, None)?.normalized())
    }

    /// Split union; components of `self` come first, loops of both at the end.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let off = self.max_edge();
        let mut tuples = self.tuples();
        tuples.extend(other.crossings.iter().map(|c| c.edges.map(|e| e + off)));
        let mut dirs = self.directions();
        dirs.extend(other.directions());
        Diagram::from_oriented(tuples, dirs, self.loops + other.loops, None)
            .expect("union of valid diagrams is valid")
            .normalized()
    }

    /// Connected pieces of the diagram graph; each loop counts once.
    pub fn split_components(&self) -> usize {
        self.crossing_groups().len() + self.loops
    }

    /// Crossing indices of each connected piece that has crossings.
    fn crossing_groups(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut uf = UnionFind::<usize>::new(n);
        let mut seen: HashMap<EdgeId, usize> = HashMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            for &e in &c.edges {
                if let Some(&j) = seen.get(&e) {
                    uf.union(j, k);
                } else {
                    seen.insert(e, k);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..n {
            groups.entry(uf.find(k)).or_default().push(k);
        }
        groups.into_values().collect()
    }

    /// The connected pieces of the diagram as separate diagrams, loops last.
    pub fn pieces(&self) -> Vec<Diagram> {
        let mut out: Vec<Diagram> = self
            .crossing_groups()
            .into_iter()
            .map(|g| {
                let tuples = g.iter().map(|&k| self.crossings[k].edges).collect();
                let dirs = g.iter().map(|&k| self.crossings[k].over_d_to_b).collect();
                Diagram::from_oriented(tuples, dirs, 0, None)
                    .expect("a connected piece is a valid diagram")
                    .normalized()
            })
            .collect();
        out.extend((0..self.loops).map(|_| Diagram::unlink(1)));
        out
    }

    pub fn is_alternating(&self) -> bool {
        // Along every component, over and under passages alternate.
        let mut role: HashMap<EdgeId, (bool, bool)> = HashMap::new();
        for c in &self.crossings {
            // (enters as over?, leaves as over?)
            role.entry(c.under_in()).or_default().1 = false;
            role.entry(c.under_out()).or_default().0 = false;
            role.entry(c.over_in()).or_default().1 = true;
            role.entry(c.over_out()).or_default().0 = true;
        }
        role.values().all(|&(from_over, to_over)| from_over != to_over)
    }

    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.edges;
                format!("X[{a},{b},{cc},{d}]")
            })
            .collect();
        if self.loops > 0 {
            parts.push(format!("Loop[{}]", self.loops));
        }
        format!("PD[{}]", parts.join(","))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PdJson::from(self)).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PdJson::from(self)).expect("serializable")
    }

    /// Parses PD-text (`PD[X[..],...]`) or PD-JSON.
    pub fn parse(text: &str) -> Result<Diagram> {
        let t = text.trim();
        if t.starts_with('{') {
            let j: PdJson =
                serde_json::from_str(t).map_err(|e| LinkError::Malformed(e.to_string()))?;
            return j.into_diagram();
        }
        parse_pd_text(t)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct PdJson {
    #[serde(default)]
    name: Option<String>,
    crossings: Vec<Vec<i64>>,
    #[serde(default)]
    loops: usize,
}

impl From<&Diagram> for PdJson {
    fn from(d: &Diagram) -> Self {
        PdJson {
            name: d.name.clone(),
            crossings: d
                .crossings
                .iter()
                .map(|c| c.edges.iter().map(|&e| e as i64).collect())
                .collect(),
            loops: d.loops,
        }
    }
}

impl PdJson {
    fn into_diagram(self) -> Result<Diagram> {
        let mut tuples = Vec::new();
        for (k, c) in self.crossings.iter().enumerate() {
            if c.len() != 4 {
                return Err(LinkError::Arity {
                    index: k,
                    found: c.len(),
                });
            }
            let mut t = [0u32; 4];
            for (p, &e) in c.iter().enumerate() {
                if e <= 0 || e > u32::MAX as i64 {
                    return Err(LinkError::ZeroEdge(k));
                }
                t[p] = e as u32;
            }
            tuples.push(t);
        }
        Diagram::from_pd(tuples, self.loops, self.name)
    }
}

fn parse_pd_text(t: &str) -> Result<Diagram> {
    let s: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix("PD[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| LinkError::Malformed("expected PD[...]".into()))?;
    let mut tuples = Vec::new();
    let mut loops = 0usize;
    let mut rest = inner;
    while !rest.is_empty() {
        let open = rest
            .find('[')
            .ok_or_else(|| LinkError::Malformed(format!("unexpected {rest:?}")))?;
        let close = rest[open..]
            .find(']')
            .map(|c| c + open)
            .ok_or_else(|| LinkError::Malformed("unbalanced brackets".into()))?;
        let head = &rest[..open];
        let body = &rest[open + 1..close];
        let nums: Vec<i64> = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|x| {
                    x.parse::<i64>()
                        .map_err(|_| LinkError::Malformed(format!("bad integer {x:?}")))
                })
                .collect::<Result<_>>()?
        };
        match head {
            "X" => {
                let k = tuples.len();
                if nums.len() != 4 {
                    return Err(LinkError::Arity {
                        index: k,
                        found: nums.len(),
                    });
                }
                if nums.iter().any(|&e| e <= 0 || e > u32::MAX as i64) {
                    return Err(LinkError::ZeroEdge(k));
                }
                tuples.push([nums[0] as u32, nums[1] as u32, nums[2] as u32, nums[3] as u32]);
            }
            "Loop" => {
                if nums.len() != 1 || nums[0] < 0 {
                    return Err(LinkError::Malformed("Loop[k] needs one count".into()));
                }
                loops += nums[0] as usize;
            }
            other => return Err(LinkError::Malformed(format!("unknown element {other:?}"))),
        }
        rest = &rest[close + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    Diagram::from_pd(tuples, loops, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEFT_TREFOIL: &str = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";

    #[test]
    fn left_trefoil_signs() {
        let d = Diagram::parse(LEFT_TREFOIL).unwrap();
        assert_eq!(d.component_count(), 1);
        assert!(d.crossings().iter().all(|c| c.sign() == -1));
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.component_writhe(0).unwrap(), -3);
    }

    #[test]
    fn removing_components() {
        let hopf = Diagram::parse("PD[X[4,1,3,2],X[2,3,1,4]]").unwrap();
        let u = hopf.remove_component(1).unwrap();
        assert_eq!((u.crossing_count(), u.loops()), (0, 1));
        let two = hopf.disjoint_union(&Diagram::parse(LEFT_TREFOIL).unwrap());
        let t = two.remove_component(0).unwrap();
        assert_eq!((t.crossing_count(), t.component_count(), t.writhe()), (3, 2, -3));
        assert!(t.remove_component(2).is_err());
        assert_eq!(t.remove_component(1).unwrap().component_count(), 1);
        let k = two.sublink(&[2]).unwrap();
        assert_eq!((k.crossing_count(), k.component_count(), k.writhe()), (3, 1, -3));
        let p = two.pieces();
        assert_eq!(p.iter().map(|d| d.crossing_count()).collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn dangling_edge() {
        let e = Diagram::parse("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,7]]").unwrap_err();
        assert!(matches!(e, LinkError::DanglingEdge(_)), "{e}");
        assert!(e.to_string().contains("dangling edge"));
    }

    #[test]
    fn arity_and_syntax() {
        assert!(matches!(
            Diagram::parse("PD[X[1,2,3]]"),
            Err(LinkError::Arity { .. })
        ));
        assert!(Diagram::parse("X[1,2,3,4]").is_err());
        assert!(matches!(
            Diagram::parse("PD[X[1,1,1,2]]"),
            Err(LinkError::EdgeOveruse { .. }) | Err(LinkError::DanglingEdge(_))
        ));
    }

    #[test]
    fn inconsistent_orientation() {
        // Both under-strands claim edge 1 as incoming.
        let e = Diagram::parse("PD[X[1,3,2,4],X[1,4,2,3]]").unwrap_err();
        assert!(matches!(e, LinkError::InconsistentOrientation(_)), "{e}");
    }

    #[test]
    fn unknot_loop() {
        let d = Diagram::parse("PD[Loop[1]]").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.to_pd_string(), "PD[Loop[1]]");
    }

    #[test]
    fn kink_orientation() {
        let d = Diagram::parse("PD[X[2,2,1,1]]").unwrap();
        assert_eq!(d.writhe(), 1);
        let d = Diagram::parse("PD[X[1,2,2,1]]").unwrap();
        assert_eq!(d.writhe(), -1);
    }

    #[test]
    fn hopf_linking() {
        // X[4,1,3,2],X[2,3,1,4] is the negative Hopf link under this convention.
        let d = Diagram::parse("PD[X[4,1,3,2],X[2,3,1,4]]").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.linking_matrix(), LinkingMatrix(vec![vec![0, -1], vec![-1, 0]]));
        let m = d.mirror();
        assert_eq!(m.linking_matrix(), LinkingMatrix(vec![vec![0, 1], vec![1, 0]]));
        let r = m.reverse(1).unwrap();
        assert_eq!(r.linking_matrix().get(0, 1), -1);
        assert_eq!(m.split_components(), 1);
    }

    #[test]
    fn round_trip_text_and_json() {
        let d = Diagram::parse(LEFT_TREFOIL).unwrap();
        assert_eq!(d.to_pd_string(), LEFT_TREFOIL);
        assert_eq!(Diagram::parse(&d.to_pd_string()).unwrap(), d);
        let j = d.clone().with_name("3_1*").to_json();
        let back = Diagram::parse(&j).unwrap();
        assert_eq!(back.to_json(), j);
        assert_eq!(back.name(), Some("3_1*"));
    }

    #[test]
    fn union_and_split() {
        let t = Diagram::parse(LEFT_TREFOIL).unwrap();
        let u = t.disjoint_union(&Diagram::unlink(1));
        assert_eq!(u.component_count(), 2);
        assert_eq!(u.split_components(), 2);
        assert_eq!(u.component_writhe(0).unwrap(), -3);
        assert_eq!(u.component_writhe(1).unwrap(), 0);
        let uu = Diagram::unlink(1).disjoint_union(&Diagram::unlink(1));
        assert_eq!((uu.component_count(), uu.crossing_count()), (2, 0));
        assert!(t.reverse(3).is_err());
    }

    #[test]
    fn mirror_of_left_trefoil() {
        let d = Diagram::parse(LEFT_TREFOIL).unwrap().mirror();
        assert_eq!(d.writhe(), 3);
        assert!(d.is_alternating());
    }
}
