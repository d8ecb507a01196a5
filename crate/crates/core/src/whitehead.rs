//! Fully clasped and reduced Whitehead doubles as PD diagrams.
//!
//! A doubled component is replaced by two antiparallel copies: the left copy
//! runs along the original orientation, the right copy against it. Every
//! crossing of the original becomes a grid of crossings between the copies.
//! A twist region and a clasp are inserted on the lowest-numbered edge.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, EdgeId};
use crate::error::{LinkError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Clasp {
    Positive,
    Negative,
}

impl Clasp {
    pub fn sign(self) -> i64 {
        match self {
            Clasp::Positive => 1,
            Clasp::Negative => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Clasp::Positive => '+',
            Clasp::Negative => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Strand {
    Left,
    Right,
    Single,
}

#[derive(Default)]
struct Builder {
    next: EdgeId,
    tuples: Vec<[EdgeId; 4]>,
    dirs: Vec<bool>,
}

impl Builder {
    fn fresh(&mut self) -> EdgeId {
        self.next += 1;
        self.next
    }

    fn push(&mut self, t: [EdgeId; 4], positive: bool) {
        self.tuples.push(t);
        self.dirs.push(positive);
    }

    /// `k` full twists followed by a clasp. L enters at `lw` and leaves at
    /// `le`; R enters at `re` and leaves at `rw`.
    fn region(&mut self, k: i64, clasp: Clasp, lw: EdgeId, le: EdgeId, re: EdgeId, rw: EdgeId) {
        let m = 2 * k.unsigned_abs() as usize;
        // Antiparallel strands: a right-handed twist gives negative crossings.
        let positive = k < 0;
        let mut l = vec![lw];
        let mut r = vec![rw];
        for _ in 0..m {
            l.push(self.fresh());
            r.push(self.fresh());
        }
        for j in 1..=m {
            let (li, lo, ri, ro) = (l[j - 1], l[j], r[j], r[j - 1]);
            match (j % 2 == 1, positive) {
                (true, true) => self.push([li, ro, lo, ri], true),
                (true, false) => self.push([ri, li, ro, lo], false),
                (false, true) => self.push([ri, lo, ro, li], true),
                (false, false) => self.push([li, ri, lo, ro], false),
            }
        }
        let (lin, rout) = (l[m], r[m]);
        let lh = self.fresh();
        let rh = self.fresh();
        match clasp {
            Clasp::Positive => {
                self.push([rh, lh, le, lin], true);
                self.push([lh, rh, rout, re], true);
            }
            Clasp::Negative => {
                self.push([lin, rh, lh, le], false);
                self.push([re, lh, rh, rout], false);
            }
        }
    }
}

/// Doubles every component `i` with `plan[i] = Some(t_i)`.
fn double(d: &Diagram, plan: &[Option<i64>], clasp: Clasp) -> Result<Diagram> {
    let ncc = d.crossing_components().len();
    let mut b = Builder::default();
    // (tail-end label, head-end label) per edge copy.
    let mut labels: HashMap<(EdgeId, Strand), (EdgeId, EdgeId)> = HashMap::new();
    for (ci, comp) in d.crossing_components().iter().enumerate() {
        match plan[ci] {
            Some(t) => {
                let k = t - d.component_writhe(ci)?;
                for (idx, &e) in comp.iter().enumerate() {
                    if idx == 0 {
                        let (lt, lh, rt, rh) = (b.fresh(), b.fresh(), b.fresh(), b.fresh());
                        labels.insert((e, Strand::Left), (lt, lh));
                        labels.insert((e, Strand::Right), (rt, rh));
                        b.region(k, clasp, lt, lh, rt, rh);
                    } else {
                        let (x, y) = (b.fresh(), b.fresh());
                        labels.insert((e, Strand::Left), (x, x));
                        labels.insert((e, Strand::Right), (y, y));
                    }
                }
            }
            None => {
                for &e in comp {
                    let x = b.fresh();
                    labels.insert((e, Strand::Single), (x, x));
                }
            }
        }
    }
    let mut loops = 0;
    for li in 0..d.loops() {
        match plan[ncc + li] {
            Some(t) => {
                let (l, r) = (b.fresh(), b.fresh());
                b.region(t, clasp, l, l, r, r);
            }
            None => loops += 1,
        }
    }

    let doubled = |c: usize| plan[c].is_some();
    for (k, c) in d.crossings().iter().enumerate() {
        let [ea, eb, ec, ed] = c.edges;
        let (uc, oc) = d.crossing_components_of(k);
        let east = c.is_positive();
        // (strand, coordinate, runs north / runs east)
        let under: Vec<(Strand, i32, bool)> = if doubled(uc) {
            vec![(Strand::Left, -1, true), (Strand::Right, 1, false)]
        } else {
            vec![(Strand::Single, 0, true)]
        };
        let over: Vec<(Strand, i32, bool)> = match (doubled(oc), east) {
            (true, true) => vec![(Strand::Left, 1, true), (Strand::Right, -1, false)],
            (true, false) => vec![(Strand::Left, -1, false), (Strand::Right, 1, true)],
            (false, _) => vec![(Strand::Single, 0, east)],
        };
        let vertical: HashMap<i32, EdgeId> = if over.len() == 2 {
            under.iter().map(|u| (u.1, b.fresh())).collect()
        } else {
            HashMap::new()
        };
        let horizontal: HashMap<i32, EdgeId> = if under.len() == 2 {
            over.iter().map(|o| (o.1, b.fresh())).collect()
        } else {
            HashMap::new()
        };
        let ext = |e: EdgeId, s: Strand, incoming: bool| -> (EdgeId, bool) {
            let (tail, head) = labels[&(e, s)];
            (if incoming { head } else { tail }, incoming)
        };
        let (ymin, ymax) = (over.iter().map(|o| o.1).min().unwrap(), over.iter().map(|o| o.1).max().unwrap());
        let (xmin, xmax) = (under.iter().map(|u| u.1).min().unwrap(), under.iter().map(|u| u.1).max().unwrap());
        for &(su, x, north) in &under {
            for &(so, y, runs_east) in &over {
                let s_arm = if y == ymin { ext(ea, su, north) } else { (vertical[&x], north) };
                let n_arm = if y == ymax { ext(ec, su, !north) } else { (vertical[&x], !north) };
                let w_arm = if x == xmin { ext(ed, so, runs_east) } else { (horizontal[&y], runs_east) };
                let e_arm = if x == xmax { ext(eb, so, !runs_east) } else { (horizontal[&y], !runs_east) };
                let arms = [s_arm, e_arm, n_arm, w_arm];
                let start = if north { 0 } else { 2 };
                let rot: Vec<(EdgeId, bool)> = (0..4).map(|i| arms[(start + i) % 4]).collect();
                b.push([rot[0].0, rot[1].0, rot[2].0, rot[3].0], rot[3].1);
            }
        }
    }
    Ok(Diagram::from_oriented(b.tuples, b.dirs, loops, None)?.normalized())
}

/// W_±(L, t̲): every component doubled with framing t_i and clasped.
pub fn fully_clasped(d: &Diagram, twists: &[i64], clasp: Clasp) -> Result<Diagram> {
    if twists.len() != d.component_count() {
        return Err(LinkError::TwistLength {
            expected: d.component_count(),
            found: twists.len(),
        });
    }
    let plan: Vec<Option<i64>> = twists.iter().map(|&t| Some(t)).collect();
    double(d, &plan, clasp)
}

/// W′_±(L, t; L_i): only component `i` doubled, the others copied verbatim.
pub fn reduced(d: &Diagram, t: i64, component: usize, clasp: Clasp) -> Result<Diagram> {
    let l = d.component_count();
    if component >= l {
        return Err(LinkError::BadComponent {
            index: component,
            count: l,
        });
    }
    let mut plan = vec![None; l];
    plan[component] = Some(t);
    double(d, &plan, clasp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn hopf() -> Diagram {
        BraidWord::new(2, vec![1, 1]).unwrap().closure()
    }

    #[test]
    fn hopf_double_counts() {
        let h = hopf();
        for (t, n) in [((0, 1), 14), ((1, 2), 18), ((0, 0), 12), ((-1, -1), 16)] {
            let w = fully_clasped(&h, &[t.0, t.1], Clasp::Positive).unwrap();
            assert_eq!(w.crossing_count(), n);
            assert_eq!(w.component_count(), 2);
            assert!(w.linking_matrix().is_zero());
        }
        let r = reduced(&h, 1, 0, Clasp::Positive).unwrap();
        assert_eq!(r.crossing_count(), 8);
        assert!(r.linking_matrix().is_zero());
    }

    #[test]
    fn doubled_writhe() {
        let tref = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure();
        for t in -2..=2 {
            for clasp in [Clasp::Positive, Clasp::Negative] {
                let w = fully_clasped(&tref, &[t], clasp).unwrap();
                assert_eq!(w.writhe(), 2 * (3 - t) + 2 * clasp.sign());
            }
        }
    }

    #[test]
    fn unknot_doubles() {
        let u = Diagram::unlink(1);
        let w = fully_clasped(&u, &[0], Clasp::Positive).unwrap();
        assert_eq!(w.to_pd_string(), "PD[X[4,2,1,1],X[2,4,3,3]]");
        let w = fully_clasped(&u, &[-1], Clasp::Positive).unwrap();
        assert_eq!((w.crossing_count(), w.writhe()), (4, 4));
        let w = reduced(&Diagram::unlink(2), 0, 0, Clasp::Positive).unwrap();
        assert_eq!((w.component_count(), w.loops()), (2, 1));
    }

    #[test]
    fn errors() {
        assert!(fully_clasped(&hopf(), &[0], Clasp::Positive).is_err());
        assert!(reduced(&hopf(), 0, 2, Clasp::Positive).is_err());
    }
}
