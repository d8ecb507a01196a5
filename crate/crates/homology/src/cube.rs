//! The full resolution cube: one generator per state and circle labelling.

use linkconc_core::Diagram;

use crate::complex::{ChainComplex, Generator, Theory};
use crate::error::{HomologyError, Result};
use crate::linalg::SparseVec;
use crate::q::Q;

pub const DEFAULT_NAIVE_LIMIT: usize = 12;

/// Circle index of every edge in one state, plus the circle count.
struct State {
    circle_of: Vec<u8>,
    circles: usize,
}

fn resolve(d: &Diagram, s: u64) -> State {
    let max = d.max_edge() as usize;
    let mut parent: Vec<usize> = (0..=max).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, c) in d.crossings().iter().enumerate() {
        for (a, b) in c.smoothing(((s >> i) & 1) as u8) {
            let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    // Circles are numbered by their smallest edge; loops come after.
    let mut index = vec![u8::MAX; max + 1];
    let mut circle_of = vec![u8::MAX; max + 1];
    let mut circles = 0;
    for e in d.edges() {
        let r = find(&mut parent, e as usize);
        if index[r] == u8::MAX {
            index[r] = circles as u8;
            circles += 1;
        }
        circle_of[e as usize] = index[r];
    }
    State { circle_of, circles: circles + d.loops() }
}

/// Khovanov (or Lee) complex of the full 2ⁿ cube. Bit 1 of a label mask means x.
pub fn cube_complex(d: &Diagram, theory: Theory, limit: usize) -> Result<ChainComplex> {
    let n = d.crossing_count();
    if n > limit || n > 24 {
        return Err(HomologyError::TooLarge { crossings: n, limit: limit.min(24) });
    }
    let edge_circles = |st: &State| st.circles - d.loops();
    let states: Vec<State> = (0..1u64 << n).map(|s| resolve(d, s)).collect();
    let mut offset = Vec::with_capacity(states.len() + 1);
    offset.push(0usize);
    for st in &states {
        offset.push(offset.last().unwrap() + (1usize << st.circles));
    }
    let (np, nm) = (d.n_plus() as i32, d.n_minus() as i32);
    let mut gens = Vec::with_capacity(*offset.last().unwrap());
    for (s, st) in states.iter().enumerate() {
        let r = (s as u64).count_ones() as i32;
        for mask in 0..(1u32 << st.circles) {
            gens.push(Generator {
                h: r - nm,
                q: st.circles as i32 - 2 * mask.count_ones() as i32 + r + np - 2 * nm,
            });
        }
    }
    let t = theory.t();
    let mut dd: Vec<SparseVec> = vec![Vec::new(); gens.len()];
    for (s, st) in states.iter().enumerate() {
        for (i, c) in d.crossings().iter().enumerate() {
            if (s >> i) & 1 == 1 {
                continue;
            }
            let s2 = s | (1 << i);
            let st2 = &states[s2];
            let sign = if (s & ((1 << i) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
            let [ea, eb, ec, _] = c.edges;
            let (c1, c2) = (st.circle_of[ea as usize] as usize, st.circle_of[ec as usize] as usize);
            // Image of each circle of s in s2.
            let mut image = vec![0usize; st.circles];
            for e in d.edges() {
                image[st.circle_of[e as usize] as usize] = st2.circle_of[e as usize] as usize;
            }
            for l in 0..d.loops() {
                image[edge_circles(st) + l] = edge_circles(st2) + l;
            }
            for mask in 0..(1u32 << st.circles) {
                let mut base = 0u32;
                for k in 0..st.circles {
                    if k != c1 && k != c2 && (mask >> k) & 1 == 1 {
                        base |= 1 << image[k];
                    }
                }
                let x1 = (mask >> c1) & 1 == 1;
                let mut out: Vec<(u32, i64)> = Vec::new();
                if c1 != c2 {
                    let m = image[c1];
                    let x2 = (mask >> c2) & 1 == 1;
                    match (x1, x2) {
                        (false, false) => out.push((base, 1)),
                        (true, true) => {
                            if t != 0 {
                                out.push((base, t));
                            }
                        }
                        _ => out.push((base | 1 << m, 1)),
                    }
                } else {
                    let (a, b) = (st2.circle_of[ea as usize] as usize, st2.circle_of[eb as usize] as usize);
                    if x1 {
                        out.push((base | 1 << a | 1 << b, 1));
                        if t != 0 {
                            out.push((base, t));
                        }
                    } else {
                        out.push((base | 1 << a, 1));
                        out.push((base | 1 << b, 1));
                    }
                }
                let src = offset[s] + mask as usize;
                let mut row: SparseVec = out
                    .into_iter()
                    .map(|(m, v)| ((offset[s2] + m as usize) as u32, Q::int(sign * v)))
                    .collect();
                dd[src].append(&mut row);
            }
        }
    }
    for row in dd.iter_mut() {
        row.sort_by_key(|x| x.0);
    }
    Ok(ChainComplex { theory, gens, d: dd })
}
