//! Exact sparse linear algebra over ℚ.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::q::Q;

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(u32, Q)>;

/// `a + f·b` for sparse vectors.
pub fn axpy(a: &[(u32, Q)], f: &Q, b: &[(u32, Q)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, f * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(f * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a sparse matrix given by rows. Pivots are taken column by column,
/// shortest column first, preferring short rows with unit entries.
pub fn rank(rows: Vec<SparseVec>) -> usize {
    let mut rows: Vec<Option<SparseVec>> = rows
        .into_iter()
        .map(|r| if r.is_empty() { None } else { Some(r) })
        .collect();
    let mut cols: FxHashMap<u32, FxHashSet<u32>> = FxHashMap::default();
    for (i, r) in rows.iter().enumerate() {
        if let Some(r) = r {
            for (c, _) in r {
                cols.entry(*c).or_default().insert(i as u32);
            }
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> =
        cols.iter().map(|(&c, s)| Reverse((s.len(), c))).collect();
    let mut rank = 0;
    while let Some(Reverse((count, c))) = heap.pop() {
        let Some(set) = cols.get(&c) else { continue };
        if set.len() != count {
            if !set.is_empty() {
                heap.push(Reverse((set.len(), c)));
            }
            continue;
        }
        if set.is_empty() {
            continue;
        }
        // Choose the pivot row in column c.
        let p = *set
            .iter()
            .min_by_key(|&&r| {
                let row = rows[r as usize].as_ref().unwrap();
                let e = &row[row.binary_search_by_key(&c, |x| x.0).unwrap()].1;
                (row.len(), e.weight(), r)
            })
            .unwrap();
        let prow = rows[p as usize].take().unwrap();
        let pval = prow[prow.binary_search_by_key(&c, |x| x.0).unwrap()].1.clone();
        rank += 1;
        for (cc, _) in &prow {
            if let Some(s) = cols.get_mut(cc) {
                s.remove(&p);
            }
        }
        let others: Vec<u32> = cols[&c].iter().copied().collect();
        for r in others {
            let row = rows[r as usize].take().unwrap();
            let v = &row[row.binary_search_by_key(&c, |x| x.0).unwrap()].1;
            let f = -&v.div(&pval);
            let new = axpy(&row, &f, &prow);
            let before: FxHashSet<u32> = row.iter().map(|x| x.0).collect();
            let after: FxHashSet<u32> = new.iter().map(|x| x.0).collect();
            for cc in before.difference(&after) {
                cols.get_mut(cc).unwrap().remove(&r);
                let n = cols[cc].len();
                if n > 0 {
                    heap.push(Reverse((n, *cc)));
                }
            }
            for cc in after.difference(&before) {
                let s = cols.entry(*cc).or_default();
                s.insert(r);
                heap.push(Reverse((s.len(), *cc)));
            }
            if !new.is_empty() {
                rows[r as usize] = Some(new);
            }
        }
        cols.remove(&c);
        for (cc, _) in &prow {
            if let Some(s) = cols.get(cc) {
                if !s.is_empty() {
                    heap.push(Reverse((s.len(), *cc)));
                }
            }
        }
    }
    rank
}

/// Incremental column echelon form keyed by the largest index of each vector.
#[derive(Default)]
pub struct Echelon {
    pivots: FxHashMap<u32, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a vector; returns true when it was independent of the previous ones.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        while let Some((low, val)) = v.last().cloned() {
            match self.pivots.get(&low) {
                Some(p) => {
                    let f = -&val.div(&p.last().unwrap().1);
                    v = axpy(&v, &f, p);
                }
                None => {
                    self.pivots.insert(low, v);
                    return true;
                }
            }
        }
        false
    }
}

/// `out[k]` = rank of the first `k` vectors.
pub fn prefix_ranks(vectors: impl IntoIterator<Item = SparseVec>) -> Vec<usize> {
    let mut e = Echelon::new();
    let mut out = vec![0];
    for v in vectors {
        e.insert(v);
        out.push(e.rank());
    }
    out
}
