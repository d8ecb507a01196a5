//! Finite bigraded cochain complexes over ℚ and their homology.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{HomologyError, Result};
use crate::linalg::{prefix_ranks, rank, SparseVec};
use crate::q::Q;
use crate::table::{BettiTable, GrTable};

/// Which Frobenius algebra: x² = 0 (Khovanov) or x² = 1 (Lee).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theory {
    Khovanov,
    Lee,
}

impl Theory {
    pub fn t(self) -> i64 {
        match self {
            Theory::Khovanov => 0,
            Theory::Lee => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub h: i32,
    pub q: i32,
}

/// Basis with gradings plus the differential, stored per source generator.
/// For Lee complexes `q` is the filtration degree.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub theory: Theory,
    pub gens: Vec<Generator>,
    pub d: Vec<SparseVec>,
}

/// A Lee complex, filtered by quantum degree.
pub type FilteredComplex = ChainComplex;

impl ChainComplex {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn entries(&self) -> usize {
        self.d.iter().map(|r| r.len()).sum()
    }

    /// Degree and filtration checks: d raises h by 1 and never lowers q;
    /// a Khovanov differential preserves q.
    pub fn check_gradings(&self) -> bool {
        self.d.iter().enumerate().all(|(s, row)| {
            row.iter().all(|(t, _)| {
                let (a, b) = (self.gens[s], self.gens[*t as usize]);
                b.h == a.h + 1
                    && match self.theory {
                        Theory::Khovanov => b.q == a.q,
                        Theory::Lee => b.q >= a.q,
                    }
            })
        })
    }

    /// True when d∘d vanishes.
    pub fn d_squared_is_zero(&self) -> bool {
        self.d.iter().all(|row| {
            let mut acc: FxHashMap<u32, Q> = FxHashMap::default();
            for (t, c) in row {
                for (u, e) in &self.d[*t as usize] {
                    let v = acc.entry(*u).or_default();
                    *v = &*v + &(c * e);
                }
            }
            acc.values().all(Q::is_zero)
        })
    }

    fn degrees(&self) -> BTreeSet<i32> {
        self.gens.iter().map(|g| g.h).collect()
    }

    fn in_degree(&self, h: i32) -> Vec<u32> {
        (0..self.gens.len() as u32).filter(|&i| self.gens[i as usize].h == h).collect()
    }

    /// Dimension of homology per homological degree, ignoring q.
    pub fn homology_by_degree(&self) -> BTreeMap<i32, usize> {
        let degs: Vec<i32> = self.degrees().into_iter().collect();
        let ranks: FxHashMap<i32, usize> = degs
            .par_iter()
            .map(|&h| {
                let rows = self.in_degree(h).into_iter().map(|g| self.d[g as usize].clone()).collect();
                (h, rank(rows))
            })
            .collect();
        degs.iter()
            .map(|&h| {
                let n = self.gens.iter().filter(|g| g.h == h).count();
                (h, n - ranks[&h] - ranks.get(&(h - 1)).copied().unwrap_or(0))
            })
            .filter(|&(_, v)| v > 0)
            .collect()
    }
}

/// dim H^{i,j} = n_{i,j} − rank d^{i,j} − rank d^{i−1,j}; blocks run in parallel.
pub fn homology_betti(c: &ChainComplex) -> Result<BettiTable> {
    for (s, row) in c.d.iter().enumerate() {
        if row.iter().any(|(t, _)| c.gens[*t as usize].q != c.gens[s].q) {
            return Err(HomologyError::NotHomogeneous);
        }
    }
    let mut blocks: BTreeMap<(i32, i32), Vec<u32>> = BTreeMap::new();
    for (i, g) in c.gens.iter().enumerate() {
        blocks.entry((g.h, g.q)).or_default().push(i as u32);
    }
    let ranks: FxHashMap<(i32, i32), usize> = blocks
        .par_iter()
        .map(|(&k, ids)| {
            let rows: Vec<SparseVec> = ids
                .iter()
                .filter(|&&g| !c.d[g as usize].is_empty())
                .map(|&g| c.d[g as usize].clone())
                .collect();
            (k, rank(rows))
        })
        .collect();
    let mut t = BettiTable::default();
    for (&(h, q), ids) in &blocks {
        let r_out = ranks[&(h, q)];
        let r_in = ranks.get(&(h - 1, q)).copied().unwrap_or(0);
        t.add(h, q, ids.len() - r_out - r_in);
    }
    Ok(t)
}

/// Associated graded of filtered homology:
/// dim F_jH^i = dim(Z^i ∩ F_j) − dim(B^i ∩ F_j) and Gr^j = F_j/F_{j+1}.
pub fn gr_homology(c: &FilteredComplex) -> GrTable {
    let degs: Vec<i32> = c.degrees().into_iter().collect();
    let cols: Vec<(i32, BTreeMap<i32, usize>)> = degs
        .par_iter()
        .map(|&h| (h, filtered_dims(c, h)))
        .collect();
    let mut t = GrTable::default();
    for (h, f) in cols {
        for (&j, &dim) in &f {
            let next = f.range(j + 1..).next().map_or(0, |(_, &v)| v);
            t.add(h, j, dim - next);
        }
    }
    t
}

/// j ↦ dim F_jH^h at every j where it can change.
fn filtered_dims(c: &ChainComplex, h: i32) -> BTreeMap<i32, usize> {
    let mut src = c.in_degree(h);
    src.sort_by_key(|&g| std::cmp::Reverse(c.gens[g as usize].q));
    let zr = prefix_ranks(src.iter().map(|&g| c.d[g as usize].clone()));

    // Transpose of d^{h−1}, one vector per target, targets by q ascending.
    let prev = c.in_degree(h - 1);
    let mut tr: FxHashMap<u32, SparseVec> = FxHashMap::default();
    for &s in &prev {
        for (t, v) in &c.d[s as usize] {
            tr.entry(*t).or_default().push((s, v.clone()));
        }
    }
    let mut targets = src.clone();
    targets.reverse();
    let br = prefix_ranks(targets.iter().map(|t| tr.remove(t).unwrap_or_default()));
    let rank_prev = *br.last().unwrap();

    let mut qs: Vec<i32> = src.iter().map(|&g| c.gens[g as usize].q).collect();
    qs.dedup();
    let mut out = BTreeMap::new();
    for &j in &qs {
        // Sources with q ≥ j form a prefix of `src`.
        let n_ge = src.iter().take_while(|&&g| c.gens[g as usize].q >= j).count();
        let z = n_ge - zr[n_ge];
        let n_lt = targets.iter().take_while(|&&g| c.gens[g as usize].q < j).count();
        let b = rank_prev - br[n_lt];
        out.insert(j, z - b);
    }
    out
}
