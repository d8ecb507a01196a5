//! Crossing-by-crossing construction of the Khovanov/Lee complex.
//!
//! The partial tangle complex lives in the dotted cobordism category: objects
//! are crossingless matchings of the current boundary (with (h, q) shifts) and
//! a morphism A → B is a combination of dotted disks, one disk per cycle of
//! A ∪ B, stored as a bit mask of dotted cycles. Closed circles created by a
//! new crossing are delooped at once and every invertible identity component
//! of the differential is cancelled by Gaussian elimination.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::rc::Rc;

use linkconc_core::{Crossing, Diagram};
use log::debug;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::complex::{ChainComplex, Generator, Theory};
use crate::error::{HomologyError, Result};
use crate::linalg::SparseVec;
use crate::q::Q;

/// Dotted-disk morphism: (mask of dotted cycles, coefficient), sorted by mask.
type Mor = Vec<(u64, Q)>;

pub const BUDGET_ENV: &str = "LINKCONC_MEM_BUDGET_MB";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Rough cap on the size of the intermediate complex.
    pub budget_mb: Option<u64>,
}

impl ScanOptions {
    pub fn from_env() -> Self {
        ScanOptions {
            budget_mb: std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()),
        }
    }
}

/// Where a boundary point or circle of a composed matching comes from.
#[derive(Debug, Clone, Copy)]
enum Cons {
    Old(u16),
    Slot(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlotKind {
    Joined(u16),
    Kink(u8),
    New(u16),
}

#[derive(Debug, Clone, Copy)]
struct Gen {
    m: u32,
    h: i32,
    q: i32,
}

struct Cycles {
    of: Vec<u8>,
    count: usize,
}

/// Cycles of A ∪ B numbered by smallest position.
fn cycles(a: &[u16], b: &[u16]) -> Cycles {
    let mut of = vec![u8::MAX; a.len()];
    let mut count = 0u8;
    for s in 0..a.len() {
        if of[s] != u8::MAX {
            continue;
        }
        let mut p = s;
        loop {
            of[p] = count;
            let p2 = a[p] as usize;
            of[p2] = count;
            p = b[p2] as usize;
            if p == s {
                break;
            }
        }
        count += 1;
    }
    Cycles { of, count: count as usize }
}

#[derive(Default)]
struct Interner {
    list: Vec<Vec<u16>>,
    index: FxHashMap<Vec<u16>, u32>,
}

impl Interner {
    fn intern(&mut self, m: Vec<u16>) -> u32 {
        if let Some(&i) = self.index.get(&m) {
            return i;
        }
        let i = self.list.len() as u32;
        self.list.push(m.clone());
        self.index.insert(m, i);
        i
    }
}

/// Connected pieces of a glued cobordism, with what is needed to evaluate it
/// on delooped labels.
struct Topo {
    chi: Vec<i32>,
    /// Total boundary circles per component (open cycles plus capped circles).
    k: Vec<i32>,
    /// Per component, masks of the input dotted cycles it contains.
    dots: Vec<[u64; 2]>,
    /// Per component, mask of output cycles it contains.
    open: Vec<u64>,
    src: Vec<u64>,
    tgt: Vec<u64>,
}

impl Topo {
    fn build(
        pieces: usize,
        glues: &[(usize, usize)],
        input_piece: [&[u8]; 2],
        open_piece: &[usize],
        src_piece: &[usize],
        tgt_piece: &[usize],
    ) -> Topo {
        let mut parent: Vec<usize> = (0..pieces).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in glues {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut comp = vec![usize::MAX; pieces];
        let mut n = 0;
        for p in 0..pieces {
            let r = find(&mut parent, p);
            if comp[r] == usize::MAX {
                comp[r] = n;
                n += 1;
            }
            comp[p] = comp[r];
        }
        let mut t = Topo {
            chi: vec![0; n],
            k: vec![0; n],
            dots: vec![[0; 2]; n],
            open: vec![0; n],
            src: vec![0; n],
            tgt: vec![0; n],
        };
        for p in 0..pieces {
            t.chi[comp[p]] += 1;
        }
        for &(a, _) in glues {
            t.chi[comp[a]] -= 1;
        }
        for (side, ip) in input_piece.iter().enumerate() {
            for (i, &p) in ip.iter().enumerate() {
                t.dots[comp[p as usize]][side] |= 1 << i;
            }
        }
        for (i, &p) in open_piece.iter().enumerate() {
            t.open[comp[p]] |= 1 << i;
            t.k[comp[p]] += 1;
        }
        for (i, &p) in src_piece.iter().enumerate() {
            t.src[comp[p]] |= 1 << i;
            t.k[comp[p]] += 1;
        }
        for (i, &p) in tgt_piece.iter().enumerate() {
            t.tgt[comp[p]] |= 1 << i;
            t.k[comp[p]] += 1;
        }
        t
    }

    /// Evaluates the cobordism with dotted inputs `masks`, source circle labels
    /// `ls` and target circle labels `lt` (bit 1 = x). Pushes (output mask, coefficient).
    fn eval(&self, theory: Theory, masks: [u64; 2], ls: u64, lt: u64, out: &mut Vec<(u64, i64)>) {
        out.clear();
        out.push((0, 1));
        for c in 0..self.chi.len() {
            let g2 = 2 - self.chi[c] - self.k[c];
            debug_assert!(g2 >= 0 && g2 % 2 == 0, "bad genus");
            let g = (g2 / 2) as u32;
            let dots = (masks[0] & self.dots[c][0]).count_ones()
                + (masks[1] & self.dots[c][1]).count_ones()
                + (ls & self.src[c]).count_ones()
                + (!lt & self.tgt[c]).count_ones();
            let base = dots + g;
            let open = self.open[c];
            let k = open.count_ones();
            let factor = 1i64 << g;
            // Dotted subsets S of the open cycles with ε(x^{base + |open∖S|}) ≠ 0.
            let mut options: Vec<u64> = Vec::new();
            match theory {
                Theory::Khovanov => match base {
                    0 => {
                        let mut rest = open;
                        while rest != 0 {
                            let bit = rest & rest.wrapping_neg();
                            options.push(open & !bit);
                            rest &= rest - 1;
                        }
                    }
                    1 => options.push(open),
                    _ => {}
                },
                Theory::Lee => {
                    let mut s = open;
                    loop {
                        if (base + k - s.count_ones()) % 2 == 1 {
                            options.push(s);
                        }
                        if s == 0 {
                            break;
                        }
                        s = (s - 1) & open;
                    }
                }
            }
            if options.is_empty() {
                out.clear();
                return;
            }
            let prev = std::mem::take(out);
            for (m, v) in prev {
                for &o in &options {
                    out.push((m | o, v * factor));
                }
            }
        }
    }
}

fn mor_add(mor: &mut Mor, mask: u64, v: Q) {
    match mor.binary_search_by_key(&mask, |x| x.0) {
        Ok(i) => {
            let s = &mor[i].1 + &v;
            if s.is_zero() {
                mor.remove(i);
            } else {
                mor[i].1 = s;
            }
        }
        Err(i) => {
            if !v.is_zero() {
                mor.insert(i, (mask, v));
            }
        }
    }
}

/// The complex of a partial tangle.
struct Tangle {
    theory: Theory,
    bd: Vec<u32>,
    mats: Interner,
    gens: Vec<Gen>,
    alive: Vec<bool>,
    out: Vec<FxHashMap<u32, Mor>>,
    inc: Vec<FxHashSet<u32>>,
    cyc: FxHashMap<(u32, u32), Rc<Cycles>>,
    comp: FxHashMap<(u32, u32, u32), Rc<Topo>>,
}

impl Tangle {
    fn empty(theory: Theory) -> Self {
        let mut mats = Interner::default();
        mats.intern(Vec::new());
        Tangle {
            theory,
            bd: Vec::new(),
            mats,
            gens: vec![Gen { m: 0, h: 0, q: 0 }],
            alive: vec![true],
            out: vec![FxHashMap::default()],
            inc: vec![FxHashSet::default()],
            cyc: FxHashMap::default(),
            comp: FxHashMap::default(),
        }
    }

    fn cycles(&mut self, a: u32, b: u32) -> Rc<Cycles> {
        if let Some(c) = self.cyc.get(&(a, b)) {
            return c.clone();
        }
        let c = Rc::new(cycles(&self.mats.list[a as usize], &self.mats.list[b as usize]));
        self.cyc.insert((a, b), c.clone());
        c
    }

    fn add_entry(&mut self, x: u32, y: u32, mask: u64, v: Q) {
        let mor = self.out[x as usize].entry(y).or_default();
        mor_add(mor, mask, v);
        if mor.is_empty() {
            self.out[x as usize].remove(&y);
            self.inc[y as usize].remove(&x);
        } else {
            self.inc[y as usize].insert(x);
        }
    }

    fn live(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn estimate_bytes(&self) -> u64 {
        let mut b = 0u64;
        for (i, o) in self.out.iter().enumerate() {
            if self.alive[i] {
                b += 96;
                for m in o.values() {
                    b += 64 + 40 * m.len() as u64;
                }
            }
        }
        b
    }

    /// Topology of δ: X → A followed by γ: A → Y.
    fn composition(&mut self, x: u32, a: u32, y: u32) -> Rc<Topo> {
        if let Some(t) = self.comp.get(&(x, a, y)) {
            return t.clone();
        }
        let c1 = self.cycles(x, a);
        let c2 = self.cycles(a, y);
        let cxy = self.cycles(x, y);
        let am = &self.mats.list[a as usize];
        let n1 = c1.count;
        let glues: Vec<(usize, usize)> = (0..am.len())
            .filter(|&p| p < am[p] as usize)
            .map(|p| (c1.of[p] as usize, n1 + c2.of[p] as usize))
            .collect();
        let in1: Vec<u8> = (0..n1 as u8).collect();
        let in2: Vec<u8> = (0..c2.count).map(|i| (n1 + i) as u8).collect();
        let mut open = vec![usize::MAX; cxy.count];
        for p in 0..cxy.of.len() {
            let o = cxy.of[p] as usize;
            if open[o] == usize::MAX {
                open[o] = c1.of[p] as usize;
            }
        }
        let t = Rc::new(Topo::build(n1 + c2.count, &glues, [&in1, &in2], &open, &[], &[]));
        self.comp.insert((x, a, y), t.clone());
        t
    }

    fn is_pivot(&self, b1: u32, b2: u32) -> Option<Q> {
        let (g1, g2) = (self.gens[b1 as usize], self.gens[b2 as usize]);
        if g1.m != g2.m || g1.q != g2.q {
            return None;
        }
        match self.out[b1 as usize].get(&b2)?.as_slice() {
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    fn cost(&self, b1: u32, b2: u32) -> usize {
        (self.out[b1 as usize].len() - 1) * (self.inc[b2 as usize].len() - 1)
    }

    fn eliminate(&mut self, b1: u32, b2: u32, c: Q) {
        let f = -&c.inv();
        let a = self.gens[b1 as usize].m;
        let xs: Vec<(u32, Mor)> = self.inc[b2 as usize]
            .iter()
            .filter(|&&x| x != b1)
            .map(|&x| (x, self.out[x as usize][&b2].clone()))
            .collect();
        let ys: Vec<(u32, Mor)> = self.out[b1 as usize]
            .iter()
            .filter(|(&y, _)| y != b2)
            .map(|(&y, m)| (y, m.clone()))
            .collect();
        let mut buf = Vec::new();
        for (x, delta) in &xs {
            let xm = self.gens[*x as usize].m;
            for (y, gamma) in &ys {
                let ym = self.gens[*y as usize].m;
                let topo = self.composition(xm, a, ym);
                let mut acc: Mor = Vec::new();
                for (m1, v1) in delta {
                    for (m2, v2) in gamma {
                        topo.eval(self.theory, [*m1, *m2], 0, 0, &mut buf);
                        if buf.is_empty() {
                            continue;
                        }
                        let v = &(&f * v1) * v2;
                        for &(m, k) in &buf {
                            mor_add(&mut acc, m, &v * &Q::int(k));
                        }
                    }
                }
                for (m, v) in acc {
                    self.add_entry(*x, *y, m, v);
                }
            }
        }
        for b in [b1, b2] {
            let outs: Vec<u32> = self.out[b as usize].keys().copied().collect();
            for y in outs {
                self.inc[y as usize].remove(&b);
            }
            let ins: Vec<u32> = self.inc[b as usize].iter().copied().collect();
            for x in ins {
                self.out[x as usize].remove(&b);
            }
            self.out[b as usize] = FxHashMap::default();
            self.inc[b as usize] = FxHashSet::default();
            self.alive[b as usize] = false;
        }
    }

    /// Cancels identity components until none are left, cheapest first.
    fn reduce(&mut self) {
        loop {
            let mut heap = BinaryHeap::new();
            for b1 in 0..self.gens.len() as u32 {
                if !self.alive[b1 as usize] {
                    continue;
                }
                for &b2 in self.out[b1 as usize].keys() {
                    if self.is_pivot(b1, b2).is_some() {
                        heap.push(Reverse((self.cost(b1, b2), b1, b2)));
                    }
                }
            }
            if heap.is_empty() {
                return;
            }
            while let Some(Reverse((cost, b1, b2))) = heap.pop() {
                if !self.alive[b1 as usize] || !self.alive[b2 as usize] {
                    continue;
                }
                let Some(c) = self.is_pivot(b1, b2) else { continue };
                let now = self.cost(b1, b2);
                if now > cost {
                    heap.push(Reverse((now, b1, b2)));
                    continue;
                }
                self.eliminate(b1, b2, c);
            }
        }
    }

    /// Tensors with the two-term complex of crossing `x` and deloops.
    fn add_crossing(&mut self, x: &Crossing) -> Tangle {
        let step = Step::new(&self.bd, x);
        let mut next = Tangle {
            theory: self.theory,
            bd: step.new_bd.clone(),
            mats: Interner::default(),
            gens: Vec::new(),
            alive: Vec::new(),
            out: Vec::new(),
            inc: Vec::new(),
            cyc: FxHashMap::default(),
            comp: FxHashMap::default(),
        };
        // composed[(old matching, bit)] = (new matching, circle reps)
        let mut composed: FxHashMap<(u32, u8), Rc<(u32, Vec<Cons>)>> = FxHashMap::default();
        let mut compose = |m: u32, b: u8, mats: &Interner, next: &mut Tangle| {
            composed
                .entry((m, b))
                .or_insert_with(|| {
                    let (mat, circles) = step.compose(&mats.list[m as usize], b);
                    Rc::new((next.mats.intern(mat), circles))
                })
                .clone()
        };
        // first[g][b] = index of (g, b, λ = 0) in the new complex.
        let mut first = vec![[u32::MAX; 2]; self.gens.len()];
        for g in 0..self.gens.len() {
            if !self.alive[g] {
                continue;
            }
            let gen = self.gens[g];
            for b in 0..2u8 {
                let c = compose(gen.m, b, &self.mats, &mut next);
                first[g][b as usize] = next.gens.len() as u32;
                let nc = c.1.len();
                for lam in 0..1u32 << nc {
                    next.gens.push(Gen {
                        m: c.0,
                        h: gen.h + b as i32,
                        q: gen.q + b as i32 + nc as i32 - 2 * lam.count_ones() as i32,
                    });
                }
            }
        }
        let n = next.gens.len();
        next.alive = vec![true; n];
        next.out = vec![FxHashMap::default(); n];
        next.inc = vec![FxHashSet::default(); n];

        let mut topo_cache: FxHashMap<(u32, u32, u8), Rc<Topo>> = FxHashMap::default();
        let mut buf = Vec::new();
        for g in 0..self.gens.len() {
            if !self.alive[g] {
                continue;
            }
            let gen = self.gens[g];
            // Old differential, extended by the identity on each smoothing.
            let entries: Vec<(u32, Mor)> = self.out[g].iter().map(|(&y, m)| (y, m.clone())).collect();
            for (y, mor) in entries {
                let ym = self.gens[y as usize].m;
                for b in 0..2u8 {
                    let cs = compose(gen.m, b, &self.mats, &mut next);
                    let ct = compose(ym, b, &self.mats, &mut next);
                    let topo = match topo_cache.get(&(gen.m, ym, b)) {
                        Some(t) => t.clone(),
                        None => {
                            let t = Rc::new(self.extension(&step, gen.m, ym, Some(b), &cs, &ct, &next));
                            topo_cache.insert((gen.m, ym, b), t.clone());
                            t
                        }
                    };
                    let (s0, t0) = (first[g][b as usize], first[y as usize][b as usize]);
                    for ls in 0..1u64 << cs.1.len() {
                        for lt in 0..1u64 << ct.1.len() {
                            for (mask, v) in &mor {
                                topo.eval(self.theory, [*mask, 0], ls, lt, &mut buf);
                                for &(m, k) in &buf {
                                    next.add_entry(s0 + ls as u32, t0 + lt as u32, m, v * &Q::int(k));
                                }
                            }
                        }
                    }
                }
            }
            // Saddle from the 0- to the 1-smoothing, with sign (−1)^h.
            let cs = compose(gen.m, 0, &self.mats, &mut next);
            let ct = compose(gen.m, 1, &self.mats, &mut next);
            let topo = match topo_cache.get(&(gen.m, gen.m, 2)) {
                Some(t) => t.clone(),
                None => {
                    let t = Rc::new(self.extension(&step, gen.m, gen.m, None, &cs, &ct, &next));
                    topo_cache.insert((gen.m, gen.m, 2), t.clone());
                    t
                }
            };
            let sign = if gen.h % 2 == 0 { 1 } else { -1 };
            let (s0, t0) = (first[g][0], first[g][1]);
            for ls in 0..1u64 << cs.1.len() {
                for lt in 0..1u64 << ct.1.len() {
                    topo.eval(self.theory, [0, 0], ls, lt, &mut buf);
                    for &(m, k) in &buf {
                        next.add_entry(s0 + ls as u32, t0 + lt as u32, m, Q::int(sign * k));
                    }
                }
            }
        }
        next
    }

    /// Topology of f: A → B (old) glued to the identity on smoothing `bit`, or
    /// to the saddle when `bit` is None (then B = A and f is the identity).
    #[allow(clippy::too_many_arguments)]
    fn extension(
        &mut self,
        step: &Step,
        a: u32,
        b: u32,
        bit: Option<u8>,
        src: &(u32, Vec<Cons>),
        tgt: &(u32, Vec<Cons>),
        next: &Tangle,
    ) -> Topo {
        let cyc = self.cycles(a, b);
        let nc = cyc.count;
        let strip = |j: usize| -> usize {
            match bit {
                Some(bb) => nc + step.arc[bb as usize][j] as usize,
                None => nc,
            }
        };
        let pieces = nc + if bit.is_some() { 2 } else { 1 };
        let mut glues = Vec::new();
        for j in 0..4 {
            match step.slots[j] {
                SlotKind::Joined(p) => glues.push((cyc.of[p as usize] as usize, strip(j))),
                SlotKind::Kink(j2) if (j2 as usize) > j => glues.push((strip(j), strip(j2 as usize))),
                _ => {}
            }
        }
        let piece = |c: Cons| match c {
            Cons::Old(p) => cyc.of[p as usize] as usize,
            Cons::Slot(j) => strip(j as usize),
        };
        let newc = cycles(&next.mats.list[src.0 as usize], &next.mats.list[tgt.0 as usize]);
        let mut open = vec![usize::MAX; newc.count];
        for p in 0..newc.of.len() {
            let o = newc.of[p] as usize;
            if open[o] == usize::MAX {
                open[o] = piece(step.cons[p]);
            }
        }
        let inputs: Vec<u8> = (0..nc as u8).collect();
        let sp: Vec<usize> = src.1.iter().map(|&c| piece(c)).collect();
        let tp: Vec<usize> = tgt.1.iter().map(|&c| piece(c)).collect();
        Topo::build(pieces, &glues, [&inputs, &[]], &open, &sp, &tp)
    }
}

/// How one crossing attaches to the current boundary.
struct Step {
    slots: [SlotKind; 4],
    /// Joined slot of each old position.
    joined: Vec<Option<u8>>,
    /// partner[b][j]: the slot joined to j by the b-smoothing.
    partner: [[u8; 4]; 2],
    /// arc[b][j]: which of the two b-smoothing arcs contains slot j.
    arc: [[u8; 4]; 2],
    new_bd: Vec<u32>,
    old_to_new: Vec<Option<u16>>,
    /// Origin of every new boundary position.
    cons: Vec<Cons>,
}

impl Step {
    fn new(bd: &[u32], x: &Crossing) -> Step {
        let e = x.edges;
        let mut slots = [SlotKind::New(0); 4];
        let mut joined = vec![None; bd.len()];
        for j in 0..4 {
            if let Some(j2) = (0..4).find(|&k| k != j && e[k] == e[j]) {
                slots[j] = SlotKind::Kink(j2 as u8);
            } else if let Ok(p) = bd.binary_search(&e[j]) {
                slots[j] = SlotKind::Joined(p as u16);
                joined[p] = Some(j as u8);
            }
        }
        let mut labels: Vec<(u32, Cons)> = bd
            .iter()
            .enumerate()
            .filter(|(p, _)| joined[*p].is_none())
            .map(|(p, &l)| (l, Cons::Old(p as u16)))
            .collect();
        for j in 0..4 {
            if slots[j] == SlotKind::New(0) {
                labels.push((e[j], Cons::Slot(j as u8)));
            }
        }
        labels.sort_by_key(|x| x.0);
        let mut old_to_new = vec![None; bd.len()];
        for (i, (_, c)) in labels.iter().enumerate() {
            match *c {
                Cons::Old(p) => old_to_new[p as usize] = Some(i as u16),
                Cons::Slot(j) => slots[j as usize] = SlotKind::New(i as u16),
            }
        }
        let mut partner = [[0u8; 4]; 2];
        let mut arc = [[0u8; 4]; 2];
        for b in 0..2u8 {
            for (k, (s, t)) in Crossing::smoothing_slots(b).into_iter().enumerate() {
                partner[b as usize][s] = t as u8;
                partner[b as usize][t] = s as u8;
                arc[b as usize][s] = k as u8;
                arc[b as usize][t] = k as u8;
            }
        }
        Step {
            slots,
            joined,
            partner,
            arc,
            new_bd: labels.iter().map(|x| x.0).collect(),
            old_to_new,
            cons: labels.iter().map(|x| x.1).collect(),
        }
    }

    /// Glues the b-smoothing onto matching `a`: the new matching and the
    /// closed circles, each circle named by one of its arcs.
    fn compose(&self, a: &[u16], b: u8) -> (Vec<u16>, Vec<Cons>) {
        let m = a.len();
        let arc = |v: usize| -> usize {
            if v < m {
                a[v] as usize
            } else {
                m + self.partner[b as usize][v - m] as usize
            }
        };
        let glue = |v: usize| -> Option<usize> {
            if v < m {
                self.joined[v].map(|j| m + j as usize)
            } else {
                match self.slots[v - m] {
                    SlotKind::Joined(p) => Some(p as usize),
                    SlotKind::Kink(j) => Some(m + j as usize),
                    SlotKind::New(_) => None,
                }
            }
        };
        let pos = |v: usize| -> u16 {
            if v < m {
                self.old_to_new[v].unwrap()
            } else {
                match self.slots[v - m] {
                    SlotKind::New(p) => p,
                    _ => unreachable!("terminal slot"),
                }
            }
        };
        let mut seen = vec![false; m + 4];
        let mut matching = vec![0u16; self.new_bd.len()];
        for v in 0..m + 4 {
            if seen[v] || glue(v).is_some() {
                continue;
            }
            seen[v] = true;
            let mut cur = arc(v);
            loop {
                seen[cur] = true;
                match glue(cur) {
                    None => break,
                    Some(g) => {
                        seen[g] = true;
                        cur = arc(g);
                    }
                }
            }
            let (p, q) = (pos(v), pos(cur));
            matching[p as usize] = q;
            matching[q as usize] = p;
        }
        let mut circles = Vec::new();
        for v in 0..m + 4 {
            if seen[v] {
                continue;
            }
            circles.push(if v < m { Cons::Old(v as u16) } else { Cons::Slot((v - m) as u8) });
            let mut cur = v;
            loop {
                seen[cur] = true;
                let g = glue(cur).expect("closed circle");
                seen[g] = true;
                cur = arc(g);
                if cur == v {
                    break;
                }
            }
        }
        (matching, circles)
    }
}

/// Greedy order: each next crossing shares the most edges with the current
/// boundary, ties broken by the smaller resulting boundary, then by index.
pub fn scan_order(d: &Diagram) -> Vec<usize> {
    let xs = d.crossings();
    let mut order = Vec::with_capacity(xs.len());
    let mut used = vec![false; xs.len()];
    let mut bd: FxHashSet<u32> = FxHashSet::default();
    for _ in 0..xs.len() {
        let mut best: Option<(usize, i64, usize)> = None;
        for (i, x) in xs.iter().enumerate() {
            if used[i] {
                continue;
            }
            let shared = x.edges.iter().filter(|e| bd.contains(e)).count();
            let mut fresh: FxHashSet<u32> = FxHashSet::default();
            for e in x.edges {
                if !fresh.remove(&e) {
                    fresh.insert(e);
                }
            }
            let added = fresh.iter().filter(|e| !bd.contains(e)).count() as i64;
            let growth = added - shared as i64;
            let key = (shared, -growth, usize::MAX - i);
            if best.is_none_or(|b| key > (b.0, -b.1, usize::MAX - b.2)) {
                best = Some((shared, growth, i));
            }
        }
        let i = best.unwrap().2;
        used[i] = true;
        order.push(i);
        for e in xs[i].edges {
            if !bd.remove(&e) {
                bd.insert(e);
            }
        }
    }
    order
}

pub fn scan_complex(d: &Diagram, theory: Theory) -> Result<ChainComplex> {
    scan_complex_with(d, theory, ScanOptions::from_env())
}

/// A complex homotopy equivalent (filtered, for Lee) to the full cube.
pub fn scan_complex_with(d: &Diagram, theory: Theory, opts: ScanOptions) -> Result<ChainComplex> {
    let mut t = Tangle::empty(theory);
    let xs = d.crossings();
    for (step, i) in scan_order(d).into_iter().enumerate() {
        let mut next = t.add_crossing(&xs[i]);
        let before = next.live();
        next.reduce();
        t = next;
        debug!(
            "scan step {}: crossing {i}, boundary {}, generators {before} -> {}",
            step + 1,
            t.bd.len(),
            t.live()
        );
        if let Some(budget) = opts.budget_mb {
            let est = t.estimate_bytes() >> 20;
            if est > budget {
                return Err(HomologyError::Budget { budget_mb: budget, estimate_mb: est });
            }
        }
    }
    debug_assert!(t.bd.is_empty());
    let (np, nm) = (d.n_plus() as i32, d.n_minus() as i32);
    let loops = d.loops() as u32;
    let live: Vec<u32> = (0..t.gens.len() as u32).filter(|&g| t.alive[g as usize]).collect();
    let index: FxHashMap<u32, u32> = live.iter().enumerate().map(|(i, &g)| (g, i as u32)).collect();
    let copies = 1u32 << loops;
    let mut gens = Vec::with_capacity(live.len() * copies as usize);
    let mut dd: Vec<SparseVec> = Vec::with_capacity(gens.capacity());
    for &g in &live {
        let gen = t.gens[g as usize];
        let mut row: SparseVec = t.out[g as usize]
            .iter()
            .map(|(y, m)| {
                debug_assert!(m.len() == 1 && m[0].0 == 0);
                (index[y], m[0].1.clone())
            })
            .collect();
        row.sort_by_key(|x| x.0);
        for lam in 0..copies {
            gens.push(Generator {
                h: gen.h - nm,
                q: gen.q + np - 2 * nm + loops as i32 - 2 * lam.count_ones() as i32,
            });
            dd.push(row.iter().map(|(y, v)| (y * copies + lam, v.clone())).collect());
        }
    }
    Ok(ChainComplex { theory, gens, d: dd })
}
