//! Bigraded dimension tables and their grid rendering.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;

/// Finitely supported map (homological degree, quantum degree) → dimension.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bigraded(pub BTreeMap<(i32, i32), usize>);

/// Khovanov homology dimensions.
pub type BettiTable = Bigraded;
/// Dimensions of the associated graded of filtered Lee homology.
pub type GrTable = Bigraded;

#[derive(Serialize, Deserialize)]
struct Cell {
    h: i32,
    q: i32,
    dim: usize,
}

impl Bigraded {
    pub fn from_entries(entries: impl IntoIterator<Item = ((i32, i32), usize)>) -> Self {
        let mut t = Bigraded::default();
        for (k, v) in entries {
            t.add(k.0, k.1, v);
        }
        t
    }

    pub fn add(&mut self, h: i32, q: i32, dim: usize) {
        if dim > 0 {
            *self.0.entry((h, q)).or_insert(0) += dim;
        }
    }

    pub fn get(&self, h: i32, q: i32) -> usize {
        self.0.get(&(h, q)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimensions summed over q at each homological degree.
    pub fn by_degree(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        for (&(h, _), &v) in &self.0 {
            *m.entry(h).or_insert(0) += v;
        }
        m
    }

    /// Column at homological degree `h` as q → dim.
    pub fn column(&self, h: i32) -> BTreeMap<i32, usize> {
        self.0
            .iter()
            .filter(|((i, _), _)| *i == h)
            .map(|(&(_, q), &v)| (q, v))
            .collect()
    }

    /// Σ (−1)^h dim · q^j.
    pub fn euler(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&(h, q), &v) in &self.0 {
            p.add_term(if h.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) }, q);
        }
        p
    }

    /// (h, q) ↦ (−h, −q).
    pub fn dual(&self) -> Self {
        Bigraded(self.0.iter().map(|(&(h, q), &v)| ((-h, -q), v)).collect())
    }

    /// Rows by quantum degree descending, columns by homological degree ascending.
    pub fn render_grid(&self) -> String {
        if self.0.is_empty() {
            return "(empty)\n".into();
        }
        let hmin = self.0.keys().map(|k| k.0).min().unwrap();
        let hmax = self.0.keys().map(|k| k.0).max().unwrap();
        let qmin = self.0.keys().map(|k| k.1).min().unwrap();
        let qmax = self.0.keys().map(|k| k.1).max().unwrap();
        let w = 4;
        let mut s = String::new();
        let _ = write!(s, "{:>w$}", "q\\h");
        for h in hmin..=hmax {
            let _ = write!(s, "{h:>w$}");
        }
        s.push('\n');
        let mut q = qmax;
        while q >= qmin {
            let _ = write!(s, "{q:>w$}");
            for h in hmin..=hmax {
                match self.get(h, q) {
                    0 => {
                        let _ = write!(s, "{:>w$}", ".");
                    }
                    v => {
                        let _ = write!(s, "{v:>w$}");
                    }
                }
            }
            s.push('\n');
            q -= 2;
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<Cell> = self.0.iter().map(|(&(h, q), &dim)| Cell { h, q, dim }).collect();
        serde_json::to_value(cells).expect("cells serialize")
    }
}

impl Serialize for Bigraded {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let cells: Vec<Cell> = self.0.iter().map(|(&(h, q), &dim)| Cell { h, q, dim }).collect();
        cells.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Bigraded {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let cells = Vec::<Cell>::deserialize(d)?;
        Ok(Bigraded::from_entries(cells.into_iter().map(|c| ((c.h, c.q), c.dim))))
    }
}
