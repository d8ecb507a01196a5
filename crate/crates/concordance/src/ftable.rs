//! F-functions: ν_s of twisted Whitehead doubles as a function of the twists.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use linkconc_core::rational::fmt_q;
use linkconc_core::whitehead::{fully_clasped, reduced, Clasp};
use linkconc_core::Diagram;
use linkconc_homology::{s_invariant, Applicability, Method};
use log::debug;
use num_rational::Rational64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{ConcordanceError, Result};

/// Which double: all components (`Full*`) or one component (`Reduced*`),
/// with a positive or negative clasp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    FullPlus,
    FullMinus,
    ReducedPlus(usize),
    ReducedMinus(usize),
}

impl Variant {
    pub fn clasp(self) -> Clasp {
        match self {
            Variant::FullPlus | Variant::ReducedPlus(_) => Clasp::Positive,
            Variant::FullMinus | Variant::ReducedMinus(_) => Clasp::Negative,
        }
    }

    pub fn is_reduced(self) -> bool {
        matches!(self, Variant::ReducedPlus(_) | Variant::ReducedMinus(_))
    }

    /// Number of twist coordinates for a link with `ell` components.
    pub fn dims(self, ell: usize) -> usize {
        if self.is_reduced() {
            1
        } else {
            ell
        }
    }

    pub fn build(self, d: &Diagram, t: &[i64]) -> Result<Diagram> {
        Ok(match self {
            Variant::FullPlus | Variant::FullMinus => fully_clasped(d, t, self.clasp())?,
            Variant::ReducedPlus(c) | Variant::ReducedMinus(c) => {
                let [t] = t else {
                    return Err(ConcordanceError::Window("reduced doubles take one twist".into()));
                };
                reduced(d, *t, c, self.clasp())?
            }
        })
    }

    /// Closed range every value must lie in. `nu0` is ν of the link with the
    /// doubled component removed (0 for knots); unused by full variants.
    pub fn range(self, ell: usize, nu0: Rational64) -> (Rational64, Rational64) {
        let l = Rational64::from_integer(ell as i64);
        let one = Rational64::from_integer(1);
        let zero = Rational64::from_integer(0);
        match self {
            Variant::FullPlus => (zero, l),
            Variant::FullMinus => (-l, zero),
            Variant::ReducedPlus(_) => (nu0, nu0 + one),
            Variant::ReducedMinus(_) => (nu0 - one, nu0),
        }
    }

    pub fn with_component(self, c: usize) -> Variant {
        match self {
            Variant::ReducedPlus(_) => Variant::ReducedPlus(c),
            Variant::ReducedMinus(_) => Variant::ReducedMinus(c),
            v => v,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::FullPlus => write!(f, "full+"),
            Variant::FullMinus => write!(f, "full-"),
            Variant::ReducedPlus(c) => write!(f, "reduced+:{c}"),
            Variant::ReducedMinus(c) => write!(f, "reduced-:{c}"),
        }
    }
}

/// `full+`, `full-`, `reduced+` or `reduced-`, optionally `:component`.
impl FromStr for Variant {
    type Err = ConcordanceError;

    fn from_str(s: &str) -> Result<Self> {
        let (head, comp) = match s.split_once(':') {
            Some((h, c)) => (
                h,
                c.trim().parse::<usize>().map_err(|_| ConcordanceError::Variant(s.into()))?,
            ),
            None => (s, 0),
        };
        match head.trim() {
            "full+" => Ok(Variant::FullPlus),
            "full-" => Ok(Variant::FullMinus),
            "reduced+" => Ok(Variant::ReducedPlus(comp)),
            "reduced-" => Ok(Variant::ReducedMinus(comp)),
            _ => Err(ConcordanceError::Variant(s.into())),
        }
    }
}

impl Serialize for Variant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A box of twist vectors, one inclusive range per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Window(pub Vec<(i64, i64)>);

impl Window {
    pub fn cube(lo: i64, hi: i64, dims: usize) -> Window {
        Window(vec![(lo, hi); dims])
    }

    pub fn dims(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, t: &[i64]) -> bool {
        t.len() == self.0.len() && t.iter().zip(&self.0).all(|(x, &(a, b))| a <= *x && *x <= b)
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.0.iter().map(|&(a, b)| a..=b).multi_cartesian_product()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&(a, b)| (b - a + 1) as usize).product()
    }

    fn lo(&self) -> Vec<i64> {
        self.0.iter().map(|r| r.0).collect()
    }

    fn hi(&self) -> Vec<i64> {
        self.0.iter().map(|r| r.1).collect()
    }
}

/// Comma-separated inclusive ranges such as `-2..2,-2..2`.
impl FromStr for Window {
    type Err = ConcordanceError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || ConcordanceError::Window(format!("expected ranges like -2..2,-1..1, got {s:?}"));
        let ranges = s
            .split(',')
            .map(|part| {
                let (a, b) = part.trim().split_once("..").ok_or_else(bad)?;
                let b = b.strip_prefix('=').unwrap_or(b);
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        if ranges.is_empty() {
            return Err(bad());
        }
        Ok(Window(ranges))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FValue {
    pub value: Rational64,
    pub s: i64,
    pub crossings: usize,
    pub applicability: Applicability,
}

/// ν_s of the double of `d` selected by `variant` and twist vector `t`.
/// Doubles have vanishing linking between doubled components, so s is read
/// off under the symmetric-orientation hypothesis when needed.
pub fn f_value(d: &Diagram, variant: Variant, t: &[i64], method: Method) -> Result<FValue> {
    let w = variant.build(d, t)?;
    let r = s_invariant(&w, true, method)?;
    debug!("{variant} {t:?}: {} crossings, s = {}", w.crossing_count(), r.s);
    Ok(FValue {
        value: r.nu_s,
        s: r.s,
        crossings: w.crossing_count(),
        applicability: r.applicability,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FEntry {
    pub value: Rational64,
    /// Filled by monotonicity rather than computed.
    pub inferred: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct WindowOptions {
    pub method: Method,
    /// Infer values between equal corners instead of computing them.
    pub prune: bool,
}

impl Default for WindowOptions {
    fn default() -> Self {
        WindowOptions {
            method: Method::default(),
            prune: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FTable {
    pub base: String,
    pub components: usize,
    pub variant: Variant,
    pub window: Window,
    /// ν of the link with the doubled component removed, for reduced variants.
    pub nu0: Option<Rational64>,
    pub values: BTreeMap<Vec<i64>, FEntry>,
    pub assumptions: Vec<String>,
}

const SYMMETRIC: &str =
    "s of doubles read off assuming each double is isotopic to its orientation-reversed self";
const MONOTONE: &str = "inferred entries follow from F being non-increasing in each twist";

/// ν of `d` with component `c` removed, 0 for a knot.
fn nu0(d: &Diagram, c: usize, method: Method) -> Result<(Rational64, bool)> {
    if d.component_count() == 1 {
        return Ok((Rational64::from_integer(0), false));
    }
    let rest = d.remove_component(c)?;
    let r = s_invariant(&rest, true, method)?;
    Ok((r.nu_s, r.applicability == Applicability::HypothesisAssumed))
}

/// Tabulates F on a window. With pruning, a box whose lowest and highest
/// corners agree is filled without further computation.
pub fn f_window(d: &Diagram, variant: Variant, window: &Window, opts: WindowOptions) -> Result<FTable> {
    let ell = d.component_count();
    if window.dims() != variant.dims(ell) {
        return Err(ConcordanceError::Window(format!(
            "{variant} on a {ell}-component link needs {} ranges, got {}",
            variant.dims(ell),
            window.dims()
        )));
    }
    let mut assumptions = Vec::new();
    let nu0 = match variant {
        Variant::ReducedPlus(c) | Variant::ReducedMinus(c) => {
            let (v, assumed) = nu0(d, c, opts.method)?;
            if assumed {
                assumptions.push(format!("nu of the sublink without component {c}: {SYMMETRIC}"));
            }
            Some(v)
        }
        _ => None,
    };

    let eval = |t: &[i64]| f_value(d, variant, t, opts.method);
    let mut computed: Vec<(Vec<i64>, FValue)> = Vec::new();
    let mut inferred: Vec<(Vec<i64>, Rational64)> = Vec::new();
    if opts.prune {
        let lo = window.lo();
        let hi = window.hi();
        let (a, b) = rayon::join(|| eval(&lo), || eval(&hi));
        let (a, b) = (a?, b?);
        let fill = fill_box(&eval, window.clone(), a.value, b.value)?;
        computed.push((lo.clone(), a));
        if hi != lo {
            computed.push((hi, b));
        }
        computed.extend(fill.0);
        inferred.extend(fill.1);
    } else {
        use rayon::prelude::*;
        let pts: Vec<Vec<i64>> = window.points().collect();
        let vals: Vec<Result<FValue>> = pts.par_iter().map(|t| eval(t)).collect();
        for (t, v) in pts.into_iter().zip(vals) {
            computed.push((t, v?));
        }
    }

    if computed.iter().any(|(_, v)| v.applicability == Applicability::HypothesisAssumed) {
        assumptions.push(SYMMETRIC.into());
    }
    if !inferred.is_empty() {
        assumptions.push(MONOTONE.into());
    }
    let mut values = BTreeMap::new();
    for (t, v) in computed {
        values.insert(t, FEntry { value: v.value, inferred: false });
    }
    for (t, v) in inferred {
        values.insert(t, FEntry { value: v, inferred: true });
    }
    debug_assert_eq!(values.len(), window.size());
    Ok(FTable {
        base: d.name().unwrap_or("link").to_string(),
        components: ell,
        variant,
        window: window.clone(),
        nu0,
        values,
        assumptions,
    })
}

type Filled = (Vec<(Vec<i64>, FValue)>, Vec<(Vec<i64>, Rational64)>);

/// Fills the interior of a box whose corner values `f_lo` (at the lowest
/// corner) and `f_hi` (at the highest) are known.
fn fill_box<E>(eval: &E, b: Window, f_lo: Rational64, f_hi: Rational64) -> Result<Filled>
where
    E: Fn(&[i64]) -> Result<FValue> + Sync,
{
    let (lo, hi) = (b.lo(), b.hi());
    let corners = |t: &Vec<i64>| *t == lo || *t == hi;
    if f_lo == f_hi {
        let inf = b.points().filter(|t| !corners(t)).map(|t| (t, f_lo)).collect();
        return Ok((Vec::new(), inf));
    }
    let Some((k, &(a, z))) = b.0.iter().enumerate().filter(|(_, r)| r.1 > r.0).max_by_key(|(_, r)| r.1 - r.0)
    else {
        return Ok((Vec::new(), Vec::new()));
    };
    if b.size() == 2 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mid = a + (z - a) / 2;
    let mut first = b.clone();
    first.0[k] = (a, mid);
    let mut second = b.clone();
    second.0[k] = (mid + 1, z);
    let (hi1, lo2) = (first.hi(), second.lo());
    let (v1, v2) = rayon::join(|| eval(&hi1), || eval(&lo2));
    let (v1, v2) = (v1?, v2?);
    let (r1, r2) = rayon::join(
        || fill_box(eval, first, f_lo, v1.value),
        || fill_box(eval, second, v2.value, f_hi),
    );
    let (mut c1, mut i1) = r1?;
    let (c2, i2) = r2?;
    // A corner of one half can coincide with a corner of the whole box.
    if hi1 != lo {
        c1.push((hi1, v1));
    }
    if lo2 != hi {
        c1.push((lo2, v2));
    }
    c1.extend(c2);
    i1.extend(i2);
    Ok((c1, i1))
}

impl FTable {
    pub fn get(&self, t: &[i64]) -> Option<Rational64> {
        self.values.get(t).map(|e| e.value)
    }

    pub fn computed(&self) -> usize {
        self.values.values().filter(|e| !e.inferred).count()
    }

    /// The theoretical range of values for this table.
    pub fn range(&self) -> (Rational64, Rational64) {
        self.variant.range(self.components, self.nu0.unwrap_or_default())
    }

    /// Entries outside the theoretical range.
    pub fn out_of_range(&self) -> Vec<Vec<i64>> {
        let (lo, hi) = self.range();
        self.values
            .iter()
            .filter(|(_, e)| e.value < lo || e.value > hi)
            .map(|(t, _)| t.clone())
            .collect()
    }

    /// Pairs m ≥ n violating F(m) ≤ F(n) or F(n) − Σ(m_i − n_i) ≤ F(m).
    pub fn monotonicity_violations(&self) -> Vec<(Vec<i64>, Vec<i64>)> {
        let mut bad = Vec::new();
        for (m, fm) in &self.values {
            for (n, fnn) in &self.values {
                if m == n || m.iter().zip(n).any(|(a, b)| a < b) {
                    continue;
                }
                let gap: i64 = m.iter().zip(n).map(|(a, b)| a - b).sum();
                if fm.value > fnn.value || fnn.value - Rational64::from_integer(gap) > fm.value {
                    bad.push((m.clone(), n.clone()));
                }
            }
        }
        bad
    }

    /// F(t₁,t₂) = F(t₂,t₁) wherever both are tabulated.
    pub fn is_symmetric(&self) -> bool {
        self.values.iter().all(|(t, e)| {
            let mut r = t.clone();
            r.reverse();
            self.get(&r).is_none_or(|v| v == e.value)
        })
    }

    /// Two-dimensional tables as a grid (t₂ descending down, t₁ ascending
    /// across); other shapes as one line per point. `*` marks inferred values.
    pub fn render_grid(&self) -> String {
        let cell = |e: &FEntry| format!("{}{}", fmt_q(&e.value), if e.inferred { "*" } else { "" });
        let mut out = String::new();
        match self.window.0.as_slice() {
            [(a1, b1)] => {
                let cells: Vec<String> = (*a1..=*b1).map(|t| format!("{:>4}", t)).collect();
                out += &format!("{:>6}{}\n", "t", cells.join(""));
                let cells: Vec<String> = (*a1..=*b1).map(|t| format!("{:>4}", cell(&self.values[&vec![t]]))).collect();
                out += &format!("{:>6}{}\n", "F", cells.join(""));
            }
            [(a1, b1), (a2, b2)] => {
                for t2 in (*a2..=*b2).rev() {
                    let cells: Vec<String> =
                        (*a1..=*b1).map(|t1| format!("{:>4}", cell(&self.values[&vec![t1, t2]]))).collect();
                    out += &format!("{:>4} |{}\n", t2, cells.join(""));
                }
                out += &format!("{:>4} +{}\n", "", "-".repeat(4 * (b1 - a1 + 1) as usize));
                let cells: Vec<String> = (*a1..=*b1).map(|t| format!("{:>4}", t)).collect();
                out += &format!("{:>4}  {}\n", "", cells.join(""));
            }
            _ => {
                for (t, e) in &self.values {
                    out += &format!("{:?}: {}\n", t, cell(e));
                }
            }
        }
        out
    }
}

impl Serialize for FTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Point<'a> {
            t: &'a [i64],
            value: String,
            inferred: bool,
        }
        let pts: Vec<Point> = self
            .values
            .iter()
            .map(|(t, e)| Point { t, value: fmt_q(&e.value), inferred: e.inferred })
            .collect();
        let mut st = s.serialize_struct("FTable", 7)?;
        st.serialize_field("base", &self.base)?;
        st.serialize_field("components", &self.components)?;
        st.serialize_field("variant", &self.variant)?;
        st.serialize_field("window", &self.window)?;
        st.serialize_field("nu0", &self.nu0.map(|v| fmt_q(&v)))?;
        st.serialize_field("values", &pts)?;
        st.serialize_field("assumptions", &self.assumptions)?;
        st.end()
    }
}
