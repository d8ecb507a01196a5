//! Unit cubes in the twist lattice on which F takes many values, and the
//! resulting obstruction to strong concordance with split links.

use itertools::Itertools;
use linkconc_core::rational::{fmt_q, serialize_q};
use linkconc_core::Diagram;
use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::error::{ConcordanceError, Result};
use crate::ftable::{f_window, FTable, Variant, Window, WindowOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    CubeFound,
    /// No cube inside the window; nothing is claimed outside it.
    ObstructedInWindow,
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cube {
    pub base: Vec<i64>,
    pub axes: Vec<usize>,
    #[serde(serialize_with = "serialize_vertices")]
    pub vertices: Vec<(Vec<i64>, Rational64)>,
}

fn serialize_vertices<S: Serializer>(v: &[(Vec<i64>, Rational64)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(t, x)| (t, fmt_q(x))))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubeReport {
    pub variant: Variant,
    pub k: usize,
    #[serde(serialize_with = "serialize_q")]
    pub global_max: Rational64,
    pub window: Window,
    pub cubes: Vec<Cube>,
    pub verdict: Verdict,
}

/// Every unit k-cube in the table's window on which F takes at least k+1
/// values with both extremes attained once. Its maximum must also be the
/// global maximum. The global maximum is the theoretical upper bound of
/// the variant, which is known to be attained.
pub fn cube_search(table: &FTable, k: usize) -> Result<CubeReport> {
    let dims = table.window.dims();
    if k > dims {
        return Err(ConcordanceError::CubeDimension { k, dims });
    }
    let global_max = table.range().1;
    let mut cubes = Vec::new();
    for axes in (0..dims).combinations(k) {
        let mut shrunk = table.window.clone();
        for &a in &axes {
            shrunk.0[a].1 -= 1;
        }
        if shrunk.0.iter().any(|r| r.0 > r.1) {
            continue;
        }
        for base in shrunk.points() {
            let vertices: Vec<(Vec<i64>, Rational64)> = axes
                .iter()
                .powerset()
                .map(|sub| {
                    let mut v = base.clone();
                    for &&a in &sub {
                        v[a] += 1;
                    }
                    let f = table.get(&v).expect("window is filled");
                    (v, f)
                })
                .collect();
            if is_valued_cube(&vertices, k, global_max) {
                cubes.push(Cube { base, axes: axes.clone(), vertices });
            }
        }
    }
    let verdict = if cubes.is_empty() {
        Verdict::ObstructedInWindow
    } else {
        Verdict::CubeFound
    };
    Ok(CubeReport {
        variant: table.variant,
        k,
        global_max,
        window: table.window.clone(),
        cubes,
        verdict,
    })
}

fn is_valued_cube(vertices: &[(Vec<i64>, Rational64)], k: usize, global_max: Rational64) -> bool {
    let vals: Vec<Rational64> = vertices.iter().map(|v| v.1).collect();
    let max = *vals.iter().max().unwrap();
    let min = *vals.iter().min().unwrap();
    let once = |x: Rational64| vals.iter().filter(|&&v| v == x).count() == 1;
    vals.iter().unique().count() > k && once(max) && once(min) && max == global_max
}

/// Which F-functions the split obstruction tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Functions {
    #[default]
    F,
    FBar,
    Both,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitReport {
    pub r: usize,
    pub verdict: Verdict,
    pub plus: Option<CubeReport>,
    pub minus: Option<CubeReport>,
    pub notes: Vec<String>,
}

/// Looks for (r+1)-valued r-cubes of F and/or F̄ on the window. A link
/// strongly concordant to a link with r split components has such cubes for
/// both, so their absence from either table obstructs it.
pub fn split_obstruction(
    d: &Diagram,
    r: usize,
    window: &Window,
    which: Functions,
    opts: WindowOptions,
) -> Result<SplitReport> {
    let ell = d.component_count();
    if r > ell {
        return Err(ConcordanceError::CubeDimension { k: r, dims: ell });
    }
    if r <= 1 {
        return Ok(SplitReport {
            r,
            verdict: Verdict::Vacuous,
            plus: None,
            minus: None,
            notes: vec!["every link has at least one split component".into()],
        });
    }
    let search = |v: Variant| -> Result<CubeReport> { cube_search(&f_window(d, v, window, opts)?, r) };
    let plus = match which {
        Functions::F | Functions::Both => Some(search(Variant::FullPlus)?),
        Functions::FBar => None,
    };
    let minus = match which {
        Functions::FBar | Functions::Both => Some(search(Variant::FullMinus)?),
        Functions::F => None,
    };
    let mut notes = Vec::new();
    let empty = [&plus, &minus].iter().any(|c| c.as_ref().is_some_and(|c| c.cubes.is_empty()));
    let verdict = if empty {
        notes.push(format!(
            "no {}-valued cube in the window: not strongly concordant to a link with {r} split components, provided no cube exists outside the window, which is not checked",
            r + 1
        ));
        Verdict::ObstructedInWindow
    } else {
        notes.push("cubes found; no obstruction".into());
        Verdict::CubeFound
    };
    Ok(SplitReport {
        r,
        verdict,
        plus,
        minus,
        notes,
    })
}
