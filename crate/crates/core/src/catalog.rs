//! Built-in links and the link-expression language used by the CLI.
//!
//! Expressions: a catalog name, `torus(p,q)`, `L(t)`, `BR[..]`, `QP[..]`,
//! `PD[..]`, PD-JSON, `mirror(x)`, `union(x,y)`, `reverse(x,i)`,
//! `W+(x,t1,..,tl)`, `W-(..)`, `W'+(x,t;i)` and `W'-(x,t;i)`.

use crate::braid::{torus_braid, BandWord, BraidWord};
use crate::diagram::{Diagram, EdgeId};
use crate::error::{LinkError, Result};
use crate::whitehead::{fully_clasped, reduced, Clasp};

const L8A9: &str = include_str!("../data/l8a9.pd");
const L8A9_TABLE: &str = include_str!("../data/l8a9-table.pd");
const LEFT_TREFOIL: &str = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const FIGURE_EIGHT: &str = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
const HOPF_NEGATIVE_PD: &str = "PD[X[4,1,3,2],X[2,3,1,4]]";

#[derive(Debug, Clone, Copy)]
enum Source {
    Pd(&'static str),
    Braid(usize, &'static [i32]),
    Loops(usize),
    Family(fn() -> Diagram),
}

#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub notes: &'static str,
    source: Source,
}

impl CatalogEntry {
    pub fn build(&self) -> Diagram {
        let d = match self.source {
            Source::Pd(s) => Diagram::parse(s).expect("catalog PD codes are valid"),
            Source::Braid(n, w) => BraidWord::new(n, w.to_vec())
                .expect("catalog braids are valid")
                .closure(),
            Source::Loops(k) => Diagram::unlink(k),
            Source::Family(f) => f(),
        };
        d.with_name(self.name)
    }

    pub fn generator(&self) -> String {
        match self.source {
            Source::Pd(s) => s.trim().to_string(),
            Source::Braid(n, w) => BraidWord {
                strands: n,
                letters: w.to_vec(),
            }
            .to_string(),
            Source::Loops(k) => format!("PD[Loop[{k}]]"),
            Source::Family(_) => "parametric family".into(),
        }
    }
}

const T34: &[i32] = &[1, 2, 1, 2, 1, 2, 1, 2];

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "unknot", notes: "crossing-free circle", source: Source::Loops(1) },
    CatalogEntry { name: "unknot-kink", notes: "unknot with one positive kink", source: Source::Braid(2, &[1]) },
    CatalogEntry { name: "unknot-negkink", notes: "unknot with one negative kink", source: Source::Braid(2, &[-1]) },
    CatalogEntry { name: "unknot-2kink", notes: "unknot with two positive kinks", source: Source::Braid(3, &[1, 2]) },
    CatalogEntry { name: "unlink2", notes: "2-component unlink", source: Source::Loops(2) },
    CatalogEntry { name: "trefoil+", notes: "right-handed trefoil T(2,3), closure of s1^3", source: Source::Braid(2, &[1, 1, 1]) },
    CatalogEntry { name: "trefoil-", notes: "left-handed trefoil, KnotAtlas PD", source: Source::Pd(LEFT_TREFOIL) },
    CatalogEntry { name: "trefoil-braid-", notes: "left-handed trefoil, closure of s1^-3", source: Source::Braid(2, &[-1, -1, -1]) },
    CatalogEntry { name: "figure8", notes: "figure-eight knot, KnotAtlas PD", source: Source::Pd(FIGURE_EIGHT) },
    CatalogEntry { name: "figure8-braid", notes: "figure-eight knot, closure of s1 s2^-1 s1 s2^-1", source: Source::Braid(3, &[1, -2, 1, -2]) },
    CatalogEntry { name: "hopf+", notes: "positive Hopf link, closure of s1^2", source: Source::Braid(2, &[1, 1]) },
    CatalogEntry { name: "hopf-", notes: "negative Hopf link, closure of s1^-2", source: Source::Braid(2, &[-1, -1]) },
    CatalogEntry { name: "hopf-pd", notes: "negative Hopf link, KnotAtlas L2a1 PD", source: Source::Pd(HOPF_NEGATIVE_PD) },
    CatalogEntry { name: "T(2,4)", notes: "positive torus link T(2,4)", source: Source::Braid(2, &[1, 1, 1, 1]) },
    CatalogEntry { name: "T(3,4)", notes: "positive torus knot T(3,4), closure of (s1 s2)^4", source: Source::Braid(3, T34) },
    CatalogEntry { name: "L3", notes: "2-component link L_3: unknotted components, lk 2", source: Source::Family(|| l_family(3)) },
    CatalogEntry { name: "l8a9", notes: "KnotAtlas L8a9: component A has edges 1-10", source: Source::Pd(L8A9) },
    CatalogEntry { name: "l8a9-table", notes: "L8a9 from the Hoste-Thistlethwaite DT code hbcedefahgcb.01011010", source: Source::Pd(L8A9_TABLE) },
];

/// Alternate diagrams of the same oriented link.
pub const ALTERNATES: &[&[&str]] = &[
    &["unknot", "unknot-kink", "unknot-negkink", "unknot-2kink"],
    &["trefoil-", "trefoil-braid-"],
    &["figure8", "figure8-braid"],
    &["hopf-", "hopf-pd"],
    &["l8a9", "l8a9-table"],
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    let key = match name {
        "hopf" | "H" | "H+" => "hopf+",
        "H-" => "hopf-",
        "trefoil" => "trefoil+",
        "L8a9" => "l8a9",
        "U2" => "unlink2",
        other => other,
    };
    ENTRIES.iter().find(|e| e.name == key)
}

/// The 2-component link L_t: a box of 2t positive crossings between the
/// components and three closing crossings; lk = t − 1, 2t + 3 crossings.
pub fn l_family(t: usize) -> Diagram {
    assert!(t >= 1, "L_t needs t ≥ 1");
    let t2 = 2 * t;
    let a = |i: usize| (i + 1) as EdgeId;
    let b = |i: usize| (t2 + 3 + i) as EdgeId;
    let mut tuples = Vec::new();
    for k in 1..=t2 {
        if k % 2 == 1 {
            tuples.push([b(k - 1), a(k), b(k), a(k - 1)]);
        } else {
            tuples.push([a(k - 1), b(k), a(k), b(k - 1)]);
        }
    }
    tuples.push([b(t2), b(0), b(t2 + 1), b(t2 + 3)]);
    tuples.push([b(t2 + 2), a(t2), b(t2 + 3), a(t2 + 1)]);
    tuples.push([a(t2 + 1), b(t2 + 1), a(0), b(t2 + 2)]);
    Diagram::from_pd(tuples, 0, Some(format!("L{t}"))).expect("L_t is a valid diagram")
}

/// Resolves a link expression to a diagram.
pub fn resolve(expr: &str) -> Result<Diagram> {
    let e = expr.trim();
    if let Some(entry) = lookup(e) {
        return Ok(entry.build());
    }
    if e.starts_with("PD[") || e.starts_with('{') {
        return Diagram::parse(e);
    }
    if e.starts_with("BR[") {
        return Ok(BraidWord::parse(e)?.closure());
    }
    if e.starts_with("QP[") {
        return Ok(BandWord::parse(e)?.expand().closure());
    }
    if let Some(t) = e.strip_prefix('L').and_then(|r| r.parse::<usize>().ok()) {
        return family_l(t);
    }
    let (head, args) = split_call(e).ok_or_else(|| LinkError::UnknownLink(e.to_string()))?;
    let int = |s: &str| -> Result<i64> {
        s.trim()
            .parse()
            .map_err(|_| LinkError::Malformed(format!("expected an integer, got {s:?}")))
    };
    match head {
        "torus" | "T" => {
            if args.len() != 2 {
                return Err(LinkError::Malformed("torus(p,q) takes two arguments".into()));
            }
            let (p, q) = (int(args[0])?, int(args[1])?);
            if p < 1 || q < 1 {
                return Err(LinkError::Braid("torus link needs p, q ≥ 1".into()));
            }
            Ok(torus_braid(p as usize, q as usize)?
                .closure()
                .with_name(format!("T({p},{q})")))
        }
        "L" => {
            let t = int(args.first().copied().unwrap_or(""))?;
            family_l(t.max(0) as usize)
        }
        "mirror" => Ok(resolve(single(&args)?)?.mirror()),
        "union" => {
            let mut it = args.iter();
            let first = it
                .next()
                .ok_or_else(|| LinkError::Malformed("union needs arguments".into()))?;
            let mut d = resolve(first)?;
            for a in it {
                d = d.disjoint_union(&resolve(a)?);
            }
            Ok(d)
        }
        "reverse" => {
            if args.len() != 2 {
                return Err(LinkError::Malformed("reverse(x,i) takes two arguments".into()));
            }
            resolve(args[0])?.reverse(int(args[1])? as usize)
        }
        "W+" | "W-" => {
            let clasp = clasp_of(head);
            let base = resolve(args.first().copied().unwrap_or(""))?;
            let twists: Vec<i64> = args[1..].iter().map(|a| int(a)).collect::<Result<_>>()?;
            Ok(fully_clasped(&base, &twists, clasp)?.with_name(e))
        }
        "W'+" | "W'-" => {
            let clasp = clasp_of(head);
            let base = resolve(args.first().copied().unwrap_or(""))?;
            let rest = args
                .get(1)
                .ok_or_else(|| LinkError::Malformed("W' needs a twist".into()))?;
            let (t, c) = match rest.split_once(';') {
                Some((t, c)) => (int(t)?, int(c)? as usize),
                None => (int(rest)?, 0),
            };
            Ok(reduced(&base, t, c, clasp)?.with_name(e))
        }
        _ => Err(LinkError::UnknownLink(e.to_string())),
    }
}

fn family_l(t: usize) -> Result<Diagram> {
    if t == 0 {
        return Err(LinkError::Malformed("L_t needs t ≥ 1".into()));
    }
    Ok(l_family(t))
}

fn clasp_of(head: &str) -> Clasp {
    if head.ends_with('+') {
        Clasp::Positive
    } else {
        Clasp::Negative
    }
}

fn single<'a>(args: &[&'a str]) -> Result<&'a str> {
    match args {
        [a] => Ok(a),
        _ => Err(LinkError::Malformed("expected one argument".into())),
    }
}

/// `head(a, b(c,d), e)` -> ("head", ["a", "b(c,d)", "e"]), splitting at top-level commas.
fn split_call(e: &str) -> Option<(&str, Vec<&str>)> {
    let open = e.find('(')?;
    if !e.ends_with(')') {
        return None;
    }
    let head = e[..open].trim();
    let body = &e[open + 1..e.len() - 1];
    let mut args = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in body.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                args.push(body[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    args.push(body[start..].trim());
    Some((head, args))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        assert!(ENTRIES.len() >= 10);
        for e in ENTRIES {
            let d = e.build();
            assert_eq!(d.name(), Some(e.name));
        }
    }

    #[test]
    fn l_family_shape() {
        for t in 1..=4 {
            let d = l_family(t);
            assert_eq!(d.crossing_count(), 2 * t + 3);
            assert_eq!(d.component_count(), 2);
            assert_eq!(d.linking_matrix().get(0, 1), t as i64 - 1);
            assert!(d.is_alternating());
            assert_eq!(d.split_components(), 1);
        }
    }

    #[test]
    fn l8a9_gate() {
        let d = resolve("l8a9").unwrap();
        assert_eq!(d.crossing_count(), 8);
        assert_eq!(d.component_count(), 2);
        assert!(d.is_alternating());
        assert_eq!(d.split_components(), 1);
        assert_eq!(d.linking_matrix().get(0, 1), 1);
        assert_eq!(d.crossing_components()[0].len(), 10);
    }

    #[test]
    fn expressions() {
        assert_eq!(resolve("torus(2,3)").unwrap().writhe(), 3);
        assert_eq!(resolve("W+(hopf,0,1)").unwrap().crossing_count(), 14);
        assert!(resolve("W'+(l8a9,1;0)").unwrap().crossing_count() > 8);
        assert_eq!(resolve("mirror(trefoil+)").unwrap().writhe(), -3);
        assert_eq!(resolve("union(trefoil+,unknot)").unwrap().component_count(), 2);
        assert_eq!(resolve("L(3)").unwrap().crossing_count(), 9);
        assert!(resolve("nonsense").is_err());
        assert!(resolve("W+(hopf,0)").is_err());
    }
}
