//! Braid words with their closures. Quasi-positive band words expand to them.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, EdgeId};
use crate::error::{LinkError, Result};

/// A word in the Artin generators: `+i` is σ_i, `-i` is σ_i⁻¹.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        let w = BraidWord { strands, letters };
        w.validate()?;
        Ok(w)
    }

    fn validate(&self) -> Result<()> {
        if self.strands == 0 {
            return Err(LinkError::Braid("a braid needs at least one strand".into()));
        }
        check_letters(self.strands, &self.letters)
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Strand permutation: position p at the bottom ends at `perm[p]` on top.
    pub fn permutation(&self) -> Vec<usize> {
        permutation(self.strands, &self.letters)
    }

    pub fn component_count(&self) -> usize {
        cycle_count(&self.permutation())
    }

    /// Closure with strands running upward.
    pub fn closure(&self) -> Diagram {
        let d = self.strands;
        let mut next: EdgeId = 1;
        let bottom: Vec<EdgeId> = (0..d)
            .map(|_| {
                next += 1;
                next - 1
            })
            .collect();
        let mut cur = bottom.clone();
        let mut touched = vec![false; d];
        let mut tuples = Vec::new();
        let mut dirs = Vec::new();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (sw, se) = (cur[i], cur[i + 1]);
            let (nw, ne) = (next, next + 1);
            next += 2;
            if l > 0 {
                tuples.push([se, ne, nw, sw]);
                dirs.push(true);
            } else {
                tuples.push([sw, se, ne, nw]);
                dirs.push(false);
            }
            cur[i] = nw;
            cur[i + 1] = ne;
            touched[i] = true;
            touched[i + 1] = true;
        }
        let top_to_bottom: std::collections::HashMap<EdgeId, EdgeId> =
            cur.iter().copied().zip(bottom.iter().copied()).collect();
        for t in tuples.iter_mut() {
            for e in t.iter_mut() {
                if let Some(&b) = top_to_bottom.get(e) {
                    *e = b;
                }
            }
        }
        let loops = touched.iter().filter(|&&t| !t).count();
        Diagram::from_oriented(tuples, dirs, loops, None)
            .expect("braid closures are valid diagrams")
            .normalized()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix("BR[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| LinkError::Braid(format!("expected BR[d; ...], got {text:?}")))?;
        let (d, rest) = inner
            .split_once(';')
            .ok_or_else(|| LinkError::Braid("missing ';' after strand count".into()))?;
        let strands = d
            .parse()
            .map_err(|_| LinkError::Braid(format!("bad strand count {d:?}")))?;
        BraidWord::new(strands, parse_ints(rest)?)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "BR[{}; {}]", self.strands, l.join(","))
    }
}

/// (σ₁σ₂···σ_{p−1})^q on p strands.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord> {
    if p == 0 || q == 0 {
        return Err(LinkError::Braid("torus braid needs p, q ≥ 1".into()));
    }
    let letters = (0..q).flat_map(|_| 1..p as i32).collect();
    BraidWord::new(p, letters)
}

/// One band w σ_j w⁻¹ (j may be negative for a negative band).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Band {
    pub conjugator: Vec<i32>,
    pub generator: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandWord {
    pub strands: usize,
    pub bands: Vec<Band>,
}

impl BandWord {
    pub fn new(strands: usize, bands: Vec<Band>) -> Result<Self> {
        if strands == 0 {
            return Err(LinkError::Braid("a braid needs at least one strand".into()));
        }
        for b in &bands {
            check_letters(strands, &b.conjugator)?;
            check_letters(strands, &[b.generator])?;
        }
        Ok(BandWord { strands, bands })
    }

    /// Every letter of a positive braid word as a trivially conjugated band.
    pub fn from_positive_word(w: &BraidWord) -> Result<Self> {
        if !w.is_positive() {
            return Err(LinkError::Braid("word is not positive".into()));
        }
        let bands = w
            .letters
            .iter()
            .map(|&g| Band {
                conjugator: Vec::new(),
                generator: g,
            })
            .collect();
        BandWord::new(w.strands, bands)
    }

    pub fn expand(&self) -> BraidWord {
        let mut letters = Vec::new();
        for b in &self.bands {
            letters.extend(&b.conjugator);
            letters.push(b.generator);
            letters.extend(b.conjugator.iter().rev().map(|&x| -x));
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn is_quasipositive(&self) -> bool {
        self.bands.iter().all(|b| b.generator > 0)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix("QP[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| LinkError::Braid(format!("expected QP[d; ...], got {text:?}")))?;
        let (d, mut rest) = inner
            .split_once(';')
            .ok_or_else(|| LinkError::Braid("missing ';' after strand count".into()))?;
        let strands = d
            .parse()
            .map_err(|_| LinkError::Braid(format!("bad strand count {d:?}")))?;
        let mut bands = Vec::new();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| LinkError::Braid(format!("expected (w|j), got {rest:?}")))?;
            let (w, j) = body
                .0
                .split_once('|')
                .ok_or_else(|| LinkError::Braid("band needs 'w|j'".into()))?;
            let generator = j
                .parse()
                .map_err(|_| LinkError::Braid(format!("bad generator {j:?}")))?;
            bands.push(Band {
                conjugator: parse_ints(w)?,
                generator,
            });
            rest = body.1.strip_prefix(',').unwrap_or(body.1);
        }
        BandWord::new(strands, bands)
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bands: Vec<String> = self
            .bands
            .iter()
            .map(|b| {
                let w: Vec<String> = b.conjugator.iter().map(|x| x.to_string()).collect();
                format!("({}|{})", w.join(","), b.generator)
            })
            .collect();
        write!(f, "QP[{}; {}]", self.strands, bands.join(", "))
    }
}

/// ν of the closure of a quasi-positive band word: (b − d + ℓ)/2.
pub fn quasipositive_value(w: &BandWord) -> Result<Rational64> {
    if !w.is_quasipositive() {
        return Err(LinkError::Braid("band word has a negative band".into()));
    }
    let b = w.bands.len() as i64;
    let d = w.strands as i64;
    let l = w.expand().component_count() as i64;
    Ok(Rational64::new(b - d + l, 2))
}

/// Components of the closure of T(p,q): gcd(p,q).
pub fn torus_components(p: usize, q: usize) -> usize {
    p.gcd(&q)
}

fn check_letters(strands: usize, letters: &[i32]) -> Result<()> {
    for &l in letters {
        if l == 0 || l.unsigned_abs() as usize >= strands {
            return Err(LinkError::Braid(format!(
                "generator {l} out of range for {strands} strands"
            )));
        }
    }
    Ok(())
}

fn parse_ints(s: &str) -> Result<Vec<i32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.parse()
                .map_err(|_| LinkError::Braid(format!("bad generator {x:?}")))
        })
        .collect()
}

fn permutation(strands: usize, letters: &[i32]) -> Vec<usize> {
    // at[pos] = which bottom strand currently occupies pos.
    let mut at: Vec<usize> = (0..strands).collect();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut perm = vec![0; strands];
    for (pos, &s) in at.iter().enumerate() {
        perm[s] = pos;
    }
    perm
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for s in 0..perm.len() {
        if !seen[s] {
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_closure() {
        let d = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure();
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 3);
    }

    #[test]
    fn trivial_closures() {
        let u = BraidWord::new(2, vec![]).unwrap().closure();
        assert_eq!((u.component_count(), u.crossing_count()), (2, 0));
        let k = BraidWord::new(2, vec![1]).unwrap().closure();
        assert_eq!(k.to_pd_string(), "PD[X[2,2,1,1]]");
        assert_eq!(k.writhe(), 1);
        let k = BraidWord::new(3, vec![1]).unwrap().closure();
        assert_eq!((k.component_count(), k.loops()), (2, 1));
    }

    #[test]
    fn torus_braids() {
        assert_eq!(torus_braid(2, 3).unwrap().letters, vec![1, 1, 1]);
        let w = torus_braid(3, 4).unwrap();
        assert_eq!(w.letters.len(), 8);
        assert_eq!(w.component_count(), 1);
        assert_eq!(torus_braid(1, 5).unwrap().closure().component_count(), 1);
        assert_eq!(torus_braid(2, 4).unwrap().component_count(), 2);
    }

    #[test]
    fn band_word_value() {
        let w = BandWord::parse("QP[3; (|2), (|2), (-1,-1|2), (-1,-1|2), (-1,-1|2)]").unwrap();
        assert_eq!(w.bands.len(), 5);
        assert_eq!(w.expand().component_count(), 2);
        assert_eq!(quasipositive_value(&w).unwrap(), Rational64::from_integer(2));
        assert_eq!(BandWord::parse(&w.to_string()).unwrap(), w);
        let one = BandWord::parse("QP[2; (|1)]").unwrap();
        assert_eq!(quasipositive_value(&one).unwrap(), Rational64::from_integer(0));
    }

    #[test]
    fn parse_errors() {
        assert!(BraidWord::parse("BR[2; 1, 2]").is_err());
        assert!(BraidWord::parse("BR[2; 0]").is_err());
        assert_eq!(
            BraidWord::parse("BR[3; 1,-2]").unwrap(),
            BraidWord::new(3, vec![1, -2]).unwrap()
        );
    }
}
