//! Unnormalized Jones polynomial from the Kauffman bracket state sum.

use linkconc_core::Diagram;

use crate::error::{HomologyError, Result};
use crate::laurent::LaurentPoly;

pub const JONES_LIMIT: usize = 20;

/// Circle count of every state, loops included.
pub(crate) fn state_circles(d: &Diagram, state: u64, parent: &mut Vec<u32>) -> usize {
    let max = d.max_edge() as usize;
    parent.clear();
    parent.extend(0..=max as u32);
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    let mut circles = d.edges().count();
    for (i, c) in d.crossings().iter().enumerate() {
        for (a, b) in c.smoothing(((state >> i) & 1) as u8) {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra as usize] = rb;
                circles -= 1;
            }
        }
    }
    circles + d.loops()
}

/// (−1)^{n₋} q^{n₊−2n₋} Σ_s (−q)^{|s|} (q+q⁻¹)^{#circles(s)}; the unknot gives q + q⁻¹.
pub fn kauffman_jones(d: &Diagram) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > JONES_LIMIT {
        return Err(HomologyError::TooLarge { crossings: n, limit: JONES_LIMIT });
    }
    let max_c = d.max_edge() as usize + d.loops() + 1;
    // counts[r][c] = number of states with r one-smoothings and c circles.
    let mut counts = vec![vec![0i64; max_c + 1]; n + 1];
    let mut buf = Vec::new();
    for s in 0..(1u64 << n) {
        let c = state_circles(d, s, &mut buf);
        counts[s.count_ones() as usize][c] += 1;
    }
    let circle = &LaurentPoly::monomial(1, 1) + &LaurentPoly::monomial(1, -1);
    let mut sum = LaurentPoly::zero();
    for (r, row) in counts.iter().enumerate() {
        for (c, &k) in row.iter().enumerate() {
            if k != 0 {
                let sign = if r % 2 == 0 { k } else { -k };
                let term = &LaurentPoly::monomial(sign, r as i32) * &circle.pow(c as u32);
                sum = &sum + &term;
            }
        }
    }
    let (np, nm) = (d.n_plus() as i32, d.n_minus() as i32);
    let sign = if nm % 2 == 0 { 1 } else { -1 };
    Ok(&LaurentPoly::monomial(sign, np - 2 * nm) * &sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkconc_core::braid::BraidWord;

    fn poly(terms: &[(i64, i32)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    #[test]
    fn small_links() {
        assert_eq!(kauffman_jones(&Diagram::unlink(1)).unwrap(), poly(&[(1, 1), (1, -1)]));
        let hopf = BraidWord::new(2, vec![1, 1]).unwrap().closure();
        assert_eq!(kauffman_jones(&hopf).unwrap(), poly(&[(1, 6), (1, 4), (1, 2), (1, 0)]));
        // The q⁹ coefficient is −1: the graded Euler characteristic of Kh^{3,9}.
        let tref = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure();
        assert_eq!(kauffman_jones(&tref).unwrap(), poly(&[(-1, 9), (1, 5), (1, 3), (1, 1)]));
        let kink = BraidWord::new(2, vec![-1]).unwrap().closure();
        assert_eq!(kauffman_jones(&kink).unwrap(), kauffman_jones(&Diagram::unlink(1)).unwrap());
    }

    #[test]
    fn mirror_inverts() {
        let d = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap().closure();
        assert_eq!(kauffman_jones(&d.mirror()).unwrap(), kauffman_jones(&d).unwrap().invert());
    }
}
