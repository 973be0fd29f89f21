//! The poset of pieces (local pointed groups) and an exact isomorphism test.

use crate::analysis::Analysis;
use crate::error::Result;
use crate::points::Oracle;

use super::Multiposet;

/// Labels of the piece nodes of `mp` and the order relation between them:
/// `Q_δ ≤ R_ε` when some D-conjugate of `Q` lies in `R` with
/// `m(Q_δ, R_ε) ≠ 0`.
pub fn piece_order(a: &Analysis, o: &Oracle, mp: &Multiposet) -> Result<(Vec<String>, Vec<Vec<bool>>)> {
    let nodes: Vec<_> = mp.nodes.iter().filter(|n| n.is_piece).collect();
    let n = nodes.len();
    let mut rel = vec![vec![false; n]; n];
    for (i, x) in nodes.iter().enumerate() {
        let q = &a.classes[x.point.0].rep;
        for (j, y) in nodes.iter().enumerate() {
            let r = &a.classes[y.point.0].rep;
            if i == j {
                rel[i][j] = true;
                continue;
            }
            if q.order() >= r.order() || !r.order().is_multiple_of(q.order()) {
                continue;
            }
            for &d in a.sylow.elements() {
                let qd = q.conjugate(d);
                if qd.is_subgroup_of(r) && o.relative_multiplicity(&qd, x.point.1, r, y.point.1)? != 0 {
                    rel[i][j] = true;
                    break;
                }
            }
        }
    }
    Ok((nodes.iter().map(|n| n.label.clone()).collect(), rel))
}

/// Whether two finite relations are isomorphic, by backtracking over
/// bijections that respect in- and out-degrees.
pub fn posets_isomorphic(r: &[Vec<bool>], s: &[Vec<bool>]) -> bool {
    let n = r.len();
    if n != s.len() {
        return false;
    }
    let profile = |m: &[Vec<bool>], i: usize| {
        let up = (0..n).filter(|&j| m[i][j]).count();
        let down = (0..n).filter(|&j| m[j][i]).count();
        (up, down)
    };
    let pr: Vec<_> = (0..n).map(|i| profile(r, i)).collect();
    let ps: Vec<_> = (0..n).map(|i| profile(s, i)).collect();
    let mut a = pr.clone();
    let mut b = ps.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    fn extend(
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        r: &[Vec<bool>],
        s: &[Vec<bool>],
        pr: &[(usize, usize)],
        ps: &[(usize, usize)],
    ) -> bool {
        let n = r.len();
        if k == n {
            return true;
        }
        for t in 0..n {
            if used[t] || pr[k] != ps[t] {
                continue;
            }
            if (0..k).all(|i| r[i][k] == s[map[i]][t] && r[k][i] == s[t][map[i]]) && r[k][k] == s[t][t] {
                used[t] = true;
                map.push(t);
                if extend(k + 1, map, used, r, s, pr, ps) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    extend(0, &mut Vec::new(), &mut vec![false; n], r, s, &pr, &ps)
}

#[cfg(test)]
mod tests {
    use super::posets_isomorphic;

    fn chain(n: usize) -> Vec<Vec<bool>> {
        (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect()
    }

    #[test]
    fn chains_and_antichains() {
        let anti: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i == j).collect()).collect();
        assert!(posets_isomorphic(&chain(3), &chain(3)));
        assert!(!posets_isomorphic(&chain(3), &anti));
        assert!(!posets_isomorphic(&chain(3), &chain(4)));
    }

    #[test]
    fn relabelled_vee() {
        // a ≤ c, b ≤ c versus c' ≤ ... with the top first.
        let v = vec![vec![true, false, true], vec![false, true, true], vec![false, false, true]];
        let w = vec![vec![true, false, false], vec![true, true, false], vec![true, false, true]];
        assert!(posets_isomorphic(&v, &w));
        let wedge = vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]];
        assert!(!posets_isomorphic(&v, &wedge));
    }
}
