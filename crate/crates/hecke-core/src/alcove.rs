//! The shifted affine Weyl group geometry on `E_h`.
//!
//! Coordinates are indexed with the last component first: row `i` of
//! component `m` sits at position `h_l + ... + h_{m+1} + i` (1-indexed). A point
//! `x` is studied through `y = x + rho`; for a multipartition, `y` at a
//! nonempty row is one more than the charged content of the row's last box.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multipartition::{is_s_admissible, multipartitions, Charge, Multipartition, Node, Tableau};

/// The root `eps_a - eps_b`, 0-indexed, `a != b`. Positive when `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub a: usize,
    pub b: usize,
}

impl Root {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b);
        Root { a, b }
    }

    pub fn pair(&self, y: &[i64]) -> i64 {
        y[self.a] - y[self.b]
    }

    pub fn is_positive(&self) -> bool {
        self.a < self.b
    }
}

pub fn positive_roots(h: usize) -> Vec<Root> {
    (0..h).flat_map(|a| (a + 1..h).map(move |b| Root { a, b })).collect()
}

/// 0-indexed coordinate of row `i` (1-indexed) of component `m` (1-indexed).
pub fn coordinate_index(m: usize, i: usize, hbar: &[usize]) -> usize {
    hbar[m..].iter().sum::<usize>() + i - 1
}

/// `(component, row)` of a 0-indexed coordinate, both 1-indexed.
pub fn coordinate_label(idx: usize, hbar: &[usize]) -> (usize, usize) {
    let mut start = 0;
    for m in (1..=hbar.len()).rev() {
        if idx < start + hbar[m - 1] {
            return (m, idx - start + 1);
        }
        start += hbar[m - 1];
    }
    panic!("coordinate {idx} out of range for {hbar:?}");
}

pub fn rho(ch: &Charge, hbar: &[usize]) -> Vec<i64> {
    let mut out = Vec::with_capacity(hbar.iter().sum());
    for m in (1..=hbar.len()).rev() {
        for i in 0..hbar[m - 1] {
            out.push(ch.s[m - 1] - i as i64);
        }
    }
    out
}

pub fn embed(mp: &Multipartition, hbar: &[usize]) -> Result<Vec<i64>> {
    if mp.level() != hbar.len() || !mp.fits(hbar) {
        return Err(Error::HeightOverflow(hbar.to_vec()));
    }
    let mut out = Vec::with_capacity(hbar.iter().sum());
    for m in (1..=hbar.len()).rev() {
        for i in 1..=hbar[m - 1] {
            out.push(mp.part(m, i) as i64);
        }
    }
    Ok(out)
}

/// The multipartition with the given coordinates, if every block is a partition.
pub fn unembed(x: &[i64], hbar: &[usize]) -> Option<Multipartition> {
    let mut comps = vec![Vec::new(); hbar.len()];
    let mut start = 0;
    for m in (1..=hbar.len()).rev() {
        let block = &x[start..start + hbar[m - 1]];
        if block.iter().any(|&v| v < 0) || block.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        comps[m - 1] = block.iter().filter(|&&v| v > 0).map(|&v| v as usize).collect();
        start += hbar[m - 1];
    }
    Multipartition::new(comps).ok()
}

/// `s_{alpha, re} y = y - (<y, alpha> - re) alpha`, on shifted coordinates.
pub fn reflect_shifted(y: &[i64], alpha: Root, r: i64, e: i64) -> Vec<i64> {
    let k = alpha.pair(y) - r * e;
    let mut out = y.to_vec();
    out[alpha.a] -= k;
    out[alpha.b] += k;
    out
}

/// The shifted action `w . x = w(x + rho) - rho` of `s_{alpha, re}`.
pub fn reflect(x: &[i64], rho: &[i64], alpha: Root, r: i64, e: i64) -> Vec<i64> {
    let y: Vec<i64> = x.iter().zip(rho).map(|(a, b)| a + b).collect();
    reflect_shifted(&y, alpha, r, e).iter().zip(rho).map(|(a, b)| a - b).collect()
}

/// Rejects `e <= h` and heights that are not `s`-admissible.
pub fn check_setup(ch: &Charge, hbar: &[usize]) -> Result<()> {
    let h: usize = hbar.iter().sum();
    if ch.e <= h as i64 {
        return Err(Error::ESmall { e: ch.e, h });
    }
    if hbar.len() != ch.level() || !is_s_admissible(hbar, ch) {
        return Err(Error::NotAdmissible(hbar.to_vec()));
    }
    Ok(())
}

pub fn shifted(mp: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<Vec<i64>> {
    let x = embed(mp, hbar)?;
    Ok(x.iter().zip(rho(ch, hbar)).map(|(a, b)| a + b).collect())
}

/// Some `<y, alpha>` is a multiple of `e`.
pub fn on_wall(y: &[i64], e: i64) -> bool {
    positive_roots(y.len()).iter().any(|al| al.pair(y).rem_euclid(e) == 0)
}

/// `0 < y_a - y_b < e` for all `a < b`.
pub fn in_fundamental_alcove_shifted(y: &[i64], e: i64) -> bool {
    y.windows(2).all(|w| w[0] > w[1]) && y.first().zip(y.last()).map_or(true, |(f, l)| f - l < e)
}

pub fn in_fundamental_alcove(mp: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<bool> {
    check_setup(ch, hbar)?;
    Ok(in_fundamental_alcove_shifted(&shifted(mp, ch, hbar)?, ch.e))
}

/// Multipartitions of size at most `max_n` fitting `hbar` whose point lies in `F`.
pub fn fundamental_multipartitions(ch: &Charge, hbar: &[usize], max_n: usize) -> Result<Vec<Multipartition>> {
    check_setup(ch, hbar)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        for mp in multipartitions(n, ch.level()) {
            if mp.fits(hbar) && in_fundamental_alcove_shifted(&shifted(&mp, ch, hbar)?, ch.e) {
                out.push(mp);
            }
        }
    }
    Ok(out)
}

/// Number of hyperplanes separating `y` from the origin's image `rho`.
pub fn length_shifted(y: &[i64], e: i64) -> Result<u64> {
    let mut total = 0u64;
    for al in positive_roots(y.len()) {
        let d = al.pair(y);
        if d.rem_euclid(e) == 0 {
            return Err(Error::OnWall);
        }
        total += d.div_euclid(e).unsigned_abs();
    }
    Ok(total)
}

pub fn length(mp: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<u64> {
    check_setup(ch, hbar)?;
    length_shifted(&shifted(mp, ch, hbar)?, ch.e)
}

/// The coordinate sequence `p(1..n)` of a tableau: the box labelled `k` lies in row `p(k)`.
pub fn path_of_tableau(t: &Tableau, hbar: &[usize]) -> Result<Vec<usize>> {
    t.order()
        .iter()
        .map(|b| {
            if b.r > hbar[b.m - 1] {
                Err(Error::HeightOverflow(hbar.to_vec()))
            } else {
                Ok(coordinate_index(b.m, b.r, hbar))
            }
        })
        .collect()
}

/// The tableau traced by a path, if every prefix is a multipartition.
pub fn tableau_of_path(path: &[usize], hbar: &[usize]) -> Option<Tableau> {
    let mut x = vec![0i64; hbar.iter().sum()];
    let mut order = Vec::with_capacity(path.len());
    for &p in path {
        x[p] += 1;
        let (m, r) = coordinate_label(p, hbar);
        order.push(Node::new(r, x[p] as usize, m));
    }
    Tableau::from_order(hbar.len(), order).ok()
}

/// `sum_k sum_{hyperplanes}`: `+1` for stepping off a wall onto the origin's
/// side, `-1` for stepping onto a wall from the far side.
pub fn path_degree(path: &[usize], ch: &Charge, hbar: &[usize]) -> i64 {
    let e = ch.e;
    let origin = rho(ch, hbar);
    let mut y = origin.clone();
    let mut deg = 0;
    for &p in path {
        for c in 0..y.len() {
            if c == p {
                continue;
            }
            let o = origin[p] - origin[c];
            let before = y[p] - y[c];
            let after = before + 1;
            if before.rem_euclid(e) == 0 && o > before {
                deg += 1;
            }
            if after.rem_euclid(e) == 0 && o > after {
                deg -= 1;
            }
        }
        y[p] += 1;
    }
    deg
}

/// Residue of the box added at each step.
pub fn path_residues(path: &[usize], ch: &Charge, hbar: &[usize]) -> Vec<i64> {
    let mut y = rho(ch, hbar);
    path.iter()
        .map(|&p| {
            let r = y[p].rem_euclid(ch.e);
            y[p] += 1;
            r
        })
        .collect()
}

/// Standard tableaux of `mp` all of whose prefix shapes lie in the fundamental alcove.
pub fn fundamental_paths(mp: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<Vec<Vec<usize>>> {
    check_setup(ch, hbar)?;
    let target = shifted(mp, ch, hbar)?;
    if !in_fundamental_alcove_shifted(&target, ch.e) {
        return Err(Error::NotInAlcove);
    }
    let mut out = Vec::new();
    let mut y = rho(ch, hbar);
    let mut path = Vec::new();
    fn rec(y: &mut Vec<i64>, target: &[i64], e: i64, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if y.as_slice() == target {
            out.push(path.clone());
            return;
        }
        for p in 0..y.len() {
            if y[p] < target[p] {
                y[p] += 1;
                if in_fundamental_alcove_shifted(y, e) {
                    path.push(p);
                    rec(y, target, e, path, out);
                    path.pop();
                }
                y[p] -= 1;
            }
        }
    }
    rec(&mut y, &target, ch.e, &mut path, &mut out);
    Ok(out)
}

pub fn count_fundamental_paths(mp: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<usize> {
    Ok(fundamental_paths(mp, ch, hbar)?.len())
}

/// A generator of the affine Weyl group: a finite simple root `eps_t - eps_{t+1}`
/// (0-indexed `t`) or the affine root `eps_h - eps_1` at level `-e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SimpleRoot {
    Finite(usize),
    Affine,
}

/// Distance from the origin to the wall of the fundamental alcove labelled by `alpha`,
/// in steps of one box.
pub fn b_alpha(alpha: SimpleRoot, ch: &Charge, hbar: &[usize]) -> Result<i64> {
    check_setup(ch, hbar)?;
    let r = rho(ch, hbar);
    let h = r.len();
    match alpha {
        SimpleRoot::Finite(t) if t + 1 < h => Ok(r[t] - r[t + 1]),
        SimpleRoot::Finite(t) => Err(Error::InvalidParameter(format!("no simple root at {t}"))),
        SimpleRoot::Affine => Ok(ch.e + r[h - 1] - r[0]),
    }
}

/// All paths reachable from `path` by wall reflections of paths.
pub fn wall_reflection_class(path: &[usize], ch: &Charge, hbar: &[usize]) -> BTreeSet<Vec<usize>> {
    let e = ch.e;
    let origin = rho(ch, hbar);
    let mut seen = BTreeSet::new();
    seen.insert(path.to_vec());
    let mut queue = VecDeque::from([path.to_vec()]);
    while let Some(p) = queue.pop_front() {
        let mut y = origin.clone();
        for s in 0..=p.len() {
            if s > 0 {
                y[p[s - 1]] += 1;
            }
            for al in positive_roots(y.len()) {
                if al.pair(&y).rem_euclid(e) == 0 {
                    let q: Vec<usize> = p
                        .iter()
                        .enumerate()
                        .map(|(t, &c)| {
                            if t < s {
                                c
                            } else if c == al.a {
                                al.b
                            } else if c == al.b {
                                al.a
                            } else {
                                c
                            }
                        })
                        .collect();
                    if seen.insert(q.clone()) {
                        queue.push_back(q);
                    }
                }
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(s: &[i64], e: i64) -> Charge {
        Charge::new(s.to_vec(), e).unwrap()
    }

    #[test]
    fn rho_ordering() {
        assert_eq!(rho(&ch(&[0, 3, 4], 10), &[2, 3, 1]), vec![4, 3, 2, 1, 0, -1]);
        assert_eq!(rho(&ch(&[0], 3), &[1]), vec![0]);
        assert_eq!(embed(&Multipartition::empty(1), &[1]).unwrap(), vec![0]);
        let delta = Multipartition::from_parts(&[&[3, 3], &[3, 3, 3], &[3]]);
        assert_eq!(embed(&delta, &[2, 3, 1]).unwrap(), vec![3; 6]);
        let mp = Multipartition::from_parts(&[&[2], &[1, 1]]);
        let x = embed(&mp, &[1, 2]).unwrap();
        assert_eq!(x, vec![1, 1, 2]);
        assert_eq!(unembed(&x, &[1, 2]), Some(mp));
        assert!(embed(&Multipartition::from_parts(&[&[1, 1]]), &[1]).is_err());
        for idx in 0..6 {
            let (m, i) = coordinate_label(idx, &[2, 3, 1]);
            assert_eq!(coordinate_index(m, i, &[2, 3, 1]), idx);
        }
    }

    #[test]
    fn reflection_basics() {
        let y = vec![5, 2, 0];
        let al = Root::new(0, 2);
        let z = reflect_shifted(&y, al, 1, 4);
        assert_eq!(reflect_shifted(&z, al, 1, 4), y);
        assert_eq!(al.pair(&y) - 4, -(al.pair(&z) - 4));
        let on = vec![4, 2, 0];
        assert_eq!(reflect_shifted(&on, al, 1, 4), on);
        let r = vec![1, 0, -1];
        let x = vec![2, 1, 0];
        let back = reflect(&reflect(&x, &r, al, 1, 4), &r, al, 1, 4);
        assert_eq!(back, x);
    }

    #[test]
    fn alcove_and_length() {
        let c = ch(&[0], 4);
        assert!(in_fundamental_alcove(&Multipartition::empty(1), &c, &[2]).unwrap());
        assert_eq!(length(&Multipartition::empty(1), &c, &[2]).unwrap(), 0);
        // ((4)) with h = (2): y = (4, -1), difference 5 crosses the wall at 4
        let mp = Multipartition::from_parts(&[&[4]]);
        assert!(!in_fundamental_alcove(&mp, &c, &[2]).unwrap());
        assert_eq!(length(&mp, &c, &[2]).unwrap(), 1);
        let mp = Multipartition::from_parts(&[&[3]]);
        assert!(length(&mp, &c, &[2]).is_err());
        assert!(matches!(in_fundamental_alcove(&mp, &ch(&[0], 2), &[2]), Err(Error::ESmall { .. })));
    }

    #[test]
    fn b_values() {
        let c = ch(&[0], 7);
        assert_eq!(b_alpha(SimpleRoot::Affine, &c, &[3]).unwrap(), 7 - 3 + 1);
        assert_eq!(b_alpha(SimpleRoot::Finite(0), &c, &[3]).unwrap(), 1);
        let c = ch(&[0, 3], 7);
        // rho = (3, 0, -1)
        assert_eq!(b_alpha(SimpleRoot::Finite(0), &c, &[2, 1]).unwrap(), 3);
        assert_eq!(b_alpha(SimpleRoot::Finite(1), &c, &[2, 1]).unwrap(), 1);
        assert_eq!(b_alpha(SimpleRoot::Affine, &c, &[2, 1]).unwrap(), 7 - 1 - 3);
    }

    #[test]
    fn empty_path() {
        let c = ch(&[0, 2], 5);
        assert_eq!(count_fundamental_paths(&Multipartition::empty(2), &c, &[1, 1]).unwrap(), 1);
        assert_eq!(path_degree(&[], &c, &[1, 1]), 0);
    }
}
