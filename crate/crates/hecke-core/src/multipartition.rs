//! Charged multipartitions, boxes, tableaux and the combinatorics built on them.
//!
//! Boxes and components are 1-indexed. A box `(r, c, m)` of a multipartition
//! with charge `s` has charged content `s_m + c - r`; its residue is that
//! content reduced mod `e`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A charge `s` together with the quantum characteristic `e` and the
/// root-of-unity numerator `a` (so that `q = exp(2 pi i a / e)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Charge {
    pub s: Vec<i64>,
    pub e: i64,
    pub a: i64,
}

impl Charge {
    pub fn new(s: Vec<i64>, e: i64) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidParameter(format!("e = {e} must be at least 2")));
        }
        if s.is_empty() {
            return Err(Error::InvalidParameter("charge must have at least one entry".into()));
        }
        Ok(Charge { s, e, a: 1 })
    }

    pub fn with_a(mut self, a: i64) -> Result<Self> {
        if a.gcd(&self.e) != 1 {
            return Err(Error::InvalidParameter(format!("gcd({a}, {}) != 1", self.e)));
        }
        self.a = a;
        Ok(self)
    }

    pub fn level(&self) -> usize {
        self.s.len()
    }

    /// `s_1 <= s_2 <= ... <= s_l < s_1 + e`.
    pub fn is_cylindrical(&self) -> bool {
        self.s.windows(2).all(|w| w[0] <= w[1]) && self.s[self.s.len() - 1] < self.s[0] + self.e
    }

    pub fn require_cylindrical(&self) -> Result<()> {
        if self.is_cylindrical() {
            Ok(())
        } else {
            Err(Error::ChargeNotCylindrical(self.s.clone(), self.e))
        }
    }

    /// The same charge shifted so that `s_1` lies in `[0, e)`.
    pub fn normalized(&self) -> Charge {
        let shift = Integer::div_floor(&self.s[0], &self.e) * self.e;
        Charge { s: self.s.iter().map(|x| x - shift).collect(), e: self.e, a: self.a }
    }

    /// All cylindrical charges of level `l` with `s_1 = 0`.
    pub fn cylindrical_with_origin(l: usize, e: i64) -> Vec<Charge> {
        let mut out = Vec::new();
        let mut cur = vec![0i64];
        fn rec(cur: &mut Vec<i64>, l: usize, e: i64, out: &mut Vec<Charge>) {
            if cur.len() == l {
                out.push(Charge { s: cur.clone(), e, a: 1 });
                return;
            }
            let lo = *cur.last().unwrap();
            for v in lo..e {
                cur.push(v);
                rec(cur, l, e, out);
                cur.pop();
            }
        }
        rec(&mut cur, l, e, &mut out);
        out
    }
}

/// A box `(r, c, m)`: row, column, component, all 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub r: usize,
    pub c: usize,
    pub m: usize,
}

impl Node {
    pub fn new(r: usize, c: usize, m: usize) -> Self {
        Node { r, c, m }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.m)
    }
}

/// `s_m + c - r`.
pub fn charged_content(b: Node, ch: &Charge) -> i64 {
    ch.s[b.m - 1] + b.c as i64 - b.r as i64
}

pub fn residue(b: Node, ch: &Charge) -> i64 {
    charged_content(b, ch).rem_euclid(ch.e)
}

/// Sort key for the order on boxes: larger content wins, then smaller component.
fn dominance_key(b: Node, ch: &Charge) -> (i64, i64) {
    (charged_content(b, ch), -(b.m as i64))
}

/// Compares two boxes in the dominance order on boxes. `Greater` means `a` is
/// more dominant than `b`; `Equal` is returned for distinct boxes on the same
/// diagonal of one component, which the order does not separate.
pub fn compare_boxes(a: Node, b: Node, ch: &Charge) -> Ordering {
    dominance_key(a, ch).cmp(&dominance_key(b, ch))
}

/// An `l`-tuple of partitions. Empty components are kept literally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    comps: Vec<Vec<usize>>,
}

impl Multipartition {
    pub fn new(comps: Vec<Vec<usize>>) -> Result<Self> {
        for p in &comps {
            if p.iter().any(|&x| x == 0) || p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidParameter(format!("{p:?} is not a partition")));
            }
        }
        if comps.is_empty() {
            return Err(Error::InvalidParameter("a multipartition needs a component".into()));
        }
        Ok(Multipartition { comps })
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn from_parts(comps: &[&[usize]]) -> Self {
        Self::new(comps.iter().map(|p| p.to_vec()).collect()).expect("invalid multipartition")
    }

    pub fn empty(level: usize) -> Self {
        Multipartition { comps: vec![Vec::new(); level] }
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    pub fn component(&self, m: usize) -> &[usize] {
        &self.comps[m - 1]
    }

    pub fn size(&self) -> usize {
        self.comps.iter().map(|p| p.iter().sum::<usize>()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.iter().all(|p| p.is_empty())
    }

    /// Number of nonzero rows in each component.
    pub fn heights(&self) -> Vec<usize> {
        self.comps.iter().map(|p| p.len()).collect()
    }

    /// Row length, zero past the last row.
    pub fn part(&self, m: usize, r: usize) -> usize {
        self.comps[m - 1].get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: Node) -> bool {
        b.m >= 1 && b.m <= self.level() && b.r >= 1 && b.c >= 1 && self.part(b.m, b.r) >= b.c
    }

    /// All boxes, by component, then row, then column.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (mi, p) in self.comps.iter().enumerate() {
            for (ri, &len) in p.iter().enumerate() {
                for c in 1..=len {
                    out.push(Node::new(ri + 1, c, mi + 1));
                }
            }
        }
        out
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (mi, p) in self.comps.iter().enumerate() {
            for r in 1..=p.len() + 1 {
                let len = self.part(mi + 1, r);
                if r == 1 || self.part(mi + 1, r - 1) > len {
                    out.push(Node::new(r, len + 1, mi + 1));
                }
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (mi, p) in self.comps.iter().enumerate() {
            for r in 1..=p.len() {
                let len = p[r - 1];
                if self.part(mi + 1, r + 1) < len {
                    out.push(Node::new(r, len, mi + 1));
                }
            }
        }
        out
    }

    /// Adds an addable box.
    pub fn add(&self, b: Node) -> Multipartition {
        let mut comps = self.comps.clone();
        let p = &mut comps[b.m - 1];
        if b.r == p.len() + 1 {
            debug_assert_eq!(b.c, 1);
            p.push(1);
        } else {
            debug_assert_eq!(p[b.r - 1] + 1, b.c);
            p[b.r - 1] += 1;
        }
        Multipartition { comps }
    }

    /// Removes a removable box.
    pub fn remove(&self, b: Node) -> Multipartition {
        let mut comps = self.comps.clone();
        let p = &mut comps[b.m - 1];
        debug_assert_eq!(p[b.r - 1], b.c);
        p[b.r - 1] -= 1;
        if p[b.r - 1] == 0 {
            p.pop();
        }
        Multipartition { comps }
    }

    /// Multiset of residues of all boxes, as a count per residue.
    pub fn residue_content(&self, ch: &Charge) -> Vec<usize> {
        let mut counts = vec![0usize; ch.e as usize];
        for b in self.nodes() {
            counts[residue(b, ch) as usize] += 1;
        }
        counts
    }

    /// Whether every component has at most `hbar_m` rows.
    pub fn fits(&self, hbar: &[usize]) -> bool {
        hbar.len() == self.level() && self.comps.iter().zip(hbar).all(|(p, &h)| p.len() <= h)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if p.is_empty() {
                write!(f, "()")?;
            } else {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))?;
            }
        }
        write!(f, ")")
    }
}

/// Addable boxes of residue `i` (all residues when `i` is `None`).
pub fn addable_boxes(mp: &Multipartition, ch: &Charge, i: Option<i64>) -> Vec<Node> {
    mp.addable_nodes()
        .into_iter()
        .filter(|&b| i.map_or(true, |i| residue(b, ch) == i.rem_euclid(ch.e)))
        .collect()
}

pub fn removable_boxes(mp: &Multipartition, ch: &Charge, i: Option<i64>) -> Vec<Node> {
    mp.removable_nodes()
        .into_iter()
        .filter(|&b| i.map_or(true, |i| residue(b, ch) == i.rem_euclid(ch.e)))
        .collect()
}

/// All partitions of `n`, parts decreasing, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `l`-multipartitions of `n`.
pub fn multipartitions(n: usize, l: usize) -> Vec<Multipartition> {
    let table: Vec<Vec<Vec<usize>>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    fn rec(
        n: usize,
        l: usize,
        table: &[Vec<Vec<usize>>],
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Multipartition>,
    ) {
        if cur.len() + 1 == l {
            cur.push(table[n][0].clone());
            for p in &table[n] {
                *cur.last_mut().unwrap() = p.clone();
                out.push(Multipartition { comps: cur.clone() });
            }
            cur.pop();
            return;
        }
        for k in 0..=n {
            for p in &table[k] {
                cur.push(p.clone());
                rec(n - k, l, table, cur, out);
                cur.pop();
            }
        }
    }
    if l == 0 {
        return out;
    }
    rec(n, l, &table, &mut Vec::new(), &mut out);
    out
}

/// A standard tableau, stored as the sequence of boxes `t^{-1}(1), ..., t^{-1}(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    level: usize,
    order: Vec<Node>,
}

impl Tableau {
    /// Builds a tableau from the ordered list of its boxes; every prefix must
    /// be a multipartition.
    pub fn from_order(level: usize, order: Vec<Node>) -> Result<Self> {
        let mut cur = Multipartition::empty(level);
        for &b in &order {
            if b.m == 0 || b.m > level || !cur.addable_nodes().contains(&b) {
                return Err(Error::NotStandard);
            }
            cur = cur.add(b);
        }
        Ok(Tableau { level, order })
    }

    /// Builds a tableau from a filling given per component, row by row.
    pub fn from_filling(filling: &[Vec<Vec<usize>>]) -> Result<Self> {
        let n: usize = filling.iter().flatten().map(|row| row.len()).sum();
        let mut order = vec![None; n];
        for (mi, comp) in filling.iter().enumerate() {
            for (ri, row) in comp.iter().enumerate() {
                for (ci, &k) in row.iter().enumerate() {
                    if k == 0 || k > n || order[k - 1].is_some() {
                        return Err(Error::NotStandard);
                    }
                    order[k - 1] = Some(Node::new(ri + 1, ci + 1, mi + 1));
                }
            }
        }
        let order: Vec<Node> = order.into_iter().map(|b| b.expect("filled")).collect();
        Self::from_order(filling.len(), order)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// `t^{-1}(k)` for `1 <= k <= n`.
    pub fn node(&self, k: usize) -> Node {
        self.order[k - 1]
    }

    pub fn order(&self) -> &[Node] {
        &self.order
    }

    /// Shape of the entries `1..=k`.
    pub fn prefix_shape(&self, k: usize) -> Multipartition {
        let mut cur = Multipartition::empty(self.level);
        for &b in &self.order[..k] {
            cur = cur.add(b);
        }
        cur
    }

    pub fn shape(&self) -> Multipartition {
        self.prefix_shape(self.size())
    }

    /// Entries per component, row by row.
    pub fn filling(&self) -> Vec<Vec<Vec<usize>>> {
        let shape = self.shape();
        let mut out: Vec<Vec<Vec<usize>>> = shape
            .components()
            .iter()
            .map(|p| p.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (k, b) in self.order.iter().enumerate() {
            out[b.m - 1][b.r - 1][b.c - 1] = k + 1;
        }
        out
    }
}

/// All standard tableaux of shape `mp`.
pub fn standard_tableaux(mp: &Multipartition) -> Vec<Tableau> {
    fn rec(mp: &Multipartition, suffix: &mut Vec<Node>, out: &mut Vec<Tableau>) {
        if mp.is_empty() {
            let order: Vec<Node> = suffix.iter().rev().copied().collect();
            out.push(Tableau { level: mp.level(), order });
            return;
        }
        for b in mp.removable_nodes() {
            suffix.push(b);
            rec(&mp.remove(b), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    rec(mp, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `|Std(mp)|` by the hook length formula and a multinomial coefficient.
pub fn count_standard_tableaux(mp: &Multipartition) -> u128 {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for p in mp.components() {
        let size: usize = p.iter().sum();
        let conj = conjugate(p);
        let mut hooks: u128 = 1;
        for (r, &len) in p.iter().enumerate() {
            for c in 0..len {
                hooks *= (len - c + conj[c] - r - 1) as u128;
            }
        }
        // multinomial step: choose which labels go to this component
        for k in 1..=size as u128 {
            total = total * (placed + k) / k;
        }
        placed += size as u128;
        let mut f: u128 = 1;
        for k in 1..=size as u128 {
            f *= k;
        }
        total *= f / hooks;
    }
    total
}

pub fn conjugate(p: &[usize]) -> Vec<usize> {
    let w = p.first().copied().unwrap_or(0);
    (1..=w).map(|c| p.iter().filter(|&&x| x >= c).count()).collect()
}

/// Residues of `t^{-1}(1), ..., t^{-1}(n)`.
pub fn residue_sequence(t: &Tableau, ch: &Charge) -> Vec<i64> {
    t.order.iter().map(|&b| residue(b, ch)).collect()
}

/// The reverse column-reading tableau `T_(m, mp)`: column 1 of components
/// `m-1, m-2, ...` (wrapping round to `m`), then column 2, and so on.
pub fn reverse_column_reading_tableau(mp: &Multipartition, m: usize) -> Result<Tableau> {
    let l = mp.level();
    if m == 0 || m > l {
        return Err(Error::InvalidParameter(format!("step index {m} out of range 1..={l}")));
    }
    let comp_order: Vec<usize> = (1..=l).map(|k| (m + l - 1 - k) % l + 1).collect();
    let width = mp.components().iter().map(|p| p.first().copied().unwrap_or(0)).max().unwrap_or(0);
    let mut order = Vec::with_capacity(mp.size());
    for c in 1..=width {
        for &comp in &comp_order {
            for (ri, &len) in mp.component(comp).iter().enumerate() {
                if len >= c {
                    order.push(Node::new(ri + 1, c, comp));
                }
            }
        }
    }
    Tableau::from_order(l, order)
}

fn degree_with(t: &Tableau, ch: &Charge, hbar: Option<&[usize]>) -> i64 {
    let mut deg = 0i64;
    let mut shape = Multipartition::empty(t.level());
    for &b in t.order() {
        shape = shape.add(b);
        let i = residue(b, ch);
        let above = |x: &Node| residue(*x, ch) == i && compare_boxes(*x, b, ch) == Ordering::Greater;
        let add = shape
            .addable_nodes()
            .into_iter()
            .filter(|x| hbar.map_or(true, |h| x.r <= h[x.m - 1]))
            .filter(above)
            .count() as i64;
        let rem = shape.removable_nodes().into_iter().filter(above).count() as i64;
        deg += add - rem;
    }
    deg
}

/// Degree of a standard tableau: for each `k`, addable minus removable boxes of
/// the residue of `t^{-1}(k)` in the shape of `1..=k` that are more dominant than it.
pub fn tableau_degree(t: &Tableau, ch: &Charge) -> i64 {
    degree_with(t, ch, None)
}

/// The same count with addable boxes restricted to component heights `hbar`.
pub fn tableau_degree_bounded(t: &Tableau, ch: &Charge, hbar: &[usize]) -> i64 {
    degree_with(t, ch, Some(hbar))
}

fn sorted_by_residue(mp: &Multipartition, ch: &Charge) -> BTreeMap<i64, Vec<(i64, i64)>> {
    let mut map: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    for b in mp.nodes() {
        map.entry(residue(b, ch)).or_default().push(dominance_key(b, ch));
    }
    for v in map.values_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    map
}

/// `la ⊴ mu`: there is a residue-preserving bijection `A: [mu] -> [la]`
/// moving every box weakly down the dominance order on boxes.
///
/// Greedy: within each residue class, the k-th most dominant box of `la` must
/// not be more dominant than the k-th most dominant box of `mu`.
pub fn dominates(mu: &Multipartition, la: &Multipartition, ch: &Charge) -> Result<bool> {
    if mu.size() != la.size() {
        return Err(Error::SizeMismatch(mu.size(), la.size()));
    }
    let a = sorted_by_residue(mu, ch);
    let b = sorted_by_residue(la, ch);
    if a.len() != b.len() {
        return Ok(false);
    }
    for (i, xs) in &a {
        let Some(ys) = b.get(i) else { return Ok(false) };
        if xs.len() != ys.len() || xs.iter().zip(ys).any(|(x, y)| y > x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Admissibility of a height vector, with the step changes (indices where the
/// bound is strict).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    pub step_changes: Vec<usize>,
}

/// `h_m <= s_m - s_{m-1}` for `m > 1`, `h_1 <= e + s_1 - s_l`, at least one strict.
pub fn admissibility(hbar: &[usize], ch: &Charge) -> Admissibility {
    let l = ch.level();
    if hbar.len() != l {
        return Admissibility { admissible: false, step_changes: Vec::new() };
    }
    let bound = |m: usize| -> i64 {
        if m == 1 {
            ch.e + ch.s[0] - ch.s[l - 1]
        } else {
            ch.s[m - 1] - ch.s[m - 2]
        }
    };
    let mut ok = true;
    let mut steps = Vec::new();
    for m in 1..=l {
        let h = hbar[m - 1] as i64;
        let b = bound(m);
        if h > b {
            ok = false;
        } else if h < b {
            steps.push(m);
        }
    }
    Admissibility { admissible: ok && !steps.is_empty(), step_changes: steps }
}

pub fn is_s_admissible(hbar: &[usize], ch: &Charge) -> bool {
    admissibility(hbar, ch).admissible
}

/// All height vectors admissible for `ch`.
pub fn admissible_heights(ch: &Charge) -> Vec<Vec<usize>> {
    let l = ch.level();
    let bound = |m: usize| -> i64 {
        if m == 1 {
            ch.e + ch.s[0] - ch.s[l - 1]
        } else {
            ch.s[m - 1] - ch.s[m - 2]
        }
    };
    let mut out = vec![Vec::new()];
    for m in 1..=l {
        let b = bound(m).max(-1);
        let mut next = Vec::new();
        for v in &out {
            for h in 0..=b {
                let mut w: Vec<usize> = v.clone();
                w.push(h as usize);
                next.push(w);
            }
        }
        out = next;
    }
    out.retain(|h| is_s_admissible(h, ch));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(s: &[i64], e: i64) -> Charge {
        Charge::new(s.to_vec(), e).unwrap()
    }

    #[test]
    fn contents_and_residues() {
        let c = ch(&[-1, 2, 0], 4);
        assert_eq!(charged_content(Node::new(1, 1, 1), &c), -1);
        assert_eq!(charged_content(Node::new(3, 1, 2), &c), 0);
        assert_eq!(residue(Node::new(1, 1, 1), &c), 3);
        assert_eq!(residue(Node::new(1, 5, 3), &c), 0);
    }

    #[test]
    fn reverse_column_reading_example() {
        let mp = Multipartition::from_parts(&[&[2, 1], &[4, 2, 1], &[5]]);
        let t = reverse_column_reading_tableau(&mp, 1).unwrap();
        assert_eq!(
            t.filling(),
            vec![
                vec![vec![5, 10], vec![6]],
                vec![vec![2, 8, 12, 14], vec![3, 9], vec![4]],
                vec![vec![1, 7, 11, 13, 15]],
            ]
        );
        let c = ch(&[-1, 2, 0], 4);
        assert_eq!(residue_sequence(&t, &c), vec![0, 2, 1, 0, 3, 2, 1, 3, 2, 0, 2, 0, 3, 1, 0]);
    }

    #[test]
    fn column_reading_level_one() {
        let mp = Multipartition::from_parts(&[&[2, 2]]);
        let t = reverse_column_reading_tableau(&mp, 1).unwrap();
        assert_eq!(t.filling(), vec![vec![vec![1, 3], vec![2, 4]]]);
    }

    #[test]
    fn degrees_by_hand() {
        let c = ch(&[0], 3);
        let t = Tableau::from_filling(&[vec![vec![1, 2], vec![3]]]).unwrap();
        assert_eq!(tableau_degree(&t, &c), 1);
        let t = Tableau::from_filling(&[vec![vec![1, 3], vec![2]]]).unwrap();
        assert_eq!(tableau_degree(&t, &c), 0);
        let t = Tableau::from_filling(&[vec![vec![1, 2, 3]]]).unwrap();
        assert_eq!(tableau_degree(&t, &c), 0);
        // e = 2, row (2): the second box has residue 1 and nothing above it.
        let t = Tableau::from_filling(&[vec![vec![1, 2]]]).unwrap();
        assert_eq!(tableau_degree(&t, &ch(&[0], 2)), 0);
        // e = 2, column (1,1): box 2 has residue 1; the addable (1,2) of residue 1 is above it.
        let t = Tableau::from_filling(&[vec![vec![1], vec![2]]]).unwrap();
        assert_eq!(tableau_degree(&t, &ch(&[0], 2)), 1);
    }

    #[test]
    fn removable_example() {
        let mp = Multipartition::from_parts(&[&[2, 1]]);
        let c = ch(&[0], 3);
        let rem = removable_boxes(&mp, &c, None);
        assert_eq!(rem, vec![Node::new(1, 2, 1), Node::new(2, 1, 1)]);
        assert_eq!(residue(rem[0], &c), 1);
        assert_eq!(residue(rem[1], &c), 2);
    }

    #[test]
    fn empty_addable() {
        let c = ch(&[0, 2, 5], 4);
        let mp = Multipartition::empty(3);
        let add = addable_boxes(&mp, &c, None);
        assert_eq!(add.len(), 3);
        for b in add {
            assert_eq!(residue(b, &c), c.s[b.m - 1].rem_euclid(4));
        }
        assert!(removable_boxes(&mp, &c, None).is_empty());
    }

    #[test]
    fn admissibility_example() {
        let a = admissibility(&[2, 3, 1], &ch(&[0, 3, 4], 7));
        assert!(a.admissible);
        assert!(a.step_changes.contains(&1));
        assert!(is_s_admissible(&[1], &ch(&[0], 2)));
        assert!(!is_s_admissible(&[2], &ch(&[0], 2)));
        assert!(!is_s_admissible(&[2, 3, 1], &ch(&[0, 3, 4], 6)));
    }

    #[test]
    fn tableau_counts() {
        for n in 0..=6 {
            for mp in multipartitions(n, 2) {
                assert_eq!(standard_tableaux(&mp).len() as u128, count_standard_tableaux(&mp));
            }
        }
    }

    #[test]
    fn multipartition_counts() {
        // coefficients of prod (1 - q^k)^{-2}
        let expected = [1, 2, 5, 10, 20, 36, 65];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(multipartitions(n, 2).len(), c);
        }
        assert_eq!(partitions(8).len(), 22);
    }

    #[test]
    fn dominance_basics() {
        let c = ch(&[0], 3);
        let a = Multipartition::from_parts(&[&[3]]);
        let b = Multipartition::from_parts(&[&[2, 1]]);
        assert!(dominates(&a, &a, &c).unwrap());
        assert!(dominates(&a, &b, &c).unwrap());
        // different residue multisets
        assert!(!dominates(&a, &b, &ch(&[0], 4)).unwrap());
        let d = Multipartition::from_parts(&[&[1, 1, 1]]);
        assert!(dominates(&a, &d, &c).unwrap());
        assert!(!dominates(&d, &a, &c).unwrap());
    }
}
