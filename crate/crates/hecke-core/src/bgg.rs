//! The block of a fundamental-alcove point: its Bruhat-graded poset, covers,
//! diamonds and strands, diamond sign systems over GF(2), graded Specht
//! characters, Euler identities, and the explicit KLR action on `D(λ)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::alcove::{
    check_setup, fundamental_paths, in_fundamental_alcove_shifted, length_shifted, path_residues, positive_roots,
    reflect_shifted, rho, shifted, unembed,
};
use crate::error::{Error, Result};
use crate::multipartition::{
    count_standard_tableaux, dominates, multipartitions, standard_tableaux, tableau_degree, Charge, Multipartition,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetNode {
    pub mp: Multipartition,
    pub length: u64,
    /// Shifted coordinates `x + rho`.
    pub point: Vec<i64>,
}

/// Edges are `(upper, lower)` node indices with lengths differing by one.
#[derive(Clone, Debug, Serialize)]
pub struct BlockPoset {
    pub lambda: Multipartition,
    pub ch: Charge,
    pub hbar: Vec<usize>,
    pub nodes: Vec<PosetNode>,
    pub edges: Vec<(usize, usize)>,
    /// `(w, x, y, z)`: `w -> x -> z` and `w -> y -> z`, `x < y`.
    pub diamonds: Vec<[usize; 4]>,
    /// `(w, x, z)` with `x` the only midpoint.
    pub strands: Vec<[usize; 3]>,
}

fn residue_multiset(y: &[i64], e: i64) -> Vec<i64> {
    let mut r: Vec<i64> = y.iter().map(|v| v.rem_euclid(e)).collect();
    r.sort_unstable();
    r
}

fn require_fundamental(la: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<Vec<i64>> {
    check_setup(ch, hbar)?;
    let y = shifted(la, ch, hbar)?;
    if !in_fundamental_alcove_shifted(&y, ch.e) {
        return Err(Error::NotInAlcove);
    }
    Ok(y)
}

/// Multipartitions of size `|λ|` with heights at most `hbar` whose shifted point
/// lies in the orbit of `λ + rho`: the residues of the coordinates agree as multisets.
pub fn block_members(la: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<Vec<Multipartition>> {
    let y = require_fundamental(la, ch, hbar)?;
    let target = residue_multiset(&y, ch.e);
    let mut out = Vec::new();
    for mu in multipartitions(la.size(), la.level()) {
        if mu.fits(hbar) && residue_multiset(&shifted(&mu, ch, hbar)?, ch.e) == target {
            out.push(mu);
        }
    }
    out.sort();
    Ok(out)
}

/// The same set by breadth-first search over affine reflections of `λ + rho`,
/// confined to a box of coordinates wide enough to connect every valid point.
pub fn block_members_by_reflection(la: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<Vec<Multipartition>> {
    let y = require_fundamental(la, ch, hbar)?;
    let e = ch.e;
    let r = rho(ch, hbar);
    let n = la.size() as i64;
    let lo = r.iter().min().copied().unwrap_or(0) - e;
    let hi = r.iter().max().copied().unwrap_or(0) + n + e;
    let roots = positive_roots(y.len());
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    seen.insert(y.clone());
    let mut queue = VecDeque::from([y]);
    while let Some(p) = queue.pop_front() {
        for &al in &roots {
            let base = al.pair(&p);
            // reflected coordinates are p_b + re and p_a - re
            let rmin = (lo - p[al.b]).div_euclid(e) - 1;
            let rmax = (hi - p[al.b]).div_euclid(e) + 1;
            for k in rmin..=rmax {
                if base == k * e {
                    continue;
                }
                let q = reflect_shifted(&p, al, k, e);
                if q.iter().all(|&v| v >= lo && v <= hi) && seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    let mut out: Vec<Multipartition> = seen
        .into_iter()
        .filter_map(|p| {
            let x: Vec<i64> = p.iter().zip(&r).map(|(a, b)| a - b).collect();
            unembed(&x, hbar)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All `μ` with `μ ⊵ λ`, of any heights.
pub fn dominance_block(la: &Multipartition, ch: &Charge) -> Result<Vec<Multipartition>> {
    let mut out = Vec::new();
    for mu in multipartitions(la.size(), la.level()) {
        if dominates(&mu, la, ch)? {
            out.push(mu);
        }
    }
    out.sort();
    Ok(out)
}

/// Points related by a single affine reflection: they differ in exactly two
/// coordinates, which are swapped modulo `e`.
pub fn reflection_related(p: &[i64], q: &[i64], e: i64) -> bool {
    let diff: Vec<usize> = (0..p.len()).filter(|&i| p[i] != q[i]).collect();
    if diff.len() != 2 {
        return false;
    }
    let (a, b) = (diff[0], diff[1]);
    p[a] + p[b] == q[a] + q[b] && (q[a] - p[b]).rem_euclid(e) == 0
}

pub fn block_poset(la: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<BlockPoset> {
    let members = block_members(la, ch, hbar)?;
    let mut nodes = Vec::with_capacity(members.len());
    for mu in members {
        let point = shifted(&mu, ch, hbar)?;
        let length = length_shifted(&point, ch.e)?;
        nodes.push(PosetNode { mp: mu, length, point });
    }
    nodes.sort_by(|a, b| (a.length, &a.mp).cmp(&(b.length, &b.mp)));
    let zero: Vec<&PosetNode> = nodes.iter().filter(|n| n.length == 0).collect();
    if zero.len() != 1 || zero[0].mp != *la {
        return Err(Error::InvalidParameter("block does not have λ as its unique length-zero node".into()));
    }
    let mut edges = Vec::new();
    for (u, nu) in nodes.iter().enumerate() {
        for (l, nl) in nodes.iter().enumerate() {
            if nu.length == nl.length + 1 && reflection_related(&nu.point, &nl.point, ch.e) {
                edges.push((u, l));
            }
        }
    }
    let mut poset = BlockPoset {
        lambda: la.clone(),
        ch: ch.clone(),
        hbar: hbar.to_vec(),
        nodes,
        edges,
        diamonds: Vec::new(),
        strands: Vec::new(),
    };
    let (d, s) = diamonds_and_strands(&poset)?;
    poset.diamonds = d;
    poset.strands = s;
    Ok(poset)
}

/// Two-step intervals split by number of midpoints; more than two is an error.
pub fn diamonds_and_strands(poset: &BlockPoset) -> Result<(Vec<[usize; 4]>, Vec<[usize; 3]>)> {
    let mut down: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, l) in &poset.edges {
        down.entry(u).or_default().push(l);
    }
    let mut mids: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (&w, xs) in &down {
        for &x in xs {
            for &z in down.get(&x).map(|v| v.as_slice()).unwrap_or(&[]) {
                mids.entry((w, z)).or_default().push(x);
            }
        }
    }
    let mut diamonds = Vec::new();
    let mut strands = Vec::new();
    for ((w, z), mut m) in mids {
        m.sort_unstable();
        match m.len() {
            1 => strands.push([w, m[0], z]),
            2 => diamonds.push([w, m[0], m[1], z]),
            k => return Err(Error::InvalidParameter(format!("interval with {k} midpoints"))),
        }
    }
    Ok((diamonds, strands))
}

/// Edge signs with every diamond's product equal to `-1`, and the dimension
/// of the solution space of the homogeneous system.
#[derive(Clone, Debug, Serialize)]
pub struct SignAssignment {
    pub signs: Vec<i8>,
    pub kernel_dim: usize,
}

/// Gaussian elimination over GF(2): one equation per diamond, the sum of its four
/// edge variables equal to 1 (a variable of 1 means sign `-1`).
pub fn sign_assignment(poset: &BlockPoset) -> Result<SignAssignment> {
    let ne = poset.edges.len();
    let index: HashMap<(usize, usize), usize> = poset.edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let words = ne / 64 + 1;
    // each row: bitset of variables, then the right-hand side in bit `ne`
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for &[w, x, y, z] in &poset.diamonds {
        let mut row = vec![0u64; words];
        for e in [(w, x), (x, z), (w, y), (y, z)] {
            let k = index[&e];
            row[k / 64] ^= 1 << (k % 64);
        }
        row[ne / 64] ^= 1 << (ne % 64);
        rows.push(row);
    }
    let bit = |row: &[u64], k: usize| row[k / 64] >> (k % 64) & 1 == 1;
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, column)
    let mut r = 0;
    for c in 0..ne {
        let Some(p) = (r..rows.len()).find(|&i| bit(&rows[i], c)) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && bit(&rows[i], c) {
                let src = rows[r].clone();
                for (a, b) in rows[i].iter_mut().zip(&src) {
                    *a ^= b;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if rows[r..].iter().any(|row| bit(row, ne)) {
        return Err(Error::Infeasible);
    }
    let mut x = vec![0i8; ne];
    for &(row, c) in &pivots {
        if bit(&rows[row], ne) {
            x[c] = 1;
        }
    }
    Ok(SignAssignment { signs: x.iter().map(|&v| if v == 1 { -1 } else { 1 }).collect(), kernel_dim: ne - pivots.len() })
}

/// Whether every diamond's four signs multiply to `-1`.
pub fn signs_valid(poset: &BlockPoset, signs: &[i8]) -> bool {
    let index: HashMap<(usize, usize), usize> = poset.edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    poset.diamonds.iter().all(|&[w, x, y, z]| {
        [(w, x), (x, z), (w, y), (y, z)].iter().map(|e| signs[index[e]] as i32).product::<i32>() == -1
    })
}

/// A Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradedCharacter(pub BTreeMap<i64, i64>);

impl GradedCharacter {
    pub fn monomial(deg: i64, coeff: i64) -> Self {
        let mut g = Self::default();
        g.add_term(deg, coeff);
        g
    }

    pub fn add_term(&mut self, deg: i64, coeff: i64) {
        let v = self.0.entry(deg).or_insert(0);
        *v += coeff;
        if *v == 0 {
            self.0.remove(&deg);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, shift: i64, coeff: i64) {
        for (&d, &c) in &other.0 {
            self.add_term(d + shift, c * coeff);
        }
    }

    pub fn at_one(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|&c| c >= 0)
    }
}

/// `sum_{t in Std(μ)} t^{deg t}`.
pub fn graded_specht_character(mu: &Multipartition, ch: &Charge) -> GradedCharacter {
    let mut g = GradedCharacter::default();
    for t in standard_tableaux(mu) {
        g.add_term(tableau_degree(&t, ch), 1);
    }
    g
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub alternating_sum: i128,
    pub fundamental_paths: usize,
    pub holds: bool,
}

/// `sum_{μ ⊵ λ} (-1)^{l(μ)} |Std(μ)| = |Path^F(λ)|`.
pub fn euler_check(poset: &BlockPoset) -> Result<EulerReport> {
    let mut sum: i128 = 0;
    for node in &poset.nodes {
        let c = count_standard_tableaux(&node.mp) as i128;
        sum += if node.length % 2 == 0 { c } else { -c };
    }
    let paths = fundamental_paths(&poset.lambda, &poset.ch, &poset.hbar)?.len();
    Ok(EulerReport { alternating_sum: sum, fundamental_paths: paths, holds: sum == paths as i128 })
}

/// `sum_μ (-1)^{l(μ)} t^{c l(μ)} [S(μ)]`.
pub fn graded_alternating_sum(poset: &BlockPoset, c: i64) -> GradedCharacter {
    let mut g = GradedCharacter::default();
    for node in &poset.nodes {
        let l = node.length as i64;
        let sign = if l % 2 == 0 { 1 } else { -1 };
        g.add_scaled(&graded_specht_character(&node.mp, &poset.ch), c * l, sign);
    }
    g
}

/// Whether the graded alternating sum with shift convention `c` equals `|Path^F(λ)| t^0`.
pub fn graded_character_identity(poset: &BlockPoset, c: i64) -> Result<bool> {
    let paths = fundamental_paths(&poset.lambda, &poset.ch, &poset.hbar)?.len() as i64;
    Ok(graded_alternating_sum(poset, c) == GradedCharacter::monomial(0, paths))
}

/// The shift convention for the graded identity.
pub const GRADED_SHIFT: i64 = 1;

/// Integer square matrix stored as sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    cols: Vec<BTreeMap<usize, i64>>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix { dim, cols: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cols[j].get(&i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        if v == 0 {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, col) in other.cols.iter().enumerate() {
            for (&i, &v) in col {
                out.set(i, j, out.get(i, j) + v);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for col in out.cols.iter_mut() {
            for v in col.values_mut() {
                *v = -*v;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (j, col) in other.cols.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (&k, &b) in col {
                for (&i, &a) in &self.cols[k] {
                    *acc.entry(i).or_insert(0) += a * b;
                }
            }
            acc.retain(|_, v| *v != 0);
            out.cols[j] = acc;
        }
        out
    }
}

/// `D(λ)` on the basis of fundamental paths: `e(i)` picks out residue sequence
/// `i`, every `y_k` is zero, and `psi_k` swaps steps `k, k+1` when their
/// residues are neither equal nor adjacent modulo `e`, and kills the path otherwise.
#[derive(Clone, Debug)]
pub struct KlrModule {
    pub ch: Charge,
    pub n: usize,
    pub basis: Vec<Vec<usize>>,
    pub residues: Vec<Vec<i64>>,
    pub psi: Vec<IntMatrix>,
    pub y: Vec<IntMatrix>,
}

fn far(a: i64, b: i64, e: i64) -> bool {
    let d = (a - b).rem_euclid(e);
    d != 0 && d != 1 && d != e - 1
}

impl KlrModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn idempotent(&self, i: &[i64]) -> IntMatrix {
        let mut m = IntMatrix::zero(self.dim());
        for (k, r) in self.residues.iter().enumerate() {
            if r.as_slice() == i {
                m.set(k, k, 1);
            }
        }
        m
    }
}

pub fn build_klr_module(la: &Multipartition, ch: &Charge, hbar: &[usize]) -> Result<KlrModule> {
    let basis = fundamental_paths(la, ch, hbar)?;
    let n = la.size();
    let residues: Vec<Vec<i64>> = basis.iter().map(|p| path_residues(p, ch, hbar)).collect();
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
    let dim = basis.len();
    let mut psi = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n.saturating_sub(1) {
        let mut m = IntMatrix::zero(dim);
        for (j, p) in basis.iter().enumerate() {
            if far(residues[j][k], residues[j][k + 1], ch.e) {
                let mut q = p.clone();
                q.swap(k, k + 1);
                let i = *index
                    .get(&q)
                    .ok_or_else(|| Error::InvalidParameter(format!("swapped path {q:?} leaves the alcove")))?;
                m.set(i, j, 1);
            }
        }
        psi.push(m);
    }
    let y = vec![IntMatrix::zero(dim); n];
    Ok(KlrModule { ch: ch.clone(), n, basis, residues, psi, y })
}

#[derive(Clone, Debug, Serialize)]
pub struct KlrReport {
    pub checks: BTreeMap<String, bool>,
}

impl KlrReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|&v| v)
    }
}

/// Relations R1-R5 and the cyclotomic relation as matrix identities. Idempotents
/// are checked for every residue sequence occurring in the basis and its images
/// under the simple transpositions; the remaining idempotents act by zero.
pub fn verify_klr_relations(module: &KlrModule) -> KlrReport {
    let e = module.ch.e;
    let n = module.n;
    let dim = module.dim();
    let mut seqs: BTreeSet<Vec<i64>> = module.residues.iter().cloned().collect();
    for r in module.residues.iter() {
        for k in 0..n.saturating_sub(1) {
            let mut s = r.clone();
            s.swap(k, k + 1);
            seqs.insert(s);
        }
    }
    let idem: BTreeMap<Vec<i64>, IntMatrix> = seqs.iter().map(|i| (i.clone(), module.idempotent(i))).collect();
    let (psi, y) = (&module.psi, &module.y);
    let mut ok = BTreeMap::new();
    let mut record = |name: &str, v: bool| {
        let entry = ok.entry(name.to_string()).or_insert(true);
        *entry = *entry && v;
    };

    let mut total = IntMatrix::zero(dim);
    for (i, ei) in &idem {
        total = total.add(ei);
        for (j, ej) in &idem {
            let want = if i == j { ei.clone() } else { IntMatrix::zero(dim) };
            record("R1 idempotents orthogonal", ei.mul(ej) == want);
        }
        for yr in y {
            record("R1 y commutes with e", yr.mul(ei) == ei.mul(yr));
        }
        for r in 0..n.saturating_sub(1) {
            let mut si = i.clone();
            si.swap(r, r + 1);
            let esi = idem.get(&si).cloned().unwrap_or_else(|| module.idempotent(&si));
            record("R1 psi intertwines e", psi[r].mul(ei) == esi.mul(&psi[r]));
        }
    }
    record("R1 idempotents sum to one", total == IntMatrix::identity(dim));
    for a in y {
        for b in y {
            record("R1 y commute", a.mul(b) == b.mul(a));
        }
    }
    for r in 0..psi.len() {
        for s in 0..n {
            if s != r && s != r + 1 {
                record("R2 psi y commute", psi[r].mul(&y[s]) == y[s].mul(&psi[r]));
            }
        }
        for s in 0..psi.len() {
            if r.abs_diff(s) > 1 {
                record("R2 distant psi commute", psi[r].mul(&psi[s]) == psi[s].mul(&psi[r]));
            }
        }
    }
    for (i, ei) in &idem {
        for r in 0..psi.len() {
            let delta = if i[r] == i[r + 1] { ei.clone() } else { IntMatrix::zero(dim) };
            let l = y[r].mul(&psi[r]).mul(ei);
            let rr = psi[r].mul(&y[r + 1]).mul(ei).sub(&delta);
            record("R3 first", l == rr);
            let l = y[r + 1].mul(&psi[r]).mul(ei);
            let rr = psi[r].mul(&y[r]).mul(ei).add(&delta);
            record("R3 second", l == rr);

            let d = (i[r + 1] - i[r]).rem_euclid(e);
            let sq = psi[r].mul(&psi[r]).mul(ei);
            let want = if d == 0 {
                IntMatrix::zero(dim)
            } else if d == 1 {
                y[r + 1].sub(&y[r]).mul(ei)
            } else if d == e - 1 {
                y[r].sub(&y[r + 1]).mul(ei)
            } else {
                ei.clone()
            };
            record("R4", sq == want);

            if r + 2 < n {
                let l = psi[r].mul(&psi[r + 1]).mul(&psi[r]).mul(ei);
                let braid = psi[r + 1].mul(&psi[r]).mul(&psi[r + 1]).mul(ei);
                let want = if i[r] == i[r + 2] && (i[r] - i[r + 1] - 1).rem_euclid(e) == 0 {
                    braid.sub(ei)
                } else if i[r] == i[r + 2] && (i[r] - i[r + 1] + 1).rem_euclid(e) == 0 {
                    braid.add(ei)
                } else {
                    braid
                };
                record("R5", l == want);
            }
        }
        if n > 0 {
            let count = module.ch.s.iter().filter(|&&s| (s - i[0]).rem_euclid(e) == 0).count();
            let mut p = IntMatrix::identity(dim);
            for _ in 0..count {
                p = p.mul(&y[0]);
            }
            record("cyclotomic", p.mul(ei).is_zero());
        }
    }
    KlrReport { checks: ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(s: &[i64], e: i64) -> Charge {
        Charge::new(s.to_vec(), e).unwrap()
    }

    #[test]
    fn empty_block() {
        let c = ch(&[0], 3);
        let la = Multipartition::empty(1);
        let p = block_poset(&la, &c, &[1]).unwrap();
        assert_eq!(p.nodes.len(), 1);
        assert_eq!(p.nodes[0].length, 0);
        let r = euler_check(&p).unwrap();
        assert_eq!((r.alternating_sum, r.fundamental_paths), (1, 1));
        assert!(graded_character_identity(&p, 1).unwrap());
        assert!(graded_character_identity(&p, 2).unwrap());
        assert_eq!(sign_assignment(&p).unwrap().signs.len(), 0);
    }

    #[test]
    fn two_one_block() {
        // (2,1) at e = 3 with h = (2): y = (2, 0), the block is {(2,1), (3)}
        let c = ch(&[0], 3);
        let la = Multipartition::from_parts(&[&[2, 1]]);
        let p = block_poset(&la, &c, &[2]).unwrap();
        let mps: Vec<_> = p.nodes.iter().map(|n| n.mp.clone()).collect();
        assert_eq!(mps, vec![la.clone(), Multipartition::from_parts(&[&[3]])]);
        assert_eq!(p.edges, vec![(1, 0)]);
        assert!(p.diamonds.is_empty());
        assert!(euler_check(&p).unwrap().holds);
        let s = sign_assignment(&p).unwrap();
        assert_eq!(s.signs, vec![1]);
        assert_eq!(s.kernel_dim, 1);
    }

    #[test]
    fn single_diamond_signs() {
        let nodes = (0..4)
            .map(|k| PosetNode { mp: Multipartition::empty(1), length: [2, 1, 1, 0][k], point: vec![] })
            .collect();
        let mut p = BlockPoset {
            lambda: Multipartition::empty(1),
            ch: ch(&[0], 3),
            hbar: vec![1],
            nodes,
            edges: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            diamonds: vec![],
            strands: vec![],
        };
        let (d, s) = diamonds_and_strands(&p).unwrap();
        assert_eq!(d, vec![[0, 1, 2, 3]]);
        assert!(s.is_empty());
        p.diamonds = d;
        let a = sign_assignment(&p).unwrap();
        assert_eq!(a.signs.iter().filter(|&&x| x == -1).count(), 1);
        assert!(signs_valid(&p, &a.signs));
        assert_eq!(a.kernel_dim, 3);
    }

    #[test]
    fn chain_has_only_strands() {
        let nodes = (0..3).map(|k| PosetNode { mp: Multipartition::empty(1), length: 2 - k, point: vec![] }).collect();
        let p = BlockPoset {
            lambda: Multipartition::empty(1),
            ch: ch(&[0], 3),
            hbar: vec![1],
            nodes,
            edges: vec![(0, 1), (1, 2)],
            diamonds: vec![],
            strands: vec![],
        };
        let (d, s) = diamonds_and_strands(&p).unwrap();
        assert!(d.is_empty());
        assert_eq!(s, vec![[0, 1, 2]]);
    }

    #[test]
    fn characters() {
        let c = ch(&[0], 3);
        let g = graded_specht_character(&Multipartition::from_parts(&[&[1]]), &c);
        assert_eq!(g, GradedCharacter::monomial(0, 1));
        let mu = Multipartition::from_parts(&[&[2, 1]]);
        assert_eq!(graded_specht_character(&mu, &c).at_one(), 2);
    }

    #[test]
    fn klr_small() {
        let c = ch(&[0], 4);
        let la = Multipartition::from_parts(&[&[2, 1]]);
        let m = build_klr_module(&la, &c, &[2]).unwrap();
        assert_eq!(m.dim(), 2);
        let rep = verify_klr_relations(&m);
        assert!(rep.all_pass(), "{:?}", rep.checks);
    }
}
