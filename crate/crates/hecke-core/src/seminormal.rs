//! Seminormal forms of calibrated modules for the affine Hecke algebra at a
//! root of unity, their invariant Hermitian forms, and unitarity.
//!
//! A weight is an exponent vector `m`; with `q = zeta_e^a` the eigenvalue of
//! `X_k` is `b_k = q^{m_k}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::cyclotomic::{re_compare, Cyc, CycMatrix};
use crate::error::{Error, Result};
use crate::multipartition::Charge;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CalWeight {
    pub m: Vec<i64>,
    pub e: i64,
    pub a: i64,
}

fn reduce(x: i64, e: i64) -> i64 {
    if e == 0 {
        x
    } else {
        x.rem_euclid(e)
    }
}

fn congruent(x: i64, y: i64, e: i64) -> bool {
    reduce(x - y, e) == 0
}

/// For all `i < j` with `m_i = m_j` (mod `e`), both `m_i + 1` and `m_i - 1`
/// occur strictly between them. `e = 0` compares exactly.
pub fn is_calibrated_weight(m: &[i64], e: i64) -> bool {
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if congruent(m[i], m[j], e) {
                let between = &m[i + 1..j];
                let up = between.iter().any(|&x| congruent(x, m[i] + 1, e));
                let down = between.iter().any(|&x| congruent(x, m[i] - 1, e));
                if !(up && down) {
                    return false;
                }
            }
        }
    }
    true
}

/// `s_i` (0-indexed: swaps positions `i`, `i + 1`) is admissible unless
/// `m_{i+1} = m_i +- 1`.
pub fn is_admissible_transposition(m: &[i64], i: usize, e: i64) -> bool {
    !congruent(m[i + 1], m[i] + 1, e) && !congruent(m[i + 1], m[i] - 1, e)
}

/// The class of `m` under admissible transpositions, exponents reduced mod `e`, sorted.
pub fn weight_class(m: &[i64], e: i64) -> Result<Vec<Vec<i64>>> {
    if !is_calibrated_weight(m, e) {
        return Err(Error::NotCalibrated);
    }
    let start: Vec<i64> = m.iter().map(|&x| reduce(x, e)).collect();
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if is_admissible_transposition(&w, i, e) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Exact matrices of `T_1..T_{n-1}` and `X_1..X_n` on the basis `w_b`, `b` in the class.
#[derive(Clone, Debug)]
pub struct SeminormalModule {
    pub class: Vec<Vec<i64>>,
    pub e: i64,
    pub a: i64,
    pub t: Vec<CycMatrix>,
    pub x: Vec<CycMatrix>,
    index: HashMap<Vec<i64>, usize>,
}

impl SeminormalModule {
    pub fn n(&self) -> usize {
        self.class.first().map_or(0, |w| w.len())
    }

    pub fn dim(&self) -> usize {
        self.class.len()
    }

    pub fn index_of(&self, w: &[i64]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn q(&self) -> Cyc {
        Cyc::root(self.e as usize, self.a)
    }

    /// `b_k = q^{m_k}` as an element of `Q(zeta_e)`.
    pub fn eigenvalue(&self, w: &[i64], k: usize) -> Cyc {
        Cyc::root(self.e as usize, self.a * w[k])
    }

    /// `T_i^{-1} = q^{-1}(T_i - (q - 1))`, `i` 0-indexed.
    pub fn t_inverse(&self, i: usize) -> CycMatrix {
        let e = self.e as usize;
        let q = self.q();
        let shift = CycMatrix::identity(e, self.dim()).scale(&(&q - &Cyc::one(e)));
        self.t[i].sub(&shift).scale(&Cyc::root(e, -self.a))
    }

    pub fn x_inverse(&self, i: usize) -> CycMatrix {
        let e = self.e as usize;
        let mut out = CycMatrix::zero(e, self.dim());
        for (r, c, v) in self.x[i].nonzeros() {
            out.set(r, c, v.conj());
        }
        out
    }
}

/// The diagonal coefficient `b_{i+1}(q-1)/(b_{i+1}-b_i)` of `T_i` at `w`.
fn diagonal_coefficient(w: &[i64], i: usize, e: i64, a: i64) -> Result<Cyc> {
    let eu = e as usize;
    let q = Cyc::root(eu, a);
    let bi = Cyc::root(eu, a * w[i]);
    let bj = Cyc::root(eu, a * w[i + 1]);
    (&bj * &(&q - &Cyc::one(eu))).div(&(&bj - &bi))
}

/// Builds the seminormal module on a calibrated class, for `e >= 2` and `gcd(a, e) = 1`.
pub fn seminormal_module(class: &[Vec<i64>], e: i64, a: i64) -> Result<SeminormalModule> {
    if e < 2 {
        return Err(Error::InvalidParameter(format!("exact matrices need e >= 2, got {e}")));
    }
    if num_integer::gcd(a, e) != 1 {
        return Err(Error::InvalidParameter(format!("gcd({a}, {e}) != 1")));
    }
    let first = class.first().ok_or_else(|| Error::InvalidParameter("empty class".into()))?;
    let n = first.len();
    let class: Vec<Vec<i64>> = class.iter().map(|w| w.iter().map(|&x| reduce(x, e)).collect()).collect();
    let index: HashMap<Vec<i64>, usize> = class.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    if index.len() != class.len() || class.iter().any(|w| w.len() != n || !is_calibrated_weight(w, e)) {
        return Err(Error::NotCalibrated);
    }
    let eu = e as usize;
    let dim = class.len();
    let q = Cyc::root(eu, a);
    let mut t = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        let mut m = CycMatrix::zero(eu, dim);
        for (col, w) in class.iter().enumerate() {
            let d = diagonal_coefficient(w, i, e, a)?;
            if is_admissible_transposition(w, i, e) {
                let mut sw = w.clone();
                sw.swap(i, i + 1);
                let row = *index.get(&sw).ok_or_else(|| Error::InvalidParameter("class not closed".into()))?;
                m.set(row, col, &d - &q);
            }
            m.set(col, col, d);
        }
        t.push(m);
    }
    let x = (0..n)
        .map(|k| CycMatrix::diagonal(eu, class.iter().map(|w| Cyc::root(eu, a * w[k])).collect()))
        .collect();
    Ok(SeminormalModule { class, e, a, t, x, index })
}

/// Outcome of each relation check, in a fixed order.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub checks: Vec<(String, bool)>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect()
    }
}

/// Quadratic, braid and commutation relations, `X` commutativity, and
/// `T_i X_i T_i = q X_{i+1}`, all as exact matrix identities.
pub fn verify_hecke_relations(module: &SeminormalModule) -> RelationReport {
    let e = module.e as usize;
    let dim = module.dim();
    let n = module.n();
    let q = module.q();
    let one = CycMatrix::identity(e, dim);
    let t = &module.t;
    let x = &module.x;
    let mut checks = Vec::new();
    for i in 0..t.len() {
        let lhs = t[i].add(&one).mul(&t[i].sub(&one.scale(&q)));
        checks.push((format!("quadratic T{}", i + 1), lhs.is_zero()));
    }
    for i in 0..t.len().saturating_sub(1) {
        let l = t[i].mul(&t[i + 1]).mul(&t[i]);
        let r = t[i + 1].mul(&t[i]).mul(&t[i + 1]);
        checks.push((format!("braid T{} T{}", i + 1, i + 2), l == r));
    }
    for i in 0..t.len() {
        for j in i + 2..t.len() {
            checks.push((format!("commute T{} T{}", i + 1, j + 1), t[i].mul(&t[j]) == t[j].mul(&t[i])));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            checks.push((format!("commute X{} X{}", i + 1, j + 1), x[i].mul(&x[j]) == x[j].mul(&x[i])));
        }
    }
    for i in 0..t.len() {
        let l = t[i].mul(&x[i]).mul(&t[i]);
        checks.push((format!("T{0} X{0} T{0} = q X{1}", i + 1, i + 2), l == x[i + 1].scale(&q)));
        for j in 0..n {
            if j != i && j != i + 1 {
                checks.push((format!("commute T{} X{}", i + 1, j + 1), t[i].mul(&x[j]) == x[j].mul(&t[i])));
            }
        }
    }
    RelationReport { checks }
}

/// `A_{s_i b} / A_b` forced by invariance, computed from the matrix entries:
/// `q conj(c_{s_i b}) / c_b` where `c` is the off-diagonal coefficient.
pub fn invariance_ratio(module: &SeminormalModule, w: &[i64], i: usize) -> Result<Cyc> {
    let col = module.index_of(w).ok_or_else(|| Error::InvalidParameter("weight not in class".into()))?;
    let mut sw = w.to_vec();
    sw.swap(i, i + 1);
    let row = module.index_of(&sw).ok_or_else(|| Error::InvalidParameter("transposition not admissible".into()))?;
    let c = module.t[i].get(row, col);
    let c_back = module.t[i].get(col, row);
    (&module.q() * &c_back.conj()).div(&c)
}

/// The closed form `(q - x)/(1 - q x)` with `x = b_i / b_{i+1}`.
pub fn ratio_closed_form(w: &[i64], i: usize, e: i64, a: i64) -> Result<Cyc> {
    let eu = e as usize;
    let q = Cyc::root(eu, a);
    let x = Cyc::root(eu, a * (w[i] - w[i + 1]));
    (&q - &x).div(&(&Cyc::one(eu) - &(&q * &x)))
}

/// Sign of `A_{s_i b}/A_b`: positive iff `Re(b_i/b_{i+1}) < Re(q)`.
pub fn ratio_sign(w: &[i64], i: usize, e: i64, a: i64) -> i32 {
    match re_compare(a * (w[i] - w[i + 1]), a, e) {
        Ordering::Less => 1,
        Ordering::Greater => -1,
        Ordering::Equal => 0,
    }
}

/// The invariant form: exact real values `A_b` with `A = 1` at the lexicographically
/// least weight, and their signs.
#[derive(Clone, Debug)]
pub struct FormValues {
    pub values: Vec<Cyc>,
    pub signs: Vec<i32>,
}

/// Propagates `A` along a spanning tree of admissible transpositions and checks
/// every edge. Signs use `re_compare`; values are exact and are checked against
/// both the invariance ratio and the closed form.
pub fn form_values(module: &SeminormalModule) -> Result<FormValues> {
    let e = module.e;
    let eu = e as usize;
    let dim = module.dim();
    let mut values: Vec<Option<Cyc>> = vec![None; dim];
    let mut signs = vec![0i32; dim];
    if dim == 0 {
        return Ok(FormValues { values: Vec::new(), signs });
    }
    values[0] = Some(Cyc::one(eu));
    signs[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let w = module.class[k].clone();
        for i in 0..w.len().saturating_sub(1) {
            if !is_admissible_transposition(&w, i, e) {
                continue;
            }
            let mut sw = w.clone();
            sw.swap(i, i + 1);
            let j = module.index_of(&sw).ok_or(Error::InconsistentForm)?;
            let r = invariance_ratio(module, &w, i)?;
            if r != ratio_closed_form(&w, i, e, module.a)? || !r.is_real() {
                return Err(Error::InconsistentForm);
            }
            let s = ratio_sign(&w, i, e, module.a);
            if s == 0 {
                return Err(Error::InconsistentForm);
            }
            let v = values[k].as_ref().unwrap() * &r;
            match &values[j] {
                None => {
                    values[j] = Some(v);
                    signs[j] = signs[k] * s;
                    queue.push_back(j);
                }
                Some(old) => {
                    if *old != v || signs[j] != signs[k] * s {
                        return Err(Error::InconsistentForm);
                    }
                }
            }
        }
    }
    if values.iter().any(|v| v.is_none()) {
        return Err(Error::InvalidParameter("class is not connected".into()));
    }
    Ok(FormValues { values: values.into_iter().map(|v| v.unwrap()).collect(), signs })
}

/// Sign of `A_b` for every weight in the class, keyed by weight.
pub fn form_signs(module: &SeminormalModule) -> Result<BTreeMap<Vec<i64>, i32>> {
    let f = form_values(module)?;
    Ok(module.class.iter().cloned().zip(f.signs).collect())
}

/// All form signs agree; equivalently a positive definite invariant form exists.
pub fn is_unitary_class(module: &SeminormalModule) -> Result<bool> {
    Ok(form_values(module)?.signs.iter().all(|&s| s == 1))
}

/// `<T_i u, v> = <u, T_i^{-1} v>` and `<X_i u, v> = <u, X_i^{-1} v>` for the
/// diagonal form `A`, checked on all basis pairs where either side is nonzero.
pub fn is_hermitian_invariant(module: &SeminormalModule, values: &[Cyc]) -> bool {
    let check = |g: &CycMatrix, ginv: &CycMatrix| {
        let mut pairs: BTreeSet<(usize, usize)> = g.nonzeros().map(|(k, j, _)| (k, j)).collect();
        pairs.extend(ginv.nonzeros().map(|(j, k, _)| (k, j)));
        pairs.into_iter().all(|(k, j)| &g.get(k, j) * &values[k] == &ginv.get(j, k).conj() * &values[j])
    };
    (0..module.t.len()).all(|i| check(&module.t[i], &module.t_inverse(i)))
        && (0..module.x.len()).all(|i| check(&module.x[i], &module.x_inverse(i)))
}

/// `prod_i (X_1 - Q_i) = 0` with `Q_i = q^{s_i}`.
pub fn cyclotomic_membership(module: &SeminormalModule, ch: &Charge) -> bool {
    let e = module.e as usize;
    let dim = module.dim();
    let mut acc = CycMatrix::identity(e, dim);
    for &s in &ch.s {
        let qi = Cyc::root(e, module.a * s);
        let factor = module.x[0].sub(&CycMatrix::identity(e, dim).scale(&qi));
        acc = acc.mul(&factor);
    }
    acc.is_zero()
}

/// Every calibrated weight class of length `n` with exponents in `Z/e`,
/// each given by its sorted member list.
pub fn all_calibrated_classes(n: usize, e: i64) -> Vec<Vec<Vec<i64>>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(cur: &mut Vec<i64>, n: usize, e: i64, seen: &mut BTreeSet<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
        if !is_calibrated_weight(cur, e) {
            return;
        }
        if cur.len() == n {
            if !seen.contains(cur) {
                let class = weight_class(cur, e).expect("calibrated");
                seen.extend(class.iter().cloned());
                out.push(class);
            }
            return;
        }
        for v in 0..e {
            cur.push(v);
            rec(cur, n, e, seen, out);
            cur.pop();
        }
    }
    rec(&mut cur, n, e, &mut seen, &mut out);
    out.sort();
    out
}

/// The level-one conditions: calibrated, `m_1 = 0`, and every later entry is
/// adjacent to an earlier one.
pub fn is_level_one_weight(m: &[i64], e: i64) -> bool {
    is_calibrated_weight(m, e)
        && m.first().map_or(true, |&x| congruent(x, 0, e))
        && (1..m.len()).all(|i| m[..i].iter().any(|&y| congruent(y, m[i] + 1, e) || congruent(y, m[i] - 1, e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calibrated_examples() {
        assert!(is_calibrated_weight(&[0, 1], 0));
        assert!(!is_calibrated_weight(&[0, 2, 0], 0));
        assert!(is_calibrated_weight(&[0, 1, -1, 0], 0));
        assert!(!is_calibrated_weight(&[0, 1, 0], 0));
        assert!(is_calibrated_weight(&[0, 1, 0], 2));
        assert!(!is_calibrated_weight(&[0, 0], 3));
    }

    #[test]
    fn classes() {
        assert_eq!(weight_class(&[0, 1, 2, 3], 0).unwrap().len(), 1);
        assert_eq!(weight_class(&[5], 0).unwrap(), vec![vec![5]]);
        // (2,1) at generic q: contents 0,1,-1 in two orders
        assert_eq!(weight_class(&[0, -1, 1], 0).unwrap(), vec![vec![0, -1, 1], vec![0, 1, -1]]);
        assert!(weight_class(&[0, 0], 3).is_err());
    }

    #[test]
    fn two_dimensional_scalars() {
        let m = seminormal_module(&weight_class(&[0, 1], 5).unwrap(), 5, 1).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.t[0].get(0, 0), Cyc::root(5, 1));
        let m = seminormal_module(&weight_class(&[0, -1], 5).unwrap(), 5, 1).unwrap();
        assert_eq!(m.t[0].get(0, 0), Cyc::from_int(5, -1));
        assert!(verify_hecke_relations(&m).all_pass());
    }

    #[test]
    fn two_one_module() {
        let class = weight_class(&[0, 1, 4], 5).unwrap();
        assert_eq!(class.len(), 2);
        let m = seminormal_module(&class, 5, 1).unwrap();
        let rep = verify_hecke_relations(&m);
        assert!(rep.all_pass(), "{:?}", rep.failures());
        let f = form_values(&m).unwrap();
        assert!(is_hermitian_invariant(&m, &f.values));
        assert!(is_unitary_class(&m).unwrap());
        assert!(cyclotomic_membership(&m, &Charge::new(vec![0], 5).unwrap()));
        assert!(!cyclotomic_membership(&m, &Charge::new(vec![1], 5).unwrap()));
    }

    #[test]
    fn corrupted_matrix_fails() {
        let class = weight_class(&[0, 1, 4], 5).unwrap();
        let mut m = seminormal_module(&class, 5, 1).unwrap();
        m.t[0].set(0, 0, Cyc::from_int(5, 3));
        assert!(!verify_hecke_relations(&m).all_pass());
    }

    #[test]
    fn negative_sign_at_other_root() {
        let found = (2..=8).any(|e: i64| {
            (2..e).filter(|&a| num_integer::gcd(a, e) == 1).any(|a| {
                (2..=4).any(|n| {
                    all_calibrated_classes(n, e).into_iter().any(|c| {
                        let m = seminormal_module(&c, e, a).unwrap();
                        !is_unitary_class(&m).unwrap()
                    })
                })
            })
        });
        assert!(found);
    }
}
