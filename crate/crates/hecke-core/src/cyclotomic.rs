//! Exact arithmetic in the cyclotomic field `Q(zeta_e)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^{phi(e)-1}`,
//! i.e. reduced modulo the cyclotomic polynomial `Phi_e`.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Phi_e` as integer coefficients, constant term first.
pub fn cyclotomic_polynomial(e: usize) -> Vec<i64> {
    assert!(e >= 1);
    // x^e - 1
    let mut num = vec![0i64; e + 1];
    num[0] = -1;
    num[e] = 1;
    for d in 1..e {
        if e % d == 0 {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    debug_assert!(lead == 1);
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] / lead;
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// Whether `zeta_e^d == 1`.
pub fn is_power_one(d: i64, e: i64) -> bool {
    d.rem_euclid(e) == 0
}

/// Whether `zeta_e^d` is itself a primitive `e`-th root of unity.
pub fn is_primitive_power(d: i64, e: i64) -> bool {
    d.rem_euclid(e).gcd(&e) == 1
}

/// Orders `cos(2 pi d1 / e)` against `cos(2 pi d2 / e)` exactly.
pub fn re_compare(d1: i64, d2: i64, e: i64) -> Ordering {
    let dist = |d: i64| {
        let r = d.rem_euclid(e);
        r.min(e - r)
    };
    dist(d2).cmp(&dist(d1))
}

struct Field {
    phi: Vec<i64>,
    deg: usize,
    /// `zeta^k` reduced, for `0 <= k < 2 e`.
    powers: Vec<Vec<i64>>,
}

thread_local! {
    static FIELDS: RefCell<HashMap<usize, std::rc::Rc<Field>>> = RefCell::new(HashMap::new());
}

fn field(e: usize) -> std::rc::Rc<Field> {
    FIELDS.with(|f| {
        f.borrow_mut()
            .entry(e)
            .or_insert_with(|| {
                let phi = cyclotomic_polynomial(e);
                let deg = phi.len() - 1;
                let mut powers = Vec::with_capacity(2 * e);
                let mut cur = vec![0i64; deg];
                cur[0] = 1;
                for _ in 0..2 * e.max(deg) {
                    powers.push(cur.clone());
                    // multiply by x and reduce
                    let top = cur[deg - 1];
                    let mut next = vec![0i64; deg];
                    next[1..deg].copy_from_slice(&cur[..deg - 1]);
                    for j in 0..deg {
                        next[j] -= top * phi[j];
                    }
                    cur = next;
                }
                std::rc::Rc::new(Field { phi, deg, powers })
            })
            .clone()
    })
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An element of `Q(zeta_e)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc {
    e: usize,
    coeffs: Vec<BigRational>,
}

impl Cyc {
    pub fn zero(e: usize) -> Self {
        let deg = field(e).deg;
        Cyc { e, coeffs: vec![BigRational::zero(); deg] }
    }

    pub fn one(e: usize) -> Self {
        Self::from_rational(e, BigRational::one())
    }

    pub fn from_int(e: usize, n: i64) -> Self {
        Self::from_rational(e, rat(n))
    }

    pub fn from_rational(e: usize, r: BigRational) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[0] = r;
        z
    }

    /// `zeta_e^k` for any integer `k`.
    pub fn root(e: usize, k: i64) -> Self {
        let f = field(e);
        let k = k.rem_euclid(e as i64) as usize;
        Cyc { e, coeffs: f.powers[k].iter().map(|&c| rat(c)).collect() }
    }

    /// Element with the given coefficients on `zeta^0, zeta^1, ...` (any length).
    pub fn from_coeffs(e: usize, coeffs: &[BigRational]) -> Self {
        let mut z = Self::zero(e);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                z = &z + &(&Self::root(e, k as i64) * c);
            }
        }
        z
    }

    pub fn modulus(&self) -> usize {
        self.e
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.e);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &(&Self::root(self.e, -(k as i64)) * c);
            }
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.e);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by solving the linear system of multiplication by `self`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let deg = self.coeffs.len();
        // columns: self * zeta^j
        let mut mat: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); deg + 1]; deg];
        for j in 0..deg {
            let col = self * &Self::root(self.e, j as i64);
            for i in 0..deg {
                mat[i][j] = col.coeffs[i].clone();
            }
        }
        mat[0][deg] = BigRational::one();
        for col in 0..deg {
            let piv = (col..deg).find(|&r| !mat[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            mat.swap(col, piv);
            let p = mat[col][col].clone();
            for v in mat[col].iter_mut() {
                *v = &*v / &p;
            }
            for r in 0..deg {
                if r != col && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for k in col..=deg {
                        let d = &f * &mat[col][k];
                        mat[r][k] -= d;
                    }
                }
            }
        }
        Ok(Cyc { e: self.e, coeffs: mat.into_iter().map(|row| row[deg].clone()).collect() })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Floating point value, for diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
                / c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / self.e as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl<'a> Add for &'a Cyc {
    type Output = Cyc;
    fn add(self, rhs: &'a Cyc) -> Cyc {
        assert_eq!(self.e, rhs.e, "mixed cyclotomic fields");
        Cyc { e: self.e, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub for &'a Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &'a Cyc) -> Cyc {
        assert_eq!(self.e, rhs.e, "mixed cyclotomic fields");
        Cyc { e: self.e, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Neg for &'a Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { e: self.e, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl<'a> Mul<&'a BigRational> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &'a BigRational) -> Cyc {
        Cyc { e: self.e, coeffs: self.coeffs.iter().map(|a| a * rhs).collect() }
    }
}

impl<'a> Mul for &'a Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &'a Cyc) -> Cyc {
        assert_eq!(self.e, rhs.e, "mixed cyclotomic fields");
        let f = field(self.e);
        let deg = f.deg;
        let mut prod = vec![BigRational::zero(); 2 * deg];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        // reduce x^k for k >= deg using x^deg = -sum phi_j x^j
        for k in (deg..2 * deg).rev() {
            if prod[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut prod[k]);
            for j in 0..deg {
                if f.phi[j] != 0 {
                    prod[k - deg + j] -= &c * rat(f.phi[j]);
                }
            }
        }
        prod.truncate(deg);
        Cyc { e: self.e, coeffs: prod }
    }
}

/// Sign of a rational number as -1, 0, 1.
pub fn rational_sign(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Sparse square matrix over `Q(zeta_e)`, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    e: usize,
    dim: usize,
    cols: Vec<BTreeMap<usize, Cyc>>,
}

impl CycMatrix {
    pub fn zero(e: usize, dim: usize) -> Self {
        CycMatrix { e, dim, cols: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(e: usize, dim: usize) -> Self {
        let mut m = Self::zero(e, dim);
        for i in 0..dim {
            m.set(i, i, Cyc::one(e));
        }
        m
    }

    pub fn diagonal(e: usize, entries: Vec<Cyc>) -> Self {
        let mut m = Self::zero(e, entries.len());
        for (i, x) in entries.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> usize {
        self.e
    }

    pub fn get(&self, i: usize, j: usize) -> Cyc {
        self.cols[j].get(&i).cloned().unwrap_or_else(|| Cyc::zero(self.e))
    }

    pub fn set(&mut self, i: usize, j: usize, x: Cyc) {
        if x.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, x);
        }
    }

    /// Nonzero entries of column `j` as `(row, value)`.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, &Cyc)> {
        self.cols[j].iter().map(|(&i, x)| (i, x))
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Cyc)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(&i, x)| (i, j, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzeros().all(|(i, j, _)| i == j)
    }

    pub fn scale(&self, x: &Cyc) -> Self {
        let mut out = Self::zero(self.e, self.dim);
        for (i, j, v) in self.nonzeros() {
            out.set(i, j, v * x);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (i, j, v) in other.nonzeros() {
            let cur = out.get(i, j);
            out.set(i, j, &cur + v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Cyc::from_int(self.e, -1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.e, self.dim);
        for j in 0..self.dim {
            let mut acc: BTreeMap<usize, Cyc> = BTreeMap::new();
            for (k, b) in other.column(j) {
                for (i, a) in self.column(k) {
                    let p = a * b;
                    match acc.get_mut(&i) {
                        Some(v) => *v = &*v + &p,
                        None => {
                            acc.insert(i, p);
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.cols[j] = acc;
        }
        out
    }

    /// Entrywise conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.e, self.dim);
        for (i, j, v) in self.nonzeros() {
            out.set(j, i, v.conj());
        }
        out
    }
}
