//! Level one: calibration of `D(λ)`, admissible tableaux, and the unitary locus
//! `U(λ) ⊆ (-1/2, 1/2]` of parameters `c` with `q = exp(2 pi i c)`.

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::crystal::good_removable;
use crate::error::{Error, Result};
use crate::multipartition::{
    charged_content, reverse_column_reading_tableau, standard_tableaux, Charge, Multipartition, Tableau,
};
use crate::seminormal::{is_unitary_class, seminormal_module, weight_class};

fn rat(p: i64, q: i64) -> Rational64 {
    Rational64::new(p, q)
}

fn half() -> Rational64 {
    rat(1, 2)
}

/// Renders as `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ser_rationals<S: Serializer>(v: &[Rational64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

fn check_partition(la: &[usize]) -> Result<()> {
    if la.is_empty() || la.iter().any(|&x| x == 0) || la.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(format!("{la:?} is not a nonempty partition")));
    }
    Ok(())
}

/// `(l, m)`: the principal hook length `λ_1 + λ'_1 - 1`, and the span of the
/// border contents `λ_1 - λ_h + h`.
pub fn hook_stats(la: &[usize]) -> Result<(i64, i64)> {
    check_partition(la)?;
    let h = la.len() as i64;
    let l = la[0] as i64 + h - 1;
    let m = la[0] as i64 - la[la.len() - 1] as i64 + h;
    Ok((l, m))
}

/// `(a, x, y)` with `la = (a^x, (a-1)^y)`, `a > 1`, `x > 0`, `y >= 0`.
pub fn almost_rectangle(la: &[usize]) -> Option<(usize, usize, usize)> {
    let a = *la.first()?;
    if a < 2 {
        return None;
    }
    let x = la.iter().take_while(|&&p| p == a).count();
    let y = la[x..].iter().take_while(|&&p| p == a - 1).count();
    (x + y == la.len()).then_some((a, x, y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocusCase {
    Row,
    Column,
    AlmostRectangle,
    General,
}

/// `U(λ)` as an interval, finitely many extra points, and finitely many
/// removed points. All values lie in `(-1/2, 1/2]`; lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitaryLocus {
    pub case: LocusCase,
    pub l: i64,
    pub m: i64,
    /// Endpoints; the left end is open exactly when it is `-1/2`.
    #[serde(serialize_with = "ser_rationals")]
    pub interval: Vec<Rational64>,
    #[serde(serialize_with = "ser_rationals")]
    pub points: Vec<Rational64>,
    #[serde(serialize_with = "ser_rationals")]
    pub exclusions: Vec<Rational64>,
}

impl UnitaryLocus {
    pub fn contains(&self, c: Rational64) -> bool {
        let (lo, hi) = (self.interval[0], self.interval[1]);
        let in_interval = if lo == -half() { c > lo && c <= hi } else { c >= lo && c <= hi };
        (in_interval && !self.exclusions.contains(&c)) || self.points.contains(&c)
    }
}

fn in_range(c: &Rational64) -> bool {
    *c > -half() && *c <= half()
}

fn push_pm(v: &mut Vec<Rational64>, r: Rational64) {
    for x in [r, -r] {
        if in_range(&x) {
            v.push(x);
        }
    }
}

fn canonical(mut v: Vec<Rational64>) -> Vec<Rational64> {
    v.sort();
    v.dedup();
    v
}

/// The closed form, with cases taken in the order row, column, almost rectangle.
/// For an almost rectangle `(a^x, (a-1)^y)` the value `m = x + y + 1` is used.
pub fn unitary_locus(la: &[usize]) -> Result<UnitaryLocus> {
    let (l, span) = hook_stats(la)?;
    let n: usize = la.iter().sum();
    if la.len() == 1 {
        return Ok(UnitaryLocus {
            case: LocusCase::Row,
            l,
            m: span,
            interval: vec![-half(), half()],
            points: Vec::new(),
            exclusions: Vec::new(),
        });
    }
    if la[0] == 1 {
        let mut ex = Vec::new();
        for e in 2..=n as i64 {
            for a in 1..=e / 2 {
                if a.gcd(&e) == 1 {
                    push_pm(&mut ex, rat(a, e));
                }
            }
        }
        return Ok(UnitaryLocus {
            case: LocusCase::Column,
            l,
            m: span,
            interval: vec![-half(), half()],
            points: Vec::new(),
            exclusions: canonical(ex),
        });
    }
    let rect = almost_rectangle(la);
    let m = rect.map_or(span, |(_, x, y)| (x + y + 1) as i64);
    let bound = rat(1, l);
    let mut pts = Vec::new();
    for big_l in m.max(1)..=l {
        push_pm(&mut pts, rat(1, big_l));
    }
    if rect.is_some() {
        for d in 1..=m / 2 {
            if d.gcd(&m) == 1 {
                push_pm(&mut pts, rat(d, m));
            }
        }
    }
    pts.retain(|p| *p < -bound || *p > bound);
    Ok(UnitaryLocus {
        case: if rect.is_some() { LocusCase::AlmostRectangle } else { LocusCase::General },
        l,
        m,
        interval: vec![-bound, bound],
        points: canonical(pts),
        exclusions: Vec::new(),
    })
}

pub fn locus_contains(la: &[usize], c: Rational64) -> Result<bool> {
    if !in_range(&c) {
        return Err(Error::InvalidParameter(format!("{} is not in (-1/2, 1/2]", format_rational(&c))));
    }
    Ok(unitary_locus(la)?.contains(c))
}

/// An irrational parameter known only to lie strictly between two rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrrationalWindow {
    pub lo: Rational64,
    pub hi: Rational64,
}

/// Membership of an irrational `c`: always for a row or column, otherwise
/// exactly when `|c| < 1/l`. `None` when the window straddles `±1/l`.
pub fn irrational_locus_contains(la: &[usize], w: IrrationalWindow) -> Result<Option<bool>> {
    if w.lo >= w.hi || w.lo < -half() || w.hi > half() {
        return Err(Error::InvalidParameter("window must satisfy -1/2 <= lo < hi <= 1/2".into()));
    }
    let (l, _) = hook_stats(la)?;
    if la.len() == 1 || la[0] == 1 {
        return Ok(Some(true));
    }
    let b = rat(1, l);
    if w.lo >= -b && w.hi <= b {
        Ok(Some(true))
    } else if w.hi <= -b || w.lo >= b {
        Ok(Some(false))
    } else {
        Ok(None)
    }
}

fn is_regular(la: &[usize], e: i64) -> bool {
    let e = e as usize;
    la.windows(e).all(|w| w[0] != w[e - 1])
}

/// `D(λ)` is nonzero and calibrated: always when `e = 0`, otherwise when `λ`
/// is `e`-regular and its border contents span at most `e`.
pub fn is_calibrated_level1(la: &[usize], e: i64) -> Result<bool> {
    let (_, span) = hook_stats(la)?;
    Ok(e == 0 || (span <= e && is_regular(la, e)))
}

fn as_mp(la: &[usize]) -> Multipartition {
    Multipartition::new(vec![la.to_vec()]).expect("partition")
}

/// Standard tableaux whose entry `k` is a good removable box of the shape of
/// `1..=k` for every `k`; every standard tableau when `e = 0`.
pub fn q_admissible_tableaux(la: &[usize], e: i64) -> Result<Vec<Tableau>> {
    check_partition(la)?;
    let mp = as_mp(la);
    let all = standard_tableaux(&mp);
    if e == 0 {
        return Ok(all);
    }
    let ch = Charge::new(vec![0], e)?;
    Ok(all
        .into_iter()
        .filter(|t| {
            (1..=t.size()).all(|k| {
                let b = t.node(k);
                good_removable(&t.prefix_shape(k), &ch, charged_content(b, &ch).rem_euclid(e)) == Some(b)
            })
        })
        .collect())
}

/// The column-reading tableau.
pub fn column_reading_tableau(la: &[usize]) -> Result<Tableau> {
    check_partition(la)?;
    reverse_column_reading_tableau(&as_mp(la), 1)
}

/// `m_T = (-co(T^{-1}(1)), ..., -co(T^{-1}(n)))`.
pub fn tableau_weight(t: &Tableau) -> Vec<i64> {
    t.order().iter().map(|b| b.r as i64 - b.c as i64).collect()
}

/// Builds the class of the column-reading weight and tests whether every form sign is positive.
pub fn positivity_oracle(la: &[usize], a: i64, e: i64) -> Result<bool> {
    if !is_calibrated_level1(la, e)? {
        return Err(Error::NotCalibrated);
    }
    let w = tableau_weight(&column_reading_tableau(la)?);
    let class = weight_class(&w, e)?;
    is_unitary_class(&seminormal_module(&class, e, a)?)
}
