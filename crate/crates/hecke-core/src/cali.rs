//! Border multisets, FLOTW multipartitions and the calibrated set `Cali`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::crystal;
use crate::error::{Error, Result};
use crate::multipartition::{Charge, Multipartition};

/// Charged contents of the last box of every row, per component in increasing
/// order, components concatenated. This is the reading word of the border multiset.
pub fn reading_word(mp: &Multipartition, ch: &Charge) -> Vec<i64> {
    let mut out = Vec::new();
    for (mi, p) in mp.components().iter().enumerate() {
        let s = ch.s[mi];
        // row r ends at content s + p_r - r, strictly decreasing in r
        for (ri, &len) in p.iter().enumerate().rev() {
            out.push(s + len as i64 - ri as i64 - 1);
        }
    }
    out
}

/// The border multiset, sorted ascending.
pub fn border_multiset(mp: &Multipartition, ch: &Charge) -> Vec<i64> {
    let mut b = reading_word(mp, ch);
    b.sort_unstable();
    b
}

pub fn is_increasing(word: &[i64]) -> bool {
    word.windows(2).all(|w| w[0] < w[1])
}

/// `max - min <= e - 1`; vacuous for the empty multiset.
pub fn has_period_at_most_e(border: &[i64], e: i64) -> bool {
    match (border.iter().min(), border.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= e - 1,
        _ => true,
    }
}

/// Conditions on the border alone: period at most `e` and increasing reading word.
pub fn border_conditions(mp: &Multipartition, ch: &Charge) -> bool {
    let w = reading_word(mp, ch);
    is_increasing(&w) && has_period_at_most_e(&w, ch.e)
}

/// The two cylindricity conditions on rows of consecutive components.
pub fn is_cylindrical_mp(mp: &Multipartition, ch: &Charge) -> bool {
    let l = mp.level();
    let s = &ch.s;
    for j in 1..l {
        let shift = s[j] - s[j - 1];
        if shift < 0 {
            return false;
        }
        for k in 1..=mp.component(j + 1).len() {
            let kk = k + shift as usize;
            if mp.part(j, k) < mp.part(j + 1, kk) {
                return false;
            }
        }
    }
    let shift = ch.e + s[0] - s[l - 1];
    if shift < 0 {
        return false;
    }
    for k in 1..=mp.component(1).len() {
        if mp.part(l, k) < mp.part(1, k + shift as usize) {
            return false;
        }
    }
    true
}

/// Cylindrical charge, cylindrical rows, and for every row length the residues
/// at the ends of the rows of that length miss some residue.
pub fn is_flotw(mp: &Multipartition, ch: &Charge) -> bool {
    if !ch.is_cylindrical() || mp.level() != ch.level() || !is_cylindrical_mp(mp, ch) {
        return false;
    }
    let e = ch.e as usize;
    let max_len = mp.components().iter().filter_map(|p| p.first()).copied().max().unwrap_or(0);
    for alpha in 1..=max_len {
        let mut seen = vec![false; e];
        for (mi, p) in mp.components().iter().enumerate() {
            for (ri, &len) in p.iter().enumerate() {
                if len == alpha {
                    let c = ch.s[mi] + len as i64 - ri as i64 - 1;
                    seen[c.rem_euclid(ch.e) as usize] = true;
                }
            }
        }
        if seen.iter().all(|&x| x) {
            return false;
        }
    }
    true
}

/// Cylindricity read off the bottom-left boxes, valid under the border conditions:
/// `s_{j-1} < co(b^j_min)` for nonempty `j >= 2`, and `s_l < co(b^j_min) + e` for the
/// first nonempty `j`.
pub fn is_cylindrical_mp_from_border(mp: &Multipartition, ch: &Charge) -> Result<bool> {
    if !border_conditions(mp, ch) {
        return Err(Error::InvalidParameter("border conditions fail".into()));
    }
    let l = mp.level();
    let bmin = |j: usize| ch.s[j - 1] + 1 - mp.component(j).len() as i64;
    let mut first = None;
    for j in 1..=l {
        if mp.component(j).is_empty() {
            continue;
        }
        if first.is_none() {
            first = Some(j);
        }
        if j >= 2 && ch.s[j - 2] >= bmin(j) {
            return Ok(false);
        }
    }
    if let Some(j) = first {
        if ch.s[l - 1] >= bmin(j) + ch.e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Border conditions plus cylindricity, as literally stated; this admits the
/// boundary case where the border is a full interval of length `e`.
pub fn is_cali_literal(mp: &Multipartition, ch: &Charge) -> Result<bool> {
    ch.require_cylindrical()?;
    Ok(border_conditions(mp, ch) && is_cylindrical_mp(mp, ch))
}

/// Membership in `Cali`: period at most `e`, increasing reading word,
/// cylindrical, and fewer than `e` rows in total.
pub fn is_cali(mp: &Multipartition, ch: &Charge) -> Result<bool> {
    Ok(is_cali_literal(mp, ch)? && reading_word(mp, ch).len() < ch.e as usize)
}

/// `Cali` members of size `n`, filtered from the crystal component of the empty multipartition.
pub fn enumerate_cali(n: usize, ch: &Charge) -> Result<Vec<Multipartition>> {
    ch.require_cylindrical()?;
    let mut out = Vec::new();
    for mp in crystal::reachable(n, ch) {
        if is_cali(&mp, ch)? {
            out.push(mp);
        }
    }
    Ok(out)
}

fn validate_border(border: &[i64], e: i64) -> Result<Vec<i64>> {
    let set: BTreeSet<i64> = border.iter().copied().collect();
    if set.len() != border.len() {
        return Err(Error::InvalidBorder("repeated entries".into()));
    }
    if border.is_empty() {
        return Err(Error::InvalidBorder("empty border".into()));
    }
    if set.len() as i64 >= e {
        return Err(Error::InvalidBorder(format!("{} entries, need fewer than e = {e}", set.len())));
    }
    let lo = *set.iter().next().unwrap();
    let hi = *set.iter().next_back().unwrap();
    if hi - lo >= e {
        return Err(Error::InvalidBorder(format!("span {} not below e = {e}", hi - lo)));
    }
    Ok(set.into_iter().rev().collect())
}

/// Multipartitions cut from the semi-infinite diagram with right border `border`
/// by the staircase procedure, with every component nonempty and at most
/// `max_parts` components. The bottom-left box of the first component has content
/// in `[i_h - h + 1, i_h]`.
pub fn staircase_splittings(border: &[i64], max_parts: usize, e: i64) -> Result<Vec<(Multipartition, Charge)>> {
    let rows = validate_border(border, e)?; // i_1 > i_2 > ... > i_h
    let h = rows.len();
    // row x (1-indexed) ends in column i_x + x
    let end = |x: usize| rows[x - 1] + x as i64;
    let i_h = rows[h - 1];
    let mut out = Vec::new();

    struct Ctx<'a> {
        end: &'a dyn Fn(usize) -> i64,
        alpha: i64,
        e: i64,
        max_parts: usize,
    }

    fn rec(
        ctx: &Ctx,
        x_prev: usize,
        y_prev: i64,
        s_prev: i64,
        comps: &mut Vec<Vec<usize>>,
        charges: &mut Vec<i64>,
        out: &mut Vec<(Multipartition, Charge)>,
    ) {
        if x_prev == 1 {
            let mp = Multipartition::new(comps.clone()).expect("valid parts");
            out.push((mp, Charge { s: charges.clone(), e: ctx.e, a: 1 }));
            return;
        }
        if comps.len() == ctx.max_parts {
            return;
        }
        for s in s_prev + 1..ctx.alpha + ctx.e {
            for x in 1..x_prev {
                if s == ctx.alpha + ctx.e - 1 && x != 1 {
                    continue;
                }
                let y = s + x as i64;
                if y < y_prev || (ctx.end)(x_prev - 1) < y {
                    continue;
                }
                let parts: Vec<usize> = (x..x_prev).map(|r| ((ctx.end)(r) - y + 1) as usize).collect();
                comps.push(parts);
                charges.push(s);
                rec(ctx, x, y, s, comps, charges, out);
                comps.pop();
                charges.pop();
            }
        }
    }

    for alpha in (i_h - h as i64 + 1)..=i_h {
        let y1 = alpha + h as i64;
        for x1 in 1..=h {
            let s1 = y1 - x1 as i64;
            let parts: Vec<usize> = (x1..=h).map(|r| (end(r) - y1 + 1) as usize).collect();
            let ctx = Ctx { end: &end, alpha, e, max_parts };
            let mut comps = vec![parts];
            let mut charges = vec![s1];
            rec(&ctx, x1, y1, s1, &mut comps, &mut charges, &mut out);
        }
    }
    out.sort_by(|a, b| (&a.1.s, &a.0).cmp(&(&b.1.s, &b.0)));
    Ok(out)
}

/// All ways of inserting empty components into `mp` (charge `ch`) to reach
/// `level` components while staying in `Cali`.
pub fn pad_with_empty(mp: &Multipartition, ch: &Charge, level: usize) -> Result<Vec<(Multipartition, Charge)>> {
    let l = mp.level();
    if level < l {
        return Ok(Vec::new());
    }
    let lo = ch.s[l - 1] - ch.e + 1;
    let hi = ch.s[0] + ch.e - 1;
    let mut found: BTreeSet<(Vec<i64>, Multipartition)> = BTreeSet::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        mp: &Multipartition,
        ch: &Charge,
        level: usize,
        next: usize,
        lo: i64,
        hi: i64,
        comps: &mut Vec<Vec<usize>>,
        charges: &mut Vec<i64>,
        found: &mut BTreeSet<(Vec<i64>, Multipartition)>,
    ) {
        let placed_empty = comps.len() - next;
        let remaining_empty = level - mp.level() - placed_empty;
        let floor = charges.last().copied().unwrap_or(lo);
        if next == mp.level() && remaining_empty == 0 {
            let m = Multipartition::new(comps.clone()).expect("valid parts");
            let c = Charge { s: charges.clone(), e: ch.e, a: ch.a };
            if c.is_cylindrical() && is_cali(&m, &c).unwrap_or(false) {
                found.insert((charges.clone(), m));
            }
            return;
        }
        if next < mp.level() && ch.s[next] >= floor {
            comps.push(mp.component(next + 1).to_vec());
            charges.push(ch.s[next]);
            rec(mp, ch, level, next + 1, lo, hi, comps, charges, found);
            comps.pop();
            charges.pop();
        }
        if remaining_empty > 0 {
            let cap = if next < mp.level() { ch.s[next].min(hi) } else { hi };
            for v in floor..=cap {
                comps.push(Vec::new());
                charges.push(v);
                rec(mp, ch, level, next, lo, hi, comps, charges, found);
                comps.pop();
                charges.pop();
            }
        }
    }

    rec(mp, ch, level, 0, lo, hi, &mut Vec::new(), &mut Vec::new(), &mut found);
    Ok(found
        .into_iter()
        .map(|(s, m)| (m, Charge { s, e: ch.e, a: ch.a }))
        .collect())
}

/// Staircase splittings with at most `level` nonempty components, each padded
/// with empty components in every admissible way to exactly `level` components.
pub fn charged_splittings_of_border(border: &[i64], level: usize, e: i64) -> Result<Vec<(Multipartition, Charge)>> {
    let mut out = Vec::new();
    for (mp, ch) in staircase_splittings(border, level, e)? {
        out.extend(pad_with_empty(&mp, &ch, level)?);
    }
    Ok(out)
}

/// A skew diagram with contents: row `x` (top to bottom) occupies columns
/// `inner[x] + 1 ..= outer[x]`; the box in row `x`, column `y` has content
/// `y - x + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewShape {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub offset: i64,
}

impl SkewShape {
    pub fn content(&self, x: usize, y: usize) -> i64 {
        y as i64 - x as i64 + self.offset
    }

    /// Contents of each row, top to bottom.
    pub fn row_contents(&self) -> Vec<Vec<i64>> {
        (1..=self.outer.len())
            .map(|x| (self.inner[x - 1] + 1..=self.outer[x - 1]).map(|y| self.content(x, y)).collect())
            .collect()
    }

    /// Contents of the last box of each row, i.e. the right border.
    pub fn border(&self) -> Vec<i64> {
        (1..=self.outer.len()).map(|x| self.content(x, self.outer[x - 1])).collect()
    }
}

/// The stacked diagram of a `Cali` member with components forgotten: the last
/// component on top, the first at the bottom, empty components skipped.
pub fn skew_shape(mp: &Multipartition, ch: &Charge) -> Result<SkewShape> {
    if !is_cali(mp, ch)? {
        return Err(Error::NotCali);
    }
    let mut spans: Vec<(i64, i64)> = Vec::new(); // (first column, last column) in global coordinates
    for m in (1..=mp.level()).rev() {
        for (ri, &len) in mp.component(m).iter().enumerate() {
            let x = spans.len() as i64 + 1;
            let first = ch.s[m - 1] - ri as i64 + x;
            spans.push((first, first + len as i64 - 1));
        }
    }
    if spans.is_empty() {
        return Ok(SkewShape { outer: Vec::new(), inner: Vec::new(), offset: 0 });
    }
    let shift = spans.iter().map(|s| s.0).min().unwrap() - 1;
    let outer: Vec<usize> = spans.iter().map(|s| (s.1 - shift) as usize).collect();
    let inner: Vec<usize> = spans.iter().map(|s| (s.0 - 1 - shift) as usize).collect();
    if outer.windows(2).any(|w| w[0] < w[1]) || inner.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter("stacked diagram is not a skew shape".into()));
    }
    Ok(SkewShape { outer, inner, offset: shift })
}

/// Cuts a skew diagram horizontally into blocks of consecutive rows sharing a
/// left edge; each block is a component whose charge is the content of its
/// top-left box. The bottom block is the first component.
pub fn horizontal_cut_splittings(skew: &SkewShape) -> Vec<(Multipartition, Vec<i64>)> {
    let h = skew.outer.len();
    let mut out = Vec::new();
    if h == 0 {
        return out;
    }
    // cut after row x (between x and x+1) is optional unless the left edges differ
    let forced: Vec<bool> = (1..h).map(|x| skew.inner[x - 1] != skew.inner[x]).collect();
    let free: Vec<usize> = (0..h - 1).filter(|&k| !forced[k]).collect();
    for mask in 0u64..(1u64 << free.len()) {
        let mut cut = forced.clone();
        for (bit, &k) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                cut[k] = true;
            }
        }
        let mut blocks: Vec<(usize, usize)> = Vec::new(); // 1-indexed inclusive row ranges
        let mut start = 1;
        for x in 1..=h {
            if x == h || cut[x - 1] {
                blocks.push((start, x));
                start = x + 1;
            }
        }
        let mut comps = Vec::new();
        let mut charges = Vec::new();
        for &(a, b) in blocks.iter().rev() {
            comps.push((a..=b).map(|x| skew.outer[x - 1] - skew.inner[x - 1]).collect::<Vec<_>>());
            charges.push(skew.content(a, skew.inner[a - 1] + 1));
        }
        out.push((Multipartition::new(comps).expect("valid parts"), charges));
    }
    out
}
