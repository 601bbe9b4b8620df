//! The `sl_e`-crystal on charged multipartitions.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::multipartition::{
    addable_boxes, compare_boxes, removable_boxes, Charge, Multipartition, Node,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// Addable (`+`) and removable (`-`) `i`-boxes, least dominant first.
pub fn i_word(mp: &Multipartition, ch: &Charge, i: i64) -> Vec<(Node, Sign)> {
    let mut w: Vec<(Node, Sign)> = addable_boxes(mp, ch, Some(i))
        .into_iter()
        .map(|b| (b, Sign::Plus))
        .chain(removable_boxes(mp, ch, Some(i)).into_iter().map(|b| (b, Sign::Minus)))
        .collect();
    w.sort_by(|a, b| compare_boxes(a.0, b.0, ch));
    w
}

/// Cancels adjacent `-+` pairs until the word reads `(+)^a (-)^b`.
pub fn reduced_i_word(w: &[(Node, Sign)]) -> Vec<(Node, Sign)> {
    let mut stack: Vec<(Node, Sign)> = Vec::with_capacity(w.len());
    for &x in w {
        if x.1 == Sign::Plus && stack.last().map_or(false, |t| t.1 == Sign::Minus) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    stack
}

/// The good addable `i`-box, if any.
pub fn good_addable(mp: &Multipartition, ch: &Charge, i: i64) -> Option<Node> {
    reduced_i_word(&i_word(mp, ch, i)).into_iter().rev().find(|x| x.1 == Sign::Plus).map(|x| x.0)
}

/// The good removable `i`-box, if any.
pub fn good_removable(mp: &Multipartition, ch: &Charge, i: i64) -> Option<Node> {
    reduced_i_word(&i_word(mp, ch, i)).into_iter().find(|x| x.1 == Sign::Minus).map(|x| x.0)
}

pub fn f_tilde(mp: &Multipartition, ch: &Charge, i: i64) -> Option<Multipartition> {
    good_addable(mp, ch, i).map(|b| mp.add(b))
}

pub fn e_tilde(mp: &Multipartition, ch: &Charge, i: i64) -> Option<Multipartition> {
    good_removable(mp, ch, i).map(|b| mp.remove(b))
}

/// `f_{i_n} ... f_{i_1}` applied to the empty multipartition.
pub fn build_from_word(word: &[i64], ch: &Charge) -> Option<Multipartition> {
    let mut cur = Multipartition::empty(ch.level());
    for &i in word {
        cur = f_tilde(&cur, ch, i)?;
    }
    Some(cur)
}

/// Whether `mp` lies in the crystal component of the empty multipartition.
pub fn is_reachable(mp: &Multipartition, ch: &Charge) -> bool {
    let mut cur = mp.clone();
    'outer: while !cur.is_empty() {
        for i in 0..ch.e {
            if let Some(next) = e_tilde(&cur, ch, i) {
                cur = next;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// The crystal-reachable multipartitions of size `n`, sorted.
pub fn reachable(n: usize, ch: &Charge) -> Vec<Multipartition> {
    let mut layer: BTreeSet<Multipartition> = BTreeSet::new();
    layer.insert(Multipartition::empty(ch.level()));
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for mp in &layer {
            for i in 0..ch.e {
                if let Some(x) = f_tilde(mp, ch, i) {
                    next.insert(x);
                }
            }
        }
        layer = next;
    }
    layer.into_iter().collect()
}

/// Memoised test for building expressions with two equal adjacent residues.
#[derive(Default)]
pub struct StutterMemo {
    memo: HashMap<Multipartition, bool>,
}

impl StutterMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Whether some expression `f_{i_n} ... f_{i_1} (empty) = mp` has `i_k = i_{k+1}`.
    /// Assumes `mp` is reachable.
    pub fn stutters(&mut self, mp: &Multipartition, ch: &Charge) -> bool {
        if let Some(&v) = self.memo.get(mp) {
            return v;
        }
        let mut found = false;
        for i in 0..ch.e {
            if let Some(prev) = e_tilde(mp, ch, i) {
                if e_tilde(&prev, ch, i).is_some() || self.stutters(&prev, ch) {
                    found = true;
                    break;
                }
            }
        }
        self.memo.insert(mp.clone(), found);
        found
    }

    pub fn is_no_stuttering(&mut self, mp: &Multipartition, ch: &Charge) -> bool {
        is_reachable(mp, ch) && !self.stutters(mp, ch)
    }
}

/// Reachable and admitting no building expression with equal adjacent residues.
pub fn is_no_stuttering(mp: &Multipartition, ch: &Charge) -> bool {
    StutterMemo::new().is_no_stuttering(mp, ch)
}
