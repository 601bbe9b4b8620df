//! Exhaustive verification sweeps. Each sweep compares an implementation with an
//! independent oracle over a bounded parameter range and reports every failure.
//! Jobs run on the ambient rayon pool; results are merged in job order.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::alcove::{fundamental_multipartitions, in_fundamental_alcove, path_degree, path_of_tableau};
use crate::bgg::{
    block_poset, build_klr_module, euler_check, graded_character_identity, sign_assignment, signs_valid,
    verify_klr_relations, GRADED_SHIFT,
};
use crate::cali::{is_cali, is_flotw};
use crate::crystal::{e_tilde, reachable, StutterMemo};
use crate::level1::{is_calibrated_level1, locus_contains, positivity_oracle};
use crate::multipartition::{
    admissible_heights, compare_boxes, dominates, multipartitions, partitions, residue, standard_tableaux,
    tableau_degree, Charge, Multipartition, Node,
};
use crate::seminormal::{
    all_calibrated_classes, cyclotomic_membership, form_values, is_hermitian_invariant, seminormal_module,
    verify_hecke_relations,
};

const MAX_EXAMPLES: usize = 5;

/// Upper bounds for the sweeps. `acceptance()` is the full range.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Bounds {
    pub crystal_n: usize,
    pub crystal_e: i64,
    pub crystal_level: usize,
    pub seminormal_n: usize,
    pub seminormal_e: i64,
    pub membership_level: usize,
    pub alcove_n: usize,
    pub alcove_e: i64,
    pub degree_n: usize,
    pub bgg_n: usize,
    pub bgg_e: i64,
    pub bgg_level: usize,
    pub locus_n: usize,
    pub locus_e: i64,
    pub dominance_n: usize,
    pub dominance_e: i64,
    pub dominance_level: usize,
}

impl Bounds {
    pub fn acceptance() -> Self {
        Bounds {
            crystal_n: 8,
            crystal_e: 6,
            crystal_level: 3,
            seminormal_n: 5,
            seminormal_e: 6,
            membership_level: 2,
            alcove_n: 8,
            alcove_e: 6,
            degree_n: 6,
            bgg_n: 8,
            bgg_e: 6,
            bgg_level: 2,
            locus_n: 8,
            locus_e: 12,
            dominance_n: 6,
            dominance_e: 4,
            dominance_level: 3,
        }
    }

    /// Caps every size bound at `n`.
    pub fn capped(n: usize) -> Self {
        let mut b = Self::acceptance();
        for v in [
            &mut b.crystal_n,
            &mut b.seminormal_n,
            &mut b.alcove_n,
            &mut b.degree_n,
            &mut b.bgg_n,
            &mut b.locus_n,
            &mut b.dominance_n,
        ] {
            *v = (*v).min(n);
        }
        b
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// The first few failures, in job order.
    pub examples: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(msg);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        for m in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(m);
            }
        }
        self
    }

    fn into_outcome(self, id: u32, name: &'static str) -> Outcome {
        Outcome { id, name, cases: self.cases, failures: self.failures, examples: self.examples }
    }
}

fn run<J: Sync, F: Fn(&J) -> Tally + Sync + Send>(jobs: &[J], f: F) -> Tally {
    jobs.par_iter().map(f).collect::<Vec<_>>().into_iter().fold(Tally::default(), Tally::merge)
}

fn charges(max_e: i64, max_level: usize) -> Vec<Charge> {
    (2..=max_e)
        .flat_map(|e| (1..=max_level).flat_map(move |l| Charge::cylindrical_with_origin(l, e)))
        .collect()
}

fn show(mp: &Multipartition, ch: &Charge) -> String {
    format!("{mp} s={:?} e={}", ch.s, ch.e)
}

/// 1. `{no stuttering} = {Cali}` among all multipartitions of each size.
pub fn classification(b: &Bounds) -> Outcome {
    let t = run(&charges(b.crystal_e, b.crystal_level), |ch| {
        let mut t = Tally::default();
        let mut memo = StutterMemo::new();
        for n in 0..=b.crystal_n {
            for mp in multipartitions(n, ch.level()) {
                let ns = memo.is_no_stuttering(&mp, ch);
                let cali = is_cali(&mp, ch).unwrap_or(false);
                t.check(ns == cali, || format!("{}: no-stuttering {ns}, Cali {cali}", show(&mp, ch)));
            }
        }
        t
    });
    t.into_outcome(1, "classification: no-stuttering = Cali")
}

/// 2. Crystal-reachable set equals the FLOTW set.
pub fn flotw(b: &Bounds) -> Outcome {
    let t = run(&charges(b.crystal_e, b.crystal_level), |ch| {
        let mut t = Tally::default();
        for n in 0..=b.crystal_n {
            let reach: BTreeSet<Multipartition> = reachable(n, ch).into_iter().collect();
            for mp in multipartitions(n, ch.level()) {
                let (r, f) = (reach.contains(&mp), is_flotw(&mp, ch));
                t.check(r == f, || format!("{}: reachable {r}, FLOTW {f}", show(&mp, ch)));
            }
        }
        t
    });
    t.into_outcome(2, "FLOTW = crystal-reachable")
}

/// 3. Every `e_i` sends a Cali multipartition to a Cali one or to zero.
pub fn crystal_preservation(b: &Bounds) -> Outcome {
    let t = run(&charges(b.crystal_e, b.crystal_level), |ch| {
        let mut t = Tally::default();
        for n in 1..=b.crystal_n {
            for mp in multipartitions(n, ch.level()) {
                if !is_cali(&mp, ch).unwrap_or(false) {
                    continue;
                }
                for i in 0..ch.e {
                    if let Some(nu) = e_tilde(&mp, ch, i) {
                        let ok = is_cali(&nu, ch).unwrap_or(false);
                        t.check(ok, || format!("{} -> e_{i} -> {nu} not Cali", show(&mp, ch)));
                    } else {
                        t.cases += 1;
                    }
                }
            }
        }
        t
    });
    t.into_outcome(3, "e_i preserves Cali")
}

fn seminormal_jobs(b: &Bounds) -> Vec<(usize, i64, i64)> {
    let mut jobs = Vec::new();
    for e in 2..=b.seminormal_e {
        for a in 1..e {
            if a.gcd(&e) == 1 {
                for n in 1..=b.seminormal_n {
                    jobs.push((n, e, a));
                }
            }
        }
    }
    jobs
}

/// 4. Hecke relations as exact matrix identities on every calibrated class.
pub fn seminormal_relations(b: &Bounds) -> Outcome {
    let t = run(&seminormal_jobs(b), |&(n, e, a)| {
        let mut t = Tally::default();
        for class in all_calibrated_classes(n, e) {
            match seminormal_module(&class, e, a) {
                Ok(m) => {
                    let r = verify_hecke_relations(&m);
                    t.check(r.all_pass(), || format!("{:?} e={e} a={a}: {:?}", class[0], r.failures()));
                }
                Err(err) => t.fail(format!("{:?} e={e} a={a}: {err}", class[0])),
            }
        }
        t
    });
    t.into_outcome(4, "seminormal Hecke relations")
}

/// 5. At `a = 1` every class satisfying a cyclotomic relation has all form
/// signs `+1`; for some `a > 1` such a class has a negative sign.
pub fn unitary_calibrated(b: &Bounds) -> Outcome {
    let chs = charges(b.seminormal_e, b.membership_level);
    let jobs = seminormal_jobs(b);
    let results: Vec<(Tally, bool)> = jobs
        .par_iter()
        .map(|&(n, e, a)| {
            let mut t = Tally::default();
            let mut negative = false;
            let local: Vec<&Charge> = chs.iter().filter(|c| c.e == e).collect();
            for class in all_calibrated_classes(n, e) {
                let Ok(m) = seminormal_module(&class, e, a) else {
                    t.fail(format!("{:?} e={e} a={a}: construction", class[0]));
                    continue;
                };
                if !local.iter().any(|c| cyclotomic_membership(&m, c)) {
                    continue;
                }
                match form_values(&m) {
                    Ok(f) => {
                        let positive = f.signs.iter().all(|&s| s == 1);
                        if a == 1 {
                            t.check(positive, || format!("{:?} e={e}: negative sign at a=1", class[0]));
                        } else if !positive {
                            negative = true;
                        }
                    }
                    Err(err) => t.fail(format!("{:?} e={e} a={a}: {err}", class[0])),
                }
            }
            (t, negative)
        })
        .collect();
    let negative = results.iter().any(|r| r.1);
    let mut t = results.into_iter().fold(Tally::default(), |acc, r| acc.merge(r.0));
    t.check(negative, || "no negative sign found for any a > 1".into());
    t.into_outcome(5, "unitary = calibrated at a = 1")
}

/// 6. The propagated diagonal form is invariant for `T_i` and `X_i`.
pub fn hermitian_invariance(b: &Bounds) -> Outcome {
    let t = run(&seminormal_jobs(b), |&(n, e, a)| {
        let mut t = Tally::default();
        for class in all_calibrated_classes(n, e) {
            let res = seminormal_module(&class, e, a).and_then(|m| form_values(&m).map(|f| (m, f)));
            match res {
                Ok((m, f)) => {
                    t.check(is_hermitian_invariant(&m, &f.values), || format!("{:?} e={e} a={a}", class[0]))
                }
                Err(err) => t.fail(format!("{:?} e={e} a={a}: {err}", class[0])),
            }
        }
        t
    });
    t.into_outcome(6, "Hermitian invariance of the form")
}

/// `(charge, hbar)` with `hbar` admissible, `0 < h < e`.
fn geometry_jobs(max_e: i64, max_level: usize) -> Vec<(Charge, Vec<usize>)> {
    let mut jobs = Vec::new();
    for ch in charges(max_e, max_level) {
        for hbar in admissible_heights(&ch) {
            let h: usize = hbar.iter().sum();
            if h > 0 && (h as i64) < ch.e {
                jobs.push((ch.clone(), hbar));
            }
        }
    }
    jobs
}

/// 7. `Cali ⟺ F` for multipartitions with heights exactly `hbar`.
pub fn geometry(b: &Bounds) -> Outcome {
    let t = run(&geometry_jobs(b.alcove_e, b.crystal_level), |(ch, hbar)| {
        let mut t = Tally::default();
        for n in 0..=b.alcove_n {
            for mp in multipartitions(n, ch.level()) {
                if mp.heights() != *hbar {
                    continue;
                }
                let c = is_cali(&mp, ch).unwrap_or(false);
                match in_fundamental_alcove(&mp, ch, hbar) {
                    Ok(f) => t.check(c == f, || format!("{} hbar={hbar:?}: Cali {c}, F {f}", show(&mp, ch))),
                    Err(err) => t.fail(format!("{}: {err}", show(&mp, ch))),
                }
            }
        }
        t
    });
    t.into_outcome(7, "Cali = fundamental alcove")
}

/// 8. Path degree equals tableau degree for every standard tableau.
pub fn degrees(b: &Bounds) -> Outcome {
    let t = run(&geometry_jobs(b.alcove_e, b.crystal_level), |(ch, hbar)| {
        let mut t = Tally::default();
        for n in 0..=b.degree_n {
            for mp in multipartitions(n, ch.level()) {
                if !mp.fits(hbar) {
                    continue;
                }
                for tab in standard_tableaux(&mp) {
                    let d = path_of_tableau(&tab, hbar).map(|p| path_degree(&p, ch, hbar));
                    let want = tableau_degree(&tab, ch);
                    t.check(d == Ok(want), || {
                        format!("{} hbar={hbar:?} {:?}: {d:?} vs {want}", show(&mp, ch), tab.filling())
                    });
                }
            }
        }
        t
    });
    t.into_outcome(8, "path degree = tableau degree")
}

struct BlockTallies {
    euler: Tally,
    graded: Tally,
    other_shift: bool,
    klr: Tally,
    signs: Tally,
}

fn bgg_sweep(b: &Bounds) -> BlockTallies {
    let jobs = geometry_jobs(b.bgg_e, b.bgg_level);
    let parts: Vec<BlockTallies> = jobs
        .par_iter()
        .map(|(ch, hbar)| {
            let mut bt = BlockTallies {
                euler: Tally::default(),
                graded: Tally::default(),
                other_shift: true,
                klr: Tally::default(),
                signs: Tally::default(),
            };
            let members = match fundamental_multipartitions(ch, hbar, b.bgg_n) {
                Ok(v) => v,
                Err(err) => {
                    bt.euler.fail(format!("s={:?} e={} hbar={hbar:?}: {err}", ch.s, ch.e));
                    return bt;
                }
            };
            for la in members {
                let what = || format!("{} hbar={hbar:?}", show(&la, ch));
                let p = match block_poset(&la, ch, hbar) {
                    Ok(p) => p,
                    Err(err) => {
                        for t in [&mut bt.euler, &mut bt.graded, &mut bt.signs] {
                            t.fail(format!("{}: {err}", what()));
                        }
                        continue;
                    }
                };
                match euler_check(&p) {
                    Ok(r) => bt.euler.check(r.holds, || format!("{}: {} vs {}", what(), r.alternating_sum, r.fundamental_paths)),
                    Err(err) => bt.euler.fail(format!("{}: {err}", what())),
                }
                let g = graded_character_identity(&p, GRADED_SHIFT).unwrap_or(false);
                bt.graded.check(g, what);
                if !graded_character_identity(&p, -GRADED_SHIFT).unwrap_or(false) {
                    bt.other_shift = false;
                }
                match sign_assignment(&p) {
                    Ok(s) => bt.signs.check(signs_valid(&p, &s.signs), what),
                    Err(err) => bt.signs.fail(format!("{}: {err}", what())),
                }
                if ch.e > 2 {
                    match build_klr_module(&la, ch, hbar) {
                        Ok(m) => {
                            let r = verify_klr_relations(&m);
                            bt.klr.check(r.all_pass(), || {
                                let bad: Vec<_> = r.checks.iter().filter(|c| !*c.1).map(|c| c.0.clone()).collect();
                                format!("{}: {bad:?}", what())
                            });
                        }
                        Err(err) => bt.klr.fail(format!("{}: {err}", what())),
                    }
                }
            }
            bt
        })
        .collect();
    let mut acc = BlockTallies {
        euler: Tally::default(),
        graded: Tally::default(),
        other_shift: true,
        klr: Tally::default(),
        signs: Tally::default(),
    };
    for p in parts {
        acc.euler = acc.euler.merge(p.euler);
        acc.graded = acc.graded.merge(p.graded);
        acc.other_shift &= p.other_shift;
        acc.klr = acc.klr.merge(p.klr);
        acc.signs = acc.signs.merge(p.signs);
    }
    acc
}

/// 9-12 share one pass over the blocks.
pub fn bgg(b: &Bounds) -> [Outcome; 4] {
    let mut bt = bgg_sweep(b);
    bt.graded.check(!bt.other_shift, || format!("shift {} also holds everywhere", -GRADED_SHIFT));
    [
        bt.euler.into_outcome(9, "BGG Euler identity"),
        bt.graded.into_outcome(10, "graded character identity"),
        bt.klr.into_outcome(11, "KLR relations on D"),
        bt.signs.into_outcome(12, "diamond sign system solvable"),
    ]
}

/// 13. Closed-form locus ⟺ calibrated and all form signs positive.
pub fn level_one(b: &Bounds) -> Outcome {
    let mut jobs = Vec::new();
    for n in 1..=b.locus_n {
        for la in partitions(n) {
            for e in 2..=b.locus_e {
                jobs.push((la.clone(), e));
            }
        }
    }
    let t = run(&jobs, |(la, e)| {
        let e = *e;
        let mut t = Tally::default();
        let cal = is_calibrated_level1(la, e).unwrap_or(false);
        for a in (-(e - 1) / 2)..=(e / 2) {
            if a.gcd(&e) != 1 {
                continue;
            }
            let closed = locus_contains(la, Rational64::new(a, e));
            let oracle = if cal { positivity_oracle(la, a, e) } else { Ok(false) };
            match (closed, oracle) {
                (Ok(c), Ok(o)) => t.check(c == o, || format!("{la:?} c={a}/{e}: closed form {c}, oracle {o}")),
                (c, o) => t.fail(format!("{la:?} c={a}/{e}: {c:?} {o:?}")),
            }
        }
        t
    });
    t.into_outcome(13, "level-one unitary loci")
}

/// Exhaustive search for a residue-preserving bijection `[mu] -> [la]` moving
/// every box weakly down.
pub fn dominates_exhaustive(mu: &Multipartition, la: &Multipartition, ch: &Charge) -> bool {
    if mu.size() != la.size() {
        return false;
    }
    let src = mu.nodes();
    let dst = la.nodes();
    fn rec(k: usize, src: &[Node], dst: &[Node], used: &mut [bool], ch: &Charge) -> bool {
        if k == src.len() {
            return true;
        }
        for j in 0..dst.len() {
            if !used[j]
                && residue(dst[j], ch) == residue(src[k], ch)
                && compare_boxes(dst[j], src[k], ch) != std::cmp::Ordering::Greater
            {
                used[j] = true;
                if rec(k + 1, src, dst, used, ch) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    rec(0, &src, &dst, &mut vec![false; dst.len()], ch)
}

/// 14. Greedy dominance agrees with the exhaustive search.
pub fn dominance(b: &Bounds) -> Outcome {
    let t = run(&charges(b.dominance_e, b.dominance_level), |ch| {
        let mut t = Tally::default();
        for n in 0..=b.dominance_n {
            let all = multipartitions(n, ch.level());
            for mu in &all {
                for la in &all {
                    let g = dominates(mu, la, ch).unwrap_or(false);
                    let x = dominates_exhaustive(mu, la, ch);
                    t.check(g == x, || format!("{mu} vs {la} s={:?} e={}: greedy {g}, exhaustive {x}", ch.s, ch.e));
                }
            }
        }
        t
    });
    t.into_outcome(14, "dominance: greedy = exhaustive")
}

/// Named groups of criteria, for `hecke verify`.
pub const SUITES: &[&str] = &["crystal", "seminormal", "geometry", "bgg", "klr", "locus", "dominance", "all"];

pub fn run_suite(suite: &str, b: &Bounds) -> Option<Vec<Outcome>> {
    let out = match suite {
        "crystal" => vec![classification(b), flotw(b), crystal_preservation(b)],
        "seminormal" => vec![seminormal_relations(b), unitary_calibrated(b), hermitian_invariance(b)],
        "geometry" => vec![geometry(b), degrees(b)],
        "bgg" => bgg(b).into(),
        "klr" => bgg(b).into_iter().filter(|o| o.id == 11).collect(),
        "locus" => vec![level_one(b)],
        "dominance" => vec![dominance(b)],
        "all" => {
            let mut v = Vec::new();
            for s in ["crystal", "seminormal", "geometry", "bgg", "locus", "dominance"] {
                v.extend(run_suite(s, b)?);
            }
            v
        }
        _ => return None,
    };
    Some(out)
}
