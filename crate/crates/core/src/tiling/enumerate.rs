//! Enumeration of g-tilings by repeated expansion, and reconstruction of the
//! tiling with a given spectrum.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::groundset::{GroundSize, Subset};
use crate::tiling::surgery::{expand, LegalPath, Side, Step};
use crate::tiling::{GTiling, TilingGraph};
use crate::wscoll::WsCollection;
use crate::{Error, Result};

/// Sizes above this need `force`.
const ENUMERATION_LIMIT: usize = 5;

/// Every legal expansion path of `t` on `side`.
pub fn legal_paths(t: &GTiling, side: Side) -> Vec<LegalPath> {
    let mut out = Vec::new();
    for_each_legal_path(t, side, &|_| true, &mut |p| {
        out.push(p);
        false
    });
    out
}

/// Runs `visit` on each legal path whose vertices satisfy `keep`, stopping
/// once `visit` returns `true`.
fn for_each_legal_path(
    t: &GTiling,
    side: Side,
    keep: &dyn Fn(Subset) -> bool,
    visit: &mut dyn FnMut(LegalPath) -> bool,
) {
    let n = t.n();
    let (g, map): (TilingGraph, fn(Subset, GroundSize) -> Subset) = match side {
        Side::N => (t.graph(), |v, _| v),
        Side::One => (t.mirror().graph(), |v, n| v.mirror(n)),
    };
    let keep_m = |v: Subset| keep(map(v, n));
    let target = n.full();
    if g.is_terminal(Subset::EMPTY) || !keep_m(Subset::EMPTY) {
        return;
    }
    let mut path = alloc::vec![Subset::EMPTY];
    let mut steps: Vec<Step> = Vec::new();
    let mut on_path = BTreeSet::from([Subset::EMPTY]);
    dfs(
        &g,
        target,
        &keep_m,
        &mut path,
        &mut steps,
        &mut on_path,
        &mut |p: &[Subset]| {
            visit(LegalPath::unchecked(
                side,
                p.iter().map(|&v| map(v, n)).collect(),
            ))
        },
    );
}

fn turn_ok(prev: Option<&Step>, next: &Step) -> bool {
    let Some(a) = prev else { return true };
    let (i, j) = (a.edge.label(), next.edge.label());
    match (a.forward, next.forward) {
        (false, false) => false,
        (true, false) => i > j,
        (false, true) => i < j,
        (true, true) => true,
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    g: &TilingGraph,
    target: Subset,
    keep: &dyn Fn(Subset) -> bool,
    path: &mut Vec<Subset>,
    steps: &mut Vec<Step>,
    on_path: &mut BTreeSet<Subset>,
    visit: &mut dyn FnMut(&[Subset]) -> bool,
) -> bool {
    let v = *path.last().unwrap();
    if v == target {
        return visit(path);
    }
    for &e in g.incident(v) {
        let forward = e.tail() == v;
        let step = Step { edge: e, forward };
        let u = e.other(v);
        if on_path.contains(&u) || g.is_terminal(u) || !keep(u) || !turn_ok(steps.last(), &step) {
            continue;
        }
        path.push(u);
        steps.push(step);
        on_path.insert(u);
        let stop = dfs(g, target, keep, path, steps, on_path, visit);
        on_path.remove(&u);
        steps.pop();
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

/// All g-tilings of `Z_n`, in canonical order. Sizes above 5 are refused
/// unless `force` is set.
pub fn enumerate_gtilings(n: GroundSize, force: bool) -> Result<Vec<GTiling>> {
    if n.get() > ENUMERATION_LIMIT && !force {
        return Err(Error::CostGuard {
            n: n.get(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut level = alloc::vec![GTiling::empty(GroundSize::new(1)?)];
    for _ in 1..n.get() {
        let mut next = BTreeSet::new();
        for t in &level {
            for p in legal_paths(t, Side::N) {
                next.insert(expand(t, &p)?);
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level)
}

/// The g-tiling whose spectrum is the largest ws-collection `c`.
pub fn tiling_from_spectrum(c: &WsCollection) -> Result<GTiling> {
    if !c.is_largest() {
        return Err(Error::NotLargest {
            size: c.len(),
            expected: crate::wscoll::largest_size(c.n()),
        });
    }
    build(c)
}

fn build(c: &WsCollection) -> Result<GTiling> {
    let n = c.n();
    let Some(m) = n.smaller() else {
        return Ok(GTiling::empty(n));
    };
    let smaller = build(&c.contract(n.get())?)?;
    debug_assert_eq!(smaller.n(), m);
    let last = n.get();
    let keep = |v: Subset| c.contains(v) || c.contains(v.with(last));
    let mut found = None;
    let mut failure = None;
    for_each_legal_path(
        &smaller,
        Side::N,
        &keep,
        &mut |p| match expand(&smaller, &p) {
            Ok(t) if t.spectrum_unchecked() == *c => {
                found = Some(t);
                true
            }
            Ok(_) => false,
            Err(e) => {
                failure = Some(e);
                true
            }
        },
    );
    if let Some(e) = failure {
        return Err(e);
    }
    found.ok_or(Error::NoPathFound)
}
