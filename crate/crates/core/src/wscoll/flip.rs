//! Flips on largest ws-collections: with `X` and `i < j < k` outside `X`, and
//! `Xi, Xk, Xij, Xjk` present, exchange `Xik` (lowering) for `Xj`, or back
//! (raising).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::groundset::{GroundSize, Subset};
use crate::wscoll::{enumerate_maximal, WsCollection};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlipDirection {
    /// Replace `Xik` by `Xj`.
    Lowering,
    /// Replace `Xj` by `Xik`.
    Raising,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlipMove {
    pub base: Subset,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub direction: FlipDirection,
}

impl FlipMove {
    pub fn removed(&self) -> Subset {
        match self.direction {
            FlipDirection::Lowering => self.base.with(self.i).with(self.k),
            FlipDirection::Raising => self.base.with(self.j),
        }
    }

    pub fn added(&self) -> Subset {
        match self.direction {
            FlipDirection::Lowering => self.base.with(self.j),
            FlipDirection::Raising => self.base.with(self.i).with(self.k),
        }
    }

    /// The four sets that must stay in place: `Xi, Xk, Xij, Xjk`.
    pub fn frame(&self) -> [Subset; 4] {
        let x = self.base;
        [
            x.with(self.i),
            x.with(self.k),
            x.with(self.i).with(self.j),
            x.with(self.j).with(self.k),
        ]
    }

    pub fn inverse(&self) -> FlipMove {
        let direction = match self.direction {
            FlipDirection::Lowering => FlipDirection::Raising,
            FlipDirection::Raising => FlipDirection::Lowering,
        };
        FlipMove { direction, ..*self }
    }

    fn well_formed(&self, n: GroundSize) -> bool {
        self.i < self.j
            && self.j < self.k
            && self.i >= 1
            && self.k <= n.get()
            && self.base.fits(n)
            && ![self.i, self.j, self.k]
                .iter()
                .any(|&e| self.base.contains(e))
    }
}

/// Applies `m` to a largest collection, then rechecks the result.
pub fn flip(c: &WsCollection, m: &FlipMove) -> Result<WsCollection> {
    if !m.well_formed(c.n()) {
        return Err(Error::FlipPrecondition(format!("malformed move {m:?}")));
    }
    if !c.is_largest() {
        return Err(Error::FlipPrecondition("source is not largest".into()));
    }
    if let Some(x) = m.frame().into_iter().find(|&x| !c.contains(x)) {
        return Err(Error::FlipPrecondition(format!("{x} missing")));
    }
    if !c.contains(m.removed()) {
        return Err(Error::FlipPrecondition(format!("{} missing", m.removed())));
    }
    if c.contains(m.added()) {
        return Err(Error::FlipPrecondition(format!(
            "{} already present",
            m.added()
        )));
    }
    let mut out = c.clone();
    out.remove(m.removed());
    out.insert(m.added())?;
    if !out.is_largest() {
        return Err(Error::FlipResultInvalid);
    }
    Ok(out)
}

/// Every move whose frame and removed set are present and whose added set is
/// absent, in canonical order.
pub fn available_flips(c: &WsCollection) -> Vec<FlipMove> {
    let n = c.n().get();
    let mut out = Vec::new();
    for &x in c.members() {
        // enumerate by frame anchor Xi to keep the scan proportional to |c|
        for i in 1..=n {
            if !x.contains(i) {
                continue;
            }
            let base = x.without(i);
            for j in i + 1..=n {
                for k in j + 1..=n {
                    if base.contains(j) || base.contains(k) {
                        continue;
                    }
                    for direction in [FlipDirection::Lowering, FlipDirection::Raising] {
                        let m = FlipMove {
                            base,
                            i,
                            j,
                            k,
                            direction,
                        };
                        if m.frame().iter().all(|&y| c.contains(y))
                            && c.contains(m.removed())
                            && !c.contains(m.added())
                        {
                            out.push(m);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The flip graph on all largest ws-collections of `2^[n]`.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub nodes: Vec<WsCollection>,
    /// Lowering flips as `(from, to)` node indices.
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    /// Nodes admitting no lowering flip.
    pub minima: Vec<usize>,
    /// Nodes admitting no raising flip.
    pub maxima: Vec<usize>,
    /// Moves whose recheck failed; expected to stay empty.
    pub rejected: Vec<(usize, FlipMove)>,
}

pub fn flip_reachability(n: GroundSize) -> Result<FlipGraph> {
    if n.get() > 5 {
        return Err(Error::CostGuard {
            n: n.get(),
            limit: 5,
        });
    }
    let nodes = enumerate_maximal(n, |_| true);
    let index: BTreeMap<&WsCollection, usize> =
        nodes.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let mut edges = Vec::new();
    let mut rejected = Vec::new();
    let mut has_lowering = alloc::vec![false; nodes.len()];
    let mut has_raising = alloc::vec![false; nodes.len()];
    for (a, c) in nodes.iter().enumerate() {
        for m in available_flips(c) {
            match flip(c, &m) {
                Ok(d) => {
                    let b = *index.get(&d).ok_or(Error::FlipResultInvalid)?;
                    match m.direction {
                        FlipDirection::Lowering => {
                            has_lowering[a] = true;
                            edges.push((a, b));
                        }
                        FlipDirection::Raising => has_raising[a] = true,
                    }
                }
                Err(Error::FlipResultInvalid) => rejected.push((a, m)),
                Err(e) => return Err(e),
            }
        }
    }
    edges.sort();
    edges.dedup();

    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let roots = (0..nodes.len())
        .filter(|&x| find(&mut parent, x) == x)
        .count();

    Ok(FlipGraph {
        connected: roots <= 1,
        minima: (0..nodes.len()).filter(|&k| !has_lowering[k]).collect(),
        maxima: (0..nodes.len()).filter(|&k| !has_raising[k]).collect(),
        nodes,
        edges,
        rejected,
    })
}
