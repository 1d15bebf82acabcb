//! Edge and square existence among nonterminal vertices, and gradedness.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::groundset::Subset;
use crate::tiling::{Edge, GTiling};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeCheckReport {
    /// Nonterminal `X, Xi` with no edge between them.
    pub missing_edges: Vec<(Subset, Subset)>,
    /// Nonterminal squares `X, Xi, Xj, Xij` with all four edges but no tile.
    pub untiled_squares: Vec<(Subset, usize, usize)>,
    /// An edge whose endpoints disagree with the label potentials reached
    /// from `∅`.
    pub ungraded: Option<Edge>,
}

impl EdgeCheckReport {
    pub fn passed(&self) -> bool {
        self.missing_edges.is_empty() && self.untiled_squares.is_empty() && self.ungraded.is_none()
    }
}

pub fn edge_existence_checks(t: &GTiling) -> EdgeCheckReport {
    let g = t.graph();
    let n = t.n().get();
    let mut report = EdgeCheckReport::default();
    let nonterminal: Vec<Subset> = g.vertices().filter(|v| !g.is_terminal(*v)).collect();
    let ok = |v: Subset| g.has_vertex(v) && !g.is_terminal(v);

    for &x in &nonterminal {
        for i in 1..=n {
            if x.contains(i) || !ok(x.with(i)) {
                continue;
            }
            if !g.has_edge(Edge::raw(x, i)) {
                report.missing_edges.push((x, x.with(i)));
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                if x.contains(i) || x.contains(j) {
                    continue;
                }
                let corners = [x.with(i), x.with(j), x.with(i).with(j)];
                if !corners.iter().all(|&v| ok(v)) {
                    continue;
                }
                let sides = [
                    Edge::raw(x, i),
                    Edge::raw(x, j),
                    Edge::raw(x.with(i), j),
                    Edge::raw(x.with(j), i),
                ];
                if sides.iter().all(|&e| g.has_edge(e)) && g.find_tile(x, i, j).is_none() {
                    report.untiled_squares.push((x, i, j));
                }
            }
        }
    }

    // label-count potentials by BFS from ∅; along any walk an edge with
    // label k changes the count of k by one in its direction
    let mut pot: BTreeMap<Subset, Vec<i32>> = BTreeMap::new();
    pot.insert(Subset::EMPTY, alloc::vec![0; n + 1]);
    let mut queue = VecDeque::from([Subset::EMPTY]);
    while let Some(v) = queue.pop_front() {
        let pv = pot[&v].clone();
        for &e in g.incident(v) {
            let u = e.other(v);
            let mut pu = pv.clone();
            pu[e.label()] += if e.tail() == v { 1 } else { -1 };
            match pot.get(&u) {
                Some(old) if *old != pu => {
                    report.ungraded.get_or_insert(e);
                }
                Some(_) => {}
                None => {
                    pot.insert(u, pu);
                    queue.push_back(u);
                }
            }
        }
    }
    for (v, p) in &pot {
        let indicator = (1..=n).all(|k| p[k] == i32::from(v.contains(k)));
        if !indicator && report.ungraded.is_none() {
            report.ungraded = g.incident(*v).first().copied();
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::enumerate_gtilings;
    use crate::tiling::fixtures::*;

    #[test]
    fn fig1_edges() {
        let t = fig1();
        assert!(t.graph().has_edge(Edge::raw(s(&[2, 3]), 4)));
        let r = edge_existence_checks(&t);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn all_small_tilings() {
        for n in 1..=4 {
            for t in enumerate_gtilings(gs(n), false).unwrap() {
                assert!(edge_existence_checks(&t).passed(), "{t:?}");
            }
        }
    }

    #[test]
    fn removing_a_tile_is_detected() {
        let t = GTiling::new(gs(3), [w(&[], 1, 2), w(&[2], 1, 3)]).unwrap();
        let r = edge_existence_checks(&t);
        assert!(!r.passed());
    }
}
