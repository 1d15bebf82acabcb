//! White edges between two neighbouring levels: the principal tree and its
//! critical vertices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::groundset::Subset;
use crate::tiling::{left_boundary, right_boundary, verify, Edge, GTiling, TilingGraph};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalForest {
    pub level: usize,
    /// Edges of the principal tree `K_h`, from left to right.
    pub principal: Vec<Edge>,
    /// The other components, each a star at a terminal vertex.
    pub stars: Vec<(Subset, Vec<Edge>)>,
    /// Vertices of `K_h` in level `h - 1`, from left to right.
    pub lower: Vec<Subset>,
    /// Vertices of `K_h` in level `h`, from left to right.
    pub upper: Vec<Subset>,
    /// `U_h`: vertices shared by `K_h` and `K_{h+1}`, from left to right.
    pub critical: Vec<Subset>,
}

/// Decomposes the white edges between levels `h - 1` and `h` and checks
/// the forest structure, then computes the critical vertices in level `h`.
pub fn principal_forest(t: &GTiling, h: usize) -> Result<PrincipalForest> {
    let n = t.n().get();
    if !(1..=n).contains(&h) {
        return Err(Error::InvalidLevel { h, n: n as u8 });
    }
    if let Some(v) = verify(t).violations().first() {
        return Err(Error::Unverified(format!("{v}")));
    }
    let g = t.graph();
    let mut f = level_forest(&g, h)?;
    f.critical = if h == n {
        alloc::vec![t.n().full()]
    } else {
        let next = level_forest(&g, h + 1)?;
        let low: BTreeSet<Subset> = next.lower.iter().copied().collect();
        f.upper
            .iter()
            .filter(|v| low.contains(v))
            .copied()
            .collect()
    };
    Ok(f)
}

fn fail(h: usize, what: &str) -> Error {
    Error::Unverified(format!("level {h}: {what}"))
}

fn level_forest(g: &TilingGraph, h: usize) -> Result<PrincipalForest> {
    let n = g.n();
    let edges: Vec<Edge> = g
        .edges()
        .filter(|e| e.tail().len() == h - 1 && !g.is_black_edge(*e))
        .collect();

    // components by union-find over vertices
    let mut verts: BTreeMap<Subset, usize> = BTreeMap::new();
    for e in &edges {
        for v in [e.tail(), e.head()] {
            let k = verts.len();
            verts.entry(v).or_insert(k);
        }
    }
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in &edges {
        let (a, b) = (
            find(&mut parent, verts[&e.tail()]),
            find(&mut parent, verts[&e.head()]),
        );
        if a == b {
            return Err(fail(h, "white edges contain a cycle"));
        }
        parent[a] = b;
    }
    let mut comps: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
    for e in &edges {
        let r = find(&mut parent, verts[&e.tail()]);
        comps.entry(r).or_default().push(*e);
    }

    let mut principal: Option<Vec<Edge>> = None;
    let mut stars = Vec::new();
    for (_, comp) in comps {
        let fully = comp.iter().filter(|e| g.is_fully_white(**e)).count();
        if fully > 0 {
            if fully != comp.len() {
                return Err(fail(h, "principal tree has a semi-white edge"));
            }
            if principal.is_some() {
                return Err(fail(h, "fully white edges split into several trees"));
            }
            principal = Some(comp);
        } else {
            let terms: BTreeSet<Subset> = comp
                .iter()
                .flat_map(|e| [e.tail(), e.head()])
                .filter(|v| g.is_terminal(*v))
                .collect();
            let [center] = terms.into_iter().collect::<Vec<_>>()[..] else {
                return Err(fail(h, "side component without a unique terminal vertex"));
            };
            if comp
                .iter()
                .any(|e| e.tail() != center && e.head() != center)
            {
                return Err(fail(h, "side component is not a star"));
            }
            stars.push((center, comp));
        }
    }
    let mut principal = principal.ok_or_else(|| fail(h, "no fully white edges"))?;

    // left to right by the x-coordinate of the edge midpoint (doubled)
    let x = |v: Subset| v.bits() as i128;
    principal.sort_by_key(|e| 2 * x(e.tail()) + (1i128 << (e.label() - 1)));
    for w in principal.windows(2) {
        let (a, b) = (w[0], w[1]);
        let ok = (a.tail() == b.tail() && a.label() < b.label())
            || (a.head() == b.head() && a.label() > b.label());
        if !ok {
            return Err(fail(
                h,
                "principal tree edges are not ordered left to right",
            ));
        }
    }
    let lb = left_boundary(n);
    let rb = right_boundary(n);
    let first = Edge::raw(lb[h - 1], h);
    let last = Edge::raw(rb[h - 1], n.get() + 1 - h);
    if principal.first() != Some(&first) || principal.last() != Some(&last) {
        return Err(fail(h, "principal tree does not span the boundary edges"));
    }

    let mut lower: Vec<Subset> = Vec::new();
    let mut upper: Vec<Subset> = Vec::new();
    for e in &principal {
        if !lower.contains(&e.tail()) {
            lower.push(e.tail());
        }
        if !upper.contains(&e.head()) {
            upper.push(e.head());
        }
    }
    lower.sort_by_key(|v| x(*v));
    upper.sort_by_key(|v| x(*v));

    Ok(PrincipalForest {
        level: h,
        principal,
        stars,
        lower,
        upper,
        critical: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::enumerate_gtilings;
    use crate::tiling::fixtures::*;

    #[test]
    fn fig1_level_two() {
        let f = principal_forest(&fig1(), 2).unwrap();
        let u = &f.critical;
        let a = u.iter().position(|&v| v == s(&[1, 2])).unwrap();
        assert_eq!(u[a + 1], s(&[2, 4]));
        assert_eq!(u.first(), Some(&s(&[1, 2])));
        assert_eq!(u.last(), Some(&s(&[3, 4])));
    }

    #[test]
    fn boundary_vertices_are_critical() {
        for n in 1..=4 {
            for t in enumerate_gtilings(gs(n), false).unwrap() {
                for h in 1..=n {
                    let f = principal_forest(&t, h).unwrap();
                    assert!(f.critical.contains(&Subset::interval(1, h)));
                    assert!(f.critical.contains(&Subset::interval(n + 1 - h, n)));
                    if t.is_pure() {
                        assert!(f.stars.is_empty());
                    }
                }
            }
        }
        assert!(principal_forest(&fig1(), 0).is_err());
        assert!(principal_forest(&fig1(), 5).is_err());
    }
}
