//! Exhaustive checks of the main theorems over small ground sets, each
//! packaged as a [`TheoremReport`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use zonoweave_core::auxgraph::{build_aux, order_of_graph, order_star, posets_equal};
use zonoweave_core::bruhat::{region_tiling_from_spectrum, strip_from_above, theorem_equiv_check};
use zonoweave_core::groundset::{
    checker, is_chamber_set, is_right_set, weak_bruhat_less, weakly_separated,
};
use zonoweave_core::tiling::{
    contract, edge_existence_checks, enumerate_gtilings, expand, local_fans, principal_forest,
    strip_of, tiling_from_spectrum, verify, LegalPath, Side,
};
use zonoweave_core::wscoll::{largest_size, MaximalCliqueSearch};
use zonoweave_core::{GTiling, GroundSize, Permutation, Subset, WsCollection};

use crate::error::CliError;
use crate::json::{CollectionDoc, TilingDoc};

/// Environment variable holding the base seed of randomized checks.
pub const SEED_VAR: &str = "ZONOWEAVE_SEED";

pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Maximal ω-chamber collections have `ℓ(ω) + n + 1` members.
    A,
    /// Maximal ws-collections have `n(n+1)/2 + 1` members.
    B,
    /// Maximal collections between two permutations.
    APrime,
    /// Weak separation from the checker characterizes chamber sets.
    Checker,
    /// Spectra of g-tilings are exactly the largest ws-collections.
    Spectra,
    /// `≺*` is a lattice on every largest ws-collection.
    Lattice,
    /// `≺*` equals reachability in the auxiliary graph.
    Posets,
    /// Five equivalent conditions on a pair of permutations.
    Bruhat,
    /// Regression on the running example and the `31524` checker.
    Figure,
    /// Strips, contraction, forests, edges and fans on many tilings.
    Structure,
    /// Seeded greedy completions reach the largest size.
    Greedy,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::A,
        TheoremId::B,
        TheoremId::APrime,
        TheoremId::Checker,
        TheoremId::Spectra,
        TheoremId::Lattice,
        TheoremId::Posets,
        TheoremId::Bruhat,
        TheoremId::Figure,
        TheoremId::Structure,
        TheoremId::Greedy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::APrime => "A'",
            TheoremId::Checker => "2.1",
            TheoremId::Spectra => "3.1",
            TheoremId::Lattice => "4.1",
            TheoremId::Posets => "6.1",
            TheoremId::Bruhat => "7.1",
            TheoremId::Figure => "fig1",
            TheoremId::Structure => "structure",
            TheoremId::Greedy => "greedy",
        }
    }

    /// Largest `n` run when none is given.
    pub fn default_n(self) -> usize {
        match self {
            TheoremId::A | TheoremId::B | TheoremId::Checker | TheoremId::Greedy => 5,
            TheoremId::Figure => 5,
            _ => 4,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        match s {
            "A′" | "A'" | "Aprime" | "aprime" => return Ok(TheoremId::APrime),
            _ => {}
        }
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                CliError::Usage(format!(
                    "unknown theorem {s:?}, expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelCount {
    pub n: usize,
    /// Objects produced at this `n` (collections, tilings, pairs, ...).
    pub objects: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub n_min: usize,
    pub n_max: usize,
    /// Individual assertions evaluated.
    pub checked: u64,
    pub per_n: Vec<LevelCount>,
    pub passed: bool,
    /// Present exactly when `passed` is false.
    pub counterexample: Option<Value>,
    pub summary: String,
}

impl TheoremReport {
    fn new(id: TheoremId, n_min: usize, n_max: usize) -> Self {
        TheoremReport {
            theorem: id.name().to_string(),
            n_min,
            n_max,
            checked: 0,
            per_n: Vec::new(),
            passed: true,
            counterexample: None,
            summary: String::new(),
        }
    }

    fn fail(&mut self, witness: Value) {
        if self.passed {
            self.passed = false;
            self.counterexample = Some(witness);
        }
    }

    fn finish(mut self, summary: String) -> Self {
        self.summary = if self.passed {
            summary
        } else {
            format!("FAILED: {summary}")
        };
        self
    }

    /// One line: theorem, verdict, summary.
    pub fn line(&self) -> String {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        format!(
            "{} [{}..={}] {verdict}: {}",
            self.theorem, self.n_min, self.n_max, self.summary
        )
    }
}

fn gs(n: usize) -> GroundSize {
    GroundSize::new(n).expect("ground size in range")
}

fn coll(c: &WsCollection) -> Value {
    serde_json::to_value(CollectionDoc::from_collection(c)).expect("serializable")
}

fn tiling(t: &GTiling) -> Value {
    serde_json::to_value(TilingDoc::from_tiling(t)).expect("serializable")
}

fn perm(w: &Permutation) -> Value {
    json!(w.one_line())
}

/// Every maximal ws-collection inside `{X : ground(X)}`, with the top-level
/// branches of the clique search spread over the rayon pool. The result is
/// sorted, so it does not depend on the number of threads.
pub fn maximal_collections<G>(n: GroundSize, ground: G) -> Vec<WsCollection>
where
    G: Fn(Subset) -> bool + Sync,
{
    let search = MaximalCliqueSearch::new(n, ground);
    let mut out: Vec<WsCollection> = search
        .tasks()
        .par_iter()
        .flat_map_iter(|task| {
            let mut found = Vec::new();
            search.run(task, &mut |c| found.push(c));
            found
        })
        .collect();
    out.sort();
    out
}

/// The first failing item of a parallel sweep, in input order.
fn first_failure<T: Sync, F>(items: &[T], check: F) -> (u64, Option<Value>)
where
    F: Fn(&T) -> (u64, Option<Value>) + Sync + Send,
{
    let results: Vec<(u64, Option<Value>)> = items.par_iter().map(&check).collect();
    let checked = results.iter().map(|r| r.0).sum();
    (checked, results.into_iter().find_map(|r| r.1))
}

pub fn run(id: TheoremId, n_max: usize) -> Result<TheoremReport, CliError> {
    if n_max == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    Ok(match id {
        TheoremId::A => theorem_a(n_max),
        TheoremId::B => theorem_b(n_max),
        TheoremId::APrime => theorem_a_prime(n_max),
        TheoremId::Checker => checker_characterization(n_max),
        TheoremId::Spectra => spectra_bijection(n_max)?,
        TheoremId::Lattice => lattice_property(n_max),
        TheoremId::Posets => poset_equality(n_max)?,
        TheoremId::Bruhat => bruhat_equivalence(n_max),
        TheoremId::Figure => figure_regression(),
        TheoremId::Structure => structural_suite(n_max, 50, 6, seed_from_env())?,
        TheoremId::Greedy => order_insensitivity(&[3, 4, 5], 100, seed_from_env()),
    })
}

pub fn theorem_b(n_max: usize) -> TheoremReport {
    let mut r = TheoremReport::new(TheoremId::B, 1, n_max);
    let mut sizes = Vec::new();
    for n in 1..=n_max {
        let cs = maximal_collections(gs(n), |_| true);
        let expected = largest_size(gs(n));
        r.checked += cs.len() as u64;
        r.per_n.push(LevelCount {
            n,
            objects: cs.len() as u64,
        });
        if let Some(c) = cs.iter().find(|c| c.len() != expected) {
            r.fail(json!({"n": n, "expected": expected, "collection": coll(c)}));
        }
        sizes.push(expected.to_string());
    }
    r.finish(format!(
        "every maximal ws-collection has n(n+1)/2+1 members ({})",
        sizes.join(",")
    ))
}

pub fn theorem_a(n_max: usize) -> TheoremReport {
    let mut r = TheoremReport::new(TheoremId::A, 1, n_max);
    for n in 1..=n_max {
        let perms = Permutation::all(gs(n));
        let (checked, witness) = first_failure(&perms, |w| {
            let cs = maximal_collections(gs(n), |x| is_chamber_set(x, w));
            let expected = w.length() + n + 1;
            let bad = cs.iter().find(|c| c.len() != expected);
            (
                cs.len() as u64,
                bad.map(|c| json!({"w": perm(w), "expected": expected, "collection": coll(c)})),
            )
        });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n,
            objects: checked,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    r.finish("every maximal ω-chamber ws-collection has ℓ(ω)+n+1 members, all ω".into())
}

fn bruhat_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let perms = Permutation::all(gs(n));
    let mut out = Vec::new();
    for wp in &perms {
        for w in &perms {
            if weak_bruhat_less(wp, w).expect("same n") {
                out.push((wp.clone(), w.clone()));
            }
        }
    }
    out
}

pub fn theorem_a_prime(n_max: usize) -> TheoremReport {
    let mut r = TheoremReport::new(TheoremId::APrime, 1, n_max);
    for n in 1..=n_max {
        let pairs = bruhat_pairs(n);
        let (checked, witness) = first_failure(&pairs, |(wp, w)| {
            let cs = maximal_collections(gs(n), |x| is_chamber_set(x, w) && is_right_set(x, wp));
            let expected = w.length() - wp.length() + n + 1;
            let mut checked = 0;
            for c in &cs {
                checked += 1;
                let fail = |why: String| {
                    Some(
                        json!({"wp": perm(wp), "w": perm(w), "expected": expected, "collection": coll(c), "reason": why}),
                    )
                };
                if c.len() != expected {
                    return (checked, fail("size".into()));
                }
                if let Err(e) = region_tiling_from_spectrum(wp, w, c) {
                    return (checked, fail(e.to_string()));
                }
            }
            if cs.is_empty() {
                return (
                    checked,
                    Some(json!({"wp": perm(wp), "w": perm(w), "reason": "no collections"})),
                );
            }
            (checked, None)
        });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n,
            objects: pairs.len() as u64,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    r.finish(
        "maximal collections between ω′ ≺ ω have ℓ(ω)−ℓ(ω′)+n+1 members and are region spectra"
            .into(),
    )
}

pub fn checker_characterization(n_max: usize) -> TheoremReport {
    let mut r = TheoremReport::new(TheoremId::Checker, 1, n_max);
    for n in 1..=n_max {
        let perms = Permutation::all(gs(n));
        let (checked, witness) = first_failure(&perms, |w| {
            let c = checker(w);
            let mut checked = 0;
            for x in gs(n).all_subsets() {
                if c.contains(x) {
                    continue;
                }
                checked += 1;
                let ws = c.members().all(|&y| weakly_separated(x, y));
                if ws != is_chamber_set(x, w) {
                    return (
                        checked,
                        Some(json!({"w": perm(w), "set": x.to_vec(), "ws": ws})),
                    );
                }
            }
            (checked, None)
        });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n,
            objects: perms.len() as u64,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    r.finish("outside the ω-checker, weak separation from it ⟺ ω-chamber".into())
}

pub fn spectra_bijection(n_max: usize) -> Result<TheoremReport, CliError> {
    let mut r = TheoremReport::new(TheoremId::Spectra, 1, n_max);
    for n in 1..=n_max {
        let tilings = enumerate_gtilings(gs(n), false)?;
        let maximal: BTreeSet<WsCollection> =
            maximal_collections(gs(n), |_| true).into_iter().collect();
        let mut spectra = BTreeSet::new();
        for t in &tilings {
            r.checked += 1;
            match t.spectrum() {
                Ok(c) => {
                    if tiling_from_spectrum(&c).as_ref() != Ok(t) {
                        r.fail(json!({"n": n, "reason": "tiling_from_spectrum(spectrum(T)) ≠ T", "tiling": tiling(t)}));
                    }
                    spectra.insert(c);
                }
                Err(e) => r.fail(json!({"n": n, "reason": e.to_string(), "tiling": tiling(t)})),
            }
        }
        if spectra.len() != tilings.len() {
            r.fail(json!({"n": n, "reason": "two tilings share a spectrum"}));
        }
        for c in &maximal {
            r.checked += 1;
            let ok = tiling_from_spectrum(c).and_then(|t| t.spectrum()).as_ref() == Ok(c);
            if !ok || !spectra.contains(c) {
                r.fail(json!({"n": n, "reason": "largest collection is not a spectrum", "collection": coll(c)}));
            }
        }
        if let Some(c) = spectra.difference(&maximal).next() {
            r.fail(json!({"n": n, "reason": "spectrum is not a maximal collection", "collection": coll(c)}));
        }
        r.per_n.push(LevelCount {
            n,
            objects: tilings.len() as u64,
        });
    }
    let counts: Vec<String> = r.per_n.iter().map(|l| l.objects.to_string()).collect();
    Ok(r.finish(format!(
        "spectra of g-tilings = largest ws-collections, spectrum and reconstruction are inverse ({} tilings)",
        counts.join(",")
    )))
}

pub fn lattice_property(n_max: usize) -> TheoremReport {
    let mut r = TheoremReport::new(TheoremId::Lattice, 1, n_max);
    for n in 1..=n_max {
        let cs = maximal_collections(gs(n), |_| true);
        let (checked, witness) = first_failure(&cs, |c| {
            let p = order_star(c);
            let why = if let Some((a, b, x)) = p.transitivity_violation() {
                Some(format!("not transitive at {a}, {b}, {x}"))
            } else if let Some((a, b)) = p.lattice_violation() {
                Some(format!("no unique join or meet of {a} and {b}"))
            } else if p.minimal_elements() != [Subset::EMPTY]
                || p.maximal_elements() != [gs(n).full()]
            {
                Some("bounds are not ∅ and [n]".into())
            } else {
                None
            };
            (1, why.map(|w| json!({"collection": coll(c), "reason": w})))
        });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n,
            objects: cs.len() as u64,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    r.finish("≺* is a lattice with minimum ∅ and maximum [n] on every largest ws-collection".into())
}

pub fn poset_equality(n_max: usize) -> Result<TheoremReport, CliError> {
    let mut r = TheoremReport::new(TheoremId::Posets, 1, n_max);
    for n in 1..=n_max {
        let tilings = enumerate_gtilings(gs(n), false)?;
        let (checked, witness) = first_failure(&tilings, |t| {
            let why = match (
                posets_equal(t),
                build_aux(t).and_then(|g| order_of_graph(&g)),
            ) {
                (Ok(true), Ok(p)) if p.is_lattice() => None,
                (Ok(true), Ok(_)) => Some("reachability order is not a lattice".to_string()),
                (Ok(false), _) => Some("≺_Γ differs from ≺*".to_string()),
                (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
            };
            (1, why.map(|w| json!({"tiling": tiling(t), "reason": w})))
        });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n,
            objects: tilings.len() as u64,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    Ok(r.finish("≺_Γ = ≺* and both are lattices on every g-tiling".into()))
}

pub fn bruhat_equivalence(n_max: usize) -> TheoremReport {
    let mut r = TheoremReport::new(TheoremId::Bruhat, 1, n_max);
    for n in 1..=n_max {
        let perms = Permutation::all(gs(n));
        let mut pairs = Vec::new();
        for wp in &perms {
            for w in perms.iter().filter(|w| *w != wp) {
                pairs.push((wp.clone(), w.clone()));
            }
        }
        let (checked, witness) =
            first_failure(&pairs, |(wp, w)| match theorem_equiv_check(wp, w) {
                Ok(rep) if rep.agree() => (1, None),
                Ok(rep) => (
                    1,
                    Some(json!({"wp": perm(wp), "w": perm(w), "flags": rep.flags()})),
                ),
                Err(e) => (
                    1,
                    Some(json!({"wp": perm(wp), "w": perm(w), "reason": e.to_string()})),
                ),
            });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n,
            objects: pairs.len() as u64,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    let counts: Vec<String> = r.per_n.iter().map(|l| l.objects.to_string()).collect();
    r.finish(format!(
        "the five conditions agree on all ordered pairs ({} pairs)",
        counts.join(",")
    ))
}

/// The spectrum `{∅,1,4,12,14,23,24,34,123,234,1234}` and the `31524`
/// checker.
pub fn figure_regression() -> TheoremReport {
    let mut r = TheoremReport::new(TheoremId::Figure, 4, 5);
    let sets: [&[usize]; 11] = [
        &[],
        &[1],
        &[4],
        &[1, 2],
        &[1, 4],
        &[2, 3],
        &[2, 4],
        &[3, 4],
        &[1, 2, 3],
        &[2, 3, 4],
        &[1, 2, 3, 4],
    ];
    let c = WsCollection::new(
        gs(4),
        sets.iter()
            .map(|s| Subset::from_elements(s.iter().copied()).expect("in range")),
    )
    .expect("in range");
    r.checked += 1;
    match tiling_from_spectrum(&c) {
        Ok(t) => {
            let black = t.black_tiles().count();
            if !verify(&t).passed() || black != 1 || t.spectrum().as_ref() != Ok(&c) {
                r.fail(json!({"reason": "figure tiling", "black": black, "tiling": tiling(&t)}));
            }
        }
        Err(e) => r.fail(json!({"reason": e.to_string()})),
    }
    r.checked += 1;
    let w = Permutation::from_one_line(&[3, 1, 5, 2, 4]).expect("permutation");
    match strip_from_above(&w, &Permutation::longest(gs(5))) {
        Ok(rt) if rt.spectrum() == checker(&w) => {}
        Ok(rt) => {
            r.fail(json!({"reason": "checker(31524) differs", "spectrum": coll(&rt.spectrum())}))
        }
        Err(e) => r.fail(json!({"reason": e.to_string()})),
    }
    r.per_n = vec![
        LevelCount { n: 4, objects: 1 },
        LevelCount { n: 5, objects: 1 },
    ];
    r.finish("figure spectrum rebuilds to a tiling with one black tile; checker(31524) is a standard-tiling spectrum".into())
}

/// Strip, contraction, forest, edge and fan properties of one g-tiling.
pub fn structural_check(t: &GTiling) -> Result<(), String> {
    if let Some(v) = verify(t).violations().first() {
        return Err(format!("verify: {v}"));
    }
    let n = t.n().get();
    for i in 1..=n {
        let s = strip_of(t, i).map_err(|e| format!("strip {i}: {e}"))?;
        let labelled = t.tiles().iter().filter(|x| x.has_label(i)).count();
        let distinct: BTreeSet<_> = s.tiles.iter().collect();
        if distinct.len() != s.tiles.len() || s.tiles.len() != labelled {
            return Err(format!("strip {i} does not pass each {i}-tile once"));
        }
        let right = s.right();
        if right.first() != Some(&Subset::interval(1, i - 1))
            || right.last() != Some(&Subset::interval(i + 1, n))
        {
            return Err(format!("strip {i} does not run between the boundaries"));
        }
        if (1..=s.tiles.len()).any(|p| s.right_edge_forward(p) != s.predicted_forward(p)) {
            return Err(format!(
                "strip {i} side edges break the forward/backward rule"
            ));
        }
    }
    if n >= 2 {
        let small = contract(t, Side::N).map_err(|e| format!("contract: {e}"))?;
        if !verify(&small).passed() {
            return Err("contraction does not verify".into());
        }
        let mut path = strip_of(t, n).map_err(|e| e.to_string())?.right();
        path.reverse();
        let lp = LegalPath::new(&small, Side::N, path).map_err(|e| format!("strip path: {e}"))?;
        if expand(&small, &lp).as_ref() != Ok(t) {
            return Err("expansion along the strip does not restore the tiling".into());
        }
        let one = contract(t, Side::One).map_err(|e| format!("contract side 1: {e}"))?;
        let via_mirror = contract(&t.mirror(), Side::N)
            .map_err(|e| e.to_string())?
            .mirror();
        if one != via_mirror || !verify(&one).passed() {
            return Err("side-1 contraction is not the mirrored side-n contraction".into());
        }
    }
    for h in 1..=n {
        principal_forest(t, h).map_err(|e| format!("forest: {e}"))?;
    }
    let edges = edge_existence_checks(t);
    if !edges.passed() {
        return Err(format!("edge checks: {edges:?}"));
    }
    let fans = local_fans(t).map_err(|e| e.to_string())?;
    if let Some((v, why)) = fans.first_defect() {
        return Err(format!("fan at {v}: {why}"));
    }
    Ok(())
}

/// [`structural_check`] on every g-tiling up to `n_max` and on `random`
/// tilings of `Z_{random_n}` rebuilt from seeded greedy completions.
pub fn structural_suite(
    n_max: usize,
    random: usize,
    random_n: usize,
    seed: u64,
) -> Result<TheoremReport, CliError> {
    let mut r = TheoremReport::new(TheoremId::Structure, 1, n_max.max(random_n));
    for n in 1..=n_max {
        let tilings = enumerate_gtilings(gs(n), false)?;
        let (checked, witness) = first_failure(&tilings, |t| {
            (
                1,
                structural_check(t)
                    .err()
                    .map(|why| json!({"tiling": tiling(t), "reason": why})),
            )
        });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n,
            objects: tilings.len() as u64,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    if random > 0 {
        let seeds: Vec<u64> = (0..random as u64).map(|k| seed.wrapping_add(k)).collect();
        let (checked, witness) = first_failure(&seeds, |&s| {
            let c = match WsCollection::empty(gs(random_n)).greedy_complete_seeded(s) {
                Ok(c) => c,
                Err(e) => return (1, Some(json!({"seed": s, "reason": e.to_string()}))),
            };
            let why = match tiling_from_spectrum(&c) {
                Ok(t) => structural_check(&t).err(),
                Err(e) => Some(e.to_string()),
            };
            (
                1,
                why.map(|w| json!({"seed": s, "collection": coll(&c), "reason": w})),
            )
        });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n: random_n,
            objects: random as u64,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    Ok(r.finish(format!(
        "strips, contraction/expansion, principal forests, edge rules and fans hold (all tilings n ≤ {n_max}, {random} random at n = {random_n})"
    )))
}

/// Seeded greedy completions of `∅` reach `n(n+1)/2 + 1` members.
pub fn order_insensitivity(ns: &[usize], samples: usize, seed: u64) -> TheoremReport {
    let n_min = ns.iter().copied().min().unwrap_or(1);
    let n_max = ns.iter().copied().max().unwrap_or(1);
    let mut r = TheoremReport::new(TheoremId::Greedy, n_min, n_max);
    for &n in ns {
        let seeds: Vec<u64> = (0..samples as u64).map(|k| seed.wrapping_add(k)).collect();
        let (checked, witness) = first_failure(&seeds, |&s| {
            let c = WsCollection::empty(gs(n)).greedy_complete_seeded(s);
            match c {
                Ok(c) if c.len() == largest_size(gs(n)) => (1, None),
                Ok(c) => (1, Some(json!({"n": n, "seed": s, "collection": coll(&c)}))),
                Err(e) => (1, Some(json!({"n": n, "seed": s, "reason": e.to_string()}))),
            }
        });
        r.checked += checked;
        r.per_n.push(LevelCount {
            n,
            objects: samples as u64,
        });
        if let Some(w) = witness {
            r.fail(w);
        }
    }
    r.finish(format!(
        "{samples} seeded greedy completions per n reach the largest size (base seed {seed})"
    ))
}
