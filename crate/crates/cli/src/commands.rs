//! Command-line definitions and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use zonoweave_core::auxgraph::{build_aux, order_of_graph, order_star};
use zonoweave_core::bruhat::{
    strip_from_above, strip_from_above_along_left, strip_from_below, verify_region,
};
use zonoweave_core::groundset::{
    checker, is_chamber_set, is_right_set, lessdot, splits, star_less, strongly_separated,
    weakly_separated,
};
use zonoweave_core::tiling::{
    contract, enumerate_gtilings, expand, legal_paths, strip_of, tiling_from_spectrum, verify,
    AxiomReport, LegalPath, Side,
};
use zonoweave_core::wscoll::{
    available_flips, flip, flip_reachability, largest_size, FlipDirection,
};
use zonoweave_core::{GTiling, GroundSize, Permutation, Subset, WsCollection};

use crate::dot::poset_to_dot;
use crate::error::{CliError, Status};
use crate::harness::{self, maximal_collections, TheoremId};
use crate::json::{self, AnyTiling, CollectionDoc, TileDoc, TilingDoc, FORMAT};
use crate::svg::{self, Style};

/// Largest `n` accepted without `--force` by `enum-maximal` and
/// `chamber-enum`.
pub const MAXIMAL_LIMIT: usize = 6;
/// Largest `n` accepted without `--force` by `enum-tilings`.
pub const TILING_LIMIT: usize = 5;

#[derive(Debug, Parser)]
#[command(
    name = "zonoweave",
    version,
    about = "Weakly separated collections, generalized zonogon tilings and weak Bruhat pairs"
)]
pub struct Cli {
    /// Worker threads for exhaustive sweeps (default: all cores). Output
    /// does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input JSON file, `-` for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "1")]
    One,
    #[value(name = "n")]
    N,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::One => Side::One,
            SideArg::N => Side::N,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Along {
    /// Strip along the right path `P_ω`.
    Right,
    /// Strip along the left path `P_ω′`.
    Left,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pairwise relations between two subsets, e.g. `--a 1,3 --b 2`.
    Relations {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// All maximal ws-collections over `[n]`, optionally restricted to
    /// ω-chamber sets (`--chamber`) and ω′-right sets (`--right`).
    EnumMaximal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        chamber: Option<String>,
        #[arg(long)]
        right: Option<String>,
        #[arg(long)]
        force: bool,
        /// Print counts and sizes only.
        #[arg(long)]
        count_only: bool,
    },
    /// Greedy completion of a ws-collection to a maximal one.
    Extend {
        #[command(flatten)]
        input: Input,
        /// Shuffle the scan order with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Checks the tiling axioms; exit 1 with a witness on failure.
    Verify {
        #[command(flatten)]
        input: Input,
    },
    /// Spectrum of a tiling or region tiling.
    Spectrum {
        #[command(flatten)]
        input: Input,
    },
    /// The `i`-strips of a tiling.
    Strips {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        label: Option<usize>,
    },
    /// Removes the strip of label 1 or n.
    Contract {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Inserts a strip along a legal path, or lists legal paths.
    Expand {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        side: SideArg,
        /// Path vertices as JSON, e.g. `[[],[1],[1,2]]`.
        #[arg(long, conflicts_with = "list")]
        path: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// The ω-checker collection.
    Checker {
        #[arg(long)]
        w: String,
    },
    /// All maximal ω-chamber ws-collections and their sizes.
    ChamberEnum {
        #[arg(long)]
        w: String,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Pure tiling of `Z(ω′, ω)` by stripping from below.
    StripTile {
        #[arg(long)]
        wp: String,
        #[arg(long)]
        w: String,
    },
    /// Standard tiling of `Z(ω′, ω)`, stripping from above.
    StandardTile {
        #[arg(long)]
        wp: String,
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value = "right")]
        along: Along,
    },
    /// Compares `≺*` with reachability in the auxiliary graph.
    Posets {
        #[command(flatten)]
        input: Input,
        /// Print the cover relation of `≺*` as DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Flips of a largest ws-collection, or the flip graph on `[n]`.
    Flips {
        #[arg(long = "in", required_unless_present = "graph")]
        input: Option<PathBuf>,
        /// Apply the k-th listed flip.
        #[arg(long)]
        apply: Option<usize>,
        /// Summarize the flip graph on all largest collections over `[n]`.
        #[arg(long, value_name = "N")]
        graph: Option<usize>,
    },
    /// All g-tilings of `Z_n`.
    EnumTilings {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// The g-tiling with a given largest ws-collection as spectrum.
    Reconstruct {
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive check of a theorem over `n = 1..=N`.
    TheoremCheck {
        /// One of A, B, A', 2.1, 3.1, 4.1, 6.1, 7.1, fig1, structure, greedy,
        /// or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// SVG picture of a tiling or region tiling.
    Render {
        #[command(flatten)]
        input: Input,
        /// Overlay the horizontal edges of the auxiliary graph.
        #[arg(long)]
        gamma: bool,
    },
}

/// Text produced by a command and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub status: Status,
}

impl Outcome {
    fn json<T: Serialize>(value: &T) -> Self {
        Outcome {
            text: json::to_line(value),
            status: Status::Ok,
        }
    }

    fn json_with<T: Serialize>(value: &T, ok: bool) -> Self {
        Outcome {
            text: json::to_line(value),
            status: if ok { Status::Ok } else { Status::False },
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|source| {
            CliError::Read {
                path: "-".into(),
                source,
            }
        })?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn read_collection(path: &PathBuf) -> Result<WsCollection, CliError> {
    json::parse::<CollectionDoc>(&read(path)?)?.to_collection()
}

fn read_any_tiling(path: &PathBuf) -> Result<AnyTiling, CliError> {
    json::parse::<TilingDoc>(&read(path)?)?.to_any()
}

fn read_tiling(path: &PathBuf) -> Result<GTiling, CliError> {
    json::parse::<TilingDoc>(&read(path)?)?.to_tiling()
}

/// `1,3,4`, `134`, `[1,3,4]` or empty.
pub fn parse_subset(s: &str) -> Result<Subset, CliError> {
    let items = parse_numbers(s)?;
    json::subset_from_vec(&items.into_iter().map(|k| k as usize).collect::<Vec<_>>())
}

/// `31524`, `3,1,5,2,4` or `[3,1,5,2,4]`.
pub fn parse_permutation(s: &str) -> Result<Permutation, CliError> {
    let items = parse_numbers(s)?;
    let v: Vec<u8> = items
        .into_iter()
        .map(|k| u8::try_from(k).map_err(|_| CliError::Usage(format!("entry {k} too large"))))
        .collect::<Result<_, _>>()?;
    Permutation::from_one_line(&v).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_numbers(s: &str) -> Result<Vec<u64>, CliError> {
    let t = s
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let parts: Vec<&str> = if t.contains(',') || t.contains(' ') {
        t.split([',', ' ']).filter(|p| !p.is_empty()).collect()
    } else {
        t.split("").filter(|p| !p.is_empty()).collect()
    };
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("cannot read {s:?} as a list of integers")))
        })
        .collect()
}

fn ground(n: usize) -> Result<GroundSize, CliError> {
    GroundSize::new(n).map_err(|e| CliError::Usage(e.to_string()))
}

fn guard(n: usize, limit: usize, force: bool) -> Result<(), CliError> {
    if n > limit && !force {
        Err(CliError::CostGuard { n, limit })
    } else {
        Ok(())
    }
}

fn report_json(r: &AxiomReport) -> Value {
    let violations: Vec<Value> = r
        .violations()
        .iter()
        .map(|v| json!({"axiom": format!("{:?}", v.axiom), "reason": v.reason, "witness": v.to_string()}))
        .collect();
    json!({"passed": r.passed(), "violations": violations})
}

fn collections_json(n: usize, cs: &[WsCollection], count_only: bool) -> Value {
    let mut sizes: Vec<usize> = cs.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut v = json!({"format": FORMAT, "n": n, "count": cs.len(), "sizes": sizes});
    if !count_only {
        v["collections"] = cs
            .iter()
            .map(|c| CollectionDoc::from_collection(c).sets.into())
            .collect::<Vec<Value>>()
            .into();
    }
    v
}

fn tiling_line(t: &GTiling) -> Outcome {
    Outcome::json(&TilingDoc::from_tiling(t))
}

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Relations { a, b } => {
            let (a, b) = (parse_subset(a)?, parse_subset(b)?);
            Ok(Outcome::json(&json!({
                "a": a.to_vec(),
                "b": b.to_vec(),
                "lessdot": [lessdot(a, b), lessdot(b, a)],
                "splits": [splits(a, b), splits(b, a)],
                "star_less": [star_less(a, b), star_less(b, a)],
                "weakly_separated": weakly_separated(a, b),
                "strongly_separated": strongly_separated(a, b),
            })))
        }
        Command::EnumMaximal {
            n,
            chamber,
            right,
            force,
            count_only,
        } => {
            guard(*n, MAXIMAL_LIMIT, *force)?;
            let g = ground(*n)?;
            let w = chamber.as_deref().map(parse_permutation).transpose()?;
            let wp = right.as_deref().map(parse_permutation).transpose()?;
            for p in w.iter().chain(&wp) {
                if p.n() != g {
                    return Err(CliError::Usage(format!("permutation {p} is not on [{n}]")));
                }
            }
            let cs = maximal_collections(g, |x| {
                w.as_ref().is_none_or(|w| is_chamber_set(x, w))
                    && wp.as_ref().is_none_or(|wp| is_right_set(x, wp))
            });
            Ok(Outcome::json(&collections_json(*n, &cs, *count_only)))
        }
        Command::Extend { input, seed } => {
            let c = read_collection(&input.input)?;
            if let Some((a, b)) = c.first_conflict() {
                return Ok(Outcome::json_with(
                    &json!({"weakly_separated": false, "conflict": [a.to_vec(), b.to_vec()]}),
                    false,
                ));
            }
            let done = match seed {
                Some(s) => c.greedy_complete_seeded(*s)?,
                None => c.greedy_complete()?,
            };
            Ok(Outcome::json(&CollectionDoc::from_collection(&done)))
        }
        Command::Verify { input } => {
            let report = match read_any_tiling(&input.input)? {
                AnyTiling::Full(t) => verify(&t),
                AnyTiling::Region(rt) => verify_region(&rt),
            };
            Ok(Outcome::json_with(&report_json(&report), report.passed()))
        }
        Command::Spectrum { input } => {
            let (report, spectrum) = match read_any_tiling(&input.input)? {
                AnyTiling::Full(t) => (verify(&t), t.spectrum_unchecked()),
                AnyTiling::Region(rt) => (verify_region(&rt), rt.spectrum()),
            };
            if !report.passed() {
                return Ok(Outcome::json_with(&report_json(&report), false));
            }
            Ok(Outcome::json(&CollectionDoc::from_collection(&spectrum)))
        }
        Command::Strips { input, label } => {
            let t = read_tiling(&input.input)?;
            let labels: Vec<usize> = match label {
                Some(i) => vec![*i],
                None => (1..=t.n().get()).collect(),
            };
            let mut out = Vec::new();
            for i in labels {
                let s = strip_of(&t, i)?;
                out.push(json!({
                    "label": i,
                    "right": s.right().iter().map(|v| v.to_vec()).collect::<Vec<_>>(),
                    "left": s.left().iter().map(|v| v.to_vec()).collect::<Vec<_>>(),
                    "tiles": s.tiles.iter().map(TileDoc::from_tile).collect::<Vec<_>>(),
                }));
            }
            Ok(Outcome::json(
                &json!({"format": FORMAT, "n": t.n().get(), "strips": out}),
            ))
        }
        Command::Contract { input, side } => {
            let t = read_tiling(&input.input)?;
            Ok(tiling_line(&contract(&t, (*side).into())?))
        }
        Command::Expand {
            input,
            side,
            path,
            list,
        } => {
            let t = read_tiling(&input.input)?;
            let side: Side = (*side).into();
            if *list {
                let paths: Vec<Vec<Vec<usize>>> = legal_paths(&t, side)
                    .iter()
                    .map(|p| p.vertices().iter().map(|v| v.to_vec()).collect())
                    .collect();
                return Ok(Outcome::json(
                    &json!({"count": paths.len(), "paths": paths}),
                ));
            }
            let path = path
                .as_deref()
                .ok_or_else(|| CliError::Usage("expand needs --path or --list".into()))?;
            let raw: Vec<Vec<usize>> = json::parse(path)?;
            let vertices = raw
                .iter()
                .map(|v| json::subset_from_vec(v))
                .collect::<Result<Vec<_>, _>>()?;
            match LegalPath::new(&t, side, vertices) {
                Ok(lp) => Ok(tiling_line(&expand(&t, &lp)?)),
                Err(e) => Ok(Outcome::json_with(
                    &json!({"legal": false, "reason": e.to_string()}),
                    false,
                )),
            }
        }
        Command::Checker { w } => {
            let w = parse_permutation(w)?;
            Ok(Outcome::json(&CollectionDoc::from_collection(&checker(&w))))
        }
        Command::ChamberEnum {
            w,
            force,
            count_only,
        } => {
            let w = parse_permutation(w)?;
            let n = w.n().get();
            guard(n, MAXIMAL_LIMIT, *force)?;
            let cs = maximal_collections(w.n(), |x| is_chamber_set(x, &w));
            let expected = w.length() + n + 1;
            let mut v = collections_json(n, &cs, *count_only);
            v["expected_size"] = expected.into();
            let ok = cs.iter().all(|c| c.len() == expected);
            Ok(Outcome::json_with(&v, ok))
        }
        Command::StripTile { wp, w } => {
            let rt = strip_from_below(&parse_permutation(wp)?, &parse_permutation(w)?)?;
            Ok(Outcome::json(&TilingDoc::from_region(&rt)))
        }
        Command::StandardTile { wp, w, along } => {
            let (wp, w) = (parse_permutation(wp)?, parse_permutation(w)?);
            let rt = match along {
                Along::Right => strip_from_above(&wp, &w)?,
                Along::Left => strip_from_above_along_left(&wp, &w)?,
            };
            Ok(Outcome::json(&TilingDoc::from_region(&rt)))
        }
        Command::Posets { input, dot } => {
            let t = read_tiling(&input.input)?;
            let report = verify(&t);
            if !report.passed() {
                return Ok(Outcome::json_with(&report_json(&report), false));
            }
            let star = order_star(&t.spectrum_unchecked());
            if *dot {
                return Ok(Outcome {
                    text: poset_to_dot("star_order", &star),
                    status: Status::Ok,
                });
            }
            let gamma = order_of_graph(&build_aux(&t)?)?;
            let equal = gamma.relation() == star.relation();
            let lattice = star.is_lattice();
            let mismatch = star
                .relation()
                .into_iter()
                .filter(|p| !gamma.relation().contains(p))
                .chain(
                    gamma
                        .relation()
                        .into_iter()
                        .filter(|p| !star.relation().contains(p)),
                )
                .map(|(a, b)| json!([a.to_vec(), b.to_vec()]))
                .next();
            Ok(Outcome::json_with(
                &json!({
                    "equal": equal,
                    "lattice": lattice,
                    "relations": star.relation().len(),
                    "covers": star.covers().len(),
                    "mismatch": mismatch,
                }),
                equal && lattice,
            ))
        }
        Command::Flips {
            input,
            apply,
            graph,
        } => {
            if let Some(n) = graph {
                let g = flip_reachability(ground(*n)?)?;
                return Ok(Outcome::json_with(
                    &json!({
                        "n": n,
                        "nodes": g.nodes.len(),
                        "lowering_edges": g.edges.len(),
                        "connected": g.connected,
                        "minima": g.minima.len(),
                        "maxima": g.maxima.len(),
                        "rejected": g.rejected.len(),
                    }),
                    g.connected && g.rejected.is_empty(),
                ));
            }
            let path = input
                .as_ref()
                .ok_or_else(|| CliError::Usage("flips needs --in or --graph".into()))?;
            let c = read_collection(path)?;
            if !c.is_largest() || c.first_conflict().is_some() {
                return Ok(Outcome::json_with(
                    &json!({"largest": false, "size": c.len(), "expected": largest_size(c.n())}),
                    false,
                ));
            }
            let moves = available_flips(&c);
            if let Some(k) = apply {
                let m = moves.get(*k).ok_or_else(|| {
                    CliError::Usage(format!("flip {k} out of range 0..{}", moves.len()))
                })?;
                return Ok(Outcome::json(&CollectionDoc::from_collection(&flip(
                    &c, m,
                )?)));
            }
            let listed: Vec<Value> = moves
                .iter()
                .map(|m| {
                    json!({
                        "removed": m.removed().to_vec(),
                        "added": m.added().to_vec(),
                        "frame": m.frame().map(|x| x.to_vec()),
                        "direction": match m.direction {
                            FlipDirection::Lowering => "lowering",
                            FlipDirection::Raising => "raising",
                        },
                    })
                })
                .collect();
            Ok(Outcome::json(
                &json!({"count": listed.len(), "flips": listed}),
            ))
        }
        Command::EnumTilings {
            n,
            force,
            count_only,
        } => {
            guard(*n, TILING_LIMIT, *force)?;
            let ts = enumerate_gtilings(ground(*n)?, true)?;
            let mut v = json!({
                "format": FORMAT,
                "n": n,
                "count": ts.len(),
                "pure": ts.iter().filter(|t| t.is_pure()).count(),
            });
            if !count_only {
                v["tilings"] = ts
                    .iter()
                    .map(|t| {
                        serde_json::to_value(TilingDoc::from_tiling(t).tiles).expect("serializable")
                    })
                    .collect::<Vec<_>>()
                    .into();
            }
            Ok(Outcome::json(&v))
        }
        Command::Reconstruct { input } => {
            let c = read_collection(&input.input)?;
            if let Some((a, b)) = c.first_conflict() {
                return Ok(Outcome::json_with(
                    &json!({"weakly_separated": false, "conflict": [a.to_vec(), b.to_vec()]}),
                    false,
                ));
            }
            if !c.is_largest() {
                return Ok(Outcome::json_with(
                    &json!({"largest": false, "size": c.len(), "expected": largest_size(c.n())}),
                    false,
                ));
            }
            Ok(tiling_line(&tiling_from_spectrum(&c)?))
        }
        Command::TheoremCheck { theorem, n } => {
            let ids: Vec<TheoremId> = if theorem.eq_ignore_ascii_case("all") {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse()?]
            };
            let mut reports = Vec::new();
            for id in ids {
                reports.push(harness::run(id, n.unwrap_or(id.default_n()))?);
            }
            let ok = reports.iter().all(|r| r.passed);
            let text = reports.iter().map(json::to_line).collect::<String>();
            Ok(Outcome {
                text,
                status: if ok { Status::Ok } else { Status::False },
            })
        }
        Command::Render { input, gamma } => {
            let style = Style { gamma: *gamma };
            let text = match read_any_tiling(&input.input)? {
                AnyTiling::Full(t) => svg::render_tiling(&t, style)?,
                AnyTiling::Region(rt) => svg::render_region(&rt, style)?,
            };
            Ok(Outcome {
                text,
                status: Status::Ok,
            })
        }
    }
}

/// Parses arguments, runs the command inside a pool of `--jobs` threads and
/// writes its output.
pub fn run(cli: &Cli) -> Result<Status, CliError> {
    let outcome = match cli.jobs {
        Some(0) => return Err(CliError::Usage("--jobs must be positive".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| dispatch(cli))?,
        None => dispatch(cli)?,
    };
    match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{}", outcome.text),
    }
    Ok(outcome.status)
}
