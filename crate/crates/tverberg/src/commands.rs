use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use itertools::Itertools;
use serde_json::{json, Value};
use tverberg::format::{emit_pointset, parse_pointset, parse_rational};
use tverberg::parallel::par_find_counterexample;
use tverberg::verify::verify_report;
use tverberg::{Payload, ReportRecord};
use tverberg_core::search::FIGURE2_VALUES;
use tverberg_core::{
    alternating_partition, bound_even_d, bound_lemma32, bound_prop41,
    check_thm_main_inequalities, figure2_counterexample, find_counterexample, gale_facets,
    hulls_common_point, is_neighborly, is_order_homogeneous, largest_homogeneous_subset,
    moment_points, n_line, orientation, partition_tolerance, path_crossings, set_tolerance,
    t_line, Homogeneity, Hyperplane, MomentSpec, Partition, Point, PointSet, Rational,
    SearchOutcome, SearchStrategy, Sign, StrategyKind,
};

use crate::{BoundKind, Cmd, Ctx, Failure, Mode, Strategy};

const FIGURE2_FILE: &str = include_str!("../data/figure2.otps");

/// Largest `n` for which `facets` cross-checks Gale against orientations.
const FACET_CHECK_MAX_N: usize = 12;

pub fn run(cmd: &Cmd, ctx: &mut Ctx) -> Result<(), Failure> {
    match cmd {
        Cmd::Gen {
            d,
            alphas,
            file,
            n,
            write,
        } => gen(ctx, *d, alphas, file.as_deref(), *n, write.as_deref()),
        Cmd::Homog {
            file,
            largest,
            cap,
        } => homog(ctx, file, *largest, *cap),
        Cmd::Facets { d, n } => facets(ctx, *d, *n),
        Cmd::Neighborly { d, n } => {
            let ok = is_neighborly(*n, *d)?;
            ctx.emit(
                ReportRecord::new(
                    "neighborly",
                    json!({"d": d, "n": n}),
                    json!({"neighborly": ok, "k": d / 2}),
                )
                .claim("Neighborly", ok),
            )
        }
        Cmd::Crossings {
            file,
            normal,
            offset,
        } => crossings(ctx, file, normal, offset),
        Cmd::Intersect {
            file,
            blocks,
            alternating,
        } => intersect(ctx, file, blocks, *alternating),
        Cmd::Tolerance {
            file,
            r,
            mode,
            blocks,
        } => tolerance(ctx, file, *r, *mode, blocks),
        Cmd::Bounds { kind, d, r, n } => bounds(ctx, *kind, *d, *r, *n),
        Cmd::SearchC {
            d,
            r,
            n_min,
            n_max,
            strategy,
            sequential,
        } => search_c(ctx, *d, *r, *n_min, *n_max, *strategy, *sequential),
        Cmd::TLine { n, r } => {
            let value = t_line(*n, *r)?;
            ctx.emit(ReportRecord::new(
                "t-line",
                json!({"n": n, "r": r}),
                json!({"value": value}),
            ))
        }
        Cmd::NLine { t, r } => {
            let value = n_line(*t, *r)?;
            let oracle = r * (t + 2) - 1;
            let inequality = check_thm_main_inequalities(1, *r as u64, *t as u64, value as u64);
            ctx.emit(ReportRecord::new(
                "n-line",
                json!({"t": t, "r": r}),
                json!({"value": value, "oracle": oracle, "inequality": inequality}),
            )
            .claim("Thm1.1-line", value == oracle && inequality))
        }
        Cmd::VerifyFigure2 { file } => verify_figure2(ctx, file.as_deref()),
        Cmd::Verify { file } => verify(ctx, file),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_points(path: &Path) -> Result<PointSet, Failure> {
    parse_pointset(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn rational(s: &str) -> Result<Rational, Failure> {
    parse_rational(s.trim()).ok_or_else(|| Failure::Input(format!("malformed rational `{s}`")))
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn homogeneity_json(h: &Homogeneity) -> Value {
    match h {
        Homogeneity::Homogeneous(s) => json!({"status": "homogeneous", "sign": s.to_i8()}),
        Homogeneity::Trivial => json!({"status": "trivial"}),
        Homogeneity::Violation {
            first,
            first_sign,
            second,
            second_sign,
        } => json!({
            "status": "violation",
            "first": first, "first_sign": first_sign.to_i8(),
            "second": second, "second_sign": second_sign.to_i8(),
        }),
    }
}

fn gen(
    ctx: &mut Ctx,
    d: usize,
    alphas: &[String],
    file: Option<&Path>,
    n: Option<usize>,
    write: Option<&Path>,
) -> Result<(), Failure> {
    let alphas: Vec<Rational> = if let Some(path) = file {
        let x = read_points(path)?;
        if x.dim() != 1 {
            return Err(Failure::Input("parameter file must have dimension 1".into()));
        }
        x.points().iter().map(|p| p.coords()[0].clone()).collect()
    } else if let Some(n) = n {
        (1..=n as i64).map(|i| Rational::from_integer(i.into())).collect()
    } else if !alphas.is_empty() {
        alphas.iter().map(|a| rational(a)).collect::<Result<_, _>>()?
    } else {
        return Err(Failure::Input("give --alphas, --file or -n".into()));
    };
    let x = moment_points(&MomentSpec::new(d, alphas.clone()))?;
    let text = emit_pointset(&x);
    if let Some(path) = write {
        fs::write(path, &text)?;
    }
    let h = is_order_homogeneous(&x);
    ctx.emit(
        ReportRecord::new(
            "gen",
            json!({"d": d, "alphas": strs(&alphas)}),
            json!({"pointset": text, "homogeneity": homogeneity_json(&h)}),
        )
        .claim("MomentHomogeneous", h.is_homogeneous()),
    )
}

fn homog(ctx: &mut Ctx, file: &Path, largest: bool, cap: usize) -> Result<(), Failure> {
    let x = read_points(file)?;
    let mut outcome = json!({"homogeneity": homogeneity_json(&is_order_homogeneous(&x))});
    if largest {
        let sub = largest_homogeneous_subset(&x, cap)?;
        outcome["largest_subset"] = json!(sub);
        outcome["largest_size"] = json!(sub.len());
    }
    ctx.emit(ReportRecord::new(
        "homog",
        json!({"file": file.display().to_string(), "d": x.dim(), "n": x.len()}),
        outcome,
    ))
}

/// Facets of conv(moment points 1..n) by brute force: `d`-subsets with every
/// other point strictly on one side.
fn orientation_facets(n: usize, d: usize) -> Result<Vec<Vec<usize>>, Failure> {
    let alphas = (1..=n as i64).map(|i| Rational::from_integer(i.into())).collect();
    let x = moment_points(&MomentSpec::new(d, alphas))?;
    let mut facets = Vec::new();
    for subset in (0..n).combinations(d) {
        let mut side = None;
        let mut facet = true;
        for j in (0..n).filter(|j| !subset.contains(j)) {
            let mut pts: Vec<Point> = subset.iter().map(|&i| x.point(i).clone()).collect();
            pts.push(x.point(j).clone());
            let s = orientation(&pts, d)?;
            if s == Sign::Zero || side.is_some_and(|t| t != s) {
                facet = false;
                break;
            }
            side = Some(s);
        }
        if facet {
            facets.push(subset);
        }
    }
    Ok(facets)
}

fn facets(ctx: &mut Ctx, d: usize, n: usize) -> Result<(), Failure> {
    let fs = gale_facets(n, d)?;
    let mut record = ReportRecord::new(
        "facets",
        json!({"d": d, "n": n}),
        json!({"count": fs.len(), "facets": fs.facets}),
    );
    if n <= FACET_CHECK_MAX_N {
        let brute = orientation_facets(n, d)?;
        record = record.claim("Lemma2.1", brute == fs.facets);
    }
    ctx.emit(record)
}

fn crossings(ctx: &mut Ctx, file: &Path, normal: &[String], offset: &str) -> Result<(), Failure> {
    let x = read_points(file)?;
    let normal: Vec<Rational> = normal.iter().map(|s| rational(s)).collect::<Result<_, _>>()?;
    let h = Hyperplane::new(normal, rational(offset)?)?;
    let c = path_crossings(&x, &h)?;
    let mut record = ReportRecord::new(
        "crossings",
        json!({"file": file.display().to_string(), "hyperplane": h.to_string()}),
        json!({"count": c.count, "edges": c.edges}),
    );
    if is_order_homogeneous(&x).is_homogeneous() {
        record = record.claim("Lemma2.2", c.count <= x.dim());
    }
    ctx.emit(record)
}

fn partition_for(n: usize, r: Option<usize>, labels: &[usize]) -> Result<Partition, Failure> {
    if labels.is_empty() {
        let r = r.ok_or_else(|| Failure::Input("give --blocks or --alternating".into()))?;
        return Ok(alternating_partition(n, r)?);
    }
    if labels.len() != n {
        return Err(Failure::Input(format!(
            "{} block labels for {n} points",
            labels.len()
        )));
    }
    let r = labels.iter().max().map_or(0, |m| m + 1);
    Ok(Partition::new(r, labels.to_vec())?)
}

fn intersect(
    ctx: &mut Ctx,
    file: &Path,
    labels: &[usize],
    alternating: Option<usize>,
) -> Result<(), Failure> {
    let x = read_points(file)?;
    let p = partition_for(x.len(), alternating, labels)?;
    let blocks = p.block_points(&x);
    let outcome = hulls_common_point(&blocks)?;
    let mut summary = json!({"feasible": outcome.is_feasible()});
    if let Some(w) = outcome.witness() {
        summary["point"] = json!(strs(w.point.coords()));
    }
    ctx.emit(
        ReportRecord::new(
            "intersect",
            json!({"file": file.display().to_string(), "blocks": p.blocks()}),
            summary,
        )
        .certificate(Payload::hulls(x.dim(), &blocks, &outcome)),
    )
}

/// Certificate that removing `y` breaks `p`.
fn breaking_payload(x: &PointSet, p: &Partition, y: &[usize]) -> Result<Payload, Failure> {
    let blocks: Vec<Vec<Point>> = p
        .blocks()
        .iter()
        .map(|b| b.iter().filter(|i| !y.contains(i)).map(|&i| x.point(i).clone()).collect())
        .collect();
    let outcome = hulls_common_point(&blocks)?;
    Ok(Payload::hulls(x.dim(), &blocks, &outcome))
}

fn tolerance(ctx: &mut Ctx, file: &Path, r: usize, mode: Mode, labels: &[usize]) -> Result<(), Failure> {
    let x = read_points(file)?;
    let budget = ctx.budget.map(|b| b as usize);
    let (n, d) = (x.len(), x.dim());
    let general = x.is_general_position();
    let inputs = json!({"file": file.display().to_string(), "r": r, "budget": budget});
    match mode {
        Mode::Partition => {
            let p = partition_for(n, Some(r), labels)?;
            if p.r() != r {
                return Err(Failure::Input(format!("labels describe {} blocks, not {r}", p.r())));
            }
            let rep = partition_tolerance(&x, &p, budget)?;
            let mut record = ReportRecord::new(
                "tolerance",
                inputs,
                json!({
                    "mode": "partition", "blocks": p.blocks(), "value": rep.value,
                    "breaking_set": rep.breaking_set, "exhausted": rep.exhausted,
                }),
            );
            if let Some(y) = &rep.breaking_set {
                record = record.certificate(breaking_payload(&x, &p, y)?);
            }
            if general {
                let bound = bound_prop41(n as u64, d as u64, r as u64)?;
                record = record.claim("Prop4.1", rep.value <= bound);
            }
            ctx.emit(record)
        }
        Mode::Set => {
            let st = set_tolerance(&x, r, budget)?;
            let rep = &st.report;
            let mut outcome = json!({
                "mode": "set", "value": rep.value, "partition": st.partition.blocks(),
                "breaking_set": rep.breaking_set, "exhausted": rep.exhausted,
                "partitions_examined": st.partitions_examined,
            });
            let mut record = ReportRecord::new("tolerance", inputs, Value::Null);
            if let Some(y) = &rep.breaking_set {
                record = record.certificate(breaking_payload(&x, &st.partition, y)?);
            }
            if n > d && matches!(is_order_homogeneous(&x), Homogeneity::Homogeneous(_)) {
                let q = (n / r) as i64;
                let lower = q - bound_lemma32(d as u64, r as u64)? as i64;
                let upper = q - (d / 2) as i64;
                outcome["lower"] = json!(lower);
                outcome["upper"] = json!(upper);
                // a cut search only certifies a lower bound on t
                let lower_ok = lower <= rep.value || !rep.exhausted;
                record = record.claim("Thm3.4", lower_ok && rep.value <= upper);
            } else if general {
                let bound = bound_prop41(n as u64, d as u64, r as u64)?;
                outcome["upper"] = json!(bound);
                record = record.claim("Prop4.1", rep.value <= bound);
            }
            record.outcome = outcome;
            ctx.emit(record)
        }
    }
}

fn bounds(ctx: &mut Ctx, kind: BoundKind, d: u64, r: u64, n: Option<u64>) -> Result<(), Failure> {
    let (name, value) = match kind {
        BoundKind::Lemma32 => ("lemma32", json!(bound_lemma32(d, r)?)),
        BoundKind::EvenD => ("even-d", json!(bound_even_d(d, r)?)),
        BoundKind::Prop41 => {
            let n = n.ok_or_else(|| Failure::Input("prop41 needs -n".into()))?;
            ("prop41", json!(bound_prop41(n, d, r)?))
        }
    };
    ctx.emit(ReportRecord::new(
        "bounds",
        json!({"kind": name, "d": d, "r": r, "n": n}),
        json!({"value": value}),
    ))
}

fn strategy_for(s: Strategy, r: usize, seed: u64) -> SearchStrategy {
    match s {
        Strategy::Clustered => SearchStrategy::clustered(r, seed),
        Strategy::Figure2 => SearchStrategy::figure2(seed),
        Strategy::Grid => SearchStrategy {
            kind: StrategyKind::Grid {
                step: Rational::new(1.into(), 2.into()),
                window: 12,
            },
            seed,
        },
        Strategy::RandomRational => SearchStrategy {
            kind: StrategyKind::RandomRational {
                max_denominator: 6,
                range: 8,
            },
            seed,
        },
    }
}

/// `n` values already answered in `--out` for the same scan parameters,
/// with whether each found a counterexample.
fn recorded(ctx: &Ctx, key: &Value) -> Result<Vec<(usize, bool)>, Failure> {
    let Some(path) = &ctx.out else {
        return Ok(Vec::new());
    };
    let Ok(text) = fs::read_to_string(path) else {
        return Ok(Vec::new());
    };
    let mut done = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let Ok(rec) = serde_json::from_str::<ReportRecord>(line) else {
            continue;
        };
        if rec.command != "search-c" || rec.seed != Some(ctx.seed) {
            continue;
        }
        let mut inputs = rec.inputs.clone();
        let Some(n) = inputs.as_object_mut().and_then(|m| m.remove("n")) else {
            continue;
        };
        if &inputs == key {
            if let (Some(n), Some(found)) = (n.as_u64(), rec.outcome["found"].as_bool()) {
                done.push((n as usize, found));
            }
        }
    }
    Ok(done)
}

fn search_c(
    ctx: &mut Ctx,
    d: usize,
    r: usize,
    n_min: usize,
    n_max: usize,
    strategy: Strategy,
    sequential: bool,
) -> Result<(), Failure> {
    if n_min > n_max {
        return Err(Failure::Input("--n-min exceeds --n-max".into()));
    }
    let budget = ctx.budget.unwrap_or(10_000);
    let s = strategy_for(strategy, r, ctx.seed);
    let key = json!({"d": d, "r": r, "strategy": s.name(), "budget": budget});
    let mut results: Vec<(usize, bool)> = recorded(ctx, &key)?;
    let skip: BTreeSet<usize> = results.iter().map(|(n, _)| *n).collect();
    for n in (n_min..=n_max).filter(|n| !skip.contains(n)) {
        let outcome = if sequential {
            find_counterexample(d, r, n, &s, budget)?
        } else {
            par_find_counterexample(d, r, n, &s, budget)?
        };
        let mut inputs = key.clone();
        inputs["n"] = json!(n);
        let record = match &outcome {
            SearchOutcome::Found(c) => ReportRecord::new(
                "search-c",
                inputs,
                json!({"found": true, "rank": c.rank, "alphas": strs(&c.alphas)}),
            )
            .certificate(Payload::counterexample(c)),
            SearchOutcome::NoneFound { tried, exact } => ReportRecord::new(
                "search-c",
                inputs,
                json!({
                    "found": false, "tried": tried, "exact": exact,
                    "note": if *exact { "no counterexample exists" } else { "no counterexample within budget" },
                }),
            ),
        };
        results.push((n, outcome.is_found()));
        ctx.emit(record.seed(ctx.seed))?;
    }
    results.retain(|(n, _)| (n_min..=n_max).contains(n));
    results.sort();
    let found: Vec<usize> = results.iter().filter(|(_, f)| *f).map(|(n, _)| *n).collect();
    let none: Vec<usize> = results.iter().filter(|(_, f)| !*f).map(|(n, _)| *n).collect();
    let lower = found.iter().max().map(|n| n + 1);
    ctx.emit(
        ReportRecord::new(
            "search-c-summary",
            json!({"d": d, "r": r, "n_min": n_min, "n_max": n_max, "strategy": s.name(), "budget": budget}),
            json!({"c_lower": lower, "found": found, "none_found": none, "exact": d == 1}),
        )
        .seed(ctx.seed),
    )
}

fn verify_figure2(ctx: &mut Ctx, file: Option<&Path>) -> Result<(), Failure> {
    if let Some(path) = file {
        let x = read_points(path)?;
        if x.dim() != 3 || x.len() != 16 {
            return Err(Failure::Input("expected 16 points in R^3".into()));
        }
        let homogeneous = is_order_homogeneous(&x).is_homogeneous();
        let blocks = alternating_partition(16, 4)?.block_points(&x);
        let outcome = hulls_common_point(&blocks)?;
        let feasible = outcome.is_feasible();
        return ctx.emit(
            ReportRecord::new(
                "verify-figure2",
                json!({"file": path.display().to_string()}),
                json!({"homogeneous": homogeneous, "feasible": feasible, "c_lower": if feasible { None } else { Some(17) }}),
            )
            .claim("Figure2", homogeneous && !feasible)
            .certificate(Payload::hulls(3, &blocks, &outcome)),
        );
    }
    let (c, eps) = figure2_counterexample()?;
    let replayed = c.replay().is_ok();
    let data_matches = parse_pointset(FIGURE2_FILE)
        .map(|x| x == c.points().expect("moment points"))
        .unwrap_or(false);
    ctx.emit(
        ReportRecord::new(
            "verify-figure2",
            json!({"d": 3, "r": 4, "values": FIGURE2_VALUES, "eps": eps.to_string()}),
            json!({
                "feasible": false, "replayed": replayed, "matches_data_file": data_matches,
                "alphas": strs(&c.alphas), "c_lower": c.n() + 1,
            }),
        )
        .claim("Figure2", replayed && data_matches)
        .certificate(Payload::counterexample(&c)),
    )
}

fn verify(ctx: &mut Ctx, file: &Path) -> Result<(), Failure> {
    let checks = verify_report(&read_text(file)?).map_err(|e| Failure::Input(e.to_string()))?;
    let mut replayed = 0;
    let mut errors = Vec::new();
    for c in &checks {
        match &c.result {
            Some(Ok(_)) => replayed += 1,
            Some(Err(e)) => errors.push(json!({"line": c.line, "command": c.command, "error": e.to_string()})),
            None => {}
        }
    }
    let ok = errors.is_empty();
    ctx.emit(
        ReportRecord::new(
            "verify",
            json!({"file": file.display().to_string()}),
            json!({"records": checks.len(), "replayed": replayed, "errors": errors}),
        )
        .claim("Certificates", ok),
    )
}
