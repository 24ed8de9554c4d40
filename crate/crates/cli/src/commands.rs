//! One function per subcommand, each producing a [`Report`].

use std::time::Instant;

use anyhow::{bail, Result};
use kappa_core::claims::{run_suite, ClaimRecord, Status, SuiteOptions};
use kappa_core::classify::{is_large_with, is_small_with, is_thick_with, Method, Notion, SizeVerdict, Witness};
use kappa_core::constructions::{parse_params, Adversary, BuiltConstruction};
use kappa_core::group::{build_group_with, is_kappa_normal, BuildOptions};
use kappa_core::resolvability::{partition_search, res_search, PartitionSearch, ResMode, Target};
use kappa_core::{Budget, Error, GroupTable, Kappa};
use serde_json::json;

use crate::report::Report;
use crate::{ClassifyArgs, ConstructArgs, Global, SearchArgs, SearchMode, VerifyArgs};

fn group(g: &Global, spec: &str) -> Result<GroupTable> {
    let opts = BuildOptions { max_order: g.max_order, full_check_limit: g.max_order.max(BuildOptions::default().full_check_limit) };
    Ok(build_group_with(spec, opts)?)
}

fn status_of(decided: Option<bool>) -> Status {
    match decided {
        Some(_) => Status::Pass,
        None => Status::Inconclusive,
    }
}

fn wall(g: &Global, start: Instant) -> Option<u64> {
    g.timings.then(|| start.elapsed().as_millis() as u64)
}

fn record(id: String, anchor: String, status: Status, detail: String, nodes: u64, wall_ms: Option<u64>) -> ClaimRecord {
    ClaimRecord { id, anchor, status, detail, checks: 1, nodes, wall_ms }
}

/// `large=true F={0,3}`, `thick(witness-in-G)=false failing F={1}` and so on.
fn verdict_detail(v: &SizeVerdict) -> String {
    let head = match (v.notion, v.variant) {
        (Notion::Thick, Some(var)) => format!("thick({})", var.name()),
        (Notion::Large, _) => "large".into(),
        (Notion::Thick, None) => "thick".into(),
        (Notion::Small, _) => "small".into(),
    };
    let value = match v.decided() {
        Some(b) => b.to_string(),
        None => "inconclusive".into(),
    };
    let evidence = match &v.witness {
        Witness::None => String::new(),
        Witness::Cover { f } => format!(" F={f}"),
        Witness::Translations { entries } => {
            let shown: Vec<String> = entries.iter().map(|(f, x)| format!("{f}->{x}")).collect();
            format!(" translations {}", shown.join(" "))
        }
        Witness::Untranslatable { f } => format!(" failing F={f}"),
        Witness::LargeRemainder { side, large, cover } => {
            format!(" L={large} is {} large via F={cover} but L minus A is not", side.name())
        }
    };
    let method = match v.method {
        Method::Exhaustive => "exhaustive",
        Method::GreedyThenExact => "greedy-then-exact",
        Method::Greedy => "greedy",
    };
    format!("{head}={value}{evidence} ({method})")
}

pub fn classify(g: &Global, a: &ClassifyArgs, command: String) -> Result<Report> {
    let grp = group(g, &a.group)?;
    let subset = grp.parse_subset(&a.subset)?;
    let kappa = Kappa::new(a.kappa, grp.order())?;
    let mut records = Vec::new();
    let mut verdicts = Vec::new();
    let mut push = |v: SizeVerdict, id: String, start: Instant| {
        let shown = v.to_string();
        let anchor = shown.split_once(": ").map_or(shown.as_str(), |(a, _)| a).to_string();
        records.push(record(id, anchor, status_of(v.decided()), verdict_detail(&v), v.nodes, wall(g, start)));
        verdicts.push(v);
    };
    for &side in &a.sides {
        let start = Instant::now();
        let v = is_large_with(&grp, &subset, kappa, side, &mut Budget::new(g.budget));
        push(v, format!("large/{}", side.name()), start);
        for variant in a.variant.variants() {
            let start = Instant::now();
            let v = is_thick_with(&grp, &subset, kappa, side, variant, &mut Budget::new(g.budget));
            push(v, format!("thick/{}/{}", side.name(), variant.name()), start);
        }
        let start = Instant::now();
        let v = is_small_with(&grp, &subset, kappa, side, &mut Budget::new(g.budget));
        push(v, format!("small/{}", side.name()), start);
    }
    let start = Instant::now();
    let normal = is_kappa_normal(&grp, kappa);
    let detail = match (&normal.counterexample, normal.closure_size) {
        (Some(f), Some(size)) => format!("kappa-normal=false F={f} has normal closure of {size} elements"),
        _ => "kappa-normal=true".into(),
    };
    records.push(record("kappa-normal".into(), format!("kappa-normal (kappa={kappa})"), Status::Pass, detail, 0, wall(g, start)));
    let data = json!({
        "group": a.group,
        "order": grp.order(),
        "subset": subset,
        "kappa": kappa,
        "verdicts": verdicts,
        "normality": normal,
    });
    Ok(Report::new(command, records, Some(data)))
}

pub fn construct(g: &Global, a: &ConstructArgs, command: String) -> Result<Report> {
    let params = parse_params(a.params.iter().map(String::as_str))?;
    let adversary: Option<Adversary> = a.adversary.as_deref().map(str::parse).transpose()?;
    let start = Instant::now();
    let built = BuiltConstruction::build(&a.construction, &params, adversary.as_ref())?;
    let radius = a.radius.unwrap_or(built.default_radius());
    let report = match built.report(Some(radius)) {
        Ok(r) => r,
        Err(Error::NotAPartition(why)) => {
            let r = record("partition".into(), format!("{} cells on the ball", a.construction), Status::Fail, why, 0, wall(g, start));
            return Ok(Report::new(command, vec![r], None));
        }
        Err(e) => return Err(e.into()),
    };
    let mut records = vec![ClaimRecord {
        id: "partition".into(),
        anchor: format!("{} {} cells partition the ball", report.construction, report.cells.len()),
        status: Status::Pass,
        detail: format!("radius {}: {} words, cell sizes {:?}; cells: {}", radius, report.ball.words, report.ball.cell_sizes, report.cells.join(" | ")),
        checks: report.ball.words as u64,
        nodes: 0,
        wall_ms: wall(g, start),
    }];
    for w in &report.witnesses {
        let verb = if w.escapes { "escapes" } else { "is covered by" };
        let product = match w.side.name() {
            "left" => format!("H·B{}", w.cell + 1),
            "right" => format!("B{}·H", w.cell + 1),
            _ => format!("H·B{}·H", w.cell + 1),
        };
        records.push(ClaimRecord {
            id: format!("witness/B{}/{}", w.cell + 1, w.side.name()),
            anchor: format!("B{} is not {} large against H={}", w.cell + 1, w.side.name(), w.adversary),
            status: if w.escapes { Status::Pass } else { Status::Fail },
            detail: format!("{} {verb} {product} with |H|={}", w.word, w.adversary_size),
            checks: w.adversary_size as u64,
            nodes: 0,
            wall_ms: None,
        });
    }
    Ok(Report::new(command, records, Some(serde_json::to_value(&report)?)))
}

pub fn search(g: &Global, a: &SearchArgs, command: String) -> Result<Report> {
    let grp = group(g, &a.group)?;
    let kappa = Kappa::new(a.kappa, grp.order())?;
    let mut budget = Budget::new(g.budget);
    let start = Instant::now();
    let res = |mode| -> Result<Report> {
        if a.cells.is_some() {
            bail!("--cells applies to the two-thick and non-large modes");
        }
        let r = res_search(&grp, kappa, mode, &mut Budget::new(g.budget));
        let name = if mode == ResMode::Left { "res_left" } else { "res" };
        let status = if r.optimal { Status::Pass } else { Status::Inconclusive };
        let bound = if r.optimal { "optimal" } else { "lower bound, budget exhausted" };
        let detail = format!("{} cells, {bound}: {}", r.cells, r.best);
        let anchor = format!("{name}({},{})", a.group, a.kappa);
        let rec = record(name.into(), anchor, status, detail, r.nodes, wall(g, start));
        Ok(Report::new(command.clone(), vec![rec], Some(serde_json::to_value(&r)?)))
    };
    let target = match a.mode {
        SearchMode::ResLeft => return res(ResMode::Left),
        SearchMode::ResBoth => return res(ResMode::LeftRight),
        SearchMode::TwoThick => Target::AllThick { side: a.side, variant: a.variant },
        SearchMode::NonLarge => Target::AllNonLarge { side: a.side },
    };
    let cells = a.cells.unwrap_or(2);
    let want = match target {
        Target::AllThick { side, variant } => format!("{cells} {} {}-thick cells ({})", side.name(), a.kappa, variant.name()),
        Target::AllNonLarge { side } => format!("{cells} cells, none {} {}-large", side.name(), a.kappa),
    };
    let outcome = partition_search(&grp, kappa, cells, target, &mut budget)?;
    let (status, detail, nodes) = match &outcome {
        PartitionSearch::Found { partition, nodes } => (Status::Pass, format!("found {partition}"), *nodes),
        PartitionSearch::NoneExists { nodes } => (Status::Fail, "no such partition exists (exhaustive)".to_string(), *nodes),
        PartitionSearch::Inconclusive { nodes } => (Status::Inconclusive, "budget exhausted".to_string(), *nodes),
    };
    let id = if a.mode == SearchMode::TwoThick { "two-thick" } else { "non-large" };
    let rec = record(id.into(), format!("{} into {want}", a.group), status, detail, nodes, wall(g, start));
    Ok(Report::new(command, vec![rec], Some(serde_json::to_value(&outcome)?)))
}

pub fn verify(g: &Global, a: &VerifyArgs, command: String) -> Result<Report> {
    let records = run_suite(a.suite, SuiteOptions { timings: g.timings });
    Ok(Report::new(command, records, None))
}
