//! Verification suites: each claim is checked exhaustively over a fixed
//! grid and reported with its counterexample, witness or grid certificate.
//! Nothing here is sampled, so reruns give identical records.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::classify::{is_large, is_thick, thick_decision, thick_to_large_witness, CoverDecomposition, ThickVariant};
use crate::constructions::{meet_partition, s_set, s_set_sandwich_gap, Adversary, BuiltConstruction, Partition};
use crate::group::{build_group, product_set, GroupTable, Kappa, Side, Subset};
use crate::resolvability::{partition_search, res_search, PartitionSearch, ResMode, Target};
use crate::words::{left_covered, Ball, DsAlphabet, ReducedWord};

/// Groups of the exhaustive size-notion grid.
pub const GRID_GROUPS: [&str; 7] =
    ["cyclic:4", "cyclic:5", "cyclic:6", "cyclic:8", "product:cyclic:2+cyclic:2", "symmetric:3", "dihedral:4"];

/// Every group of order at most 6, up to isomorphism, for the partition oracle.
pub const ORACLE_GROUPS: [&str; 7] =
    ["cyclic:2", "cyclic:3", "cyclic:4", "product:cyclic:2+cyclic:2", "cyclic:5", "cyclic:6", "symmetric:3"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// Outcome of one claim.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// Witness, counterexample, or the grid that was swept.
    pub detail: String,
    /// Number of individual assertions evaluated.
    pub checks: u64,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Duality,
    Meets,
    SSet,
    Thm3,
    Comment1,
    Thm2,
    Oracle,
    Probe,
    Comment2,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Duality,
        Suite::Meets,
        Suite::SSet,
        Suite::Thm3,
        Suite::Comment1,
        Suite::Thm2,
        Suite::Oracle,
        Suite::Probe,
        Suite::Comment2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Duality => "duality",
            Suite::Meets => "meets",
            Suite::SSet => "s-set",
            Suite::Thm3 => "thm3",
            Suite::Comment1 => "comment1",
            Suite::Thm2 => "thm2",
            Suite::Oracle => "oracle",
            Suite::Probe => "probe",
            Suite::Comment2 => "comment2",
        }
    }

    /// Claim ids covered by the suite.
    pub fn claims(self) -> &'static [&'static str] {
        match self {
            Suite::All => &["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12"],
            Suite::Duality => &["C1", "C2", "C3"],
            Suite::Meets => &["C4"],
            Suite::SSet => &["C5"],
            Suite::Thm3 => &["C6"],
            Suite::Comment1 => &["C7", "C8"],
            Suite::Thm2 => &["C9"],
            Suite::Oracle => &["C10"],
            Suite::Probe => &["C11"],
            Suite::Comment2 => &["C12"],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = std::iter::once(Suite::All).chain(Suite::EACH).map(Suite::name).collect();
                format!("unknown suite `{s}` ({})", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Record wall time per claim. Off by default so reports are byte-stable.
    pub timings: bool,
}

/// Runs the claims of `suite` in id order.
pub fn run_suite(suite: Suite, opts: SuiteOptions) -> Vec<ClaimRecord> {
    let ctx = Context::default();
    suite
        .claims()
        .iter()
        .map(|&id| {
            let start = Instant::now();
            let mut rec = run_claim(id, &ctx);
            if opts.timings {
                rec.wall_ms = Some(start.elapsed().as_millis() as u64);
            }
            rec
        })
        .collect()
}

/// Runs a single claim by id (`C1` to `C12`).
pub fn run_claim_by_id(id: &str) -> Option<ClaimRecord> {
    Suite::All.claims().contains(&id).then(|| run_claim(id, &Context::default()))
}

fn run_claim(id: &str, ctx: &Context) -> ClaimRecord {
    match id {
        "C1" => c1_duality(ctx),
        "C2" => c2_variant_chain(ctx),
        "C3" => c3_inversion_lattice(ctx),
        "C4" => c4_meets(ctx),
        "C5" => c5_s_set(),
        "C6" => c6_last_letter(),
        "C7" => c7_three_cell(),
        "C8" => c8_meet_property(),
        "C9" => c9_thick_to_large(),
        "C10" => c10_resolvability(),
        "C11" => c11_probe(),
        "C12" => c12_direct_sum(),
        other => unreachable!("unknown claim {other}"),
    }
}

#[derive(Default)]
struct Context {
    grid: OnceLock<Vec<GroupGrid>>,
}

impl Context {
    fn grid(&self) -> &[GroupGrid] {
        self.grid.get_or_init(|| GRID_GROUPS.par_iter().map(|s| GroupGrid::new(s)).collect())
    }
}

/// Every size notion of every subset of one group, for every κ.
struct GroupGrid {
    spec: &'static str,
    g: GroupTable,
    /// `inv[mask]` is the mask of `A⁻¹`.
    inv: Vec<u64>,
    /// Indexed by `κ - 2`.
    tables: Vec<Tables>,
}

struct Tables {
    large: [Vec<bool>; 3],
    thick_g: [Vec<bool>; 3],
    thick_a: [Vec<bool>; 3],
    /// Left smallness, from the definition over the `large` table.
    small_left: Vec<bool>,
    undecided: bool,
    nodes: u64,
}

impl GroupGrid {
    fn new(spec: &'static str) -> Self {
        let g = build_group(spec).expect("grid group");
        let n = g.order();
        let masks = 1u64 << n;
        let inv = (0..masks).map(|m| g.inverse_set(&Subset::from_mask(n, m)).mask()).collect();
        let tables = (2..=n).into_par_iter().map(|k| Tables::new(&g, Kappa::new(k, n).unwrap())).collect();
        GroupGrid { spec, g, inv, tables }
    }

    fn masks(&self) -> u64 {
        1u64 << self.g.order()
    }

    fn full(&self) -> u64 {
        self.masks() - 1
    }
}

impl Tables {
    fn new(g: &GroupTable, kappa: Kappa) -> Self {
        let n = g.order();
        let masks = 1u64 << n;
        let mut nodes = 0;
        let mut undecided = false;
        let mut table = |f: &mut dyn FnMut(&Subset) -> (Option<bool>, u64)| -> Vec<bool> {
            (0..masks)
                .map(|m| {
                    let (v, used) = f(&Subset::from_mask(n, m));
                    nodes += used;
                    undecided |= v.is_none();
                    v.unwrap_or(false)
                })
                .collect()
        };
        let large = Side::ALL.map(|s| {
            table(&mut |a| {
                let v = is_large(g, a, kappa, s);
                (v.decided(), v.nodes)
            })
        });
        let mut thick = |variant| {
            Side::ALL.map(|s| {
                table(&mut |a| {
                    let mut b = Budget::default();
                    (thick_decision(g, a, kappa, s, variant, &mut b), b.used())
                })
            })
        };
        let thick_g = thick(ThickVariant::WitnessInG);
        let thick_a = thick(ThickVariant::WitnessInA);
        let left = &large[0];
        let large_sets: Vec<u64> = (0..masks).filter(|&m| left[m as usize]).collect();
        let small_left = (0..masks).map(|a| large_sets.iter().all(|&l| left[(l & !a) as usize])).collect();
        Tables { large, thick_g, thick_a, small_left, undecided, nodes }
    }
}

fn show(n: usize, mask: u64) -> String {
    Subset::from_mask(n, mask).to_string()
}

/// Collects the first failure of a sweep and counts checks.
struct Sweep {
    checks: u64,
    nodes: u64,
    undecided: bool,
    failure: Option<String>,
}

impl Sweep {
    fn new() -> Self {
        Sweep { checks: 0, nodes: 0, undecided: false, failure: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn record(self, id: &str, anchor: &str, certificate: String) -> ClaimRecord {
        let (status, detail) = match (self.failure, self.undecided) {
            (Some(f), _) => (Status::Fail, f),
            (None, true) => (Status::Inconclusive, format!("budget exhausted; {certificate}")),
            (None, false) => (Status::Pass, certificate),
        };
        ClaimRecord {
            id: id.into(),
            anchor: anchor.into(),
            status,
            detail,
            checks: self.checks,
            nodes: self.nodes,
            wall_ms: None,
        }
    }
}

fn grid_certificate(ctx: &Context) -> String {
    let groups: Vec<&str> = ctx.grid().iter().map(|gg| gg.spec).collect();
    format!("all subsets, kappa=2..|G|, groups {}", groups.join(" "))
}

fn grid_sweep<F>(ctx: &Context, mut body: F) -> Sweep
where
    F: FnMut(&GroupGrid, usize, &Tables, &mut Sweep),
{
    let mut sweep = Sweep::new();
    for gg in ctx.grid() {
        for (i, t) in gg.tables.iter().enumerate() {
            sweep.nodes += t.nodes;
            sweep.undecided |= t.undecided;
            body(gg, i + 2, t, &mut sweep);
        }
    }
    sweep
}

fn c1_duality(ctx: &Context) -> ClaimRecord {
    let sweep = grid_sweep(ctx, |gg, k, t, sw| {
        let n = gg.g.order();
        for m in 0..gg.masks() {
            for (si, s) in Side::ALL.iter().enumerate() {
                let comp = gg.full() & !m;
                sw.check(t.thick_g[si][m as usize] == !t.large[si][comp as usize], || {
                    format!("{} kappa={k} {} A={}: thick={} large(complement)={}", gg.spec, s.name(), show(n, m), t.thick_g[si][m as usize], t.large[si][comp as usize])
                });
            }
        }
    });
    sweep.record("C1", "thick (witness in G) iff complement not large, all sides", grid_certificate(ctx))
}

fn c2_variant_chain(ctx: &Context) -> ClaimRecord {
    let mut sweep = grid_sweep(ctx, |gg, k, t, sw| {
        let n = gg.g.order();
        for m in 0..gg.masks() as usize {
            for (si, s) in Side::ALL.iter().enumerate() {
                sw.check(!t.thick_a[si][m] || t.thick_g[si][m], || {
                    format!("{} kappa={k} {} A={}: in-A thick but not in-G thick", gg.spec, s.name(), show(n, m as u64))
                });
                if k > 2 {
                    let lower = &gg.tables[k - 3];
                    sw.check(!t.thick_g[si][m] || lower.thick_a[si][m], || {
                        format!("{} kappa={k} {} A={}: in-G thick but not in-A thick at kappa-1", gg.spec, s.name(), show(n, m as u64))
                    });
                }
            }
        }
    });
    let g = build_group("cyclic:2").unwrap();
    let a = g.subset([1]).unwrap();
    let k2 = Kappa::new(2, 2).unwrap();
    let in_a = is_thick(&g, &a, k2, Side::Left, ThickVariant::WitnessInA);
    let in_g = is_thick(&g, &a, k2, Side::Left, ThickVariant::WitnessInG);
    sweep.check(!in_a.holds() && in_g.holds(), || {
        format!("cyclic:2 A={{1}} kappa=2: in-A={} in-G={}", in_a.holds(), in_g.holds())
    });
    sweep.record(
        "C2",
        "in-A thick => in-G thick => in-A thick at kappa-1; divergence on cyclic:2",
        format!("{}; cyclic:2 A={{1}} kappa=2: in-A thick=false (F={{1}} untranslatable), in-G thick=true", grid_certificate(ctx)),
    )
}

fn c3_inversion_lattice(ctx: &Context) -> ClaimRecord {
    let mut boundary = 0u64;
    let sweep = grid_sweep(ctx, |gg, k, t, sw| {
        let n = gg.g.order();
        let below = k.checked_sub(3).map(|i| &gg.tables[i]);
        for m in 0..gg.masks() as usize {
            let i = gg.inv[m] as usize;
            let at = |what: &str| format!("{} kappa={k} A={}: {what}", gg.spec, show(n, m as u64));
            sw.check(t.large[0][m] == t.large[1][i], || at("left large != right large of inverse"));
            sw.check(t.large[2][m] == t.large[2][i], || at("two-sided large != two-sided large of inverse"));
            for (name, th) in [("in-G", &t.thick_g), ("in-A", &t.thick_a)] {
                sw.check(th[0][m] == th[1][i], || at(&format!("{name} left thick != right thick of inverse")));
            }
            let g = &t.thick_g;
            sw.check(!g[2][m] || (g[0][m] && g[1][m]), || at("in-G two-sided thick but not one-sided thick"));
            // Witness in A: adjoining the identity to F costs one element, so
            // two-sided thickness at κ yields one-sided thickness at κ - 1.
            let a = &t.thick_a;
            if a[2][m] && !(a[0][m] && a[1][m]) {
                boundary += 1;
            }
            if let Some(b) = below {
                sw.check(!a[2][m] || (b.thick_a[0][m] && b.thick_a[1][m]), || at("in-A two-sided thick but not one-sided at kappa-1"));
            }
            sw.check(!(t.large[0][m] || t.large[1][m]) || t.large[2][m], || at("one-sided large but not two-sided large"));
            sw.check(!t.small_left[m] || !t.large[0][m], || at("left small and left large"));
        }
    });
    sweep.record(
        "C3",
        "inversion symmetry, implication lattice, small => not large",
        format!(
            "{} (nonabelian: symmetric:3, dihedral:4); witness-in-A lattice checked as two-sided at kappa => one-sided at kappa-1, \
             the same-kappa form fails on {boundary} boundary cases",
            grid_certificate(ctx)
        ),
    )
}

fn c4_meets(ctx: &Context) -> ClaimRecord {
    let sweep = grid_sweep(ctx, |gg, k, t, sw| {
        let n = gg.g.order();
        let large: Vec<u64> = (0..gg.masks()).filter(|&m| t.large[0][m as usize]).collect();
        for a in (0..gg.masks()).filter(|&m| t.thick_g[0][m as usize]) {
            for &l in &large {
                sw.check(a & l != 0, || format!("{} kappa={k}: thick A={} misses large L={}", gg.spec, show(n, a), show(n, l)));
            }
        }
    });
    sweep.record("C4", "every left thick set meets every left large set", grid_certificate(ctx))
}

fn record(id: &str, anchor: &str, sweep: Sweep, certificate: impl Into<String>) -> ClaimRecord {
    sweep.record(id, anchor, certificate.into())
}

fn word(s: &str) -> ReducedWord {
    s.parse().expect("word literal")
}

fn c5_s_set() -> ClaimRecord {
    let mut sw = Sweep::new();
    let s = s_set(2, 0).unwrap();
    let ball = Ball::new(2, 8).unwrap();
    let gap = s_set_sandwich_gap(ball.iter(), 0, &s);
    sw.checks += ball.len() as u64 - 1;
    sw.check(gap.is_none(), || format!("no k1,k2 in {{e,a,a'}} put {} into S", gap.clone().unwrap()));
    let h3 = Adversary::Ball { radius: 3 }.words(2).unwrap();
    sw.check(!left_covered(&word("bbbb"), &h3, &s), || "bbbb lies in H·S for H = ball(3)".into());
    let s4 = s_set(4, 0).unwrap();
    let hab = Adversary::Letters { generators: vec![0, 1], radius: 2 }.words(4).unwrap();
    sw.check(!left_covered(&word("c"), &hab, &s4), || "c lies in H·S for H over {a,b}, radius 2".into());
    record(
        "C5",
        "S-set: KSK covers the ball; b^4 and c escape H·S",
        sw,
        format!("ball m=2 L=8 ({} words) reached by k1·g·k2; bbbb escapes H=ball(3) ({} words); c escapes H=letters:ab:2 ({} words) on m=4", ball.len(), h3.len(), hab.len()),
    )
}

fn construction(name: &str, params: &[(&str, &str)]) -> BuiltConstruction {
    let map: BTreeMap<String, String> = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    BuiltConstruction::build(name, &map, None).expect("construction")
}

fn check_report(sw: &mut Sweep, label: &str, built: &BuiltConstruction, radius: Option<u32>) -> String {
    match built.report(radius) {
        Ok(r) => {
            sw.checks += r.ball.words as u64;
            for w in &r.witnesses {
                sw.check(w.escapes, || format!("{label}: {} is covered for cell {} ({}, {})", w.word, w.cell, w.side.name(), w.adversary));
            }
            let ws: Vec<String> =
                r.witnesses.iter().map(|w| format!("B{}:{}:{}∉{}", w.cell + 1, w.side.name(), w.word, w.adversary)).collect();
            format!("{label} L={} ({} words, cells {:?}) {}", r.radius, r.ball.words, r.ball.cell_sizes, ws.join(" "))
        }
        Err(e) => {
            sw.check(false, || format!("{label}: {e}"));
            String::new()
        }
    }
}

fn c6_last_letter() -> ClaimRecord {
    let mut sw = Sweep::new();
    let built = construction("thm3", &[("m", "4"), ("a1", "ab")]);
    let detail = check_report(&mut sw, "thm3 m=4 A1=ab", &built, Some(5));
    if let BuiltConstruction::Free { construction, .. } = &built {
        let got: Vec<String> = construction.witnesses.iter().map(|w| format!("{}|{}", w.adversary, w.word)).collect();
        sw.check(got == ["letters:abc:2|d", "letters:acd:2|b"], || format!("unexpected witnesses {got:?}"));
    }
    record("C6", "two-cell last-letter partition: designed witnesses escape", sw, detail)
}

/// Construction, parameters, ball radius and label.
type Run<'a> = (&'a str, &'a [(&'a str, &'a str)], Option<u32>, &'a str);

fn c7_three_cell() -> ClaimRecord {
    let mut sw = Sweep::new();
    let mut details = Vec::new();
    let runs: [Run; 4] = [
        ("c1-split3", &[("m", "3"), ("split", "a/b/c")], Some(6), "split3 m=3"),
        ("c1-split3", &[("m", "6"), ("split", "ab/cd/ef")], Some(4), "split3 m=6"),
        ("c1-rank2", &[], Some(8), "rank2"),
        ("c1-rank1", &[], Some(64), "rank1"),
    ];
    for (name, params, radius, label) in runs {
        let built = construction(name, params);
        details.push(check_report(&mut sw, label, &built, radius));
        if name == "c1-rank2" {
            if let BuiltConstruction::Free { construction, .. } = &built {
                let words: Vec<String> = construction.witnesses.iter().step_by(2).map(|w| w.word.to_string()).collect();
                sw.check(words == ["bbbbbb", "aaaaaa", "abababababab"], || format!("rank2 witnesses {words:?}"));
            }
        }
    }
    record("C7", "three-cell free-group partitions verified; designed witnesses escape", sw, details.join("; "))
}

/// Every set partition of `0..n` into exactly two cells, cell 0 holding 0.
fn two_cell_partitions(n: usize) -> impl Iterator<Item = (u64, u64)> {
    let full = (1u64 << n) - 1;
    (0..(1u64 << (n - 1)) - 1).map(move |rest| {
        let a = 1 | (rest << 1);
        (a, full & !a)
    })
}

fn c8_meet_property() -> ClaimRecord {
    let mut sw = Sweep::new();
    let g = build_group("cyclic:8").unwrap();
    let k3 = Kappa::new(3, 8).unwrap();
    let mut qualifying = 0;
    for (a, b) in two_cell_partitions(8) {
        let (a, b) = (Subset::from_mask(8, a), Subset::from_mask(8, b));
        let la = is_large(&g, &a, k3, Side::Left);
        let lb = is_large(&g, &b, k3, Side::Left);
        sw.nodes += la.nodes + lb.nodes;
        if la.holds() || lb.holds() {
            continue;
        }
        qualifying += 1;
        let p = Partition::new(8, vec![a, b], "pair").unwrap();
        let meet = meet_partition(&g, &p).unwrap();
        for c in meet.cells() {
            for s in [Side::Left, Side::Right] {
                let v = is_large(&g, c, k3, s);
                sw.nodes += v.nodes;
                sw.check(!v.holds(), || format!("{p}: meet cell {c} is {} 3-large", s.name()));
            }
        }
    }
    record(
        "C8",
        "meet with the inverse partition keeps cells non-large on both sides",
        sw,
        format!("cyclic:8, kappa=3: all 127 two-cell partitions, {qualifying} with neither cell left large"),
    )
}

fn c9_thick_to_large() -> ClaimRecord {
    let mut sw = Sweep::new();
    let mut count = 0;
    for spec in ["cyclic:6", "cyclic:8"] {
        let g = build_group(spec).unwrap();
        let n = g.order();
        for k in [3, 4] {
            let kappa = Kappa::new(k, n).unwrap();
            for m in 0..1u64 << n {
                let a = Subset::from_mask(n, m);
                let v = is_thick(&g, &a, kappa, Side::Left, ThickVariant::WitnessInG);
                sw.nodes += v.nodes;
                if !v.holds() {
                    continue;
                }
                for block in 1..k {
                    let cover = CoverDecomposition::blocks(&g, block, kappa).unwrap();
                    count += 1;
                    match thick_to_large_witness(&g, &a, &cover) {
                        Ok(w) => {
                            let covers = product_set(&g, &w.f, &a, Side::Right).unwrap().is_full();
                            sw.check(covers && w.f.len() <= cover.cells().len(), || {
                                format!("{spec} kappa={k} A={a} blocks={block}: F={} (A·F full: {covers})", w.f)
                            });
                        }
                        Err(e) => sw.check(false, || format!("{spec} kappa={k} A={a} blocks={block}: {e}")),
                    }
                }
            }
        }
    }
    record(
        "C9",
        "thick-to-large conversion along a finite cover",
        sw,
        format!("cyclic:6, cyclic:8, kappa in {{3,4}}, every left thick A, block covers of size 1..kappa-1: {count} conversions, A·F = G and |F| <= cells"),
    )
}

/// Every set partition of `0..n` as a list of cell masks.
fn set_partitions(n: usize) -> Vec<Vec<u64>> {
    fn go(i: usize, n: usize, cells: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == n {
            out.push(cells.clone());
            return;
        }
        for j in 0..=cells.len() {
            if j == cells.len() {
                cells.push(0);
            }
            cells[j] |= 1 << i;
            go(i + 1, n, cells, out);
            cells[j] &= !(1 << i);
            if cells[j] == 0 {
                cells.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn c10_resolvability() -> ClaimRecord {
    let mut sw = Sweep::new();
    for spec in ORACLE_GROUPS {
        let g = build_group(spec).unwrap();
        let n = g.order();
        let parts = set_partitions(n);
        for k in 2..=n {
            let kappa = Kappa::new(k, n).unwrap();
            let large: Vec<[bool; 2]> = (0..1u64 << n)
                .map(|m| {
                    let a = Subset::from_mask(n, m);
                    [Side::Left, Side::Right].map(|s| is_large(&g, &a, kappa, s).holds())
                })
                .collect();
            for mode in [ResMode::Left, ResMode::LeftRight] {
                let ok = |c: &u64| large[*c as usize][0] && (mode == ResMode::Left || large[*c as usize][1]);
                let expect = parts.iter().filter(|p| p.iter().all(ok)).map(Vec::len).max().unwrap();
                let r = res_search(&g, kappa, mode, &mut Budget::default());
                sw.nodes += r.nodes;
                sw.check(r.optimal && r.cells == expect, || {
                    format!("{spec} kappa={k} {mode:?}: search {} (optimal {}), oracle {expect}", r.cells, r.optimal)
                });
            }
        }
    }
    let mut values = Vec::new();
    for (spec, k, expect) in [("cyclic:4", 3, 2), ("cyclic:4", 2, 1), ("cyclic:6", 4, 3)] {
        let g = build_group(spec).unwrap();
        let r = res_search(&g, Kappa::new(k, g.order()).unwrap(), ResMode::Left, &mut Budget::default());
        sw.check(r.optimal && r.cells == expect, || format!("res_left({spec},{k}) = {} (optimal {})", r.cells, r.optimal));
        values.push(format!("res_left({spec},{k})={} via {}", r.cells, r.best));
    }
    record(
        "C10",
        "resolvability search agrees with enumeration of all set partitions",
        sw,
        format!("groups {} (Bell(6)=203 partitions at order 6), all kappa, both modes; {}", ORACLE_GROUPS.join(" "), values.join(", ")),
    )
}

fn c11_probe() -> ClaimRecord {
    let mut sw = Sweep::new();
    let g = build_group("cyclic:6").unwrap();
    let k3 = Kappa::new(3, 6).unwrap();
    let mut detail = String::new();
    let left = Target::AllThick { side: Side::Left, variant: ThickVariant::WitnessInG };
    match partition_search(&g, k3, 2, left, &mut Budget::default()).unwrap() {
        PartitionSearch::Found { partition, nodes } => {
            sw.nodes += nodes;
            for c in partition.cells() {
                sw.check(is_thick(&g, c, k3, Side::Left, ThickVariant::WitnessInG).holds(), || format!("cell {c} is not thick"));
            }
            detail = format!(
                "cyclic:6 kappa=3 splits into two left 3-thick cells {partition}; finite groups sit on the side of the dichotomy where thick partitions exist"
            );
        }
        PartitionSearch::NoneExists { .. } => sw.check(false, || "no two-cell left thick partition of cyclic:6".into()),
        PartitionSearch::Inconclusive { .. } => sw.undecided = true,
    }
    let both = Target::AllThick { side: Side::TwoSided, variant: ThickVariant::WitnessInG };
    if let PartitionSearch::NoneExists { nodes } = partition_search(&g, k3, 2, both, &mut Budget::default()).unwrap() {
        sw.nodes += nodes;
        detail.push_str("; no two-cell partition into two-sided thick cells exists");
    }
    record("C11", "finite partition probe: two thick cells", sw, detail)
}

fn c12_direct_sum() -> ClaimRecord {
    let mut sw = Sweep::new();
    let ds = DsAlphabet::new(&[2, 2]).unwrap();
    let ball = ds.ball(3).unwrap();
    let bad = ball.par_iter().find_map_first(|x| {
        let support = x.support();
        ball.iter().find(|g| x.conjugate_by(g).support() != support).map(|g| format!("support of {x} changes under {g}"))
    });
    sw.checks += (ball.len() * ball.len()) as u64;
    sw.check(bad.is_none(), || bad.clone().unwrap());
    let built = construction("c2-ds", &[("summands", "2"), ("sizes", "2,2"), ("marks", "a,c")]);
    let report = check_report(&mut sw, "B-set t=2 marks a,c", &built, Some(3));
    if let BuiltConstruction::DirectSum { construction, .. } = &built {
        let w = construction.witnesses[0].word.to_string();
        sw.check(w == "(1, d)", || format!("B-set witness {w}"));
    }
    record(
        "C12",
        "conjugation preserves support; B-set witness escapes",
        sw,
        format!("t=2, sizes 2,2, component radius 3: {} elements, all {} pairs x^g; {report}", ball.len(), ball.len() * ball.len()),
    )
}
