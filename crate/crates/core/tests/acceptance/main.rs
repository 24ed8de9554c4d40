//! Acceptance suite: one PASS/FAIL line per criterion. Every library answer
//! is compared against a brute-force oracle from `oracle.rs`, and the
//! library's own claim records must agree.

mod oracle;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use kappa_core::claims::{run_claim_by_id, Status};
use kappa_core::classify::{is_large, is_small, is_thick, thick_to_large_witness, CoverDecomposition, ThickVariant, Witness};
use kappa_core::constructions::{meet_partition, BuiltConstruction, Partition};
use kappa_core::resolvability::{partition_search, res_search, PartitionSearch, ResMode, Target};
use kappa_core::words::{DsAlphabet, DsWord};
use kappa_core::{build_group, Budget, Kappa, ReducedWord, Side, Subset};
use oracle::{Finite, Word};

const GRID: [&str; 7] =
    ["cyclic:4", "cyclic:5", "cyclic:6", "cyclic:8", "product:cyclic:2+cyclic:2", "symmetric:3", "dihedral:4"];
const SIDES: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];
/// Index 0 is witness-in-A, index 1 witness-in-G.
const VARIANTS: [ThickVariant; 2] = [ThickVariant::WitnessInA, ThickVariant::WitnessInG];

type Outcome = Result<String, String>;
type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

/// Oracle and library answers for one group and one kappa, indexed by mask.
struct Layer {
    k: usize,
    large: [Vec<bool>; 3],
    thick: [[Vec<bool>; 2]; 3],
    small: Vec<bool>,
}

struct Grid {
    spec: &'static str,
    o: Finite,
    inv: Vec<u64>,
    oracle: Vec<Layer>,
    library: Vec<Layer>,
    /// Witnesses failing the raw definition, or verdicts differing from the
    /// oracle.
    defects: Vec<String>,
    calls: usize,
}

fn show(n: usize, m: u64) -> String {
    Subset::from_mask(n, m).to_string()
}

fn oracle_layers(o: &Finite) -> Vec<Layer> {
    let masks = 1usize << o.n;
    let cover: Vec<Vec<Option<usize>>> =
        SIDES.iter().map(|&s| (0..masks).map(|m| o.min_cover(m as u64, s)).collect()).collect();
    let fail: Vec<Vec<Vec<Option<usize>>>> = SIDES
        .iter()
        .map(|&s| [true, false].iter().map(|&in_a| (0..masks).map(|m| o.min_failing(m as u64, s, in_a)).collect()).collect())
        .collect();
    (2..=o.n)
        .map(|k| {
            let large: [Vec<bool>; 3] = std::array::from_fn(|s| cover[s].iter().map(|c| c.is_some_and(|c| c < k)).collect());
            let thick = std::array::from_fn(|s| std::array::from_fn(|v| fail[s][v].iter().map(|f| f.is_none_or(|f| f >= k)).collect()));
            let small = (0..masks)
                .map(|a| (0..masks).filter(|&l| large[0][l]).all(|l| large[0][l & !a]))
                .collect();
            Layer { k, large, thick, small }
        })
        .collect()
}

fn build_grid(spec: &'static str) -> Grid {
    let g = build_group(spec).unwrap();
    let o = Finite::new(&g);
    let n = o.n;
    let masks = 1u64 << n;
    let inv = (0..masks).map(|m| o.inverse(m)).collect();
    let oracle = oracle_layers(&o);
    let mut defects = Vec::new();
    let mut calls = 0;
    let mut library = Vec::new();
    for ol in &oracle {
        let k = ol.k;
        let kappa = Kappa::new(k, n).unwrap();
        let mut layer = Layer {
            k,
            large: Default::default(),
            thick: Default::default(),
            small: Vec::new(),
        };
        for m in 0..masks {
            let a = Subset::from_mask(n, m);
            let at = |what: String| format!("{spec} kappa={k} A={}: {what}", show(n, m));
            for (si, &side) in SIDES.iter().enumerate() {
                let v = is_large(&g, &a, kappa, side);
                calls += 1;
                let holds = v.holds();
                if holds != ol.large[si][m as usize] {
                    defects.push(at(format!("{} large {holds}, oracle disagrees", side.name())));
                }
                if let Some(f) = v.cover() {
                    let f = f.mask();
                    if o.cover(f, m, side) != o.full() || Some(f) != o.first_cover(m, side) {
                        defects.push(at(format!("{} large witness {} is not the least cover", side.name(), show(n, f))));
                    }
                }
                layer.large[si].push(holds);
                for (vi, &variant) in VARIANTS.iter().enumerate() {
                    let in_a = vi == 0;
                    let v = is_thick(&g, &a, kappa, side, variant);
                    calls += 1;
                    let holds = v.holds();
                    if holds != ol.thick[si][vi][m as usize] {
                        defects.push(at(format!("{} {} thick {holds}, oracle disagrees", side.name(), variant.name())));
                    }
                    match &v.witness {
                        Witness::Untranslatable { f } => {
                            if holds || f.len() >= k || o.translators(f.mask(), m, side, in_a) != 0 {
                                defects.push(at(format!("bad failing F {f}")));
                            }
                        }
                        Witness::Translations { entries } => {
                            for (f, x) in entries {
                                if !holds || f.len() >= k || o.translators(f.mask(), m, side, in_a) >> x & 1 == 0 {
                                    defects.push(at(format!("bad translation {x} for F {f}")));
                                }
                            }
                        }
                        other => defects.push(at(format!("unexpected thickness witness {other:?}"))),
                    }
                    layer.thick[si][vi].push(holds);
                }
            }
            let v = is_small(&g, &a, kappa, Side::Left);
            calls += 1;
            if let Witness::LargeRemainder { large, cover, .. } = &v.witness {
                let rest = large.mask() & !m;
                if o.cover(cover.mask(), large.mask(), Side::Left) != o.full() || o.large(rest, k, Side::Left) {
                    defects.push(at(format!("bad smallness counterexample L={large}")));
                }
            }
            if v.holds() != ol.small[m as usize] {
                defects.push(at(format!("left small {}, oracle disagrees", v.holds())));
            }
            layer.small.push(v.holds());
        }
        library.push(layer);
    }
    Grid { spec, o, inv, oracle, library, defects, calls }
}

/// Counts checks and keeps the first few failures.
#[derive(Default)]
struct Tally {
    checks: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }

    fn finish(self, detail: String) -> Outcome {
        if self.failures.is_empty() {
            Ok(format!("{detail}; {} checks", self.checks))
        } else {
            Err(format!("{} of {} checks failed: {}", self.failed, self.checks, self.failures.join(" | ")))
        }
    }
}

/// The library's own claim record must pass as well.
fn claim(t: &mut Tally, id: &str) {
    let r = run_claim_by_id(id).unwrap();
    t.check(r.status == Status::Pass, || format!("library claim {id}: {:?} {}", r.status, r.detail));
}

fn both_layers(grid: &[Grid]) -> impl Iterator<Item = (&Grid, [&Layer; 2])> {
    grid.iter().flat_map(|g| g.oracle.iter().zip(&g.library).map(move |(o, l)| (g, [o, l])))
}

fn c1(grid: &[Grid]) -> Outcome {
    let mut t = Tally::default();
    let mut subsets = 0;
    for gr in grid {
        for d in &gr.defects {
            t.check(false, || d.clone());
        }
        subsets += 1usize << gr.o.n;
    }
    for (gr, layers) in both_layers(grid) {
        let full = gr.o.full();
        for layer in layers {
            for m in 0..=full {
                for (s, side) in SIDES.iter().enumerate() {
                    let ok = layer.thick[s][1][m as usize] == !layer.large[s][(full & !m) as usize];
                    t.check(ok, || format!("{} kappa={} A={}: duality fails on {}", gr.spec, layer.k, show(gr.o.n, m), side.name()));
                }
            }
        }
    }
    claim(&mut t, "C1");
    let calls: usize = grid.iter().map(|g| g.calls).sum();
    t.finish(format!("{} groups, {subsets} subsets, all kappa, 3 sides; {calls} library verdicts match the oracle", grid.len()))
}

fn c2(grid: &[Grid]) -> Outcome {
    let mut t = Tally::default();
    for gr in grid {
        for layers in [&gr.oracle, &gr.library] {
            for (i, layer) in layers.iter().enumerate() {
                for m in 0..=gr.o.full() as usize {
                    for s in 0..3 {
                        let (in_a, in_g) = (layer.thick[s][0][m], layer.thick[s][1][m]);
                        t.check(!in_a || in_g, || format!("{} kappa={} mask {m}: in-A but not in-G", gr.spec, layer.k));
                        if i > 0 {
                            let below = layers[i - 1].thick[s][0][m];
                            t.check(!in_g || below, || format!("{} kappa={} mask {m}: in-G but not in-A at kappa-1", gr.spec, layer.k));
                        }
                    }
                }
            }
        }
    }
    let g = build_group("cyclic:2").unwrap();
    let a = g.parse_subset("1").unwrap();
    let k2 = Kappa::new(2, 2).unwrap();
    let in_a = is_thick(&g, &a, k2, Side::Left, ThickVariant::WitnessInA).holds();
    let in_g = is_thick(&g, &a, k2, Side::Left, ThickVariant::WitnessInG).holds();
    let o = Finite::new(&g);
    t.check(!in_a && in_g, || format!("cyclic:2 A={{1}} kappa=2: in-A {in_a}, in-G {in_g}"));
    t.check(!o.thick(0b10, 2, Side::Left, true) && o.thick(0b10, 2, Side::Left, false), || "oracle divergence".into());
    claim(&mut t, "C2");
    t.finish("chain in-A(k) => in-G(k) => in-A(k-1) on the grid; cyclic:2 A={1} kappa=2: in-A false, in-G true".into())
}

fn c3(grid: &[Grid]) -> Outcome {
    let mut t = Tally::default();
    let mut boundary = 0;
    for (gr, layers) in both_layers(grid) {
        let n = gr.o.n;
        for layer in layers {
            for m in 0..=gr.o.full() as usize {
                let i = gr.inv[m] as usize;
                let at = |what: &str| format!("{} kappa={} A={}: {what}", gr.spec, layer.k, show(n, m as u64));
                let (l, th) = (&layer.large, &layer.thick);
                t.check(l[0][m] == l[1][i], || at("left large vs right large of inverse"));
                t.check(l[2][m] == l[2][i], || at("two-sided large vs inverse"));
                for v in 0..2 {
                    t.check(th[0][v][m] == th[1][v][i], || at(&format!("{} left thick vs right thick of inverse", VARIANTS[v].name())));
                }
                t.check(!th[2][1][m] || (th[0][1][m] && th[1][1][m]), || at("witness-in-G two-sided thick but not one-sided"));
                if th[2][0][m] && !(th[0][0][m] && th[1][0][m]) {
                    boundary += 1;
                }
                t.check(!(l[0][m] || l[1][m]) || l[2][m], || at("one-sided large but not two-sided"));
                t.check(!layer.small[m] || !l[0][m], || at("small and large"));
            }
        }
    }
    // Witness in A: the identity joins F at the cost of one element.
    for gr in grid {
        for w in gr.library.windows(2) {
            for m in 0..=gr.o.full() as usize {
                let (th, below) = (&w[1].thick, &w[0].thick);
                t.check(!th[2][0][m] || (below[0][0][m] && below[1][0][m]), || {
                    format!("{} kappa={} mask {m}: witness-in-A two-sided thick, not one-sided at kappa-1", gr.spec, w[1].k)
                });
            }
        }
    }
    claim(&mut t, "C3");
    t.finish(format!(
        "inversion, lattice and small => not large on the grid (symmetric:3 and dihedral:4 nonabelian), witnesses re-verified; \
         witness-in-A lattice holds from kappa to kappa-1 (same-kappa form fails on {} boundary cases)",
        boundary / 2
    ))
}

fn c4(grid: &[Grid]) -> Outcome {
    let mut t = Tally::default();
    for (gr, layers) in both_layers(grid) {
        for layer in layers {
            let masks = 0..=gr.o.full();
            let large: Vec<u64> = masks.clone().filter(|&m| layer.large[0][m as usize]).collect();
            for a in masks.filter(|&m| layer.thick[0][1][m as usize]) {
                for &l in &large {
                    t.check(a & l != 0, || format!("{} kappa={}: thick {} misses large {}", gr.spec, layer.k, show(gr.o.n, a), show(gr.o.n, l)));
                }
            }
        }
    }
    claim(&mut t, "C4");
    t.finish("every left thick (in-G) set meets every left large set, oracle and library tables".into())
}

fn oracle_s(w: &[i32]) -> bool {
    w.first().is_some_and(|&x| x.abs() == 1) && w.last().is_some_and(|&x| x.abs() == 1)
}

fn lib_s(m: u32) -> kappa_core::words::WordSetPredicate {
    kappa_core::constructions::s_set(m, 0).unwrap()
}

/// `g ∈ H·A`, decided with oracle arithmetic.
fn covered(g: &[i32], h: &[Word], member: impl Fn(&[i32]) -> bool) -> bool {
    h.iter().any(|x| member(&oracle::mul(&oracle::inv(x), g)))
}

fn c5() -> Outcome {
    let mut t = Tally::default();
    let s = lib_s(2);
    let ball = oracle::ball(&[0, 1], 8);
    let ks: [Word; 3] = [vec![], vec![1], vec![-1]];
    for g in &ball {
        t.check(s.contains(&oracle::to_lib(g)) == oracle_s(g), || format!("S membership of {}", oracle::to_lib(g)));
        let reached = ks.iter().any(|k1| ks.iter().any(|k2| oracle_s(&oracle::mul(&oracle::mul(k1, g), k2))));
        t.check(reached, || format!("{} not sandwiched into S", oracle::to_lib(g)));
    }
    let h3 = oracle::ball(&[0, 1], 3);
    t.check(!covered(&oracle::power(1, 4), &h3, oracle_s), || "bbbb in H·S".into());
    let lib_h3: Vec<ReducedWord> = h3.iter().map(|w| oracle::to_lib(w)).collect();
    t.check(!kappa_core::words::left_covered(&"bbbb".parse().unwrap(), &lib_h3, &s), || "library: bbbb in H·S".into());
    let hab = oracle::ball(&[0, 1], 2);
    t.check(!covered(&[3], &hab, oracle_s), || "c in H·S on m=4".into());
    let lib_hab: Vec<ReducedWord> = hab.iter().map(|w| oracle::to_lib(w)).collect();
    t.check(!kappa_core::words::left_covered(&"c".parse().unwrap(), &lib_hab, &lib_s(4)), || "library: c in H·S".into());
    claim(&mut t, "C5");
    t.finish(format!("m=2 L=8: {} words sandwiched into S; bbbb escapes H=ball(3) ({} words); c escapes H over {{a,b}} radius 2 on m=4", ball.len(), h3.len()))
}

/// Checks that exactly the oracle cell holds each ball word, and that the
/// library partition agrees.
fn check_partition(t: &mut Tally, label: &str, built: &BuiltConstruction, ball: &[Word], cell: impl Fn(&[i32]) -> usize) {
    let BuiltConstruction::Free { construction, .. } = built else {
        t.check(false, || format!("{label}: not a free-group construction"));
        return;
    };
    let cells = &construction.partition.cells;
    for w in ball {
        let lw = oracle::to_lib(w);
        let owners: Vec<usize> = (0..cells.len()).filter(|&i| cells[i].contains(&lw)).collect();
        t.check(owners == [cell(w)], || format!("{label}: {lw} lies in cells {owners:?}, oracle says {}", cell(w)));
    }
}

fn built(name: &str, params: &[(&str, &str)]) -> BuiltConstruction {
    let map: BTreeMap<String, String> = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    BuiltConstruction::build(name, &map, None).unwrap()
}

fn last_gen(w: &[i32]) -> Option<u32> {
    w.last().map(|&x| oracle::gen(x))
}

fn first_gen(w: &[i32]) -> Option<u32> {
    w.first().map(|&x| oracle::gen(x))
}

fn c6() -> Outcome {
    let mut t = Tally::default();
    // B1: last letter in {a, b}; the identity falls in B2.
    let in_b1 = |w: &[i32]| last_gen(w).is_some_and(|g| g < 2);
    let b = built("thm3", &[("m", "4"), ("a1", "ab")]);
    let ball = oracle::ball(&[0, 1, 2, 3], 5);
    check_partition(&mut t, "thm3", &b, &ball, |w| usize::from(!in_b1(w)));
    let h1 = oracle::ball(&[0, 1, 2], 2);
    t.check(!covered(&[4], &h1, in_b1), || "d in H·B1".into());
    let h2 = oracle::ball(&[0, 2, 3], 2);
    t.check(!covered(&[2], &h2, |w| !in_b1(w)), || "b in H·B2".into());
    claim(&mut t, "C6");
    t.finish(format!("m=4 A1={{a,b}}: ball L=5 ({} words) split exactly; d escapes H over abc, b escapes H over acd (radius 2)", ball.len()))
}

fn split3_cell(w: &[i32], parts: &[Vec<u32>; 3]) -> usize {
    let (Some(f), Some(l)) = (first_gen(w), last_gen(w)) else { return 2 };
    let part = |g: u32| parts.iter().position(|p| p.contains(&g)).unwrap();
    let (pf, pl) = (part(f), part(l));
    if pf != 0 && pl != 0 {
        0
    } else if pf != 1 && pl != 1 {
        1
    } else {
        2
    }
}

/// Rank 2: a length-2 end factor is "pure" when both letters are the same
/// generator. B1 has neither end pure in b, B2 neither end pure in a, words
/// shorter than 2 fall in B3.
fn rank2_cell(w: &[i32]) -> usize {
    if w.len() < 2 {
        return 2;
    }
    let ends = [&w[..2], &w[w.len() - 2..]];
    let avoids = |g: u32| ends.iter().all(|e| !e.iter().all(|&x| oracle::gen(x) == g));
    if avoids(1) {
        0
    } else if avoids(0) {
        1
    } else {
        2
    }
}

fn rank1_cell(n: i64) -> usize {
    if n == 0 {
        1
    } else {
        (n.unsigned_abs().ilog2() % 2) as usize
    }
}

fn c7() -> Outcome {
    let mut t = Tally::default();
    let mut detail = Vec::new();
    for (m, split, radius) in [(3u32, "a/b/c", 6usize), (6, "ab/cd/ef", 4)] {
        let parts: [Vec<u32>; 3] = std::array::from_fn(|i| ((i as u32 * m / 3)..((i as u32 + 1) * m / 3)).collect());
        let b = built("c1-split3", &[("m", &m.to_string()), ("split", split)]);
        let gens: Vec<u32> = (0..m).collect();
        let ball = oracle::ball(&gens, radius);
        check_partition(&mut t, &format!("split3 m={m}"), &b, &ball, |w| split3_cell(w, &parts));
        detail.push(format!("split3 m={m} L={radius} ({} words)", ball.len()));
    }
    let b = built("c1-rank2", &[]);
    let ball = oracle::ball(&[0, 1], 8);
    check_partition(&mut t, "rank2", &b, &ball, rank2_cell);
    detail.push(format!("rank2 L=8 ({} words)", ball.len()));
    let h = oracle::ball(&[0, 1], 2);
    let ab: Word = [1, 2].repeat(6);
    for (i, w) in [(0, oracle::power(1, 6)), (1, oracle::power(0, 6)), (2, ab)] {
        t.check(!covered(&w, &h, |x| rank2_cell(x) == i), || format!("rank2 witness for B{} is covered", i + 1));
    }
    match b.report(Some(8)) {
        Ok(r) => t.check(r.all_escape(), || format!("rank2 witnesses {:?}", r.witnesses)),
        Err(e) => t.check(false, || e.to_string()),
    }
    let b = built("c1-rank1", &[]);
    let BuiltConstruction::Free { construction, .. } = &b else { unreachable!() };
    for n in -64i64..=64 {
        let w = ReducedWord::generator_power(0, n);
        let owners: Vec<usize> = (0..2).filter(|&i| construction.partition.cells[i].contains(&w)).collect();
        t.check(owners == [rank1_cell(n)], || format!("rank1: a^{n} lies in {owners:?}"));
    }
    detail.push("rank1 radius 64 (129 words)".into());
    match b.report(Some(64)) {
        Ok(r) => t.check(r.all_escape(), || format!("rank1 witnesses {:?}", r.witnesses)),
        Err(e) => t.check(false, || e.to_string()),
    }
    claim(&mut t, "C7");
    t.finish(format!("{}; rank2 witnesses b^6, a^6, (ab)^6 escape H = ball(2)", detail.join(", ")))
}

fn c8() -> Outcome {
    let mut t = Tally::default();
    let g = build_group("cyclic:8").unwrap();
    let o = Finite::new(&g);
    let mut qualifying = 0;
    for p in oracle::set_partitions(8).into_iter().filter(|p| p.len() == 2) {
        if p.iter().any(|&c| o.large(c, 3, Side::Left)) {
            continue;
        }
        qualifying += 1;
        let mut meet: Vec<u64> =
            p.iter().flat_map(|&a| p.iter().map(move |&b| (a, b))).map(|(a, b)| a & o.inverse(b)).filter(|&c| c != 0).collect();
        meet.sort_by_key(|c| c.trailing_zeros());
        for &c in &meet {
            for s in [Side::Left, Side::Right] {
                t.check(!o.large(c, 3, s), || format!("meet cell {} is {} large", show(8, c), s.name()));
            }
        }
        let part = Partition::new(8, p.iter().map(|&c| Subset::from_mask(8, c)).collect(), "pair").unwrap();
        let lib: Vec<u64> = meet_partition(&g, &part).unwrap().cells().iter().map(Subset::mask).collect();
        t.check(lib == meet, || format!("library meet of {part} differs"));
    }
    claim(&mut t, "C8");
    t.finish(format!("cyclic:8 kappa=3: {qualifying} of 127 two-cell partitions qualify; every meet cell non-large on both sides"))
}

fn c9() -> Outcome {
    let mut t = Tally::default();
    let mut count = 0;
    for spec in ["cyclic:6", "cyclic:8"] {
        let g = build_group(spec).unwrap();
        let o = Finite::new(&g);
        let n = o.n;
        for k in [3, 4] {
            let kappa = Kappa::new(k, n).unwrap();
            let qualifying: Vec<u64> = (0..=o.full()).filter(|&m| o.thick(m, k, Side::Left, false)).collect();
            // Every canonical block cover: consecutive blocks of each admissible size.
            for block in 1..k {
                let cover = CoverDecomposition::blocks(&g, block, kappa).unwrap();
                for &m in &qualifying {
                    count += 1;
                    let a = Subset::from_mask(n, m);
                    match thick_to_large_witness(&g, &a, &cover) {
                        Ok(w) => {
                            let ok = o.cover(w.f.mask(), m, Side::Right) == o.full() && w.f.len() <= cover.cells().len();
                            t.check(ok, || format!("{spec} kappa={k} A={a} blocks={block}: F={}", w.f));
                        }
                        Err(e) => t.check(false, || format!("{spec} kappa={k} A={a}: {e}")),
                    }
                }
            }
        }
    }
    claim(&mut t, "C9");
    t.finish(format!("cyclic:6 and cyclic:8, kappa 3 and 4, all block covers: {count} conversions give A·F = G with |F| <= cells"))
}

fn c10() -> Outcome {
    let mut t = Tally::default();
    let groups = ["cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "product:cyclic:2+cyclic:2", "symmetric:3"];
    for spec in groups {
        let g = build_group(spec).unwrap();
        let o = Finite::new(&g);
        let parts = oracle::set_partitions(o.n);
        for k in 2..=o.n {
            let kappa = Kappa::new(k, o.n).unwrap();
            for mode in [ResMode::Left, ResMode::LeftRight] {
                let ok = |c: &u64| o.large(*c, k, Side::Left) && (mode == ResMode::Left || o.large(*c, k, Side::Right));
                let expect = parts.iter().filter(|p| p.iter().all(ok)).map(Vec::len).max().unwrap_or(0);
                let r = res_search(&g, kappa, mode, &mut Budget::default());
                t.check(r.optimal && r.cells == expect, || format!("{spec} kappa={k} {mode:?}: {} vs oracle {expect}", r.cells));
                let cells_ok = r.best.cells().iter().all(|c| ok(&c.mask()));
                t.check(cells_ok && r.best.len() == r.cells, || format!("{spec} kappa={k}: best partition {} invalid", r.best));
            }
        }
    }
    let mut values = Vec::new();
    for (spec, k, expect) in [("cyclic:4", 3, 2), ("cyclic:4", 2, 1), ("cyclic:6", 4, 3)] {
        let g = build_group(spec).unwrap();
        let r = res_search(&g, Kappa::new(k, g.order()).unwrap(), ResMode::Left, &mut Budget::default());
        t.check(r.cells == expect, || format!("res_left({spec},{k}) = {}", r.cells));
        values.push(format!("res_left({spec},{k})={}", r.cells));
    }
    claim(&mut t, "C10");
    t.finish(format!("all groups of order <= 6 against every set partition, both modes; {}", values.join(", ")))
}

fn c11() -> Outcome {
    let mut t = Tally::default();
    let g = build_group("cyclic:6").unwrap();
    let o = Finite::new(&g);
    let k3 = Kappa::new(3, 6).unwrap();
    let thick = |c: u64, s: Side| o.thick(c, 3, s, false);
    let exists: Vec<Vec<u64>> = oracle::set_partitions(6)
        .into_iter()
        .filter(|p| p.len() == 2 && p.iter().all(|&c| thick(c, Side::Left)))
        .collect();
    t.check(exists.contains(&vec![0b001011, 0b110100]), || "oracle: {0,1,3}/{2,4,5} is not two-thick".into());
    let target = Target::AllThick { side: Side::Left, variant: ThickVariant::WitnessInG };
    let mut found = String::new();
    match partition_search(&g, k3, 2, target, &mut Budget::default()).unwrap() {
        PartitionSearch::Found { partition, .. } => {
            t.check(partition.cells().iter().all(|c| thick(c.mask(), Side::Left)), || format!("{partition} not verified"));
            found = partition.to_string();
        }
        other => t.check(false, || format!("search gave {other:?}")),
    }
    let two_sided = oracle::set_partitions(6).iter().any(|p| p.len() == 2 && p.iter().all(|&c| thick(c, Side::TwoSided)));
    let target = Target::AllThick { side: Side::TwoSided, variant: ThickVariant::WitnessInG };
    let lib = matches!(partition_search(&g, k3, 2, target, &mut Budget::default()).unwrap(), PartitionSearch::NoneExists { .. });
    t.check(lib == !two_sided, || "two-sided search disagrees with the oracle".into());
    claim(&mut t, "C11");
    t.finish(format!(
        "cyclic:6 kappa=3: search found {found}; oracle lists {} left two-thick partitions; finite groups admit thick partitions, unlike the singular case",
        exists.len()
    ))
}

/// Support of a tuple of oracle words.
fn support(x: &[Word]) -> Vec<usize> {
    (0..x.len()).filter(|&i| !x[i].is_empty()).collect()
}

fn c12() -> Outcome {
    let mut t = Tally::default();
    // Summand 0 uses a, b; summand 1 uses c, d.
    let comps = [oracle::ball(&[0, 1], 3), oracle::ball(&[2, 3], 3)];
    let elems: Vec<[Word; 2]> = comps[0].iter().flat_map(|u| comps[1].iter().map(move |v| [u.clone(), v.clone()])).collect();
    for x in &elems {
        let sx = support(x);
        for g in &elems {
            let c: Vec<Word> = (0..2).map(|i| oracle::mul(&oracle::mul(&oracle::inv(&g[i]), &x[i]), &g[i])).collect();
            if support(&c) != sx {
                t.check(false, || format!("support changes for {:?} under {:?}", x, g));
            }
        }
    }
    t.checks += (elems.len() * elems.len()) as u64;
    let ds = DsAlphabet::new(&[2, 2]).unwrap();
    let lib: Vec<DsWord> = ds.ball(3).unwrap();
    t.check(lib.len() == elems.len(), || format!("library ball has {} elements, oracle {}", lib.len(), elems.len()));
    let b = built("c2-ds", &[("summands", "2"), ("sizes", "2,2"), ("marks", "a,c")]);
    match &b {
        BuiltConstruction::DirectSum { construction, .. } => {
            let w = &construction.witnesses[0];
            t.check(w.word.to_string() == "(1, d)", || format!("B-set witness {}", w.word));
        }
        _ => t.check(false, || "c2-ds is not a direct sum".into()),
    }
    let r = b.report(Some(3)).unwrap();
    t.check(r.all_escape(), || format!("B-set witnesses {:?}", r.witnesses));
    claim(&mut t, "C12");
    t.finish(format!("t=2, sizes 2,2, radius 3: {} elements, {} conjugations; B-set witness (1, d) escapes", elems.len(), elems.len().pow(2)))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let grid: Vec<Grid> = GRID.iter().map(|&s| build_grid(s)).collect();
    let criteria: [(&str, Criterion); 12] = [
        ("duality", Box::new(|| c1(&grid))),
        ("variant chain and divergence", Box::new(|| c2(&grid))),
        ("inversion and implication lattice", Box::new(|| c3(&grid))),
        ("meets", Box::new(|| c4(&grid))),
        ("S-set", Box::new(c5)),
        ("last-letter partition", Box::new(c6)),
        ("three-cell partitions", Box::new(c7)),
        ("meet property", Box::new(c8)),
        ("thick to large", Box::new(c9)),
        ("resolvability", Box::new(c10)),
        ("finite partition probe", Box::new(c11)),
        ("direct sums", Box::new(c12)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (status, detail) = match run() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status} {name} ({:.1}s): {detail}", i + 1, t.elapsed().as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed in {:.1}s", 12 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
