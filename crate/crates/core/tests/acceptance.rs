//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prismcolor::campaign::{
    verify_choice_number, verify_equitable, CampaignConfig, EquitableReport, Mode,
};
use prismcolor::discharging::{apply_rules, block_charges, blue_pattern, total_charge, Charge};
use prismcolor::lists::{Color, ListAssignment};
use prismcolor::prism::Prism;
use prismcolor::reductions::blocks::{block_decompose, BlockSequence};
use prismcolor::reductions::{
    apply_move, assert_config_free, builtin_configs, planted_fixture, MatchOptions, MoveOutcome,
};
use prismcolor::solver::{all_proper_colorings, lexmin, prism_independence_number, Coloring};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn within(out: Outcome, elapsed: Duration, limit: Duration) -> Outcome {
    if out.ok && elapsed > limit {
        return fail(format!("{} but took {elapsed:.2?} > {limit:?}", out.detail));
    }
    out
}

fn ceil_two_thirds(n: usize) -> usize {
    (2 * n).div_ceil(3)
}

// Oracles written against raw adjacency so they share nothing with the
// library's own checks.

fn adjacency(n: usize) -> Vec<Vec<usize>> {
    let id = |layer: usize, i: usize| 2 * (i % n) + layer;
    (0..2 * n)
        .map(|v| {
            let (i, layer) = (v / 2, v % 2);
            vec![id(layer, i + n - 1), id(layer, i + 1), id(1 - layer, i)]
        })
        .collect()
}

fn oracle_proper(n: usize, colors: &[Color]) -> bool {
    let adj = adjacency(n);
    (0..2 * n).all(|v| adj[v].iter().all(|&u| colors[u] != colors[v]))
}

fn oracle_word(colors: &[Color]) -> Vec<usize> {
    let mut counts = std::collections::HashMap::new();
    for &c in colors {
        *counts.entry(c).or_insert(0usize) += 1;
    }
    let mut w: Vec<usize> = counts.into_values().collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

/// Lexicographic comparison with zero padding.
fn oracle_less(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let pad = |w: &[usize]| {
        let mut w = w.to_vec();
        w.resize(len, 0);
        w
    };
    pad(a) < pad(b)
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let mut certs = 0;
    for n in 3..=10 {
        let r = match verify_choice_number(n) {
            Ok(r) => r,
            Err(e) => return fail(format!("n={n}: {e}")),
        };
        if !r.passed() {
            return fail(format!("n={n}: {:?}", r.failures));
        }
        let verdicts: Vec<&str> = r.certificates.iter().map(|c| c.verdict()).collect();
        if verdicts != ["unsat", "sat"] || r.certificates.iter().any(|c| c.check().is_err()) {
            return fail(format!("n={n}: unexpected certificates {verdicts:?}"));
        }
        certs += r.certificates.len();
    }
    within(pass(format!("n=3..10, {certs} certificates re-checked")), t.elapsed(), Duration::from_secs(10))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let mut got = Vec::new();
    for n in [3, 4, 5] {
        match prism_independence_number(&Prism::new(n).unwrap()) {
            Ok(a) => got.push(a),
            Err(e) => return fail(e.to_string()),
        }
    }
    let out = if got == [2, 4, 4] {
        pass(format!("alpha(Pi3, Pi4, Pi5) = {got:?}"))
    } else {
        fail(format!("alpha(Pi3, Pi4, Pi5) = {got:?}, want [2, 4, 4]"))
    };
    within(out, t.elapsed(), Duration::from_secs(1))
}

fn equitable(cfg: CampaignConfig) -> Result<Vec<EquitableReport>, Outcome> {
    verify_equitable(&cfg).map_err(|e| fail(e.to_string()))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let sampled = match equitable(CampaignConfig {
        ns: vec![4, 5],
        mode: Mode::Sample,
        samples: 100_000,
        universe: 6,
        seed: 1,
        ..CampaignConfig::default()
    }) {
        Ok(r) => r,
        Err(o) => return o,
    };
    for (r, bound) in sampled.iter().zip([3, 4]) {
        if !r.passed() || r.bound != bound || r.max_class > bound || r.assignments != 100_000 {
            return fail(format!("n={}: {}", r.n, r.to_text().replace('\n', " ")));
        }
    }
    let exhaustive = match equitable(CampaignConfig {
        ns: vec![3],
        mode: Mode::Exhaustive,
        universe: 6,
        ..CampaignConfig::default()
    }) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let r = &exhaustive[0];
    if !r.passed() || r.max_class > 2 {
        return fail(format!("n=3: {}", r.to_text().replace('\n', " ")));
    }
    within(
        pass(format!(
            "Pi4, Pi5: 2 x 100000 samples, max class {} and {}; Pi3: universe cap {}, {} orbits from {} normalized assignments, max class {}",
            sampled[0].max_class,
            sampled[1].max_class,
            r.universe,
            r.assignments,
            r.generated.unwrap_or(0),
            r.max_class
        )),
        t.elapsed(),
        Duration::from_secs(300),
    )
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let reports = match equitable(CampaignConfig {
        ns: vec![6, 7, 8],
        mode: Mode::Sample,
        samples: 10_000,
        universe: 6,
        seed: 1,
        ..CampaignConfig::default()
    }) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let mut maxes = Vec::new();
    for r in &reports {
        // Every coloring must come from exact lexmin, not the fallback.
        if !r.passed() || r.inexact != 0 || r.bound != ceil_two_thirds(r.n) || r.max_class > r.bound {
            return fail(format!("n={}: {}", r.n, r.to_text().replace('\n', " ")));
        }
        maxes.push(r.max_class);
    }
    within(
        pass(format!("n=6,7,8: 3 x 10000 exact lexmin colorings, max classes {maxes:?}")),
        t.elapsed(),
        Duration::from_secs(1800),
    )
}

/// A random proper coloring that leans on color 0.
fn random_proper_coloring(n: usize, rng: &mut ChaCha8Rng) -> Vec<Color> {
    let adj = adjacency(n);
    let palette: Color = rng.gen_range(3..=7);
    let lean = rng.gen_range(0.0..1.0);
    let mut order: Vec<usize> = (0..2 * n).collect();
    order.shuffle(rng);
    let mut colors = vec![Color::MAX; 2 * n];
    for v in order {
        let free: Vec<Color> = (0..palette).filter(|&c| adj[v].iter().all(|&u| colors[u] != c)).collect();
        colors[v] = if free.contains(&0) && rng.gen_bool(lean) {
            0
        } else {
            // Cubic graph: with at least 4 colors one is always free; with
            // 3 colors fall back to a fresh one.
            free.choose(rng).copied().unwrap_or(palette)
        };
    }
    colors
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut over, mut checked) = (0u64, 0u64);
    for i in 0..100_000u64 {
        let n = 6 + (i % 7) as usize;
        let colors = random_proper_coloring(n, &mut rng);
        if !oracle_proper(n, &colors) {
            return fail("generator produced an improper coloring");
        }
        let p = Prism::new(n).unwrap();
        let c = Coloring::new(colors.clone());
        let blue = *c.largest_colors().first().unwrap();
        let blue_count = colors.iter().filter(|&&x| x == blue).count();
        // Oracle in thirds: vertices 3(1 - blue nbrs), faces 4 - 3(blue on face).
        let adj = adjacency(n);
        let mut thirds: i64 = 0;
        for v in 0..2 * n {
            thirds += 3 - 3 * adj[v].iter().filter(|&&u| colors[u] == blue).count() as i64;
        }
        for i in 0..n {
            let j = (i + 1) % n;
            let face = [2 * i, 2 * j, 2 * j + 1, 2 * i + 1];
            thirds += 4 - 3 * face.iter().filter(|&&v| colors[v] == blue).count() as i64;
        }
        let formula = 10 * n as i64 - 15 * blue_count as i64;
        let total = match total_charge(&p, &c, blue) {
            Ok(t) => t,
            Err(e) => return fail(e.to_string()),
        };
        if thirds != formula || total != Charge::thirds(formula) {
            return fail(format!("n={n}: oracle {thirds}/3, library {total}, formula {formula}/3"));
        }
        if blue_count > ceil_two_thirds(n) {
            over += 1;
            if total >= Charge::ZERO {
                return fail(format!("n={n}: |Blue|={blue_count} but total {total}"));
            }
        }
        checked += 1;
    }
    if over == 0 {
        return fail("no coloring exceeded the bound; the negativity check never ran");
    }
    within(
        pass(format!("{checked} colorings on n=6..12 match 10n/3 - 5|Blue|; {over} above the bound, all negative")),
        t.elapsed(),
        Duration::from_secs(60),
    )
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=30);
        let kinds: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=3)).collect();
        let seq = BlockSequence::from_kinds(&kinds).unwrap();
        let init: Vec<Charge> = (0..len).map(|_| Charge::thirds(rng.gen_range(-50..=50))).collect();
        let (fin, log) = apply_rules(&seq, &init);
        let before: i64 = init.iter().map(|c| c.numerator()).sum();
        let after: i64 = fin.iter().map(|c| c.numerator()).sum();
        let expected = kinds.iter().filter(|&&k| k == 0 || k == 3).count();
        if before != after || log.len() != expected {
            return fail(format!("rules on {kinds:?}: {before} -> {after}"));
        }
    }
    // (kinds, block under test, expected thirds before, after the rules)
    let table: [(&[usize], usize, i64, Option<i64>); 12] = [
        (&[0, 0, 0], 1, 10, Some(10)), // B0, left B0
        (&[1, 0, 0], 1, 7, Some(10)),  // B0, left not B0
        (&[0, 1, 0], 1, 8, Some(5)),   // B1, left B0
        (&[2, 1, 0], 1, 5, Some(5)),   // B1, left not B0
        (&[0, 2, 0], 1, 3, Some(0)),   // B2, left B0
        (&[1, 2, 0], 1, 0, Some(0)),   // B2, left not B0
        (&[0, 3, 0], 1, -2, Some(0)),  // B3, left B0
        (&[1, 3, 0], 1, -5, Some(0)),  // B3, left not B0
        (&[3, 0, 0], 1, 7, Some(5)),   // B0, left B3
        (&[3, 1, 0], 1, 5, Some(0)),   // B1, left B3
        (&[2, 2, 0], 1, 0, Some(0)),   // B2 after the rules
        (&[0, 3, 1], 1, -2, Some(0)),  // B3 after the rules
    ];
    let (mut pre, mut post) = (0, 0);
    for (kinds, i, before, after) in table {
        let (p, c) = blue_pattern(kinds).unwrap();
        if !oracle_proper(p.n(), c.colors()) {
            return fail(format!("fixture {kinds:?} is not proper"));
        }
        let seq = match block_decompose(&p, &c, 0) {
            Ok(s) => s,
            Err(e) => return fail(format!("{kinds:?}: {e}")),
        };
        if seq.kinds() != kinds {
            return fail(format!("{kinds:?} decomposed as {:?}", seq.kinds()));
        }
        let init = block_charges(&p, &c, 0, &seq);
        let total: Charge = init.iter().copied().sum();
        if total != total_charge(&p, &c, 0).unwrap() {
            return fail(format!("{kinds:?}: blocks do not partition the charge"));
        }
        let (fin, _) = apply_rules(&seq, &init);
        if init[i] != Charge::thirds(before) {
            return fail(format!("{kinds:?}: block {i} starts at {}, want {before}/3", init[i]));
        }
        pre += 1;
        if let Some(a) = after {
            if fin[i] != Charge::thirds(a) {
                return fail(format!("{kinds:?}: block {i} ends at {}, want {a}/3", fin[i]));
            }
            post += 1;
        }
    }
    within(
        pass(format!("10000 random sequences conserve charge; {pre} initial and {post} final table values reproduced")),
        t.elapsed(),
        Duration::from_secs(60),
    )
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let configs = builtin_configs();
    let mut per_config = Vec::new();
    for cfg in &configs {
        let mut applied = 0;
        for seed in 0..100u64 {
            let f = match planted_fixture(cfg, 7_000 + seed) {
                Ok(f) => f,
                Err(e) => return fail(format!("{}: {e}", cfg.name)),
            };
            let out = match apply_move(&f.prism, &f.lists, &f.coloring, cfg, &f.placement) {
                Ok(o) => o,
                Err(e) => return fail(format!("{} seed {seed}: {e}", cfg.name)),
            };
            let MoveOutcome::Applied { coloring, .. } = out else {
                return fail(format!("{} seed {seed}: no move applies", cfg.name));
            };
            let n = f.prism.n();
            let in_lists = (0..2 * n).all(|v| f.lists.list(v).contains(&coloring.color(v)));
            let smaller = oracle_less(&oracle_word(coloring.colors()), &oracle_word(f.coloring.colors()));
            if !oracle_proper(n, coloring.colors()) || !in_lists || !smaller {
                return fail(format!("{} seed {seed}: bad move result", cfg.name));
            }
            applied += 1;
        }
        per_config.push(format!("{}:{applied}", cfg.name));
    }
    let relaxed = MatchOptions { hypothesis: false };
    let mut lexmins = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for n in [4, 6, 7, 8] {
        let p = Prism::new(n).unwrap();
        for _ in 0..250 {
            let l = ListAssignment::random_with(2 * n, 3, rng.gen_range(3..=6), &mut rng).unwrap();
            let c = lexmin(&p, &l).unwrap().coloring;
            match assert_config_free(&p, &c, &l, &configs, relaxed) {
                Ok(r) if r.is_empty() => lexmins += 1,
                Ok(r) => return fail(format!("lexmin on n={n} improved by {}", r.hits[0].config)),
                Err(e) => return fail(e.to_string()),
            }
        }
    }
    within(
        pass(format!(
            "100 fixtures each, all applied ({}); {lexmins} exact lexmin colorings config-free",
            per_config.join(" ")
        )),
        t.elapsed(),
        Duration::from_secs(600),
    )
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut total = 0;
    for n in 3..=6 {
        let p = Prism::new(n).unwrap();
        for _ in 0..1000 {
            let universe = rng.gen_range(3..=6);
            let l = ListAssignment::random_with(2 * n, 3, universe, &mut rng).unwrap();
            let mut best: Option<Vec<usize>> = None;
            for c in all_proper_colorings(&p, &l).unwrap() {
                let w = oracle_word(c.colors());
                if best.as_ref().map_or(true, |b| oracle_less(&w, b)) {
                    best = Some(w);
                }
            }
            let got = lexmin(&p, &l).unwrap().word;
            let got: Vec<usize> = got.entries().iter().map(|&x| x as usize).collect();
            if Some(&got) != best.as_ref() {
                return fail(format!("n={n}: branch and bound {got:?}, enumeration {best:?}"));
            }
            total += 1;
        }
    }
    within(
        pass(format!("{total} assignments on n=3..6 agree exactly")),
        t.elapsed(),
        Duration::from_secs(600),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("choice number", criterion_1),
        ("independence numbers", criterion_2),
        ("small-prism equitability", criterion_3),
        ("lexmin bound on n=6..8", criterion_4),
        ("charge identity", criterion_5),
        ("discharging mechanics", criterion_6),
        ("move soundness", criterion_7),
        ("oracle equivalence", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("criterion {} {tag} {name} [{:.2?}]: {}", i + 1, t.elapsed(), out.detail);
        failed += usize::from(!out.ok);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
