//! Verification campaigns: choice number, equitable colorings, and the
//! lemma suite.

use std::fmt::Write as _;

use rand::Rng;

use crate::campaign::certificate::{Certificate, Witness};
use crate::campaign::exec::run_indexed;
use crate::canon::enumerate_orbits;
use crate::discharging::{apply_rules, audit, block_charges, blue_pattern, charge_formula, table_fixtures, Charge};
use crate::error::{Error, Result};
use crate::lists::{Color, ListAssignment};
use crate::prism::Prism;
use crate::reductions::blocks::{block_decompose, BlockSequence};
use crate::reductions::fixtures::planted_fixture;
use crate::reductions::matching::MatchOptions;
use crate::reductions::moves::{apply_move, assert_config_free, MoveOutcome};
use crate::reductions::pattern::builtin_configs;
use crate::reductions::window::window_improve;
use crate::solver::coloring::{equitable_bound, is_proper, respects_lists, Coloring};
use crate::solver::equitable::equitable_coloring_with;
use crate::solver::lexmin::{lexmin_with, LexMinConfig};
use crate::solver::search::{solve_proper, SolveOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sample => "sample",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub ns: Vec<usize>,
    pub mode: Mode,
    pub samples: u64,
    /// Color universe for sampling, or the cap for exhaustive sweeps.
    pub universe: usize,
    pub seed: u64,
    pub jobs: usize,
    pub node_limit: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            ns: vec![6],
            mode: Mode::Sample,
            samples: 1000,
            universe: 6,
            seed: 1,
            jobs: 0,
            node_limit: LexMinConfig::default().node_limit,
        }
    }
}

impl CampaignConfig {
    fn lexmin_config(&self) -> LexMinConfig {
        LexMinConfig { node_limit: self.node_limit, ..LexMinConfig::default() }
    }
}

// ---------------------------------------------------------------------------
// Choice number

/// Two-list assignment on four consecutive rungs (scan order `U0, V0, ...,
/// U3, V3`) with no proper coloring.
pub const LADDER_LISTS: [[Color; 2]; 8] = [[0, 1], [0, 1], [0, 1], [0, 2], [1, 2], [1, 2], [0, 2], [0, 1]];

/// The adversarial 2-list assignment: identical `{0,1}` lists for odd `n`;
/// for even `n` the ladder lists on rungs 0 to 3 and `{0,1}` elsewhere.
pub fn two_list_assignment(p: &Prism) -> Result<ListAssignment> {
    let mut lists = vec![vec![0, 1]; p.vertex_count()];
    if p.n() % 2 == 0 {
        for (v, l) in LADDER_LISTS.iter().enumerate() {
            lists[v] = l.to_vec();
        }
    }
    ListAssignment::new(lists)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceReport {
    pub n: usize,
    pub certificates: Vec<Certificate>,
    pub failures: Vec<String>,
}

impl ChoiceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn certify(claim: String, p: &Prism, l: ListAssignment, want_sat: bool) -> (Certificate, Option<String>) {
    let witness = match solve_proper(p, &l) {
        SolveOutcome::Sat(coloring) => Witness::Sat { coloring, bound: None },
        SolveOutcome::Unsat(r) => Witness::Unsat(r),
    };
    let cert = Certificate { claim, prism: p.clone(), lists: l, witness };
    let problem = if matches!(cert.witness, Witness::Sat { .. }) != want_sat {
        Some(format!("{}: expected {}, found {}", cert.claim, if want_sat { "sat" } else { "unsat" }, cert.verdict()))
    } else {
        cert.check().err().map(|e| format!("{}: certificate does not check: {e}", cert.claim))
    };
    (cert, problem)
}

/// Certificates that some 2-list assignment is uncolorable and identical
/// 3-lists are colorable.
pub fn verify_choice_number(n: usize) -> Result<ChoiceReport> {
    let p = Prism::new(n)?;
    let parity = if n % 2 == 0 { "EVEN" } else { "ODD" };
    let runs = [
        (format!("CH3-UNSAT-{parity}-N{n}"), two_list_assignment(&p)?, false),
        (format!("CH3-SAT-N{n}"), ListAssignment::uniform(&p, &[0, 1, 2])?, true),
    ];
    let mut report = ChoiceReport { n, certificates: Vec::new(), failures: Vec::new() };
    for (claim, l, want_sat) in runs {
        let (cert, problem) = certify(claim, &p, l, want_sat);
        report.certificates.push(cert);
        report.failures.extend(problem);
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Equitable colorings

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitableReport {
    pub n: usize,
    pub mode: Mode,
    pub universe: usize,
    pub assignments: u64,
    /// Normalized assignments generated before symmetry reduction.
    pub generated: Option<u64>,
    pub bound: usize,
    pub max_class: usize,
    /// Colorings from the window engine rather than exact lexmin.
    pub inexact: u64,
    pub failures: Vec<String>,
}

impl EquitableReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "mode={}", self.mode.name());
        let key = if self.mode == Mode::Exhaustive { "universe_cap" } else { "universe" };
        let _ = writeln!(out, "{key}={}", self.universe);
        if self.mode == Mode::Exhaustive {
            let _ = writeln!(out, "orbits={}", self.assignments);
        } else {
            let _ = writeln!(out, "assignments={}", self.assignments);
        }
        if let Some(g) = self.generated {
            let _ = writeln!(out, "generated={g}");
        }
        let _ = writeln!(out, "bound={}", self.bound);
        let _ = writeln!(out, "max_class={}", self.max_class);
        let _ = writeln!(out, "inexact={}", self.inexact);
        let _ = writeln!(out, "failures={}", self.failures.len());
        for f in &self.failures {
            let _ = writeln!(out, "failure {}", f.replace('\n', " | "));
        }
        out
    }
}

type Checked = std::result::Result<(usize, bool), String>;

fn check_equitable(p: &Prism, l: &ListAssignment, cfg: &LexMinConfig) -> Checked {
    match equitable_coloring_with(p, l, cfg) {
        Ok(out) => {
            let bound = equitable_bound(p.n());
            if !is_proper(p, &out.coloring) || !respects_lists(l, &out.coloring) || out.coloring.max_class() > bound {
                return Err(format!("unchecked coloring for\n{}", crate::text::write_assignment(p, l)));
            }
            Ok((out.coloring.max_class(), out.exact))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn summarize(n: usize, mode: Mode, universe: usize, generated: Option<u64>, results: Vec<Checked>) -> EquitableReport {
    let mut r = EquitableReport {
        n,
        mode,
        universe,
        assignments: results.len() as u64,
        generated,
        bound: equitable_bound(n),
        max_class: 0,
        inexact: 0,
        failures: Vec::new(),
    };
    for res in results {
        match res {
            Ok((m, exact)) => {
                r.max_class = r.max_class.max(m);
                r.inexact += u64::from(!exact);
            }
            Err(e) => r.failures.push(e),
        }
    }
    r
}

/// One report per `n`. Exhaustive mode sweeps canonical assignments with
/// colors from a universe of `cfg.universe`; sample mode draws
/// `cfg.samples` seeded assignments.
pub fn verify_equitable(cfg: &CampaignConfig) -> Result<Vec<EquitableReport>> {
    let lex = cfg.lexmin_config();
    let mut reports = Vec::new();
    for &n in &cfg.ns {
        let p = Prism::new(n)?;
        let report = match cfg.mode {
            Mode::Exhaustive => {
                let orbits = enumerate_orbits(&p, 3, cfg.universe)?;
                let results = run_indexed(orbits.orbits.len() as u64, cfg.seed, cfg.jobs, |i, _| {
                    let l = orbits.orbits[i as usize].to_assignment(3).map_err(|e| e.to_string())?;
                    check_equitable(&p, &l, &lex)
                });
                summarize(n, Mode::Exhaustive, cfg.universe, Some(orbits.generated), results)
            }
            Mode::Sample => {
                let results = run_indexed(cfg.samples, cfg.seed, cfg.jobs, |_, rng| {
                    let l = ListAssignment::random_with(p.vertex_count(), 3, cfg.universe, rng)
                        .map_err(|e| e.to_string())?;
                    check_equitable(&p, &l, &lex)
                });
                summarize(n, Mode::Sample, cfg.universe, None, results)
            }
        };
        reports.push(report);
    }
    Ok(reports)
}

// ---------------------------------------------------------------------------
// Lemma suite

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaSuiteConfig {
    pub n: usize,
    pub samples: u64,
    pub universe: usize,
    pub seed: u64,
    pub jobs: usize,
    pub fixtures_per_config: u64,
    /// Corrupts one move result so the harness must report a failure.
    pub inject_violation: bool,
}

impl Default for LemmaSuiteConfig {
    fn default() -> Self {
        LemmaSuiteConfig {
            n: 6,
            samples: 1000,
            universe: 6,
            seed: 1,
            jobs: 0,
            fixtures_per_config: 100,
            inject_violation: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupReport {
    pub name: &'static str,
    pub checked: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl GroupReport {
    fn new(name: &'static str) -> Self {
        GroupReport { name, ..GroupReport::default() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub n: usize,
    pub groups: Vec<GroupReport>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(GroupReport::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for g in &self.groups {
            let _ = writeln!(
                out,
                "group {} checked={} failures={} {}",
                g.name,
                g.checked,
                g.failures.len(),
                if g.passed() { "PASS" } else { "FAIL" }
            );
            for note in &g.notes {
                let _ = writeln!(out, "  note {note}");
            }
            for f in g.failures.iter().take(5) {
                let _ = writeln!(out, "  failure {}", f.replace('\n', " | "));
            }
        }
        out
    }
}

/// A move result is acceptable when it is proper, stays in the lists and
/// lowers the word.
pub fn validate_move(p: &Prism, l: &ListAssignment, before: &Coloring, after: &Coloring) -> std::result::Result<(), String> {
    if !is_proper(p, after) {
        return Err("result is not proper".into());
    }
    if !respects_lists(l, after) {
        return Err("result leaves the lists".into());
    }
    if after.word() >= before.word() {
        return Err(format!("word {} does not drop below {}", after.word(), before.word()));
    }
    Ok(())
}

/// Sum over the `n` six-rung windows of the red and blue vertices inside.
pub fn window_count(p: &Prism, c: &Coloring, colors: &[Color]) -> Result<usize> {
    Ok(p.windows(6)?
        .iter()
        .map(|w| w.vertices().iter().filter(|&&v| colors.contains(&c.color(v))).count())
        .sum())
}

fn group_moves(cfg: &LemmaSuiteConfig, lexmins: &[(ListAssignment, Coloring)], p: &Prism) -> Result<GroupReport> {
    let mut g = GroupReport::new("moves");
    let configs = builtin_configs();
    let mut injected = !cfg.inject_violation;
    for (ci, config) in configs.iter().enumerate() {
        let results = run_indexed(cfg.fixtures_per_config, cfg.seed ^ ((ci as u64) << 32), cfg.jobs, |i, _| {
            let f = planted_fixture(config, cfg.seed.wrapping_mul(1_000_003).wrapping_add(i))?;
            let out = apply_move(&f.prism, &f.lists, &f.coloring, config, &f.placement)?;
            let cross = window_improve(&f.prism, &f.lists, &f.coloring, 7).is_some();
            Ok::<_, Error>((f, out, cross))
        });
        let mut used = std::collections::BTreeMap::new();
        for res in results {
            let (f, out, cross) = res?;
            match out {
                MoveOutcome::Applied { mut coloring, alternative } => {
                    *used.entry(config.alternatives[alternative].label.clone()).or_insert(0u64) += 1;
                    if !injected {
                        // Copy a neighbour's color onto the first cell.
                        let v = f.placement.cells[0];
                        coloring.set(v, coloring.color(f.prism.neighbors(v)[0]));
                        injected = true;
                    }
                    let verdict = validate_move(&f.prism, &f.lists, &f.coloring, &coloring);
                    g.check(verdict.is_ok(), || format!("{}: {}", config.name, verdict.unwrap_err()));
                }
                MoveOutcome::NotApplicable { gaps } => {
                    g.check(false, || format!("{}: no alternative applies (enabled but failed: {gaps:?})", config.name))
                }
            }
            g.check(cross, || format!("{}: window engine finds no improvement", config.name));
        }
        let used: Vec<String> = used.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        g.notes.push(format!("{} alternatives used {}", config.name, used.join(" ")));
    }
    let relaxed = MatchOptions { hypothesis: false };
    for (l, c) in lexmins {
        let report = assert_config_free(p, c, l, &configs, relaxed)?;
        g.check(report.is_empty(), || {
            let h = &report.hits[0];
            format!("exact lexmin improved by {} ({})", h.config, h.alternative)
        });
    }
    Ok(g)
}

fn group_discharging(cfg: &LemmaSuiteConfig, p: &Prism, lexmins: &[(ListAssignment, Coloring)]) -> Result<GroupReport> {
    let mut g = GroupReport::new("discharging");
    for (_, c) in lexmins {
        let blue = c.largest_colors()[0];
        let r = audit(p, c, blue)?;
        g.check(r.conserved && r.total == charge_formula(p.n(), r.blue_count), || {
            format!("audit not conserved: {}", r.to_text().replace('\n', " "))
        });
    }
    for t in table_fixtures() {
        let (tp, tc) = blue_pattern(&t.kinds)?;
        let seq = block_decompose(&tp, &tc, 0)?;
        let init = block_charges(&tp, &tc, 0, &seq);
        let (fin, _) = apply_rules(&seq, &init);
        g.check(init[t.index] == t.initial, || format!("{:?}: initial {} != {}", t.kinds, init[t.index], t.initial));
        if let Some(f) = t.fin {
            g.check(fin[t.index] == f, || format!("{:?}: final {} != {f}", t.kinds, fin[t.index]));
        }
    }
    let seqs = run_indexed(cfg.samples, cfg.seed, cfg.jobs, |_, rng| random_block_sequence(rng));
    for (seq, init) in seqs {
        let (fin, log) = apply_rules(&seq, &init);
        let before: Charge = init.iter().copied().sum();
        let after: Charge = fin.iter().copied().sum();
        let moved: Charge = log.iter().map(|t| t.amount).sum();
        g.check(before == after && log.len() <= seq.len() && moved >= Charge::ZERO, || {
            format!("rules changed the total on {seq}: {before} -> {after}")
        });
    }
    Ok(g)
}

/// Random kinds (length 1 to 24) with random initial charges.
pub fn random_block_sequence(rng: &mut impl Rng) -> (BlockSequence, Vec<Charge>) {
    let len = rng.gen_range(1..=24);
    let kinds: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=3)).collect();
    let seq = BlockSequence::from_kinds(&kinds).expect("kinds within 0..=3");
    let init = (0..len).map(|_| Charge::thirds(rng.gen_range(-30..=30))).collect();
    (seq, init)
}

/// Runs the five groups on `cfg.samples` exact lexmin colorings of `Π_n`.
pub fn verify_lemma_suite(cfg: &LemmaSuiteConfig) -> Result<LemmaReport> {
    if cfg.n < 6 {
        return Err(Error::InvalidParameter(format!("lemma suite needs n >= 6, got {}", cfg.n)));
    }
    let p = Prism::new(cfg.n)?;
    let bound = equitable_bound(cfg.n);
    let lexmins: Vec<(ListAssignment, Coloring)> = run_indexed(cfg.samples, cfg.seed, cfg.jobs, |_, rng| {
        let l = ListAssignment::random_with(p.vertex_count(), 3, cfg.universe, rng)?;
        let c = lexmin_with(&p, &l, &LexMinConfig::default())?.coloring;
        Ok::<_, Error>((l, c))
    })
    .into_iter()
    .collect::<Result<_>>()?;

    let mut few = GroupReport::new("few-colors");
    let mut few_count = 0;
    for (_, c) in &lexmins {
        if c.color_count() < 4 {
            few_count += 1;
            few.check(c.is_bounded(bound), || format!("{} colors but word {}", c.color_count(), c.word()));
        }
        few.check(c.is_bounded(bound), || format!("lexmin word {} exceeds {bound}", c.word()));
    }
    few.notes.push(format!("{few_count} lexmin colorings use fewer than 4 colors"));

    let moves = group_moves(cfg, &lexmins, &p)?;

    let mut count = GroupReport::new("window-count");
    for (_, c) in &lexmins {
        let sizes = c.class_sizes();
        let mut by_size: Vec<(usize, Color)> = sizes.iter().map(|(&x, &s)| (s, x)).collect();
        by_size.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let pair: Vec<Color> = by_size.iter().take(2).map(|&(_, x)| x).collect();
        let members: usize = by_size.iter().take(2).map(|&(s, _)| s).sum();
        let got = window_count(&p, c, &pair)?;
        count.check(got == 6 * members, || format!("window sum {got} != 6 * {members}"));
    }

    let mut blocks = GroupReport::new("blocks");
    let mut long_runs = 0;
    for (_, c) in &lexmins {
        let blue = c.largest_colors()[0];
        let decomposes = block_decompose(&p, c, blue).is_ok();
        long_runs += usize::from(!decomposes);
        // Long blue runs are only excluded once the bound fails.
        blocks.check(decomposes || c.is_bounded(bound), || format!("unbounded lexmin with a long blue run: {}", c.word()));
    }
    blocks.notes.push(format!("{long_runs} bounded lexmin colorings have a blue run of 4 or more rungs"));

    let discharging = group_discharging(cfg, &p, &lexmins)?;
    Ok(LemmaReport { n: cfg.n, groups: vec![few, moves, count, blocks, discharging] })
}
