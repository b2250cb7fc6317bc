use std::fs;
use std::io::Read as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use prismcolor::campaign::{
    verify_choice_number, verify_equitable, verify_lemma_suite, CampaignConfig, Certificate,
    LemmaSuiteConfig, Mode,
};
use prismcolor::canon::enumerate_orbits;
use prismcolor::discharging::{audit, blue_pattern};
use prismcolor::lists::{Color, ListAssignment};
use prismcolor::prism::Prism;
use prismcolor::solver::{
    all_proper_colorings, equitable_coloring_with, lexmin_with, prism_independence_number,
    solve_proper, LexMinConfig, SolveOutcome,
};
use prismcolor::text::{parse_document, write_coloring, write_unsat};

#[derive(Parser)]
#[command(name = "prismcolor", version, about = "List colorings of prism graphs")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Find any proper list coloring.
    Solve(Instance),
    /// Exact lexicographically minimal coloring.
    Lexmin(Instance),
    /// Coloring with every class at most ceil(2n/3).
    Equitize(Instance),
    /// Independence number of a prism.
    Independence {
        #[arg(long)]
        n: usize,
    },
    /// Verification campaigns.
    #[command(subcommand)]
    Verify(Verify),
    /// Charge audit of a coloring, or of a block pattern such as `3,1,0`.
    DischargeAudit {
        #[arg(long, conflicts_with = "kinds")]
        input: Option<PathBuf>,
        /// Blue color; defaults to a largest class.
        #[arg(long)]
        blue: Option<Color>,
        #[arg(long, value_delimiter = ',')]
        kinds: Option<Vec<usize>>,
    },
    /// Re-check a certificate without searching.
    Check { certificate: PathBuf },
    /// Count proper colorings of an instance, or with `--orbits` the
    /// canonical 3-list assignments up to a color universe.
    Enumerate {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        orbits: bool,
        /// Print every coloring.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// 2-list UNSAT and 3-list SAT certificates.
    Choice {
        #[arg(long, value_parser = parse_range, default_value = "3..10")]
        n: RangeInclusive<usize>,
        /// Write certificates into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Equitable colorings over sampled or canonical assignments.
    Equitable {
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Sample)]
        mode: ModeArg,
        #[command(flatten)]
        campaign: CampaignArgs,
    },
    /// Lemma suite on exact lexmin colorings.
    Lemmas {
        #[arg(long, value_parser = parse_range, default_value = "6")]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        campaign: CampaignArgs,
        #[arg(long, default_value_t = 100)]
        fixtures: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Args)]
struct CampaignArgs {
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[arg(long, default_value_t = 6)]
    universe: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
}

/// An assignment from `--input` (`-` for stdin) or drawn at random.
#[derive(Args)]
struct Instance {
    #[arg(long, conflicts_with = "n")]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 6)]
    universe: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
}

impl Instance {
    fn load(&self) -> Result<(Prism, ListAssignment)> {
        match (&self.input, self.n) {
            (Some(path), _) => {
                let doc = parse_document(&read(path)?).with_context(|| format!("reading {}", path.display()))?;
                let p = doc.prism()?;
                let l = doc.lists.context("input has no list records")?;
                Ok((p, l))
            }
            (None, Some(n)) => {
                let p = Prism::new(n)?;
                let l = ListAssignment::random_uniform(&p, self.k, self.universe, self.seed)?;
                Ok((p, l))
            }
            (None, None) => bail!("give --input FILE or --n N"),
        }
    }

    fn lexmin_config(&self) -> LexMinConfig {
        LexMinConfig { node_limit: self.budget_nodes, ..LexMinConfig::default() }
    }
}

fn read(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number `{t}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => num(s).map(|x| x..=x),
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn campaign_config(ns: Vec<usize>, mode: Mode, a: &CampaignArgs) -> CampaignConfig {
    CampaignConfig {
        ns,
        mode,
        samples: a.samples,
        universe: a.universe,
        seed: a.seed,
        jobs: a.jobs,
        node_limit: a.budget_nodes,
    }
}

fn run(cli: Cli) -> Result<bool> {
    let machine = cli.format == Format::Machine;
    match cli.command {
        Command::Solve(inst) => {
            let (p, l) = inst.load()?;
            match solve_proper(&p, &l) {
                SolveOutcome::Sat(c) => print!("{}", write_coloring(&p, &c)),
                SolveOutcome::Unsat(_) => print!("{}", write_unsat(&p, &l)),
            }
            Ok(true)
        }
        Command::Lexmin(inst) => {
            let (p, l) = inst.load()?;
            let sol = lexmin_with(&p, &l, &inst.lexmin_config())?;
            print!("{}", write_coloring(&p, &sol.coloring));
            if !machine {
                eprintln!("nodes = {}", sol.nodes);
            }
            Ok(true)
        }
        Command::Equitize(inst) => {
            let (p, l) = inst.load()?;
            let out = equitable_coloring_with(&p, &l, &inst.lexmin_config())?;
            print!("{}", write_coloring(&p, &out.coloring));
            println!("bound = {}", out.bound);
            println!("exact = {}", out.exact);
            Ok(out.coloring.max_class() <= out.bound)
        }
        Command::Independence { n } => {
            let alpha = prism_independence_number(&Prism::new(n)?)?;
            if machine {
                println!("n={n} alpha={alpha}");
            } else {
                println!("alpha(Pi_{n}) = {alpha}");
            }
            Ok(true)
        }
        Command::Verify(Verify::Choice { n, emit }) => {
            let mut all = true;
            if let Some(dir) = &emit {
                fs::create_dir_all(dir)?;
            }
            for n in n {
                let r = verify_choice_number(n)?;
                all &= r.passed();
                for cert in &r.certificates {
                    if let Some(dir) = &emit {
                        fs::write(dir.join(format!("{}.cert", cert.claim)), cert.to_text())?;
                    }
                    println!("{} {} {}", cert.claim, cert.verdict(), status(cert.check().is_ok()));
                }
                for f in &r.failures {
                    println!("failure {f}");
                }
            }
            println!("choice {}", status(all));
            Ok(all)
        }
        Command::Verify(Verify::Equitable { n, mode, campaign }) => {
            let mode = match mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Sample => Mode::Sample,
            };
            let reports = verify_equitable(&campaign_config(n.collect(), mode, &campaign))?;
            let mut all = true;
            for r in &reports {
                all &= r.passed();
                if machine {
                    print!("{}", r.to_text());
                } else {
                    let count = if mode == Mode::Exhaustive { "orbits" } else { "assignments" };
                    println!(
                        "n={} {} {}={} universe={} max_class={} bound={} failures={} {}",
                        r.n,
                        mode.name(),
                        count,
                        r.assignments,
                        r.universe,
                        r.max_class,
                        r.bound,
                        r.failures.len(),
                        status(r.passed())
                    );
                    for f in r.failures.iter().take(3) {
                        println!("  {f}");
                    }
                }
            }
            Ok(all)
        }
        Command::Verify(Verify::Lemmas { n, campaign, fixtures }) => {
            let mut all = true;
            for n in n {
                let r = verify_lemma_suite(&LemmaSuiteConfig {
                    n,
                    samples: campaign.samples,
                    universe: campaign.universe,
                    seed: campaign.seed,
                    jobs: campaign.jobs,
                    fixtures_per_config: fixtures,
                    inject_violation: false,
                })?;
                all &= r.passed();
                print!("{}", r.to_text());
            }
            println!("lemmas {}", status(all));
            Ok(all)
        }
        Command::DischargeAudit { input, blue, kinds } => {
            let (p, c) = match (input, kinds) {
                (Some(path), _) => {
                    let doc = parse_document(&read(&path)?)?;
                    (doc.prism()?, doc.coloring.context("input has no color records")?)
                }
                (None, Some(kinds)) => blue_pattern(&kinds)?,
                (None, None) => bail!("give --input FILE or --kinds K,K,..."),
            };
            let blue = blue.unwrap_or_else(|| c.largest_colors()[0]);
            let r = audit(&p, &c, blue)?;
            print!("{}", r.to_text());
            Ok(r.conserved)
        }
        Command::Check { certificate } => {
            let src = read(&certificate)?;
            let cert = Certificate::parse(&src)?;
            match cert.check() {
                Ok(()) => {
                    println!("{} {} PASS", cert.claim, cert.verdict());
                    Ok(true)
                }
                Err(e) => {
                    println!("{} {} FAIL: {e}", cert.claim, cert.verdict());
                    Ok(false)
                }
            }
        }
        Command::Enumerate { instance, orbits, list } => {
            if orbits {
                let n = instance.n.context("--orbits needs --n")?;
                let e = enumerate_orbits(&Prism::new(n)?, instance.k, instance.universe)?;
                println!("n={} k={} universe_cap={} generated={} orbits={}", n, e.k, e.universe_cap, e.generated, e.orbits.len());
                return Ok(true);
            }
            let (p, l) = instance.load()?;
            let mut count = 0u64;
            let mut best = None;
            for c in all_proper_colorings(&p, &l)? {
                count += 1;
                if list {
                    print!("{}", write_coloring(&p, &c));
                    println!();
                }
                let w = c.word();
                if best.as_ref().map_or(true, |b| &w < b) {
                    best = Some(w);
                }
            }
            println!("colorings = {count}");
            if let Some(w) = best {
                println!("min word = {w}");
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
