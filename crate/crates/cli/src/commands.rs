//! Command execution: each subcommand turns parsed arguments into a [`Report`].

use std::collections::BTreeMap;
use std::path::Path;

use korolat_core::contfrac::{larcher_search, subgroup_cf_search, ContinuedFraction};
use korolat_core::discrepancy::{discrepancy_of_korobov, exact_star_discrepancy, BoxMode, DiscrepancyResult};
use korolat_core::expsum::{
    character_sum, count_solutions, garaev_bound, konyagin_bound, lemma1_ratio, max_character_sum,
    max_character_sum_by_cosets, CountBackend,
};
use korolat_core::lattice::{bykovskii_sum, lattice_contains, q_min, relative_minima};
use korolat_core::modp::{divisors, euler_phi, is_prime, ResidueSet};
use korolat_core::rational::{format_rational, parse_rational, ratio, BigRational};
use korolat_core::search::{
    check_growth_config, growth_row, growth_search_config, GrowthConfig, SearchConfig, SearchResult, Strategy,
};
use korolat_core::thresholds::{evaluate_table, s_min};
use korolat_core::{Budget, Error, GeneratingVector, PointSet, PrimeModulus, Subgroup};
use rayon::ThreadPool;

use crate::args::{
    BackendArg, CfCommand, Command, GroupArgs, GrowthArgs, LatticeCommand, ModpCommand, SearchArgs, SearchOptions,
    StrategyArg, SumsCommand,
};
use crate::error::{exit_code, CliError, EXIT_BUDGET};
use crate::output::{join, Cell, Report, Table};
use crate::parallel::{find_good_vector_in, thread_pool};

/// Column revision recorded in run manifests.
pub const SCHEMA_REVISION: u32 = 1;

pub const THRESHOLD_COLUMNS: &[&str] =
    &["delta", "m", "branch", "alpha_m", "beta_m", "alpha_next", "n_delta", "s_prime", "s_double_prime", "s_min"];
pub const TABLE_COLUMNS: &[&str] = &["left", "right", "s_at_left", "s_at_midpoint", "expected", "status"];
pub const SEARCH_COLUMNS: &[&str] = &[
    "p",
    "s",
    "order",
    "strategy",
    "seed",
    "samples",
    "candidates",
    "best_a",
    "bykovskii",
    "bykovskii_exact",
    "q",
    "q_threshold",
    "omega_class",
    "exact_d",
    "reference",
    "ratio",
];
pub const GROWTH_COLUMNS: &[&str] = &["p", "order", "best_a", "bykovskii", "exact_d", "reference", "ratio", "error"];
pub const DISC_COLUMNS: &[&str] = &["points", "dim", "denominator", "d", "d_float", "mode", "witness", "witness_count"];

/// A finished command: its report, an optional failure that still lets the
/// partial report be written, and what goes into the manifest.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub failure: Option<CliError>,
    pub seed: Option<u64>,
    pub params: BTreeMap<String, String>,
}

impl Outcome {
    fn of(report: Report) -> Self {
        Outcome { report, failure: None, seed: None, params: BTreeMap::new() }
    }

    pub fn schema(&self) -> String {
        format!("{}/{}", self.report.table.command, SCHEMA_REVISION)
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::input(format!("cannot parse {what} from {text:?}"))))
        .collect()
}

fn prime(p: u64) -> Result<PrimeModulus, CliError> {
    PrimeModulus::new(p).map_err(|_| CliError::input("p must be prime"))
}

fn subgroup(p: PrimeModulus, group: &GroupArgs) -> Result<Subgroup, CliError> {
    Ok(match (group.order, &group.delta) {
        (Some(d), _) => Subgroup::of_order(p, d)?,
        (None, Some(delta)) => Subgroup::smallest_meeting(p, &parse_rational(delta)?)?,
        (None, None) => Subgroup::full(p),
    })
}

fn vector(n: u64, a: &str) -> Result<GeneratingVector, CliError> {
    Ok(GeneratingVector::new(n, parse_list::<u64>(a, "a")?)?)
}

fn rational_cell(x: &BigRational) -> Cell {
    Cell::Text(format_rational(x))
}

pub fn execute(command: &Command, budget: Budget) -> Result<Outcome, CliError> {
    let mut outcome = match command {
        Command::Thresholds { delta, table } => thresholds(delta.as_deref(), *table),
        Command::Search(args) => search(args, budget),
        Command::Growth(args) => growth(args, budget),
        Command::Disc { korobov, points } => disc(korobov.as_deref(), points.as_deref(), budget),
        Command::Lattice(cmd) => lattice(cmd, budget),
        Command::Cf(cmd) => cf(cmd),
        Command::Sums(cmd) => sums(cmd, budget),
        Command::Modp(cmd) => modp(cmd),
    }?;
    outcome.params.insert("budget".into(), format!("{budget:?}"));
    Ok(outcome)
}

fn thresholds(delta: Option<&str>, table: bool) -> Result<Outcome, CliError> {
    if table {
        let mut t = Table::new("thresholds-table", TABLE_COLUMNS);
        let rows = evaluate_table()?;
        let failed = rows.iter().filter(|r| !r.passes()).count();
        for r in &rows {
            t.push(vec![
                rational_cell(&r.left),
                rational_cell(&r.right),
                Cell::text(r.s_at_left.to_string()),
                Cell::text(r.s_at_midpoint.to_string()),
                r.expected.into(),
                Cell::text(if r.passes() { "PASS" } else { "FAIL" }),
            ]);
        }
        let mut out = Outcome::of(Report::new(t));
        if failed > 0 {
            out.failure = Some(CliError::internal(format!("{failed} table rows disagree with the reference")));
        }
        return Ok(out);
    }
    let delta = parse_rational(delta.unwrap_or_default())?;
    let profile = s_min(&delta)?;
    let mut t = Table::new("thresholds", THRESHOLD_COLUMNS);
    let b = profile.branch.as_ref();
    t.push(vec![
        rational_cell(&profile.delta),
        Cell::opt(b.map(|b| b.m)),
        Cell::opt(b.map(|b| b.branch.to_string())),
        Cell::opt(b.map(|b| format_rational(&b.alpha_m))),
        Cell::opt(b.map(|b| format_rational(&b.beta_m))),
        Cell::opt(b.map(|b| format_rational(&b.alpha_next))),
        profile.n_delta.into(),
        Cell::opt(profile.s_prime),
        Cell::text(profile.s_double_prime.to_string()),
        Cell::text(profile.s_min.to_string()),
    ]);
    let mut report = Report::new(t);
    if b.is_none() {
        report.notes.push("delta <= 1/4 has no alpha/beta branch; s_min falls back to s''".into());
    }
    Ok(Outcome::of(report))
}

fn strategy(options: &SearchOptions) -> Strategy {
    match options.strategy {
        StrategyArg::Exhaustive => Strategy::Exhaustive,
        StrategyArg::Orbits => Strategy::Orbits,
        StrategyArg::Random => Strategy::Random { samples: options.samples, seed: options.seed },
    }
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Exhaustive => "exhaustive",
        Strategy::Orbits => "orbits",
        Strategy::Random { .. } => "random",
    }
}

fn discrepancy_cell(d: &Option<DiscrepancyResult>) -> Cell {
    Cell::opt(d.as_ref().map(|d| format_rational(&d.value())))
}

fn search_row(config: &SearchConfig, r: &SearchResult) -> Vec<Cell> {
    let (seed, samples) = match config.strategy {
        Strategy::Random { samples, seed } => (Some(seed), Some(samples)),
        _ => (None, None),
    };
    vec![
        config.modulus().get().into(),
        config.dim.into(),
        config.subgroup.order().into(),
        strategy_name(config.strategy).into(),
        Cell::opt(seed),
        Cell::opt(samples),
        r.candidates_evaluated.into(),
        Cell::text(join(r.best.components())),
        r.bykovskii.into(),
        rational_cell(&r.bykovskii_exact),
        r.q.into(),
        r.q_threshold.into(),
        Cell::text(r.omega_class.to_string()),
        discrepancy_cell(&r.exact_discrepancy),
        r.reference.into(),
        (r.bykovskii / r.reference).into(),
    ]
}

fn search_params(options: &SearchOptions, params: &mut BTreeMap<String, String>) {
    params.insert("strategy".into(), format!("{:?}", options.strategy).to_lowercase());
    params.insert("seed".into(), options.seed.to_string());
    params.insert("samples".into(), options.samples.to_string());
    params.insert("exact_d".into(), options.exact_d.to_string());
    params.insert("threads".into(), options.threads.to_string());
}

fn search(args: &SearchArgs, budget: Budget) -> Result<Outcome, CliError> {
    let p = prime(args.p)?;
    let g = subgroup(p, &args.group)?;
    let mut config = SearchConfig::new(g, args.s, strategy(&args.options));
    config.q_override = args.q;
    config.exact_discrepancy = args.options.exact_d;
    config.budget = budget;
    let pool = thread_pool(args.options.threads)?;
    let mut t = Table::new("search", SEARCH_COLUMNS);
    let mut failure = None;
    match find_good_vector_in(&pool, &config) {
        Ok(r) => t.push(search_row(&config, &r)),
        Err(e) if exit_code(&e) == EXIT_BUDGET => failure = Some(CliError::from(e)),
        Err(e) => return Err(e.into()),
    }
    let mut out = Outcome::of(Report::new(t));
    out.failure = failure;
    out.seed = matches!(args.options.strategy, StrategyArg::Random).then_some(args.options.seed);
    out.params.insert("p".into(), args.p.to_string());
    out.params.insert("s".into(), args.s.to_string());
    out.params.insert("order".into(), config.subgroup.order().to_string());
    out.params.insert("q_threshold".into(), config.q_threshold().to_string());
    search_params(&args.options, &mut out.params);
    Ok(out)
}

fn primes_in(from: u64, to: u64) -> Vec<u64> {
    (from.max(3)..=to).filter(|&p| is_prime(p)).collect()
}

fn run_growth_row(pool: &ThreadPool, config: &GrowthConfig, p: u64) -> (Vec<Cell>, Option<Error>) {
    let run =
        growth_search_config(config, p).and_then(|sc| find_good_vector_in(pool, &sc).map(|r| (sc.subgroup.order(), r)));
    let error = run.as_ref().err().cloned();
    let row = growth_row(p, run);
    let cells = match &row.outcome {
        Ok(m) => vec![
            p.into(),
            m.order.into(),
            Cell::text(join(m.best.components())),
            m.bykovskii.into(),
            Cell::opt(m.exact_discrepancy),
            m.reference.into(),
            m.ratio.into(),
            Cell::Missing,
        ],
        Err(msg) => {
            let mut cells = vec![Cell::Missing; GROWTH_COLUMNS.len()];
            cells[0] = p.into();
            cells[7] = Cell::text(msg.clone());
            cells
        }
    };
    (cells, error)
}

fn growth(args: &GrowthArgs, budget: Budget) -> Result<Outcome, CliError> {
    let primes = match (&args.primes, args.from, args.to) {
        (Some(list), _, _) => parse_list::<u64>(list, "primes")?,
        (None, Some(from), Some(to)) => primes_in(from, to),
        _ => return Err(CliError::input("give --primes or --from and --to")),
    };
    let config = GrowthConfig {
        primes,
        delta: parse_rational(&args.delta)?,
        dim: args.s,
        strategy: strategy(&args.options),
        exact_discrepancy: args.options.exact_d,
        allow_below_threshold: args.allow_below_threshold,
        budget,
    };
    let mut notes = Vec::new();
    if !check_growth_config(&config)? {
        let msg = format!("s = {} is below max(3, s_min({}))", args.s, format_rational(&config.delta));
        if !args.allow_below_threshold {
            return Err(CliError::input(format!("{msg}; pass --allow-below-threshold to run anyway")));
        }
        notes.push(format!("warning: {msg}"));
    }
    let pool = thread_pool(args.options.threads)?;
    let mut t = Table::new("growth", GROWTH_COLUMNS);
    let mut first_error: Option<Error> = None;
    let mut max_ratio: Option<f64> = None;
    for &p in &config.primes {
        let (cells, error) = run_growth_row(&pool, &config, p);
        if let Cell::Float(r) = cells[6] {
            max_ratio = Some(max_ratio.map_or(r, |m: f64| m.max(r)));
        }
        if first_error.is_none() {
            first_error = error;
        }
        t.push(cells);
    }
    if let Some(m) = max_ratio {
        notes.push(format!("max ratio {m}"));
    }
    let mut report = Report::new(t);
    report.notes = notes;
    let mut out = Outcome::of(report);
    out.failure = first_error.map(|e| CliError { code: exit_code(&e), message: format!("some rows failed: {e}") });
    out.seed = matches!(args.options.strategy, StrategyArg::Random).then_some(args.options.seed);
    out.params.insert("s".into(), args.s.to_string());
    out.params.insert("delta".into(), format_rational(&config.delta));
    out.params.insert("primes".into(), join(&config.primes));
    out.params.insert("allow_below_threshold".into(), args.allow_below_threshold.to_string());
    search_params(&args.options, &mut out.params);
    Ok(out)
}

fn witness_text(d: &DiscrepancyResult) -> String {
    let close = match d.mode {
        BoxMode::Open => ")",
        BoxMode::Closed => "]",
    };
    d.witness
        .iter()
        .map(|&w| format!("[0,{}{close}", format_rational(&ratio(w as i64, d.denominator as i64))))
        .collect::<Vec<_>>()
        .join("x")
}

fn read_points(path: &Path) -> Result<PointSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let mut dim = None;
    let mut coords = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Vec<&str> = line.split(',').collect();
        if *dim.get_or_insert(row.len()) != row.len() {
            return Err(CliError::input(format!("line {}: expected {} coordinates", i + 1, dim.unwrap_or(0))));
        }
        for x in row {
            let q = parse_rational(x)?;
            let frac = u64::try_from(q.numer()).ok().zip(u64::try_from(q.denom()).ok());
            let (n, d) = frac.ok_or_else(|| CliError::input(format!("line {}: {x} is not in [0,1)", i + 1)))?;
            coords.push((n, d));
        }
    }
    let dim = dim.ok_or_else(|| CliError::from(Error::EmptyInput))?;
    Ok(PointSet::from_fractions(dim, &coords)?)
}

fn disc(korobov: Option<&[String]>, points: Option<&Path>, budget: Budget) -> Result<Outcome, CliError> {
    let (d, dim) = match (korobov, points) {
        (Some([n, a]), _) => {
            let n = n.trim().parse().map_err(|_| CliError::input(format!("cannot parse N from {n:?}")))?;
            let a = vector(n, a)?;
            (discrepancy_of_korobov(&a, &budget)?, a.dim())
        }
        (_, Some(path)) => {
            let ps = read_points(path)?;
            (exact_star_discrepancy(&ps, &budget)?, ps.dim())
        }
        _ => return Err(CliError::input("give --korobov N A or --points FILE")),
    };
    let value = d.value();
    let mode = match d.mode {
        BoxMode::Open => "open",
        BoxMode::Closed => "closed",
    };
    let witness: Vec<String> =
        d.witness.iter().map(|&w| format_rational(&ratio(w as i64, d.denominator as i64))).collect();
    let mut t = Table::new("disc", DISC_COLUMNS);
    t.push(vec![
        d.points.into(),
        dim.into(),
        d.denominator.into(),
        rational_cell(&value),
        d.to_f64().into(),
        mode.into(),
        Cell::text(witness.join(";")),
        d.witness_count.into(),
    ]);
    let text = format!(
        "D={} ({}) box={} {mode} count={}",
        format_rational(&value),
        d.to_f64(),
        witness_text(&d),
        d.witness_count
    );
    Ok(Outcome::of(Report::new(t).with_text(text)))
}

fn lattice(cmd: &LatticeCommand, budget: Budget) -> Result<Outcome, CliError> {
    let report = match cmd {
        LatticeCommand::Q { n, a } => {
            let v = vector(*n, a)?;
            let q = q_min(&v, budget.lattice)?;
            let mut t = Table::new("lattice-q", &["n", "a", "q", "witness", "degenerate"]);
            t.push(vec![
                (*n).into(),
                Cell::text(join(v.components())),
                q.value.into(),
                Cell::text(join(&q.witness)),
                q.degenerate.into(),
            ]);
            Report::new(t)
        }
        LatticeCommand::Minima { n, a } => {
            let rm = relative_minima(&vector(*n, a)?, budget.lattice)?;
            let mut t = Table::new("lattice-minima", &["height", "vector"]);
            for m in rm.minima() {
                t.push(vec![m.height.into(), Cell::text(join(&m.vector))]);
            }
            Report::new(t)
        }
        LatticeCommand::Bykovskii { n, a } => {
            let v = vector(*n, a)?;
            let sum = bykovskii_sum(&v, budget.lattice)?;
            let mut t = Table::new("lattice-bykovskii", &["n", "a", "minima", "sum", "sum_exact"]);
            t.push(vec![
                (*n).into(),
                Cell::text(join(v.components())),
                sum.heights().len().into(),
                sum.to_f64().into(),
                rational_cell(&sum.exact()),
            ]);
            Report::new(t)
        }
        LatticeCommand::Contains { n, a, m } => {
            let v = vector(*n, a)?;
            let m: Vec<i64> = parse_list(m, "m")?;
            let inside = lattice_contains(&v, &m)?;
            let mut t = Table::new("lattice-contains", &["n", "a", "m", "contains"]);
            t.push(vec![(*n).into(), Cell::text(join(v.components())), Cell::text(join(&m)), inside.into()]);
            Report::new(t)
        }
    };
    Ok(Outcome::of(report))
}

fn cf(cmd: &CfCommand) -> Result<Outcome, CliError> {
    let report = match cmd {
        CfCommand::Expand { x, n } => {
            let e = ContinuedFraction::expand(*x, *n)?;
            let mut t = Table::new("cf-expand", &["x", "n", "reduced_by", "quotients", "sum", "length", "proxy"]);
            t.push(vec![
                (*x).into(),
                (*n).into(),
                e.reduced_by().into(),
                Cell::text(e.to_string()),
                e.quotient_sum().into(),
                e.len().into(),
                e.discrepancy_proxy().into(),
            ]);
            Report::new(t).with_text(format!("{e} sum={}", e.quotient_sum()))
        }
        CfCommand::Larcher { n } => {
            let (g, sum) = larcher_search(*n)?;
            let mut t = Table::new("cf-larcher", &["n", "g", "sum"]);
            t.push(vec![(*n).into(), g.into(), sum.into()]);
            Report::new(t)
        }
        CfCommand::Subgroup { p, group, coset } => {
            let g = subgroup(prime(*p)?, group)?;
            let r = match coset {
                Some(v) => subgroup_cf_search(&g.coset(*v)?)?,
                None => subgroup_cf_search(&g)?,
            };
            let mut t = Table::new("cf-subgroup", &["p", "order", "coset", "element", "sum", "reference"]);
            t.push(vec![
                (*p).into(),
                g.order().into(),
                coset.unwrap_or(1).into(),
                r.element.into(),
                r.quotient_sum.into(),
                r.reference.into(),
            ]);
            Report::new(t)
        }
    };
    Ok(Outcome::of(report))
}

fn backend(b: BackendArg) -> CountBackend {
    match b {
        BackendArg::Direct => CountBackend::Direct,
        BackendArg::Spectral => CountBackend::Spectral,
    }
}

fn sums(cmd: &SumsCommand, budget: Budget) -> Result<Outcome, CliError> {
    let report = match cmd {
        SumsCommand::Char { p, t: shift, group } => {
            let g = subgroup(prime(*p)?, group)?;
            let z = character_sum(*shift, &g);
            let mut t = Table::new("sums-char", &["p", "order", "t", "re", "im", "abs"]);
            t.push(vec![(*p).into(), g.order().into(), (*shift).into(), z.re.into(), z.im.into(), z.norm().into()]);
            Report::new(t)
        }
        SumsCommand::Max { p, group, cosets } => {
            let g = subgroup(prime(*p)?, group)?;
            let prof =
                if *cosets { max_character_sum_by_cosets(&g, &budget)? } else { max_character_sum(&g, &budget)? };
            let mut t = Table::new("sums-max", &["p", "order", "s_max", "argmax_t"]);
            t.push(vec![(*p).into(), g.order().into(), prof.s_max.into(), prof.argmax_t.into()]);
            Report::new(t)
        }
        SumsCommand::Count { p, group, boxes, backend: b } => {
            let g = subgroup(prime(*p)?, group)?;
            let sides: Vec<u64> = parse_list(boxes, "box sides")?;
            let c = count_solutions(&g, &sides, backend(*b), &budget)?;
            let mut t = Table::new("sums-count", &["p", "order", "boxes", "count", "backend", "rounding_error"]);
            t.push(vec![
                (*p).into(),
                g.order().into(),
                Cell::text(join(&sides)),
                c.count.into(),
                format!("{b:?}").to_lowercase().into(),
                c.rounding_error.into(),
            ]);
            Report::new(t).with_text(c.count.to_string())
        }
        SumsCommand::Ratio { p, group, boxes } => {
            let g = subgroup(prime(*p)?, group)?;
            let sides: Vec<u64> = parse_list(boxes, "box sides")?;
            let r = lemma1_ratio(&g, &sides, &budget)?;
            let mut t = Table::new("sums-ratio", &["p", "order", "boxes", "ratio"]);
            t.push(vec![(*p).into(), g.order().into(), Cell::text(join(&sides)), r.into()]);
            Report::new(t)
        }
        SumsCommand::Konyagin { p, group } => {
            let g = subgroup(prime(*p)?, group)?;
            let k = konyagin_bound(&g)?;
            let s_max = max_character_sum_by_cosets(&g, &budget)?.s_max;
            let mut t = Table::new(
                "sums-konyagin",
                &[
                    "p",
                    "order",
                    "m",
                    "branch",
                    "delta",
                    "exponent_on_order",
                    "exponent_on_p",
                    "bound",
                    "effective",
                    "s_max",
                ],
            );
            t.push(vec![
                (*p).into(),
                g.order().into(),
                k.m.into(),
                Cell::text(k.branch.to_string()),
                k.delta.into(),
                k.exponent_on_order.into(),
                k.exponent_on_p.into(),
                k.bound.into(),
                k.effective.into(),
                s_max.into(),
            ]);
            Report::new(t)
        }
        SumsCommand::Garaev { p, n, c, sizes } => {
            let sizes_v: Vec<u64> = parse_list(sizes, "sizes")?;
            let b = garaev_bound(prime(*p)?.get(), *n, *c, &sizes_v)?;
            let mut t = Table::new("sums-garaev", &["p", "n", "c", "sizes", "admissible", "factor", "n_in_range"]);
            t.push(vec![
                (*p).into(),
                (*n).into(),
                (*c).into(),
                Cell::text(join(&sizes_v)),
                b.admissible.into(),
                b.factor.into(),
                b.n_in_range.into(),
            ]);
            Report::new(t)
        }
    };
    Ok(Outcome::of(report))
}

fn modp(cmd: &ModpCommand) -> Result<Outcome, CliError> {
    let report = match cmd {
        ModpCommand::Prime { n } => {
            let mut t = Table::new("modp-prime", &["n", "prime"]);
            t.push(vec![(*n).into(), is_prime(*n).into()]);
            Report::new(t)
        }
        ModpCommand::Root { p } => {
            let mut t = Table::new("modp-root", &["p", "root"]);
            t.push(vec![(*p).into(), prime(*p)?.primitive_root().into()]);
            Report::new(t)
        }
        ModpCommand::Subgroup { p, group } => {
            let g = subgroup(prime(*p)?, group)?;
            let mut t = Table::new("modp-subgroup", &["p", "order", "generator", "elements"]);
            t.push(vec![(*p).into(), g.order().into(), g.generator().into(), Cell::text(join(g.elements()))]);
            Report::new(t)
        }
        ModpCommand::Coset { p, v, group } => {
            let g = subgroup(prime(*p)?, group)?;
            let c = g.coset(*v)?;
            let mut t = Table::new("modp-coset", &["p", "order", "v", "elements"]);
            t.push(vec![(*p).into(), g.order().into(), (*v).into(), Cell::text(join(c.elements()))]);
            Report::new(t)
        }
        ModpCommand::Phi { n } => {
            if *n == 0 {
                return Err(CliError::input("n must be positive"));
            }
            let mut t = Table::new("modp-phi", &["n", "phi"]);
            t.push(vec![(*n).into(), euler_phi(*n).into()]);
            Report::new(t)
        }
        ModpCommand::Divisors { n } => {
            if *n == 0 {
                return Err(CliError::input("n must be positive"));
            }
            let mut t = Table::new("modp-divisors", &["n", "divisors"]);
            t.push(vec![(*n).into(), Cell::text(join(divisors(*n)))]);
            Report::new(t)
        }
    };
    Ok(Outcome::of(report))
}
