//! Command-line surface. Every verb builds a [`Report`] that embeds the [`RunConfig`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::beilinson::{c_terms, contribution_tables, monad_for, obstruction_list, query_table};
use crate::chow::{chern_tangent, chi_line, delta, hrr_chi, slope, todd_tangent, ChowClass, Polarization};
use crate::error::{Error, Result};
use crate::instanton::{
    build_elementary, build_even4, build_odd, check, moduli_dimension, restrict_to_divisor, ulrich_check, CheckOptions,
    Construction, Divisor, InstantonVerdict,
};
use crate::les::{Solver, SolverOptions};
use crate::projcoh::{exceptional_collection, h_line_all, h_omega_all};
use crate::reproduce::run_all;
use crate::sections::{restrict_matrix, CoordinateMode, SubKind, SubvarietySpec};
use crate::sheafdag::{Registry, SheafExpr};
use crate::stability::{closed_form_region, region, region_matches_closed_form, Certifier, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RunConfig {
    /// Dimension of the blown-up projective space.
    #[arg(long, global = true, default_value_t = 5)]
    pub n: usize,
    /// Polarization override `a,b` for `O(a,b)`.
    #[arg(long, global = true, value_parser = parse_pair)]
    pub polarization: Option<(i64, i64)>,
    /// Registry JSON merged into the working registry before solving.
    #[arg(long, global = true)]
    pub axioms: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for generic coefficients and for the stability sampler.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    /// Exit nonzero unless every verdict is PASS and every value is exact.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Debug, Parser)]
#[command(name = "pn-blowup", version, about = "Cohomology, stability and monads on the blow-up of projective space at a point")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(subcommand)]
    Chow(ChowCmd),
    #[command(subcommand)]
    Coh(CohCmd),
    #[command(subcommand)]
    Sections(SectionsCmd),
    #[command(subcommand)]
    Stability(StabilityCmd),
    #[command(subcommand)]
    Monad(MonadCmd),
    #[command(subcommand)]
    Instanton(InstantonCmd),
    #[command(subcommand)]
    Reproduce(ReproduceCmd),
}

#[derive(Debug, Subcommand)]
pub enum ChowCmd {
    /// Product of two classes written in `xi` and `alpha`, e.g. `2xi^2 - alpha^2`.
    Mul { a: String, b: String },
    /// Top-degree coefficient, and the degree against `c₁(L)^{n−1}` when the class is a divisor.
    Degree { a: String },
    /// Total Chern class of the tangent bundle, or of `--sheaf`.
    Chern {
        #[arg(long)]
        sheaf: Option<String>,
    },
    /// Todd class of the tangent bundle.
    Todd,
    /// `χ(O(p,q))` by Riemann–Roch and by the closed form.
    Chi {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CohCmd {
    Line {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    Omega {
        #[arg(long)]
        l: usize,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Cohomology table of a sheaf over a list of twists.
    Table {
        #[arg(long, default_value = "prototype")]
        sheaf: String,
        /// `exceptional`, `monad`, or a list `a,b;a,b;...`.
        #[arg(long, default_value = "exceptional", allow_hyphen_values = true)]
        twists: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SectionsCmd {
    /// `h⁰(I_X(p,q))` by the kernel of the evaluation matrix.
    H0Ideal {
        /// Comma-separated components: `wp`, `kappa`, `q1`, `q2`.
        #[arg(long, default_value = "wp,kappa")]
        config: String,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum StabilityCmd {
    Region {
        #[arg(long, default_value = "prototype")]
        sheaf: String,
        /// Use the non-strict inequality (stability rather than semistability).
        #[arg(long)]
        stable: bool,
    },
    Certify {
        #[arg(long, default_value = "prototype")]
        sheaf: String,
        #[arg(long)]
        stable: bool,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum MonadCmd {
    /// Every term `C^p`, including those that must vanish.
    Terms {
        #[arg(long, default_value = "prototype")]
        sheaf: String,
    },
    Assemble {
        #[arg(long, default_value = "prototype")]
        sheaf: String,
    },
    /// Index tables for degrees −1, 0, 1 and the list of groups feeding degree 2.
    Tables,
}

#[derive(Debug, Subcommand)]
pub enum InstantonCmd {
    Build {
        #[arg(long, default_value = "prototype")]
        sheaf: String,
    },
    Check {
        #[arg(long, default_value = "prototype")]
        sheaf: String,
    },
    Restrict {
        /// `h` or `e`.
        #[arg(long, default_value = "h")]
        divisor: String,
        #[arg(long, default_value = "-6", allow_hyphen_values = true)]
        kmin: i64,
        #[arg(long, default_value = "6", allow_hyphen_values = true)]
        kmax: i64,
    },
    Moduli,
    Ulrich,
    Elementary,
}

#[derive(Debug, Subcommand)]
pub enum ReproduceCmd {
    /// Every acceptance criterion in one consolidated document.
    All,
}

/// One emitted document.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    /// Every requested verdict is PASS and every reported value is exact.
    pub ok: bool,
    /// Not ok only for want of a decision (an INCONCLUSIVE verdict or an open interval).
    pub inconclusive: bool,
    pub result: Value,
    #[serde(skip)]
    pub markdown: String,
}

impl Report {
    pub fn render(&self) -> Result<String> {
        match self.config.format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Markdown => Ok(format!(
                "# {}\n\nconfig: `{}`\n\n{}\n\nstatus: {}\n",
                self.command,
                serde_json::to_string(&self.config)?,
                self.markdown.trim_end(),
                if self.ok { "ok" } else { "not ok" }
            )),
        }
    }
}

pub fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b, got {s:?}"))?;
    let a = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

/// Parses sums of terms like `3/2 xi^2`, `-alpha`, `xi*alpha^2`, `4`.
pub fn parse_class(s: &str, n: usize) -> Result<ChowClass> {
    let bad = |m: &str| Error::Invalid(format!("cannot parse class {s:?}: {m}"));
    let norm = s.replace('ξ', "xi").replace('α', "alpha").replace(' ', "");
    let norm = norm.replace('-', "+-");
    let mut total = ChowClass::zero(n);
    for term in norm.split('+').filter(|t| !t.is_empty()) {
        let (neg, mut rest) = match term.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, term),
        };
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit() || *c == '/').collect();
        let coeff = if digits.is_empty() {
            BigRational::from_integer(BigInt::from(1))
        } else {
            rest = &rest[digits.len()..];
            digits.parse::<BigRational>().map_err(|e| bad(&e.to_string()))?
        };
        let coeff = if neg { -coeff } else { coeff };
        let mut cls = ChowClass::scalar(n, coeff);
        for factor in rest.split('*').filter(|f| !f.is_empty()) {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().map_err(|e| bad(&e.to_string()))?),
                None => (factor, 1),
            };
            let g = match base {
                "xi" => ChowClass::xi(n),
                "alpha" | "a" => ChowClass::alpha(n),
                _ => return Err(bad(&format!("unknown generator {base:?}"))),
            };
            cls = cls.try_mul(&g.pow(exp))?;
        }
        total = total.try_add(&cls)?;
    }
    Ok(total)
}

fn polarization_for(cfg: &RunConfig, n: usize, default: Option<Polarization>) -> Result<Polarization> {
    match cfg.polarization {
        Some((a, b)) => Ok(Polarization::custom(n, a, b)),
        None => match default {
            Some(l) => Ok(l),
            None => Polarization::standard(n),
        },
    }
}

pub fn resolve_sheaf(cfg: &RunConfig, name: &str) -> Result<Construction> {
    let n = cfg.n;
    let mut c = match name {
        "prototype" | "odd" => build_odd(n)?,
        "even-example" | "even" => {
            if n != 4 {
                return Err(Error::Invalid(format!("the even example lives on n = 4, got --n {n}")));
            }
            build_even4()?
        }
        "elementary" => build_elementary(n)?,
        _ => {
            let spec = name
                .strip_prefix("line:")
                .ok_or_else(|| Error::Invalid(format!("unknown sheaf {name:?}")))?;
            let (p, q) = parse_pair(spec).map_err(Error::Invalid)?;
            Construction {
                label: format!("line-{p}-{q}"),
                registry: Registry::new(n),
                sheaf: SheafExpr::line(p, q),
                polarization: polarization_for(cfg, n, None).unwrap_or(Polarization::custom(n, 1, 1)),
                parent: None,
            }
        }
    };
    c.polarization = polarization_for(cfg, n, Some(c.polarization))?;
    if let Some(path) = &cfg.axioms {
        let text = std::fs::read_to_string(path)?;
        c.registry.merge_json(&text)?;
    }
    Ok(c)
}

fn solver_options(cfg: &RunConfig) -> SolverOptions {
    let mut o = SolverOptions::default();
    if let Some(s) = cfg.seed {
        o.coordinates = CoordinateMode::Random(s);
    }
    o
}

fn check_options(cfg: &RunConfig) -> CheckOptions {
    let mut o = CheckOptions { solver: solver_options(cfg), ..CheckOptions::default() };
    if let Some(s) = cfg.seed {
        o.sample_seed = s;
    }
    o
}

fn parse_twists(spec: &str, n: usize) -> Result<Vec<(i64, i64)>> {
    match spec {
        "exceptional" => Ok(exceptional_collection(n).bundles),
        "monad" => Ok(crate::beilinson::query_twists(n)),
        _ => spec
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(|t| parse_pair(t).map_err(Error::Invalid))
            .collect(),
    }
}

fn ints(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Report> {
    let cfg = &cli.config;
    let n = cfg.n;
    let opts = solver_options(cfg);
    let mut inconclusive = false;
    let (command, ok, result, markdown): (&str, bool, Value, String) = match &cli.command {
        Command::Chow(c) => match c {
            ChowCmd::Mul { a, b } => {
                let x = parse_class(a, n)?.try_mul(&parse_class(b, n)?)?;
                ("chow mul", true, json!({ "product": x.to_string() }), format!("({a})·({b}) = {x}"))
            }
            ChowCmd::Degree { a } => {
                let x = parse_class(a, n)?;
                let l = polarization_for(cfg, n, None).ok();
                let against = if x.part(1) == x {
                    l.as_ref().map(|l| crate::chow::degree_against(&x, l).to_string())
                } else {
                    None
                };
                (
                    "chow degree",
                    true,
                    json!({ "class": x.to_string(), "degree": x.degree().to_string(), "against_L": against }),
                    format!("deg({x}) = {}{}", x.degree(), against.map_or(String::new(), |d| format!(", against L: {d}"))),
                )
            }
            ChowCmd::Chern { sheaf } => {
                let (what, cls) = match sheaf {
                    None => ("tangent bundle".to_string(), chern_tangent(n)),
                    Some(s) => {
                        let c = resolve_sheaf(cfg, s)?;
                        (c.sheaf.to_string(), c.registry.chern_of(&c.sheaf)?)
                    }
                };
                ("chow chern", true, json!({ "of": what, "chern": cls.to_string() }), format!("c({what}) = {cls}"))
            }
            ChowCmd::Todd => {
                let t = todd_tangent(n);
                ("chow todd", true, json!({ "todd": t.to_string() }), format!("td = {t}"))
            }
            ChowCmd::Chi { p, q } => {
                let hrr = hrr_chi(&ChowClass::divisor(n, *p, *q).exp());
                let closed = chi_line(*p, *q, n)?;
                let agree = hrr == BigRational::from_integer(closed.clone());
                (
                    "chow chi",
                    agree,
                    json!({ "p": p, "q": q, "hrr": hrr.to_string(), "closed_form": closed.to_string(), "agree": agree }),
                    format!("χ(O({p},{q})) = {hrr} by Riemann–Roch, {closed} by the closed form"),
                )
            }
        },
        Command::Coh(c) => match c {
            CohCmd::Line { p, q } => {
                let h = h_line_all(*p, *q, n);
                ("coh line", true, json!({ "p": p, "q": q, "h": h }), format!("h^•(O({p},{q})) = [{}]", ints(&h)))
            }
            CohCmd::Omega { l, p, q } => {
                if *l >= n {
                    return Err(Error::Invalid(format!("l must be below n = {n}")));
                }
                let h = h_omega_all(*l, *p, *q, n);
                (
                    "coh omega",
                    true,
                    json!({ "l": l, "p": p, "q": q, "h": h }),
                    format!("h^•(Ω^{l}({p},{q})) = [{}]", ints(&h)),
                )
            }
            CohCmd::Table { sheaf, twists } => {
                let c = resolve_sheaf(cfg, sheaf)?;
                let tw = parse_twists(twists, n)?;
                let mut s = Solver::new(&c.registry, opts);
                let mut t = s.table(&c.sheaf, &tw)?;
                match sheaf.as_str() {
                    "prototype" | "odd" | "even-example" | "even" => t = t.with_label("E"),
                    "elementary" => t = t.with_label("G"),
                    _ => {}
                }
                let exact = t.is_exact();
                let md = t.to_markdown();
                let result = json!({ "table": t, "trace": s.trace(), "replay_ok": s.replay().is_ok() });
                ("coh table", exact, result, md)
            }
        },
        Command::Sections(SectionsCmd::H0Ideal { config, p, q }) => {
            let x: Vec<SubvarietySpec> = config
                .split(',')
                .map(|k| SubvarietySpec::new(SubKind::parse(k.trim())?, n))
                .collect::<Result<_>>()?;
            let m = restrict_matrix(&x, *p, *q, opts.coordinates)?;
            let r = m.rank_report();
            let h0 = m.matrix.nullity();
            (
                "sections h0-ideal",
                true,
                json!({ "p": p, "q": q, "h0": h0, "source_dim": m.source_dim, "rank": r }),
                format!("h⁰(I_X({p},{q})) = {h0}: evaluation {} → {} of rank {}", m.source_dim, r.rows, r.rank),
            )
        }
        Command::Stability(c) => match c {
            StabilityCmd::Region { sheaf, stable } => {
                let con = resolve_sheaf(cfg, sheaf)?;
                let c1 = con.c1()?;
                let mu = slope(&c1, 2, &con.polarization);
                let r = region(&con.polarization, mu.clone(), !stable);
                let (c0, s) = r.closed_form();
                let matches = region_matches_closed_form(&r, n);
                let cf = closed_form_region(n).map(|(a, b)| (a.to_string(), b.to_string()));
                (
                    "stability region",
                    matches != Some(false),
                    json!({
                        "region": r,
                        "delta_xi": delta((1, 0), &con.polarization).to_string(),
                        "delta_alpha": delta((0, 1), &con.polarization).to_string(),
                        "closed_form": cf,
                        "matches_closed_form": matches,
                    }),
                    format!(
                        "μ = {mu}; θ = O(−p,−q) is tested for q {} {c0} − ({s})·p",
                        if *stable { "≥" } else { ">" }
                    ),
                )
            }
            StabilityCmd::Certify { sheaf, stable, samples } => {
                let con = resolve_sheaf(cfg, sheaf)?;
                let seed = cfg.seed.unwrap_or(CheckOptions::default().sample_seed);
                let mut cert = Certifier::new(&con.registry, opts).with_sampling(seed, *samples);
                let out = match &con.parent {
                    Some(parent) => {
                        let pc = cert.certify(parent, &con.polarization, !stable)?;
                        crate::stability::certify_subsheaf(&con.registry, &con.sheaf, &pc, parent)?
                    }
                    None => cert.certify(&con.sheaf, &con.polarization, !stable)?,
                };
                let ok = out.verdict == Verdict::SemistableCertified;
                inconclusive = out.verdict == Verdict::Inconclusive;
                let md = out.to_markdown();
                ("stability certify", ok, serde_json::to_value(&out)?, md)
            }
        },
        Command::Monad(c) => match c {
            MonadCmd::Terms { sheaf } => {
                let con = resolve_sheaf(cfg, sheaf)?;
                let t = query_table(&con.registry, &con.sheaf, opts)?;
                let mut terms = Vec::new();
                let mut md = String::new();
                for p in -(n as i64)..=(n as i64) {
                    let term = c_terms(&t, p, n)?;
                    md.push_str(&format!("C^{p} = {term}\n"));
                    terms.push(term);
                }
                ("monad terms", true, json!({ "terms": terms, "table": t }), md)
            }
            MonadCmd::Assemble { sheaf } => {
                let con = resolve_sheaf(cfg, sheaf)?;
                let m = monad_for(&con.registry, &con.sheaf, opts)?;
                let ok = m.checks.rank && m.checks.chern && m.checks.euler;
                let md = m.to_string();
                ("monad assemble", ok, json!({ "display": md, "monad": m }), md)
            }
            MonadCmd::Tables => {
                let tables: Vec<_> = (-1..=1).map(|p| json!({ "p": p, "rows": contribution_tables(p, n) })).collect();
                let obs = obstruction_list(n);
                let mut md = String::new();
                for p in -1..=1 {
                    md.push_str(&format!("degree {p}:\n"));
                    for r in contribution_tables(p, n) {
                        md.push_str(&format!("  s = {}: {:?} ({:?})\n", r.s, r.pairs, r.source));
                    }
                }
                md.push_str(&format!("degree 2 would read: {obs:?}\n"));
                ("monad tables", true, json!({ "tables": tables, "obstruction": obs }), md)
            }
        },
        Command::Instanton(c) => match c {
            InstantonCmd::Build { sheaf } => {
                let con = resolve_sheaf(cfg, sheaf)?;
                let result = json!({
                    "label": con.label,
                    "sheaf": con.sheaf.to_string(),
                    "polarization": con.polarization,
                    "c1": con.c1()?.to_string(),
                    "c2": con.c2()?.to_string(),
                    "charge": con.charge()?.to_string(),
                    "registry": serde_json::from_str::<Value>(&con.registry.to_json()?)?,
                });
                let md = format!(
                    "{}: {} with c₁ = {}, c₂ = {}, charge {}\n\n{}",
                    con.label,
                    con.sheaf,
                    con.c1()?,
                    con.c2()?,
                    con.charge()?,
                    con.registry.records().iter().map(|r| format!("- {r}")).collect::<Vec<_>>().join("\n")
                );
                ("instanton build", true, result, md)
            }
            InstantonCmd::Check { sheaf } => {
                let con = resolve_sheaf(cfg, sheaf)?;
                let r = check(&con, &check_options(cfg))?;
                let md = format!("{}\n{}", r.to_markdown(), r.stability.to_markdown());
                inconclusive = r.verdict == InstantonVerdict::Inconclusive;
                ("instanton check", r.verdict == InstantonVerdict::Instanton, serde_json::to_value(&r)?, md)
            }
            InstantonCmd::Restrict { divisor, kmin, kmax } => {
                let d = match divisor.as_str() {
                    "h" | "H" => Divisor::H,
                    "e" | "E" | "exceptional" => Divisor::Exceptional,
                    _ => return Err(Error::Invalid(format!("unknown divisor {divisor:?}"))),
                };
                let con = resolve_sheaf(cfg, "prototype")?;
                let ks: Vec<i64> = (*kmin..=*kmax).collect();
                let r = restrict_to_divisor(&con, d, &ks, opts)?;
                let ok = r.rows.iter().all(|row| row.agrees && row.h.iter().all(|v| v.is_exact()));
                inconclusive = !ok && r.rows.iter().all(|row| row.agrees);
                let md = r
                    .rows
                    .iter()
                    .map(|row| {
                        let h: Vec<String> = row.h.iter().map(|v| v.to_string()).collect();
                        format!("k = {}: h = [{}], χ = {:?}, split model [{}]", row.k, h.join(", "), row.chi, ints(&row.model_h))
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                ("instanton restrict", ok, serde_json::to_value(&r)?, md)
            }
            InstantonCmd::Moduli => {
                let m = moduli_dimension(opts)?;
                let md = [&m.delta_ideal, &m.delta_i2, &m.h0_ek, &m.h1_ee]
                    .iter()
                    .map(|c| format!("{}: engine {}, printed {}", c.quantity, c.engine, c.printed))
                    .collect::<Vec<_>>()
                    .join("\n");
                let ok = m.replay_ok && m.fixpoint_ok && m.delta_ideal.agrees;
                ("instanton moduli", ok, serde_json::to_value(&m)?, md)
            }
            InstantonCmd::Ulrich => {
                let u = ulrich_check(opts)?;
                let md = format!(
                    "failures: {}\n{}: engine {}, printed {}",
                    if u.failures.is_empty() { "none".into() } else { u.failures.join(", ") },
                    u.top.quantity,
                    u.top.engine,
                    u.top.printed
                );
                ("instanton ulrich", u.failures.is_empty(), serde_json::to_value(&u)?, md)
            }
            InstantonCmd::Elementary => {
                let con = resolve_sheaf(cfg, "elementary")?;
                let r = check(&con, &check_options(cfg))?;
                let md = format!("{}\n{}", r.to_markdown(), r.stability.to_markdown());
                inconclusive = r.verdict == InstantonVerdict::Inconclusive;
                ("instanton elementary", r.verdict == InstantonVerdict::Instanton, serde_json::to_value(&r)?, md)
            }
        },
        Command::Reproduce(ReproduceCmd::All) => {
            let rs = run_all(opts)?;
            let ok = rs.iter().all(|r| r.passed);
            let md = rs
                .iter()
                .map(|r| format!("{:>2}. [{}] {}: {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title, r.detail))
                .collect::<Vec<_>>()
                .join("\n");
            ("reproduce all", ok, serde_json::to_value(&rs)?, md)
        }
    };
    if cfg.verbose > 0 {
        eprintln!("{command}: {}", if ok { "ok" } else { "not ok" });
    }
    Ok(Report { command: command.to_string(), config: cfg.clone(), ok, inconclusive: inconclusive && !ok, result, markdown })
}

/// Parses `args`, runs, and returns the exit status with the document to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            let doc = json!({ "error": "usage", "message": e.to_string() });
            return (2, serde_json::to_string_pretty(&doc).unwrap_or_default() + "\n");
        }
    };
    match execute(&cli).and_then(|r| Ok((r.ok, r.inconclusive, r.render()?))) {
        Ok((true, _, text)) => (0, text),
        Ok((false, true, text)) => (if cli.config.strict { 1 } else { 0 }, text),
        Ok((false, false, text)) => (1, text),
        Err(e) => {
            let doc = json!({ "error": error_kind(&e), "message": e.to_string(), "config": cli.config });
            (2, serde_json::to_string_pretty(&doc).unwrap_or_default() + "\n")
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch(..) => "dimension-mismatch",
        Error::NonIntegral(_) => "non-integral",
        Error::Invalid(_) => "invalid-input",
        Error::Overlap(_) => "overlap",
        Error::Hypothesis(_) => "hypothesis",
        Error::Unresolvable(_) => "unresolvable",
        Error::Infeasible { .. } => "infeasible",
        Error::IterationCap(_) => "iteration-cap",
        Error::Inexact(_) => "inexact",
        Error::MonadObstruction { .. } => "monad-obstruction",
        Error::Json(_) => "json",
        Error::Io(_) => "io",
    }
}
