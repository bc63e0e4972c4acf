//! Command drivers. Each returns a [`RunReport`] whose `exit_status`
//! follows the [`crate::exit`] contract; [`render_human`] turns a report into
//! the fixed-width tables printed by default.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use chern_descent_core::coeffs::{composition_sum_checks, verify_identities, IdentityReport};
use chern_descent_core::descent::{
    catalogue, descend_chain, CatalogueEntry, ModelFamily, ModelShape,
};
use chern_descent_core::exact::{BernoulliTable, Rational};
use chern_descent_core::gate::{
    self, build_certificate, max_m, Assumptions, Certificate, HypothesisReport, Theorem, TraceMode,
};
use chern_descent_core::{CoeffTable, SplitChernVector};

use crate::input::{format_rational, parse_split_vector};
use crate::report::*;
use crate::{exit, CliError};

/// Largest accepted `--max-i` / `--max-n`; enumeration is exponential in both.
pub const MAX_VERIFY_BOUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_i: usize,
    pub max_n: usize,
    /// Test hook: run with `B_1 = +1/2`.
    pub flip_b1: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_i: 12,
            max_n: 12,
            flip_b1: false,
        }
    }
}

/// What a `chain` or `check` runs on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Catalogue(ModelFamily),
    File(PathBuf),
}

impl Target {
    /// `projective_space N`, `quadric N` or `grassmannian K M`.
    pub fn from_words(words: &[String]) -> Result<Target, CliError> {
        let (name, params) = words
            .split_first()
            .ok_or_else(|| CliError::Usage("expected a manifold name or --input FILE".into()))?;
        let ints = params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad parameter {p:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let family = match (name.as_str(), ints.as_slice()) {
            ("projective_space", &[n]) => ModelFamily::ProjectiveSpace(n),
            ("quadric", &[n]) => ModelFamily::Quadric(n),
            ("grassmannian", &[k, m]) => ModelFamily::Grassmannian { k, m },
            ("projective_space" | "quadric", _) => {
                return Err(CliError::Usage(format!("{name} takes one parameter n")))
            }
            ("grassmannian", _) => {
                return Err(CliError::Usage(
                    "grassmannian takes two parameters k m".into(),
                ))
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown manifold {name:?}; expected projective_space, quadric or grassmannian"
                )))
            }
        };
        Ok(Target::Catalogue(family))
    }

    fn describe(&self) -> String {
        match self {
            Target::Catalogue(family) => family_words(*family),
            Target::File(path) => format!("--input {}", path.display()),
        }
    }
}

fn family_words(family: ModelFamily) -> String {
    match family {
        ModelFamily::ProjectiveSpace(n) => format!("projective_space {n}"),
        ModelFamily::Quadric(n) => format!("quadric {n}"),
        ModelFamily::Grassmannian { k, m } => format!("grassmannian {k} {m}"),
    }
}

enum Loaded {
    Split {
        vector: SplitChernVector,
        entry: Option<CatalogueEntry>,
        name: String,
    },
    Shape(CatalogueEntry),
}

fn load(target: &Target) -> Result<Loaded, CliError> {
    match target {
        Target::Catalogue(family) => {
            let entry = catalogue(*family)?;
            match entry.vector() {
                Some(v) => Ok(Loaded::Split {
                    vector: v.clone(),
                    name: family.label(),
                    entry: Some(entry),
                }),
                None => Ok(Loaded::Shape(entry)),
            }
        }
        Target::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let vector = parse_split_vector(&text)?;
            Ok(Loaded::Split {
                vector,
                entry: None,
                name: path.display().to_string(),
            })
        }
    }
}

fn q(r: &Rational) -> String {
    format_rational(r)
}

fn report(
    command: String,
    parameters: BTreeMap<String, String>,
    results: Results,
    exit_status: i32,
) -> RunReport {
    RunReport {
        schema_version: SCHEMA_VERSION,
        command,
        parameters,
        results,
        exit_status,
    }
}

fn summarize(index: usize, report: &IdentityReport) -> CheckCount {
    CheckCount {
        index,
        checks: report.checks.len(),
        failed: report.failures().count(),
    }
}

pub fn cmd_verify(opts: &VerifyOptions) -> Result<RunReport, CliError> {
    for (flag, value) in [("--max-i", opts.max_i), ("--max-n", opts.max_n)] {
        if value == 0 || value > MAX_VERIFY_BOUND {
            return Err(CliError::Usage(format!(
                "{flag} must be between 1 and {MAX_VERIFY_BOUND}"
            )));
        }
    }
    let bernoulli_len = opts.max_i + 2;
    let bernoulli = if opts.flip_b1 {
        BernoulliTable::with_flipped_b1(bernoulli_len)
    } else {
        BernoulliTable::new(bernoulli_len)
    };
    let b1 = q(bernoulli.get(1).unwrap());
    let table = CoeffTable::with_bernoulli(opts.max_i, 2, bernoulli);

    let mut all = IdentityReport::default();
    let mut levels = Vec::new();
    for i in 1..=opts.max_i {
        let level = verify_identities(&table, i)?;
        levels.push(summarize(i, &level));
        all.extend(level);
    }
    let compositions = composition_sum_checks(opts.max_n)?;
    let composition_sums = summarize(opts.max_n, &compositions);
    all.extend(compositions);

    let failures: Vec<IdentityFailure> = all
        .failures()
        .take(MAX_LISTED_FAILURES)
        .map(|c| IdentityFailure {
            identity: c.kind.name().to_string(),
            location: c.location.to_string(),
            lhs: q(&c.lhs),
            rhs: q(&c.rhs),
            discrepancy: q(&c.discrepancy()),
        })
        .collect();
    let failure_count = all.failures().count();
    let passed = failure_count == 0;

    let mut parameters = BTreeMap::new();
    parameters.insert("max_i".to_string(), opts.max_i.to_string());
    parameters.insert("max_n".to_string(), opts.max_n.to_string());
    let mut command = format!("verify --max-i {} --max-n {}", opts.max_i, opts.max_n);
    if opts.flip_b1 {
        parameters.insert("inject_flipped_b1".to_string(), "true".to_string());
        command.push_str(" --inject-flipped-b1");
    }
    let results = Results::Verify(VerifyResults {
        bernoulli_b1: b1,
        levels,
        composition_sums,
        failure_count,
        failures,
        passed,
    });
    Ok(report(
        command,
        parameters,
        results,
        if passed { exit::OK } else { exit::CHECK_FAILED },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainOptions {
    pub target: Target,
    pub degrees: Option<Vec<u32>>,
}

pub fn cmd_chain(opts: &ChainOptions) -> Result<RunReport, CliError> {
    let mut parameters = BTreeMap::new();
    let mut command = format!("chain {}", opts.target.describe());
    parameters.insert("manifold".to_string(), opts.target.describe());
    if let Some(degrees) = &opts.degrees {
        let joined = degrees
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        command.push_str(&format!(" --degrees {joined}"));
        parameters.insert("degrees".to_string(), joined);
    }

    let (vector, entry, name) = match load(&opts.target)? {
        Loaded::Shape(entry) => {
            let ModelShape::NonSplit {
                head,
                branches,
                n_lower,
                n_upper,
            } = entry.shape
            else {
                unreachable!("shape-only entries are non-split")
            };
            let results = Results::ChainShape(ChainShapeResults {
                manifold: entry.family.label(),
                split: false,
                head,
                branches,
                n_lower,
                n_upper,
            });
            return Ok(report(command, parameters, results, exit::OK));
        }
        Loaded::Split {
            vector,
            entry,
            name,
        } => (vector, entry, name),
    };

    let degrees: Option<Vec<u32>> = match (&opts.degrees, &entry) {
        (Some(d), _) => Some(d.clone()),
        (None, Some(entry)) => entry.degrees().map(<[u32]>::to_vec),
        (None, None) => None,
    };
    let table = CoeffTable::new(1, vector.dim());
    let chain = descend_chain(&table, &vector, degrees.as_deref())?;

    let mut rows = vec![ChainRow {
        step: 0,
        label: vector
            .label()
            .map(str::to_string)
            .unwrap_or_else(|| "X".to_string()),
        dim: vector.dim() as i64,
        degree: None,
        scalars: vector.scalars().iter().map(q).collect(),
    }];
    for (idx, step) in chain.steps.iter().enumerate() {
        let (label, scalars) = match &step.descended {
            Some(h) => (
                h.label()
                    .map(str::to_string)
                    .unwrap_or_else(|| format!("H_{}", idx + 1)),
                h.scalars().iter().map(q).collect(),
            ),
            None => ("pt".to_string(), Vec::new()),
        };
        rows.push(ChainRow {
            step: idx + 1,
            label,
            dim: step.family_dim,
            degree: Some(step.degree),
            scalars,
        });
    }

    let expected_chain = match (&entry, &opts.degrees) {
        (
            Some(CatalogueEntry {
                shape: ModelShape::Split { expected_chain, .. },
                ..
            }),
            None,
        ) => Some(expected_chain.clone()),
        _ => None,
    };
    let matches_expected = expected_chain.as_ref().map(|want| {
        let got: Vec<&str> = rows.iter().map(|r| r.label.as_str()).collect();
        got == want.iter().map(String::as_str).collect::<Vec<_>>()
    });
    let status = if matches_expected == Some(false) {
        exit::CHECK_FAILED
    } else {
        exit::OK
    };
    let results = Results::Chain(ChainResults {
        manifold: name,
        rows,
        degree_sequence: chain.degree_sequence.clone(),
        terminal: chain.terminal.name().to_string(),
        n: chain.n_invariant,
        expected_chain,
        matches_expected,
    });
    Ok(report(command, parameters, results, status))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub target: Target,
    pub theorem: Theorem,
    pub m: Option<usize>,
    /// Side conditions for `--input` vectors; catalogue models know their own.
    pub assumptions: Assumptions,
}

fn catalogue_assumptions(family: ModelFamily) -> Assumptions {
    // Projective spaces and quadrics of dimension >= 2 are covered by lines,
    // and every minimal family consists of lines. Q^1 is a conic.
    let lines = match family {
        ModelFamily::ProjectiveSpace(_) => true,
        ModelFamily::Quadric(n) => n >= 2,
        ModelFamily::Grassmannian { .. } => true,
    };
    Assumptions {
        degree_one_cover: lines,
        every_family_degree_one: lines,
    }
}

fn hypothesis_results(r: &HypothesisReport) -> HypothesisResults {
    HypothesisResults {
        m: r.m,
        passed: r.passed,
        per_k: r
            .per_k
            .iter()
            .map(|row| MarginRow {
                k: row.k,
                threshold: q(&row.threshold),
                actual: q(&row.actual),
                margin: q(&row.margin),
            })
            .collect(),
        conclusions: r.conclusions.iter().map(|c| c.name().to_string()).collect(),
    }
}

fn certificate_results(c: &Certificate) -> CertificateResults {
    CertificateResults {
        mode: match c.mode {
            TraceMode::Threshold => "threshold",
            TraceMode::Actual => "actual",
        }
        .to_string(),
        all_positive: c.all_positive,
        levels: c
            .levels
            .iter()
            .map(|level| CertificateLevelResults {
                i: level.i,
                bounds: level
                    .bounds
                    .iter()
                    .map(|b| BoundRow {
                        quantity: b.quantity.name().to_string(),
                        b_sum: q(&b.b_sum),
                        closed: b.closed.as_ref().map(q),
                        comparison: b.comparison.symbol().to_string(),
                        threshold: q(&b.threshold),
                        holds: b.holds(),
                        routes_agree: b.routes_agree(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

pub fn cmd_check(opts: &CheckOptions) -> Result<RunReport, CliError> {
    let mut parameters = BTreeMap::new();
    parameters.insert("manifold".to_string(), opts.target.describe());
    parameters.insert("theorem".to_string(), opts.theorem.name().to_string());
    let mut command = format!(
        "check {} --theorem {}",
        opts.target.describe(),
        opts.theorem.name()
    );
    if let Some(m) = opts.m {
        parameters.insert("m".to_string(), m.to_string());
        command.push_str(&format!(" --m {m}"));
    }

    let (vector, assumptions, name) = match load(&opts.target)? {
        Loaded::Shape(entry) => {
            return Err(CliError::Usage(format!(
                "{} is outside the split Chern model; theorem checks need split Chern data",
                entry.family.label()
            )))
        }
        Loaded::Split {
            vector,
            entry: Some(entry),
            name,
        } => (vector, catalogue_assumptions(entry.family), name),
        Loaded::Split {
            vector,
            entry: None,
            name,
        } => (vector, opts.assumptions, name),
    };
    if assumptions.degree_one_cover {
        parameters.insert("degree_one_cover".to_string(), "true".to_string());
    }
    if assumptions.every_family_degree_one {
        parameters.insert("every_family_degree_one".to_string(), "true".to_string());
    }

    let best = max_m(&vector, opts.theorem);
    let (hypothesis, certificate, status) = match opts.m {
        Some(m) => {
            let hyp = gate::check(opts.theorem, &vector, m, assumptions)?;
            let cert = if hyp.passed {
                let table = CoeffTable::new(m.max(1), 2);
                Some(build_certificate(
                    &table,
                    &vector,
                    opts.theorem,
                    m,
                    TraceMode::Threshold,
                )?)
            } else {
                None
            };
            let ok = hyp.passed && cert.as_ref().is_some_and(|c| c.all_positive);
            (
                Some(hyp),
                cert,
                if ok { exit::OK } else { exit::CHECK_FAILED },
            )
        }
        None if best >= 1 => {
            let hyp = gate::check(opts.theorem, &vector, best, assumptions)?;
            (Some(hyp), None, exit::OK)
        }
        None => (None, None, exit::CHECK_FAILED),
    };

    let results = Results::Check(CheckResults {
        manifold: name,
        dim: vector.dim(),
        theorem: opts.theorem.name().to_string(),
        degree_one_cover: assumptions.degree_one_cover,
        every_family_degree_one: assumptions.every_family_degree_one,
        max_m: best,
        hypothesis: hypothesis.as_ref().map(hypothesis_results),
        certificate: certificate.as_ref().map(certificate_results),
    });
    Ok(report(command, parameters, results, status))
}

/// Strips the `/1` from integral `p/q` strings for display.
fn short(s: &str) -> &str {
    s.strip_suffix("/1").unwrap_or(s)
}

fn verdict(status: i32) -> &'static str {
    if status == exit::OK {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Fixed-width human-readable rendering of a report.
pub fn render_human(report: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "$ {}", report.command);
    match &report.results {
        Results::Verify(v) => {
            let _ = writeln!(
                out,
                "Bernoulli convention: B_1 = {}",
                short(&v.bernoulli_b1)
            );
            let _ = writeln!(out, "{:>5}  {:>7}  {:>6}", "level", "checks", "failed");
            for level in &v.levels {
                let _ = writeln!(
                    out,
                    "{:>5}  {:>7}  {:>6}",
                    level.index, level.checks, level.failed
                );
            }
            let _ = writeln!(
                out,
                "composition sums n <= {}: {} checks, {} failed",
                v.composition_sums.index, v.composition_sums.checks, v.composition_sums.failed
            );
            if let Some(first) = v.failures.first() {
                let _ = writeln!(
                    out,
                    "first failure: {} at {}: lhs = {}, rhs = {}, discrepancy = {}",
                    first.identity,
                    first.location,
                    short(&first.lhs),
                    short(&first.rhs),
                    short(&first.discrepancy)
                );
                let _ = writeln!(out, "total failures: {}", v.failure_count);
            }
        }
        Results::Chain(c) => {
            let _ = writeln!(out, "chain of {}", c.manifold);
            let _ = writeln!(
                out,
                "{:>4}  {:<8}  {:>4}  {:>6}  ch scalars r_1..r_dim",
                "step", "label", "dim", "degree"
            );
            for row in &c.rows {
                let degree = row.degree.map_or("-".to_string(), |d| d.to_string());
                let scalars: Vec<&str> = row.scalars.iter().map(|s| short(s)).collect();
                let _ = writeln!(
                    out,
                    "{:>4}  {:<8}  {:>4}  {:>6}  {}",
                    row.step,
                    row.label,
                    row.dim,
                    degree,
                    scalars.join(" ")
                );
            }
            let labels: Vec<&str> = c.rows.iter().map(|r| r.label.as_str()).collect();
            let _ = writeln!(out, "chain: {}", labels.join(" |- "));
            let _ = writeln!(out, "terminal: {}", c.terminal);
            match c.n {
                Some(n) => {
                    let _ = writeln!(out, "N = {n}");
                }
                None => {
                    let _ = writeln!(out, "N undetermined");
                }
            }
            if let Some(want) = &c.expected_chain {
                let _ = writeln!(
                    out,
                    "expected: {} ({})",
                    want.join(" |- "),
                    if c.matches_expected == Some(true) {
                        "match"
                    } else {
                        "MISMATCH"
                    }
                );
            }
        }
        Results::ChainShape(s) => {
            let _ = writeln!(out, "chain shape of {} (not split; no descent)", s.manifold);
            for branch in &s.branches {
                let _ = writeln!(out, "  {} |- {}", s.head.join(" |- "), branch.join(" |- "));
            }
            let _ = writeln!(out, "N_lower = {}", s.n_lower);
            let _ = writeln!(out, "N_upper = {}", s.n_upper);
        }
        Results::Check(c) => {
            let _ = writeln!(out, "{} on {} (dim {})", c.theorem, c.manifold, c.dim);
            let _ = writeln!(
                out,
                "assumed: degree-1 cover = {}, every family degree 1 = {}",
                c.degree_one_cover, c.every_family_degree_one
            );
            let _ = writeln!(out, "max m = {}", c.max_m);
            if let Some(h) = &c.hypothesis {
                let _ = writeln!(
                    out,
                    "hypothesis at m = {}: {}",
                    h.m,
                    if h.passed { "holds" } else { "fails" }
                );
                let _ = writeln!(
                    out,
                    "{:>3}  {:>12}  {:>12}  {:>12}",
                    "k", "threshold", "r_k", "margin"
                );
                for row in &h.per_k {
                    let _ = writeln!(
                        out,
                        "{:>3}  {:>12}  {:>12}  {:>12}",
                        row.k,
                        short(&row.threshold),
                        short(&row.actual),
                        short(&row.margin)
                    );
                }
                if let Some(row) = h.per_k.iter().find(|row| row.margin.starts_with('-')) {
                    let _ = writeln!(
                        out,
                        "first failure: k = {} with margin {}",
                        row.k,
                        short(&row.margin)
                    );
                }
                if !h.conclusions.is_empty() {
                    let _ = writeln!(out, "conclusions: {}", h.conclusions.join(", "));
                }
            }
            if let Some(cert) = &c.certificate {
                let _ = writeln!(
                    out,
                    "certificate ({} mode): {}",
                    cert.mode,
                    if cert.all_positive {
                        "all positive"
                    } else {
                        "FAILED"
                    }
                );
                let _ = writeln!(
                    out,
                    "{:>3}  {:<13}  {:>12}  {:>12}  {:>8}  ok",
                    "i", "quantity", "b-sum", "closed", "required"
                );
                for level in &cert.levels {
                    for b in &level.bounds {
                        let required = if b.comparison == "n/a" {
                            "n/a".to_string()
                        } else {
                            format!("{} {}", b.comparison, short(&b.threshold))
                        };
                        let _ = writeln!(
                            out,
                            "{:>3}  {:<13}  {:>12}  {:>12}  {:>8}  {}",
                            level.i,
                            b.quantity,
                            short(&b.b_sum),
                            b.closed.as_deref().map(short).unwrap_or("-"),
                            required,
                            if b.holds && b.routes_agree {
                                "yes"
                            } else {
                                "NO"
                            }
                        );
                    }
                }
            }
        }
    }
    let _ = writeln!(out, "result: {}", verdict(report.exit_status));
    out.lines()
        .map(|line| format!("{}\n", line.trim_end()))
        .collect()
}
