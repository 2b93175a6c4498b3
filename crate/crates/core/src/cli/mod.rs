//! The `coxkit` command line: argument parsing, dispatch and report rendering.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a computation
//! cannot be completed, 2 on usage or parse errors.

pub mod parse;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use itertools::Itertools;
use serde_json::{json, Value};

use crate::coxeter::{coset_min, enumerate_positive_roots, parse_system, to_dsl, CoxeterSystem, RootVector};
use crate::error::Error;
use crate::families::{
    classify_family, tower_check, truncate, whole_group, FamilyDescriptor, TowerProperty, TruncationTower,
};
use crate::label::Label;
use crate::locpar::{finite_type_recognize, lp_closure, ClosureEvidence, Finiteness};
use crate::parabolic::{intersect_parabolics_finite, is_parabolic, ParabolicDescriptor, ParabolicSearch, ParabolicVerdict};
use crate::refsub::ReflectionSubgroup;
use crate::scenarios::{verify_example_3_3, verify_example_4_5, verify_remark_g2, ScenarioOptions, ScenarioResult};

use parse::{parse_descriptor, parse_element, parse_elements, parse_roots, parse_subset};

#[derive(Parser, Debug)]
#[command(name = "coxkit", version, about = "Exact computations with Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Graph description file.
    #[arg(long, group = "source")]
    file: Option<PathBuf>,
    /// Graph description given inline, e.g. "nodes a b; edge a b 3".
    #[arg(long, group = "source")]
    inline: Option<String>,
    /// Named family: a1inf, a2inf, binf, dinf, ex33, ex45.
    #[arg(long, group = "source")]
    family: Option<String>,
    /// Family parameter `key=value`, e.g. m=4.
    #[arg(long = "param", value_parser = parse_kv)]
    params: Vec<(String, String)>,
    /// Truncation ranks `a..b` (inclusive); single-system verbs use the top rank.
    #[arg(long, value_parser = parse_ranks)]
    ranks: Option<(usize, usize)>,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Emit the JSON report.
    #[arg(long)]
    json: bool,
    /// Include wall-clock timings in the report (off by default for reproducible output).
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Finite-type recognition, or locally finite classification of a family.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Positive roots up to a depth.
    Roots {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Canonical simple roots of the reflection subgroup generated by `--roots`.
    Pi {
        #[command(flatten)]
        input: Input,
        /// Positive roots separated by `;`, e.g. "a; a+b".
        #[arg(long)]
        roots: String,
        #[command(flatten)]
        out: Output,
    },
    /// Parabolic closure (equal to the locally parabolic closure here) of `--elements`.
    Closure {
        #[command(flatten)]
        input: Input,
        /// Words separated by `;`, e.g. "a b; c".
        #[arg(long)]
        elements: String,
        #[command(flatten)]
        out: Output,
    },
    /// Decide whether the reflection subgroup generated by `--roots` is parabolic.
    IsParabolic {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        roots: String,
        #[arg(long, default_value_t = 200_000)]
        search_bound: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Intersection of two parabolic subgroups given as `word : generators`.
    Intersect {
        #[command(flatten)]
        input: Input,
        #[arg(long = "parabolic", num_args = 1, required = true)]
        parabolics: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Factor `w = w^I w_I`.
    CosetMin {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        element: String,
        #[arg(long)]
        subset: String,
        #[command(flatten)]
        out: Output,
    },
    /// Components of the odd Coxeter graph.
    OddComponents {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Run a scripted scenario: ex33, ex45 or g2.
    Verify {
        #[arg(long)]
        scenario: String,
        #[arg(long, default_value_t = 5)]
        max_i: usize,
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        /// Check the ex33 intersection step exhaustively up to this index.
        #[arg(long, default_value_t = 2)]
        exhaustive_up_to: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Check a property along a tower of truncations.
    Families {
        #[arg(long)]
        family: String,
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        #[arg(long, value_parser = parse_ranks, default_value = "2..8")]
        ranks: (usize, usize),
        /// locally-finite, union-is-subgroup, union-is-reflection-subgroup,
        /// union-locally-finite or union-locally-parabolic.
        #[arg(long, default_value = "locally-finite")]
        check: String,
        #[command(flatten)]
        out: Output,
    },
}

fn parse_kv(s: &str) -> std::result::Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected key=value, got `{s}`"))
}

fn parse_ranks(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got `{s}`"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad rank `{a}`"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad rank `{b}`"))?;
    if a > b {
        return Err(format!("empty rank range {a}..{b}"));
    }
    Ok((a, b))
}

/// Outcome of a command: exit code and the text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::UnknownGenerator(_) | Error::InvalidMatrix(_) | Error::InvalidParameter(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

struct Report {
    result: Value,
    certificates: Value,
    text: String,
    passed: bool,
}

impl Report {
    fn new(result: Value, text: String) -> Self {
        Report {
            result,
            certificates: json!({}),
            text,
            passed: true,
        }
    }
}

struct Loaded {
    sys: CoxeterSystem,
    input: Value,
}

fn params_map(params: &[(String, String)]) -> BTreeMap<String, String> {
    params.iter().cloned().collect()
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let sys = parse_system(&text)?;
        return Ok(Loaded {
            sys,
            input: json!({"source": "file", "path": path.display().to_string()}),
        });
    }
    if let Some(text) = &input.inline {
        let sys = parse_system(text)?;
        return Ok(Loaded {
            sys,
            input: json!({"source": "inline", "text": text}),
        });
    }
    if let Some(name) = &input.family {
        let family = FamilyDescriptor::by_name(name, &params_map(&input.params))?;
        let rank = input.ranks.map(|r| r.1).unwrap_or(6);
        let sys = truncate(&family, rank)?;
        return Ok(Loaded {
            sys,
            input: json!({"source": "family", "family": family.name(), "rank": rank}),
        });
    }
    Err(usage("one of --file, --inline or --family is required"))
}

fn roots_json(sys: &CoxeterSystem, roots: &[RootVector]) -> Value {
    Value::Array(roots.iter().map(|r| Value::String(r.display(sys))).collect())
}

fn roots_text(sys: &CoxeterSystem, roots: &[RootVector]) -> String {
    roots.iter().map(|r| r.display(sys)).join(", ")
}

fn descriptor_json(d: &ParabolicDescriptor) -> Value {
    let sys = d.system();
    json!({
        "w": d.w().display(),
        "subset": sys.names_of(d.subset()),
        "rank": d.rank(),
        "canonical_roots": roots_json(sys, &d.canonical_roots()),
    })
}

fn label_json(m: Label) -> Value {
    match m {
        Label::Finite(k) => json!(k),
        Label::Infinite => json!("oo"),
    }
}

fn classify(input: &Input) -> Result<Report, Failure> {
    if let Some(name) = &input.family {
        let family = FamilyDescriptor::by_name(name, &params_map(&input.params))?;
        let (a, b) = input.ranks.unwrap_or((2, 8));
        let ranks: Vec<usize> = (a.max(family.min_rank())..=b).collect();
        let c = classify_family(&family, &ranks)?;
        let verdict = match &c.verdict {
            Finiteness::LocallyFinite => "locally finite".to_string(),
            Finiteness::NotLocallyFinite => "not locally finite".to_string(),
            Finiteness::Undetermined { ranks } => format!(
                "undetermined (ranks {}..{} all finite)",
                ranks.first().unwrap_or(&0),
                ranks.last().unwrap_or(&0)
            ),
        };
        let mut text = format!(
            "{}: {}, {verdict}\n",
            c.family,
            c.pattern.clone().unwrap_or_else(|| "no named pattern".into())
        );
        for (n, label) in &c.per_rank {
            let _ = writeln!(text, "  rank {n}: {label}");
        }
        let result = json!({
            "family": c.family,
            "pattern": c.pattern,
            "verdict": verdict,
            "per_rank": c.per_rank.iter().map(|(n, l)| json!({"rank": n, "type": l})).collect::<Vec<_>>(),
        });
        return Ok(Report::new(result, text.trim_end().to_string()));
    }
    let loaded = load(input)?;
    let sys = &loaded.sys;
    let t = finite_type_recognize(&sys.graph());
    let order = t.order();
    let text = match &order {
        Some(o) if t.is_finite() => format!("{}, finite, order {o}", t.label()),
        _ => {
            let comps = t
                .components
                .iter()
                .map(|(c, ty)| format!("{{{}}}: {ty}", sys.names_of(c).join(", ")))
                .join("; ");
            format!("infinite; {comps}")
        }
    };
    let result = json!({
        "type": t.label(),
        "finite": t.is_finite(),
        "order": order.map(|o| o.to_string()),
        "components": t.components.iter().map(|(c, ty)| json!({"generators": sys.names_of(c), "type": ty.to_string()})).collect::<Vec<_>>(),
    });
    Ok(Report::new(result, text))
}

fn roots_verb(sys: &CoxeterSystem, depth: usize) -> Report {
    let e = enumerate_positive_roots(sys, depth);
    let mut text = String::new();
    for (r, d) in e.roots.iter().zip(&e.depths) {
        let _ = writeln!(text, "{d}: {}", r.display(sys));
    }
    let _ = write!(
        text,
        "{} positive roots{}",
        e.roots.len(),
        if e.saturated { " (all)" } else { " (depth bound reached)" }
    );
    let result = json!({
        "roots": e.roots.iter().zip(&e.depths).map(|(r, d)| json!({"root": r.display(sys), "depth": d})).collect::<Vec<_>>(),
        "count": e.roots.len(),
        "complete": e.saturated,
    });
    Report::new(result, text)
}

fn pi_verb(sys: &CoxeterSystem, roots: &str) -> Result<Report, Failure> {
    let roots = parse_roots(sys, roots)?;
    let g = ReflectionSubgroup::new(sys, &roots)?;
    let mut result = json!({
        "canonical_roots": roots_json(sys, g.canonical_roots()),
        "rank": g.rank(),
    });
    if let Ok(m) = g.induced_coxeter_matrix(64) {
        result["coxeter_matrix"] = Value::Array(
            m.iter()
                .map(|row| Value::Array(row.iter().map(|&l| label_json(l)).collect()))
                .collect(),
        );
    }
    Ok(Report::new(result, roots_text(sys, g.canonical_roots())))
}

fn closure_verb(sys: &CoxeterSystem, elements: &str) -> Result<Report, Failure> {
    let xs = parse_elements(sys, elements)?;
    let c = lp_closure(sys, &xs)?;
    let d = &c.descriptor;
    let text = format!(
        "{}  rank {}  canonical roots: {}",
        d.display(),
        d.rank(),
        roots_text(sys, &d.canonical_roots())
    );
    let mut report = Report::new(descriptor_json(d), text);
    if let ClosureEvidence::FiniteSupport { support } = &c.evidence {
        report.certificates = json!({"finite_support": support});
    }
    Ok(report)
}

fn is_parabolic_verb(sys: &CoxeterSystem, roots: &str, bound: usize) -> Result<Report, Failure> {
    let roots = parse_roots(sys, roots)?;
    let g = ReflectionSubgroup::new(sys, &roots)?;
    let verdict = is_parabolic(&g, &ParabolicSearch::with_bound(bound));
    Ok(match verdict {
        ParabolicVerdict::Yes { u, subset, descriptor } => {
            let images: Vec<RootVector> = g.canonical_roots().iter().map(|r| u.act(r)).collect();
            let mut r = Report::new(
                json!({"verdict": "yes", "subset": sys.names_of(&subset), "descriptor": descriptor_json(&descriptor)}),
                format!(
                    "yes: u = {}, u . Pi(G) = {{{}}}, G = {}",
                    u.display(),
                    roots_text(sys, &images),
                    descriptor.display()
                ),
            );
            r.certificates = json!({"u": u.display(), "images": roots_json(sys, &images)});
            r
        }
        ParabolicVerdict::No(reason) => Report::new(
            json!({"verdict": "no", "reason": format!("{reason:?}")}),
            format!("no: {reason:?}"),
        ),
        ParabolicVerdict::Unknown { explored } => Report::new(
            json!({"verdict": "unknown", "explored": explored}),
            format!("unknown: no certificate within {explored} states"),
        ),
    })
}

fn intersect_verb(sys: &CoxeterSystem, parabolics: &[String]) -> Result<Report, Failure> {
    if parabolics.len() != 2 {
        return Err(usage("intersect takes exactly two --parabolic arguments"));
    }
    let (w1, i1) = parse_descriptor(sys, &parabolics[0])?;
    let (w2, i2) = parse_descriptor(sys, &parabolics[1])?;
    let d1 = ParabolicDescriptor::new(&w1, &i1);
    let d2 = ParabolicDescriptor::new(&w2, &i2);
    let x = intersect_parabolics_finite(&d1, &d2)?;
    let mut r = Report::new(
        descriptor_json(&x.descriptor),
        format!("{}  rank {}", x.descriptor.display(), x.descriptor.rank()),
    );
    r.certificates = json!({"u": x.u.display(), "k": sys.names_of(&x.k)});
    Ok(r)
}

fn coset_min_verb(sys: &CoxeterSystem, element: &str, subset: &str) -> Result<Report, Failure> {
    let w = parse_element(sys, element)?;
    let i = parse_subset(sys, subset)?;
    let (wi, w_i) = coset_min(&w, &i);
    Ok(Report::new(
        json!({"w": w.display(), "w^I": wi.display(), "w_I": w_i.display()}),
        format!("{} = ({}) ({})", w.display(), wi.display(), w_i.display()),
    ))
}

fn odd_components_verb(sys: &CoxeterSystem) -> Report {
    let comps: Vec<Vec<String>> = sys.graph().odd_components().iter().map(|c| sys.names_of(c)).collect();
    let text = comps.iter().map(|c| format!("{{{}}}", c.join(", "))).join(", ");
    Report::new(json!({"components": comps}), text)
}

fn scenario_report(r: &ScenarioResult) -> Report {
    let mut text = String::new();
    for a in &r.assertions {
        if a.passed {
            let _ = writeln!(text, "PASS {}", a.description);
        } else {
            let _ = writeln!(
                text,
                "FAIL {}: expected {}, computed {}",
                a.description, a.expected, a.computed
            );
        }
    }
    let passed = r.passed();
    let _ = write!(
        text,
        "{}: {}, {} assertions",
        r.name,
        if passed { "pass" } else { "FAIL" },
        r.assertions.len()
    );
    Report {
        result: json!({
            "scenario": r.name,
            "passed": passed,
            "ranks": r.ranks,
            "assertion_count": r.assertions.len(),
            "assertions": serde_json::to_value(&r.assertions).expect("serializable"),
        }),
        certificates: json!({}),
        text,
        passed,
    }
}

fn verify_verb(scenario: &str, max_i: usize, params: &[(String, String)], exhaustive: usize) -> Result<Report, Failure> {
    let opts = ScenarioOptions {
        exhaustive_up_to: exhaustive,
        ..Default::default()
    };
    let r = match scenario {
        "ex33" => verify_example_3_3(max_i, &opts)?,
        "ex45" => {
            let m = match params_map(params).get("m") {
                Some(t) => t.parse::<Label>().map_err(|_| usage(format!("bad label `{t}` for m")))?,
                None => Label::Finite(4),
            };
            verify_example_4_5(m, max_i, &opts)?
        }
        "g2" => verify_remark_g2()?,
        other => return Err(usage(format!("unknown scenario `{other}` (expected ex33, ex45 or g2)"))),
    };
    Ok(scenario_report(&r))
}

fn families_verb(name: &str, params: &[(String, String)], ranks: (usize, usize), check: &str) -> Result<Report, Failure> {
    let family = FamilyDescriptor::by_name(name, &params_map(params))?;
    let property = match check {
        "locally-finite" => TowerProperty::LocallyFinite,
        "union-is-subgroup" => TowerProperty::UnionIsSubgroup(whole_group()),
        "union-is-reflection-subgroup" => TowerProperty::UnionIsReflectionSubgroup(whole_group()),
        "union-locally-finite" => TowerProperty::UnionLocallyFinite(whole_group()),
        "union-locally-parabolic" => TowerProperty::UnionLocallyParabolic(whole_group()),
        other => return Err(usage(format!("unknown check `{other}`"))),
    };
    let lo = ranks.0.max(family.min_rank());
    let tower = TruncationTower::new(family, (lo..=ranks.1).collect())?;
    let r = tower_check(&tower, &property)?;
    let mut text = String::new();
    for rr in &r.ranks {
        let _ = writeln!(
            text,
            "rank {}: {} {} ({})",
            rr.rank,
            if rr.outcome.passed { "ok" } else { "FAIL" },
            rr.outcome.window,
            rr.outcome.detail
        );
    }
    let _ = write!(
        text,
        "{} {}: {}, {}",
        r.family,
        r.property,
        if r.all_passed { "holds at every rank" } else { "fails at some rank" },
        if r.stable { "stable" } else { "not stable" }
    );
    Ok(Report {
        result: serde_json::to_value(&r).expect("serializable"),
        certificates: json!({}),
        text,
        passed: r.all_passed,
    })
}

fn verb_name(v: &Verb) -> &'static str {
    match v {
        Verb::Classify { .. } => "classify",
        Verb::Roots { .. } => "roots",
        Verb::Pi { .. } => "pi",
        Verb::Closure { .. } => "closure",
        Verb::IsParabolic { .. } => "is-parabolic",
        Verb::Intersect { .. } => "intersect",
        Verb::CosetMin { .. } => "coset-min",
        Verb::OddComponents { .. } => "odd-components",
        Verb::Verify { .. } => "verify",
        Verb::Families { .. } => "families",
    }
}

fn dispatch(verb: &Verb) -> Result<(Report, Value, Value), Failure> {
    let with_sys = |input: &Input, f: &dyn Fn(&CoxeterSystem) -> Result<Report, Failure>| -> Result<(Report, Value, Value), Failure> {
        let loaded = load(input)?;
        let mut input_json = loaded.input.clone();
        input_json["system"] = Value::String(to_dsl(&loaded.sys));
        Ok((f(&loaded.sys)?, input_json, json!({})))
    };
    match verb {
        Verb::Classify { input, .. } => {
            let report = classify(input)?;
            let input_json = match (&input.family, input.ranks) {
                (Some(f), r) => json!({"source": "family", "family": f, "ranks": r.map(|(a, b)| format!("{a}..{b}"))}),
                _ => load(input)?.input,
            };
            Ok((report, input_json, json!({"params": params_map(&input.params)})))
        }
        Verb::Roots { input, depth, .. } => {
            let (r, i, _) = with_sys(input, &|s| Ok(roots_verb(s, *depth)))?;
            Ok((r, i, json!({"depth": depth})))
        }
        Verb::Pi { input, roots, .. } => {
            let (r, i, _) = with_sys(input, &|s| pi_verb(s, roots))?;
            Ok((r, i, json!({"roots": roots})))
        }
        Verb::Closure { input, elements, .. } => {
            let (r, i, _) = with_sys(input, &|s| closure_verb(s, elements))?;
            Ok((r, i, json!({"elements": elements})))
        }
        Verb::IsParabolic {
            input,
            roots,
            search_bound,
            ..
        } => {
            let (r, i, _) = with_sys(input, &|s| is_parabolic_verb(s, roots, *search_bound))?;
            Ok((r, i, json!({"roots": roots, "search_bound": search_bound})))
        }
        Verb::Intersect { input, parabolics, .. } => {
            let (r, i, _) = with_sys(input, &|s| intersect_verb(s, parabolics))?;
            Ok((r, i, json!({"parabolics": parabolics})))
        }
        Verb::CosetMin {
            input, element, subset, ..
        } => {
            let (r, i, _) = with_sys(input, &|s| coset_min_verb(s, element, subset))?;
            Ok((r, i, json!({"element": element, "subset": subset})))
        }
        Verb::OddComponents { input, .. } => with_sys(input, &|s| Ok(odd_components_verb(s))),
        Verb::Verify {
            scenario,
            max_i,
            params,
            exhaustive_up_to,
            ..
        } => Ok((
            verify_verb(scenario, *max_i, params, *exhaustive_up_to)?,
            json!({"source": "scenario", "scenario": scenario}),
            json!({"max_i": max_i, "params": params_map(params), "exhaustive_up_to": exhaustive_up_to}),
        )),
        Verb::Families {
            family,
            params,
            ranks,
            check,
            ..
        } => Ok((
            families_verb(family, params, *ranks, check)?,
            json!({"source": "family", "family": family}),
            json!({"ranks": format!("{}..{}", ranks.0, ranks.1), "check": check, "params": params_map(params)}),
        )),
    }
}

fn output_flags(v: &Verb) -> &Output {
    match v {
        Verb::Classify { out, .. }
        | Verb::Roots { out, .. }
        | Verb::Pi { out, .. }
        | Verb::Closure { out, .. }
        | Verb::IsParabolic { out, .. }
        | Verb::Intersect { out, .. }
        | Verb::CosetMin { out, .. }
        | Verb::OddComponents { out, .. }
        | Verb::Verify { out, .. }
        | Verb::Families { out, .. } => out,
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                RunOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                RunOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let out = output_flags(&cli.verb).clone();
    let verb = verb_name(&cli.verb);
    let start = Instant::now();
    match dispatch(&cli.verb) {
        Ok((report, input, params)) => {
            let code = if report.passed { 0 } else { 1 };
            let stdout = if out.json {
                let mut timings = json!({});
                if out.timings {
                    timings["total_ms"] = json!(start.elapsed().as_secs_f64() * 1000.0);
                }
                let doc = json!({
                    "verb": verb,
                    "input": input,
                    "params": params,
                    "result": report.result,
                    "certificates": report.certificates,
                    "timings": timings,
                });
                serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
            } else {
                let mut t = report.text;
                if out.timings {
                    let _ = write!(t, "\n({:.1} ms)", start.elapsed().as_secs_f64() * 1000.0);
                }
                t + "\n"
            };
            RunOutput {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => RunOutput {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}
