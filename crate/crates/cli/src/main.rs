//! `ifnorder`: compare, sort, score and rank intuitionistic fuzzy numbers.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ifn_order::cuts::{cut, strong_cut, CutRect, Interval};
use ifn_order::curve::{curve_rows, is_spike, polyline};
use ifn_order::decision::{decimal, run_algorithm, verdict_json, LoadOptions, WeightedInfoSystem};
use ifn_order::dense::{parse_pairs, DenseSequence};
use ifn_order::literal::{from_json, named_literals, parse_compact};
use ifn_order::order::{c_prefix, compare, sort, Verdict};
use ifn_order::reference::{errata_report, registered_errata};
use ifn_order::scalar::{format_fixed, parse_rational, to_exact_string};
use ifn_order::scores::legacy::{legacy_score, LegacyMethod, LegacyScore};
use ifn_order::scores::{score_quad, triangular_scores};
use ifn_order::{Error, Ifn, Rational, Validation};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "ifnorder", version, about = "Exact total ordering of trapezoidal intuitionistic fuzzy numbers")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Level sequence: distinct, repeats, half-first, pairs:<a,b;..> or file:<path>
    #[arg(long, global = true, default_value = "distinct")]
    seq: String,
    /// Level pairs scanned before giving up on a difference
    #[arg(long, global = true, default_value_t = ifn_order::order::DEFAULT_DEPTH)]
    depth: u64,
    /// Decimal places in output, rounded half to even
    #[arg(long, global = true, default_value_t = 6)]
    prec: usize,
    /// Output format; each command has its own default
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Downgrade leg and pointwise violations to warnings
    #[arg(long, global = true)]
    lenient: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two IFN literals (inline JSON, compact <..|..> or a file)
    Compare { a: String, b: String },
    /// Sort a JSON object or array of named IFN literals, ascending
    Sort {
        file: String,
        /// List the largest first
        #[arg(long)]
        desc: bool,
    },
    /// Stream values C_1..C_n and the older single-number scores
    Scores {
        ifn: String,
        /// Number of stream values
        #[arg(long, default_value_t = 8)]
        terms: u64,
        /// Older score to report (repeatable); `all` for every applicable one
        #[arg(long = "method")]
        methods: Vec<String>,
    },
    /// Cut rectangles and their four scores
    Cuts {
        ifn: String,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        /// Use strong (strict-inequality) cuts
        #[arg(long)]
        strong: bool,
        /// Without --alpha, cut at this many leading sequence pairs
        #[arg(long, default_value_t = 4)]
        levels: u64,
    },
    /// Rank the alternatives of a weighted system (JSON or CSV)
    Decide {
        file: String,
        /// Rescale weights that do not sum to 1
        #[arg(long)]
        normalize: bool,
        /// Include the per-pair comparison trail
        #[arg(long)]
        audit: bool,
        /// Include the comparison against published values for bundled tables
        #[arg(long)]
        errata: bool,
    },
    /// Sample membership and nonmembership for plotting
    EmitCurve {
        ifn: String,
        /// Grid spacing on [0,1]
        #[arg(long, default_value = "1/10")]
        step: String,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Core(Error::Parse(_)) => 2,
            Failure::Core(_) => 3,
        }
    }

    fn report(&self, json_out: bool) -> String {
        let (kind, message) = match self {
            Failure::Usage(m) => ("UsageError", m.clone()),
            Failure::Core(e) => (e.kind(), e.to_string()),
        };
        if json_out {
            json!({"error": {"kind": kind, "message": message}}).to_string()
        } else {
            format!("error: {kind}: {message}")
        }
    }
}

type Outcome = Result<String, Failure>;

/// Reads `arg` from disk when it names a file, else treats it as literal text.
fn text_of(arg: &str) -> Result<String, Failure> {
    let path = Path::new(arg);
    let looks_inline = arg.trim_start().starts_with(['{', '<', '[']);
    if !looks_inline && path.is_file() {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))
    } else if !looks_inline {
        Err(Failure::Usage(format!("{arg} is neither a literal nor a readable file")))
    } else {
        Ok(arg.to_string())
    }
}

fn policy(g: &Global) -> Validation {
    if g.lenient {
        Validation::Lenient
    } else {
        Validation::Strict
    }
}

fn warn(problems: &[Error]) {
    for p in problems {
        eprintln!("warning: {}: {p}", p.kind());
    }
}

fn read_ifn(arg: &str, g: &Global) -> Result<Ifn, Failure> {
    let text = text_of(arg)?;
    let trimmed = text.trim();
    let (ifn, problems) = if trimmed.starts_with('<') {
        parse_compact(trimmed, policy(g))?
    } else {
        let value: Value = serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        from_json(&value, policy(g))?
    };
    warn(&problems);
    Ok(ifn)
}

fn sequence(g: &Global) -> Result<DenseSequence, Failure> {
    match g.seq.strip_prefix("file:") {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
            Ok(DenseSequence::paired(parse_pairs(&text)?)?)
        }
        None => Ok(DenseSequence::from_name(&g.seq)?),
    }
}

fn rational(text: &str, what: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::Usage(format!("{what}: {e}")))
}

fn render(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

fn csv_line(fields: &[String]) -> String {
    fields.join(",") + "\n"
}

fn cmd_compare(g: &Global, a: &str, b: &str) -> Outcome {
    let seq = sequence(g)?;
    let (x, y) = (read_ifn(a, g)?, read_ifn(b, g)?);
    let v = compare(&x, &y, &seq, g.depth)?;
    let mut out = verdict_json(&v, g.prec);
    out["sequence"] = json!(seq.name());
    match g.format.unwrap_or(Format::Json) {
        Format::Json => Ok(render(&out)),
        Format::Csv => {
            let j = v.index().map(|j| j.to_string()).unwrap_or_default();
            Ok(csv_line(&["verdict".into(), "j".into()]) + &csv_line(&[v.name().into(), j]))
        }
        Format::Table => Ok(match &v {
            Verdict::Less { j, a, b } | Verdict::Greater { j, a, b } => {
                let sign = if matches!(v, Verdict::Less { .. }) { "<" } else { ">" };
                format!("A {sign} B (C_{j}: {} vs {})\n", format_fixed(a, g.prec), format_fixed(b, g.prec))
            }
            Verdict::Equivalent { certified } => {
                format!("A = B ({})\n", if *certified { "certified" } else { "identical knots" })
            }
            Verdict::Indistinguishable { depth } => format!("A ~ B (no difference in {depth} level pairs)\n"),
        }),
    }
}

fn read_named(arg: &str, g: &Global) -> Result<Vec<(String, Ifn)>, Failure> {
    let text = text_of(arg)?;
    if let Ok(value) = serde_json::from_str::<Value>(&text) {
        return Ok(named_literals(&value, policy(g))?);
    }
    // one compact literal per line, optionally preceded by a name
    let mut out = Vec::new();
    for (n, line) in text.lines().map(str::trim).enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, lit) = match line.split_once('<') {
            Some((name, rest)) if !name.trim().is_empty() => (name.trim().to_string(), format!("<{rest}")),
            _ => (format!("line{}", n + 1), line.to_string()),
        };
        let (ifn, problems) = parse_compact(&lit, policy(g))
            .map_err(|e| Error::Cell { alternative: name.clone(), attribute: "-".into(), reason: e.to_string() })?;
        warn(&problems);
        out.push((name, ifn));
    }
    if out.is_empty() {
        return Err(Error::Parse("no IFN literals found".into()).into());
    }
    Ok(out)
}

fn cmd_sort(g: &Global, file: &str, desc: bool) -> Outcome {
    let seq = sequence(g)?;
    let named = read_named(file, g)?;
    let items: Vec<Ifn> = named.iter().map(|(_, ifn)| ifn.clone()).collect();
    let mut groups = sort(&items, &seq, g.depth)?;
    if desc {
        groups.reverse();
    }
    let ids = |members: &[usize]| -> Vec<String> { members.iter().map(|&i| named[i].0.clone()).collect() };
    match g.format.unwrap_or(Format::Json) {
        Format::Json => {
            let order: Vec<Value> = groups
                .iter()
                .enumerate()
                .map(|(k, grp)| json!({"rank": k + 1, "ids": ids(&grp.members), "indistinguishable": grp.indistinguishable}))
                .collect();
            Ok(render(&json!({"sequence": seq.name(), "order": if desc { "descending" } else { "ascending" }, "groups": order})))
        }
        Format::Csv => {
            let mut out = csv_line(&["rank".into(), "id".into()]);
            for (k, grp) in groups.iter().enumerate() {
                for id in ids(&grp.members) {
                    out += &csv_line(&[(k + 1).to_string(), id]);
                }
            }
            Ok(out)
        }
        Format::Table => {
            let sep = if desc { " > " } else { " < " };
            let line: Vec<String> = groups.iter().map(|grp| ids(&grp.members).join(" = ")).collect();
            Ok(line.join(sep) + "\n")
        }
    }
}

fn legacy_value(score: &LegacyScore, prec: usize) -> Value {
    match score {
        LegacyScore::Exact(v) => decimal(v, prec),
        LegacyScore::SqrtOf(v) => json!({"sqrt_of": decimal(v, prec), "approx": format!("{:.*}", prec, score.to_f64())}),
    }
}

fn cmd_scores(g: &Global, arg: &str, terms: u64, methods: &[String]) -> Outcome {
    if terms == 0 {
        return Err(Failure::Usage("--terms must be at least 1".into()));
    }
    let seq = sequence(g)?;
    let ifn = read_ifn(arg, g)?;
    let values = c_prefix(&ifn, &seq, terms)?;
    let mut stream = Vec::new();
    for (k, v) in values.iter().enumerate() {
        let j = k as u64 + 1;
        let (alpha, beta) = seq.pair(j.div_ceil(4))?;
        stream.push((j, alpha, beta, v.clone()));
    }
    let chosen: Vec<LegacyMethod> = if methods.iter().any(|m| m == "all") {
        LegacyMethod::all().into_iter().filter(|m| m.accepts(&ifn)).collect()
    } else {
        methods.iter().map(|m| LegacyMethod::from_name(m)).collect::<Result<_, _>>()?
    };
    let mut legacy = Vec::new();
    for m in &chosen {
        legacy.push((m.name(), legacy_score(m, &ifn)?));
    }
    match g.format.unwrap_or(Format::Json) {
        Format::Json => {
            let c: Vec<Value> = stream
                .iter()
                .map(|(j, a, b, v)| json!({"j": j, "alpha": to_exact_string(a), "beta": to_exact_string(b), "value": decimal(v, g.prec)}))
                .collect();
            let mut out = json!({"sequence": seq.name(), "kind": ifn.kind().name(), "c": c});
            if !legacy.is_empty() {
                let m: Map<String, Value> = legacy.iter().map(|(n, s)| (n.clone(), legacy_value(s, g.prec))).collect();
                out["legacy"] = Value::Object(m);
            }
            if let Ok(t) = triangular_scores(&ifn) {
                out["triangular"] = json!({
                    "L": decimal(&t.l, g.prec), "R": decimal(&t.r, g.prec), "T": decimal(&t.t, g.prec),
                    "NL": decimal(&t.nl, g.prec), "NR": decimal(&t.nr, g.prec), "NT": decimal(&t.nt, g.prec),
                    "NTc": decimal(&t.ntc, g.prec),
                });
            }
            Ok(render(&out))
        }
        Format::Csv => {
            let mut out = csv_line(&["j".into(), "alpha".into(), "beta".into(), "value".into()]);
            for (j, a, b, v) in &stream {
                out += &csv_line(&[j.to_string(), to_exact_string(a), to_exact_string(b), format_fixed(v, g.prec)]);
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            for (j, a, b, v) in &stream {
                let _ = writeln!(out, "C_{j:<3} ({}, {})  {}", to_exact_string(a), to_exact_string(b), format_fixed(v, g.prec));
            }
            for (n, s) in &legacy {
                let _ = writeln!(out, "{n:<15} {}", s.render(g.prec));
            }
            Ok(out)
        }
    }
}

fn interval_json(i: &Interval, prec: usize) -> Value {
    json!({"lo": decimal(&i.lo, prec), "hi": decimal(&i.hi, prec), "open_lo": i.open_lo, "open_hi": i.open_hi})
}

fn bracket(i: &Interval, prec: usize) -> String {
    format!(
        "{}{}, {}{}",
        if i.open_lo { "(" } else { "[" },
        format_fixed(&i.lo, prec),
        format_fixed(&i.hi, prec),
        if i.open_hi { ")" } else { "]" }
    )
}

fn cmd_cuts(g: &Global, arg: &str, alpha: Option<&str>, beta: Option<&str>, strong: bool, levels: u64) -> Outcome {
    let ifn = read_ifn(arg, g)?;
    let pairs: Vec<(Rational, Rational)> = match (alpha, beta) {
        (Some(a), b) => {
            let a = rational(a, "--alpha")?;
            let b = b.map(|b| rational(b, "--beta")).transpose()?.unwrap_or_else(|| a.clone());
            vec![(a, b)]
        }
        (None, Some(_)) => return Err(Failure::Usage("--beta needs --alpha".into())),
        (None, None) => {
            let seq = sequence(g)?;
            (1..=levels).map(|i| seq.pair(i)).collect::<Result<_, _>>()?
        }
    };
    let rects: Vec<CutRect> = pairs
        .iter()
        .map(|(a, b)| if strong { strong_cut(&ifn, a, b) } else { cut(&ifn, a, b) })
        .collect::<Result<_, _>>()?;
    match g.format.unwrap_or(Format::Json) {
        Format::Json => {
            let list: Vec<Value> = rects
                .iter()
                .map(|rect| {
                    let q = score_quad(rect);
                    json!({
                        "alpha": to_exact_string(&rect.alpha),
                        "beta": to_exact_string(&rect.beta),
                        "mu": interval_json(&rect.mu, g.prec),
                        "nu": interval_json(&rect.nu, g.prec),
                        "scores": q.to_array().iter().map(|v| decimal(v, g.prec)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(render(&json!({"strong": strong, "cuts": list})))
        }
        Format::Csv => {
            let head = ["alpha", "beta", "mu_lo", "mu_hi", "nu_lo", "nu_hi", "c1", "c2", "c3", "c4"];
            let mut out = csv_line(&head.map(String::from));
            for rect in &rects {
                let mut row = vec![to_exact_string(&rect.alpha), to_exact_string(&rect.beta)];
                for v in [&rect.mu.lo, &rect.mu.hi, &rect.nu.lo, &rect.nu.hi] {
                    row.push(format_fixed(v, g.prec));
                }
                row.extend(score_quad(rect).to_array().iter().map(|v| format_fixed(v, g.prec)));
                out += &csv_line(&row);
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            for rect in &rects {
                let q: Vec<String> = score_quad(rect).to_array().iter().map(|v| format_fixed(v, g.prec)).collect();
                let _ = writeln!(
                    out,
                    "({}, {})  mu {}  nu {}  C {}",
                    to_exact_string(&rect.alpha),
                    to_exact_string(&rect.beta),
                    bracket(&rect.mu, g.prec),
                    bracket(&rect.nu, g.prec),
                    q.join(" ")
                );
            }
            Ok(out)
        }
    }
}

fn cmd_decide(g: &Global, file: &str, normalize: bool, audit: bool, errata: bool) -> Outcome {
    let seq = sequence(g)?;
    let text = fs::read_to_string(file).map_err(|e| Failure::Usage(format!("cannot read {file}: {e}")))?;
    let opts = LoadOptions { normalize, policy: policy(g) };
    let sys = if file.ends_with(".csv") {
        WeightedInfoSystem::from_csv_str(&text, opts)?
    } else {
        WeightedInfoSystem::from_json_str(&text, opts)?
    };
    warn(&sys.warnings);
    let report = run_algorithm(&sys, &seq, g.depth)?;
    let bundled = sys.reference.as_deref() == Some("table2");
    if errata && !bundled {
        eprintln!("warning: --errata applies only to the bundled table2 system");
    }
    match g.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut out = report.to_json(g.prec, audit);
            if errata && bundled {
                let mut section = errata_report(&sys, &report)?;
                section["registered"] = json!(registered_errata()?.len());
                out["errata"] = section;
            }
            Ok(render(&out))
        }
        Format::Csv => {
            let mut head = vec!["alternative".to_string()];
            head.extend(report.alternatives.iter().cloned());
            head.push("degree".into());
            let mut out = csv_line(&head);
            for (i, x) in report.alternatives.iter().enumerate() {
                let mut row = vec![x.clone()];
                row.extend(report.matrix[i].iter().map(|v| format_fixed(v, g.prec)));
                row.push(format_fixed(&report.degrees[i], g.prec));
                out += &csv_line(&row);
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = format!("sequence: {}\n", report.sequence);
            out += &report.to_table(g.prec);
            if audit {
                for p in report.audit.iter().filter(|p| p.has_indistinguishable()) {
                    let _ = writeln!(out, "indistinguishable cells between {} and {}", report.alternatives[p.x], report.alternatives[p.y]);
                }
            }
            if errata && bundled {
                let section = errata_report(&sys, &report)?;
                for (name, list) in section.as_object().into_iter().flatten() {
                    for e in list.as_array().into_iter().flatten() {
                        let _ = writeln!(out, "erratum {name}: {} {} printed {} recomputed {}", e["source"].as_str().unwrap_or(""), e["location"].as_str().unwrap_or(""), e["printed"].as_str().unwrap_or(""), e["recomputed"].as_str().unwrap_or(""));
                    }
                }
            }
            Ok(out)
        }
    }
}

fn cmd_emit_curve(g: &Global, arg: &str, step: &str) -> Outcome {
    let ifn = read_ifn(arg, g)?;
    let step = rational(step, "--step")?;
    let rows = curve_rows(&ifn, &step)?;
    let spikes: Vec<&str> = [("mu", ifn.mu()), ("nu", ifn.nu())]
        .into_iter()
        .filter(|(_, f)| is_spike(f))
        .map(|(n, _)| n)
        .collect();
    match g.format.unwrap_or(Format::Csv) {
        Format::Csv | Format::Table => {
            let mut out = csv_line(&["x".into(), "mu".into(), "nu".into(), "knots".into()]);
            for row in &rows {
                let mut tags = row.knots.clone();
                for s in &spikes {
                    if row.knots.iter().any(|k| k.starts_with(s)) {
                        tags.push(format!("{s}.spike"));
                    }
                }
                out += &csv_line(&[to_exact_string(&row.x), to_exact_string(&row.mu), to_exact_string(&row.nu), tags.join(" ")]);
            }
            Ok(out)
        }
        Format::Json => {
            let line = |f| -> Vec<Value> {
                polyline(f).iter().map(|(x, y)| json!([to_exact_string(x), to_exact_string(y)])).collect()
            };
            let table: Vec<Value> = rows
                .iter()
                .map(|r| json!({"x": to_exact_string(&r.x), "mu": to_exact_string(&r.mu), "nu": to_exact_string(&r.nu), "knots": r.knots}))
                .collect();
            Ok(render(&json!({
                "polylines": {"mu": line(ifn.mu()), "nu": line(ifn.nu())},
                "spikes": spikes,
                "rows": table,
            })))
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Compare { a, b } => cmd_compare(g, a, b),
        Command::Sort { file, desc } => cmd_sort(g, file, *desc),
        Command::Scores { ifn, terms, methods } => cmd_scores(g, ifn, *terms, methods),
        Command::Cuts { ifn, alpha, beta, strong, levels } => {
            cmd_cuts(g, ifn, alpha.as_deref(), beta.as_deref(), *strong, *levels)
        }
        Command::Decide { file, normalize, audit, errata } => cmd_decide(g, file, *normalize, *audit, *errata),
        Command::EmitCurve { ifn, step } => cmd_emit_curve(g, ifn, step),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    std::panic::set_hook(Box::new(|info| eprintln!("error: InternalError: {info}")));
    let json_errors = cli.global.format.unwrap_or(Format::Json) == Format::Json;
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(text)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Ok(Err(failure)) => {
            eprintln!("{}", failure.report(json_errors));
            ExitCode::from(failure.code())
        }
        Err(_) => ExitCode::from(4),
    }
}
