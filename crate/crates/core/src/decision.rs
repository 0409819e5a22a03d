//! Weighted information systems of IFN cells and the dominance ranking
//! built on the total order.
//!
//! `WR(x,y)` adds the weight of every attribute where `x` beats `y` and half
//! the weight of every tie. An alternative's degree is its row mean, and
//! larger degrees rank first.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::dense::DenseSequence;
use crate::error::Error;
use crate::literal::{from_json, number, parse_compact, to_compact, to_json};
use crate::number::{Ifn, Validation};
use crate::order::{compare, Verdict};
use crate::scalar::{format_fixed, int, ratio, to_exact_string, Rational};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Divide weights by their sum instead of rejecting a sum other than 1.
    pub normalize: bool,
    pub policy: Validation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedInfoSystem {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub weights: Vec<Rational>,
    /// `cells[x][a]`.
    pub cells: Vec<Vec<Ifn>>,
    /// Name of the published table this system reproduces, if any.
    pub reference: Option<String>,
    /// Validation failures downgraded under the lenient policy.
    pub warnings: Vec<Error>,
}

fn unique(ids: &[String], what: &str) -> Result<(), Error> {
    let mut seen = HashSet::new();
    match ids.iter().find(|id| !seen.insert(id.as_str())) {
        Some(dup) => Err(Error::Parse(format!("duplicate {what} id {dup:?}"))),
        None => Ok(()),
    }
}

impl WeightedInfoSystem {
    pub fn new(
        alternatives: Vec<String>,
        attributes: Vec<String>,
        weights: Vec<Rational>,
        cells: Vec<Vec<Ifn>>,
        normalize: bool,
    ) -> Result<Self, Error> {
        if alternatives.is_empty() {
            return Err(Error::Parse("the system has no alternatives".into()));
        }
        if attributes.is_empty() {
            return Err(Error::Parse("the system has no attributes".into()));
        }
        unique(&alternatives, "alternative")?;
        unique(&attributes, "attribute")?;
        if weights.len() != attributes.len() {
            return Err(Error::Dimension(format!("{} weights for {} attributes", weights.len(), attributes.len())));
        }
        if cells.len() != alternatives.len() || cells.iter().any(|row| row.len() != attributes.len()) {
            return Err(Error::Dimension(format!(
                "cell matrix must be {} x {}",
                alternatives.len(),
                attributes.len()
            )));
        }
        let weights = checked_weights(weights, &attributes, normalize)?;
        Ok(WeightedInfoSystem { alternatives, attributes, weights, cells, reference: None, warnings: Vec::new() })
    }

    pub fn from_json_str(text: &str, opts: LoadOptions) -> Result<Self, Error> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&value, opts)
    }

    /// `{"alternatives":[..], "attributes":[{"id","weight"}..], "cells":{x:{a:literal}}}`.
    pub fn from_json(doc: &Value, opts: LoadOptions) -> Result<Self, Error> {
        let obj = doc.as_object().ok_or_else(|| Error::Parse("system document must be an object".into()))?;
        let alternatives: Vec<String> = obj
            .get("alternatives")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"alternatives\" array".into()))?
            .iter()
            .map(|v| v.as_str().map(str::to_string).ok_or_else(|| Error::Parse(format!("alternative id must be a string, got {v}"))))
            .collect::<Result<_, _>>()?;
        let mut attributes = Vec::new();
        let mut weights = Vec::new();
        for a in obj
            .get("attributes")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"attributes\" array".into()))?
        {
            let id = a
                .get("id")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse(format!("attribute needs a string \"id\", got {a}")))?;
            let w = a.get("weight").ok_or_else(|| Error::Parse(format!("attribute {id:?} has no weight")))?;
            attributes.push(id.to_string());
            weights.push(number(w, "weight")?);
        }
        if alternatives.is_empty() {
            return Err(Error::Parse("the system has no alternatives".into()));
        }
        unique(&alternatives, "alternative")?;
        unique(&attributes, "attribute")?;
        let table = obj
            .get("cells")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing \"cells\" object".into()))?;
        for x in table.keys() {
            if !alternatives.contains(x) {
                return Err(Error::Cell { alternative: x.clone(), attribute: "-".into(), reason: "unknown alternative".into() });
            }
        }
        let mut warnings = Vec::new();
        let mut cells = Vec::with_capacity(alternatives.len());
        for x in &alternatives {
            let row = table.get(x).and_then(Value::as_object);
            if let Some(row) = row {
                if let Some(a) = row.keys().find(|a| !attributes.contains(a)) {
                    return Err(Error::Cell { alternative: x.clone(), attribute: a.clone(), reason: "unknown attribute".into() });
                }
            }
            let mut out = Vec::with_capacity(attributes.len());
            for a in &attributes {
                let cell_err = |reason: String| Error::Cell { alternative: x.clone(), attribute: a.clone(), reason };
                let lit = row.and_then(|r| r.get(a)).ok_or_else(|| cell_err("missing cell".into()))?;
                let (ifn, warn) = from_json(lit, opts.policy).map_err(|e| cell_err(e.to_string()))?;
                warnings.extend(warn.into_iter().map(|w| cell_err(w.to_string())));
                out.push(ifn);
            }
            cells.push(out);
        }
        let mut sys = Self::new(alternatives, attributes, weights, cells, opts.normalize)?;
        sys.reference = obj.get("reference").and_then(Value::as_str).map(str::to_string);
        sys.warnings = warnings;
        Ok(sys)
    }

    /// First header row `alternative,<attribute ids>`, second row
    /// `weight,<weights>`, then one row per alternative of compact literals.
    pub fn from_csv_str(text: &str, opts: LoadOptions) -> Result<Self, Error> {
        let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(text.as_bytes());
        let rows: Vec<csv::StringRecord> = reader
            .records()
            .collect::<Result<_, _>>()
            .map_err(|e| Error::Parse(format!("csv: {e}")))?;
        let (header, rest) = rows.split_first().ok_or_else(|| Error::Parse("empty csv".into()))?;
        let (weight_row, body) = rest.split_first().ok_or_else(|| Error::Parse("csv needs a weight row".into()))?;
        let attributes: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
        if weight_row.len() != header.len() {
            return Err(Error::Parse("weight row length differs from the header".into()));
        }
        let weights = weight_row.iter().skip(1).map(crate::scalar::parse_rational).collect::<Result<Vec<_>, _>>()?;
        let mut alternatives = Vec::new();
        let mut cells = Vec::new();
        let mut warnings = Vec::new();
        for row in body {
            let x = row.get(0).unwrap_or("").to_string();
            if row.len() != header.len() {
                return Err(Error::Cell {
                    alternative: x,
                    attribute: "-".into(),
                    reason: format!("{} fields, expected {}", row.len(), header.len()),
                });
            }
            let mut out = Vec::new();
            for (a, text) in attributes.iter().zip(row.iter().skip(1)) {
                let cell_err = |reason: String| Error::Cell { alternative: x.clone(), attribute: a.clone(), reason };
                if text.is_empty() {
                    return Err(cell_err("missing cell".into()));
                }
                let (ifn, warn) = parse_compact(text, opts.policy).map_err(|e| cell_err(e.to_string()))?;
                warnings.extend(warn.into_iter().map(|w| cell_err(w.to_string())));
                out.push(ifn);
            }
            alternatives.push(x);
            cells.push(out);
        }
        let mut sys = Self::new(alternatives, attributes, weights, cells, opts.normalize)?;
        sys.warnings = warnings;
        Ok(sys)
    }

    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        if let Some(r) = &self.reference {
            doc.insert("reference".into(), json!(r));
        }
        doc.insert("alternatives".into(), json!(self.alternatives));
        let attrs: Vec<Value> = self
            .attributes
            .iter()
            .zip(&self.weights)
            .map(|(a, w)| json!({"id": a, "weight": to_exact_string(w)}))
            .collect();
        doc.insert("attributes".into(), Value::Array(attrs));
        let mut table = Map::new();
        for (x, row) in self.alternatives.iter().zip(&self.cells) {
            let r: Map<String, Value> = self.attributes.iter().cloned().zip(row.iter().map(to_json)).collect();
            table.insert(x.clone(), Value::Object(r));
        }
        doc.insert("cells".into(), Value::Object(table));
        Value::Object(doc)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let write = |w: &mut csv::Writer<Vec<u8>>, first: &str, rest: Vec<String>| {
            w.write_record(std::iter::once(first.to_string()).chain(rest)).expect("in-memory write")
        };
        write(&mut w, "alternative", self.attributes.clone());
        write(&mut w, "weight", self.weights.iter().map(to_exact_string).collect());
        for (x, row) in self.alternatives.iter().zip(&self.cells) {
            write(&mut w, x, row.iter().map(to_compact).collect());
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn alternative_index(&self, id: &str) -> Option<usize> {
        self.alternatives.iter().position(|x| x == id)
    }
}

fn checked_weights(weights: Vec<Rational>, attributes: &[String], normalize: bool) -> Result<Vec<Rational>, Error> {
    if let Some((w, _)) = weights.iter().zip(attributes).find(|(w, _)| w.is_negative()) {
        return Err(Error::Domain { what: "attribute weight", range: ">= 0", value: to_exact_string(w) });
    }
    let sum: Rational = weights.iter().sum();
    if sum.is_one() {
        return Ok(weights);
    }
    if normalize && sum.is_positive() {
        return Ok(weights.into_iter().map(|w| w / &sum).collect());
    }
    Err(Error::WeightSum { sum: to_exact_string(&sum) })
}

/// One ordered pair's attribute-by-attribute outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairAudit {
    pub x: usize,
    pub y: usize,
    /// Attributes where `x` beats `y`.
    pub better: Vec<usize>,
    /// Attributes with no difference, including indistinguishable ones.
    pub tied: Vec<usize>,
    /// Verdict of `cell(x,a)` against `cell(y,a)` for each attribute.
    pub verdicts: Vec<Verdict>,
}

impl PairAudit {
    fn from_verdicts(x: usize, y: usize, verdicts: Vec<Verdict>) -> Self {
        let mut better = Vec::new();
        let mut tied = Vec::new();
        for (a, v) in verdicts.iter().enumerate() {
            match v {
                Verdict::Greater { .. } => better.push(a),
                Verdict::Equivalent { .. } | Verdict::Indistinguishable { .. } => tied.push(a),
                Verdict::Less { .. } => {}
            }
        }
        PairAudit { x, y, better, tied, verdicts }
    }

    pub fn has_indistinguishable(&self) -> bool {
        self.verdicts.iter().any(|v| matches!(v, Verdict::Indistinguishable { .. }))
    }

    pub fn wr(&self, weights: &[Rational]) -> Rational {
        let won: Rational = self.better.iter().map(|&a| &weights[a]).sum();
        let tied: Rational = self.tied.iter().map(|&a| &weights[a]).sum();
        won + tied * ratio(1, 2)
    }
}

pub fn better_sets(sys: &WeightedInfoSystem, x: usize, y: usize, seq: &DenseSequence, depth: u64) -> Result<PairAudit, Error> {
    let verdicts = (0..sys.attributes.len())
        .map(|a| compare(&sys.cells[x][a], &sys.cells[y][a], seq, depth))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PairAudit::from_verdicts(x, y, verdicts))
}

pub fn wr(sys: &WeightedInfoSystem, x: usize, y: usize, seq: &DenseSequence, depth: u64) -> Result<Rational, Error> {
    Ok(better_sets(sys, x, y, seq, depth)?.wr(&sys.weights))
}

/// Row means of a square matrix.
pub fn dominance_degrees(matrix: &[Vec<Rational>]) -> Result<Vec<Rational>, Error> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::Dimension("empty dominance matrix".into()));
    }
    if let Some(row) = matrix.iter().find(|row| row.len() != n) {
        return Err(Error::Dimension(format!("row of length {} in a {n}-row matrix", row.len())));
    }
    let size = int(n as i64);
    Ok(matrix.iter().map(|row| row.iter().sum::<Rational>() / &size).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankEntry {
    pub alternative: usize,
    pub degree: Rational,
    /// Another alternative has exactly the same degree; order among them is by input position.
    pub tied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceReport {
    pub sequence: String,
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub matrix: Vec<Vec<Rational>>,
    pub degrees: Vec<Rational>,
    pub ranking: Vec<RankEntry>,
    /// Every ordered pair `x != y`, row-major.
    pub audit: Vec<PairAudit>,
}

pub fn run_algorithm(sys: &WeightedInfoSystem, seq: &DenseSequence, depth: u64) -> Result<DominanceReport, Error> {
    let n = sys.alternatives.len();
    let m = sys.attributes.len();
    // verdicts[x][y] for x < y; the other half is the reverse
    let mut upper: Vec<Vec<Vec<Verdict>>> = vec![Vec::new(); n];
    for x in 0..n {
        for y in x + 1..n {
            upper[x].push(better_sets(sys, x, y, seq, depth)?.verdicts);
        }
    }
    let mut matrix = vec![vec![Rational::zero(); n]; n];
    let mut audit = Vec::with_capacity(n * n.saturating_sub(1));
    for x in 0..n {
        for y in 0..n {
            if x == y {
                let all: Vec<Verdict> = (0..m).map(|_| Verdict::Equivalent { certified: true }).collect();
                matrix[x][y] = PairAudit::from_verdicts(x, y, all).wr(&sys.weights);
                continue;
            }
            let verdicts = if x < y {
                upper[x][y - x - 1].clone()
            } else {
                upper[y][x - y - 1].iter().cloned().map(Verdict::reversed).collect()
            };
            let pair = PairAudit::from_verdicts(x, y, verdicts);
            matrix[x][y] = pair.wr(&sys.weights);
            audit.push(pair);
        }
    }
    let degrees = dominance_degrees(&matrix)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &k| degrees[k].cmp(&degrees[i]).then(i.cmp(&k)));
    let ranking = order
        .iter()
        .map(|&i| RankEntry {
            alternative: i,
            degree: degrees[i].clone(),
            tied: (0..n).any(|k| k != i && degrees[k] == degrees[i]),
        })
        .collect();
    Ok(DominanceReport {
        sequence: seq.name(),
        alternatives: sys.alternatives.clone(),
        attributes: sys.attributes.clone(),
        matrix,
        degrees,
        ranking,
        audit,
    })
}

/// A decimal as a JSON number, rounded half-even to `places`.
pub fn decimal(value: &Rational, places: usize) -> Value {
    Value::Number(format_fixed(value, places).parse().expect("decimal text is a JSON number"))
}

pub fn verdict_json(v: &Verdict, places: usize) -> Value {
    match v {
        Verdict::Less { j, a, b } | Verdict::Greater { j, a, b } => {
            json!({"verdict": v.name(), "j": j, "cj_a": decimal(a, places), "cj_b": decimal(b, places)})
        }
        Verdict::Equivalent { certified } => json!({"verdict": v.name(), "certified": certified}),
        Verdict::Indistinguishable { depth } => json!({"verdict": v.name(), "depth": depth}),
    }
}

impl DominanceReport {
    pub fn best(&self) -> &str {
        &self.alternatives[self.ranking[0].alternative]
    }

    pub fn degree_of(&self, id: &str) -> Option<&Rational> {
        self.alternatives.iter().position(|x| x == id).map(|i| &self.degrees[i])
    }

    pub fn to_json(&self, places: usize, with_audit: bool) -> Value {
        let ids = |set: &[usize]| -> Vec<&str> { set.iter().map(|&a| self.attributes[a].as_str()).collect() };
        let mut doc = Map::new();
        doc.insert("sequence".into(), json!(self.sequence));
        doc.insert("alternatives".into(), json!(self.alternatives));
        doc.insert(
            "matrix".into(),
            Value::Array(
                self.matrix
                    .iter()
                    .map(|row| Value::Array(row.iter().map(|v| decimal(v, places)).collect()))
                    .collect(),
            ),
        );
        doc.insert(
            "degrees".into(),
            Value::Object(
                self.alternatives
                    .iter()
                    .zip(&self.degrees)
                    .map(|(x, d)| (x.clone(), decimal(d, places)))
                    .collect(),
            ),
        );
        doc.insert(
            "ranking".into(),
            Value::Array(
                self.ranking
                    .iter()
                    .enumerate()
                    .map(|(k, e)| {
                        json!({
                            "rank": k + 1,
                            "alternative": self.alternatives[e.alternative],
                            "degree": decimal(&e.degree, places),
                            "tied": e.tied,
                        })
                    })
                    .collect(),
            ),
        );
        if with_audit {
            let trail = self
                .audit
                .iter()
                .map(|p| {
                    let cells: Map<String, Value> = self
                        .attributes
                        .iter()
                        .zip(&p.verdicts)
                        .map(|(a, v)| (a.clone(), verdict_json(v, places)))
                        .collect();
                    json!({
                        "x": self.alternatives[p.x],
                        "y": self.alternatives[p.y],
                        "better": ids(&p.better),
                        "tied": ids(&p.tied),
                        "indistinguishable": p.has_indistinguishable(),
                        "wr": decimal(&self.matrix[p.x][p.y], places),
                        "cells": cells,
                    })
                })
                .collect();
            doc.insert("audit".into(), Value::Array(trail));
        }
        Value::Object(doc)
    }

    /// Plain-text matrix and ranking.
    pub fn to_table(&self, places: usize) -> String {
        let width = places + 4;
        let mut out = format!("{:>6}", "WR");
        for x in &self.alternatives {
            out += &format!(" {x:>width$}");
        }
        out.push('\n');
        for (x, row) in self.alternatives.iter().zip(&self.matrix) {
            out += &format!("{x:>6}");
            for v in row {
                out += &format!(" {:>width$}", format_fixed(v, places));
            }
            out.push('\n');
        }
        out += "\nrank alternative degree\n";
        for (k, e) in self.ranking.iter().enumerate() {
            let tie = if e.tied { " (tie)" } else { "" };
            out += &format!("{:>4} {:>11} {}{tie}\n", k + 1, self.alternatives[e.alternative], format_fixed(&e.degree, places));
        }
        out
    }
}
