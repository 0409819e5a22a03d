//! Published tables bundled as fixtures, and the errata produced by checking
//! recomputed values against what was printed.

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::cuts::cut;
use crate::decision::{DominanceReport, LoadOptions, WeightedInfoSystem};
use crate::dense::{term_with_repeats, DenseSequence};
use crate::error::Error;
use crate::literal::from_json;
use crate::number::{Ifn, Validation};
use crate::scalar::{matches_published, parse_rational, ratio, to_exact_string, Rational};
use crate::scores::legacy::{legacy_score, LegacyMethod, LegacyScore};
use crate::scores::{c_value, score_quad};

pub const TABLE1_JSON: &str = include_str!("../fixtures/table1.json");
pub const TABLE2_JSON: &str = include_str!("../fixtures/table2.json");
pub const TABLE3_CSV: &str = include_str!("../fixtures/table3.expected.csv");
pub const TABLE4_CSV: &str = include_str!("../fixtures/table4.expected.csv");
pub const TABLE5_CSV: &str = include_str!("../fixtures/table5.expected.csv");
pub const TABLE6_CSV: &str = include_str!("../fixtures/table6.expected.csv");
pub const ERRATA_JSON: &str = include_str!("../fixtures/errata.json");

pub fn table2() -> WeightedInfoSystem {
    WeightedInfoSystem::from_json_str(TABLE2_JSON, LoadOptions::default()).expect("bundled table2 fixture is valid")
}

fn csv_rows(text: &str) -> Result<Vec<csv::StringRecord>, Error> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes())
        .records()
        .collect::<Result<_, _>>()
        .map_err(|e| Error::Parse(format!("csv: {e}")))
}

/// One comparison row of the scoring-method table.
#[derive(Debug, Clone)]
pub struct Table1Row {
    pub label: String,
    pub a: Ifn,
    pub b: Ifn,
    /// Method name and the common value printed for both inputs.
    pub ties: Vec<(String, String)>,
    pub l: [String; 2],
    pub c1: [String; 2],
    /// Printed relation of `a` to `b`.
    pub relation: Ordering,
}

pub fn table1() -> Result<Vec<Table1Row>, Error> {
    let doc: Value = serde_json::from_str(TABLE1_JSON).map_err(|e| Error::Parse(e.to_string()))?;
    let rows = doc["rows"].as_array().ok_or_else(|| Error::Parse("table1 rows".into()))?;
    let pair = |v: &Value| -> Result<[String; 2], Error> {
        match v.as_array().map(|a| a.as_slice()) {
            Some([x, y]) => Ok([x.as_str().unwrap_or_default().to_string(), y.as_str().unwrap_or_default().to_string()]),
            _ => Err(Error::Parse(format!("expected a pair, got {v}"))),
        }
    };
    rows.iter()
        .map(|row| {
            let ties = row["ties"]
                .as_object()
                .ok_or_else(|| Error::Parse("table1 ties".into()))?
                .iter()
                .map(|(k, v)| (k.clone(), v.as_str().unwrap_or_default().to_string()))
                .collect();
            let relation = match row["relation"].as_str() {
                Some("<") => Ordering::Less,
                Some(">") => Ordering::Greater,
                _ => Ordering::Equal,
            };
            Ok(Table1Row {
                label: row["label"].as_str().unwrap_or_default().to_string(),
                a: from_json(&row["a"], Validation::Strict)?.0,
                b: from_json(&row["b"], Validation::Strict)?.0,
                ties,
                l: pair(&row["l"])?,
                c1: pair(&row["c1"])?,
                relation,
            })
        })
        .collect()
}

/// A printed score cell; `j` is the stream index (1..=8).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedScore {
    pub alternative: String,
    pub attribute: String,
    pub j: u64,
    pub printed: String,
}

/// Every non-blank score printed for the first two level pairs.
pub fn printed_scores() -> Result<Vec<PrintedScore>, Error> {
    let mut out = Vec::new();
    for (text, offset) in [(TABLE3_CSV, 0), (TABLE4_CSV, 4)] {
        for row in csv_rows(text)? {
            for r in 1..=4 {
                let printed = row.get(1 + r).unwrap_or("").trim();
                if !printed.is_empty() {
                    out.push(PrintedScore {
                        alternative: row[0].to_string(),
                        attribute: row[1].to_string(),
                        j: offset + r as u64,
                        printed: printed.to_string(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The dominance matrix as printed, strings kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedMatrix {
    pub ids: Vec<String>,
    pub cells: Vec<Vec<String>>,
}

impl PrintedMatrix {
    pub fn values(&self) -> Result<Vec<Vec<Rational>>, Error> {
        self.cells.iter().map(|row| row.iter().map(|s| parse_rational(s)).collect()).collect()
    }

    pub fn get(&self, x: &str, y: &str) -> Option<&str> {
        let i = self.ids.iter().position(|id| id == x)?;
        let k = self.ids.iter().position(|id| id == y)?;
        Some(&self.cells[i][k])
    }
}

pub fn printed_matrix() -> Result<PrintedMatrix, Error> {
    let rows = csv_rows(TABLE5_CSV)?;
    Ok(PrintedMatrix {
        ids: rows.iter().map(|r| r[0].to_string()).collect(),
        cells: rows.iter().map(|r| r.iter().skip(1).map(str::to_string).collect()).collect(),
    })
}

pub fn printed_degrees() -> Result<Vec<(String, String)>, Error> {
    Ok(csv_rows(TABLE6_CSV)?.iter().map(|r| (r[0].to_string(), r[1].to_string())).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub source: String,
    pub location: String,
    pub printed: String,
    /// Exact recomputed value.
    pub recomputed: String,
    /// Level sequence the recomputation depends on, if any.
    pub sequence: Option<String>,
    pub note: String,
}

impl Erratum {
    fn new(source: &str, location: String, printed: &str, recomputed: &Rational, note: &str) -> Self {
        Erratum {
            source: source.into(),
            location,
            printed: printed.into(),
            recomputed: to_exact_string(recomputed),
            sequence: None,
            note: note.into(),
        }
    }

    /// Everything except the free-text note.
    pub fn key(&self) -> (&str, &str, &str, &str, Option<&str>) {
        (&self.source, &self.location, &self.printed, &self.recomputed, self.sequence.as_deref())
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "source": self.source,
            "location": self.location,
            "printed": self.printed,
            "recomputed": self.recomputed,
            "note": self.note,
        });
        if let Some(s) = &self.sequence {
            v["sequence"] = json!(s);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let field = |k: &str| {
            v.get(k)
                .and_then(Value::as_str)
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("erratum needs string {k:?}")))
        };
        Ok(Erratum {
            source: field("source")?,
            location: field("location")?,
            printed: field("printed")?,
            recomputed: field("recomputed")?,
            sequence: v.get("sequence").and_then(Value::as_str).map(str::to_string),
            note: field("note").unwrap_or_default(),
        })
    }
}

/// The errata list shipped next to the fixtures.
pub fn registered_errata() -> Result<Vec<Erratum>, Error> {
    let doc: Value = serde_json::from_str(ERRATA_JSON).map_err(|e| Error::Parse(e.to_string()))?;
    doc["errata"]
        .as_array()
        .ok_or_else(|| Error::Parse("errata sidecar needs an \"errata\" array".into()))?
        .iter()
        .map(Erratum::from_json)
        .collect()
}

/// Printed stream values of the first two level pairs that the recomputation
/// does not round to. The pairs are fixed at `(1,1)` and `(1/2,1/2)`.
pub fn score_errata(sys: &WeightedInfoSystem) -> Result<Vec<Erratum>, Error> {
    let levels = [ratio(1, 1), ratio(1, 2)];
    let mut out = Vec::new();
    for p in printed_scores()? {
        let missing = || Error::Parse(format!("no cell {},{}", p.alternative, p.attribute));
        let x = sys.alternative_index(&p.alternative).ok_or_else(missing)?;
        let a = sys.attributes.iter().position(|a| *a == p.attribute).ok_or_else(missing)?;
        let t = &levels[((p.j - 1) / 4) as usize];
        let quad = score_quad(&cut(&sys.cells[x][a], t, t)?);
        let value = quad.get(((p.j - 1) % 4 + 1) as usize);
        if !matches_published(value, &p.printed)? {
            let source = if p.j <= 4 { "table3" } else { "table4" };
            let loc = format!("{},{},c{}", p.alternative, p.attribute, p.j);
            out.push(Erratum::new(source, loc, &p.printed, value, "printed value disagrees with the cell"));
        }
    }
    Ok(out)
}

/// Entries of the printed matrix and degree list that the report does not reproduce.
pub fn matrix_errata(report: &DominanceReport) -> Result<Vec<Erratum>, Error> {
    let printed = printed_matrix()?;
    let mut out = Vec::new();
    let index = |id: &str| {
        report.alternatives.iter().position(|x| x == id).ok_or_else(|| Error::Parse(format!("report lacks {id}")))
    };
    for (x, row) in printed.ids.iter().zip(&printed.cells) {
        let i = index(x)?;
        for (y, text) in printed.ids.iter().zip(row) {
            let value = &report.matrix[i][index(y)?];
            if !matches_published(value, text)? {
                let mut e = Erratum::new("table5", format!("{x},{y}"), text, value, "WR entry differs");
                e.sequence = Some(report.sequence.clone());
                out.push(e);
            }
        }
    }
    for (x, text) in printed_degrees()? {
        let value = &report.degrees[index(&x)?];
        if !matches_published(value, &text)? {
            let mut e = Erratum::new("table6", x, &text, value, "dominance degree differs");
            e.sequence = Some(report.sequence.clone());
            out.push(e);
        }
    }
    Ok(out)
}

/// Errata in the worked examples and the scoring-method table.
pub fn worked_example_errata() -> Result<Vec<Erratum>, Error> {
    let r = |s: &str| parse_rational(s).expect("literal");
    let seq = DenseSequence::default();
    let mut out = Vec::new();

    let a41 = Ifn::triangular(["0.2", "0.3", "0.5"].map(r), ["0.35", "0.55", "0.65"].map(r))?;
    let c1 = c_value(&a41, &seq, 1)?;
    if !matches_published(&c1, "-0.85")? {
        out.push(Erratum::new("example-4.1", "C1(A)".into(), "-0.85", &c1, "misplaced decimal point"));
    }

    let a42 = Ifn::trapezoidal(["0.35", "0.35", "0.4", "0.6"].map(r), ["0.1", "0.2", "0.3", "0.35"].map(r))?;
    let b42 = Ifn::trapezoidal(["0.35", "0.35", "0.45", "0.55"].map(r), ["0", "0.3", "0.3", "0.35"].map(r))?;
    for (name, ifn, printed) in [("C2(A)", &a42, "-0.03"), ("C2(B)", &b42, "0.02")] {
        let v = c_value(ifn, &seq, 2)?;
        if !matches_published(&v, printed)? {
            out.push(Erratum::new("example-4.2", name.into(), printed, &v, "sign flipped; the stated conclusion A>B matches the recomputed signs"));
        }
    }

    // the ninth with-repeats term is printed under the label of the second
    let ninth = term_with_repeats(9);
    let second = term_with_repeats(2);
    if second != r("3/4") {
        let mut e = Erratum::new("example-3.1", "s_2".into(), "3/4", &second, "");
        e.note = format!("value belongs to s_9 = {}", to_exact_string(&ninth));
        out.push(e);
    }

    for row in table1()? {
        for (method, printed) in &row.ties {
            let m = LegacyMethod::from_name(method)?;
            for (side, ifn) in [("A", &row.a), ("B", &row.b)] {
                let ok = match (legacy_score(&m, ifn)?, printed.strip_prefix("sqrt:")) {
                    (LegacyScore::SqrtOf(v), Some(inner)) => v == parse_rational(inner)?,
                    (LegacyScore::Exact(v), None) => matches_published(&v, printed)?,
                    _ => false,
                };
                if !ok {
                    let recomputed = match legacy_score(&m, ifn)? {
                        LegacyScore::Exact(v) => to_exact_string(&v),
                        other => other.to_string(),
                    };
                    out.push(Erratum {
                        source: "table1".into(),
                        location: format!("{} {}({side})", row.label, m.name()),
                        printed: printed.clone(),
                        recomputed,
                        sequence: None,
                        note: "printed tie does not hold".into(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Every erratum for a run on the bundled system, grouped by source.
pub fn errata_report(sys: &WeightedInfoSystem, report: &DominanceReport) -> Result<Value, Error> {
    let list = |v: Vec<Erratum>| Value::Array(v.iter().map(Erratum::to_json).collect());
    Ok(json!({
        "scores": list(score_errata(sys)?),
        "dominance": list(matrix_errata(report)?),
        "worked_examples": list(worked_example_errata()?),
    }))
}
