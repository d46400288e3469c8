//! Table assembly and text/JSON/CSV emission for graded bases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{ClassOrder, Presentation};
use crate::space::{CoeffRing, Field};

/// One degree of a basis table.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct DegreeRow {
    pub degree: usize,
    pub free: Vec<String>,
    pub torsion2: Vec<String>,
}

/// A degree range of canonical basis names for one space.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct TableReport {
    pub space: String,
    pub field: String,
    pub d: usize,
    pub coeff: String,
    pub n: String,
    pub degrees: Vec<DegreeRow>,
}

/// Collects the canonical basis of every degree in the range into a table.
pub fn table_report(p: &Presentation, deg_from: usize, deg_to: usize) -> Result<TableReport> {
    let spec = p.spec;
    let mut degrees = Vec::new();
    for k in deg_from..=deg_to {
        let piece = p.piece(k)?;
        let mut free = Vec::new();
        let mut torsion2 = Vec::new();
        for b in &piece.basis {
            match b.order {
                ClassOrder::Free => free.push(b.display_name()),
                ClassOrder::Two => torsion2.push(b.display_name()),
            }
        }
        degrees.push(DegreeRow {
            degree: k,
            free,
            torsion2,
        });
    }
    Ok(TableReport {
        space: spec.display_name(),
        field: match spec.field {
            Field::C => "C",
            Field::H => "H",
        }
        .to_string(),
        d: spec.field.d(),
        coeff: match spec.coeff {
            CoeffRing::Z => "Z",
            CoeffRing::F2 => "F2",
        }
        .to_string(),
        n: spec.trunc.to_string(),
        degrees,
    })
}

/// Aligned three-column table; degrees without classes are omitted.
pub fn render_text(r: &TableReport) -> String {
    let mut out = format!(
        "space: {}   field: {}   d: {}   coeff: {}   n: {}\n",
        r.space, r.field, r.d, r.coeff, r.n
    );
    let rows: Vec<(String, String, String)> = r
        .degrees
        .iter()
        .filter(|row| !row.free.is_empty() || !row.torsion2.is_empty())
        .map(|row| {
            let join = |v: &[String]| {
                if v.is_empty() {
                    "-".to_string()
                } else {
                    v.join(", ")
                }
            };
            (row.degree.to_string(), join(&row.free), join(&row.torsion2))
        })
        .collect();
    let w0 = rows.iter().map(|r| r.0.len()).chain(["deg".len()]).max().unwrap();
    let w1 = rows.iter().map(|r| r.1.len()).chain(["free".len()]).max().unwrap();
    out.push_str(&format!("{:<w0$}  {:<w1$}  {}\n", "deg", "free", "order 2"));
    for (deg, free, tors) in &rows {
        out.push_str(&format!("{deg:<w0$}  {free:<w1$}  {tors}\n"));
    }
    out
}

/// Pretty JSON with a trailing newline; key order is fixed by declaration.
pub fn render_json(r: &TableReport) -> Result<String> {
    let mut s = serde_json::to_string_pretty(r).map_err(|e| Error::BadArg(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// One row per (degree, generator, order); order is `inf` or `2`.
pub fn render_csv(r: &TableReport) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["degree", "generator", "order"])
        .map_err(|e| Error::BadArg(e.to_string()))?;
    for row in &r.degrees {
        for g in &row.free {
            w.write_record([&row.degree.to_string(), g, "inf"])
                .map_err(|e| Error::BadArg(e.to_string()))?;
        }
        for g in &row.torsion2 {
            w.write_record([&row.degree.to_string(), g, "2"])
                .map_err(|e| Error::BadArg(e.to_string()))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::BadArg(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::BadArg(e.to_string()))
}
