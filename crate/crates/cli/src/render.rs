//! Rendering of records in the three output formats.

use std::fmt::Write as _;

use serde::Serialize;

use crate::records::{ReportRecord, TableRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

pub fn json_line<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("records serialize")
}

pub fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Single-cell payloads become `$...$`; tables become `tabular`.
pub fn latex_table(columns: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\begin{{tabular}}{{{}}}",
        "l".repeat(columns.len().max(1))
    );
    let _ = writeln!(out, "{} \\\\", columns.join(" & "));
    out.push_str("\\hline\n");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("${c}$")).collect();
        let _ = writeln!(out, "{} \\\\", cells.join(" & "));
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn table(record: &TableRecord, latex_rows: &[Vec<String>], format: Format) -> String {
    match format {
        Format::Json => json_line(record) + "\n",
        Format::Csv => {
            let header: Vec<&str> = record.columns.iter().map(String::as_str).collect();
            csv_rows(&header, &record.rows)
        }
        Format::Latex => latex_table(&record.columns, latex_rows),
    }
}

pub fn reports(records: &[ReportRecord], format: Format) -> String {
    match format {
        Format::Json => records.iter().map(|r| json_line(r) + "\n").collect(),
        Format::Csv => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let witness = r
                        .witness
                        .as_ref()
                        .map(|w| format!("{}: {} vs {}", w.monomial, w.lhs, w.rhs))
                        .unwrap_or_default();
                    let spots = r.spot_checks.iter().filter(|s| s.passed).count();
                    vec![
                        r.identity.clone(),
                        r.params_text(),
                        r.passed.to_string(),
                        format!("{spots}/{}", r.spot_checks.len()),
                        r.lhs.clone(),
                        r.rhs.clone(),
                        witness,
                    ]
                })
                .collect();
            csv_rows(
                &[
                    "identity",
                    "params",
                    "passed",
                    "spot_checks",
                    "lhs",
                    "rhs",
                    "witness",
                ],
                &rows,
            )
        }
        Format::Latex => {
            let mut out = String::from(
                "\\begin{tabular}{lll}\nidentity & parameters & verdict \\\\\n\\hline\n",
            );
            for r in records {
                let verdict = if r.all_passed() { "pass" } else { "fail" };
                let _ = writeln!(
                    out,
                    "\\texttt{{{}}} & {} & {verdict} \\\\",
                    r.identity.replace('_', "\\_"),
                    r.params_text()
                );
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}
