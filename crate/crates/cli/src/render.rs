use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use plethy_core::{Partition, Rational, RestrictionCell, SparsePolynomial};

use crate::args::Format;
use crate::CliError;

#[derive(Debug, Serialize)]
pub struct RouteValues {
    pub littlewood: Option<u64>,
    pub corollary: Option<i64>,
    pub brute: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct RestrictionRecord {
    pub n: usize,
    pub d: usize,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub routes: RouteValues,
    pub agree: bool,
}

impl RestrictionRecord {
    pub fn new(n: usize, d: usize, cell: &RestrictionCell) -> Self {
        RestrictionRecord {
            n,
            d,
            lambda: cell.lambda.parts().to_vec(),
            mu: cell.mu.parts().to_vec(),
            routes: RouteValues {
                littlewood: cell.littlewood,
                corollary: cell.corollary,
                brute: cell.brute,
            },
            agree: cell.agree(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TermRecord {
    pub n: usize,
    pub d: usize,
    pub exponent: Vec<u32>,
    pub coefficient: Value,
}

fn comma_list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn optional<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// Integers that fit in 64 bits become JSON numbers; larger ones strings.
pub fn integer_json(value: &BigInt) -> Value {
    match i64::try_from(value) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(value.to_string()),
    }
}

fn json_lines<T: Serialize>(records: &[T]) -> Result<String, CliError> {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).map_err(|e| CliError::Output(e.to_string()))?);
        out.push('\n');
    }
    Ok(out)
}

fn csv_table(header: &[String], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Output(e.to_string());
    writer.write_record(header).map_err(io)?;
    for row in rows {
        writer.write_record(row).map_err(io)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

/// Left-aligned columns separated by two spaces.
pub fn pretty_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header);
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

pub fn restriction_records(
    records: &[RestrictionRecord],
    format: Format,
    columns: &[&str],
) -> Result<String, CliError> {
    match format {
        Format::Json => json_lines(records),
        Format::Csv => {
            let header: Vec<String> = ["n", "d", "lambda", "mu", "littlewood", "corollary", "brute", "agree"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let blank = |v: Option<String>| v.unwrap_or_default();
                    vec![
                        r.n.to_string(),
                        r.d.to_string(),
                        comma_list(&r.lambda),
                        comma_list(&r.mu),
                        blank(r.routes.littlewood.map(|v| v.to_string())),
                        blank(r.routes.corollary.map(|v| v.to_string())),
                        blank(r.routes.brute.map(|v| v.to_string())),
                        r.agree.to_string(),
                    ]
                })
                .collect();
            csv_table(&header, &rows)
        }
        Format::Pretty => {
            let mut header = vec!["lambda".to_string(), "mu".to_string()];
            header.extend(columns.iter().map(|c| c.to_string()));
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let mut row = vec![
                        Partition::from_unsorted(r.lambda.iter().copied()).to_string(),
                        Partition::from_unsorted(r.mu.iter().copied()).to_string(),
                    ];
                    for column in columns {
                        row.push(match *column {
                            "littlewood" => optional(r.routes.littlewood),
                            "corollary" => optional(r.routes.corollary),
                            "brute" => optional(r.routes.brute),
                            _ => r.agree.to_string(),
                        });
                    }
                    row
                })
                .collect();
            Ok(pretty_table(&header, &rows))
        }
    }
}

fn integer_coefficient(c: &Rational) -> Result<BigInt, CliError> {
    if !c.is_integer() {
        return Err(CliError::Verification(format!("non-integral coefficient {c}")));
    }
    Ok(c.to_integer())
}

/// Terms of an integral polynomial in lexicographic exponent order.
pub fn polynomial(p: &SparsePolynomial, d: usize, format: Format) -> Result<String, CliError> {
    let n = p.n_vars();
    let mut terms = Vec::new();
    for (x, c) in p.terms() {
        terms.push((x.coords().to_vec(), integer_coefficient(c)?));
    }
    match format {
        Format::Json => {
            let records: Vec<TermRecord> = terms
                .iter()
                .map(|(x, c)| TermRecord {
                    n,
                    d,
                    exponent: x.clone(),
                    coefficient: integer_json(c),
                })
                .collect();
            json_lines(&records)
        }
        Format::Csv => {
            let mut header: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
            header.push("coefficient".into());
            let rows: Vec<Vec<String>> = terms
                .iter()
                .map(|(x, c)| {
                    let mut row: Vec<String> = x.iter().map(u32::to_string).collect();
                    row.push(c.to_string());
                    row
                })
                .collect();
            csv_table(&header, &rows)
        }
        Format::Pretty => {
            let header = vec!["monomial".to_string(), "coefficient".to_string()];
            let rows: Vec<Vec<String>> = terms
                .iter()
                .map(|(x, c)| vec![monomial(x), c.to_string()])
                .collect();
            let mut out = pretty_table(&header, &rows);
            let total: BigInt = terms.iter().map(|(_, c)| c).sum();
            out.push_str(&format!("value at t = 1: {total}\n"));
            Ok(out)
        }
    }
}

fn monomial(x: &[u32]) -> String {
    let factors: Vec<String> = x
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("t{}", i + 1) } else { format!("t{}^{e}", i + 1) })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials() {
        assert_eq!(monomial(&[0, 0]), "1");
        assert_eq!(monomial(&[2, 0, 1]), "t1^2*t3");
    }

    #[test]
    fn table_alignment() {
        let header = vec!["a".to_string(), "bb".to_string()];
        let rows = vec![vec!["ccc".to_string(), "d".to_string()]];
        assert_eq!(pretty_table(&header, &rows), "a    bb\nccc  d\n");
    }

    #[test]
    fn large_integers_become_strings() {
        let big = BigInt::from(i64::MAX) * 4;
        assert!(integer_json(&big).is_string());
        assert_eq!(integer_json(&BigInt::from(-3)), Value::from(-3));
    }
}
