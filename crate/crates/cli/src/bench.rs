//! Term-count and timing comparison between the partition formula and the
//! repeated chain rule.

use std::io::Write;
use std::time::Instant;

use umfb::{
    chain_rule_derivative_with, equivalence_check, umfb_with, CompositionSpec, Equivalence, InnerMode, MultiIndex,
    UmfbOptions,
};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub i: MultiIndex,
    pub n: usize,
}

impl BenchRow {
    pub fn new(i: &[u32], n: usize) -> Self {
        BenchRow { i: MultiIndex::new(i), n }
    }

    pub fn m(&self) -> usize {
        self.i.len()
    }
}

/// The published comparison rows, largest last within each arity group.
pub fn builtin_rows() -> Vec<BenchRow> {
    vec![
        BenchRow::new(&[1, 1], 2),
        BenchRow::new(&[6, 5], 2),
        BenchRow::new(&[7, 6], 2),
        BenchRow::new(&[7, 7], 2),
        BenchRow::new(&[5, 4], 3),
        BenchRow::new(&[6, 5], 3),
        BenchRow::new(&[5, 4], 4),
        BenchRow::new(&[5, 4], 5),
        BenchRow::new(&[4, 4, 3], 2),
        BenchRow::new(&[4, 4, 4], 2),
        BenchRow::new(&[4, 3, 3], 3),
        BenchRow::new(&[4, 2, 2], 4),
    ]
}

/// Reads rows of the form `6,5;2` (index, outer arity), one per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_rows(text: &str) -> Result<Vec<BenchRow>, CliError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || CliError::Usage(format!("rows line {}: expected `i;n`, got {line:?}", lineno + 1));
        let (i, n) = line.split_once(';').ok_or_else(bad)?;
        let i: MultiIndex = i.parse().map_err(|_| bad())?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        rows.push(BenchRow { i, n });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub i: MultiIndex,
    pub n: usize,
    pub m: usize,
    pub term_count: usize,
    pub umfb_ms: u128,
    pub oracle_ms: u128,
    pub peak_terms: usize,
}

/// Outcome of one row: a record, or the reason it was skipped.
#[derive(Debug)]
pub enum RowResult {
    Done(BenchRecord),
    Skipped(String),
}

pub fn run_row(row: &BenchRow, opts: &UmfbOptions) -> Result<RowResult, CliError> {
    let spec = CompositionSpec::new(row.i.clone(), row.n, InnerMode::Distinct)?;
    let start = Instant::now();
    let fast = match umfb_with(&spec, opts) {
        Ok(p) => p,
        Err(umfb::Error::TermCapExceeded { predicted, cap }) => {
            return Ok(RowResult::Skipped(format!("{predicted} predicted terms exceed the cap of {cap}")))
        }
        Err(e) => return Err(e.into()),
    };
    let umfb_ms = start.elapsed().as_millis();

    let start = Instant::now();
    let (slow, stats) = chain_rule_derivative_with(&spec, opts)?;
    let oracle_ms = start.elapsed().as_millis();

    if let Equivalence::Differ(d) = equivalence_check(&fast, &slow)? {
        return Err(CliError::Mismatch(format!("row {};{}: {d}", row.i, row.n)));
    }
    Ok(RowResult::Done(BenchRecord {
        i: row.i.clone(),
        n: row.n,
        m: row.m(),
        term_count: fast.term_count(),
        umfb_ms,
        oracle_ms,
        peak_terms: stats.peak_terms,
    }))
}

fn index_field(i: &MultiIndex) -> String {
    i.entries().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Runs every row, writing CSV to `out` and skip warnings to `warn`.
pub fn run_bench(
    rows: &[BenchRow],
    opts: &UmfbOptions,
    out: impl Write,
    mut warn: impl Write,
) -> Result<Vec<BenchRecord>, CliError> {
    let mut csv = csv::WriterBuilder::new().delimiter(b';').from_writer(out);
    csv.write_record(["i", "n", "m", "terms", "umfb_ms", "oracle_ms"]).map_err(csv_error)?;
    let mut records = Vec::new();
    for row in rows {
        match run_row(row, opts)? {
            RowResult::Done(r) => {
                csv.write_record([
                    index_field(&r.i),
                    r.n.to_string(),
                    r.m.to_string(),
                    r.term_count.to_string(),
                    r.umfb_ms.to_string(),
                    r.oracle_ms.to_string(),
                ])
                .map_err(csv_error)?;
                csv.flush()?;
                records.push(r);
            }
            RowResult::Skipped(why) => {
                writeln!(warn, "warning: skipping row {};{}: {why}", index_field(&row.i), row.n)?;
            }
        }
    }
    csv.flush()?;
    Ok(records)
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rows() {
        let rows = parse_rows("# comment\n6,5;2\n\n1,1;2\n").unwrap();
        assert_eq!(rows, vec![BenchRow::new(&[6, 5], 2), BenchRow::new(&[1, 1], 2)]);
        assert!(parse_rows("6,5").is_err());
        assert!(parse_rows("6,5;0").is_err());
    }

    #[test]
    fn small_row_counts() {
        let r = run_row(&BenchRow::new(&[1, 1], 2), &UmfbOptions::default()).unwrap();
        match r {
            RowResult::Done(rec) => {
                assert_eq!(rec.term_count, 6);
                assert_eq!(rec.m, 2);
            }
            RowResult::Skipped(w) => panic!("skipped: {w}"),
        }
    }

    #[test]
    fn capped_rows_are_skipped() {
        let opts = UmfbOptions { term_cap: 3, ..UmfbOptions::default() };
        let mut out = Vec::new();
        let mut warn = Vec::new();
        let recs = run_bench(&[BenchRow::new(&[1, 1], 2), BenchRow::new(&[1], 1)], &opts, &mut out, &mut warn).unwrap();
        assert_eq!(recs.len(), 1);
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "i;n;m;terms;umfb_ms;oracle_ms");
        assert!(lines[1].starts_with("1;1;1;1;"));
        assert_eq!(lines.len(), 2);
        assert!(String::from_utf8(warn).unwrap().starts_with("warning: skipping row 1,1;2"));
    }
}
