//! The `.sg` Cayley-table text format.
//!
//! Lines starting with `#` are comments. The first other line holds `n`,
//! followed by `n` lines of `n` whitespace-separated indices.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semigroup::FiniteSemigroup;
use crate::simple::{rees_construct, ReesMatrixSemigroup};

/// Non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#') && !l.is_empty())
}

pub(crate) fn parse_row(line_no: usize, line: &str, n: usize) -> Result<Vec<usize>> {
    let row = line
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{t}` is not a non-negative integer"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if row.len() != n {
        return Err(Error::Parse {
            line: line_no,
            message: format!("expected {n} entries, found {}", row.len()),
        });
    }
    Ok(row)
}

/// Reads `n` and the table rows from a line iterator.
pub(crate) fn read_table<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    limits: &Limits,
) -> Result<FiniteSemigroup> {
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing order line".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: line_no,
        message: format!("`{header}` is not an order"),
    })?;
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    if n > limits.max_order {
        return Err(Error::OrderTooLarge {
            order: n,
            max: limits.max_order,
        });
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = line_no;
    for r in 0..n {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: last + 1,
            message: format!("expected {n} rows, found {r}"),
        })?;
        last = line_no;
        rows.push(parse_row(line_no, line, n)?);
    }
    FiniteSemigroup::from_table_with_limits(n, &rows, limits)
}

pub fn parse_sg(text: &str) -> Result<FiniteSemigroup> {
    parse_sg_with_limits(text, &Limits::default())
}

pub fn parse_sg_with_limits(text: &str, limits: &Limits) -> Result<FiniteSemigroup> {
    let mut lines = content_lines(text);
    let s = read_table(&mut lines, limits)?;
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: "trailing content after table".into(),
        });
    }
    Ok(s)
}

pub(crate) fn write_table_body(s: &FiniteSemigroup, out: &mut String) {
    out.push_str(&format!("{}\n", s.order()));
    for a in s.elements() {
        let row: Vec<String> = s.row(a).map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// One `#` header line (the name, or `semigroup`), the order, the rows.
pub fn write_sg(s: &FiniteSemigroup) -> String {
    let mut out = format!("# {}\n", s.name().unwrap_or("semigroup"));
    write_table_body(s, &mut out);
    out
}

pub fn read_sg_file(path: &std::path::Path, limits: &Limits) -> Result<FiniteSemigroup> {
    let text = std::fs::read_to_string(path)?;
    let s = parse_sg_with_limits(&text, limits)?;
    Ok(match path.file_stem().and_then(|s| s.to_str()) {
        Some(stem) => s.with_name(stem),
        None => s,
    })
}

/// Header line written at the top of every `.rms` file.
pub const RMS_HEADER: &str = "# rees matrix semigroup";

/// `.rms`: `i_size K`, `lambda_size K`, `group` followed by an embedded
/// `.sg` table (order line and rows), then `sandwich` followed by one row
/// per element of Λ with one group index per element of I.
pub fn write_rms(rms: &ReesMatrixSemigroup) -> String {
    let mut out = format!(
        "{RMS_HEADER}\ni_size {}\nlambda_size {}\ngroup\n",
        rms.i_size(),
        rms.lambda_size()
    );
    write_table_body(rms.group(), &mut out);
    out.push_str("sandwich\n");
    for row in rms.sandwich() {
        let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn expect_keyword<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
) -> Result<(usize, &'a str)> {
    let (line, text) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: format!("missing `{key}`"),
    })?;
    let rest = text.strip_prefix(key).ok_or(Error::Parse {
        line,
        message: format!("expected `{key}`"),
    })?;
    Ok((line, rest.trim()))
}

fn keyed_size<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, key: &str) -> Result<usize> {
    let (line, value) = expect_keyword(lines, key)?;
    value.parse().map_err(|_| Error::Parse {
        line,
        message: format!("`{value}` is not a size"),
    })
}

pub fn parse_rms(text: &str) -> Result<ReesMatrixSemigroup> {
    let limits = Limits::default();
    let mut lines = content_lines(text);
    let i_size = keyed_size(&mut lines, "i_size")?;
    let lambda_size = keyed_size(&mut lines, "lambda_size")?;
    expect_keyword(&mut lines, "group")?;
    let group = read_table(&mut lines, &limits)?;
    let (mut last, _) = expect_keyword(&mut lines, "sandwich")?;
    let mut sandwich = Vec::with_capacity(lambda_size);
    for _ in 0..lambda_size {
        let (line, row) = lines.next().ok_or(Error::Parse {
            line: last + 1,
            message: format!("expected {lambda_size} sandwich rows"),
        })?;
        last = line;
        sandwich.push(parse_row(line, row, i_size)?);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: "trailing content after sandwich matrix".into(),
        });
    }
    rees_construct(i_size, lambda_size, group, sandwich)
}
