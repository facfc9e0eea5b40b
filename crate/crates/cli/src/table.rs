use serde::{Deserialize, Serialize};
use srt_core::geometry::{hilbert_chow_model, symplectic_reduction, verdict};
use srt_core::GroupKind;

use crate::{CliError, Config};

/// One `(n, m)` line of a summary table. `None` renders as "—".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TableRow {
    pub group: GroupKind,
    pub n: usize,
    pub m: usize,
    pub valid: bool,
    pub big_n: Option<usize>,
    pub quotient_dim: Option<usize>,
    pub verdict: Option<String>,
    pub springer_count: Option<usize>,
    pub model_dim: Option<usize>,
}

const DASH: &str = "—";

fn cell(v: Option<usize>) -> String {
    v.map_or_else(|| DASH.to_string(), |x| x.to_string())
}

impl TableRow {
    fn invalid(group: GroupKind, n: usize, m: usize) -> Self {
        Self {
            group,
            n,
            m,
            valid: false,
            big_n: None,
            quotient_dim: None,
            verdict: None,
            springer_count: None,
            model_dim: None,
        }
    }

    fn cells(&self) -> Vec<String> {
        let verdict = if self.valid {
            self.verdict.clone().unwrap_or_else(|| DASH.to_string())
        } else {
            "invalid".to_string()
        };
        vec![
            self.n.to_string(),
            self.m.to_string(),
            cell(self.big_n),
            cell(self.quotient_dim),
            verdict,
            cell(self.springer_count),
            cell(self.model_dim),
        ]
    }
}

pub const HEADER: [&str; 7] = ["n", "m", "N", "quotient_dim", "verdict", "springer_count", "model_dim"];

pub fn cmd_table(
    group: GroupKind,
    n_range: std::ops::RangeInclusive<usize>,
    m_range: std::ops::RangeInclusive<usize>,
    config: &Config,
) -> Result<Vec<TableRow>, CliError> {
    config.validate()?;
    let mut rows = Vec::new();
    for n in n_range {
        for m in m_range.clone() {
            if n == 0 || m == 0 || (group == GroupKind::Symplectic && n % 2 == 1) {
                rows.push(TableRow::invalid(group, n, m));
                continue;
            }
            let v = verdict(group, n, m);
            let mut row = TableRow {
                group,
                n,
                m,
                valid: true,
                big_n: None,
                quotient_dim: None,
                verdict: Some(format!("{:?}", v.case)),
                springer_count: v.springer_count,
                model_dim: None,
            };
            if group != GroupKind::Orthogonal {
                let q = symplectic_reduction(group, n, m)?;
                row.big_n = q.components.first().map(|o| o.twos());
                row.quotient_dim = Some(q.dim());
                let model = hilbert_chow_model(group, n, m)?;
                row.model_dim = model.models().iter().map(|b| b.total_dim()).max();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = HEADER.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.cells().join(","));
        out.push('\n');
    }
    out
}

pub fn render_text(rows: &[TableRow]) -> String {
    let body: Vec<Vec<String>> = rows.iter().map(TableRow::cells).collect();
    let widths: Vec<usize> = (0..HEADER.len())
        .map(|i| body.iter().map(|r| r[i].chars().count()).chain([HEADER[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<String>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(HEADER.iter().map(|s| s.to_string()).collect());
    for r in body {
        out.push_str(&line(r));
    }
    out
}

/// Parses an inclusive range: `"3"`, `"1..3"`, `"1..=3"` or `"1-3"`.
pub fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("invalid range '{s}'; expected e.g. 3, 1..3 or 1-3"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let v = num(s)?;
        (v, v)
    };
    if lo > hi {
        return Err(CliError::Usage(format!("empty range '{s}'")));
    }
    Ok(lo..=hi)
}
