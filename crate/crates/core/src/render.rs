//! ASCII rendering of bi-grading dimension grids.
//!
//! Rows are `q` values (increasing upward), columns `p` values (increasing
//! rightward). A cell shows `dim g_{p,q}`, with a `*` suffix when
//! `z_g(e)` meets the cell.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::Q;
use crate::grading::{BiGrading, Cell, GradedSlice};
use crate::serial::qstr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("grid text is empty")]
    Empty,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    #[serde(with = "qstr")]
    pub p: Q,
    #[serde(with = "qstr")]
    pub q: Q,
    pub dim: usize,
    pub star: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRender {
    /// Nonzero cells, `q` descending then `p` ascending.
    pub cells: Vec<GridCell>,
}

impl GridRender {
    pub fn new(mut cells: Vec<GridCell>) -> Self {
        cells.retain(|c| c.dim > 0);
        cells.sort_by(|a, b| b.q.cmp(&a.q).then(a.p.cmp(&b.p)));
        GridRender { cells }
    }

    /// Grid of `grading`, starring the cells met by `z_e` when given.
    pub fn from_grading(grading: &BiGrading, z_e: Option<&GradedSlice>) -> Self {
        let cells = grading
            .cells()
            .iter()
            .map(|(c, s)| GridCell {
                p: c.p.clone(),
                q: c.q.clone(),
                dim: s.dim(),
                star: z_e.is_some_and(|z| z.dim_at(c) > 0),
            })
            .collect();
        GridRender::new(cells)
    }

    pub fn total(&self) -> usize {
        self.cells.iter().map(|c| c.dim).sum()
    }

    pub fn stars(&self) -> usize {
        self.cells.iter().filter(|c| c.star).count()
    }

    pub fn dim_at(&self, p: &Q, q: &Q) -> usize {
        self.get(p, q).map_or(0, |c| c.dim)
    }

    pub fn get(&self, p: &Q, q: &Q) -> Option<&GridCell> {
        self.cells.iter().find(|c| &c.p == p && &c.q == q)
    }

    pub fn starred(&self) -> Vec<Cell> {
        self.cells
            .iter()
            .filter(|c| c.star)
            .map(|c| Cell::new(c.p.clone(), c.q.clone()))
            .collect()
    }

    /// Fixed-width text, one row per `q`, top row largest.
    pub fn to_ascii(&self) -> String {
        let ps: BTreeSet<&Q> = self.cells.iter().map(|c| &c.p).collect();
        let qs: BTreeSet<&Q> = self.cells.iter().map(|c| &c.q).collect();
        let ps: Vec<&Q> = ps.into_iter().collect();
        let corner = "q\\p".to_string();
        let entry = |c: &GridCell| format!("{}{}", c.dim, if c.star { "*" } else { "" });
        let mut width = ps.iter().map(|p| p.to_string().len()).max().unwrap_or(1);
        width = width.max(self.cells.iter().map(|c| entry(c).len()).max().unwrap_or(1));
        let label_width = qs
            .iter()
            .map(|q| q.to_string().len())
            .max()
            .unwrap_or(1)
            .max(corner.len());
        let mut out = String::new();
        let _ = write!(out, "{corner:>label_width$} |");
        for p in &ps {
            let _ = write!(out, " {:>width$}", p.to_string());
        }
        out.push('\n');
        for q in qs.iter().rev() {
            let mut line = format!("{:>label_width$} |", q.to_string());
            for p in &ps {
                let cell = self.get(p, q).map(entry).unwrap_or_default();
                let _ = write!(line, " {cell:>width$}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Inverse of [`GridRender::to_ascii`]; `#` starts a comment line.
    pub fn parse_ascii(text: &str) -> Result<Self, RenderError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hline, header) = lines.next().ok_or(RenderError::Empty)?;
        let malformed = |line: usize, reason: &str| RenderError::Malformed {
            line: line + 1,
            reason: reason.to_string(),
        };
        let bar = header.find('|').ok_or_else(|| malformed(hline, "missing '|'"))?;
        let columns: Vec<(usize, Q)> = tokens(&header[bar + 1..])
            .into_iter()
            .map(|(end, t)| {
                t.parse::<Q>()
                    .map(|p| (end, p))
                    .map_err(|_| malformed(hline, &format!("bad column label {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        let mut cells = Vec::new();
        for (n, line) in lines {
            let bar = line.find('|').ok_or_else(|| malformed(n, "missing '|'"))?;
            let q: Q = line[..bar].trim().parse().map_err(|_| malformed(n, "bad row label"))?;
            for (end, t) in tokens(&line[bar + 1..]) {
                let p = columns
                    .iter()
                    .find(|(e, _)| *e == end)
                    .map(|(_, p)| p.clone())
                    .ok_or_else(|| malformed(n, &format!("entry {t:?} is not aligned to a column")))?;
                let (digits, star) = match t.strip_suffix('*') {
                    Some(d) => (d, true),
                    None => (t.as_str(), false),
                };
                let dim = digits.parse().map_err(|_| malformed(n, &format!("bad entry {t:?}")))?;
                cells.push(GridCell {
                    p,
                    q: q.clone(),
                    dim,
                    star,
                });
            }
        }
        Ok(GridRender::new(cells))
    }
}

/// Whitespace-separated tokens with their end offsets.
fn tokens(s: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices().chain(std::iter::once((s.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                out.push((i, s[b..i].to_string()));
                start = None;
            }
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, qf};

    fn sample() -> GridRender {
        GridRender::new(vec![
            GridCell {
                p: q(0),
                q: q(0),
                dim: 6,
                star: false,
            },
            GridCell {
                p: q(1),
                q: q(0),
                dim: 5,
                star: true,
            },
            GridCell {
                p: q(-4),
                q: q(1),
                dim: 2,
                star: false,
            },
            GridCell {
                p: qf(-1, 3),
                q: qf(2, 3),
                dim: 1,
                star: true,
            },
        ])
    }

    #[test]
    fn ascii_round_trip() {
        let g = sample();
        let text = g.to_ascii();
        assert_eq!(GridRender::parse_ascii(&text).unwrap(), g);
        assert_eq!(g.total(), 14);
        assert_eq!(g.stars(), 2);
    }

    #[test]
    fn misaligned_entries_are_rejected() {
        let text = "q\\p |  0  1\n  0 | 6 5\n";
        assert!(GridRender::parse_ascii(text).is_err());
    }
}
