//! Machine-readable triangles and diagrams.
//!
//! ```text
//! bz rank=2 points=3
//! 1 0 2 2 2 0 2 0 1
//! ```
//!
//! The header names the rank and the number of outer weights; the second
//! line lists the entries row by row, triangle after triangle.

use std::fmt::Write as _;
use std::str::FromStr;

use bzpoly_core::triangle::entry_count;
use bzpoly_core::{BZTriangle, GluedDiagram};

/// A parsed machine record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub rank: usize,
    pub points: usize,
    pub entries: Vec<i64>,
}

#[derive(Debug, PartialEq, Eq)]
pub enum FormatError {
    Header,
    Entry(String),
    Length { expected: usize, found: usize },
    Shape(bzpoly_core::Error),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Header => f.write_str("expected header `bz rank=R points=P`"),
            FormatError::Entry(t) => write!(f, "bad entry `{t}`"),
            FormatError::Length { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            FormatError::Shape(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl Record {
    pub fn triangle(t: &BZTriangle) -> Self {
        Record {
            rank: t.rank(),
            points: 3,
            entries: t.entries().to_vec(),
        }
    }

    pub fn diagram(d: &GluedDiagram) -> Self {
        Record {
            rank: d.rank(),
            points: d.points(),
            entries: d.entries().collect(),
        }
    }

    fn expected_len(&self) -> usize {
        entry_count(self.rank) * self.points.saturating_sub(2)
    }

    pub fn to_triangle(&self) -> Result<BZTriangle, FormatError> {
        if self.points != 3 {
            return Err(FormatError::Header);
        }
        BZTriangle::from_entries(self.rank, self.entries.clone()).map_err(FormatError::Shape)
    }

    pub fn to_diagram(&self) -> Result<GluedDiagram, FormatError> {
        let triangles = self
            .entries
            .chunks(entry_count(self.rank))
            .map(|c| BZTriangle::from_entries(self.rank, c.to_vec()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(FormatError::Shape)?;
        GluedDiagram::string(triangles).map_err(FormatError::Shape)
    }
}

impl std::fmt::Display for Record {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "bz rank={} points={}", self.rank, self.points)?;
        let mut line = String::new();
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                line.push(' ');
            }
            let _ = write!(line, "{e}");
        }
        f.write_str(&line)
    }
}

fn field(tok: Option<&str>, key: &str) -> Result<usize, FormatError> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|v| v.parse().ok())
        .ok_or(FormatError::Header)
}

impl FromStr for Record {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(FormatError::Header)?;
        let mut toks = header.split_whitespace();
        if toks.next() != Some("bz") {
            return Err(FormatError::Header);
        }
        let rank = field(toks.next(), "rank=")?;
        let points = field(toks.next(), "points=")?;
        if rank == 0 || points < 3 || toks.next().is_some() {
            return Err(FormatError::Header);
        }
        let entries = lines
            .flat_map(str::split_whitespace)
            .map(|t| t.parse().map_err(|_| FormatError::Entry(t.to_string())))
            .collect::<Result<Vec<i64>, _>>()?;
        let rec = Record {
            rank,
            points,
            entries,
        };
        if rec.entries.len() != rec.expected_len() {
            return Err(FormatError::Length {
                expected: rec.expected_len(),
                found: rec.entries.len(),
            });
        }
        Ok(rec)
    }
}
