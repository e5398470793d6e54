//! OEIS b-file emission.

use std::fmt;
use std::str::FromStr;

use wheelfan_core::{Int, Result};

use crate::source::FormulaSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    SepAdjacent,
    SepDist2,
    SepCenter,
    WheelTrees,
    FanTrees,
}

impl Sequence {
    pub const ALL: [Sequence; 5] = [
        Sequence::SepAdjacent,
        Sequence::SepDist2,
        Sequence::SepCenter,
        Sequence::WheelTrees,
        Sequence::FanTrees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::SepAdjacent => "sep-adjacent",
            Sequence::SepDist2 => "sep-dist2",
            Sequence::SepCenter => "sep-center",
            Sequence::WheelTrees => "wheel-trees",
            Sequence::FanTrees => "fan-trees",
        }
    }

    /// Smallest index at which the underlying graph and pair exist.
    pub fn offset(self) -> usize {
        match self {
            Sequence::SepAdjacent | Sequence::SepCenter | Sequence::WheelTrees => 3,
            Sequence::SepDist2 => 4,
            Sequence::FanTrees => 1,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Sequence::SepAdjacent => "two-component spanning forests of the wheel with n rim vertices separating adjacent rim vertices: 2(F(2n-1)-1)",
            Sequence::SepDist2 => "two-component spanning forests of the wheel with n rim vertices separating rim vertices at distance 2: 2(L(2n-2)-3)",
            Sequence::SepCenter => "two-component spanning forests of the wheel with n rim vertices separating a rim vertex from the center: F(2n)",
            Sequence::WheelTrees => "spanning trees of the wheel with n rim vertices: L(2n)-2",
            Sequence::FanTrees => "spanning trees of the fan with n path vertices: F(2n)",
        }
    }

    pub fn value(self, n: usize, src: &dyn FormulaSource) -> Result<Int> {
        match self {
            Sequence::SepAdjacent => src.sep_adjacent(n),
            Sequence::SepDist2 => src.sep_dist2(n),
            Sequence::SepCenter => src.sep_center(n),
            Sequence::WheelTrees => src.trees_wheel(n),
            Sequence::FanTrees => src.trees_fan(n),
        }
    }
}

impl FromStr for Sequence {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| format!("unknown sequence {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub comments: Vec<String>,
    pub offset: usize,
    pub rows: Vec<(usize, Int)>,
}

impl BFile {
    /// Rows `offset..=max_n`; empty when `max_n < offset`.
    pub fn generate(seq: Sequence, max_n: usize, src: &dyn FormulaSource) -> Result<Self> {
        let offset = seq.offset();
        let rows = (offset..=max_n)
            .map(|n| Ok((n, seq.value(n, src)?)))
            .collect::<Result<_>>()?;
        Ok(BFile {
            comments: vec![
                format!("{}: {}", seq.name(), seq.description()),
                format!("offset {offset}"),
            ],
            offset,
            rows,
        })
    }

    pub fn without_comments(mut self) -> Self {
        self.comments.clear();
        self
    }
}

impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.comments {
            writeln!(f, "# {c}")?;
        }
        for (i, v) in &self.rows {
            writeln!(f, "{i} {v}")?;
        }
        Ok(())
    }
}
