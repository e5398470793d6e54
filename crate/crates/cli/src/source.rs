//! Indirection over the closed forms so verification can be exercised
//! against deliberately corrupted formulas.

use wheelfan_core::{formulas, ExactRational, Int, Result};

pub trait FormulaSource {
    fn trees_wheel(&self, n: usize) -> Result<Int> {
        formulas::trees_wheel(n)
    }

    fn trees_fan(&self, m: usize) -> Result<Int> {
        formulas::trees_fan(m)
    }

    fn forests_at_distance(&self, n: usize, k: usize) -> Result<Int> {
        formulas::forests_at_distance(n, k)
    }

    fn sep_adjacent(&self, n: usize) -> Result<Int> {
        formulas::forests_sep_adjacent(n)
    }

    fn sep_dist2(&self, n: usize) -> Result<Int> {
        formulas::forests_sep_dist2(n)
    }

    fn sep_center(&self, n: usize) -> Result<Int> {
        formulas::forests_sep_center(n)
    }

    fn resistance_rim(&self, n: usize, k: usize) -> Result<ExactRational> {
        formulas::resistance_rim(n, k)
    }

    fn resistance_center(&self, n: usize) -> Result<ExactRational> {
        formulas::resistance_center(n)
    }
}

/// The closed forms as implemented in `wheelfan_core::formulas`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Standard;

impl FormulaSource for Standard {}
