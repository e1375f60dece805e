use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::square::{Entry, LatinSquare};

/// A Latin square with some cells overwritten: a k-near copy of `base`.
///
/// Overridden entries are the alien entries, their cells the holes, and the
/// base symbols they replace the displaced natives. Overrides are stored
/// sparsely, so building one costs nothing beyond the override list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbedSquare<'a> {
    base: &'a LatinSquare,
    overrides: Vec<Entry>,
}

impl<'a> PerturbedSquare<'a> {
    /// The 0-near copy: the base itself.
    pub fn new(base: &'a LatinSquare) -> Self {
        Self { base, overrides: Vec::new() }
    }

    /// `sigma -> L[r, c]`.
    pub fn near_copy(base: &'a LatinSquare, cell: (usize, usize), sigma: u32) -> Result<Self> {
        let mut p = Self::new(base);
        p.replace(cell, sigma)?;
        Ok(p)
    }

    /// Overwrites `cell` of the current matrix with `sigma`.
    ///
    /// Fails with [`Error::SameSymbol`] if the cell already holds `sigma`.
    /// Writing the base symbol back into a hole removes the override.
    pub fn replace(&mut self, cell: (usize, usize), sigma: u32) -> Result<()> {
        let (r, c) = cell;
        self.base.check_index(r)?;
        self.base.check_index(c)?;
        if self.get(r, c) == sigma {
            return Err(Error::SameSymbol);
        }
        self.overrides.retain(|e| (e.row, e.col) != cell);
        if self.base.get(r, c) != sigma {
            self.overrides.push(Entry { row: r, col: c, symbol: sigma });
            self.overrides.sort_unstable();
        }
        Ok(())
    }

    pub fn with_replacement(mut self, cell: (usize, usize), sigma: u32) -> Result<Self> {
        self.replace(cell, sigma)?;
        Ok(self)
    }

    pub fn base(&self) -> &'a LatinSquare {
        self.base
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    /// Number of overridden cells.
    pub fn k(&self) -> usize {
        self.overrides.len()
    }

    /// The alien entries, sorted by cell.
    pub fn aliens(&self) -> &[Entry] {
        &self.overrides
    }

    pub fn holes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.overrides.iter().map(|e| (e.row, e.col))
    }

    pub fn displaced_natives(&self) -> impl Iterator<Item = u32> + '_ {
        self.overrides.iter().map(|e| self.base.get(e.row, e.col))
    }

    pub fn is_hole(&self, r: usize, c: usize) -> bool {
        self.overrides.iter().any(|e| e.row == r && e.col == c)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        for e in &self.overrides {
            if e.row == r && e.col == c {
                return e.symbol;
            }
        }
        self.base.get(r, c)
    }

    /// Columns of row `r` holding `s`, appended to `out`. At most one column
    /// comes from the base; the rest are holes overwritten with `s`.
    pub fn cols_with(&self, r: usize, s: u32, out: &mut Vec<usize>) {
        let c = self.base.col_of(r, s);
        if !self.is_hole(r, c) {
            out.push(c);
        }
        for e in &self.overrides {
            if e.row == r && e.symbol == s {
                out.push(e.col);
            }
        }
    }

    /// Rows of column `c` holding `s`, appended to `out`.
    pub fn rows_with(&self, c: usize, s: u32, out: &mut Vec<usize>) {
        let r = self.base.row_of(c, s);
        if !self.is_hole(r, c) {
            out.push(r);
        }
        for e in &self.overrides {
            if e.col == c && e.symbol == s {
                out.push(e.row);
            }
        }
    }

    /// Candidate columns for `(r, s)` as a fresh vector.
    pub fn candidate_cols(&self, r: usize, s: u32) -> Vec<usize> {
        let mut v = Vec::new();
        self.cols_with(r, s, &mut v);
        v
    }

    pub fn candidate_rows(&self, c: usize, s: u32) -> Vec<usize> {
        let mut v = Vec::new();
        self.rows_with(c, s, &mut v);
        v
    }
}
