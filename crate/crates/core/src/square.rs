use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Line, Result};

/// Adds `t` to symbol `v` modulo `n`.
///
/// Symbols are the residues `0..n`, so this is the zero-based form of the
/// `((v - 1 + t) mod n) + 1` rule on `1..=n`.
#[inline]
pub fn shift_by(v: u32, t: usize, n: usize) -> u32 {
    ((v as usize + t % n) % n) as u32
}

/// A `(row, column, symbol)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub symbol: u32,
}

/// A validated Latin square with its row and column inverse tables.
///
/// `col_of(r, s)` is the column holding `s` in row `r`, `row_of(c, s)` the row
/// holding `s` in column `c`. Both are exact inverses of the cell table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<u32>,
    row_inv: Vec<u32>,
    col_inv: Vec<u32>,
}

impl core::fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "LatinSquare({}) [", self.order)?;
        for r in 0..self.order {
            write!(f, "  ")?;
            for c in 0..self.order {
                write!(f, "{:>3}", self.get(r, c) + 1)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl LatinSquare {
    /// Validates a row-major grid of zero-based symbols.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    line: Line::Row(r),
                    expected: n,
                    found: row.len(),
                });
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(n, cells)
    }

    /// Validates a row-major grid of one-based symbols, as in the text
    /// formats.
    pub fn from_one_based_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let shifted: Vec<Vec<u32>> = rows
            .iter()
            .map(|row| {
                row.as_ref()
                    .iter()
                    .map(|&s| {
                        if s == 0 {
                            // wraps to a value the range check rejects
                            u32::MAX
                        } else {
                            s - 1
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(&shifted).map_err(|e| match e {
            Error::SymbolOutOfRange { symbol, .. } => Error::SymbolOutOfRange {
                symbol: symbol.wrapping_add(1),
                order: n,
            },
            other => other,
        })
    }

    /// Validates a flat row-major cell table of order `n`.
    pub fn from_cells(n: usize, cells: Vec<u32>) -> Result<Self> {
        if cells.len() != n * n {
            return Err(Error::NotSquare {
                line: Line::Row(cells.len() / n.max(1)),
                expected: n * n,
                found: cells.len(),
            });
        }
        let absent = u32::MAX;
        let mut row_inv = vec![absent; n * n];
        let mut col_inv = vec![absent; n * n];
        for r in 0..n {
            for c in 0..n {
                let s = cells[r * n + c];
                if s as usize >= n {
                    return Err(Error::SymbolOutOfRange { symbol: s, order: n });
                }
                let ri = &mut row_inv[r * n + s as usize];
                if *ri != absent {
                    return Err(Error::NotLatin { line: Line::Row(r), symbol: s });
                }
                *ri = c as u32;
                let ci = &mut col_inv[c * n + s as usize];
                if *ci != absent {
                    return Err(Error::NotLatin { line: Line::Col(c), symbol: s });
                }
                *ci = r as u32;
            }
        }
        Ok(Self { order: n, cells, row_inv, col_inv })
    }

    /// Builds a square from cells already known to be Latin. Still validates
    /// in debug builds.
    pub(crate) fn from_cells_trusted(n: usize, cells: Vec<u32>) -> Self {
        if cfg!(debug_assertions) {
            return Self::from_cells(n, cells).expect("trusted cells are Latin");
        }
        let mut row_inv = vec![0; n * n];
        let mut col_inv = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                let s = cells[r * n + c] as usize;
                row_inv[r * n + s] = c as u32;
                col_inv[c * n + s] = r as u32;
            }
        }
        Self { order: n, cells, row_inv, col_inv }
    }

    /// The cyclic square `L[i, j] = i + j + 1 (mod n)`.
    ///
    /// On one-based labels this is `L[i, j] = shift_by(i, j)`, the convention
    /// used for every cyclic table in the crate.
    pub fn cyclic(n: usize) -> Self {
        let cells = (0..n)
            .flat_map(|r| (0..n).map(move |c| ((r + c + 1) % n) as u32))
            .collect();
        Self::from_cells_trusted(n, cells)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.cells[r * self.order + c]
    }

    /// Column of symbol `s` in row `r`.
    #[inline]
    pub fn col_of(&self, r: usize, s: u32) -> usize {
        self.row_inv[r * self.order + s as usize] as usize
    }

    /// Row of symbol `s` in column `c`.
    #[inline]
    pub fn row_of(&self, c: usize, s: u32) -> usize {
        self.col_inv[c * self.order + s as usize] as usize
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.cells[r * self.order..(r + 1) * self.order]
    }

    /// Row-major cell table.
    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.order).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        let n = self.order;
        (0..n * n).map(move |i| Entry {
            row: i / n,
            col: i % n,
            symbol: self.cells[i],
        })
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        let cells = (0..n * n).map(|i| self.get(i % n, i / n)).collect();
        Self::from_cells_trusted(n, cells)
    }

    /// Applies the row permutation `tau_{i,j}`, which maps `L[i, k]` to `L[j, k]`.
    #[inline]
    pub fn tau(&self, i: usize, j: usize, s: u32) -> u32 {
        self.get(j, self.col_of(i, s))
    }

    /// Copy of the cell table with some cells replaced, re-validated.
    pub fn with_cells(&self, updates: &[(usize, usize, u32)]) -> Result<Self> {
        let mut cells = self.cells.clone();
        for &(r, c, s) in updates {
            cells[r * self.order + c] = s;
        }
        Self::from_cells(self.order, cells)
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, order: self.order })
        }
    }

    /// Number of cells where `self` and `other` differ.
    pub fn hamming_distance(&self, other: &LatinSquare) -> usize {
        self.cells
            .iter()
            .zip(&other.cells)
            .filter(|(a, b)| a != b)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn accepts_fixture_e() {
        let e = fixtures::e();
        assert_eq!(e.order(), 8);
        // E[2,4] = 7 in one-based labels
        assert_eq!(e.get(1, 3) + 1, 7);
    }

    #[test]
    fn accepts_order_two() {
        assert!(LatinSquare::from_one_based_rows(&[[1, 2], [2, 1]]).is_ok());
    }

    #[test]
    fn rejects_row_duplicate() {
        let err = LatinSquare::from_one_based_rows(&[[1, 1], [2, 2]]).unwrap_err();
        assert_eq!(err, Error::NotLatin { line: Line::Row(0), symbol: 0 });
    }

    #[test]
    fn rejects_column_duplicate() {
        let err = LatinSquare::from_one_based_rows(&[[1, 2], [1, 2]]).unwrap_err();
        assert!(matches!(err, Error::NotLatin { line: Line::Col(0), .. }));
    }

    #[test]
    fn rejects_out_of_range_and_ragged() {
        assert!(matches!(
            LatinSquare::from_one_based_rows(&[[1, 3], [2, 1]]),
            Err(Error::SymbolOutOfRange { symbol: 3, order: 2 })
        ));
        assert!(matches!(
            LatinSquare::from_one_based_rows(&[[0, 1], [1, 2]]),
            Err(Error::SymbolOutOfRange { .. })
        ));
        let ragged: [&[u32]; 2] = [&[0, 1], &[1]];
        assert!(matches!(LatinSquare::from_rows(&ragged), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn inverse_tables_round_trip() {
        let l = fixtures::a9();
        for e in l.entries() {
            assert_eq!(l.col_of(e.row, e.symbol), e.col);
            assert_eq!(l.row_of(e.col, e.symbol), e.row);
        }
    }

    #[test]
    fn shift_by_full_turn_is_identity() {
        for n in 1..20 {
            for v in 0..n as u32 {
                assert_eq!(shift_by(v, n, n), v);
                assert_eq!(shift_by(v, 0, n), v);
            }
        }
        // one-based (8 + 1) mod 8 = 1
        assert_eq!(shift_by(7, 1, 8), 0);
    }

    #[test]
    fn cyclic_follows_shift_convention() {
        let l = LatinSquare::cyclic(4);
        // one-based row 1 of the order-4 table is 2 3 4 1
        assert_eq!(l.row(0), &[1, 2, 3, 0]);
        assert_eq!(l.transpose(), l);
    }
}
