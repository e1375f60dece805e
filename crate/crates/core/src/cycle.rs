//! Row cycles, cycle switching and the three-row η trade.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::square::LatinSquare;

/// The entries of rows `i` and `j` over the columns of one cycle of
/// `tau_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCycle {
    pub rows: (usize, usize),
    /// Columns in traversal order, starting at the column the cycle was
    /// requested through. Column `columns[t + 1]` holds `tau(L[i, columns[t]])`
    /// in row `i`.
    pub columns: Vec<usize>,
    /// Symbols of row `i` in traversal order.
    pub symbols: Vec<u32>,
}

impl RowCycle {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn sorted_columns(&self) -> Vec<usize> {
        let mut c = self.columns.clone();
        c.sort_unstable();
        c
    }
}

/// The row cycle `rho(i, j, c)`.
pub fn row_cycle(l: &LatinSquare, i: usize, j: usize, c: usize) -> Result<RowCycle> {
    l.check_index(i)?;
    l.check_index(j)?;
    l.check_index(c)?;
    if i == j {
        return Err(Error::NotApplicable("row cycle needs two distinct rows"));
    }
    let start = l.get(i, c);
    let mut columns = vec![c];
    let mut symbols = vec![start];
    let mut s = l.tau(i, j, start);
    while s != start {
        columns.push(l.col_of(i, s));
        symbols.push(s);
        s = l.tau(i, j, s);
    }
    Ok(RowCycle { rows: (i, j), columns, symbols })
}

/// Length of the cycle of `tau_{i,j}` through column `c`, without allocating.
pub fn row_cycle_len(l: &LatinSquare, i: usize, j: usize, c: usize) -> usize {
    let start = l.get(i, c);
    let mut len = 1;
    let mut s = l.tau(i, j, start);
    while s != start {
        len += 1;
        s = l.tau(i, j, s);
    }
    len
}

/// Swaps rows `i` and `j` on the columns of `cycle`.
pub fn switch_row_cycle(l: &LatinSquare, cycle: &RowCycle) -> Result<LatinSquare> {
    let (i, j) = cycle.rows;
    let first = *cycle.columns.first().ok_or(Error::InvalidCycle)?;
    let actual = row_cycle(l, i, j, first).map_err(|_| Error::InvalidCycle)?;
    if actual.sorted_columns() != cycle.sorted_columns() {
        return Err(Error::InvalidCycle);
    }
    let n = l.order();
    let mut cells = l.cells().to_vec();
    for &y in &cycle.columns {
        cells.swap(i * n + y, j * n + y);
    }
    Ok(LatinSquare::from_cells_trusted(n, cells))
}

/// The cell set and chain data of the trade `eta(i, j, x)`.
///
/// With `a = L[i, x]`, `b = L[j, x]`, `y` the column of `b` in row `i` and `k`
/// the row of `a` in column `y`, the cycle of `tau_{j,k}` through `a` reads
/// `(a, z_1, ..., z_l, b, ...)`; `chain_cols[w]` is the column of `z_w` in
/// row `j` (with `z_0 = a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaTradePlan {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub x: usize,
    pub y: usize,
    pub a: u32,
    pub b: u32,
    pub chain_cols: Vec<usize>,
    /// `z_1, ..., z_l`.
    pub chain_symbols: Vec<u32>,
}

impl EtaTradePlan {
    /// The chain length `l`.
    pub fn chain_len(&self) -> usize {
        self.chain_symbols.len()
    }

    /// The `2l + 6` cells touched by the trade.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(self.i, self.x), (self.i, self.y), (self.j, self.x), (self.k, self.y)];
        for &c in &self.chain_cols {
            out.push((self.j, c));
            out.push((self.k, c));
        }
        out.sort_unstable();
        out
    }

    /// New symbols for every cell of the trade.
    pub fn replacements(&self) -> Vec<(usize, usize, u32)> {
        let (a, b) = (self.a, self.b);
        let l = self.chain_len();
        let mut out = vec![
            (self.i, self.x, b),
            (self.k, self.y, b),
            (self.j, self.chain_cols[l], b),
            (self.i, self.y, a),
            (self.j, self.x, a),
            (self.k, self.chain_cols[0], a),
        ];
        for w in 1..=l {
            let z = self.chain_symbols[w - 1];
            out.push((self.j, self.chain_cols[w - 1], z));
            out.push((self.k, self.chain_cols[w], z));
        }
        out
    }
}

pub fn eta_plan(l: &LatinSquare, i: usize, j: usize, x: usize) -> Result<EtaTradePlan> {
    l.check_index(i)?;
    l.check_index(j)?;
    l.check_index(x)?;
    if i == j {
        return Err(Error::NotApplicable("rows i and j coincide"));
    }
    let a = l.get(i, x);
    let b = l.get(j, x);
    let y = l.col_of(i, b);
    let k = l.row_of(y, a);
    if k == i || k == j {
        return Err(Error::NotApplicable("rows i, j, k are not distinct"));
    }
    if x == y {
        return Err(Error::NotApplicable("columns x and y coincide"));
    }
    let mut chain_cols = vec![l.col_of(j, a)];
    let mut chain_symbols = Vec::new();
    let mut s = l.tau(j, k, a);
    while s != b {
        if s == a {
            return Err(Error::NotApplicable("b is outside the tau_{j,k} cycle of a"));
        }
        chain_symbols.push(s);
        chain_cols.push(l.col_of(j, s));
        s = l.tau(j, k, s);
    }
    Ok(EtaTradePlan { i, j, k, x, y, a, b, chain_cols, chain_symbols })
}

/// Switches `l` on the trade described by `plan`.
pub fn switch_eta(l: &LatinSquare, plan: &EtaTradePlan) -> Result<LatinSquare> {
    if l.get(plan.i, plan.x) != plan.a
        || l.get(plan.k, plan.y) != plan.a
        || l.get(plan.i, plan.y) != plan.b
        || l.get(plan.j, plan.x) != plan.b
        || l.get(plan.j, plan.chain_cols[0]) != plan.a
    {
        return Err(Error::NotApplicable("plan was not built from this square"));
    }
    l.with_cells(&plan.replacements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    fn one(v: &[usize]) -> Vec<usize> {
        v.iter().map(|x| x + 1).collect()
    }

    #[test]
    fn a8_principal_cycle() {
        let a8 = fixtures::a8();
        let rc = row_cycle(&a8, 0, 1, 0).unwrap();
        assert_eq!(rc.len(), 3);
        assert_eq!(one(&rc.sorted_columns()), [1, 2, 3]);
        let syms: Vec<u32> = rc.symbols.iter().map(|s| s + 1).collect();
        assert_eq!(syms, [4, 8, 6]);
    }

    #[test]
    fn order_two_cycle_is_whole_rows() {
        let l = LatinSquare::cyclic(2);
        let rc = row_cycle(&l, 0, 1, 0).unwrap();
        assert_eq!(rc.sorted_columns(), [0, 1]);
    }

    #[test]
    fn cyclic_five_single_cycle() {
        let l = LatinSquare::cyclic(5);
        assert_eq!(row_cycle(&l, 0, 1, 0).unwrap().len(), 5);
        assert_eq!(row_cycle_len(&l, 0, 1, 0), 5);
    }

    #[test]
    fn switch_a8_first_cycle() {
        let a8 = fixtures::a8();
        let rc = row_cycle(&a8, 0, 1, 0).unwrap();
        let s = switch_row_cycle(&a8, &rc).unwrap();
        let r0: Vec<u32> = s.row(0).iter().map(|v| v + 1).collect();
        let r1: Vec<u32> = s.row(1).iter().map(|v| v + 1).collect();
        assert_eq!(r0, [8, 6, 4, 7, 5, 1, 3, 2]);
        assert_eq!(r1, [4, 8, 6, 2, 7, 5, 1, 3]);
        assert_eq!(s.hamming_distance(&a8), 6);
        let back = switch_row_cycle(&s, &row_cycle(&s, 0, 1, 0).unwrap()).unwrap();
        assert_eq!(back, a8);
    }

    #[test]
    fn full_length_cycle_swaps_rows() {
        let l = LatinSquare::cyclic(5);
        let s = switch_row_cycle(&l, &row_cycle(&l, 1, 3, 2).unwrap()).unwrap();
        assert_eq!(s.row(1), l.row(3));
        assert_eq!(s.row(3), l.row(1));
    }

    #[test]
    fn foreign_cycle_rejected() {
        let a8 = fixtures::a8();
        let mut rc = row_cycle(&a8, 0, 1, 0).unwrap();
        rc.columns.pop();
        assert_eq!(switch_row_cycle(&a8, &rc), Err(Error::InvalidCycle));
    }

    #[test]
    fn eta_on_e_matches_highlighted_cells() {
        let e = fixtures::e();
        let plan = eta_plan(&e, 3, 6, 1).unwrap();
        assert_eq!((plan.a + 1, plan.b + 1), (7, 8));
        assert_eq!((plan.y + 1, plan.k + 1), (4, 2));
        assert_eq!(one(&plan.chain_cols), [1, 5]);
        assert_eq!(plan.chain_len(), 1);
        assert_eq!(plan.chain_symbols, [1]); // z_1 = 2
        let cells: Vec<(usize, usize)> = plan.cells().iter().map(|&(r, c)| (r + 1, c + 1)).collect();
        assert_eq!(cells, [(2, 1), (2, 4), (2, 5), (4, 2), (4, 4), (7, 1), (7, 2), (7, 5)]);

        let switched = switch_eta(&e, &plan).unwrap();
        assert_eq!(switched.get(3, 1) + 1, 8);
        assert_eq!(switched.get(6, 1) + 1, 7);
        assert_eq!(switched.hamming_distance(&e), 8);
        // every highlighted symbol swaps with the other one in its column
        for &(r, c) in &plan.cells() {
            let partner = plan.cells().into_iter().find(|&(r2, c2)| c2 == c && r2 != r).unwrap();
            assert_eq!(switched.get(r, c), e.get(partner.0, partner.1));
        }
    }

    #[test]
    fn eta_needs_three_rows() {
        let l = LatinSquare::cyclic(2);
        assert!(matches!(eta_plan(&l, 0, 1, 0), Err(Error::NotApplicable(_))));
    }
}
