//! Direct and corrupted products over the pair alphabet `[outer] x [inner]`.

use alloc::vec::Vec;

use crate::cycle::{self, RowCycle};
use crate::error::{Error, Result};
use crate::square::{shift_by, LatinSquare};

/// A label in `[outer] x [inner]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub outer: usize,
    pub inner: usize,
}

impl Pair {
    pub const fn new(outer: usize, inner: usize) -> Self {
        Self { outer, inner }
    }
}

/// A Latin square whose rows, columns and symbols are pairs.
///
/// Internally the pairs are stored through the order-preserving map
/// `(i, j) -> inner * i + j` (ordering by the first coordinate), so
/// [`relabel_prec1`] is free. All public accessors speak pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairIndexedSquare {
    outer: usize,
    inner: usize,
    square: LatinSquare,
}

impl PairIndexedSquare {
    pub fn outer_order(&self) -> usize {
        self.outer
    }

    pub fn inner_order(&self) -> usize {
        self.inner
    }

    pub fn order(&self) -> usize {
        self.outer * self.inner
    }

    /// The relabelling `phi(i, j) = inner * i + j`.
    #[inline]
    pub fn encode(&self, p: Pair) -> usize {
        self.inner * p.outer + p.inner
    }

    #[inline]
    pub fn decode(&self, v: usize) -> Pair {
        Pair::new(v / self.inner, v % self.inner)
    }

    pub fn get(&self, row: Pair, col: Pair) -> Pair {
        self.decode(self.square.get(self.encode(row), self.encode(col)) as usize)
    }

    /// The M-block in position `(i, k)`: rows `{i} x [inner]`, columns
    /// `{k} x [inner]`.
    pub fn m_block(&self, i: usize, k: usize) -> Vec<Vec<Pair>> {
        (0..self.inner)
            .map(|j| {
                (0..self.inner)
                    .map(|l| self.get(Pair::new(i, j), Pair::new(k, l)))
                    .collect()
            })
            .collect()
    }

    /// The L-block (A-block) in position `(j, l)`: rows `[outer] x {j}`,
    /// columns `[outer] x {l}`.
    pub fn l_block(&self, j: usize, l: usize) -> Vec<Vec<Pair>> {
        (0..self.outer)
            .map(|i| {
                (0..self.outer)
                    .map(|k| self.get(Pair::new(i, j), Pair::new(k, l)))
                    .collect()
            })
            .collect()
    }

    /// The principal M-block.
    pub fn principal_m_block(&self) -> Vec<Vec<Pair>> {
        self.m_block(0, 0)
    }

    /// Row cycle through pair-labelled rows and column. The returned cycle is
    /// expressed in the encoded labels of the underlying square.
    pub fn row_cycle(&self, i: Pair, j: Pair, c: Pair) -> Result<RowCycle> {
        cycle::row_cycle(&self.square, self.encode(i), self.encode(j), self.encode(c))
    }

    pub fn switch_row_cycle(&self, rho: &RowCycle) -> Result<Self> {
        Ok(Self {
            outer: self.outer,
            inner: self.inner,
            square: cycle::switch_row_cycle(&self.square, rho)?,
        })
    }

    /// The underlying square under the encoding, without consuming `self`.
    pub fn as_square(&self) -> &LatinSquare {
        &self.square
    }
}

/// `(L x M)[(i, j), (x, y)] = (L[i, x], M[j, y])`.
pub fn direct_product(l: &LatinSquare, m: &LatinSquare) -> PairIndexedSquare {
    let (a, mu) = (l.order(), m.order());
    build(a, mu, |i, j, k, y| (l.get(i, k) as usize, m.get(j, y) as usize))
        .expect("direct product of Latin squares is Latin")
}

/// The corrupted product `(A, B) *_s M`.
///
/// Outside the principal A-block and principal M-block it is `A x M`; the
/// principal A-block takes its outer coordinate from `B`, and the principal
/// M-block has its inner coordinate shifted by `s` modulo `mu`.
pub fn corrupted_product(
    a: &LatinSquare,
    b: &LatinSquare,
    s: usize,
    m: &LatinSquare,
) -> Result<PairIndexedSquare> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    let mu = m.order();
    if s == 0 || s >= mu {
        return Err(Error::BadShift { shift: s, order: mu });
    }
    build(a.order(), mu, |i, j, k, l| {
        if i == 0 && k == 0 {
            (a.get(i, k) as usize, shift_by(m.get(j, l), s, mu) as usize)
        } else if j == 0 && l == 0 {
            (b.get(i, k) as usize, m.get(j, l) as usize)
        } else {
            (a.get(i, k) as usize, m.get(j, l) as usize)
        }
    })
}

/// Renames rows, columns and symbols with `phi(i, j) = inner * i + j`.
pub fn relabel_prec1(p: PairIndexedSquare) -> LatinSquare {
    p.square
}

/// `phi` on one-based labels: `mu * (i - 1) + j`.
pub fn phi_one_based(i: usize, j: usize, mu: usize) -> usize {
    mu * (i - 1) + j
}

pub(crate) fn build(
    outer: usize,
    inner: usize,
    f: impl Fn(usize, usize, usize, usize) -> (usize, usize),
) -> Result<PairIndexedSquare> {
    let n = outer * inner;
    let mut cells = alloc::vec![0u32; n * n];
    for i in 0..outer {
        for j in 0..inner {
            let row = inner * i + j;
            for k in 0..outer {
                for l in 0..inner {
                    let (so, si) = f(i, j, k, l);
                    cells[row * n + inner * k + l] = (inner * so + si) as u32;
                }
            }
        }
    }
    // a corrupted product is Latin only when A and B share row and column symbol sets
    let square = LatinSquare::from_cells(n, cells)?;
    Ok(PairIndexedSquare { outer, inner, square })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn direct_product_formula() {
        let l = LatinSquare::cyclic(3);
        let m = LatinSquare::cyclic(3);
        let p = direct_product(&l, &m);
        assert_eq!(p.order(), 9);
        assert_eq!(p.get(Pair::new(0, 0), Pair::new(0, 0)), Pair::new(l.get(0, 0) as usize, m.get(0, 0) as usize));
        for i in 0..3 {
            for j in 0..3 {
                for x in 0..3 {
                    for y in 0..3 {
                        let s = p.get(Pair::new(i, j), Pair::new(x, y));
                        // projections onto the factors
                        assert_eq!(s.outer, l.get(i, x) as usize);
                        assert_eq!(s.inner, m.get(j, y) as usize);
                    }
                }
            }
        }
    }

    #[test]
    fn l_block_projection() {
        let l = fixtures::e();
        let m = LatinSquare::cyclic(3);
        let p = direct_product(&l, &m);
        for j in 0..3 {
            for k in 0..3 {
                let block = p.l_block(j, k);
                assert!(block.iter().flatten().all(|s| s.inner == m.get(j, k) as usize));
            }
        }
    }

    #[test]
    fn corrupted_a9_e_shift_5() {
        let p = corrupted_product(&fixtures::a9(), &fixtures::b9(), 5, &fixtures::e()).unwrap();
        let one = |q: Pair| (q.outer + 1, q.inner + 1);
        // (A9[1,1], E[1,1] + 5)
        assert_eq!(one(p.get(Pair::new(0, 0), Pair::new(0, 0))), (2, 6));
        // (B9[2,1], E[1,1])
        assert_eq!(one(p.get(Pair::new(1, 0), Pair::new(0, 0))), (3, 1));
        // (A9[2,3], E[2,4])
        assert_eq!(one(p.get(Pair::new(1, 1), Pair::new(2, 3))), (2, 7));
        assert_eq!(p.principal_m_block().len(), 8);
    }

    #[test]
    fn corrupted_agrees_with_direct_outside_principal_blocks() {
        let (a, b, m) = (fixtures::a8(), fixtures::b8(), fixtures::e());
        let p = corrupted_product(&a, &b, 3, &m).unwrap();
        let d = direct_product(&a, &m);
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    for l in 0..8 {
                        let (r, c) = (Pair::new(i, j), Pair::new(k, l));
                        let principal = (i == 0 && k == 0) || (j == 0 && l == 0);
                        if !principal {
                            assert_eq!(p.get(r, c), d.get(r, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bad_shift() {
        let e = fixtures::e();
        let (a, b) = (fixtures::a8(), fixtures::b8());
        assert!(matches!(corrupted_product(&a, &b, 0, &e), Err(Error::BadShift { .. })));
        assert!(matches!(corrupted_product(&a, &b, 8, &e), Err(Error::BadShift { .. })));
    }

    #[test]
    fn phi_labels() {
        assert_eq!(phi_one_based(2, 3, 8), 11);
        for j in 1..=8 {
            assert_eq!(phi_one_based(1, j, 8), j);
            assert_eq!(phi_one_based(3, j, 8), phi_one_based(2, j, 8) + 8);
        }
        let p = direct_product(&fixtures::e(), &LatinSquare::cyclic(3));
        assert_eq!(p.encode(Pair::new(1, 2)), 5);
        assert_eq!(p.decode(5), Pair::new(1, 2));
    }
}
