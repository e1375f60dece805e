use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::square::LatinSquare;

/// A `dim`-dimensional array over `0..order` stored with the last axis
/// fastest, so the line along axis `k` is a scan with stride
/// `order^(dim - 1 - k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypercube {
    order: usize,
    dim: usize,
    data: Vec<u32>,
}

impl Hypercube {
    /// Validates that every axis-parallel line is a permutation of `0..order`.
    pub fn from_data(order: usize, dim: usize, data: Vec<u32>) -> Result<Self> {
        let expected = order.checked_pow(dim as u32).ok_or(Error::OrderTooLarge {
            order,
            max: usize::MAX,
        })?;
        if data.len() != expected {
            return Err(Error::NotSquare {
                line: crate::error::Line::Row(0),
                expected,
                found: data.len(),
            });
        }
        if let Some(&s) = data.iter().find(|&&s| s as usize >= order) {
            return Err(Error::SymbolOutOfRange { symbol: s, order });
        }
        let h = Self { order, dim, data };
        h.validate()?;
        Ok(h)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = vec![false; self.order];
        for axis in 0..self.dim {
            for start in self.line_starts(axis) {
                seen.iter_mut().for_each(|b| *b = false);
                for idx in self.line(axis, start) {
                    let s = self.data[idx];
                    if core::mem::replace(&mut seen[s as usize], true) {
                        return Err(Error::NotLatinHypercube { axis, symbol: s });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_square(l: &LatinSquare) -> Self {
        Self {
            order: l.order(),
            dim: 2,
            data: l.cells().to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn stride(&self, axis: usize) -> usize {
        self.order.pow((self.dim - 1 - axis) as u32)
    }

    pub fn index_of(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.dim);
        coords.iter().fold(0, |acc, &x| acc * self.order + x)
    }

    pub fn coords_of(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.dim];
        for slot in out.iter_mut().rev() {
            *slot = idx % self.order;
            idx /= self.order;
        }
        out
    }

    pub fn get(&self, coords: &[usize]) -> u32 {
        self.data[self.index_of(coords)]
    }

    #[inline]
    pub fn at(&self, idx: usize) -> u32 {
        self.data[idx]
    }

    /// Flat indices whose coordinate on `axis` is zero.
    pub fn line_starts(&self, axis: usize) -> impl Iterator<Item = usize> + '_ {
        let stride = self.stride(axis);
        let block = stride * self.order;
        (0..self.data.len()).filter(move |i| (i % block) < stride)
    }

    /// Flat indices of the line along `axis` through `start`.
    pub fn line(&self, axis: usize, start: usize) -> impl Iterator<Item = usize> {
        let stride = self.stride(axis);
        let base = start - (start / stride % self.order) * stride;
        (0..self.order).map(move |t| base + t * stride)
    }

    /// The square obtained by fixing every axis but the first two.
    pub fn slice2(&self, fixed: &[usize]) -> LatinSquare {
        let n = self.order;
        let mut coords = vec![0; self.dim];
        coords[2..].copy_from_slice(fixed);
        let mut cells = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                coords[0] = r;
                coords[1] = c;
                cells.push(self.get(&coords));
            }
        }
        LatinSquare::from_cells_trusted(n, cells)
    }

    /// Dimension boosting: `H'[x_1..x_d'] = H[x_1..x_d] + sum_{i>d} x_i`
    /// modulo `n`, with the added coordinates read on one-based labels.
    pub fn boost(&self, new_dim: usize) -> Result<Self> {
        if new_dim < self.dim {
            return Err(Error::BadDim { from: self.dim, to: new_dim });
        }
        let n = self.order;
        let extra = new_dim - self.dim;
        let tail = n.checked_pow(extra as u32).ok_or(Error::OrderTooLarge {
            order: n,
            max: usize::MAX,
        })?;
        let mut data = Vec::with_capacity(self.data.len() * tail);
        for &v in &self.data {
            for t in 0..tail {
                // sum of the trailing one-based coordinates of t
                let mut rest = t;
                let mut sum = 0usize;
                for _ in 0..extra {
                    sum += rest % n + 1;
                    rest /= n;
                }
                data.push(((v as usize + sum) % n) as u32);
            }
        }
        Ok(Self { order: n, dim: new_dim, data })
    }
}
