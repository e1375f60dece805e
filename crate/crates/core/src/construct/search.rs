//! Seeded stochastic search for N∞ squares.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cycle::{row_cycle, row_cycle_len, switch_row_cycle};
use crate::error::{Error, Result};
use crate::square::LatinSquare;
use crate::verify::{count_intercalates, is_ninf, minimal_subsquares};

/// Swaps the roles of symbols and rows: `out[s, c] = r` where `L[r, c] = s`.
fn symbol_conjugate(l: &LatinSquare) -> LatinSquare {
    let n = l.order();
    let mut cells = alloc::vec![0; n * n];
    for e in l.entries() {
        cells[e.symbol as usize * n + e.col] = e.row as u32;
    }
    LatinSquare::from_cells_trusted(n, cells)
}

/// One random row, column or symbol cycle switch, skipping cycles that span
/// whole lines (those only permute lines). `None` when the drawn cycle was
/// skipped.
fn random_switch<R: Rng>(l: &LatinSquare, rng: &mut R) -> Option<LatinSquare> {
    let n = l.order();
    if n < 3 {
        return None;
    }
    let view = rng.gen_range(0..3);
    let base = match view {
        0 => l.clone(),
        1 => l.transpose(),
        _ => symbol_conjugate(l),
    };
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    let c = rng.gen_range(0..n);
    if row_cycle_len(&base, i, j, c) == n {
        return None;
    }
    let rho = row_cycle(&base, i, j, c).ok()?;
    let out = switch_row_cycle(&base, &rho).ok()?;
    Some(match view {
        0 => out,
        1 => out.transpose(),
        _ => symbol_conjugate(&out),
    })
}

fn random_isotope<R: Rng>(l: &LatinSquare, rng: &mut R) -> LatinSquare {
    let n = l.order();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut syms: Vec<u32> = (0..n as u32).collect();
    rows.shuffle(rng);
    cols.shuffle(rng);
    syms.shuffle(rng);
    let mut cells = alloc::vec![0; n * n];
    for e in l.entries() {
        cells[rows[e.row] * n + cols[e.col]] = syms[e.symbol as usize];
    }
    LatinSquare::from_cells_trusted(n, cells)
}

/// A Latin square drawn by a random walk of cycle switches from a random
/// isotope of the cyclic square. Not uniform, but reaches every main class
/// the switches connect.
pub fn random_square<R: Rng>(n: usize, rng: &mut R) -> LatinSquare {
    let mut l = random_isotope(&LatinSquare::cyclic(n), rng);
    for _ in 0..4 * n * n {
        if let Some(next) = random_switch(&l, rng) {
            l = next;
        }
    }
    random_isotope(&l, rng)
}

/// The number of intercalates, or for an N2 square the number of minimal
/// subsquares. Zero exactly on N∞ squares.
pub fn subsquare_cost(l: &LatinSquare) -> u64 {
    match count_intercalates(l) {
        0 => minimal_subsquares(l).len() as u64,
        k => k as u64,
    }
}

/// Anneals over random cycle switches, minimising [`subsquare_cost`], for
/// at most `budget` proposals.
pub fn search_ninf(n: usize, seed: u64, budget: u64) -> Result<LatinSquare> {
    if n <= 3 {
        return Ok(LatinSquare::cyclic(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = random_square(n, &mut rng);
    let mut cost = subsquare_cost(&cur);
    let (t0, t1) = (1.0f64, 0.02f64);
    // restart the temperature schedule every `epoch` proposals
    let epoch = budget.clamp(1, 200_000);
    for step in 0..budget {
        if cost == 0 {
            break;
        }
        let frac = (step % epoch) as f64 / epoch as f64;
        let temp = t0 * libm::pow(t1 / t0, frac);
        let Some(next) = random_switch(&cur, &mut rng) else {
            continue;
        };
        let c = subsquare_cost(&next);
        let accept = c <= cost || rng.gen::<f64>() < libm::exp(-((c - cost) as f64) / temp);
        if accept {
            cur = next;
            cost = c;
        }
    }
    if cost == 0 && is_ninf(&cur) {
        Ok(cur)
    } else {
        Err(Error::BudgetExhausted(budget))
    }
}
