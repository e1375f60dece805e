//! Searched squares of orders 10, 12 and 18, stored so base recipes do not
//! rerun the search.

use crate::error::{Error, Result};
use crate::square::LatinSquare;

/// Annealing budget used by [`super::build_square`] and for the cached seeds.
pub const SEARCH_BUDGET: u64 = 2_000_000;

/// `(order, seed)` pairs behind the stored squares: each is
/// `search_ninf(order, seed, SEARCH_BUDGET)`.
pub const SEARCH_SEEDS: [(usize, u64); 3] = [(10, 0), (12, 0), (18, 0)];

const L10: [[u32; 10]; 10] = [
    [4, 9, 7, 2, 3, 5, 10, 1, 8, 6],
    [8, 6, 10, 4, 1, 7, 5, 9, 3, 2],
    [5, 1, 8, 6, 10, 9, 7, 2, 4, 3],
    [1, 2, 4, 3, 5, 6, 8, 7, 9, 10],
    [10, 3, 6, 7, 2, 8, 9, 4, 1, 5],
    [3, 7, 1, 9, 6, 4, 2, 5, 10, 8],
    [9, 10, 2, 8, 4, 1, 6, 3, 5, 7],
    [2, 4, 3, 5, 8, 10, 1, 6, 7, 9],
    [7, 8, 5, 1, 9, 2, 3, 10, 6, 4],
    [6, 5, 9, 10, 7, 3, 4, 8, 2, 1],
];

const L12: [[u32; 12]; 12] = [
    [12, 5, 1, 4, 2, 8, 10, 9, 7, 6, 3, 11],
    [8, 10, 9, 2, 1, 5, 7, 3, 11, 12, 6, 4],
    [2, 6, 5, 9, 10, 7, 1, 11, 4, 3, 8, 12],
    [3, 12, 10, 11, 4, 1, 6, 2, 8, 7, 5, 9],
    [6, 4, 8, 1, 3, 10, 12, 7, 5, 11, 9, 2],
    [10, 7, 6, 8, 12, 2, 11, 5, 1, 9, 4, 3],
    [9, 1, 7, 12, 6, 3, 2, 4, 10, 5, 11, 8],
    [4, 9, 11, 5, 7, 12, 8, 10, 3, 1, 2, 6],
    [7, 11, 2, 3, 9, 4, 5, 12, 6, 8, 10, 1],
    [5, 3, 4, 6, 8, 11, 9, 1, 12, 2, 7, 10],
    [1, 2, 3, 7, 11, 6, 4, 8, 9, 10, 12, 5],
    [11, 8, 12, 10, 5, 9, 3, 6, 2, 4, 1, 7],
];

const L18: [[u32; 18]; 18] = [
    [12, 15, 6, 14, 3, 13, 2, 1, 9, 11, 16, 4, 10, 5, 8, 17, 7, 18],
    [2, 9, 16, 10, 7, 6, 15, 11, 8, 13, 18, 17, 3, 12, 4, 14, 1, 5],
    [10, 6, 5, 18, 8, 2, 16, 4, 12, 1, 9, 14, 17, 13, 15, 7, 11, 3],
    [17, 11, 2, 9, 10, 18, 13, 14, 7, 6, 15, 1, 4, 3, 12, 5, 16, 8],
    [14, 2, 4, 1, 5, 16, 3, 18, 11, 12, 8, 7, 6, 17, 9, 15, 13, 10],
    [15, 16, 18, 3, 6, 14, 5, 8, 10, 7, 2, 13, 1, 11, 17, 12, 4, 9],
    [18, 7, 9, 16, 11, 12, 17, 3, 15, 10, 13, 5, 14, 8, 1, 4, 2, 6],
    [7, 8, 3, 4, 17, 15, 9, 13, 16, 14, 10, 2, 12, 18, 5, 11, 6, 1],
    [5, 18, 8, 11, 9, 3, 12, 15, 13, 2, 1, 16, 7, 4, 10, 6, 14, 17],
    [9, 3, 14, 12, 13, 1, 4, 6, 5, 8, 7, 11, 15, 16, 18, 10, 17, 2],
    [13, 10, 15, 8, 2, 17, 1, 5, 18, 4, 14, 12, 11, 9, 6, 16, 3, 7],
    [6, 4, 13, 5, 16, 9, 11, 12, 14, 3, 17, 10, 8, 2, 7, 1, 18, 15],
    [16, 1, 11, 7, 12, 4, 18, 17, 3, 15, 5, 6, 13, 10, 2, 9, 8, 14],
    [11, 5, 12, 17, 1, 10, 7, 9, 4, 16, 3, 18, 2, 6, 14, 8, 15, 13],
    [8, 13, 10, 6, 18, 11, 14, 7, 1, 17, 4, 3, 5, 15, 16, 2, 9, 12],
    [4, 12, 7, 15, 14, 8, 6, 2, 17, 5, 11, 9, 18, 1, 3, 13, 10, 16],
    [3, 17, 1, 2, 4, 7, 8, 10, 6, 9, 12, 15, 16, 14, 13, 18, 5, 11],
    [1, 14, 17, 13, 15, 5, 10, 16, 2, 18, 6, 8, 9, 7, 11, 3, 12, 4],
];

/// The stored search result of order `n`, one of 10, 12 or 18.
pub fn searched_square(n: usize) -> Result<LatinSquare> {
    match n {
        10 => LatinSquare::from_one_based_rows(&L10),
        12 => LatinSquare::from_one_based_rows(&L12),
        18 => LatinSquare::from_one_based_rows(&L18),
        _ => Err(Error::BadOrder(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::search_ninf;
    use crate::verify::is_ninf;

    #[test]
    fn stored_squares_match_their_seeds() {
        for (n, seed) in SEARCH_SEEDS {
            let l = searched_square(n).unwrap();
            assert!(is_ninf(&l));
            assert_eq!(search_ninf(n, seed, SEARCH_BUDGET).unwrap(), l);
        }
    }
}
