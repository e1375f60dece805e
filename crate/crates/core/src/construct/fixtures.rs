//! Squares and cubes the constructions start from, entered with one-based
//! symbols.

use alloc::vec::Vec;

use crate::hypercube::Hypercube;
use crate::square::LatinSquare;

const E: [[u32; 8]; 8] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [2, 3, 5, 7, 8, 1, 6, 4],
    [3, 1, 8, 5, 6, 4, 2, 7],
    [4, 7, 1, 8, 3, 2, 5, 6],
    [5, 6, 7, 1, 4, 3, 8, 2],
    [6, 4, 2, 3, 7, 8, 1, 5],
    [7, 8, 4, 6, 2, 5, 3, 1],
    [8, 5, 6, 2, 1, 7, 4, 3],
];

const A8: [[u32; 8]; 8] = [
    [4, 8, 6, 7, 5, 1, 3, 2],
    [8, 6, 4, 2, 7, 5, 1, 3],
    [1, 7, 5, 3, 4, 2, 6, 8],
    [5, 4, 3, 1, 2, 6, 8, 7],
    [3, 2, 1, 4, 6, 8, 7, 5],
    [2, 1, 7, 5, 8, 3, 4, 6],
    [6, 3, 2, 8, 1, 7, 5, 4],
    [7, 5, 8, 6, 3, 4, 2, 1],
];

const B8: [[u32; 8]; 8] = [
    [4, 1, 7, 2, 8, 6, 5, 3],
    [7, 3, 5, 8, 6, 1, 4, 2],
    [3, 5, 8, 4, 1, 7, 2, 6],
    [2, 7, 4, 6, 3, 8, 1, 5],
    [1, 8, 6, 5, 4, 2, 3, 7],
    [6, 4, 3, 7, 2, 5, 8, 1],
    [5, 2, 1, 3, 7, 4, 6, 8],
    [8, 6, 2, 1, 5, 3, 7, 4],
];

const A9: [[u32; 9]; 9] = [
    [2, 8, 6, 3, 1, 4, 5, 9, 7],
    [8, 6, 2, 9, 5, 1, 3, 7, 4],
    [3, 4, 7, 1, 2, 5, 6, 8, 9],
    [1, 3, 5, 2, 4, 9, 7, 6, 8],
    [9, 1, 8, 7, 3, 2, 4, 5, 6],
    [7, 2, 1, 6, 9, 3, 8, 4, 5],
    [4, 5, 9, 8, 7, 6, 1, 2, 3],
    [5, 7, 3, 4, 6, 8, 9, 1, 2],
    [6, 9, 4, 5, 8, 7, 2, 3, 1],
];

const B9: [[u32; 9]; 9] = [
    [2, 4, 3, 7, 8, 6, 9, 5, 1],
    [3, 7, 9, 5, 4, 8, 2, 1, 6],
    [4, 6, 1, 3, 9, 2, 5, 7, 8],
    [6, 2, 4, 9, 5, 1, 8, 3, 7],
    [7, 5, 6, 8, 1, 4, 3, 9, 2],
    [5, 9, 2, 1, 3, 7, 6, 8, 4],
    [1, 3, 8, 2, 6, 5, 7, 4, 9],
    [8, 1, 5, 6, 7, 9, 4, 2, 3],
    [9, 8, 7, 4, 2, 3, 1, 6, 5],
];

/// The order-3 square placed in the corner of the Kotzig–Turgeon squares.
const J: [[u32; 3]; 3] = [[3, 2, 1], [1, 3, 2], [2, 1, 3]];

/// The order-3 square inflated by the triple construction.
const Z: [[u32; 3]; 3] = [[1, 2, 3], [2, 3, 1], [3, 1, 2]];

/// Layers `H[., ., x]` of the order-4 N∞ cube.
const CUBE4: [[[u32; 4]; 4]; 4] = [
    [[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]],
    [[2, 1, 4, 3], [1, 4, 3, 2], [4, 3, 2, 1], [3, 2, 1, 4]],
    [[3, 4, 2, 1], [4, 2, 1, 3], [2, 1, 3, 4], [1, 3, 4, 2]],
    [[4, 3, 1, 2], [3, 1, 2, 4], [1, 2, 4, 3], [2, 4, 3, 1]],
];

/// Layers `H[., ., x]` of the order-6 N∞ cube.
const CUBE6: [[[u32; 6]; 6]; 6] = [
    [
        [1, 2, 3, 4, 5, 6],
        [2, 1, 4, 3, 6, 5],
        [3, 4, 6, 5, 1, 2],
        [4, 3, 5, 6, 2, 1],
        [5, 6, 1, 2, 4, 3],
        [6, 5, 2, 1, 3, 4],
    ],
    [
        [2, 1, 4, 3, 6, 5],
        [1, 3, 2, 6, 5, 4],
        [6, 2, 5, 4, 3, 1],
        [3, 4, 6, 5, 1, 2],
        [4, 5, 3, 1, 2, 6],
        [5, 6, 1, 2, 4, 3],
    ],
    [
        [3, 4, 5, 6, 1, 2],
        [4, 2, 6, 5, 3, 1],
        [5, 6, 3, 1, 2, 4],
        [6, 5, 1, 2, 4, 3],
        [1, 3, 2, 4, 6, 5],
        [2, 1, 4, 3, 5, 6],
    ],
    [
        [4, 3, 6, 5, 2, 1],
        [3, 5, 1, 2, 4, 6],
        [2, 1, 4, 6, 5, 3],
        [5, 6, 2, 1, 3, 4],
        [6, 4, 5, 3, 1, 2],
        [1, 2, 3, 4, 6, 5],
    ],
    [
        [5, 6, 1, 2, 3, 4],
        [6, 4, 5, 1, 2, 3],
        [1, 5, 2, 3, 4, 6],
        [2, 1, 3, 4, 6, 5],
        [3, 2, 4, 6, 5, 1],
        [4, 3, 6, 5, 1, 2],
    ],
    [
        [6, 5, 2, 1, 4, 3],
        [5, 6, 3, 4, 1, 2],
        [4, 3, 1, 2, 6, 5],
        [1, 2, 4, 3, 5, 6],
        [2, 1, 6, 5, 3, 4],
        [3, 4, 5, 6, 2, 1],
    ],
];

fn square<const N: usize>(rows: &[[u32; N]; N]) -> LatinSquare {
    LatinSquare::from_one_based_rows(rows).expect("fixture is Latin")
}

fn cube<const N: usize>(layers: &[[[u32; N]; N]; N]) -> Hypercube {
    let mut data = Vec::with_capacity(N * N * N);
    for i in 0..N {
        for j in 0..N {
            for layer in layers {
                data.push(layer[i][j] - 1);
            }
        }
    }
    Hypercube::from_data(N, 3, data).expect("fixture is a Latin cube")
}

/// The order-8 N∞ square used by the triple construction and the order-72
/// base case.
pub fn e() -> LatinSquare {
    square(&E)
}

pub fn a8() -> LatinSquare {
    square(&A8)
}

pub fn b8() -> LatinSquare {
    square(&B8)
}

pub fn a9() -> LatinSquare {
    square(&A9)
}

pub fn b9() -> LatinSquare {
    square(&B9)
}

pub fn j() -> LatinSquare {
    square(&J)
}

pub fn z() -> LatinSquare {
    square(&Z)
}

pub fn cube4() -> Hypercube {
    cube(&CUBE4)
}

pub fn cube6() -> Hypercube {
    cube(&CUBE6)
}
