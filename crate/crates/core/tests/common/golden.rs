//! Worked examples with their expected step-by-step output.

pub const EIGHT: [[i64; 4]; 8] = [
    [0, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 1, 2, 3],
    [1, 0, 0, 0],
    [1, 0, 0, 1],
    [1, 1, 2, 3],
    [0, 1, 2, 4],
    [1, 1, 2, 4],
];

pub const EIGHT_CODES: [&str; 8] = [
    "[[[[[1]]]]]",
    "[[[[[1]]]],[[[[2]]]]]",
    "[[[[[1]],[[3]]]],[[[[2]]]]]",
    "[[[[[1],[4]],[[3]]]],[[[[2]]]]]",
    "[[[[[1],[4]],[[3]]]],[[[[2],[5]]]]]",
    "[[[[[1],[4]],[[3],[6]]]],[[[[2],[5]]]]]",
    "[[[[[1],[4]],[[3],[6]]]],[[[[2],[5]],[[7]]]]]",
    "[[[[[1],[4]],[[3],[6]]]],[[[[2],[5]],[[7],[8]]]]]",
];

/// `(s, l)` per step, `l` 1-based.
pub const EIGHT_PAIRS: [&[(usize, usize)]; 8] = [
    &[],
    &[(4, 1)],
    &[(2, 1)],
    &[(1, 1)],
    &[(4, 4), (1, 2)],
    &[(2, 4), (1, 3)],
    &[(4, 3), (2, 2)],
    &[(4, 6), (2, 5), (1, 7)],
];

/// Rows of M, columns `x4..x1`.
pub const EIGHT_M: [[u32; 4]; 8] = [
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 0, 0, 1],
    [0, 0, 1, 1],
    [1, 0, 1, 0],
    [1, 0, 1, 1],
];

pub const EIGHT_ESCALIER: [&str; 8] = ["1", "x1", "x2", "x1*x2", "x4", "x1*x4", "x2*x4", "x1*x2*x4"];

pub const GRS: [[i64; 4]; 13] = [
    [1, 1, 2, 3],
    [1, 1, 2, 4],
    [1, 1, 2, 5],
    [1, 2, 1, 1],
    [1, 2, 1, 2],
    [1, 2, 2, 1],
    [1, 2, 2, 2],
    [3, 1, 1, 2],
    [3, 1, 2, 2],
    [3, 1, 2, 3],
    [3, 3, 1, 1],
    [3, 4, 1, 1],
    [3, 4, 1, 2],
];

pub const GRS_PAIRS: [&[(usize, usize)]; 13] = [
    &[],
    &[(4, 1)],
    &[(4, 2)],
    &[(2, 1)],
    &[(4, 4), (2, 2)],
    &[(3, 4)],
    &[(4, 6), (3, 5)],
    &[(1, 1)],
    &[(3, 8), (1, 6)],
    &[(4, 9), (1, 2)],
    &[(2, 8), (1, 4)],
    &[(2, 11)],
    &[(4, 12), (2, 10), (1, 5)],
];

pub const GRS_M: [[u32; 4]; 13] = [
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [2, 0, 0, 0],
    [0, 0, 1, 0],
    [1, 0, 1, 0],
    [0, 1, 0, 0],
    [1, 1, 0, 0],
    [0, 0, 0, 1],
    [0, 1, 0, 1],
    [1, 0, 0, 1],
    [0, 0, 1, 1],
    [0, 0, 2, 0],
    [1, 0, 1, 1],
];

pub const GRS_CODES: [&str; 13] = [
    "[[[[[1]]]]]",
    "[[[[[1]]]],[[[[2]]]]]",
    "[[[[[1]]]],[[[[2]]]],[[[[3]]]]]",
    "[[[[[1]],[[4]]]],[[[[2]]]],[[[[3]]]]]",
    "[[[[[1]],[[4]]]],[[[[2]],[[5]]]],[[[[3]]]]]",
    "[[[[[1]],[[4]]],[[[6]]]],[[[[2]],[[5]]]],[[[[3]]]]]",
    "[[[[[1]],[[4]]],[[[6]]]],[[[[2]],[[5]]],[[[7]]]],[[[[3]]]]]",
    "[[[[[1],[8]],[[4]]],[[[6]]]],[[[[2]],[[5]]],[[[7]]]],[[[[3]]]]]",
    "[[[[[1],[8]],[[4]]],[[[6],[9]]]],[[[[2]],[[5]]],[[[7]]]],[[[[3]]]]]",
    "[[[[[1],[8]],[[4]]],[[[6],[9]]]],[[[[2],[10]],[[5]]],[[[7]]]],[[[[3]]]]]",
    "[[[[[1],[8]],[[4],[11]]],[[[6],[9]]]],[[[[2],[10]],[[5]]],[[[7]]]],[[[[3]]]]]",
    "[[[[[1],[8]],[[4],[11]],[[12]]],[[[6],[9]]]],[[[[2],[10]],[[5]]],[[[7]]]],[[[[3]]]]]",
    "[[[[[1],[8]],[[4],[11]],[[12]]],[[[6],[9]]]],[[[[2],[10]],[[5],[13]]],[[[7]]]],[[[[3]]]]]",
];

pub const THREE: [[i64; 2]; 3] = [[1, 0], [0, 1], [0, 2]];

/// Separators of `THREE`, expanded.
pub const THREE_SEPARATORS: [&str; 3] = ["x1", "x1*x2 - x2 - 2*x1 + 2", "-x1*x2 + x2 + x1 - 1"];

pub const THREE_B: [[i64; 3]; 3] = [[1, 1, 1], [1, 0, 0], [0, 1, 2]];
pub const THREE_C: [[i64; 3]; 3] = [[0, 1, 0], [2, -2, -1], [-1, 1, 1]];
pub const THREE_D1: [[i64; 3]; 3] = [[1, 0, 0], [1, 0, 0], [0, 0, 0]];
pub const THREE_D2: [[i64; 3]; 3] = [[0, 1, 2], [0, 0, 0], [0, 1, 4]];
pub const THREE_AX: [[i64; 3]; 3] = [[0, 1, 0], [0, 1, 0], [0, 0, 0]];
