//! Small named graphs used throughout the tests and examples.

use crate::graph::Pseudograph;

/// Path `1 - 0 - 2` with loops at both ends. Characteristic polynomial
/// `x^3 - 2x^2 - x + 2`; without its loops it is `P3`, `x^3 - 2x`.
/// Same graph as the anti-circulant graph for `n = 3`.
pub fn looped_path() -> Pseudograph {
    Pseudograph::new(3, &[(0, 1), (0, 2)], &[1, 2]).expect("valid graph")
}

/// Two triangles `0-1-2` and `1-2-3` sharing the edge `1-2`, with a loop at
/// vertex 0. Its basic figures of orders 1 to 4 number 1, 5, 5 and 4.
pub fn looped_diamond() -> Pseudograph {
    Pseudograph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], &[0]).expect("valid graph")
}
