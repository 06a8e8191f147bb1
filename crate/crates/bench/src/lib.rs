//! Shared inputs for the criterion benches.

/// `(m, c, n)` triples small enough for the exhaustive oracle.
pub const ORACLE_INSTANCES: [(usize, usize, usize); 6] =
    [(2, 2, 3), (2, 2, 4), (2, 2, 5), (2, 2, 7), (2, 3, 4), (3, 3, 4)];

/// A mid-sized construction target.
pub const LARGE_GRID: (usize, usize, usize) = (4, 6, 200);
