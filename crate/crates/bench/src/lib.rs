//! Fixtures for the benchmarks.

use lieyam_core::linalg::frac;
use lieyam_core::RatMatrix;

/// Deterministic `rows × cols` matrix with small rational entries.
pub fn dense_matrix(rows: usize, cols: usize, seed: u64) -> RatMatrix {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let entries = (0..rows * cols)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let x = (state >> 33) as i64;
            frac(x % 19 - 9, x % 4 + 1)
        })
        .collect();
    RatMatrix::from_entries(rows, cols, entries).expect("sized entries")
}

/// Rank-deficient square matrix: a product through an inner dimension `k`.
pub fn low_rank_matrix(n: usize, k: usize, seed: u64) -> RatMatrix {
    &dense_matrix(n, k, seed) * &dense_matrix(k, n, seed ^ 0xABCD)
}
