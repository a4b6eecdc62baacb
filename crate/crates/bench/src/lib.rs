//! Inputs shared by the benchmarks in `benches/`.

use j2coh_core::{Matrix, F3};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A uniformly random `rows × cols` matrix from a fixed seed.
pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, F3::new(rng.gen_range(0..3)));
        }
    }
    m
}
