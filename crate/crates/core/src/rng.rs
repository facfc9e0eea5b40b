//! Seeded, splittable randomness for reproducible sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;
use crate::linalg::Matrix;

/// Bound on the absolute value of random integer entries.
pub const ENTRY_BOUND: i64 = 9;

/// Independent stream `stream` derived from a root seed.
pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_int_matrix<T: Scalar>(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix<T> {
    Matrix::from_fn(rows, cols, |_, _| T::from_i64(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)))
}

/// Random invertible integer matrix (rejection sampled).
pub fn random_invertible<T: Scalar>(rng: &mut impl Rng, n: usize) -> Matrix<T> {
    loop {
        let m = random_int_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}
