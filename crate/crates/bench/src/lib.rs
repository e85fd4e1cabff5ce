//! Input generators shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewalg::skewfield::ratio;
use skewalg::{Quaternion, Rational, SkewMatrix};

/// Seeded stream of quaternions with small rational components.
pub struct Inputs {
    rng: ChaCha8Rng,
}

impl Inputs {
    pub fn new(seed: u64) -> Self {
        Inputs {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn rational(&mut self) -> Rational {
        ratio(self.rng.gen_range(-9..=9), self.rng.gen_range(1..=9))
    }

    pub fn quaternion(&mut self) -> Quaternion {
        Quaternion::new(self.rational(), self.rational(), self.rational(), self.rational())
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> SkewMatrix<Quaternion> {
        SkewMatrix::from_fn(rows, cols, |_, _| self.quaternion())
    }
}
