//! Seeded random inputs for property suites.

use rand::Rng;

use crate::k0::LaurentPolynomial;
use crate::motive::GradedTateObject;
use crate::partition::{partitions_of, Partition};

/// An object with total dimension in `0..=max_dim`, degrees in
/// `-2..=3` and weights in `-2..=2`.
pub fn random_object<R: Rng>(rng: &mut R, max_dim: usize) -> GradedTateObject {
    let dim = rng.gen_range(0..=max_dim);
    let mut x = GradedTateObject::zero();
    for _ in 0..dim {
        x.add_generator(rng.gen_range(-2..=3), rng.gen_range(-2..=2), 1);
    }
    x
}

/// A partition of size `1..=max_size`, uniform over sizes then shapes.
pub fn random_partition<R: Rng>(rng: &mut R, max_size: usize) -> Partition {
    let n = rng.gen_range(1..=max_size.max(1));
    let all = partitions_of(n);
    all[rng.gen_range(0..all.len())].clone()
}

/// Up to four terms with exponents in `-3..=3` and coefficients in `-3..=3`.
pub fn random_laurent<R: Rng>(rng: &mut R) -> LaurentPolynomial {
    let terms = rng.gen_range(0..=4);
    LaurentPolynomial::from_terms((0..terms).map(|_| (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64))))
}
