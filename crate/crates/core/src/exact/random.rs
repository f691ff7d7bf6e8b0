use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GaussRational, Rational};

/// The deterministic generator behind every random test point.
pub type SeedRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeedRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_fraction(rng: &mut SeedRng, height: u64) -> Rational {
    let h = height.max(1) as i64;
    let num = rng.gen_range(-h..=h);
    let den = rng.gen_range(1..=h);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A random Gaussian rational whose real and imaginary parts are fractions
/// with `|numerator| ≤ height` and `1 ≤ denominator ≤ height`.
///
/// Used as Schwartz–Zippel evaluation points: a nonzero polynomial of total
/// degree at most 12 vanishes at such a point with probability at most
/// `12/(2·height+1)²` per coordinate pool.
pub fn random_scalar(rng: &mut SeedRng, height: u64) -> GaussRational {
    let re = random_fraction(rng, height);
    let im = random_fraction(rng, height);
    GaussRational::new(re, im)
}

/// As [`random_scalar`] with zero imaginary part.
pub fn random_real_scalar(rng: &mut SeedRng, height: u64) -> GaussRational {
    GaussRational::real(random_fraction(rng, height))
}

/// A Gaussian integer with parts in `[-height, height]`; keeps coefficient
/// growth low in the heavier exact checks.
pub fn random_int_scalar(rng: &mut SeedRng, height: u64) -> GaussRational {
    let h = height.max(1) as i64;
    GaussRational::from_parts((rng.gen_range(-h..=h), 1), (rng.gen_range(-h..=h), 1))
}
