//! Seeded random inputs for the property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{rat, Radical, Rat, Scalar};
use crate::spinor::Spinor;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `[-9, 9]`, denominator in `[1, 5]`.
pub fn rational(rng: &mut SampleRng) -> Rat {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn rationals(rng: &mut SampleRng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| rational(rng)).collect()
}

/// Random Gaussian rational, occasionally with a radical part.
pub fn scalar(rng: &mut SampleRng) -> Scalar {
    let mut s = Scalar::from_radical(Radical::One, rational(rng), rational(rng));
    if rng.gen_bool(0.25) {
        let radical = Radical::ALL[rng.gen_range(1..4)];
        s += &Scalar::from_radical(radical, rational(rng), rational(rng));
    }
    s
}

pub fn gaussian(rng: &mut SampleRng) -> Scalar {
    Scalar::from_radical(Radical::One, rational(rng), rational(rng))
}

/// Spinor of width `k` with up to `terms` random Gaussian coefficients.
pub fn spinor(rng: &mut SampleRng, k: u32, terms: usize) -> Spinor {
    let dim = 1u64 << k;
    let mut psi = Spinor::zero(k);
    for _ in 0..terms {
        psi.add_term(rng.gen_range(0..dim), gaussian(rng)).expect("index in range");
    }
    psi
}

/// A nonzero rational vector.
pub fn nonzero_vector(rng: &mut SampleRng, len: usize) -> Vec<Rat> {
    loop {
        let v = rationals(rng, len);
        if v.iter().any(|x| *x != rat(0, 1)) {
            return v;
        }
    }
}
