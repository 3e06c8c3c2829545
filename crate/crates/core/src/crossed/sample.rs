//! Random elements for sampled checks.

use rand::Rng;

use super::dim2::{Dim2Elem, Factor};
use crate::words::{Gen, Letter, Word};

/// Reduced word from at most `maxlen` random letters over `gens`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, gens: &[Gen], maxlen: usize) -> Word {
    if gens.is_empty() {
        return Word::identity();
    }
    let len = rng.gen_range(0..=maxlen);
    Word::from_letters((0..len).map(|_| {
        let g = gens[rng.gen_range(0..gens.len())].clone();
        Letter::new(g, if rng.gen_bool(0.5) { 1 } else { -1 })
    }))
}

/// Product of `1..=max_factors` random factors over `x2`, operators over `x1`
/// of length at most `maxlen`.
pub fn random_dim2<R: Rng + ?Sized>(
    rng: &mut R,
    x1: &[Gen],
    x2: &[Gen],
    max_factors: usize,
    maxlen: usize,
) -> Dim2Elem {
    if x2.is_empty() {
        return Dim2Elem::identity();
    }
    let n = rng.gen_range(1..=max_factors.max(1));
    Dim2Elem::from_factors(
        (0..n)
            .map(|_| {
                let g = x2[rng.gen_range(0..x2.len())].clone();
                let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                Factor::new(g, e, random_word(rng, x1, maxlen))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_samples_repeat() {
        let gens = [Gen::new("x"), Gen::new("y")];
        let a: Vec<Word> = {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            (0..20).map(|_| random_word(&mut rng, &gens, 6)).collect()
        };
        let b: Vec<Word> = {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            (0..20).map(|_| random_word(&mut rng, &gens, 6)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|w| w.len() <= 6));
    }
}
