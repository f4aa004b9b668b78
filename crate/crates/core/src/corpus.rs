//! Seeded random lattice polytopes for property runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polytope::Polytope;

/// `count` full-dimensional polytopes, each the hull of `dim + 1 ..= dim + 4`
/// random points of `{0..=max_coord}^dim`. Deterministic in `seed`.
pub fn corpus(seed: u64, count: usize, dim: usize, max_coord: i64) -> Result<Vec<Polytope>> {
    if !(2..=3).contains(&dim) {
        return Err(Error::InvalidCorpus(format!("dimension {dim} not in 2..=3")));
    }
    if !(1..=5).contains(&max_coord) {
        return Err(Error::InvalidCorpus(format!("max_coord {max_coord} not in 1..=5")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 1000 * (count + 1) {
            return Err(Error::InvalidCorpus("too many degenerate draws".into()));
        }
        let k = rng.random_range(dim + 1..=dim + 4);
        let points: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..dim).map(|_| rng.random_range(0..=max_coord)).collect())
            .collect();
        if let Ok(p) = Polytope::new(&points) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = corpus(1, 10, 2, 3).unwrap();
        let b = corpus(1, 10, 2, 3).unwrap();
        assert_eq!(a.len(), 10);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.vertices(), y.vertices());
        }
        let c = corpus(2, 10, 2, 3).unwrap();
        assert!(a.iter().zip(&c).any(|(x, y)| x.vertices() != y.vertices()));
    }

    #[test]
    fn bounds() {
        assert!(corpus(0, 1, 4, 3).is_err());
        assert!(corpus(0, 1, 2, 6).is_err());
        assert!(corpus(0, 1, 3, 0).is_err());
        for p in corpus(5, 8, 3, 2).unwrap() {
            assert_eq!(p.dim(), 3);
            assert!(p.vertices().iter().flatten().all(|&x| (0..=2).contains(&x)));
        }
    }
}
