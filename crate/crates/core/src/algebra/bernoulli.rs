use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{binomial, frac, Scalar};

/// Bernoulli numbers B_0..=B_K with the convention B_1 = +1/2.
#[derive(Clone, Debug, PartialEq)]
pub struct BernoulliTable {
    values: Vec<Scalar>,
}

impl BernoulliTable {
    pub fn new(max: usize) -> Self {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1 yields the B_1 = -1/2 sequence
        let mut values: Vec<Scalar> = Vec::with_capacity(max + 1);
        values.push(Scalar::one());
        for m in 1..=max {
            let mut acc = Scalar::zero();
            for (j, b) in values.iter().enumerate() {
                acc += Scalar::from_integer(binomial(m as u64 + 1, j as u64)) * b;
            }
            values.push(-acc / Scalar::from_integer(BigInt::from(m + 1)));
        }
        if max >= 1 {
            values[1] = frac(1, 2);
        }
        BernoulliTable { values }
    }

    pub fn get(&self, k: usize) -> &Scalar {
        &self.values[k]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

pub fn bernoulli(k: usize) -> Scalar {
    BernoulliTable::new(k).values[k].clone()
}
