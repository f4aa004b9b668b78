//! Coefficients of the Todd-y operator.
//!
//! `Td_y(a, ∂) = (y+1)∂ / (1 - a e^{-∂(y+1)}) - y∂ = Σ_k c(a, k, y) ∂^k`.
//! Writing `u = ∂(y+1)` and `u / (1 - a e^{-u}) = Σ_k b_k(a) u^k` gives
//! `c(a, k, y) = b_k(a) (y+1)^k`, except `c(a, 1, y) = b_1(a)(y+1) - y`.

use num_traits::{One, Zero};

use crate::algebra::bernoulli::BernoulliTable;
use crate::algebra::cyclo::CycloNumber;
use crate::algebra::poly::MultiPoly;
use crate::algebra::rational::{factorial, Scalar};
use crate::error::{Error, Result};

pub const Y: &str = "y";

/// How the series `b_k(a)` is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// Bernoulli numbers when `a = 1`, series inversion otherwise.
    #[default]
    Auto,
    /// `b_k = B_k / k!`; only valid for `a = 1`.
    Bernoulli,
    /// Invert the truncated series `1 - a e^{-u}` over the cyclotomic field.
    Inversion,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ToddCoeffs {
    pub a: CycloNumber,
    /// `b_0 .. b_K`.
    pub series: Vec<CycloNumber>,
}

fn rat(s: Scalar) -> CycloNumber {
    CycloNumber::rational(s)
}

fn unit() -> CycloNumber {
    rat(Scalar::one())
}

fn inverse_series(s: &[CycloNumber], len: usize) -> Result<Vec<CycloNumber>> {
    let inv0 = s[0].inverse()?;
    let mut r = vec![inv0.clone()];
    for m in 1..len {
        let mut acc = CycloNumber::rational(Scalar::zero());
        for i in 1..=m.min(s.len() - 1) {
            acc = acc.add(&s[i].mul(&r[m - i]));
        }
        r.push(acc.mul(&inv0).neg());
    }
    Ok(r)
}

fn is_root_of_unity(a: &CycloNumber) -> bool {
    !a.is_zero() && a.pow(2 * a.order() as u32).is_one()
}

pub fn todd_coeffs(a: &CycloNumber, k_max: usize) -> Result<ToddCoeffs> {
    todd_coeffs_with(a, k_max, Route::Auto)
}

pub fn todd_coeffs_with(a: &CycloNumber, k_max: usize, route: Route) -> Result<ToddCoeffs> {
    if !is_root_of_unity(a) {
        return Err(Error::InvalidArgument(format!(
            "todd coefficient base {a} is not a root of unity"
        )));
    }
    let route = match route {
        Route::Auto if a.is_one() => Route::Bernoulli,
        Route::Auto => Route::Inversion,
        r => r,
    };
    let len = k_max + 1;
    let series = match route {
        Route::Bernoulli => {
            if !a.is_one() {
                return Err(Error::InvalidArgument(
                    "the Bernoulli route needs a = 1".into(),
                ));
            }
            let table = BernoulliTable::new(k_max);
            (0..len)
                .map(|k| rat(table.get(k) / Scalar::from_integer(factorial(k as u32))))
                .collect()
        }
        Route::Inversion => {
            // e^{-u} = Σ (-1)^k u^k / k!
            let exp_neg = |k: usize| {
                let s = Scalar::one() / Scalar::from_integer(factorial(k as u32));
                if k % 2 == 1 {
                    -s
                } else {
                    s
                }
            };
            if a.is_one() {
                // (1 - e^{-u}) / u = Σ_k -[u^{k+1}] e^{-u}
                let s: Vec<CycloNumber> = (0..len).map(|k| rat(-exp_neg(k + 1))).collect();
                inverse_series(&s, len)?
            } else {
                let mut s = vec![rat(Scalar::one()).sub(a)];
                s.extend((1..len).map(|k| a.scale(&-exp_neg(k))));
                let inv = inverse_series(&s, len)?;
                let mut b = vec![rat(Scalar::zero())];
                b.extend(inv.into_iter().take(k_max));
                b
            }
        }
        Route::Auto => unreachable!(),
    };
    Ok(ToddCoeffs {
        a: a.clone(),
        series,
    })
}

impl ToddCoeffs {
    pub fn order(&self) -> usize {
        self.series.len() - 1
    }

    pub fn b(&self, k: usize) -> &CycloNumber {
        &self.series[k]
    }

    /// `c(a, k, y)` as a polynomial in `y`.
    pub fn c(&self, k: usize) -> MultiPoly<CycloNumber> {
        let y = vec![Y.to_string()];
        let y_plus_one = MultiPoly::from_terms(
            y.clone(),
            [(vec![1], unit()), (vec![0], unit())],
        );
        let mut c = y_plus_one.pow(k as u32).scale(&self.series[k]);
        if k == 1 {
            c = &c - &MultiPoly::var(y, 0);
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclo::cyclo_root_of_unity;
    use crate::algebra::rational::{frac, int};

    #[test]
    fn routes_agree_at_one() {
        let one = unit();
        let b = todd_coeffs_with(&one, 10, Route::Bernoulli).unwrap();
        let i = todd_coeffs_with(&one, 10, Route::Inversion).unwrap();
        assert_eq!(b, i);
        assert_eq!(b.b(1), &rat(frac(1, 2)));
        assert_eq!(b.b(2), &rat(frac(1, 12)));
    }

    #[test]
    fn minus_one() {
        let a = cyclo_root_of_unity(1, 2).unwrap();
        let t = todd_coeffs(&a, 5).unwrap();
        assert!(t.b(0).is_zero());
        assert_eq!(t.b(1), &rat(frac(1, 2)));
        assert!(t.b(3).is_zero());
        // c(-1, 1, y) = (1 - y) / 2
        let c1 = t.c(1);
        assert_eq!(c1.coeff(&[0]), rat(frac(1, 2)));
        assert_eq!(c1.coeff(&[1]), rat(frac(-1, 2)));
    }

    #[test]
    fn rejects_non_roots() {
        let zero = CycloNumber::rational(int(0));
        assert!(matches!(todd_coeffs(&zero, 3), Err(Error::InvalidArgument(_))));
        let two = CycloNumber::rational(int(2));
        assert!(todd_coeffs(&two, 3).is_err());
        let i = cyclo_root_of_unity(1, 4).unwrap();
        assert!(todd_coeffs_with(&i, 3, Route::Bernoulli).is_err());
    }

    #[test]
    fn first_coefficient_at_nontrivial_roots() {
        // b_1 = 1 / (1 - a), so c(a, 1, y) = (1 + a y) / (1 - a)
        for (num, den) in [(1, 3), (2, 3), (1, 4), (3, 4), (1, 5)] {
            let a = cyclo_root_of_unity(num, den).unwrap();
            let t = todd_coeffs(&a, 2).unwrap();
            let inv = unit().sub(&a).inverse().unwrap();
            assert_eq!(t.c(1).coeff(&[0]), inv);
            assert_eq!(t.c(1).coeff(&[1]), a.mul(&inv));
        }
    }
}
