//! `Σ_{g ∈ Γ_Σ} Π_F Td_y(a_F(g), ∂/∂h_F)` applied to the symbolic integral.
//!
//! At `h = 0` a monomial `c t^j h^α` contributes `c t^j Π_F α_F! c(a_F, α_F, y)`.
//! Expanding the `-y` in `c(a, 1, y)` over subsets of the facets with
//! `α_F = 1`, every contribution lies in the span of
//! `t^j (-y)^s (y+1)^{N-j-s}` with `N = n + deg φ`, so only the scalar
//! coefficient of each basis element is accumulated.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::cyclo::CycloNumber;
use crate::algebra::poly::{var_names, MultiPoly};
use crate::algebra::rational::{factorial, Scalar};
use crate::error::{Error, Result};
use crate::gfun::build_gfun;
use crate::polytope::Polytope;
use crate::wsum::WeightPoly;

use super::coeffs::{todd_coeffs, ToddCoeffs};
use super::fan::{gamma_set, normal_fan, GammaSet};
use super::integral::{symbolic_integral, SymbolicIntegral};

pub type Poly = MultiPoly<Scalar>;

fn zero() -> CycloNumber {
    CycloNumber::rational(Scalar::zero())
}

fn one() -> CycloNumber {
    CycloNumber::rational(Scalar::one())
}

/// Todd series for every distinct `a_F(g)`, keyed by `ξ_F(g)`.
fn series_table(gamma: &GammaSet, order: usize) -> Result<HashMap<Scalar, ToddCoeffs>> {
    let mut table = HashMap::new();
    for g in &gamma.points {
        for (xi, a) in g.xi.iter().zip(&g.a) {
            if !table.contains_key(xi) {
                table.insert(xi.clone(), todd_coeffs(a, order)?);
            }
        }
    }
    Ok(table)
}

/// Coefficients `C[j][s]` of `t^j (-y)^s (y+1)^{N-j-s}`.
fn accumulate(
    integral: &SymbolicIntegral,
    gamma: &GammaSet,
    table: &HashMap<Scalar, ToddCoeffs>,
    big_n: usize,
) -> Result<Vec<Vec<CycloNumber>>> {
    let terms: Vec<(&Vec<u32>, &Scalar)> = integral.poly.terms().collect();
    let partial: Vec<Vec<Vec<CycloNumber>>> = terms
        .par_iter()
        .map(|&(e, c)| {
            let j = e[0] as usize;
            let alpha = &e[1..];
            let a_total: usize = alpha.iter().map(|&k| k as usize).sum();
            if j + a_total != big_n {
                return Err(Error::Invariant(format!(
                    "integral term of degree {} in a degree {big_n} integral",
                    j + a_total
                )));
            }
            let weight: num_bigint::BigInt = alpha.iter().map(|&k| factorial(k)).product();
            let scale = c * Scalar::from_integer(weight);
            let mut out = vec![vec![zero(); big_n + 1]; big_n + 1];
            for g in &gamma.points {
                let mut base = one();
                // Π_F (b_1(a_F) + z) over facets with α_F = 1, coefficients by power of z
                let mut ones = vec![one()];
                for (f, &k) in alpha.iter().enumerate() {
                    let series = &table[&g.xi[f]];
                    if k == 1 {
                        let b1 = series.b(1);
                        let mut next = vec![zero(); ones.len() + 1];
                        for (s, v) in ones.iter().enumerate() {
                            next[s] = next[s].add(&v.mul(b1));
                            next[s + 1] = next[s + 1].add(v);
                        }
                        ones = next;
                    } else {
                        let b = series.b(k as usize);
                        if b.is_zero() {
                            base = zero();
                            break;
                        }
                        base = base.mul(b);
                    }
                }
                if base.is_zero() {
                    continue;
                }
                for (s, v) in ones.iter().enumerate() {
                    if !v.is_zero() {
                        out[j][s] = out[j][s].add(&base.mul(v).scale(&scale));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut total = vec![vec![zero(); big_n + 1]; big_n + 1];
    for part in partial {
        for (row, prow) in total.iter_mut().zip(part) {
            for (x, p) in row.iter_mut().zip(prow) {
                if !p.is_zero() {
                    *x = x.add(&p);
                }
            }
        }
    }
    Ok(total)
}

/// The Todd-y operator of `P` applied to `∫ φ` over the deformed dilate, at
/// `h = 0` and `t = q(y+1)`. Errors if a nonrational coefficient survives.
pub fn apply_todd(p: &Polytope, phi: &WeightPoly) -> Result<Poly> {
    let fan = normal_fan(p)?;
    let gamma = gamma_set(&fan)?;
    let integral = symbolic_integral(p, phi)?;
    apply_todd_to(&integral, &gamma, p.dim() + phi.degree() as usize)
}

pub fn apply_todd_to(integral: &SymbolicIntegral, gamma: &GammaSet, big_n: usize) -> Result<Poly> {
    let table = series_table(gamma, big_n)?;
    let coeffs = accumulate(integral, gamma, &table, big_n)?;
    let qy = var_names(["q", "y"]);
    let neg_y = MultiPoly::monomial(qy.clone(), vec![0, 1], -Scalar::one());
    let y1 = MultiPoly::from_terms(
        qy.clone(),
        [(vec![0, 1], Scalar::one()), (vec![0, 0], Scalar::one())],
    );
    let mut out = MultiPoly::zero(qy.clone());
    for (j, row) in coeffs.iter().enumerate() {
        for (s, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_rational().ok_or_else(|| {
                Error::Invariant(format!(
                    "coefficient of q^{j} (-y)^{s} (y+1)^{} is not rational: {c}",
                    big_n - s
                ))
            })?;
            let q = MultiPoly::monomial(qy.clone(), vec![j as u32, 0], c);
            out = &out + &(&(&q * &neg_y.pow(s as u32)) * &y1.pow((big_n - s) as u32));
        }
    }
    Ok(out)
}

/// Both sides of the Todd-operator formula: `(apply_todd, G_φ)`.
pub fn theorem2_sides(p: &Polytope, phi: &WeightPoly) -> Result<(Poly, Poly)> {
    let todd = apply_todd(p, phi)?;
    let g = build_gfun(p, phi)?;
    Ok((todd, g.poly))
}

pub fn verify_theorem2(p: &Polytope, phi: &WeightPoly) -> Result<bool> {
    let (a, b) = theorem2_sides(p, phi)?;
    Ok(a == b)
}
