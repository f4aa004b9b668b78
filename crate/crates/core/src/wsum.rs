//! Weighted lattice-point sums over dilated faces.
//!
//! For a homogeneous weight `φ` of degree `d` and a face `F`,
//! `D_F(q) = Σ_{m ∈ qF ∩ Z^n} φ(m)` and `D°_F(q)` (relative interior) are
//! polynomials of degree at most `dim F + d`. They are recovered by exact
//! interpolation at `q = 0..=dim F + d` and checked at one further node.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::interp::interpolate;
use crate::algebra::poly::{var_names, MultiPoly};
use crate::algebra::rational::{int, Scalar};
use crate::error::{Error, Result};
use crate::polytope::{FaceId, Polytope};

pub const Q: &str = "q";

/// A nonzero homogeneous polynomial in `x1..xn`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightPoly {
    phi: MultiPoly,
    degree: u32,
}

impl WeightPoly {
    pub fn new(phi: MultiPoly) -> Result<WeightPoly> {
        let degree = phi.total_degree().ok_or(Error::ZeroWeight)?;
        if !phi.is_homogeneous_of(degree) {
            return Err(Error::NotHomogeneous);
        }
        Ok(WeightPoly { phi, degree })
    }

    pub fn variables(n: usize) -> Vec<String> {
        var_names((1..=n).map(|i| format!("x{i}")))
    }

    pub fn one(n: usize) -> WeightPoly {
        WeightPoly::new(MultiPoly::one(Self::variables(n))).expect("constant weight")
    }

    /// `c · x^exps`.
    pub fn monomial(exps: &[u32], c: Scalar) -> Result<WeightPoly> {
        WeightPoly::new(MultiPoly::monomial(
            Self::variables(exps.len()),
            exps.to_vec(),
            c,
        ))
    }

    /// Builds a weight from `(coefficient, exponents)` pairs in `n` variables.
    pub fn from_terms(n: usize, terms: Vec<(Vec<u32>, Scalar)>) -> Result<WeightPoly> {
        if let Some((e, _)) = terms.iter().find(|(e, _)| e.len() != n) {
            return Err(Error::WeightDimension {
                expected: n,
                got: e.len(),
            });
        }
        WeightPoly::new(MultiPoly::from_terms(Self::variables(n), terms))
    }

    pub fn phi(&self) -> &MultiPoly {
        &self.phi
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.phi.vars().len()
    }

    /// φ(0): the constant term.
    pub fn at_origin(&self) -> Scalar {
        if self.degree == 0 {
            self.phi.coeff(&vec![0; self.num_vars()])
        } else {
            Scalar::zero()
        }
    }

    pub fn eval(&self, m: &[i64]) -> Scalar {
        let vals: Vec<Scalar> = m.iter().map(|&v| int(v)).collect();
        self.phi.eval(&vals)
    }

    fn check_dim(&self, p: &Polytope) -> Result<()> {
        if self.num_vars() != p.dim() {
            return Err(Error::WeightDimension {
                expected: p.dim(),
                got: self.num_vars(),
            });
        }
        Ok(())
    }
}

/// `D_F` and `D°_F` as polynomials in `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSumPoly {
    pub face: FaceId,
    pub closed: MultiPoly,
    pub open: MultiPoly,
}

fn sign(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Interpolates through `values[q]` for `q = 0..=degree` and checks `values[degree + 1]`.
fn fit(values: &[Scalar], degree: usize, face: &[usize]) -> Result<MultiPoly> {
    let nodes: Vec<(Scalar, Scalar)> = (0..=degree)
        .map(|q| (int(q as i64), values[q].clone()))
        .collect();
    let p = interpolate(&nodes, degree, Q)?;
    let node = degree + 1;
    if p.eval(&[int(node as i64)]) != values[node] {
        return Err(Error::DegreeAssumption {
            face: face.to_vec(),
            degree,
            node: node as i64,
        });
    }
    Ok(p)
}

/// Sums of `φ` over the closed and open dilates of one face, computed by
/// enumerating that face alone.
pub fn weighted_sum_poly(p: &Polytope, face: FaceId, phi: &WeightPoly) -> Result<WeightedSumPoly> {
    phi.check_dim(p)?;
    let f = p.face_lattice().face(face);
    if f.is_empty() {
        return Err(Error::UnknownFace(Vec::new()));
    }
    let degree = f.dim as usize + phi.degree() as usize;
    let d0 = phi.at_origin();
    let mut closed = vec![d0.clone()];
    let mut open = vec![sign(f.dim as i64 + phi.degree() as i64) * &d0];
    for q in 1..=degree as i64 + 1 {
        let sum = |interior| -> Result<Scalar> {
            Ok(p.lattice_points(face, q, interior)?
                .iter()
                .map(|m| phi.eval(m))
                .fold(Scalar::zero(), |a, b| a + b))
        };
        closed.push(sum(false)?);
        open.push(sum(true)?);
    }
    Ok(WeightedSumPoly {
        face,
        closed: fit(&closed, degree, &f.vertices)?,
        open: fit(&open, degree, &f.vertices)?,
    })
}

/// Integer monomial representation of φ used by the sweep.
struct MonomialWeight {
    exps: Vec<Vec<u32>>,
    coeffs: Vec<Scalar>,
}

impl MonomialWeight {
    fn new(phi: &WeightPoly) -> Self {
        let (exps, coeffs) = phi.phi().terms().map(|(e, c)| (e.clone(), c.clone())).unzip();
        MonomialWeight { exps, coeffs }
    }

    fn accumulate(&self, m: &[i64], acc: &mut [i128]) {
        for (slot, e) in acc.iter_mut().zip(&self.exps) {
            let mut v: i128 = 1;
            for (&x, &k) in m.iter().zip(e) {
                v *= (x as i128).pow(k);
            }
            *slot += v;
        }
    }

    fn combine(&self, acc: &[i128]) -> Scalar {
        acc.iter()
            .zip(&self.coeffs)
            .map(|(&s, c)| c * Scalar::from_integer(BigInt::from(s)))
            .fold(Scalar::zero(), |a, b| a + b)
    }
}

/// Whether every monomial sum of the sweep is bounded well inside `i128`.
fn fits_i128(p: &Polytope, d: usize, max_q: i64) -> bool {
    let m = p.vertices().iter().flatten().map(|x| x.unsigned_abs()).max().unwrap_or(0).max(1) as f64;
    let reach = max_q as f64 * m;
    let bits = d as f64 * reach.log2()
        + p.dim() as f64 * (2.0 * reach + 1.0).log2()
        + (p.face_lattice().len() as f64).log2();
    bits < 120.0
}

/// `D_F` and `D°_F` for every nonempty face, indexed by face id (the entry
/// for the empty face is zero). Each dilate is enumerated once and every
/// lattice point is assigned to the face containing it in its relative
/// interior.
pub fn all_face_sums(p: &Polytope, phi: &WeightPoly) -> Result<Vec<WeightedSumPoly>> {
    phi.check_dim(p)?;
    let lattice = p.face_lattice();
    let d = phi.degree() as usize;
    let max_q = (p.dim() + d + 1) as i64;
    let by_facets: HashMap<&[usize], FaceId> = lattice
        .nonempty()
        .map(|f| (lattice.face(f).facets.as_slice(), f))
        .collect();
    if !fits_i128(p, d, max_q) {
        return (0..lattice.len())
            .into_par_iter()
            .map(|face| {
                if lattice.face(face).is_empty() {
                    let zero = MultiPoly::zero(vec![Q.to_string()]);
                    Ok(WeightedSumPoly { face, closed: zero.clone(), open: zero })
                } else {
                    weighted_sum_poly(p, face, phi)
                }
            })
            .collect();
    }
    let weight = MonomialWeight::new(phi);
    let terms = weight.exps.len();

    // open[q - 1][face] = monomial sums over the relative interior of qF
    let open_sums: Vec<Vec<Vec<i128>>> = (1..=max_q)
        .into_par_iter()
        .map(|q| {
            let mut acc = vec![vec![0i128; terms]; lattice.len()];
            p.for_each_point_with_tight(q, |m, tight| {
                let face = by_facets[tight];
                weight.accumulate(m, &mut acc[face]);
            });
            acc
        })
        .collect();

    let below: Vec<Vec<FaceId>> = (0..lattice.len()).map(|f| lattice.below(f)).collect();
    let d0 = phi.at_origin();
    (0..lattice.len())
        .into_par_iter()
        .map(|face| {
            let f = lattice.face(face);
            if f.is_empty() {
                let zero = MultiPoly::zero(vec![Q.to_string()]);
                return Ok(WeightedSumPoly {
                    face,
                    closed: zero.clone(),
                    open: zero,
                });
            }
            let degree = f.dim as usize + d;
            let mut closed = vec![d0.clone()];
            let mut open = vec![sign(f.dim as i64 + d as i64) * &d0];
            for per_q in open_sums.iter().take(degree + 1) {
                open.push(weight.combine(&per_q[face]));
                let mut acc = vec![0i128; terms];
                for &e in &below[face] {
                    for (a, b) in acc.iter_mut().zip(&per_q[e]) {
                        *a += b;
                    }
                }
                closed.push(weight.combine(&acc));
            }
            Ok(WeightedSumPoly {
                face,
                closed: fit(&closed, degree, &f.vertices)?,
                open: fit(&open, degree, &f.vertices)?,
            })
        })
        .collect()
}

fn eval_neg(p: &MultiPoly) -> MultiPoly {
    let minus_q = MultiPoly::var(vec![Q.to_string()], 0).scale(&-Scalar::one());
    p.with_vars(&[Q.to_string()]).compose(&[minus_q])
}

/// `D_P(-q) = (-1)^{d + n} D°_P(q)`.
pub fn check_weighted_reciprocity(p: &Polytope, phi: &WeightPoly) -> Result<bool> {
    let s = weighted_sum_poly(p, p.face_lattice().top(), phi)?;
    let rhs = s.open.scale(&sign((phi.degree() as usize + p.dim()) as i64));
    Ok(eval_neg(&s.closed) == rhs.with_vars(&[Q.to_string()]))
}

/// `E_P(-q) = (-1)^n E_{P°}(q)`.
pub fn check_ehrhart_macdonald(p: &Polytope) -> Result<bool> {
    check_weighted_reciprocity(p, &WeightPoly::one(p.dim()))
}

/// The Ehrhart polynomial of `P` and of its interior.
pub fn ehrhart(p: &Polytope) -> Result<WeightedSumPoly> {
    weighted_sum_poly(p, p.face_lattice().top(), &WeightPoly::one(p.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;
    use crate::polytope::shapes::*;

    fn qp(c: &[Scalar]) -> MultiPoly {
        MultiPoly::univariate(Q, c)
    }

    #[test]
    fn high_degree_weights_avoid_overflow() {
        let p = cube(2);
        let w = WeightPoly::monomial(&[30, 0], int(1)).unwrap();
        let sums = all_face_sums(&p, &w).unwrap();
        let top = p.face_lattice().top();
        assert_eq!(sums[top], weighted_sum_poly(&p, top, &w).unwrap());
        // Σ_{0<=i<=q} i^30 (q+1) at q = 1
        assert_eq!(sums[top].closed.eval(&[int(1)]), int(2));
        assert!(check_weighted_reciprocity(&p, &w).unwrap());
    }

    #[test]
    fn weight_validation() {
        let bad = WeightPoly::from_terms(2, vec![(vec![1, 0], int(1)), (vec![0, 0], int(1))]);
        assert_eq!(bad.unwrap_err(), Error::NotHomogeneous);
        assert_eq!(
            WeightPoly::from_terms(2, vec![(vec![1, 0], int(0))]).unwrap_err(),
            Error::ZeroWeight
        );
        let w = WeightPoly::monomial(&[1, 0, 0], int(1)).unwrap();
        assert_eq!(
            weighted_sum_poly(&cube(2), 0, &w).unwrap_err(),
            Error::WeightDimension {
                expected: 2,
                got: 3
            }
        );
    }

    #[test]
    fn unit_square() {
        let sq = cube(2);
        let s = ehrhart(&sq).unwrap();
        assert_eq!(s.closed, qp(&[int(1), int(2), int(1)]));
        assert_eq!(s.open, qp(&[int(1), int(-2), int(1)]));
    }

    #[test]
    fn segment_with_linear_weight() {
        let seg = Polytope::new(&[vec![0], vec![1]]).unwrap();
        let x = WeightPoly::monomial(&[1], int(1)).unwrap();
        let s = weighted_sum_poly(&seg, seg.face_lattice().top(), &x).unwrap();
        // brute force: Σ_{m=0}^{q} m and Σ_{m=1}^{q-1} m
        for q in 1..6i64 {
            assert_eq!(s.closed.eval(&[int(q)]), int((0..=q).sum()));
            assert_eq!(s.open.eval(&[int(q)]), int((1..q).sum()));
        }
        assert_eq!(s.closed, qp(&[int(0), frac(1, 2), frac(1, 2)]));
        assert!(check_weighted_reciprocity(&seg, &x).unwrap());
    }

    #[test]
    fn bulk_sweep_matches_per_face_enumeration() {
        let weights = |n: usize| {
            let mut e = vec![0; n];
            e[0] = 2;
            let mut mixed = vec![1; n];
            mixed[n - 1] = 0;
            vec![
                WeightPoly::one(n),
                WeightPoly::monomial(&e, frac(3, 2)).unwrap(),
                WeightPoly::monomial(&mixed, int(-1)).unwrap(),
            ]
        };
        for p in [square_pyramid(), skew_triangle(), cube(3), polygon(5)] {
            for w in weights(p.dim()) {
                let bulk = all_face_sums(&p, &w).unwrap();
                for f in p.face_lattice().nonempty() {
                    assert_eq!(bulk[f], weighted_sum_poly(&p, f, &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn closed_is_sum_of_open_over_subfaces() {
        let p = square_pyramid();
        let w = WeightPoly::monomial(&[0, 0, 1], int(1)).unwrap();
        let sums = all_face_sums(&p, &w).unwrap();
        let l = p.face_lattice();
        for f in l.nonempty() {
            let mut acc = MultiPoly::zero(vec![Q.to_string()]);
            for e in l.below(f) {
                acc = &acc + &sums[e].open;
            }
            assert_eq!(acc, sums[f].closed.with_vars(&[Q.to_string()]));
        }
    }

    #[test]
    fn pyramid_ehrhart() {
        let s = ehrhart(&square_pyramid()).unwrap();
        assert_eq!(
            s.closed,
            qp(&[int(1), frac(11, 3), int(4), frac(4, 3)])
        );
        assert!(check_ehrhart_macdonald(&square_pyramid()).unwrap());
    }

    #[test]
    fn leading_coefficient_is_volume() {
        for p in [square_pyramid(), cube(3), simplex(3), cross_polytope(3), skew_triangle()] {
            let e = ehrhart(&p).unwrap();
            assert_eq!(e.closed.coeff(&[p.dim() as u32]), p.volume());
        }
    }
}
