//! Exact integrals of a weight over the deformed dilate
//! `{x : <x, u_F> + t λ_F + h_F >= 0}` of a simple polytope.

use num_traits::{One, Signed, Zero};

use crate::algebra::linalg::{inverse, to_matrix};
use crate::algebra::poly::{var_names, MultiPoly};
use crate::algebra::rational::{factorial, int, Scalar};
use crate::error::{Error, Result};
use crate::polytope::{Anchor, Polytope};
use crate::wsum::WeightPoly;

pub type Poly = MultiPoly<Scalar>;

/// Variables `t, h1, .., hk` for a polytope with `k` facets.
pub fn th_vars(facets: usize) -> Vec<String> {
    let mut v = vec!["t".to_string()];
    v.extend((1..=facets).map(|i| format!("h{i}")));
    v
}

/// `t·v - Σ_{F ∋ v} h_F m_v^F`, where `m_v^F` is the basis dual to the
/// normals of the facets through `v`.
pub fn deformed_vertex(p: &Polytope, vertex: usize) -> Result<Vec<Poly>> {
    let lattice = p.face_lattice();
    let n = p.dim();
    let facets = &lattice.face(lattice.vertex_face(vertex)).facets;
    if facets.len() != n {
        return Err(Error::NotSimpleAtVertex(vertex));
    }
    let u: Vec<Vec<i64>> = facets.iter().map(|&f| p.halfspaces()[f].normal.clone()).collect();
    let inv = inverse(&to_matrix(&u)).ok_or(Error::NotSimpleAtVertex(vertex))?;
    let vars = th_vars(p.num_facets());
    let v = &p.vertices()[vertex];
    Ok((0..n)
        .map(|i| {
            let mut c = MultiPoly::var(vars.clone(), 0).scale(&int(v[i]));
            for (j, &f) in facets.iter().enumerate() {
                let h = MultiPoly::var(vars.clone(), f + 1);
                c = &c - &h.scale(&inv[i][j]);
            }
            c
        })
        .collect())
}

/// `∫ φ` over the deformed dilate as a polynomial in `(t, h)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicIntegral {
    pub poly: Poly,
}

impl SymbolicIntegral {
    pub fn num_facets(&self) -> usize {
        self.poly.vars().len() - 1
    }

    /// The integral over `t·P`, a polynomial in `t`.
    pub fn undeformed(&self) -> Poly {
        let zero = MultiPoly::zero(self.poly.vars().to_vec());
        let mut p = self.poly.clone();
        for i in 1..p.vars().len() {
            p = p.substitute(i, &zero);
        }
        MultiPoly::from_terms(vec!["t".to_string()], p.terms().map(|(e, c)| (vec![e[0]], c.clone())))
    }
}

fn det(m: &[Vec<Poly>], vars: &[String]) -> Poly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(vars.to_vec());
    }
    // Laplace expansion along the first row
    let mut out = MultiPoly::zero(vars.to_vec());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &det(&minor, vars);
        out = if j % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

pub fn symbolic_integral(p: &Polytope, phi: &WeightPoly) -> Result<SymbolicIntegral> {
    symbolic_integral_anchored(p, phi, Anchor::Lowest)
}

pub fn symbolic_integral_anchored(
    p: &Polytope,
    phi: &WeightPoly,
    anchor: Anchor,
) -> Result<SymbolicIntegral> {
    if !p.is_simple() {
        return Err(Error::NotSimple);
    }
    if phi.num_vars() != p.dim() {
        return Err(Error::WeightDimension {
            expected: p.dim(),
            got: phi.num_vars(),
        });
    }
    let n = p.dim();
    let k = p.num_facets();
    let vars = th_vars(k);
    let mut ext = vars.clone();
    ext.extend(var_names((1..=n).map(|i| format!("tau{i}"))));
    let deformed: Vec<Vec<Poly>> = (0..p.vertices().len())
        .map(|v| deformed_vertex(p, v))
        .collect::<Result<_>>()?;

    let at_origin: Vec<Scalar> = std::iter::once(Scalar::one())
        .chain(std::iter::repeat_n(Scalar::zero(), k))
        .collect();
    let lattice = p.face_lattice();
    let mut total = MultiPoly::zero(vars.clone());
    for simplex in lattice.triangulate(lattice.top(), anchor) {
        let w0 = &deformed[simplex[0]];
        let edges: Vec<Vec<Poly>> = simplex[1..]
            .iter()
            .map(|&v| deformed[v].iter().zip(w0).map(|(a, b)| a - b).collect())
            .collect();
        let jac = det(&edges, &vars);
        let orientation = jac.eval(&at_origin);
        let jac = if orientation.is_negative() {
            jac.neg_poly()
        } else {
            jac
        };
        // x = w0 + Σ τ_i (w_i - w0)
        let images: Vec<Poly> = (0..n)
            .map(|j| {
                let mut x = w0[j].with_vars(&ext);
                for (i, e) in edges.iter().enumerate() {
                    let tau = MultiPoly::var(ext.clone(), k + 1 + i);
                    x = &x + &(&tau * &e[j].with_vars(&ext));
                }
                x
            })
            .collect();
        let integrand = phi.phi().compose(&images);
        let mut reduced = MultiPoly::zero(vars.clone());
        for (e, c) in integrand.terms() {
            let (th, tau) = e.split_at(k + 1);
            let num: num_bigint::BigInt = tau.iter().map(|&b| factorial(b)).product();
            let abs: u32 = tau.iter().sum();
            let w = Scalar::new(num, factorial(n as u32 + abs));
            reduced.add_term(th.to_vec(), c * w);
        }
        total = &total + &(&reduced * &jac);
    }
    Ok(SymbolicIntegral { poly: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;
    use crate::polytope::shapes::*;

    fn th(c: &[i64], k: usize) -> Poly {
        // linear form c0 t + c1 h1 + ...
        let vars = th_vars(k);
        MultiPoly::from_terms(
            vars.clone(),
            c.iter().enumerate().map(|(i, &x)| {
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                (e, int(x))
            }),
        )
    }

    #[test]
    fn triangle_volume() {
        let tri = skew_triangle();
        let vol = symbolic_integral(&tri, &WeightPoly::one(2)).unwrap();
        let l = th(&[2, 2, 1, 1], 3);
        assert_eq!(vol.poly, (&l * &l).scale(&frac(1, 4)));
    }

    #[test]
    fn deformed_vertices_satisfy_tight_facets() {
        for p in [skew_triangle(), cube(3), simplex(3), polygon(5)] {
            let k = p.num_facets();
            let vars = th_vars(k);
            let lattice = p.face_lattice();
            for v in 0..p.vertices().len() {
                let w = deformed_vertex(&p, v).unwrap();
                for (f, h) in p.halfspaces().iter().enumerate() {
                    let mut s = MultiPoly::var(vars.clone(), 0).scale(&int(h.offset));
                    for (x, &u) in w.iter().zip(&h.normal) {
                        s = &s + &x.scale(&int(u));
                    }
                    let on = lattice.face(lattice.vertex_face(v)).facets.contains(&f);
                    if on {
                        s = &s + &MultiPoly::var(vars.clone(), f + 1);
                        assert!(s.is_zero());
                    } else {
                        let at_t1: Vec<Scalar> = std::iter::once(int(1))
                            .chain(std::iter::repeat_n(int(0), k))
                            .collect();
                        assert!(s.eval(&at_t1) > int(0));
                    }
                }
            }
        }
    }

    #[test]
    fn triangle_origin_vertex() {
        let tri = skew_triangle();
        let w = deformed_vertex(&tri, 0).unwrap();
        assert_eq!(w[0], th(&[0, 0, -1, 0], 3));
        assert_eq!(w[1], th(&[0, -1, 0, 0], 3));
    }

    #[test]
    fn square_area_and_box_moments() {
        let sq = cube(2);
        let a = symbolic_integral(&sq, &WeightPoly::one(2)).unwrap();
        assert_eq!(a.undeformed(), MultiPoly::univariate("t", &[int(0), int(0), int(1)]));
        // ∫_{[0,t]^3} x1^2 = t^5 / 3
        let c = cube(3);
        let m = symbolic_integral(&c, &WeightPoly::monomial(&[2, 0, 0], int(1)).unwrap()).unwrap();
        let mut expected = vec![int(0); 6];
        expected[5] = frac(1, 3);
        assert_eq!(m.undeformed(), MultiPoly::univariate("t", &expected));
    }

    #[test]
    fn anchor_invariance_and_homogeneity() {
        for p in [skew_triangle(), cube(3), polygon(6)] {
            let n = p.dim();
            let mut e = vec![0; n];
            e[0] = 1;
            let w = WeightPoly::monomial(&e, int(1)).unwrap();
            let lo = symbolic_integral_anchored(&p, &w, Anchor::Lowest).unwrap();
            let hi = symbolic_integral_anchored(&p, &w, Anchor::Highest).unwrap();
            assert_eq!(lo.undeformed(), hi.undeformed());
            assert!(lo.poly.is_homogeneous_of(n as u32 + 1));
        }
    }

    #[test]
    fn non_simple_rejected() {
        assert_eq!(
            symbolic_integral(&square_pyramid(), &WeightPoly::one(3)).unwrap_err(),
            Error::NotSimple
        );
    }
}
