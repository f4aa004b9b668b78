//! The generating function `G_φ(q, y)` and its functional equation.
//!
//! Closed-face form:
//!
//! ```text
//! G = (y+1)^d Σ_F (y+1)^{dim F} (-y)^{codim F} D_F(q) g̃_F(-1/y)
//! ```
//!
//! Interior form:
//!
//! ```text
//! G = (y+1)^d Σ_F (y+1)^{dim F} D°_F(q) g̃_F(-y)
//! ```
//!
//! Every build evaluates both and refuses to return if they differ.

use num_traits::{One, Zero};

use crate::algebra::poly::{var_names, MultiPoly};
use crate::algebra::rational::{binomial, Scalar};
use crate::error::{Error, Result};
use crate::face_poly::{coefficients, dual_g_all, gessel_cube_g, h_polynomial};
use crate::polytope::{shapes, Polytope};
use crate::wsum::{all_face_sums, WeightPoly, WeightedSumPoly};

pub type Poly = MultiPoly<Scalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    ClosedFace,
    Interior,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GFunction {
    /// Polynomial in `(q, y)`.
    pub poly: Poly,
    pub n: usize,
    pub d: u32,
    pub form: Form,
    pub volume: Scalar,
}

fn qy() -> Vec<String> {
    var_names(["q", "y"])
}

fn y_plus_one_pow(k: u32) -> Poly {
    let y1 = MultiPoly::from_terms(qy(), [(vec![0, 1], Scalar::one()), (vec![0, 0], Scalar::one())]);
    y1.pow(k)
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// `(-y)^c g(-1/y) = Σ_j g_j (-1)^{c+j} y^{c-j}`; requires `deg g <= c`.
fn cleared_reciprocal(g: &[Scalar], c: usize) -> Poly {
    assert!(g.len() <= c + 1, "dual g degree exceeds codimension");
    MultiPoly::from_terms(
        qy(),
        g.iter()
            .enumerate()
            .map(|(j, gj)| (vec![0, (c - j) as u32], sign(c + j) * gj)),
    )
}

/// `g(-y)`.
fn negated(g: &[Scalar]) -> Poly {
    MultiPoly::from_terms(
        qy(),
        g.iter()
            .enumerate()
            .map(|(j, gj)| (vec![0, j as u32], sign(j) * gj)),
    )
}

fn in_q(p: &Poly) -> Poly {
    // rename the single variable q into the (q, y) ring
    MultiPoly::from_terms(qy(), p.terms().map(|(e, c)| (vec![e[0], 0], c.clone())))
}

/// Both forms of `G` from precomputed face sums and dual g-polynomials.
pub fn assemble(
    p: &Polytope,
    d: u32,
    sums: &[WeightedSumPoly],
    dual_g: &[Poly],
) -> (Poly, Poly) {
    let n = p.dim();
    let lattice = p.face_lattice();
    let mut closed = MultiPoly::zero(qy());
    let mut open = MultiPoly::zero(qy());
    for f in lattice.nonempty() {
        let dim = lattice.face(f).dim as usize;
        let g = coefficients(&dual_g[f]);
        let pre = y_plus_one_pow(d + dim as u32);
        closed = &closed + &(&(&pre * &in_q(&sums[f].closed)) * &cleared_reciprocal(&g, n - dim));
        open = &open + &(&(&pre * &in_q(&sums[f].open)) * &negated(&g));
    }
    (closed, open)
}

pub fn build_gfun(p: &Polytope, phi: &WeightPoly) -> Result<GFunction> {
    let sums = all_face_sums(p, phi)?;
    let dual = dual_g_all(p.face_lattice());
    let (closed, open) = assemble(p, phi.degree(), &sums, &dual);
    if closed != open {
        return Err(Error::Invariant(format!(
            "closed-face and interior forms of G differ\n  closed: {closed}\n  interior: {open}"
        )));
    }
    Ok(GFunction {
        poly: closed,
        n: p.dim(),
        d: phi.degree(),
        form: Form::ClosedFace,
        volume: p.volume(),
    })
}

/// `(-y)^N G(-q, 1/y)` with `N = n + d`, or `None` if some y-power exceeds `N`.
pub fn reciprocal_image(g: &GFunction) -> Option<Poly> {
    let big_n = g.n + g.d as usize;
    let mut out = MultiPoly::zero(qy());
    for (e, c) in g.poly.terms() {
        let (i, j) = (e[0] as usize, e[1] as usize);
        if j > big_n {
            return None;
        }
        out.add_term(vec![i as u32, (big_n - j) as u32], sign(i + big_n) * c);
    }
    Some(out)
}

/// `G(q, y) = (-y)^{n+d} G(-q, 1/y)`.
pub fn check_reciprocity(g: &GFunction) -> bool {
    reciprocal_image(g).is_some_and(|r| r == g.poly)
}

/// The coefficients `L_p(q)` of `y^p`, `p = 0..=n + d`. For `φ = 1` the
/// leading coefficient of each `L_p` is checked against `C(n, p) vol(P)`.
pub fn y_coefficient_profile(g: &GFunction) -> Result<Vec<Poly>> {
    let mut out = g.poly.coefficients_in(1);
    out.resize(g.n + g.d as usize + 1, MultiPoly::zero(qy()));
    let profile: Vec<Poly> = out
        .iter()
        .map(|l| MultiPoly::from_terms(vec!["q".to_string()], l.terms().map(|(e, c)| (vec![e[0]], c.clone()))))
        .collect();
    if g.d == 0 {
        for (p, l) in profile.iter().enumerate() {
            let lead = l.coeff(&[g.n as u32]);
            let expected = Scalar::from_integer(binomial(g.n as u64, p as u64)) * &g.volume;
            if lead != expected {
                return Err(Error::Invariant(format!(
                    "leading coefficient of L_{p} is {lead}, expected {expected}"
                )));
            }
        }
    }
    Ok(profile)
}

/// `(y+1)^{dim F} g̃_F(-y) = Σ_{F <= E <= P} (y+1)^{dim E} (-y)^{codim E} g̃_E(-1/y)`
/// for every nonempty face.
pub fn check_dual_identity(p: &Polytope) -> bool {
    let lattice = p.face_lattice();
    let n = p.dim();
    let dual = dual_g_all(lattice);
    lattice.nonempty().all(|f| {
        let dim = lattice.face(f).dim as usize;
        let lhs = &y_plus_one_pow(dim as u32) * &negated(&coefficients(&dual[f]));
        let mut rhs = MultiPoly::zero(qy());
        for e in lattice.above(f) {
            let de = lattice.face(e).dim as usize;
            rhs = &rhs
                + &(&y_plus_one_pow(de as u32) * &cleared_reciprocal(&coefficients(&dual[e]), n - de));
        }
        lhs == rhs
    })
}

/// For simple `P`: the `y^k` coefficient of `G_1(0, y)` is `(-1)^k h_{n-k}`.
pub fn check_dehn_sommerville(p: &Polytope, g1: &GFunction) -> bool {
    let n = p.dim();
    let h = h_polynomial(p).univariate_coeffs(0);
    let at_zero = g1.poly.substitute(0, &MultiPoly::zero(qy()));
    (0..=n).all(|k| {
        let hk = h.get(n - k).cloned().unwrap_or_else(Scalar::zero);
        at_zero.coeff(&[0, k as u32]) == sign(k) * hk
    }) && at_zero.degree_in(1).unwrap_or(0) as usize <= n
}

/// `G_φ` of the n-dimensional cross-polytope, after checking that each dual
/// g-polynomial is the Gessel polynomial of the dual cube face.
pub fn cross_polytope_gfun(n: usize, phi: &WeightPoly) -> Result<GFunction> {
    let p = shapes::cross_polytope(n);
    let lattice = p.face_lattice();
    let dual = dual_g_all(lattice);
    for f in lattice.nonempty() {
        let dim = lattice.face(f).dim as usize;
        let expected = if dim + 1 >= n {
            MultiPoly::one(vec!["x".to_string()])
        } else {
            gessel_cube_g(n - 1 - dim)
        };
        if dual[f] != expected {
            return Err(Error::Invariant(format!(
                "dual g of face {:?} is {}, expected {}",
                lattice.face(f).vertices,
                dual[f],
                expected
            )));
        }
    }
    build_gfun(&p, phi)
}

impl GFunction {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, q_pow: u32, y_pow: u32) -> Scalar {
        self.poly.coeff(&[q_pow, y_pow])
    }
}

/// The closed-face form of `G`, enumerating each face separately.
pub fn build_gfun_per_face(p: &Polytope, phi: &WeightPoly) -> Result<Poly> {
    let lattice = p.face_lattice();
    let mut sums = Vec::with_capacity(lattice.len());
    for f in 0..lattice.len() {
        if lattice.face(f).is_empty() {
            let zero = MultiPoly::zero(vec!["q".to_string()]);
            sums.push(WeightedSumPoly {
                face: f,
                closed: zero.clone(),
                open: zero,
            });
        } else {
            sums.push(crate::wsum::weighted_sum_poly(p, f, phi)?);
        }
    }
    let (closed, _) = assemble(p, phi.degree(), &sums, &dual_g_all(lattice));
    Ok(closed)
}
