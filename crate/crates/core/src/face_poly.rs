//! f-vectors, h-polynomials and the f/g-polynomials of Eulerian posets.
//!
//! For a graded poset with bottom `0` (rank 0) and top of rank `n + 1`,
//!
//! ```text
//! f(x) = Σ_{0 <= E < top} g_{[0,E]}(x) (x - 1)^{n - ρ(E)}
//! g(x) = f_0 + (f_1 - f_0) x + … + (f_m - f_{m-1}) x^m,   m = ⌊n/2⌋
//! ```
//!
//! with `f = g = 1` when the top has rank 0. The dual-face polynomial `g̃_F`
//! of a face is the g-polynomial of the interval `[F, P]` with the order
//! reversed, computed without ever building a polar polytope.

use num_traits::{One, Zero};

use crate::algebra::poly::MultiPoly;
use crate::algebra::rational::{binomial, int, Scalar};
use crate::error::{Error, Result};
use crate::polytope::{FaceId, FaceLattice, Polytope};

pub type Poly = MultiPoly<Scalar>;

pub const X: &str = "x";

fn x_poly(coeffs: &[Scalar]) -> Poly {
    MultiPoly::univariate(X, coeffs)
}

fn x_minus_one_pow(k: usize) -> Poly {
    // (x - 1)^k with binomial coefficients
    let coeffs: Vec<Scalar> = (0..=k)
        .map(|i| {
            let c = Scalar::from_integer(binomial(k as u64, i as u64));
            if (k - i) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    x_poly(&coeffs)
}

fn dense(p: &Poly, len: usize) -> Vec<Scalar> {
    let mut c = if p.is_zero() {
        Vec::new()
    } else {
        p.with_vars(&[X.to_string()]).univariate_coeffs(0)
    };
    c.resize(len.max(c.len()), Scalar::zero());
    c
}

/// A finite graded poset with a unique bottom and top.
#[derive(Clone, Debug)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    /// `less[e]` lists every element strictly below `e`.
    less: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl GradedPoset {
    /// Builds a poset from ranks and a `leq` predicate and checks that it is
    /// graded: unique bottom of rank 0, unique top, and covers raise rank by one.
    pub fn new(ranks: Vec<usize>, leq: impl Fn(usize, usize) -> bool) -> Result<GradedPoset> {
        let m = ranks.len();
        if m == 0 {
            return Err(Error::NotRanked("empty poset".into()));
        }
        let less: Vec<Vec<usize>> = (0..m)
            .map(|b| (0..m).filter(|&a| a != b && leq(a, b)).collect())
            .collect();
        let bottoms: Vec<usize> = (0..m).filter(|&e| less[e].is_empty()).collect();
        if bottoms.len() != 1 || ranks[bottoms[0]] != 0 {
            return Err(Error::NotRanked("no unique bottom of rank 0".into()));
        }
        let bottom = bottoms[0];
        let tops: Vec<usize> = (0..m).filter(|&e| less[e].len() == m - 1).collect();
        if tops.len() != 1 {
            return Err(Error::NotRanked("no unique top".into()));
        }
        let top = tops[0];
        for b in 0..m {
            for &a in &less[b] {
                if leq(b, a) {
                    return Err(Error::NotRanked("order is not antisymmetric".into()));
                }
                if ranks[a] >= ranks[b] {
                    return Err(Error::NotRanked(format!(
                        "element {a} < {b} but rank {} >= {}",
                        ranks[a], ranks[b]
                    )));
                }
                let covered = !less[b].iter().any(|&c| c != a && less[c].contains(&a));
                if covered && ranks[b] != ranks[a] + 1 {
                    return Err(Error::NotRanked(format!("cover {a} < {b} skips a rank")));
                }
            }
        }
        Ok(GradedPoset {
            ranks,
            less,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, e: usize) -> usize {
        self.ranks[e]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less[b].contains(&a)
    }

    /// The face poset of a polytope with the empty face adjoined; element ids
    /// coincide with face ids.
    pub fn from_lattice(lattice: &FaceLattice) -> GradedPoset {
        let ranks = lattice.faces().iter().map(|f| f.rank()).collect();
        GradedPoset::new(ranks, |a, b| lattice.leq(a, b)).expect("face lattices are graded")
    }

    /// The interval `[a, b]` as a poset of its own; element `i` of the
    /// result corresponds to `members[i]` of the returned list.
    pub fn interval(&self, a: usize, b: usize) -> Result<(GradedPoset, Vec<usize>)> {
        let members: Vec<usize> = (0..self.len())
            .filter(|&e| self.leq(a, e) && self.leq(e, b))
            .collect();
        let base = self.ranks[a];
        let ranks = members.iter().map(|&e| self.ranks[e] - base).collect();
        let p = GradedPoset::new(ranks, |i, j| self.leq(members[i], members[j]))?;
        Ok((p, members))
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> GradedPoset {
        let top_rank = self.ranks[self.top];
        let ranks = self.ranks.iter().map(|&r| top_rank - r).collect();
        GradedPoset::new(ranks, |a, b| self.leq(b, a)).expect("dual of a graded poset")
    }

    /// f- and g-polynomials of every lower interval `[0, e]`, indexed by `e`.
    pub fn lower_fg(&self) -> Vec<(Poly, Poly)> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&e| self.ranks[e]);
        let mut out: Vec<Option<(Poly, Poly)>> = vec![None; self.len()];
        for e in order {
            let r = self.ranks[e];
            if r == 0 {
                let one = Poly::one(vec![X.to_string()]);
                out[e] = Some((one.clone(), one));
                continue;
            }
            let n = r - 1;
            let mut f = Poly::zero(vec![X.to_string()]);
            for &b in &self.less[e] {
                let gb = &out[b].as_ref().expect("lower elements first").1;
                f = &f + &(gb * &x_minus_one_pow(n - self.ranks[b]));
            }
            let g = truncated_g(&f, n);
            out[e] = Some((f, g));
        }
        out.into_iter().map(Option::unwrap).collect()
    }
}

fn truncated_g(f: &Poly, n: usize) -> Poly {
    let fc = dense(f, n + 1);
    let m = n / 2;
    let mut g = vec![fc[0].clone()];
    for i in 1..=m {
        g.push(&fc[i] - &fc[i - 1]);
    }
    x_poly(&g)
}

/// h(P, t) = Σ_k f_k (t - 1)^k.
pub fn h_polynomial(p: &Polytope) -> Poly {
    let f = p.face_lattice().f_vector();
    let mut h = Poly::zero(vec!["t".to_string()]);
    for (k, &fk) in f.iter().enumerate() {
        let term = x_minus_one_pow(k).with_vars(&[X.to_string()]);
        let term = MultiPoly::from_terms(
            vec!["t".to_string()],
            term.terms().map(|(e, c)| (e.clone(), c.clone())),
        );
        h = &h + &term.scale(&int(fk as i64));
    }
    h
}

/// f- and g-polynomial of the whole poset (its top element).
pub fn fg_polynomials(q: &GradedPoset) -> (Poly, Poly) {
    q.lower_fg().swap_remove(q.top())
}

/// g̃_F for every face of `P`, indexed by face id (the empty face included).
pub fn dual_g_all(lattice: &FaceLattice) -> Vec<Poly> {
    let dual = GradedPoset::from_lattice(lattice).dual();
    dual.lower_fg().into_iter().map(|(_, g)| g).collect()
}

pub fn dual_g(lattice: &FaceLattice, face: FaceId) -> Poly {
    let poset = GradedPoset::from_lattice(lattice);
    let (interval, _) = poset
        .interval(face, lattice.top())
        .expect("intervals of face lattices are graded");
    fg_polynomials(&interval.dual()).1
}

/// Closed form for the g-polynomial of the n-cube:
/// Σ_{k=0}^{⌊n/2⌋} 1/(n-k+1) C(n,k) C(2n-2k,n) (x-1)^k.
pub fn gessel_cube_g(n: usize) -> Poly {
    let mut g = Poly::zero(vec![X.to_string()]);
    for k in 0..=n / 2 {
        let c = Scalar::from_integer(binomial(n as u64, k as u64))
            * Scalar::from_integer(binomial(2 * (n - k) as u64, n as u64))
            / int((n - k + 1) as i64);
        g = &g + &x_minus_one_pow(k).scale(&c);
    }
    g
}

/// Master duality: f(x) = x^n f(1/x) with n = rank(top) - 1.
pub fn check_master_duality(q: &GradedPoset) -> bool {
    let r = q.rank(q.top());
    if r == 0 {
        return true;
    }
    let n = r - 1;
    let (f, _) = fg_polynomials(q);
    if f.total_degree().unwrap_or(0) as usize > n {
        return false;
    }
    let c = dense(&f, n + 1);
    (0..=n).all(|i| c[i] == c[n - i])
}

/// x^{n+1} g(1/x) = Σ_{0 <= F <= top} g_F(x) (x - 1)^{n+1-ρ(F)} for the top
/// element and, when `all_intervals`, for every lower interval as well.
pub fn check_lemma_identity(q: &GradedPoset, all_intervals: bool) -> bool {
    let fg = q.lower_fg();
    let check = |e: usize| {
        let r = q.rank(e);
        // for rank 0 the identity reads x^0 g(1/x) = g: 1 = 1
        if r == 0 {
            return true;
        }
        let g = dense(&fg[e].1, r + 1);
        let mut lhs = vec![Scalar::zero(); r + 1];
        for (i, c) in g.iter().enumerate().take(r + 1) {
            lhs[r - i] = c.clone();
        }
        let mut rhs = Poly::zero(vec![X.to_string()]);
        for b in (0..q.len()).filter(|&b| q.leq(b, e)) {
            rhs = &rhs + &(&fg[b].1 * &x_minus_one_pow(r - q.rank(b)));
        }
        x_poly(&lhs) == rhs
    };
    if all_intervals {
        (0..q.len()).all(check)
    } else {
        check(q.top())
    }
}

/// Coefficients of a univariate polynomial in `x`, constant first.
pub fn coefficients(p: &Poly) -> Vec<Scalar> {
    dense(p, 0)
}

pub fn is_one(p: &Poly) -> bool {
    p.num_terms() == 1 && p.coeff(&[0]).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::shapes::*;

    fn xp(c: &[i64]) -> Poly {
        x_poly(&c.iter().map(|&v| int(v)).collect::<Vec<_>>())
    }

    fn g_of(p: &Polytope) -> Poly {
        fg_polynomials(&GradedPoset::from_lattice(p.face_lattice())).1
    }

    #[test]
    fn h_polynomials() {
        let t = |c: &[i64]| {
            MultiPoly::univariate("t", &c.iter().map(|&v| int(v)).collect::<Vec<_>>())
        };
        assert_eq!(h_polynomial(&simplex(3)), t(&[1, 1, 1, 1]));
        assert_eq!(h_polynomial(&cube(3)), t(&[1, 3, 3, 1]));
        assert_eq!(h_polynomial(&cube(2)), t(&[1, 2, 1]));
    }

    #[test]
    fn g_polynomials_of_small_polytopes() {
        for n in 1..=4 {
            assert_eq!(g_of(&simplex(n)), xp(&[1]));
        }
        assert_eq!(g_of(&cube(2)), xp(&[1, 1]));
        for m in 3..=7 {
            assert_eq!(g_of(&polygon(m)), xp(&[1, m as i64 - 3]), "{m}-gon");
        }
    }

    #[test]
    fn dual_g_examples() {
        let pyr = square_pyramid();
        let l = pyr.face_lattice();
        let apex = l.vertex_face(0);
        assert_eq!(dual_g(l, apex), xp(&[1, 1]));
        let all = dual_g_all(l);
        assert_eq!(all[apex], xp(&[1, 1]));
        for f in 0..pyr.num_facets() {
            assert_eq!(dual_g(l, l.facet_face(f)), xp(&[1]));
        }
        assert_eq!(dual_g(l, l.top()), xp(&[1]));
        let c = cube(3);
        let cl = c.face_lattice();
        assert_eq!(dual_g(cl, cl.vertex_face(0)), xp(&[1]));
        for f in cl.nonempty() {
            assert_eq!(dual_g(cl, f), dual_g_all(cl)[f]);
        }
    }

    #[test]
    fn gessel_closed_form() {
        assert_eq!(gessel_cube_g(0), xp(&[1]));
        assert_eq!(gessel_cube_g(2), xp(&[1, 1]));
        assert_eq!(gessel_cube_g(3), xp(&[1, 4]));
        for n in 1..=5 {
            assert_eq!(g_of(&cube(n)), gessel_cube_g(n), "cube {n}");
        }
    }

    #[test]
    fn duality_and_lemma() {
        for p in [square_pyramid(), cube(3), cross_polytope(3), polygon(5), simplex(3)] {
            let q = GradedPoset::from_lattice(p.face_lattice());
            assert!(check_master_duality(&q));
            assert!(check_master_duality(&q.dual()));
            assert!(check_lemma_identity(&q, true));
        }
    }

    #[test]
    fn simple_polytopes_have_trivial_dual_g() {
        for p in [cube(3), simplex(3), skew_triangle(), polygon(6)] {
            let all = dual_g_all(p.face_lattice());
            assert!(p.face_lattice().nonempty().all(|f| is_one(&all[f])));
        }
    }

    #[test]
    fn unranked_poset_rejected() {
        // chain 0 < 1 < 2 with ranks 0, 1, 3
        let err = GradedPoset::new(vec![0, 1, 3], |a, b| a <= b).unwrap_err();
        assert!(matches!(err, Error::NotRanked(_)));
        let err = GradedPoset::new(vec![0, 0], |a, b| a == b).unwrap_err();
        assert!(matches!(err, Error::NotRanked(_)));
    }

    #[test]
    fn dehn_sommerville_symmetry_for_simple() {
        for p in [cube(3), simplex(4), skew_triangle(), polygon(7)] {
            let h = h_polynomial(&p).univariate_coeffs(0);
            let n = p.dim();
            for k in 0..=n {
                assert_eq!(h[k], h[n - k]);
            }
        }
    }
}
