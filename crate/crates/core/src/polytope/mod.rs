//! Full-dimensional lattice polytopes in Z^n.
//!
//! A [`Polytope`] is built from a point set. Its facet inequalities
//! `<x, u_F> + λ_F >= 0` are found by scanning every hyperplane spanned by
//! an affinely independent n-subset of the input; normals are primitive and
//! point inward. Facets are numbered in the order the scan discovers them.

mod lattice;

pub use lattice::{Anchor, Face, FaceId, FaceLattice};

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::linalg::{combinations, det_i64, hyperplane_normal, primitive, rank_i64};
use crate::algebra::rational::{factorial, Scalar};
use crate::error::{Error, Result};

/// The inequality `<x, normal> + offset >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl HalfSpace {
    /// `<x, normal> + q * offset`.
    pub fn slack(&self, x: &[i64], q: i64) -> i64 {
        dot(x, &self.normal) + q * self.offset
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    halfspaces: Vec<HalfSpace>,
    lattice: FaceLattice,
}

impl Polytope {
    /// Convex hull of integer points. Duplicates and non-extreme points are
    /// dropped; surviving vertices keep their input order.
    pub fn new(points: &[Vec<i64>]) -> Result<Polytope> {
        build_polytope(points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn num_facets(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    /// True iff every vertex lies on exactly n facets.
    pub fn is_simple(&self) -> bool {
        self.lattice
            .faces()
            .iter()
            .filter(|f| f.dim == 0)
            .all(|v| v.facets.len() == self.dim)
    }

    pub fn contains(&self, x: &[i64], q: i64) -> bool {
        self.halfspaces.iter().all(|h| h.slack(x, q) >= 0)
    }

    /// Integer bounding box of `q` times the given vertex subset.
    fn bounding_box(&self, vertex_ids: &[usize], q: i64) -> Vec<(i64, i64)> {
        (0..self.dim)
            .map(|j| {
                let vals = vertex_ids.iter().map(|&v| self.vertices[v][j] * q);
                let lo = vals.clone().min().unwrap();
                let hi = vals.max().unwrap();
                (lo, hi)
            })
            .collect()
    }

    /// Lattice points of `q·F`, or of its relative interior when `interior`.
    ///
    /// A point of `q·F` is in the relative interior iff it is strict for every
    /// facet that does not contain `F`.
    pub fn lattice_points(&self, face: FaceId, q: i64, interior: bool) -> Result<Vec<Vec<i64>>> {
        if q <= 0 {
            return Err(Error::DilationNotPositive);
        }
        let f = self.lattice.face(face);
        if f.is_empty() {
            return Ok(Vec::new());
        }
        let bbox = self.bounding_box(&f.vertices, q);
        let mut out = Vec::new();
        for_each_point(&bbox, |m| {
            let mut ok = true;
            for (i, h) in self.halfspaces.iter().enumerate() {
                let s = h.slack(m, q);
                let tight_required = f.facets.binary_search(&i).is_ok();
                if s < 0 || (tight_required && s != 0) || (!tight_required && interior && s == 0) {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(m.to_vec());
            }
        });
        Ok(out)
    }

    /// Visits every lattice point of `q·P` together with the indices of the
    /// facets it lies on.
    pub fn for_each_point_with_tight(&self, q: i64, mut visit: impl FnMut(&[i64], &[usize])) {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let bbox = self.bounding_box(&all, q);
        let mut tight = Vec::with_capacity(self.halfspaces.len());
        for_each_point(&bbox, |m| {
            tight.clear();
            for (i, h) in self.halfspaces.iter().enumerate() {
                let s = h.slack(m, q);
                if s < 0 {
                    return;
                }
                if s == 0 {
                    tight.push(i);
                }
            }
            visit(m, &tight);
        });
    }

    /// Lebesgue volume (unit cube has volume 1), from a pulling triangulation.
    pub fn volume(&self) -> Scalar {
        let mut total = BigInt::zero();
        for s in self.lattice.triangulate(self.lattice.top(), Anchor::Lowest) {
            let base = &self.vertices[s[0]];
            let rows: Vec<Vec<i64>> = s[1..]
                .iter()
                .map(|&v| self.vertices[v].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            total += BigInt::from(det_i64(&rows).abs());
        }
        Scalar::new(total, factorial(self.dim as u32))
    }
}

fn for_each_point(bbox: &[(i64, i64)], mut visit: impl FnMut(&[i64])) {
    if bbox.iter().any(|(lo, hi)| lo > hi) {
        return;
    }
    let mut cur: Vec<i64> = bbox.iter().map(|b| b.0).collect();
    loop {
        visit(&cur);
        let mut j = 0;
        loop {
            if j == bbox.len() {
                return;
            }
            if cur[j] < bbox[j].1 {
                cur[j] += 1;
                break;
            }
            cur[j] = bbox[j].0;
            j += 1;
        }
    }
}

/// Bit budget for facet normals and slacks at dilation 1, leaving headroom
/// for dilated slack evaluation in `i64`.
const MAX_SLACK_BITS: f64 = 48.0;

/// Hadamard bound, in bits, on `2 n M |normal|`, where the normal's entries
/// are maximal minors of hull difference vectors with entries at most `2M`.
fn coordinate_bits(n: usize, max_abs: u64) -> f64 {
    let m = max_abs.max(1) as f64;
    let k = (n - 1) as f64;
    k * (2.0 * m).log2() + 0.5 * k * k.max(1.0).log2() + (2.0 * n as f64 * m).log2()
}

pub fn build_polytope(points: &[Vec<i64>]) -> Result<Polytope> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidPolytope("no vertices".into()));
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::InvalidPolytope("ambient dimension must be positive".into()));
    }
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::InvalidPolytope("inconsistent vertex dimensions".into()));
    }
    let max_abs = points.iter().flatten().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    if coordinate_bits(n, max_abs) > MAX_SLACK_BITS {
        return Err(Error::InvalidPolytope(format!(
            "coordinates up to {max_abs} are too large in dimension {n}"
        )));
    }
    let mut pts: Vec<Vec<i64>> = Vec::new();
    for p in points {
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }
    let diffs: Vec<Vec<i64>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    if pts.len() < n + 1 || rank_i64(&diffs) < n {
        return Err(Error::NotFullDimensional);
    }

    let mut halfspaces: Vec<HalfSpace> = Vec::new();
    let mut seen: HashSet<HalfSpace> = HashSet::new();
    for subset in combinations(pts.len(), n) {
        let span: Vec<&[i64]> = subset.iter().map(|&i| pts[i].as_slice()).collect();
        let normal = hyperplane_normal(&span);
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let mut normal = primitive(&normal);
        let mut offset = -dot(&pts[subset[0]], &normal);
        let slacks: Vec<i64> = pts.iter().map(|p| dot(p, &normal) + offset).collect();
        if slacks.iter().all(|&s| s <= 0) {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        } else if !slacks.iter().all(|&s| s >= 0) {
            continue;
        }
        let h = HalfSpace { normal, offset };
        if seen.insert(h.clone()) {
            halfspaces.push(h);
        }
    }

    // extreme points are those whose tight normals span R^n
    let vertices: Vec<Vec<i64>> = pts
        .into_iter()
        .filter(|p| {
            let tight: Vec<Vec<i64>> = halfspaces
                .iter()
                .filter(|h| h.slack(p, 1) == 0)
                .map(|h| h.normal.clone())
                .collect();
            tight.len() >= n && rank_i64(&tight) == n
        })
        .collect();

    let facet_vertices: Vec<Vec<usize>> = halfspaces
        .iter()
        .map(|h| {
            (0..vertices.len())
                .filter(|&v| h.slack(&vertices[v], 1) == 0)
                .collect()
        })
        .collect();
    let lattice = FaceLattice::from_facets(&vertices, &facet_vertices);
    Ok(Polytope {
        dim: n,
        vertices,
        halfspaces,
        lattice,
    })
}

/// Convenience constructors for the polytopes used throughout the tests.
pub mod shapes {
    use super::*;

    pub fn simplex(n: usize) -> Polytope {
        let mut pts = vec![vec![0; n]];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            pts.push(e);
        }
        build_polytope(&pts).expect("simplex")
    }

    pub fn cube(n: usize) -> Polytope {
        let pts: Vec<Vec<i64>> = (0..1u32 << n)
            .map(|m| (0..n).map(|i| ((m >> i) & 1) as i64).collect())
            .collect();
        build_polytope(&pts).expect("cube")
    }

    pub fn cross_polytope(n: usize) -> Polytope {
        let mut pts = Vec::new();
        for i in 0..n {
            for s in [1, -1] {
                let mut e = vec![0; n];
                e[i] = s;
                pts.push(e);
            }
        }
        build_polytope(&pts).expect("cross-polytope")
    }

    pub fn square_pyramid() -> Polytope {
        build_polytope(&[
            vec![0, 0, 0],
            vec![1, 1, 1],
            vec![1, -1, 1],
            vec![-1, 1, 1],
            vec![-1, -1, 1],
        ])
        .expect("square pyramid")
    }

    /// conv{(0,0), (2,0), (0,1)}
    pub fn skew_triangle() -> Polytope {
        build_polytope(&[vec![0, 0], vec![2, 0], vec![0, 1]]).expect("triangle")
    }

    pub fn polygon(m: usize) -> Polytope {
        // lattice m-gons for small m via points on a convex curve
        let pts: Vec<Vec<i64>> = (0..m as i64).map(|i| vec![i, i * i]).collect();
        build_polytope(&pts).expect("polygon")
    }
}

#[cfg(test)]
mod tests {
    use super::shapes::*;
    use super::*;
    use crate::algebra::rational::{frac, int};

    fn hs(normal: &[i64], offset: i64) -> HalfSpace {
        HalfSpace {
            normal: normal.to_vec(),
            offset,
        }
    }

    /// Independent oracle: every hyperplane through an affinely independent
    /// n-subset with all points weakly on one side, compared as a set.
    fn brute_force_facets(pts: &[Vec<i64>]) -> Vec<HalfSpace> {
        let n = pts[0].len();
        let mut out: Vec<HalfSpace> = Vec::new();
        for sub in combinations(pts.len(), n) {
            // normal by solving for integer vectors in a small box
            for cand in candidate_normals(n) {
                let offs: Vec<i64> = sub.iter().map(|&i| -dot(&pts[i], &cand)).collect();
                if offs.windows(2).any(|w| w[0] != w[1]) {
                    continue;
                }
                let h = hs(&cand, offs[0]);
                let on: Vec<&Vec<i64>> = pts.iter().filter(|p| h.slack(p, 1) == 0).collect();
                let diffs: Vec<Vec<i64>> = on
                    .iter()
                    .map(|p| p.iter().zip(on[0]).map(|(a, b)| a - b).collect())
                    .collect();
                if rank_i64(&diffs) + 1 < n {
                    continue;
                }
                if pts.iter().all(|p| h.slack(p, 1) >= 0) && !out.contains(&h) {
                    out.push(h);
                }
            }
        }
        out
    }

    fn candidate_normals(n: usize) -> Vec<Vec<i64>> {
        let r = 3i64;
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (-r..=r).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.into_iter()
            .filter(|v| v.iter().any(|&x| x != 0) && primitive(v) == *v)
            .collect()
    }

    fn same_set(a: &[HalfSpace], b: &[HalfSpace]) -> bool {
        a.len() == b.len() && a.iter().all(|h| b.contains(h))
    }

    #[test]
    fn oversized_coordinates_are_rejected() {
        let big = 1 << 20;
        let mut pts = vec![vec![0; 6]];
        for i in 0..6 {
            let mut e = vec![0; 6];
            e[i] = big;
            pts.push(e);
        }
        assert!(matches!(Polytope::new(&pts), Err(Error::InvalidPolytope(_))));
        let tri = Polytope::new(&[vec![0, 0], vec![big, 0], vec![0, big]]).unwrap();
        assert_eq!(tri.num_facets(), 3);
    }

    #[test]
    fn triangle_halfspaces_in_discovery_order() {
        let t = skew_triangle();
        assert_eq!(
            t.halfspaces(),
            &[hs(&[0, 1], 0), hs(&[1, 0], 0), hs(&[-1, -2], 2)]
        );
    }

    #[test]
    fn segment_halfspaces() {
        let s = build_polytope(&[vec![0], vec![1]]).unwrap();
        assert_eq!(s.halfspaces(), &[hs(&[1], 0), hs(&[-1], 1)]);
    }

    #[test]
    fn pyramid_facets_match_oracle() {
        let p = square_pyramid();
        assert_eq!(p.num_facets(), 5);
        let oracle = brute_force_facets(p.vertices());
        assert!(same_set(p.halfspaces(), &oracle));
        let c = cube(3);
        assert!(same_set(c.halfspaces(), &brute_force_facets(c.vertices())));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            build_polytope(&[vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap_err(),
            Error::NotFullDimensional
        );
        assert!(matches!(
            build_polytope(&[vec![0, 0], vec![1]]),
            Err(Error::InvalidPolytope(_))
        ));
    }

    #[test]
    fn non_extreme_points_dropped() {
        let p = build_polytope(&[
            vec![0, 0],
            vec![1, 1],
            vec![2, 0],
            vec![0, 0],
            vec![0, 2],
            vec![2, 2],
            vec![1, 0],
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.num_facets(), 4);
    }

    #[test]
    fn f_vectors() {
        let p = square_pyramid();
        assert_eq!(p.face_lattice().f_vector(), vec![5, 8, 5, 1]);
        assert_eq!(cube(3).face_lattice().f_vector(), vec![8, 12, 6, 1]);
        assert_eq!(simplex(2).face_lattice().f_vector(), vec![3, 3, 1]);
        assert_eq!(cross_polytope(3).face_lattice().f_vector(), vec![6, 12, 8, 1]);
    }

    #[test]
    fn simplicity() {
        assert!(!square_pyramid().is_simple());
        let apex = square_pyramid().face_lattice().vertex_face(0);
        assert_eq!(square_pyramid().face_lattice().face(apex).facets.len(), 4);
        assert!(cube(3).is_simple());
        assert!(simplex(3).is_simple());
        assert!(skew_triangle().is_simple());
        assert!(!cross_polytope(3).is_simple());
    }

    #[test]
    fn lattice_point_counts() {
        let sq = cube(2);
        let top = sq.face_lattice().top();
        assert_eq!(sq.lattice_points(top, 2, false).unwrap().len(), 9);
        assert_eq!(sq.lattice_points(top, 2, true).unwrap().len(), 1);
        let p = square_pyramid();
        let pts = p.lattice_points(p.face_lattice().top(), 1, false).unwrap();
        assert_eq!(pts.len(), 10);
        assert_eq!(
            p.lattice_points(top, 0, false).unwrap_err(),
            Error::DilationNotPositive
        );
    }

    #[test]
    fn face_points_partition_dilate() {
        for p in [square_pyramid(), cube(3), skew_triangle(), cross_polytope(3)] {
            let l = p.face_lattice();
            for q in 1..=3 {
                let closed = p.lattice_points(l.top(), q, false).unwrap().len();
                let sum: usize = l
                    .nonempty()
                    .map(|f| p.lattice_points(f, q, true).unwrap().len())
                    .sum();
                assert_eq!(closed, sum);
            }
        }
    }

    #[test]
    fn euler_relation() {
        for p in [square_pyramid(), cube(3), simplex(4), cross_polytope(3), polygon(5)] {
            let s: i64 = p
                .face_lattice()
                .faces()
                .iter()
                .skip(1)
                .map(|f| if f.dim % 2 == 0 { 1 } else { -1 })
                .sum();
            assert_eq!(s, 1);
        }
    }

    #[test]
    fn simple_face_incidences() {
        let c = cube(3);
        for f in c.face_lattice().faces().iter().skip(1) {
            assert_eq!(f.facets.len(), 3 - f.dim as usize);
        }
    }

    #[test]
    fn volumes() {
        assert_eq!(square_pyramid().volume(), frac(4, 3));
        assert_eq!(cube(3).volume(), int(1));
        assert_eq!(simplex(3).volume(), frac(1, 6));
        assert_eq!(skew_triangle().volume(), int(1));
        assert_eq!(cross_polytope(3).volume(), frac(4, 3));
    }

    #[test]
    fn triangulation_anchors_cover_volume() {
        let p = cross_polytope(3);
        let l = p.face_lattice();
        for anchor in [Anchor::Lowest, Anchor::Highest] {
            let simplices = l.triangulate(l.top(), anchor);
            assert!(simplices.iter().all(|s| s.len() == 4));
            let vol: i64 = simplices
                .iter()
                .map(|s| {
                    let base = &p.vertices()[s[0]];
                    let rows: Vec<Vec<i64>> = s[1..]
                        .iter()
                        .map(|&v| p.vertices()[v].iter().zip(base).map(|(a, b)| a - b).collect())
                        .collect();
                    det_i64(&rows).abs()
                })
                .sum();
            assert_eq!(vol, 8);
        }
    }

    #[test]
    fn hrep_round_trip() {
        use crate::algebra::linalg::solve_columns;
        for p in [square_pyramid(), cube(3), polygon(6), skew_triangle()] {
            let n = p.dim();
            let hs = p.halfspaces();
            let mut recovered: Vec<Vec<i64>> = Vec::new();
            for sub in combinations(hs.len(), n) {
                // columns of the transposed system: rows are normals
                let cols: Vec<Vec<i64>> =
                    (0..n).map(|j| sub.iter().map(|&i| hs[i].normal[j]).collect()).collect();
                if rank_i64(&cols) < n {
                    continue;
                }
                let rhs: Vec<i64> = sub.iter().map(|&i| -hs[i].offset).collect();
                let x = solve_columns(&cols, &rhs).unwrap();
                if x.iter().any(|c| !c.is_integer()) {
                    continue;
                }
                let x: Vec<i64> = x.iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect();
                if p.contains(&x, 1) && !recovered.contains(&x) {
                    recovered.push(x);
                }
            }
            let q = build_polytope(&recovered).unwrap();
            let mut a = q.vertices().to_vec();
            let mut b = p.vertices().to_vec();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }
}
