//! Normal fans of simple polytopes and the finite set Γ_Σ.

use num_traits::{One, Signed, Zero};

use crate::algebra::cyclo::{cyclo_root_of_unity, CycloNumber};
use crate::algebra::linalg::{lattice_index, solve_columns};
use crate::algebra::rational::Scalar;
use crate::error::{Error, Result};
use crate::polytope::{FaceId, Polytope};

/// The cone spanned by the normals of the facets containing a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub face: FaceId,
    /// Facet indices of the generating rays.
    pub rays: Vec<usize>,
    pub generators: Vec<Vec<i64>>,
    /// Index of the sublattice spanned by the generators in its saturation.
    pub index: u64,
}

impl Cone {
    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn is_unimodular(&self) -> bool {
        self.index == 1
    }
}

#[derive(Clone, Debug)]
pub struct NormalFan {
    pub dim: usize,
    /// Primitive inward facet normals, one ray per facet.
    pub rays: Vec<Vec<i64>>,
    /// One cone per nonempty face, in face-id order.
    pub cones: Vec<Cone>,
}

impl NormalFan {
    pub fn maximal_cones(&self) -> impl Iterator<Item = &Cone> {
        self.cones.iter().filter(move |c| c.dim() == self.dim)
    }

    pub fn cone_of(&self, face: FaceId) -> Option<&Cone> {
        self.cones.iter().find(|c| c.face == face)
    }

    pub fn is_nonsingular(&self) -> bool {
        self.maximal_cones().all(Cone::is_unimodular)
    }
}

pub fn normal_fan(p: &Polytope) -> Result<NormalFan> {
    if !p.is_simple() {
        return Err(Error::NotSimple);
    }
    let lattice = p.face_lattice();
    let rays: Vec<Vec<i64>> = p.halfspaces().iter().map(|h| h.normal.clone()).collect();
    let cones = lattice
        .nonempty()
        .map(|f| {
            let face = lattice.face(f);
            let generators: Vec<Vec<i64>> = face.facets.iter().map(|&i| rays[i].clone()).collect();
            Cone {
                face: f,
                rays: face.facets.clone(),
                index: lattice_index(&generators),
                generators,
            }
        })
        .collect();
    Ok(NormalFan {
        dim: p.dim(),
        rays,
        cones,
    })
}

/// A point of Γ_Σ with its coordinates on the cone it was found in and the
/// roots of unity `a_F(g) = exp(2πi ξ_F(g))`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaPoint {
    pub point: Vec<i64>,
    /// `ξ_F(g)` for every facet, in `[0, 1)`.
    pub xi: Vec<Scalar>,
    pub a: Vec<CycloNumber>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GammaSet {
    pub points: Vec<GammaPoint>,
}

impl GammaSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, g: &[i64]) -> bool {
        self.points.iter().any(|p| p.point == g)
    }
}

/// Lattice points of the half-open parallelepiped `{Σ ρ_i u_i : 0 <= ρ_i < 1}`
/// together with their coordinates `ρ`.
pub fn parallelepiped_points(generators: &[Vec<i64>]) -> Vec<(Vec<i64>, Vec<Scalar>)> {
    let n = generators.first().map_or(0, Vec::len);
    let bbox: Vec<(i64, i64)> = (0..n)
        .map(|j| {
            let neg: i64 = generators.iter().map(|u| u[j].min(0)).sum();
            let pos: i64 = generators.iter().map(|u| u[j].max(0)).sum();
            (neg, pos)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur: Vec<i64> = bbox.iter().map(|b| b.0).collect();
    'scan: loop {
        if let Some(rho) = solve_columns(generators, &cur) {
            if rho.iter().all(|r| !r.is_negative() && *r < Scalar::one()) {
                out.push((cur.clone(), rho));
            }
        }
        let mut j = 0;
        loop {
            if j == n {
                break 'scan;
            }
            if cur[j] < bbox[j].1 {
                cur[j] += 1;
                break;
            }
            cur[j] = bbox[j].0;
            j += 1;
        }
    }
    out
}

fn root_of(rho: &Scalar) -> Result<CycloNumber> {
    let num: i64 = rho.numer().try_into().map_err(|_| Error::Invariant("root exponent overflow".into()))?;
    let den: i64 = rho.denom().try_into().map_err(|_| Error::Invariant("root order overflow".into()))?;
    cyclo_root_of_unity(num, den)
}

/// Γ_Σ as the union of `Q(σ) ∩ N` over the maximal cones (which contain the
/// parallelepipeds of all their faces), deduplicated.
pub fn gamma_set(fan: &NormalFan) -> Result<GammaSet> {
    let mut points: Vec<GammaPoint> = Vec::new();
    let facets = fan.rays.len();
    for cone in fan.maximal_cones() {
        for (g, rho) in parallelepiped_points(&cone.generators) {
            if points.iter().any(|p| p.point == g) {
                continue;
            }
            let mut xi = vec![Scalar::zero(); facets];
            for (&f, r) in cone.rays.iter().zip(&rho) {
                xi[f] = r.clone();
            }
            let a = xi.iter().map(root_of).collect::<Result<Vec<_>>>()?;
            points.push(GammaPoint { point: g, xi, a });
        }
    }
    points.sort_by(|a, b| {
        let za = a.point.iter().all(|&x| x == 0);
        let zb = b.point.iter().all(|&x| x == 0);
        zb.cmp(&za).then_with(|| a.point.cmp(&b.point))
    });
    Ok(GammaSet { points })
}

/// Order of `exp(2πi ρ)`: the reduced denominator of `ρ`.
pub fn root_order(rho: &Scalar) -> u64 {
    rho.denom().try_into().unwrap_or(u64::MAX)
}
