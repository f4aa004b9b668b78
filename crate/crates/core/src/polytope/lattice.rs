//! Face lattices of polytopes, with the empty face adjoined.

use std::collections::{BTreeSet, HashMap};

use crate::algebra::linalg::rank_i64;

pub type FaceId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    /// Affine dimension; -1 for the empty face.
    pub dim: i32,
    /// Sorted indices of the facets containing this face.
    pub facets: Vec<usize>,
}

impl Face {
    pub fn rank(&self) -> usize {
        (self.dim + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Which vertex a pulling triangulation cones from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    Lowest,
    Highest,
}

/// All faces of a polytope ordered by dimension, then by vertex list.
/// Index 0 is the empty face and the last index is the polytope itself.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    dim: usize,
    faces: Vec<Face>,
    by_vertices: HashMap<Vec<usize>, FaceId>,
    facet_faces: Vec<FaceId>,
}

impl FaceLattice {
    /// Builds the lattice from the vertex sets of the facets: faces are all
    /// intersections of facet vertex sets, plus the polytope itself.
    pub(crate) fn from_facets(
        vertices: &[Vec<i64>],
        facet_vertices: &[Vec<usize>],
    ) -> FaceLattice {
        let dim = vertices[0].len();
        let all: Vec<usize> = (0..vertices.len()).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(all.clone());
        seen.insert(Vec::new());
        let mut frontier: Vec<Vec<usize>> = Vec::new();
        for f in facet_vertices {
            if seen.insert(f.clone()) {
                frontier.push(f.clone());
            }
        }
        while let Some(face) = frontier.pop() {
            for f in facet_vertices {
                let meet: Vec<usize> = face.iter().copied().filter(|v| f.contains(v)).collect();
                if seen.insert(meet.clone()) {
                    frontier.push(meet);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vs| {
                let facets = facet_vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| vs.iter().all(|v| f.contains(v)))
                    .map(|(i, _)| i)
                    .collect();
                Face {
                    dim: affine_dim(vertices, &vs),
                    vertices: vs,
                    facets,
                }
            })
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
        let by_vertices: HashMap<Vec<usize>, FaceId> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vertices.clone(), i))
            .collect();
        let facet_faces = facet_vertices
            .iter()
            .map(|f| by_vertices[f])
            .collect();
        FaceLattice {
            dim,
            faces,
            by_vertices,
            facet_faces,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn empty_face(&self) -> FaceId {
        0
    }

    pub fn top(&self) -> FaceId {
        self.faces.len() - 1
    }

    /// Ids of the nonempty faces.
    pub fn nonempty(&self) -> impl Iterator<Item = FaceId> {
        1..self.faces.len()
    }

    pub fn find(&self, vertices: &[usize]) -> Option<FaceId> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        key.dedup();
        self.by_vertices.get(&key).copied()
    }

    /// Face id of the facet with the given halfspace index.
    pub fn facet_face(&self, facet: usize) -> FaceId {
        self.facet_faces[facet]
    }

    pub fn vertex_face(&self, vertex: usize) -> FaceId {
        self.by_vertices[&vec![vertex]]
    }

    /// Face containment.
    pub fn leq(&self, a: FaceId, b: FaceId) -> bool {
        let vb = &self.faces[b].vertices;
        self.faces[a].vertices.iter().all(|v| vb.binary_search(v).is_ok())
    }

    /// All faces E with E <= face (including the empty face and `face`).
    pub fn below(&self, face: FaceId) -> Vec<FaceId> {
        (0..self.faces.len()).filter(|&e| self.leq(e, face)).collect()
    }

    /// All faces E with face <= E.
    pub fn above(&self, face: FaceId) -> Vec<FaceId> {
        (0..self.faces.len()).filter(|&e| self.leq(face, e)).collect()
    }

    /// f-vector (f_0, ..., f_n); f_n = 1.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim + 1];
        for face in &self.faces[1..] {
            f[face.dim as usize] += 1;
        }
        f
    }

    fn anchor_of(&self, face: FaceId, anchor: Anchor) -> usize {
        let vs = &self.faces[face].vertices;
        match anchor {
            Anchor::Lowest => vs[0],
            Anchor::Highest => *vs.last().unwrap(),
        }
    }

    /// Pulling triangulation of a nonempty face: returns simplices as vertex
    /// lists (anchor first). Uses only the face lattice.
    pub fn triangulate(&self, face: FaceId, anchor: Anchor) -> Vec<Vec<usize>> {
        let mut memo: HashMap<FaceId, Vec<Vec<usize>>> = HashMap::new();
        self.triangulate_rec(face, anchor, &mut memo)
    }

    fn triangulate_rec(
        &self,
        face: FaceId,
        anchor: Anchor,
        memo: &mut HashMap<FaceId, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(s) = memo.get(&face) {
            return s.clone();
        }
        let f = &self.faces[face];
        assert!(f.dim >= 0, "cannot triangulate the empty face");
        let out = if f.dim == 0 {
            vec![vec![f.vertices[0]]]
        } else {
            let w = self.anchor_of(face, anchor);
            let mut out = Vec::new();
            for g in 0..self.faces.len() {
                let sub = &self.faces[g];
                if sub.dim != f.dim - 1 || !self.leq(g, face) || sub.vertices.contains(&w) {
                    continue;
                }
                for s in self.triangulate_rec(g, anchor, memo) {
                    let mut simplex = Vec::with_capacity(s.len() + 1);
                    simplex.push(w);
                    simplex.extend(s);
                    out.push(simplex);
                }
            }
            out
        };
        memo.insert(face, out.clone());
        out
    }
}

fn affine_dim(vertices: &[Vec<i64>], set: &[usize]) -> i32 {
    if set.is_empty() {
        return -1;
    }
    let base = &vertices[set[0]];
    let diffs: Vec<Vec<i64>> = set[1..]
        .iter()
        .map(|&i| vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        0
    } else {
        rank_i64(&diffs) as i32
    }
}
