//! Simplicial complexes over integer vertex labels.
//!
//! A complex is stored as the complete, downward-closed family of its faces,
//! grouped by dimension and sorted lexicographically within each dimension.
//! The empty face `∅` (dimension -1) belongs to every nonempty complex; it
//! indexes the single row of the lowest boundary matrix, which is what makes
//! every homology computation in this crate *reduced*.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Upper bound on generator cardinality; downward closure enumerates all
/// 2^card subsets, so this caps memory at roughly 16M faces per generator.
const MAX_GENERATOR_CARD: usize = 24;

/// A face: a strictly increasing list of vertex labels.
///
/// Construction through [`Face::new`] rejects unsorted or repeated vertices,
/// so every value is canonical and `Ord` compares faces lexicographically.
/// Within a fixed cardinality this is exactly the order used to index
/// matrix rows and columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<u32>);

impl Face {
    /// Builds a face from a strictly increasing vertex list.
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedFace(format!("{vertices:?}")));
        }
        Ok(Face(vertices))
    }

    /// The empty face `∅`, the unique face of dimension -1.
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn from_slice(vertices: &[u32]) -> Result<Self> {
        Self::new(vertices.to_vec())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    /// Number of vertices.
    pub fn card(&self) -> usize {
        self.0.len()
    }

    /// Dimension: one less than the number of vertices, so `∅` has dimension -1.
    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_vertex(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn is_disjoint_from(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.has_vertex(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        Face(self.0.iter().merge(other.0.iter()).dedup().copied().collect())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().filter(|v| other.has_vertex(**v)).copied().collect())
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().filter(|v| !other.has_vertex(**v)).copied().collect())
    }

    pub fn with_vertex(&self, v: u32) -> Face {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut vs = self.0.clone();
                vs.insert(pos, v);
                Face(vs)
            }
        }
    }

    pub fn without_vertex(&self, v: u32) -> Face {
        Face(self.0.iter().filter(|u| **u != v).copied().collect())
    }

    /// All subsets of the given cardinality, in lexicographic order.
    pub fn subsets_of_card(&self, card: usize) -> Vec<Face> {
        self.0.iter().copied().combinations(card).map(Face).collect()
    }

    /// All 2^card subsets, including `∅` and the face itself.
    pub fn all_subsets(&self) -> Vec<Face> {
        let m = self.0.len();
        (0u32..1 << m)
            .map(|mask| Face((0..m).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect()))
            .collect()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{{{}}}", self.0.iter().join(" "))
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Incidence sign `(τ:σ)` for a facet σ of τ.
///
/// With τ sorted ascending and `u` the unique vertex of `τ \ σ`, the sign is
/// `(-1)^p` where `p` is the number of vertices of τ smaller than `u`.
/// Both faces only need the containment relation; neither has to belong to
/// any particular complex.
pub fn incidence_sign(tau: &Face, sigma: &Face) -> Result<i32> {
    if tau.card() != sigma.card() + 1 || !sigma.is_subset_of(tau) {
        return Err(Error::InvalidParameter(format!(
            "incidence sign requires a facet: {sigma} is not a facet of {tau}"
        )));
    }
    let pos = tau
        .vertices()
        .iter()
        .position(|v| !sigma.has_vertex(*v))
        .expect("cardinality gap guarantees a missing vertex");
    Ok(if pos % 2 == 0 { 1 } else { -1 })
}

/// A finite simplicial complex: a downward-closed family of faces.
///
/// Immutable after construction. Faces of each dimension are stored in
/// lexicographic order; [`SimplicialComplex::position`] returns the index of
/// a face within its dimension, which is the row/column index used by every
/// matrix in this crate.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// `levels[i]` holds the faces of dimension `i - 1`, sorted.
    levels: Vec<Vec<Face>>,
    /// Face to its position within its dimension level.
    index: BTreeMap<Face, usize>,
}

impl SimplicialComplex {
    /// Builds the downward closure of the given generators.
    ///
    /// An empty generator list yields the empty complex (no faces at all,
    /// not even `∅`). Any nonempty input produces a complex containing `∅`.
    pub fn build(generators: &[Face]) -> Result<Self> {
        let mut faces = BTreeSet::new();
        for g in generators {
            if g.card() > MAX_GENERATOR_CARD {
                return Err(Error::InvalidParameter(format!(
                    "generator with {} vertices exceeds the supported maximum of {}",
                    g.card(),
                    MAX_GENERATOR_CARD
                )));
            }
            for s in g.all_subsets() {
                faces.insert(s);
            }
        }
        Ok(Self::from_closed_faces(faces))
    }

    /// Wraps a face set that is already downward closed.
    fn from_closed_faces(faces: BTreeSet<Face>) -> Self {
        let Some(maxdim) = faces.iter().map(Face::dim).max() else {
            return SimplicialComplex { levels: Vec::new(), index: BTreeMap::new() };
        };
        let mut levels = vec![Vec::new(); (maxdim + 2) as usize];
        for f in faces {
            levels[(f.dim() + 1) as usize].push(f);
        }
        let index = levels
            .iter()
            .flat_map(|lv| lv.iter().enumerate().map(|(i, f)| (f.clone(), i)))
            .collect();
        SimplicialComplex { levels, index }
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Dimension of the complex, or `None` for the empty complex.
    pub fn dim(&self) -> Option<i32> {
        if self.levels.is_empty() {
            None
        } else {
            Some(self.levels.len() as i32 - 2)
        }
    }

    /// The faces of dimension `k` in lexicographic order; empty when the
    /// complex has no faces of that dimension.
    pub fn faces_of_dim(&self, k: i32) -> &[Face] {
        if k < -1 || k + 1 >= self.levels.len() as i32 {
            &[]
        } else {
            &self.levels[(k + 1) as usize]
        }
    }

    pub fn n_faces(&self, k: i32) -> usize {
        self.faces_of_dim(k).len()
    }

    pub fn total_faces(&self) -> usize {
        self.index.len()
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.index.contains_key(f)
    }

    /// Position of a face within its dimension level.
    pub fn position(&self, f: &Face) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Iterates over every face of every dimension.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.levels.iter().flatten()
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.faces_of_dim(0).iter().map(|f| f.vertices()[0]).collect()
    }

    /// Vertices `v ∉ σ` with `σ ∪ {v}` in the complex, ascending.
    pub fn neighbors(&self, sigma: &Face) -> Result<Vec<u32>> {
        if !self.contains(sigma) {
            return Err(Error::MissingFace(sigma.to_string()));
        }
        Ok(self
            .vertices()
            .into_iter()
            .filter(|v| !sigma.has_vertex(*v) && self.contains(&sigma.with_vertex(*v)))
            .collect())
    }

    /// Faces with no proper superset in the complex.
    pub fn maximal_faces(&self) -> Vec<Face> {
        self.all_faces()
            .filter(|f| {
                self.neighbors(f).expect("face comes from this complex").is_empty()
            })
            .cloned()
            .collect()
    }

    /// Whether every maximal face has dimension exactly `d`.
    pub fn is_pure(&self, d: i32) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyComplex);
        }
        Ok(self.maximal_faces().iter().all(|f| f.dim() == d))
    }

    /// The link `lk(X, σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`.
    ///
    /// The link of any face of a nonempty complex contains `∅` and is itself
    /// downward closed, so the result is wrapped without re-closing.
    pub fn link(&self, sigma: &Face) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::MissingFace(sigma.to_string()));
        }
        let faces: BTreeSet<Face> = self
            .all_faces()
            .filter(|tau| tau.is_disjoint_from(sigma) && self.contains(&tau.union(sigma)))
            .cloned()
            .collect();
        Ok(Self::from_closed_faces(faces))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialComplex(dim {:?}, {} faces, maximal {:?})",
            self.dim(),
            self.total_faces(),
            self.maximal_faces()
        )
    }
}
