//! Shared complexes for unit tests.

use crate::complex::{Face, SimplicialComplex};

pub(crate) fn face(vs: &[u32]) -> Face {
    Face::from_slice(vs).unwrap()
}

/// Boundary of the tetrahedron on {0,1,2,3}: four triangles, a 2-sphere.
pub(crate) fn boundary_tetrahedron() -> SimplicialComplex {
    SimplicialComplex::build(&[
        face(&[0, 1, 2]),
        face(&[0, 1, 3]),
        face(&[0, 2, 3]),
        face(&[1, 2, 3]),
    ])
    .unwrap()
}

/// The three edges of a triangle without its interior, a circle.
pub(crate) fn hollow_triangle() -> SimplicialComplex {
    SimplicialComplex::build(&[face(&[0, 1]), face(&[0, 2]), face(&[1, 2])]).unwrap()
}

/// Full simplex on `n` vertices.
pub(crate) fn full_simplex(n: u32) -> SimplicialComplex {
    let top = Face::new((0..n).collect()).unwrap();
    SimplicialComplex::build(&[top]).unwrap()
}

/// Two triangles glued along the edge {1,2}.
pub(crate) fn two_triangles() -> SimplicialComplex {
    SimplicialComplex::build(&[face(&[0, 1, 2]), face(&[1, 2, 3])]).unwrap()
}
