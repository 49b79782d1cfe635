use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exactnum::{integer_serde, Rational};
use crate::linalg::{saturated_row_basis, ExactMatrix, IntMatrix};

use super::polytope::{lattice_length, LatticePoint, LatticePolytope};
use super::ToricError;

/// A nonempty face, recorded by the indices of its vertices and of the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
    pub facets: Vec<usize>,
}

fn affine_dim(points: &[&LatticePoint]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    if rest.is_empty() {
        return 0;
    }
    let d = first.dim();
    let diffs: Vec<Vec<BigInt>> = rest.iter().map(|p| p.sub(first)).collect();
    ExactMatrix::from_fn(diffs.len(), d, (), |i, j| Rational::from(diffs[i][j].clone())).rank()
}

/// All nonempty faces of `p`, including `p` itself, ordered by dimension and then by vertex indices.
pub fn faces(p: &LatticePolytope) -> Vec<Face> {
    let vertices = p.vertices();
    let all: BTreeSet<usize> = (0..vertices.len()).collect();
    let facet_sets: Vec<BTreeSet<usize>> =
        p.facets().iter().map(|f| (0..vertices.len()).filter(|&i| f.is_tight(&vertices[i])).collect()).collect();

    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(all.iter().copied().collect());
    let mut frontier: Vec<BTreeSet<usize>> = vec![all];
    while let Some(current) = frontier.pop() {
        for fs in &facet_sets {
            let next: BTreeSet<usize> = current.intersection(fs).copied().collect();
            if next.is_empty() || next.len() == current.len() {
                continue;
            }
            if found.insert(next.iter().copied().collect()) {
                frontier.push(next);
            }
        }
    }

    let mut out: Vec<Face> = found
        .into_iter()
        .map(|vs| {
            let pts: Vec<&LatticePoint> = vs.iter().map(|&i| &vertices[i]).collect();
            let facets = (0..facet_sets.len()).filter(|&j| vs.iter().all(|i| facet_sets[j].contains(i))).collect();
            Face { dim: affine_dim(&pts), vertices: vs, facets }
        })
        .collect();
    out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
    out
}

pub fn faces_of_dim(p: &LatticePolytope, k: usize) -> Vec<Face> {
    faces(p).into_iter().filter(|f| f.dim == k).collect()
}

/// Vertex of the polar dual attached to facet `j`: `normal / (-offset)`.
pub fn dual_vertex(p: &LatticePolytope, j: usize) -> Vec<Rational> {
    let f = &p.facets()[j];
    let scale = Rational::from(-f.offset.clone());
    f.normal.iter().map(|n| Rational::from(n.clone()) / &scale).collect()
}

/// Vertices of the dual face `{y in p* : <x, y> = -1 on the face}`, which are
/// the dual vertices of the facets containing the face.
pub fn dual_face_vertices(p: &LatticePolytope, face: &Face) -> Result<Vec<LatticePoint>, ToricError> {
    face.facets
        .iter()
        .map(|&j| {
            let v = dual_vertex(p, j);
            v.iter()
                .map(Rational::to_integer)
                .collect::<Option<Vec<_>>>()
                .map(LatticePoint::new)
                .ok_or(ToricError::NonIntegralDual(v))
        })
        .collect()
}

fn cross(a: &[BigInt; 2], b: &[BigInt; 2]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Normalized area of a lattice polygon given by its vertices: twice its
/// Euclidean area measured in the saturated lattice of its affine span, so
/// a unimodular triangle has area 1.
pub fn normalized_area(vertices: &[LatticePoint]) -> Result<BigInt, ToricError> {
    let refs: Vec<&LatticePoint> = vertices.iter().collect();
    let dim = affine_dim(&refs);
    if dim != 2 {
        return Err(ToricError::NotPolygon(dim));
    }
    let origin = &vertices[0];
    let diffs: Vec<Vec<BigInt>> = vertices[1..].iter().map(|v| v.sub(origin)).collect();
    let basis = saturated_row_basis(&IntMatrix::from_rows(diffs.clone()).expect("equal lengths"));
    debug_assert_eq!(basis.len(), 2);
    // Coordinates c with c_0 b_0 + c_1 b_1 = diff.
    let d = origin.dim();
    let bt = ExactMatrix::from_fn(d, 2, (), |i, j| Rational::from(basis[j][i].clone()));
    let mut planar: Vec<[BigInt; 2]> = vec![[BigInt::zero(), BigInt::zero()]];
    for diff in &diffs {
        let rhs: Vec<Rational> = diff.iter().cloned().map(Rational::from).collect();
        let c = bt.solve(&rhs).expect("difference lies in its own span");
        let c0 = c[0].to_integer().expect("saturated basis gives integer coordinates");
        let c1 = c[1].to_integer().expect("saturated basis gives integer coordinates");
        planar.push([c0, c1]);
    }
    // Fan triangulation from the lexicographically lowest vertex, others sorted by angle.
    let start = (0..planar.len()).min_by(|&a, &b| planar[a].cmp(&planar[b])).expect("nonempty");
    let pivot = planar[start].clone();
    let mut rest: Vec<[BigInt; 2]> = planar
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != start)
        .map(|(_, q)| [&q[0] - &pivot[0], &q[1] - &pivot[1]])
        .collect();
    rest.sort_by(|a, b| match cross(a, b).sign() {
        num_bigint::Sign::Plus => Ordering::Less,
        num_bigint::Sign::Minus => Ordering::Greater,
        num_bigint::Sign::NoSign => (&a[0] * &a[0] + &a[1] * &a[1]).cmp(&(&b[0] * &b[0] + &b[1] * &b[1])),
    });
    Ok(rest.windows(2).map(|w| cross(&w[0], &w[1])).sum::<BigInt>().abs())
}

/// Lattice length of the segment between two lattice points.
pub fn edge_length(a: &LatticePoint, b: &LatticePoint) -> BigInt {
    lattice_length(&a.sub(b))
}

/// For a reflexive 4-polytope: each 2-face paired with its dual edge, and
/// each edge paired with its dual 2-face.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FacePairing {
    /// Normalized areas of the 2-faces.
    #[serde(with = "integer_serde::vector")]
    pub two_face_areas: Vec<BigInt>,
    /// Lattice lengths of the dual edges, aligned with `two_face_areas`.
    #[serde(with = "integer_serde::vector")]
    pub dual_edge_lengths: Vec<BigInt>,
    /// Lattice lengths of the edges.
    #[serde(with = "integer_serde::vector")]
    pub edge_lengths: Vec<BigInt>,
    /// Normalized areas of the dual 2-faces, aligned with `edge_lengths`.
    #[serde(with = "integer_serde::vector")]
    pub dual_face_areas: Vec<BigInt>,
}

pub fn face_pairing(p: &LatticePolytope) -> Result<FacePairing, ToricError> {
    if p.ambient_dim() != 4 || !p.is_full_dimensional() {
        return Err(ToricError::NotFourDimensional(p.dim()));
    }
    if !super::is_reflexive(p)?.reflexive {
        return Err(ToricError::NotReflexive);
    }
    let all = faces(p);
    let vertices = p.vertices();
    let mut out = FacePairing::default();
    for face in all.iter().filter(|f| f.dim == 2) {
        let pts: Vec<LatticePoint> = face.vertices.iter().map(|&i| vertices[i].clone()).collect();
        let dual = dual_face_vertices(p, face)?;
        if dual.len() != 2 {
            return Err(ToricError::NotReflexive);
        }
        out.two_face_areas.push(normalized_area(&pts)?);
        out.dual_edge_lengths.push(edge_length(&dual[0], &dual[1]));
    }
    for face in all.iter().filter(|f| f.dim == 1) {
        let (a, b) = (&vertices[face.vertices[0]], &vertices[face.vertices[1]]);
        let dual = dual_face_vertices(p, face)?;
        out.edge_lengths.push(edge_length(a, b));
        out.dual_face_areas.push(normalized_area(&dual)?);
    }
    Ok(out)
}
