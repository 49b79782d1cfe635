use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactnum::{integer_serde, Rational};
use crate::linalg::ExactMatrix;

use super::ToricError;

/// Point of `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint {
    #[serde(with = "integer_serde::vector")]
    pub coordinates: Vec<BigInt>,
}

impl LatticePoint {
    pub fn new(coordinates: Vec<BigInt>) -> Self {
        LatticePoint { coordinates }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        LatticePoint::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint::new(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn sub(&self, other: &Self) -> Vec<BigInt> {
        self.coordinates.iter().zip(&other.coordinates).map(|(a, b)| a - b).collect()
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Clears denominators and divides by the content, giving a primitive integer vector.
pub(crate) fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Lattice length of an integer vector: the gcd of its entries.
pub fn lattice_length(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Supporting inequality `<normal, x> >= offset` with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    #[serde(with = "integer_serde::vector")]
    pub normal: Vec<BigInt>,
    #[serde(with = "integer_serde::scalar")]
    pub offset: BigInt,
}

impl Facet {
    pub fn value(&self, x: &LatticePoint) -> BigInt {
        dot(&self.normal, &x.coordinates)
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.value(x) >= self.offset
    }

    pub fn is_tight(&self, x: &LatticePoint) -> bool {
        self.value(x) == self.offset
    }
}

/// Affine equation `<normal, x> = value` satisfied by the whole polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullEquation {
    #[serde(with = "integer_serde::vector")]
    pub normal: Vec<BigInt>,
    #[serde(with = "integer_serde::scalar")]
    pub value: BigInt,
}

/// Convex hull of finitely many lattice points, kept as its vertices together
/// with an inequality description relative to its affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
    equations: Vec<HullEquation>,
}

impl Serialize for LatticePolytope {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let points = Vec::<LatticePoint>::deserialize(deserializer)?;
        LatticePolytope::from_points(points).map_err(serde::de::Error::custom)
    }
}

fn rank_of(rows: &[Vec<BigInt>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m = ExactMatrix::from_fn(rows.len(), cols, (), |i, j| Rational::from(rows[i][j].clone()));
    m.rank()
}

/// All `k`-element subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

impl LatticePolytope {
    /// Convex hull of `points`; redundant points are discarded.
    pub fn from_points(points: Vec<LatticePoint>) -> Result<Self, ToricError> {
        let points: Vec<LatticePoint> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let Some(first) = points.first() else {
            return Err(ToricError::Empty);
        };
        let d = first.dim();
        if let Some(bad) = points.iter().find(|p| p.dim() != d) {
            return Err(ToricError::DimensionMismatch { expected: d, found: bad.dim() });
        }
        let diffs: Vec<Vec<BigInt>> = points[1..].iter().map(|p| p.sub(first)).collect();
        let k = rank_of(&diffs, d);

        let equations: Vec<HullEquation> = if diffs.is_empty() {
            (0..d)
                .map(|i| {
                    let mut normal = vec![BigInt::zero(); d];
                    normal[i] = BigInt::one();
                    HullEquation { value: first.coordinates[i].clone(), normal }
                })
                .collect()
        } else {
            let m = ExactMatrix::from_fn(diffs.len(), d, (), |i, j| Rational::from(diffs[i][j].clone()));
            m.nullspace()
                .iter()
                .map(|v| {
                    let normal = primitive(v);
                    HullEquation { value: dot(&normal, &first.coordinates), normal }
                })
                .collect()
        };

        let mut facets = BTreeSet::new();
        if k > 0 {
            for subset in subsets(points.len(), k) {
                let base = &points[subset[0]];
                let mut constraints: Vec<Vec<Rational>> =
                    equations.iter().map(|e| e.normal.iter().cloned().map(Rational::from).collect()).collect();
                constraints.extend(
                    subset[1..]
                        .iter()
                        .map(|&i| points[i].sub(base).into_iter().map(Rational::from).collect::<Vec<_>>()),
                );
                let system = ExactMatrix::from_fn(constraints.len(), d, (), |i, j| constraints[i][j].clone());
                let null = system.nullspace();
                if null.len() != 1 {
                    continue;
                }
                let mut normal = primitive(&null[0]);
                let offset = dot(&normal, &base.coordinates);
                let values: Vec<BigInt> = points.iter().map(|p| dot(&normal, &p.coordinates)).collect();
                let (lo, hi) = (values.iter().all(|v| v >= &offset), values.iter().all(|v| v <= &offset));
                if lo == hi {
                    continue;
                }
                let mut offset = offset;
                if hi {
                    normal.iter_mut().for_each(|x| *x = -&*x);
                    offset = -offset;
                }
                facets.insert(Facet { normal, offset });
            }
        }
        let facets: Vec<Facet> = facets.into_iter().collect();

        let vertices: Vec<LatticePoint> = if k == 0 {
            vec![first.clone()]
        } else {
            points
                .iter()
                .filter(|p| {
                    let tight: Vec<Vec<BigInt>> =
                        facets.iter().filter(|f| f.is_tight(p)).map(|f| f.normal.clone()).collect();
                    let mut rows = tight;
                    rows.extend(equations.iter().map(|e| e.normal.clone()));
                    rank_of(&rows, d) == d
                })
                .cloned()
                .collect()
        };
        Ok(LatticePolytope { ambient_dim: d, dim: k, vertices, facets, equations })
    }

    pub fn from_i64_vertices(rows: &[&[i64]]) -> Result<Self, ToricError> {
        Self::from_points(rows.iter().map(|r| LatticePoint::from_i64(r)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    /// Extreme points in lexicographic order.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn equations(&self) -> &[HullEquation] {
        &self.equations
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        x.dim() == self.ambient_dim
            && self.equations.iter().all(|e| dot(&e.normal, &x.coordinates) == e.value)
            && self.facets.iter().all(|f| f.contains(x))
    }

    /// Whether the origin lies in the relative interior of a full-dimensional polytope.
    pub fn has_interior_origin(&self) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.offset.is_negative())
    }

    /// Axis-aligned bounding box of the vertices.
    pub fn bounding_box(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let lo = (0..self.ambient_dim)
            .map(|i| self.vertices.iter().map(|v| v.coordinates[i].clone()).min().expect("nonempty"))
            .collect();
        let hi = (0..self.ambient_dim)
            .map(|i| self.vertices.iter().map(|v| v.coordinates[i].clone()).max().expect("nonempty"))
            .collect();
        (lo, hi)
    }

    /// The same polytope with its vertices mapped through `f`.
    pub fn map_vertices(&self, f: impl Fn(&LatticePoint) -> LatticePoint) -> Result<Self, ToricError> {
        Self::from_points(self.vertices.iter().map(f).collect())
    }
}

/// All lattice points of `p` in lexicographic order, by scanning the bounding box.
pub fn lattice_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    let (lo, hi) = p.bounding_box();
    let d = p.ambient_dim();
    let mut out = Vec::new();
    let mut current = lo.clone();
    loop {
        let candidate = LatticePoint::new(current.clone());
        if p.contains(&candidate) {
            out.push(candidate);
        }
        // Odometer increment, last coordinate fastest.
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < hi[i] {
                current[i] += 1;
                current[i + 1..].clone_from_slice(&lo[i + 1..]);
                break;
            }
        }
        if d == 0 {
            return out;
        }
    }
}

/// Vertices of `{y : <x, y> >= -1 for all x in p}`, one per facet of `p`.
pub fn polar_dual_vertices(p: &LatticePolytope) -> Result<Vec<Vec<Rational>>, ToricError> {
    if !p.has_interior_origin() {
        return Err(ToricError::OriginNotInterior);
    }
    let mut out: Vec<Vec<Rational>> = p
        .facets()
        .iter()
        .map(|f| {
            let scale = Rational::from(-f.offset.clone());
            f.normal.iter().map(|n| Rational::from(n.clone()) / &scale).collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Polar dual as a lattice polytope; fails when some dual vertex is not integral.
pub fn polar_dual(p: &LatticePolytope) -> Result<LatticePolytope, ToricError> {
    let vertices = polar_dual_vertices(p)?;
    let points = vertices
        .into_iter()
        .map(|v| {
            v.iter()
                .map(|x| x.to_integer())
                .collect::<Option<Vec<_>>>()
                .map(LatticePoint::new)
                .ok_or_else(|| ToricError::NonIntegralDual(v.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    LatticePolytope::from_points(points)
}

/// Outcome of [`is_reflexive`]; the dual vertex list is the certificate either way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityCertificate {
    pub reflexive: bool,
    pub dual_vertices: Vec<Vec<Rational>>,
}

pub fn is_reflexive(p: &LatticePolytope) -> Result<ReflexivityCertificate, ToricError> {
    let dual_vertices = polar_dual_vertices(p)?;
    let reflexive = dual_vertices.iter().all(|v| v.iter().all(Rational::is_integer));
    Ok(ReflexivityCertificate { reflexive, dual_vertices })
}
