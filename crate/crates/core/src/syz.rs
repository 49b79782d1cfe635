//! Combinatorics of torus fibrations: trivalent vertices of the discriminant
//! graph, the mirror exchange `M -> M^{-T}`, the quintic vertex and edge
//! counts, and the elliptic K3 checks.
//!
//! Monodromies act on column vectors of `H^1(T^3, Z) = Z^3`; the action on
//! `H^2 = Lambda^2 H^1` is the inverse transpose.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactnum::integer_serde;
use crate::linalg::{integer_kernel, IntMatrix};
use crate::quintic;
use crate::toric::{face_pairing, ToricError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyzError {
    #[error("monodromy must be a 3x3 integer matrix")]
    NotThreeByThree,
    #[error("monodromy determinant must be 1")]
    NotSpecialLinear,
    #[error("vertex monodromies do not multiply to the identity")]
    ProductCondition,
    #[error("face data lists have different lengths")]
    LengthMismatch,
    #[error("3 (v21 + v12) is odd, so the counts cannot come from a trivalent graph")]
    OddEdgeCount,
    #[error("conjugacy check failed for k = {0}")]
    Conjugacy(i64),
    #[error(transparent)]
    Toric(#[from] ToricError),
}

/// Element of `SL(3, Z)`, the monodromy around one edge of the discriminant graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntMatrix", into = "IntMatrix")]
pub struct UnipotentMonodromy3 {
    entries: IntMatrix,
}

impl TryFrom<IntMatrix> for UnipotentMonodromy3 {
    type Error = SyzError;

    fn try_from(m: IntMatrix) -> Result<Self, SyzError> {
        UnipotentMonodromy3::new(m)
    }
}

impl From<UnipotentMonodromy3> for IntMatrix {
    fn from(m: UnipotentMonodromy3) -> Self {
        m.entries
    }
}

impl UnipotentMonodromy3 {
    pub fn new(entries: IntMatrix) -> Result<Self, SyzError> {
        if entries.nrows() != 3 || entries.ncols() != 3 {
            return Err(SyzError::NotThreeByThree);
        }
        if entries.determinant() != Some(BigInt::one()) {
            return Err(SyzError::NotSpecialLinear);
        }
        Ok(UnipotentMonodromy3 { entries })
    }

    pub fn identity() -> Self {
        UnipotentMonodromy3 { entries: IntMatrix::identity(3) }
    }

    /// The standard edge monodromy `I + E_{12}`.
    pub fn standard_edge() -> Self {
        UnipotentMonodromy3 { entries: IntMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]) }
    }

    /// `I + a b^t`; needs `b . a = 0` for determinant 1.
    pub fn transvection(a: &[BigInt], b: &[BigInt]) -> Result<Self, SyzError> {
        Self::new(IntMatrix::from_fn(3, 3, |i, j| {
            let delta = if i == j { BigInt::one() } else { BigInt::zero() };
            delta + &a[i] * &b[j]
        }))
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        UnipotentMonodromy3 { entries: self.entries.mul(&other.entries).expect("3x3") }
    }

    pub fn inverse(&self) -> Self {
        UnipotentMonodromy3 { entries: self.entries.unimodular_inverse().expect("determinant 1") }
    }

    /// `M^{-T}`, the induced action on `H^2`.
    pub fn inverse_transpose(&self) -> Self {
        UnipotentMonodromy3 { entries: self.inverse().entries.transpose() }
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.entries == IntMatrix::identity(3)
    }

    fn minus_identity(&self) -> IntMatrix {
        IntMatrix::from_fn(3, 3, |i, j| {
            let delta = if i == j { BigInt::one() } else { BigInt::zero() };
            self.entries.get(i, j) - delta
        })
    }

    /// `rank(M - I) = 1` and `(M - I)^2 = 0`: conjugate to the standard edge monodromy.
    pub fn is_edge_monodromy(&self) -> bool {
        let n = self.minus_identity();
        n.rank() == 1 && n.mul(&n).expect("3x3") == IntMatrix::zeros(3, 3)
    }
}

fn common_fixed_dimension(ms: &[UnipotentMonodromy3]) -> usize {
    let rows: Vec<Vec<BigInt>> = ms.iter().flat_map(|m| m.minus_identity().to_rows()).collect();
    3 - IntMatrix::from_rows(rows).expect("3 columns").rank()
}

/// Monodromies around the three edges at a trivalent vertex, stored in a
/// fixed cyclic order with `M_1 M_2 M_3 = I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[UnipotentMonodromy3; 3]", into = "[UnipotentMonodromy3; 3]")]
pub struct VertexData {
    monodromies: [UnipotentMonodromy3; 3],
}

impl TryFrom<[UnipotentMonodromy3; 3]> for VertexData {
    type Error = SyzError;

    fn try_from(m: [UnipotentMonodromy3; 3]) -> Result<Self, SyzError> {
        VertexData::new(m)
    }
}

impl From<VertexData> for [UnipotentMonodromy3; 3] {
    fn from(v: VertexData) -> Self {
        v.monodromies
    }
}

impl VertexData {
    pub fn new(monodromies: [UnipotentMonodromy3; 3]) -> Result<Self, SyzError> {
        let [a, b, c] = &monodromies;
        if !a.mul(b).mul(c).is_identity() {
            return Err(SyzError::ProductCondition);
        }
        Ok(VertexData { monodromies })
    }

    pub fn monodromies(&self) -> &[UnipotentMonodromy3; 3] {
        &self.monodromies
    }

    /// Dimensions of the common fixed subspaces on `H^1` and on `H^2`.
    pub fn fixed_dimensions(&self) -> (usize, usize) {
        let h2: Vec<UnipotentMonodromy3> =
            self.monodromies.iter().map(UnipotentMonodromy3::inverse_transpose).collect();
        (common_fixed_dimension(&self.monodromies), common_fixed_dimension(&h2))
    }

    pub fn conjugate_by(&self, g: &UnipotentMonodromy3) -> Self {
        VertexData { monodromies: self.monodromies.clone().map(|m| m.conjugate_by(g)) }
    }
}

/// Vertex types by the pair (fixed dimension on `H^1`, fixed dimension on `H^2`).
/// Type (2,1) is also called type II and type (1,2) type III.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexType {
    Type21,
    Type12,
    Other,
}

impl VertexType {
    pub fn swapped(self) -> Self {
        match self {
            VertexType::Type21 => VertexType::Type12,
            VertexType::Type12 => VertexType::Type21,
            VertexType::Other => VertexType::Other,
        }
    }
}

pub fn classify_vertex(v: &VertexData) -> VertexType {
    match v.fixed_dimensions() {
        (2, 1) => VertexType::Type21,
        (1, 2) => VertexType::Type12,
        _ => VertexType::Other,
    }
}

/// Replaces every monodromy by its inverse transpose. Since
/// `(ABC)^{-T} = A^{-T} B^{-T} C^{-T}`, the cyclic order is kept.
pub fn mirror_swap(v: &VertexData) -> VertexData {
    VertexData { monodromies: v.monodromies.clone().map(|m| m.inverse_transpose()) }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn random_primitive<R: Rng>(rng: &mut R) -> Vec<BigInt> {
    loop {
        let v: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
        let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 1 {
            return ints(&v);
        }
    }
}

/// Two independent integer vectors orthogonal to `b`, with their negated sum.
fn random_balanced_triple<R: Rng>(rng: &mut R, b: &[BigInt]) -> [Vec<BigInt>; 3] {
    let basis = integer_kernel(&IntMatrix::from_rows(vec![b.to_vec()]).expect("one row"));
    loop {
        let c: Vec<i64> = (0..4).map(|_| rng.gen_range(-2..=2)).collect();
        if c[0] * c[3] - c[1] * c[2] == 0 {
            continue;
        }
        let combo = |x: i64, y: i64| -> Vec<BigInt> { (0..3).map(|i| &basis[0][i] * x + &basis[1][i] * y).collect() };
        let a1 = combo(c[0], c[1]);
        let a2 = combo(c[2], c[3]);
        let a3 = a1.iter().zip(&a2).map(|(x, y)| -(x + y)).collect();
        return [a1, a2, a3];
    }
}

fn random_sl3<R: Rng>(rng: &mut R) -> UnipotentMonodromy3 {
    let mut g = UnipotentMonodromy3::identity();
    for _ in 0..4 {
        let (i, j) = loop {
            let i = rng.gen_range(0..3);
            let j = rng.gen_range(0..3);
            if i != j {
                break (i, j);
            }
        };
        let mut e = IntMatrix::identity(3);
        e.set(i, j, BigInt::from(rng.gen_range(-2..=2)));
        g = g.mul(&UnipotentMonodromy3 { entries: e });
    }
    g
}

/// A random vertex of the requested type (`Type21` or `Type12`), built from
/// transvections `I + a b^t` and then conjugated by a random element of `SL(3, Z)`.
pub fn random_vertex<R: Rng>(rng: &mut R, kind: VertexType) -> VertexData {
    let shared = random_primitive(rng);
    let varying = random_balanced_triple(rng, &shared);
    let monodromies = varying.map(|v| {
        let m = match kind {
            VertexType::Type12 => UnipotentMonodromy3::transvection(&shared, &v),
            _ => UnipotentMonodromy3::transvection(&v, &shared),
        };
        m.expect("orthogonal vectors give determinant 1")
    });
    let v = VertexData::new(monodromies).expect("balanced triple multiplies to I");
    v.conjugate_by(&random_sl3(rng))
}

/// `per_type` vertices of each of the two types from a seeded generator, tagged with the intended type.
pub fn vertex_corpus(per_type: usize, seed: u64) -> Vec<(VertexType, VertexData)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(2 * per_type);
    for _ in 0..per_type {
        out.push((VertexType::Type21, random_vertex(&mut rng, VertexType::Type21)));
        out.push((VertexType::Type12, random_vertex(&mut rng, VertexType::Type12)));
    }
    out
}

/// Vertex and edge counts of the discriminant graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationGraphSummary {
    #[serde(with = "integer_serde::scalar")]
    pub v21: BigInt,
    #[serde(with = "integer_serde::scalar")]
    pub v12: BigInt,
    #[serde(with = "integer_serde::scalar")]
    pub edges: BigInt,
}

/// Counts from face data of a reflexive pair: every unit triangle of a
/// 2-face contributes one (2,1) vertex per lattice step of the dual edge, and
/// every lattice step of an edge contributes one (1,2) vertex per unit
/// triangle of the dual 2-face.
pub fn quintic_graph_counts(
    two_face_triangle_counts: &[BigInt],
    dual_edge_lengths: &[BigInt],
    edge_lattice_lengths: &[BigInt],
    dual_face_triangle_counts: &[BigInt],
) -> Result<FibrationGraphSummary, SyzError> {
    if two_face_triangle_counts.len() != dual_edge_lengths.len()
        || edge_lattice_lengths.len() != dual_face_triangle_counts.len()
    {
        return Err(SyzError::LengthMismatch);
    }
    let v21: BigInt = two_face_triangle_counts.iter().zip(dual_edge_lengths).map(|(a, l)| a * l).sum();
    let v12: BigInt = edge_lattice_lengths.iter().zip(dual_face_triangle_counts).map(|(l, a)| l * a).sum();
    let trivalent: BigInt = (&v21 + &v12) * 3;
    if trivalent.is_odd() {
        return Err(SyzError::OddEdgeCount);
    }
    Ok(FibrationGraphSummary { edges: trivalent / 2, v21, v12 })
}

/// The counts for the quintic, from the face data of its Newton polytope and the dual simplex.
pub fn quintic_fibration_counts() -> Result<FibrationGraphSummary, SyzError> {
    let data = face_pairing(&quintic::newton_polytope())?;
    quintic_graph_counts(&data.two_face_areas, &data.dual_edge_lengths, &data.edge_lengths, &data.dual_face_areas)
}

/// An elliptic K3 with semistable fibres `I_{k_i}` has `sum k_i = 24`.
pub fn k3_semistable_check(ks: &[u64]) -> bool {
    ks.iter().sum::<u64>() == 24
}

/// `C` in `SL(2, Z)` with `C M^{-T} C^{-1} = M` for `M = (1 k; 0 1)`, verified exactly.
pub fn sl2_mirror_selfconjugacy(k: i64) -> Result<IntMatrix, SyzError> {
    let m = IntMatrix::from_i64_rows(&[&[1, k], &[0, 1]]);
    let c = if k == 0 { IntMatrix::identity(2) } else { IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]) };
    let m_inv_t = m.unimodular_inverse().expect("unipotent").transpose();
    let c_inv = c.unimodular_inverse().expect("determinant 1");
    let conj = c.mul(&m_inv_t).and_then(|x| x.mul(&c_inv)).expect("2x2");
    if conj != m {
        return Err(SyzError::Conjugacy(k));
    }
    Ok(c)
}
