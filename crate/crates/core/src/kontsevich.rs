//! Even cohomology of the quintic, its characteristic classes, and the
//! cohomological shadows of the two autoequivalences: tensoring with
//! `O(1)` and the spherical twist along the structure sheaf.
//!
//! All matrices act on row vectors of coordinates in `1, l, l^2, l^3`:
//! row `i` is the image of `l^i`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactnum::{Field, NilpotentElement, Rational, Ring};
use crate::linalg::ExactMatrix;

/// `int l^3` on the quintic.
pub const DEGREE: i64 = 5;

/// Element `g_0 + g_1 l + g_2 l^2 + g_3 l^3` of `Q[l]/(l^4)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CohomologyElement {
    pub components: [Rational; 4],
}

impl CohomologyElement {
    pub fn new(components: [Rational; 4]) -> Self {
        CohomologyElement { components }
    }

    pub fn zero() -> Self {
        Self::new(Default::default())
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// `l^k`; zero for `k >= 4`.
    pub fn basis(k: usize) -> Self {
        let mut c: [Rational; 4] = Default::default();
        if k < 4 {
            c[k] = Rational::one();
        }
        Self::new(c)
    }

    pub fn from_integers(c: [i64; 4]) -> Self {
        Self::new(c.map(Rational::from))
    }

    pub fn component(&self, k: usize) -> &Rational {
        &self.components[k]
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.components.clone().map(|c| c * s))
    }

    /// `int g = 5 g_3`.
    pub fn integrate(&self) -> Rational {
        &self.components[3] * Rational::from(DEGREE)
    }

    /// `e^{k l}`.
    pub fn exp_multiple(k: i64) -> Self {
        let e =
            NilpotentElement::linear(Rational::from(k), Rational::zero(), 4).exp_nilpotent().expect("k l is nilpotent");
        Self::new(std::array::from_fn(|i| e.coefficient(i)))
    }

    fn as_nilpotent(&self) -> NilpotentElement {
        NilpotentElement::from_coefficients(self.components.to_vec(), 4).expect("four components fit degree 4")
    }

    fn from_nilpotent(n: &NilpotentElement) -> Self {
        Self::new(std::array::from_fn(|i| n.coefficient(i)))
    }

    pub fn inverse(&self) -> Option<Self> {
        self.as_nilpotent().inv().map(|n| Self::from_nilpotent(&n))
    }
}

impl Add for &CohomologyElement {
    type Output = CohomologyElement;
    fn add(self, rhs: Self) -> CohomologyElement {
        CohomologyElement::new(std::array::from_fn(|i| &self.components[i] + &rhs.components[i]))
    }
}

impl Sub for &CohomologyElement {
    type Output = CohomologyElement;
    fn sub(self, rhs: Self) -> CohomologyElement {
        CohomologyElement::new(std::array::from_fn(|i| &self.components[i] - &rhs.components[i]))
    }
}

impl Neg for &CohomologyElement {
    type Output = CohomologyElement;
    fn neg(self) -> CohomologyElement {
        CohomologyElement::new(std::array::from_fn(|i| -&self.components[i]))
    }
}

impl Mul for &CohomologyElement {
    type Output = CohomologyElement;
    fn mul(self, rhs: Self) -> CohomologyElement {
        let mut out = CohomologyElement::zero();
        for i in 0..4 {
            for j in 0..4 - i {
                out.components[i + j] += &(&self.components[i] * &rhs.components[j]);
            }
        }
        out
    }
}

/// Chern classes `c_k` (stored as full cohomology elements concentrated in
/// degree `2k`) and the Todd class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicClasses {
    pub c1: CohomologyElement,
    pub c2: CohomologyElement,
    pub c3: CohomologyElement,
    pub todd: CohomologyElement,
}

impl CharacteristicClasses {
    pub fn total_chern(&self) -> CohomologyElement {
        &(&(&CohomologyElement::one() + &self.c1) + &self.c2) + &self.c3
    }

    /// Topological Euler characteristic `int c_3`.
    pub fn euler_characteristic(&self) -> Rational {
        self.c3.integrate()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KontsevichError {
    #[error("ambient projective space must have dimension 4, got {0}")]
    UnsupportedAmbient(usize),
    #[error("hypersurface degree must be positive")]
    NonPositiveDegree,
}

fn graded_part(x: &CohomologyElement, k: usize) -> CohomologyElement {
    CohomologyElement::basis(k).scale(x.component(k))
}

/// Chern classes of a degree-`d` hypersurface in `P^{ambient_dim}` by adjunction:
/// `c(X) = (1 + l)^{n+1} / (1 + d l)`. Classes are expressed in the
/// hyperplane class; only the threefold case `ambient_dim = 4` is supported.
pub fn chern_from_adjunction(
    hypersurface_degree: i64,
    ambient_dim: usize,
) -> Result<CharacteristicClasses, KontsevichError> {
    if ambient_dim != 4 {
        return Err(KontsevichError::UnsupportedAmbient(ambient_dim));
    }
    if hypersurface_degree <= 0 {
        return Err(KontsevichError::NonPositiveDegree);
    }
    let one_plus_l = CohomologyElement::from_integers([1, 1, 0, 0]);
    let mut tangent_of_ambient = CohomologyElement::one();
    for _ in 0..=ambient_dim {
        tangent_of_ambient = &tangent_of_ambient * &one_plus_l;
    }
    let normal = CohomologyElement::from_integers([1, hypersurface_degree, 0, 0]);
    let total = &tangent_of_ambient * &normal.inverse().expect("unit constant term");
    let mut classes = CharacteristicClasses {
        c1: graded_part(&total, 1),
        c2: graded_part(&total, 2),
        c3: graded_part(&total, 3),
        todd: CohomologyElement::one(),
    };
    classes.todd = todd_class(&classes);
    Ok(classes)
}

/// `1 + c1/2 + (c1^2 + c2)/12 + c1 c2 / 24`.
pub fn todd_class(c: &CharacteristicClasses) -> CohomologyElement {
    let half = Rational::new(1, 2);
    let twelfth = Rational::new(1, 12);
    let twenty_fourth = Rational::new(1, 24);
    let quadratic = &(&c.c1 * &c.c1) + &c.c2;
    let mut t = &CohomologyElement::one() + &c.c1.scale(&half);
    t = &t + &quadratic.scale(&twelfth);
    &t + &(&c.c1 * &c.c2).scale(&twenty_fourth)
}

/// Wedging with `e^{k l}`.
pub fn twist_matrix(k: i64) -> ExactMatrix<Rational> {
    let e = CohomologyElement::exp_multiple(k);
    let rows = (0..4).map(|i| (&CohomologyElement::basis(i) * &e).components.to_vec()).collect();
    ExactMatrix::from_rows(rows, ())
}

/// `g -> g - (int g Todd) 1`.
pub fn spherical_matrix(todd: &CohomologyElement) -> ExactMatrix<Rational> {
    let rows = (0..4)
        .map(|i| {
            let g = CohomologyElement::basis(i);
            let pairing = (&g * todd).integrate();
            (&g - &CohomologyElement::one().scale(&pairing)).components.to_vec()
        })
        .collect();
    ExactMatrix::from_rows(rows, ())
}

/// Result of [`matrix_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum MatrixOrder {
    Finite(u64),
    ExceedsMax(u64),
}

impl MatrixOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            MatrixOrder::Finite(k) => Some(k),
            MatrixOrder::ExceedsMax(_) => None,
        }
    }
}

/// Smallest `k <= max_order` with `M^k = I`.
pub fn matrix_order<R: Ring>(m: &ExactMatrix<R>, max_order: u64) -> MatrixOrder {
    assert!(m.is_square(), "matrix_order needs a square matrix");
    let mut power = m.clone();
    for k in 1..=max_order {
        if power.is_identity() {
            return MatrixOrder::Finite(k);
        }
        power = power.mul(m);
    }
    MatrixOrder::ExceedsMax(max_order)
}

/// `rank (M - I)^k` for `k = 1..n`.
pub fn jordan_profile<F: Field>(m: &ExactMatrix<F>) -> Vec<usize> {
    assert!(m.is_square(), "jordan_profile needs a square matrix");
    let n = m.nrows();
    let shifted = m.sub(&ExactMatrix::identity(n, m.params().clone()));
    let mut power = shifted.clone();
    let mut ranks = Vec::with_capacity(n);
    for _ in 0..n {
        ranks.push(power.rank());
        power = power.mul(&shifted);
    }
    ranks
}

/// Bundle of the quintic's matrices as emitted by the command line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KontsevichReport {
    pub twist: ExactMatrix<Rational>,
    pub spherical: ExactMatrix<Rational>,
    pub product: ExactMatrix<Rational>,
    pub product_order: MatrixOrder,
    pub twist_jordan_profile: Vec<usize>,
    pub spherical_jordan_profile: Vec<usize>,
    pub classes: CharacteristicClasses,
}

pub fn quintic_report(max_order: u64) -> KontsevichReport {
    let classes = chern_from_adjunction(5, 4).expect("quintic in P^4");
    let twist = twist_matrix(1);
    let spherical = spherical_matrix(&classes.todd);
    let product = twist.mul(&spherical);
    KontsevichReport {
        product_order: matrix_order(&product, max_order),
        twist_jordan_profile: jordan_profile(&twist),
        spherical_jordan_profile: jordan_profile(&spherical),
        twist,
        spherical,
        product,
        classes,
    }
}
