//! Built-in data for the quintic threefold and its mirror.

use crate::exactnum::Rational;
use crate::linalg::{ExactMatrix, IntMatrix};
use crate::toric::LatticePolytope;

/// Vertices of the simplex whose fan gives `P^4`: the standard basis vectors and `-(1,1,1,1)`.
pub const SIMPLEX_VERTICES: [[i64; 4]; 5] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, -1, -1, -1]];

/// Vertices of the Newton polytope of quintic monomials, shifted so that
/// `x_1 x_2 x_3 x_4 x_5` sits at the origin.
pub const NEWTON_VERTICES: [[i64; 4]; 5] =
    [[4, -1, -1, -1], [-1, 4, -1, -1], [-1, -1, 4, -1], [-1, -1, -1, 4], [-1, -1, -1, -1]];

/// Exponents of `c_0 x_1...x_5 + c_1 x_1^5 + ... + c_5 x_5^5` in the
/// variables `(x_0, x_1, ..., x_5)`.
pub const EXPONENT_ROWS: [[i64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [1, 5, 0, 0, 0, 0],
    [1, 0, 5, 0, 0, 0],
    [1, 0, 0, 5, 0, 0],
    [1, 0, 0, 0, 5, 0],
    [1, 0, 0, 0, 0, 5],
];

/// Left factor of the quintic's charge factorization.
pub const LEFT_FACTOR_ROWS: [[i64; 5]; 6] =
    [[1, 1, 1, 1, 1], [1, 5, 0, 0, 0], [1, 0, 5, 0, 0], [1, 0, 0, 5, 0], [1, 0, 0, 0, 5], [1, 0, 0, 0, 0]];

/// Right factor; its kernel is the `U(1)` with charges `(-5, 1, 1, 1, 1, 1)`.
pub const RIGHT_FACTOR_ROWS: [[i64; 6]; 5] =
    [[1, 0, 0, 0, 0, 5], [0, 1, 0, 0, 0, -1], [0, 0, 1, 0, 0, -1], [0, 0, 0, 1, 0, -1], [0, 0, 0, 0, 1, -1]];

/// Number of monomials of degree 5 in five variables.
pub const QUINTIC_MONOMIALS: i64 = 126;

/// `dim GL(5)`, acting on quintic polynomials.
pub const GL5_DIMENSION: i64 = 25;

pub const HODGE_11: i64 = 1;
pub const HODGE_21: i64 = 101;

fn int_matrix<const C: usize>(rows: &[[i64; C]]) -> IntMatrix {
    IntMatrix::from_i64_rows(&rows.iter().map(|r| &r[..]).collect::<Vec<_>>())
}

pub fn exponent_matrix() -> IntMatrix {
    int_matrix(&EXPONENT_ROWS)
}

pub fn left_factor() -> IntMatrix {
    int_matrix(&LEFT_FACTOR_ROWS)
}

pub fn right_factor() -> IntMatrix {
    int_matrix(&RIGHT_FACTOR_ROWS)
}

fn polytope(vertices: &[[i64; 4]]) -> LatticePolytope {
    LatticePolytope::from_i64_vertices(&vertices.iter().map(|r| &r[..]).collect::<Vec<_>>()).expect("simplex")
}

pub fn simplex_polytope() -> LatticePolytope {
    polytope(&SIMPLEX_VERTICES)
}

pub fn newton_polytope() -> LatticePolytope {
    polytope(&NEWTON_VERTICES)
}

fn rational_matrix(rows: [[(i64, i64); 4]; 4]) -> ExactMatrix<Rational> {
    ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&(n, d)| Rational::new(n, d)).collect()).collect(), ())
}

/// Wedging with `e^l` on `1, l, l^2, l^3`, acting on row vectors.
pub fn displayed_twist() -> ExactMatrix<Rational> {
    rational_matrix([
        [(1, 1), (1, 1), (1, 2), (1, 6)],
        [(0, 1), (1, 1), (1, 1), (1, 2)],
        [(0, 1), (0, 1), (1, 1), (1, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 1)],
    ])
}

/// The structure-sheaf reflection `g -> g - (int g Todd) 1`.
pub fn displayed_spherical() -> ExactMatrix<Rational> {
    rational_matrix([
        [(1, 1), (0, 1), (0, 1), (0, 1)],
        [(-25, 6), (1, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 1), (0, 1)],
        [(-5, 1), (0, 1), (0, 1), (1, 1)],
    ])
}

/// Product of the twist and the reflection, a representative of the monodromy around the Fermat point.
pub fn displayed_product() -> ExactMatrix<Rational> {
    rational_matrix([
        [(-4, 1), (1, 1), (1, 2), (1, 6)],
        [(-20, 3), (1, 1), (1, 1), (1, 2)],
        [(-5, 1), (0, 1), (1, 1), (1, 1)],
        [(-5, 1), (0, 1), (0, 1), (1, 1)],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_multiplies_out() {
        assert_eq!(left_factor().mul(&right_factor()), Some(exponent_matrix()));
    }

    #[test]
    fn displayed_product_is_consistent() {
        assert_eq!(displayed_twist().mul(&displayed_spherical()), displayed_product());
    }

    #[test]
    fn simplices_are_mutually_dual() {
        use crate::toric::{lattice_points, polar_dual};
        assert_eq!(polar_dual(&simplex_polytope()).unwrap(), newton_polytope());
        assert_eq!(polar_dual(&newton_polytope()).unwrap(), simplex_polytope());
        assert_eq!(lattice_points(&newton_polytope()).len() as i64, QUINTIC_MONOMIALS);
        assert_eq!(lattice_points(&simplex_polytope()).len(), 6);
    }

    #[test]
    fn newton_vertices_are_shifted_pure_powers() {
        // x_i^5 has exponent 5 e_i; subtracting (1,1,1,1,1) and dropping the last coordinate.
        for (i, v) in NEWTON_VERTICES.iter().enumerate().take(4) {
            for (j, &c) in v.iter().enumerate() {
                assert_eq!(c, if i == j { 4 } else { -1 });
            }
        }
    }
}
