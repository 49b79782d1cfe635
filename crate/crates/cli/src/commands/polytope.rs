use std::fmt::Write;
use std::path::Path;

use mirror_core::exactnum::Rational;
use mirror_core::quintic;
use mirror_core::toric::{
    is_reflexive, lattice_points, moduli_dimension, polar_dual, LatticePoint, LatticePolytope, ToricError,
};
use serde::{Deserialize, Serialize};

use super::Report;
use crate::error::{input, CliError};
use crate::input::read_json;
use crate::render;

#[derive(Deserialize)]
#[serde(untagged)]
enum PolytopeInput {
    Vertices(Vec<LatticePoint>),
    Described {
        vertices: Vec<LatticePoint>,
        /// Dimension of the group acting on the polynomials, for the moduli count.
        #[serde(default)]
        group_dimension: Option<i64>,
    },
}

#[derive(Serialize)]
struct PolytopeResult {
    dimension: usize,
    vertices: Vec<LatticePoint>,
    facet_count: usize,
    lattice_point_count: usize,
    lattice_points: Vec<LatticePoint>,
    reflexive: bool,
    dual_vertices: Vec<Vec<Rational>>,
    dual_lattice_point_count: Option<usize>,
    dual_lattice_points: Option<Vec<LatticePoint>>,
    /// Dual lattice points (monomials) minus the group dimension.
    moduli_dimension: Option<i64>,
}

pub fn run(path: Option<&Path>) -> Result<Report, CliError> {
    let (points, group_dimension) = match path {
        None => (quintic::simplex_polytope().vertices().to_vec(), Some(quintic::GL5_DIMENSION)),
        Some(p) => match read_json::<PolytopeInput>(p)? {
            PolytopeInput::Vertices(v) => (v, None),
            PolytopeInput::Described { vertices, group_dimension } => (vertices, group_dimension),
        },
    };
    let polytope = LatticePolytope::from_points(points).map_err(input)?;
    let certificate = is_reflexive(&polytope).map_err(|e| match e {
        ToricError::OriginNotInterior => CliError::Input("the origin must be an interior point".into()),
        other => input(other),
    })?;
    let points = lattice_points(&polytope);
    let dual_points =
        if certificate.reflexive { Some(lattice_points(&polar_dual(&polytope).map_err(input)?)) } else { None };
    let moduli = match (&dual_points, group_dimension) {
        (Some(d), Some(g)) => Some(moduli_dimension(d.len() as i64, g).map_err(input)?),
        _ => None,
    };
    let result = PolytopeResult {
        dimension: polytope.dim(),
        vertices: polytope.vertices().to_vec(),
        facet_count: polytope.facets().len(),
        lattice_point_count: points.len(),
        lattice_points: points,
        reflexive: certificate.reflexive,
        dual_vertices: certificate.dual_vertices,
        dual_lattice_point_count: dual_points.as_ref().map(Vec::len),
        dual_lattice_points: dual_points,
        moduli_dimension: moduli,
    };

    let mut table = String::new();
    writeln!(table, "dimension: {}", result.dimension).unwrap();
    writeln!(table, "vertices:").unwrap();
    for v in &result.vertices {
        writeln!(table, "  {}", render::list(&v.coordinates)).unwrap();
    }
    writeln!(table, "facets: {}", result.facet_count).unwrap();
    writeln!(table, "lattice points: {}", result.lattice_point_count).unwrap();
    writeln!(table, "reflexive: {}", result.reflexive).unwrap();
    writeln!(table, "dual vertices:").unwrap();
    for v in &result.dual_vertices {
        writeln!(table, "  {}", render::rational_list(v)).unwrap();
    }
    if let Some(n) = result.dual_lattice_point_count {
        writeln!(table, "dual lattice points: {n}").unwrap();
    }
    if let (Some(m), Some(g)) = (result.moduli_dimension, group_dimension) {
        writeln!(table, "moduli dimension: {} - {g} = {m}", result.dual_lattice_point_count.unwrap_or(0)).unwrap();
    }
    Ok(Report::new("polytope", &result, table))
}
