use std::fmt::Write;
use std::path::Path;

use mirror_core::kontsevich::chern_from_adjunction;
use mirror_core::quintic;
use mirror_core::syz::{
    classify_vertex, k3_semistable_check, mirror_swap, quintic_fibration_counts, sl2_mirror_selfconjugacy,
    FibrationGraphSummary, VertexData, VertexType,
};
use mirror_core::{IntMatrix, Rational};
use serde::Serialize;

use super::Report;
use crate::error::{invariant, CliError};
use crate::input::read_json;
use crate::render;

fn alias(t: VertexType) -> Option<&'static str> {
    match t {
        VertexType::Type21 => Some("II"),
        VertexType::Type12 => Some("III"),
        VertexType::Other => None,
    }
}

fn label(t: VertexType) -> &'static str {
    match t {
        VertexType::Type21 => "(2,1)",
        VertexType::Type12 => "(1,2)",
        VertexType::Other => "other",
    }
}

#[derive(Serialize)]
struct ClassifyResult {
    vertex_type: VertexType,
    alias: Option<&'static str>,
    /// Common fixed dimensions on `H^1` and `H^2`.
    fixed_dimensions: [usize; 2],
    edge_monodromies: bool,
    mirror: VertexData,
    mirror_type: VertexType,
}

pub fn classify(path: &Path) -> Result<Report, CliError> {
    let vertex: VertexData = read_json(path)?;
    let kind = classify_vertex(&vertex);
    let (h1, h2) = vertex.fixed_dimensions();
    let mirror = mirror_swap(&vertex);
    let mirror_type = classify_vertex(&mirror);
    let result = ClassifyResult {
        vertex_type: kind,
        alias: alias(kind),
        fixed_dimensions: [h1, h2],
        edge_monodromies: vertex.monodromies().iter().all(|m| m.is_edge_monodromy()),
        mirror,
        mirror_type,
    };
    let mut table = String::new();
    let with_alias = |t: VertexType| match alias(t) {
        Some(a) => format!("{} (type {a})", label(t)),
        None => label(t).to_string(),
    };
    writeln!(table, "type: {}", with_alias(kind)).unwrap();
    writeln!(table, "fixed dimensions on H^1, H^2: {h1}, {h2}").unwrap();
    writeln!(table, "all edge monodromies: {}", result.edge_monodromies).unwrap();
    writeln!(table, "mirror type: {}", with_alias(mirror_type)).unwrap();
    for (i, m) in result.mirror.monodromies().iter().enumerate() {
        writeln!(table, "mirror M_{}:", i + 1).unwrap();
        table.push_str(&render::int_matrix(m.entries()));
    }
    let mut report = Report::new("syz classify", &result, table);
    if mirror_type != kind.swapped() {
        report.failure = Some(CliError::Invariant("mirror swap did not exchange the vertex type".into()));
    }
    Ok(report)
}

#[derive(Serialize)]
struct CountsResult {
    counts: FibrationGraphSummary,
    euler_characteristic: Rational,
    hodge_euler_characteristic: Rational,
}

pub fn quintic_counts() -> Result<Report, CliError> {
    let counts = quintic_fibration_counts().map_err(invariant)?;
    let chi = chern_from_adjunction(5, 4).map_err(invariant)?.euler_characteristic();
    let hodge = Rational::from(2 * (quintic::HODGE_11 - quintic::HODGE_21));
    let difference = Rational::from(&counts.v21 - &counts.v12);
    let mut table = String::new();
    writeln!(table, "type (2,1) vertices: {}", counts.v21).unwrap();
    writeln!(table, "type (1,2) vertices: {}", counts.v12).unwrap();
    writeln!(table, "edges: {}", counts.edges).unwrap();
    writeln!(
        table,
        "Euler characteristic: {} (Hodge numbers give {})",
        render::rational(&chi),
        render::rational(&hodge)
    )
    .unwrap();
    let result = CountsResult { counts, euler_characteristic: chi.clone(), hodge_euler_characteristic: hodge.clone() };
    let mut report = Report::new("syz quintic-counts", &result, table);
    if difference != -chi.clone() || chi != hodge {
        report.failure = Some(CliError::Invariant("vertex difference does not match the Euler characteristic".into()));
    }
    Ok(report)
}

#[derive(Serialize)]
struct Conjugacy {
    k: i64,
    conjugator: IntMatrix,
}

#[derive(Serialize)]
struct K3Result {
    fibres: Vec<u64>,
    fibre_sum: u64,
    accepted: bool,
    conjugacy: Vec<Conjugacy>,
}

pub fn k3(fibres: Option<&[u64]>, kmax: i64) -> Result<Report, CliError> {
    let fibres = fibres.map_or_else(|| vec![1; 24], <[u64]>::to_vec);
    let conjugacy = (1..=kmax)
        .map(|k| sl2_mirror_selfconjugacy(k).map(|c| Conjugacy { k, conjugator: c }))
        .collect::<Result<Vec<_>, _>>()
        .map_err(invariant)?;
    let result = K3Result { fibre_sum: fibres.iter().sum(), accepted: k3_semistable_check(&fibres), fibres, conjugacy };
    let mut table = String::new();
    writeln!(table, "fibre sum: {} ({})", result.fibre_sum, if result.accepted { "accepted" } else { "rejected" })
        .unwrap();
    writeln!(table, "C M^-T C^-1 = M verified for k = 1..{kmax}").unwrap();
    if let Some(first) = result.conjugacy.first() {
        writeln!(table, "C =").unwrap();
        table.push_str(&render::int_matrix(&first.conjugator));
    }
    let mut report = Report::new("syz k3", &result, table);
    if !result.accepted {
        report.failure = Some(CliError::Invariant(format!("semistable fibres sum to {}, not 24", result.fibre_sum)));
    }
    Ok(report)
}
