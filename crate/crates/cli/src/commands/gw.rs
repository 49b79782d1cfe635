use std::fmt::Write;

use mirror_core::enumerative::{
    build_mirror_map, extract_instantons, yukawa_normalized, EnumerativeError, InstantonTable,
};
use mirror_core::exactnum::Rational;
use serde::Serialize;

use super::Report;
use crate::error::CliError;
use crate::render;

#[derive(Serialize)]
struct GwResult {
    /// `q(z)` coefficients.
    mirror_map: Vec<Rational>,
    /// `z(q)` coefficients.
    inverse_mirror_map: Vec<Rational>,
    /// `kappa(q)` coefficients.
    kappa: Vec<Rational>,
    instantons: InstantonTable,
}

fn classify(e: EnumerativeError) -> CliError {
    match e {
        EnumerativeError::InsufficientOrder { .. } => CliError::Usage(e.to_string()),
        other => CliError::Invariant(other.to_string()),
    }
}

pub fn run(order: usize, dmax: u32) -> Result<Report, CliError> {
    if dmax as usize > order {
        return Err(CliError::Usage(format!("--dmax {dmax} needs --order of at least {dmax}, got {order}")));
    }
    if order < 2 {
        return Err(CliError::Usage("gw needs --order of at least 2".into()));
    }
    let map = build_mirror_map(order).map_err(classify)?;
    let kappa = yukawa_normalized(order).map_err(classify)?;
    let instantons = extract_instantons(&kappa, dmax).map_err(classify)?;
    let result = GwResult {
        mirror_map: map.q_of_z.coefficients().to_vec(),
        inverse_mirror_map: map.z_of_q.coefficients().to_vec(),
        kappa: kappa.coefficients().to_vec(),
        instantons,
    };

    let mut table = String::new();
    let shown = |c: &[Rational]| render::rational_list(&c[..c.len().min(5)]);
    writeln!(table, "q(z)     = {} ...", shown(&result.mirror_map)).unwrap();
    writeln!(table, "z(q)     = {} ...", shown(&result.inverse_mirror_map)).unwrap();
    writeln!(table, "kappa(q) = {} ...", shown(&result.kappa)).unwrap();
    writeln!(table).unwrap();
    let mut rows = vec![vec!["d".to_string(), "n_d".to_string()]];
    rows.extend(result.instantons.n.iter().map(|(d, n)| vec![d.to_string(), n.to_string()]));
    table.push_str(&render::grid(&rows));
    Ok(Report::new("gw", &result, table))
}
