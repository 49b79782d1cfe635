use std::fmt::Write;
use std::path::Path;

use mirror_core::exactnum::{integer_serde, Rational};
use mirror_core::glsm::{
    complex_invariant, group_from_charges, in_charge_lattice, invariant_coordinates, kahler_parameter,
    transpose_mirror, verify_factorization, ChargeFactorization, ExponentMatrix, FactorizationReport, GroupData,
};
use mirror_core::toric::gorenstein_check;
use mirror_core::IntMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::Report;
use crate::error::{input, CliError};
use crate::input::read_json;
use crate::render;

#[derive(Deserialize)]
struct TripleInput {
    p: IntMatrix,
    s: IntMatrix,
    t: IntMatrix,
}

#[derive(Serialize)]
struct Side {
    p: IntMatrix,
    s: IntMatrix,
    t: IntMatrix,
    factorization: FactorizationReport,
    group: GroupData,
    /// Exponent vectors of the invariant Laurent monomials in the coefficients.
    #[serde(with = "integer_serde::rows")]
    invariant_coordinates: Vec<Vec<BigInt>>,
    gorenstein: Option<Gorenstein>,
}

#[derive(Serialize)]
struct Gorenstein {
    mu: Vec<Rational>,
    nu: Vec<Rational>,
    pairing: Rational,
}

#[derive(Serialize)]
struct TransposeResult {
    original: Side,
    mirror: Side,
}

fn side(p: &ExponentMatrix, f: &ChargeFactorization) -> Result<Side, CliError> {
    let factorization = verify_factorization(p, f).map_err(input)?;
    let gorenstein = gorenstein_check(p).ok().map(|w| Gorenstein { mu: w.mu, nu: w.nu, pairing: w.pairing });
    Ok(Side {
        p: p.entries().clone(),
        s: f.s.clone(),
        t: f.t.clone(),
        factorization,
        group: group_from_charges(&f.t),
        invariant_coordinates: invariant_coordinates(p),
        gorenstein,
    })
}

fn describe(out: &mut String, title: &str, s: &Side) {
    writeln!(out, "{title}").unwrap();
    writeln!(out, "P =").unwrap();
    out.push_str(&render::int_matrix(&s.p));
    writeln!(
        out,
        "P = S T: {} (rank {}, inner dimension {})",
        s.factorization.valid, s.factorization.rank, s.factorization.inner_dim
    )
    .unwrap();
    let g = &s.group.structure;
    let torsion: Vec<String> = g.torsion.iter().map(|d| format!(" x Z/{d}")).collect();
    writeln!(out, "group: U(1)^{}{}", g.torus_rank, torsion.concat()).unwrap();
    for c in &s.group.torus_generators {
        writeln!(out, "  torus charges {}", render::list(c)).unwrap();
    }
    for c in &s.group.torsion_generators {
        writeln!(out, "  torsion angles {}", render::rational_list(c)).unwrap();
    }
    for v in &s.invariant_coordinates {
        writeln!(out, "invariant monomial exponents {}", render::list(v)).unwrap();
    }
}

pub fn transpose(path: Option<&Path>) -> Result<Report, CliError> {
    let (p, f) = match path {
        None => (ExponentMatrix::quintic(), ChargeFactorization::quintic()),
        Some(path) => {
            let raw: TripleInput = read_json(path)?;
            (ExponentMatrix::new(raw.p).map_err(input)?, ChargeFactorization { s: raw.s, t: raw.t })
        }
    };
    let original = side(&p, &f)?;
    if !original.factorization.valid {
        let m = &original.factorization.mismatches;
        return Err(CliError::Invariant(format!(
            "P = S T fails at {} entries (rank {}, inner dimension {})",
            m.len(),
            original.factorization.rank,
            original.factorization.inner_dim
        )));
    }
    let (p_hat, f_hat) = transpose_mirror(&p, &f).map_err(|e| CliError::Invariant(e.to_string()))?;
    let result = TransposeResult { original, mirror: side(&p_hat, &f_hat)? };
    let mut table = String::new();
    describe(&mut table, "original", &result.original);
    writeln!(table).unwrap();
    describe(&mut table, "mirror", &result.mirror);
    Ok(Report::new("glsm transpose", &result, table))
}

#[derive(Deserialize)]
struct KahlerInput {
    magnitudes: Vec<f64>,
    #[serde(default)]
    charges: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    branches: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct KahlerResult {
    charges: Vec<Vec<i64>>,
    /// Components of `r`, 12 significant digits.
    r: Vec<String>,
    /// Whether `r` lies in the lattice spanned by the characters, to 1e-9.
    in_charge_lattice: bool,
    /// Real and imaginary parts of the complexified parameter, 12 significant digits.
    complexified: Vec<[String; 2]>,
}

pub fn kahler(path: &Path) -> Result<Report, CliError> {
    let raw: KahlerInput = read_json(path)?;
    let charges = match raw.charges {
        Some(c) => c,
        None => group_from_charges(&ChargeFactorization::quintic().t).characters(),
    };
    if let Some(width) = charges.first().map(Vec::len) {
        if charges.iter().any(|c| c.len() != width) {
            return Err(CliError::Input("charge vectors must all have the same length".into()));
        }
    }
    let r = kahler_parameter(&raw.magnitudes, &charges).map_err(input)?;
    let branches = raw.branches.unwrap_or_else(|| vec![0; charges.len()]);
    let coefficients: Vec<Complex64> = raw.magnitudes.iter().map(|&m| Complex64::new(m, 0.0)).collect();
    let t = complex_invariant(&coefficients, &branches, &charges).map_err(input)?;
    let result = KahlerResult {
        in_charge_lattice: in_charge_lattice(&r, &charges, 1e-9),
        r: r.iter().map(|&x| render::significant12(x)).collect(),
        complexified: t.iter().map(|z| [render::significant12(z.re), render::significant12(z.im)]).collect(),
        charges,
    };
    let mut table = String::new();
    writeln!(table, "r = {}", render::list(&result.r)).unwrap();
    writeln!(table, "in charge lattice: {}", result.in_charge_lattice).unwrap();
    for [re, im] in &result.complexified {
        writeln!(table, "t = {re} + {im} i").unwrap();
    }
    Ok(Report::new("glsm kahler", &result, table))
}
