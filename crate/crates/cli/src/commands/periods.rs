use std::fmt::Write;

use mirror_core::exactnum::{NilpotentElement, Rational, Ring};
use mirror_core::kontsevich::{jordan_profile, matrix_order, twist_matrix, MatrixOrder};
use mirror_core::picard_fuchs::{
    apply_operator, frobenius_at_zero, frobenius_at_zero_in, monodromy_at_infinity, monodromy_at_infinity_power_basis,
    monodromy_at_zero, solutions_at_infinity, PFOperator,
};
use serde::Serialize;

use super::Report;
use crate::error::{invariant, CliError};
use crate::render;

#[derive(Serialize)]
struct Residual {
    /// Degree `N` of the ring `Q[a]/(a^N)` the check ran in.
    modulus_degree: usize,
    /// Coefficients in `a` of the residual at `z^a`.
    leading: NilpotentElement,
    /// Whether every higher coefficient vanishes.
    higher_terms_vanish: bool,
}

#[derive(Serialize)]
struct InfinityPeriod {
    exponent: Rational,
    coefficients: Vec<Rational>,
}

#[derive(Serialize)]
struct PeriodsResult {
    /// `Phi_k`, the coefficient of `a^k` in the Frobenius solution, for `k = 0..3`.
    components: Vec<Vec<Rational>>,
    residuals: Vec<Residual>,
    at_infinity: Vec<InfinityPeriod>,
}

fn residual(order: usize, degree: usize) -> Result<Residual, CliError> {
    let bundle = frobenius_at_zero_in(order, degree).map_err(invariant)?;
    let r = apply_operator(&PFOperator::quintic(), bundle.phi());
    Ok(Residual {
        modulus_degree: degree,
        leading: r.coefficient(0),
        higher_terms_vanish: (1..=order).all(|n| r.coefficient(n).is_zero()),
    })
}

pub fn periods(order: usize) -> Result<Report, CliError> {
    let bundle = frobenius_at_zero(order).map_err(invariant)?;
    let components: Vec<Vec<Rational>> = bundle.components().iter().map(|c| c.coefficients().to_vec()).collect();
    let residuals = vec![residual(order, 5)?, residual(order, 4)?];
    let at_infinity = solutions_at_infinity(order)
        .map_err(invariant)?
        .into_iter()
        .map(|s| InfinityPeriod { exponent: s.exponent, coefficients: s.series.coefficients().to_vec() })
        .collect();
    let result = PeriodsResult { components, residuals, at_infinity };

    let mut table = String::new();
    writeln!(table, "Frobenius solution at z = 0, Phi = sum_k Phi_k a^k").unwrap();
    let mut rows = vec![vec!["n".to_string(), "Phi_0".into(), "Phi_1".into(), "Phi_2".into(), "Phi_3".into()]];
    for n in 0..=order {
        let mut row = vec![n.to_string()];
        row.extend(result.components.iter().map(|c| render::rational(&c[n])));
        rows.push(row);
    }
    table.push_str(&render::grid(&rows));
    writeln!(table).unwrap();
    for r in &result.residuals {
        writeln!(
            table,
            "residual in Q[a]/(a^{}): leading {}, higher terms vanish: {}",
            r.modulus_degree,
            render::rational_list(r.leading.coefficients()),
            r.higher_terms_vanish
        )
        .unwrap();
    }
    writeln!(table).unwrap();
    writeln!(table, "solutions at z = infinity, w = 1/z").unwrap();
    for s in &result.at_infinity {
        let shown: Vec<Rational> = s.coefficients.iter().take(4).cloned().collect();
        writeln!(table, "  exponent {}: {} ...", render::rational(&s.exponent), render::rational_list(&shown)).unwrap();
    }

    let mut report = Report::new("periods", &result, table);
    let alpha4 = NilpotentElement::generator(5).pow(4);
    let [deformed, plain] = &result.residuals[..] else { unreachable!("two residuals") };
    if deformed.leading != alpha4
        || !deformed.higher_terms_vanish
        || !plain.leading.is_zero()
        || !plain.higher_terms_vanish
    {
        report.failure = Some(CliError::Invariant("operator residual differs from a^4 z^a".into()));
    }
    Ok(report)
}

#[derive(Serialize)]
struct MonodromyResult {
    at_zero: ZeroMonodromy,
    at_infinity: InfinityMonodromy,
}

#[derive(Serialize)]
struct ZeroMonodromy {
    basis: &'static str,
    matrix: Vec<Vec<Rational>>,
    jordan_profile: Vec<usize>,
    order: MatrixOrder,
    equals_unit_twist: bool,
}

#[derive(Serialize)]
struct InfinityMonodromy {
    basis: &'static str,
    /// Entries in `Q(zeta_5)`, each as coefficients of `1, zeta, zeta^2, zeta^3`.
    matrix: Vec<Vec<[Rational; 4]>>,
    order: MatrixOrder,
    order_in_power_basis: MatrixOrder,
}

const MAX_ORDER: u64 = 60;

pub fn monodromy() -> Result<Report, CliError> {
    let zero = monodromy_at_zero();
    let infinity = monodromy_at_infinity();
    let power = monodromy_at_infinity_power_basis();
    let result = MonodromyResult {
        at_zero: ZeroMonodromy {
            basis: "lambda_power",
            matrix: zero.entries.to_rows(),
            jordan_profile: jordan_profile(&zero.entries),
            order: matrix_order(&zero.entries, MAX_ORDER),
            equals_unit_twist: zero.entries == twist_matrix(1),
        },
        at_infinity: InfinityMonodromy {
            basis: "idempotent",
            matrix: render::cyclotomic_rows(&infinity.entries),
            order: matrix_order(&infinity.entries, MAX_ORDER),
            order_in_power_basis: matrix_order(&power.entries, MAX_ORDER),
        },
    };

    let mut table = String::new();
    writeln!(table, "z = 0, basis 1, l, l^2, l^3 (rows are images)").unwrap();
    table.push_str(&render::rational_matrix(&zero.entries));
    writeln!(table, "  Jordan profile rank (M - I)^k: {}", render::list(&result.at_zero.jordan_profile)).unwrap();
    writeln!(table, "  order: {}", order_text(result.at_zero.order)).unwrap();
    writeln!(table, "  equals twist by O(1): {}", result.at_zero.equals_unit_twist).unwrap();
    writeln!(table).unwrap();
    writeln!(table, "z = infinity, idempotent basis").unwrap();
    table.push_str(&render::cyclotomic_matrix(&infinity.entries));
    writeln!(table, "  order: {}", order_text(result.at_infinity.order)).unwrap();
    writeln!(table, "  order in power basis: {}", order_text(result.at_infinity.order_in_power_basis)).unwrap();

    let mut report = Report::new("monodromy", &result, table);
    if result.at_infinity.order != MatrixOrder::Finite(5) || !result.at_zero.equals_unit_twist {
        report.failure = Some(CliError::Invariant("monodromy orders differ from the expected values".into()));
    }
    Ok(report)
}

pub fn order_text(order: MatrixOrder) -> String {
    match order {
        MatrixOrder::Finite(k) => k.to_string(),
        MatrixOrder::ExceedsMax(k) => format!("> {k}"),
    }
}
