use std::fmt::Write;

use mirror_core::kontsevich::{quintic_report, MatrixOrder};
use mirror_core::quintic;

use super::periods::order_text;
use super::Report;
use crate::error::CliError;
use crate::render;

pub fn run() -> Result<Report, CliError> {
    let report = quintic_report(60);
    let mut table = String::new();
    writeln!(table, "twist by O(1), T").unwrap();
    table.push_str(&render::rational_matrix(&report.twist));
    writeln!(table, "spherical twist by O, S").unwrap();
    table.push_str(&render::rational_matrix(&report.spherical));
    writeln!(table, "T S").unwrap();
    table.push_str(&render::rational_matrix(&report.product));
    writeln!(table, "order of T S: {}", order_text(report.product_order)).unwrap();
    writeln!(table, "Jordan profile of T: {}", render::list(&report.twist_jordan_profile)).unwrap();
    writeln!(table, "Jordan profile of S: {}", render::list(&report.spherical_jordan_profile)).unwrap();
    writeln!(table, "Todd class: {}", render::rational_list(&report.classes.todd.components)).unwrap();
    writeln!(table, "Euler characteristic: {}", render::rational(&report.classes.euler_characteristic())).unwrap();

    let mut out = Report::new("kontsevich", &report, table);
    if report.product_order != MatrixOrder::Finite(5) || report.product != quintic::displayed_product() {
        out.failure = Some(CliError::Invariant("T S does not have order 5".into()));
    }
    Ok(out)
}
