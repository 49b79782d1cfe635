use std::fmt::Write;

use mirror_core::exactnum::{CyclotomicElement, Rational, Ring};
use mirror_core::{ExactMatrix, IntMatrix};
use serde::Serialize;
use serde_json::Value;

/// Version of the JSON envelope and of every `result` layout below it.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    command: &'a str,
    order: usize,
    result: &'a Value,
}

pub fn envelope(command: &str, order: usize, result: &Value) -> String {
    let env = Envelope { schema_version: SCHEMA_VERSION, command, order, result };
    let mut s = serde_json::to_string_pretty(&env).expect("values serialize");
    s.push('\n');
    s
}

/// `5`, `-20/3`.
pub fn rational(r: &Rational) -> String {
    format!("{r:?}")
}

/// Element of `Q(zeta_5)` as a polynomial in `zeta`.
pub fn cyclotomic(c: &CyclotomicElement) -> String {
    let mut out = String::new();
    for (k, coefficient) in c.coefficients().iter().enumerate() {
        if coefficient.is_zero() {
            continue;
        }
        let negative = coefficient.is_negative();
        let magnitude = coefficient.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let unit = magnitude.is_one();
        match (k, unit) {
            (0, _) => out.push_str(&rational(&magnitude)),
            (1, true) => out.push_str("zeta"),
            (1, false) => write!(out, "{}*zeta", rational(&magnitude)).unwrap(),
            (_, true) => write!(out, "zeta^{k}").unwrap(),
            (_, false) => write!(out, "{}*zeta^{k}", rational(&magnitude)).unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Right-aligned columns, two spaces apart.
pub fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().enumerate().map(|(j, c)| format!("{c:>w$}", w = widths[j])).collect();
        out.push_str("  ");
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn rational_matrix(m: &ExactMatrix<Rational>) -> String {
    grid(&m.to_rows().iter().map(|r| r.iter().map(rational).collect()).collect::<Vec<_>>())
}

pub fn cyclotomic_matrix(m: &ExactMatrix<CyclotomicElement>) -> String {
    grid(&m.to_rows().iter().map(|r| r.iter().map(cyclotomic).collect()).collect::<Vec<_>>())
}

pub fn int_matrix(m: &IntMatrix) -> String {
    grid(&m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect::<Vec<_>>())
}

pub fn list<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn rational_list(items: &[Rational]) -> String {
    let parts: Vec<String> = items.iter().map(rational).collect();
    format!("({})", parts.join(", "))
}

/// Rows of cyclotomic entries as power-basis coefficient arrays.
pub fn cyclotomic_rows(m: &ExactMatrix<CyclotomicElement>) -> Vec<Vec<[Rational; 4]>> {
    m.to_rows().iter().map(|r| r.iter().map(|c| c.coefficients().clone()).collect()).collect()
}

/// Rounds to 12 significant digits and prints the shortest form of the result.
pub fn significant12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    let s = rounded.to_string();
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_text() {
        assert_eq!(cyclotomic(&CyclotomicElement::zeta_pow(2)), "zeta^2");
        assert_eq!(cyclotomic(&CyclotomicElement::zeta_pow(4)), "-1 - zeta - zeta^2 - zeta^3");
        assert_eq!(cyclotomic(&CyclotomicElement::zero(&())), "0");
    }

    #[test]
    fn twelve_digits() {
        assert_eq!(significant12(5.0), "5");
        assert_eq!(significant12(1.0 / 3.0), "0.333333333333");
        assert_eq!(significant12(-2.0e-13), "-0.0000000000002");
        assert_eq!(significant12(-0.0), "0");
    }
}
