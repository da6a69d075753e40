//! Plain `x y z` point lists: one point per line, `#` comments and blank
//! lines ignored.

use std::fmt::Write as _;

use inscribed::geom::Vec3;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum XyzError {
    #[error("line {line}: expected 3 coordinates, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: cannot parse {token:?} as a number")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: coordinates must be finite")]
    NonFinite { line: usize },
}

pub fn parse_xyz(text: &str) -> Result<Vec<Vec3>, XyzError> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(XyzError::FieldCount { line, found: fields.len() });
        }
        let mut c = [0.0; 3];
        for (slot, token) in c.iter_mut().zip(&fields) {
            *slot = token
                .parse::<f64>()
                .map_err(|_| XyzError::BadNumber { line, token: token.to_string() })?;
            if !slot.is_finite() {
                return Err(XyzError::NonFinite { line });
            }
        }
        points.push(Vec3::from(c));
    }
    Ok(points)
}

/// One `x y z` line per point, 15 decimals.
pub fn format_xyz(points: &[Vec3]) -> String {
    let mut out = String::new();
    for p in points {
        let [x, y, z] = p.to_array().map(tidy);
        writeln!(out, "{x:.15} {y:.15} {z:.15}").expect("writing to a String");
    }
    out
}

/// Flush rounding noise so it does not print as `-0.000…`.
fn tidy(x: f64) -> f64 {
    if x.abs() < 5e-16 {
        0.0
    } else {
        x
    }
}
