//! Point clouds and distance matrices from CSV.
//!
//! Point-cloud rows are coordinates, optionally preceded by a
//! non-numeric id in the first column; distances are Euclidean. Matrix
//! mode expects a square numeric matrix in row order.

use std::path::Path;

use finitetop_core::FiniteMetricSpace;

use crate::error::{AppError, AppResult};

fn records(path: &Path) -> AppResult<Vec<Vec<String>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(false)
        .from_path(path)
        .map_err(|e| AppError::io(format!("cannot read {}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| {
            AppError::io(format!("{}: row {}: {e}", path.display(), i + 1))
        })?;
        rows.push(rec.iter().map(|f| f.to_string()).collect());
    }
    if rows.is_empty() {
        return Err(AppError::io(format!("{}: no data rows", path.display())));
    }
    Ok(rows)
}

fn parse_number(field: &str, place: &str) -> AppResult<f64> {
    field
        .parse::<f64>()
        .map_err(|_| AppError::io(format!("field {place}: `{field}` is not a number")))
}

pub fn load_point_cloud(path: &Path) -> AppResult<FiniteMetricSpace> {
    let rows = records(path)?;
    let labelled = rows[0]
        .first()
        .is_some_and(|f| f.parse::<f64>().is_err());
    let mut ids = Vec::with_capacity(rows.len());
    let mut points: Vec<Vec<f64>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let (id, coords) = if labelled {
            (row[0].clone(), &row[1..])
        } else {
            (format!("p{i}"), &row[..])
        };
        ids.push(id);
        points.push(
            coords
                .iter()
                .enumerate()
                .map(|(j, f)| parse_number(f, &format!("row {} col {}", i + 1, j + 1)))
                .collect::<AppResult<_>>()?,
        );
    }
    let width = points[0].len();
    if width == 0 || points.iter().any(|p| p.len() != width) {
        return Err(AppError::io(format!(
            "{}: rows must all have the same nonzero coordinate count",
            path.display()
        )));
    }
    let n = points.len();
    let dist: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    points[i]
                        .iter()
                        .zip(points[j].iter())
                        .map(|(a, b)| (a - b) * (a - b))
                        .sum::<f64>()
                        .sqrt()
                })
                .collect()
        })
        .collect();
    Ok(FiniteMetricSpace::new(&ids, &dist)?)
}

pub fn load_distance_matrix(path: &Path, tol: f64) -> AppResult<FiniteMetricSpace> {
    let rows = records(path)?;
    let n = rows.len();
    let mut dist = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(AppError::io(format!(
                "{}: matrix row {} has {} entries, expected {n}",
                path.display(),
                i + 1,
                row.len()
            )));
        }
        dist.push(
            row.iter()
                .enumerate()
                .map(|(j, f)| parse_number(f, &format!("row {} col {}", i + 1, j + 1)))
                .collect::<AppResult<Vec<f64>>>()?,
        );
    }
    let ids: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    Ok(FiniteMetricSpace::with_options(&ids, &dist, tol, false)?)
}
