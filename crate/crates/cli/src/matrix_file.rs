//! JSON matrix files: `{"dims": [m, n], "re": [[...]], "im": [[...]]}`.
//!
//! Numbers are written in shortest round-trip form, so writing and reading
//! back reproduces every entry bit for bit.

use std::fs;
use std::path::Path;

use realign_core::{BipartiteDims, Complex64, ComplexMatrix, DensityMatrix};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub dims: [usize; 2],
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

/// Realigned (rectangular) matrix written by `realign --out`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlainMatrix {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl PlainMatrix {
    pub fn from_matrix(mat: &ComplexMatrix) -> Self {
        let (re, im) = split_parts(mat);
        Self {
            rows: mat.rows(),
            cols: mat.cols(),
            re,
            im,
        }
    }
}

fn split_parts(mat: &ComplexMatrix) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let re = (0..mat.rows()).map(|i| mat.row(i).iter().map(|z| z.re).collect()).collect();
    let im = (0..mat.rows()).map(|i| mat.row(i).iter().map(|z| z.im).collect()).collect();
    (re, im)
}

impl MatrixFile {
    pub fn from_state(rho: &DensityMatrix) -> Self {
        let dims = rho.dims();
        let (re, im) = split_parts(rho.matrix());
        Self {
            dims: [dims.m, dims.n],
            re,
            im,
        }
    }

    /// Checks shapes against `dims` and assembles the complex matrix.
    pub fn to_matrix(&self) -> Result<(BipartiteDims, ComplexMatrix), String> {
        let [m, n] = self.dims;
        let dims = BipartiteDims::new(m, n).map_err(|e| e.to_string())?;
        let size = dims.total();
        for (name, part) in [("re", &self.re), ("im", &self.im)] {
            if part.len() != size {
                return Err(format!("`{name}` has {} rows, dims ({m}, {n}) need {size}", part.len()));
            }
            if let Some((i, row)) = part.iter().enumerate().find(|(_, row)| row.len() != size) {
                return Err(format!("`{name}` row {i} has {} entries, expected {size}", row.len()));
            }
        }
        let data = self
            .re
            .iter()
            .zip(&self.im)
            .flat_map(|(r, i)| r.iter().zip(i).map(|(&a, &b)| Complex64::new(a, b)))
            .collect();
        let mat = ComplexMatrix::from_row_major(size, size, data).map_err(|e| e.to_string())?;
        Ok((dims, mat))
    }
}

/// A parsed state, with whether its subsystems were swapped into `m <= n` order.
#[derive(Debug, Clone)]
pub struct LoadedState {
    pub state: DensityMatrix,
    pub swapped: bool,
}

pub fn parse_matrix_str(text: &str, path: &Path) -> Result<LoadedState, CliError> {
    let parse_err = |message: String| CliError::Parse {
        path: path.to_path_buf(),
        message,
    };
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let (dims, mat) = file.to_matrix().map_err(parse_err)?;
    let state = DensityMatrix::new(dims, mat).map_err(|source| CliError::Validation {
        path: path.to_path_buf(),
        source,
    })?;
    let (state, swapped) = state.into_canonical();
    Ok(LoadedState { state, swapped })
}

/// Reads and validates a state. Inputs with `m > n` are swapped, with a
/// warning on stderr.
pub fn parse_matrix_file(path: &Path) -> Result<LoadedState, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let loaded = parse_matrix_str(&text, path)?;
    if loaded.swapped {
        let dims = loaded.state.dims();
        eprintln!(
            "warning: {} has m > n; subsystems swapped to dims ({}, {})",
            path.display(),
            dims.m,
            dims.n
        );
    }
    Ok(loaded)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("matrix serializes")
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    fs::write(path, to_json(value) + "\n").map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_matrix_file(path: &Path, rho: &DensityMatrix) -> Result<(), CliError> {
    write_json(path, &MatrixFile::from_state(rho))
}
