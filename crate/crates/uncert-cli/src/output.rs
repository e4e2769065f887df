//! Output envelope and atomic file writing.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use uncert_core::ComplexMatrix;

/// CLI failure classes, mapped to exit codes by `main`.
#[derive(Debug)]
pub enum AppError {
    /// Bad arguments or invalid parameter values (exit 2).
    Usage(String),
    /// Filesystem or serialization failure (exit 3).
    Io(String),
}

/// The versioned JSON wrapper every JSON-producing command emits.
#[derive(Serialize)]
pub struct Envelope<I: Serialize, R: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: I,
    pub results: R,
}

impl<I: Serialize, R: Serialize> Envelope<I, R> {
    pub fn to_json(&self) -> Result<String, AppError> {
        serde_json::to_string_pretty(self)
            .map(|mut text| {
                text.push('\n');
                text
            })
            .map_err(|e| AppError::Io(format!("could not serialize output: {e}")))
    }
}

/// Complex entries as `[re, im]` pairs, row-major.
pub fn matrix_to_pairs(matrix: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..matrix.dim())
        .map(|i| {
            (0..matrix.dim())
                .map(|j| {
                    let entry = matrix[(i, j)];
                    [entry.re, entry.im]
                })
                .collect()
        })
        .collect()
}

/// Writes to stdout, or atomically to a file (temp file in the target
/// directory, then rename).
pub fn write_output(out: Option<&Path>, content: &str) -> Result<(), AppError> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
            let mut temp = match dir {
                Some(dir) => tempfile::NamedTempFile::new_in(dir),
                None => tempfile::NamedTempFile::new_in("."),
            }
            .map_err(|e| AppError::Io(format!("could not create temporary file: {e}")))?;
            temp.write_all(content.as_bytes())
                .map_err(|e| AppError::Io(format!("could not write output: {e}")))?;
            temp.persist(path)
                .map_err(|e| AppError::Io(format!("could not persist {}: {e}", path.display())))?;
            Ok(())
        }
    }
}
