//! Serialization: algebra files, analysis reports, and the catalog manifest.
//!
//! Entries are exact rational literals `p/q` (q > 0, lowest terms) or
//! `{re, im}` pairs of such literals. Writing is canonical, so a
//! write-read-write cycle is byte-identical.

use crate::linrep::LinRep;
use crate::matrix::Matrix;
use crate::repkit::catalog;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid algebra file: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    File(#[from] std::io::Error),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum EntryLit {
    Real(String),
    Complex { re: String, im: String },
}

impl EntryLit {
    pub fn from_scalar(s: &Scalar) -> Self {
        if s.is_real() {
            EntryLit::Real(Scalar::format_rational(&s.re))
        } else {
            EntryLit::Complex {
                re: Scalar::format_rational(&s.re),
                im: Scalar::format_rational(&s.im),
            }
        }
    }

    pub fn to_scalar(&self) -> Result<Scalar, IoError> {
        match self {
            EntryLit::Real(r) => Scalar::parse_rational(r)
                .map(|re| Scalar::new(re, num_rational::BigRational::from_integer(0.into())))
                .ok_or_else(|| IoError::Parse(format!("bad rational literal `{r}`"))),
            EntryLit::Complex { re, im } => {
                let re = Scalar::parse_rational(re)
                    .ok_or_else(|| IoError::Parse(format!("bad rational literal `{re}`")))?;
                let im = Scalar::parse_rational(im)
                    .ok_or_else(|| IoError::Parse(format!("bad rational literal `{im}`")))?;
                Ok(Scalar::new(re, im))
            }
        }
    }
}

pub type Grid = Vec<Vec<EntryLit>>;

/// On-disk form of a linear Lie algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub schema_version: u32,
    pub name: String,
    pub space_dim: usize,
    pub generators: Vec<Grid>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub complex_structure: Option<Grid>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

fn matrix_to_grid(m: &Matrix) -> Grid {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| EntryLit::from_scalar(&m[(i, j)])).collect())
        .collect()
}

fn grid_to_matrix(g: &Grid, n: usize) -> Result<Matrix, IoError> {
    if g.len() != n || g.iter().any(|row| row.len() != n) {
        return Err(IoError::Invalid(format!("grid is not {n} x {n}")));
    }
    let mut m = Matrix::zeros(n, n);
    for (i, row) in g.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            m[(i, j)] = e.to_scalar()?;
        }
    }
    Ok(m)
}

impl AlgebraFile {
    pub fn from_linrep(name: &str, rep: &LinRep) -> Self {
        AlgebraFile {
            schema_version: SCHEMA_VERSION,
            name: name.to_string(),
            space_dim: rep.space_dim(),
            generators: rep.gens().iter().map(matrix_to_grid).collect(),
            complex_structure: rep.complex_structure().map(matrix_to_grid),
            metadata: rep.meta.clone(),
        }
    }

    pub fn to_linrep(&self) -> Result<LinRep, IoError> {
        let n = self.space_dim;
        let gens = self
            .generators
            .iter()
            .map(|g| grid_to_matrix(g, n))
            .collect::<Result<Vec<_>, _>>()?;
        let j = self
            .complex_structure
            .as_ref()
            .map(|g| grid_to_matrix(g, n))
            .transpose()?;
        let mut rep =
            LinRep::new(n, gens, j).map_err(|e| IoError::Invalid(e.to_string()))?;
        rep.meta = self.metadata.clone();
        Ok(rep)
    }

    /// Canonical pretty rendering with a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn read(path: &std::path::Path) -> Result<Self, IoError> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn write(&self, path: &std::path::Path) -> Result<(), IoError> {
        std::fs::write(path, self.to_canonical_json())?;
        Ok(())
    }
}

/// Machine-readable catalog manifest (entries enumerable without models).
#[derive(Clone, Debug, Serialize)]
pub struct CatalogManifest {
    pub schema_version: u32,
    pub entries: Vec<ManifestEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifestEntry {
    pub id: String,
    pub list_part: String,
    pub algebra: String,
    pub rho: String,
    pub dim_formula: String,
    pub dim_is_complex: bool,
    pub conditions: String,
    pub params: Vec<String>,
    pub metadata_only: bool,
    pub author_asserted: bool,
    pub so4_note: bool,
}

pub fn catalog_manifest() -> CatalogManifest {
    let entries = catalog::all_entries()
        .into_iter()
        .map(|e| ManifestEntry {
            id: e.id.to_string(),
            list_part: match e.part {
                catalog::ListPart::A => "A".into(),
                catalog::ListPart::B => "B".into(),
                catalog::ListPart::C => "C".into(),
            },
            algebra: e.algebra.to_string(),
            rho: e.rho.to_string(),
            dim_formula: e.dim_formula.to_string(),
            dim_is_complex: !matches!(e.part, catalog::ListPart::B),
            conditions: e.conditions.to_string(),
            params: e.param_names.iter().map(|s| s.to_string()).collect(),
            metadata_only: e.metadata_only,
            author_asserted: e.author_asserted,
            so4_note: e.so4_note,
        })
        .collect();
    CatalogManifest {
        schema_version: SCHEMA_VERSION,
        entries,
    }
}

/// Pretty JSON with trailing newline (canonical report form).
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repkit::catalog::Params;

    #[test]
    fn round_trip_is_byte_identical() {
        let model =
            catalog::construct_entry("I-A:1", &Params::new().with("m", "1")).unwrap();
        let file = AlgebraFile::from_linrep("gl1c", &model.rep);
        let text = file.to_canonical_json();
        let parsed: AlgebraFile = serde_json::from_str(&text).unwrap();
        let text2 = parsed.to_canonical_json();
        assert_eq!(text, text2);
        let rep = parsed.to_linrep().unwrap();
        assert_eq!(rep.space_dim(), 2);
        assert_eq!(rep.dim(), 2);
    }

    #[test]
    fn bad_literals_are_parse_errors() {
        let lit = EntryLit::Real("1/0".into());
        assert!(lit.to_scalar().is_err());
    }

    #[test]
    fn manifest_covers_all_rows() {
        let m = catalog_manifest();
        assert_eq!(m.entries.len(), 81);
        assert!(m.entries.iter().any(|e| e.id == "I-A:7" && e.metadata_only));
        assert!(m.entries.iter().any(|e| e.id == "V-B:4a" && !e.metadata_only));
    }
}
