//! JSON input files: Lie algebra and space descriptions.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogEntry, Expected};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Vector;
use crate::rational::{from_qstr, to_qstr, QStr};
use crate::spherical::{translate, BasePoint, WordEntry};
use crate::subspace::Subspace;

pub const SCHEMA_VERSION: u32 = 1;

/// A Lie algebra given by a named type or an explicit Cartan matrix, plus an abelian center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraFile {
    #[serde(default = "schema_version")]
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan_type: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan_matrix: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub center_dim: usize,
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

impl LieAlgebraFile {
    pub fn build(&self) -> Result<LieAlgebra> {
        check_version(self.schema_version)?;
        match (&self.cartan_type, &self.cartan_matrix) {
            (Some(t), None) => LieAlgebra::from_type(t, self.center_dim),
            (None, Some(m)) => LieAlgebra::from_cartan(m.clone(), self.center_dim),
            _ => Err(Error::Parse("give exactly one of cartan_type and cartan_matrix".into())),
        }
    }
}

/// Inline description or a path relative to the space file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LieAlgebraRef {
    Inline(LieAlgebraFile),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    #[serde(default = "schema_version")]
    pub schema_version: u32,
    pub name: String,
    pub lie_algebra: LieAlgebraRef,
    /// Basis rows of the reference subalgebra, ambient coordinates.
    pub subalgebra: Vec<Vec<QStr>>,
    #[serde(default)]
    pub base_point_word: Vec<WordEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claims: Option<Expected>,
}

fn check_version(v: u32) -> Result<()> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::Parse(format!("unsupported schema_version {v} (expected {SCHEMA_VERSION})")))
    }
}

/// A parsed space: algebra, reference subalgebra, base point and optional claims.
#[derive(Clone, Debug)]
pub struct Space {
    pub name: String,
    pub algebra: LieAlgebraFile,
    pub g: LieAlgebra,
    pub point: BasePoint,
    pub claims: Option<Expected>,
}

impl Space {
    pub fn from_file_contents(text: &str, base_dir: Option<&Path>) -> Result<Space> {
        let file: SpaceFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("space file: {e}")))?;
        check_version(file.schema_version)?;
        let algebra = match &file.lie_algebra {
            LieAlgebraRef::Inline(a) => a.clone(),
            LieAlgebraRef::Path(p) => {
                let path = base_dir.map(|d| d.join(p)).unwrap_or_else(|| p.into());
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
            }
        };
        let g = algebra.build()?;
        let rows: Vec<Vector> = file.subalgebra.iter().map(|r| from_qstr(r)).collect();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != g.dim() {
                return Err(Error::Parse(format!("subalgebra row {i} has length {} (expected {})", r.len(), g.dim())));
            }
        }
        let h = Subspace::span(g.dim(), &rows);
        let point = translate(&g, &h, &file.base_point_word)?;
        Ok(Space { name: file.name, algebra, g, point, claims: file.claims })
    }

    pub fn load(path: &Path) -> Result<Space> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Space::from_file_contents(&text, path.parent())
    }

    pub fn from_catalog(entry: &CatalogEntry) -> Result<Space> {
        let algebra = LieAlgebraFile {
            schema_version: SCHEMA_VERSION,
            cartan_type: Some(entry.cartan_type.to_string()),
            cartan_matrix: None,
            center_dim: entry.center_dim,
        };
        let g = algebra.build()?;
        let h = Subspace::span(g.dim(), &entry.rows);
        let point = translate(&g, &h, &entry.base_point_word)?;
        Ok(Space { name: entry.name.to_string(), algebra, g, point, claims: Some(entry.expected.clone()) })
    }

    /// Catalog name or path to a space file.
    pub fn resolve(source: &str) -> Result<Space> {
        match crate::catalog::entry(source) {
            Ok(e) => Space::from_catalog(&e),
            Err(_) if Path::new(source).exists() => Space::load(Path::new(source)),
            Err(_) => Err(Error::Parse(format!("{source:?} is neither a catalog entry nor a readable file"))),
        }
    }
}

/// Exports a catalog entry in the space-file schema.
pub fn export_entry(entry: &CatalogEntry) -> SpaceFile {
    SpaceFile {
        schema_version: SCHEMA_VERSION,
        name: entry.name.to_string(),
        lie_algebra: LieAlgebraRef::Inline(LieAlgebraFile {
            schema_version: SCHEMA_VERSION,
            cartan_type: Some(entry.cartan_type.to_string()),
            cartan_matrix: None,
            center_dim: entry.center_dim,
        }),
        subalgebra: entry.rows.iter().map(|r| to_qstr(r)).collect(),
        base_point_word: entry.base_point_word.clone(),
        claims: Some(entry.expected.clone()),
    }
}
