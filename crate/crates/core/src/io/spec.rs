//! Algebra specification files (TOML).
//!
//! ```toml
//! kind = "nakayama"
//! field = "Q"
//! shape = "cyclic"
//! kupisch = [5, 6]
//! ```
//!
//! or, for an algebra given by structure constants,
//!
//! ```toml
//! kind = "structure-constants"
//! field = "Fp:7"
//! dim = 3
//! labels = ["e1", "e2", "a"]
//! idempotents = [0, 1]
//!
//! [[products]]
//! left = "e1"
//! right = "e1"
//! terms = [["e1", "1"]]
//! ```
//!
//! `emit` writes the canonical form; `emit(parse(s)) == s` for canonical `s`.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::nakayama::{check_kupisch, nakayama, Shape};
use crate::algebra::{Algebra, AlgebraSpec};
use crate::error::Error;
use crate::linalg::{Field, Fp};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation error in `{field}`: {constraint}")]
    Validation { field: String, constraint: String },
}

impl From<SpecError> for Error {
    fn from(e: SpecError) -> Self {
        Error::Input(e.to_string())
    }
}

fn invalid(field: &str, constraint: impl Into<String>) -> SpecError {
    SpecError::Validation { field: field.into(), constraint: constraint.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Q,
    Fp(u64),
}

impl std::fmt::Display for FieldKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldKind::Q => f.write_str("Q"),
            FieldKind::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        if s == "Q" {
            return Ok(FieldKind::Q);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| invalid("field", format!("expected \"Q\" or \"Fp:<prime>\", got {s:?}")))?;
        if p < 2 || p >= 1 << 32 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(invalid("field", format!("{p} is not a prime below 2^32")));
        }
        Ok(FieldKind::Fp(p))
    }
}

impl FieldKind {
    pub fn characteristic(self) -> u64 {
        match self {
            FieldKind::Q => 0,
            FieldKind::Fp(p) => p,
        }
    }

    /// Fixes the process-wide prime for `Fp`; a no-op for `Q`.
    pub fn activate(self) -> Result<(), Error> {
        if let FieldKind::Fp(p) = self {
            Fp::set_modulus(p).map_err(|e| Error::Input(e.to_string()))?;
        }
        Ok(())
    }
}

/// `left * right = Σ coefficient * label`, coefficients as field text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Product {
    pub left: String,
    pub right: String,
    pub terms: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraKind {
    Nakayama { shape: Shape, kupisch: Vec<usize> },
    StructureConstants {
        labels: Vec<String>,
        idempotents: Vec<usize>,
        vertex_labels: Option<Vec<String>>,
        products: Vec<Product>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpecFile {
    pub name: Option<String>,
    pub field: FieldKind,
    pub algebra: AlgebraKind,
}

/// On-disk layout; every optional key is omitted when absent.
#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    kind: String,
    field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shape: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kupisch: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    idempotents: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex_labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    products: Option<Vec<Product>>,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.chars().count(), |i| before[i + 1..].chars().count()) + 1;
    (line, column)
}

fn require<T>(v: Option<T>, field: &str, kind: &str) -> Result<T, SpecError> {
    v.ok_or_else(|| invalid(field, format!("required for kind {kind:?}")))
}

fn forbid<T>(v: &Option<T>, field: &str, kind: &str) -> Result<(), SpecError> {
    match v {
        Some(_) => Err(invalid(field, format!("not allowed for kind {kind:?}"))),
        None => Ok(()),
    }
}

impl AlgebraSpecFile {
    pub fn nakayama(field: FieldKind, shape: Shape, kupisch: Vec<usize>) -> Self {
        AlgebraSpecFile { name: None, field, algebra: AlgebraKind::Nakayama { shape, kupisch } }
    }

    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let raw: Raw = toml::from_str(text).map_err(|e| {
            let (line, column) = e.span().map_or((1, 1), |s| line_col(text, s.start));
            SpecError::Parse { line, column, message: e.message().to_string() }
        })?;
        let field: FieldKind = raw.field.parse()?;
        let algebra = match raw.kind.as_str() {
            "nakayama" => {
                let k = "nakayama";
                forbid(&raw.dim, "dim", k)?;
                forbid(&raw.labels, "labels", k)?;
                forbid(&raw.idempotents, "idempotents", k)?;
                forbid(&raw.vertex_labels, "vertex_labels", k)?;
                forbid(&raw.products, "products", k)?;
                let shape: Shape = require(raw.shape, "shape", k)?
                    .parse()
                    .map_err(|_| invalid("shape", "must be \"linear\" or \"cyclic\""))?;
                let kupisch = require(raw.kupisch, "kupisch", k)?;
                if let Some(i) = kupisch.iter().position(|&c| c < 1) {
                    return Err(invalid("kupisch", format!("kupisch entries ≥ 1 (entry {} is {})", i + 1, kupisch[i])));
                }
                let kupisch: Vec<usize> = kupisch.into_iter().map(|c| c as usize).collect();
                check_kupisch(&kupisch, shape).map_err(|e| invalid("kupisch", e.to_string()))?;
                AlgebraKind::Nakayama { shape, kupisch }
            }
            "structure-constants" => {
                let k = "structure-constants";
                forbid(&raw.shape, "shape", k)?;
                forbid(&raw.kupisch, "kupisch", k)?;
                let dim = require(raw.dim, "dim", k)?;
                let labels = require(raw.labels, "labels", k)?;
                if labels.len() != dim {
                    return Err(invalid("labels", format!("expected dim = {dim} labels, found {}", labels.len())));
                }
                let mut sorted = labels.clone();
                sorted.sort();
                if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    return Err(invalid("labels", format!("duplicate label {:?}", w[0])));
                }
                let idempotents = require(raw.idempotents, "idempotents", k)?;
                if let Some(&i) = idempotents.iter().find(|&&i| i >= dim) {
                    return Err(invalid("idempotents", format!("index {i} is not below dim = {dim}")));
                }
                if let Some(v) = &raw.vertex_labels {
                    if v.len() != idempotents.len() {
                        return Err(invalid("vertex_labels", "one label per idempotent"));
                    }
                }
                let products = raw.products.unwrap_or_default();
                for (i, p) in products.iter().enumerate() {
                    for l in std::iter::once(&p.left).chain([&p.right]).chain(p.terms.iter().map(|t| &t.0)) {
                        if !labels.contains(l) {
                            return Err(invalid(&format!("products[{i}]"), format!("unknown basis label {l:?}")));
                        }
                    }
                }
                AlgebraKind::StructureConstants { labels, idempotents, vertex_labels: raw.vertex_labels, products }
            }
            other => return Err(invalid("kind", format!("expected \"nakayama\" or \"structure-constants\", got {other:?}"))),
        };
        Ok(AlgebraSpecFile { name: raw.name, field, algebra })
    }

    pub fn read(path: &Path) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SpecError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::parse(&text)
    }

    /// Canonical TOML text.
    pub fn emit(&self) -> String {
        let mut raw = Raw { field: self.field.to_string(), name: self.name.clone(), ..Raw::default() };
        match &self.algebra {
            AlgebraKind::Nakayama { shape, kupisch } => {
                raw.kind = "nakayama".into();
                raw.shape = Some(shape.to_string());
                raw.kupisch = Some(kupisch.iter().map(|&c| c as i64).collect());
            }
            AlgebraKind::StructureConstants { labels, idempotents, vertex_labels, products } => {
                raw.kind = "structure-constants".into();
                raw.dim = Some(labels.len());
                raw.labels = Some(labels.clone());
                raw.idempotents = Some(idempotents.clone());
                raw.vertex_labels = vertex_labels.clone();
                raw.products = (!products.is_empty()).then(|| products.clone());
            }
        }
        toml::to_string(&raw).expect("spec layout is always serializable")
    }

    /// Builds the algebra; `F` must be the field named in the file.
    pub fn build<F: Field>(&self) -> Result<Algebra<F>, Error> {
        if F::characteristic() != self.field.characteristic() {
            return Err(Error::Input(format!("spec asks for {} but the session field is {}", self.field, F::field_name())));
        }
        match &self.algebra {
            AlgebraKind::Nakayama { shape, kupisch } => nakayama(kupisch, *shape),
            AlgebraKind::StructureConstants { labels, idempotents, vertex_labels, products } => {
                let idx = |l: &str| labels.iter().position(|x| x == l).expect("labels validated at parse");
                let mut table = Vec::with_capacity(products.len());
                for (i, p) in products.iter().enumerate() {
                    let terms = p
                        .terms
                        .iter()
                        .map(|(l, c)| {
                            F::parse(c)
                                .map(|c| (idx(l), c))
                                .ok_or_else(|| Error::Input(format!("products[{i}]: cannot read coefficient {c:?} in {}", F::field_name())))
                        })
                        .collect::<Result<Vec<_>, Error>>()?;
                    table.push((idx(&p.left), idx(&p.right), terms));
                }
                Algebra::build(AlgebraSpec {
                    name: self.name.clone().unwrap_or_else(|| "A".into()),
                    labels: labels.clone(),
                    idempotents: idempotents.clone(),
                    vertex_labels: vertex_labels.clone(),
                    table,
                })
            }
        }
    }
}
