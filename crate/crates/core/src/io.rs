//! JSON documents.
//!
//! Indices in files are 1-based and scalars are strings such as `"3"` or
//! `"-1/2"`. Bracket and cocycle entries are sparse `{args, value}` records;
//! an entry fixes its antisymmetric partner too, so only one of `[1,2]` and
//! `[2,1]` is needed. Giving both with inconsistent values is an error.
//! Matrices are lists of rows, and column `j` is the image of `e_j`.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "dim": 2,
//!   "bracket": [{ "args": [1, 2], "value": ["1", "0"] }],
//!   "triple": [{ "args": [1, 2, 2], "value": ["1", "0"] }],
//!   "operator": { "lambda": "1", "matrix": [["2", "3"], ["0", "-1"]] },
//!   "representation": "adjoint"
//! }
//! ```

use std::collections::HashMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{set_antisymmetric, LyAlgebra, MdlyAlgebra, ModifiedOperator};
use crate::cochain::{CochainShape, LyCochain, MdlyCochain, Part};
use crate::deformation::TruncatedDeformation;
use crate::error::{Error, Result};
use crate::extension::ExtensionCocycle;
use crate::linalg::{format_rational, parse_rational, RatMatrix, Rational};
use crate::representation::{adjoint_representation, Representation};
use crate::tensor::{tuples, Tensor};

pub const SCHEMA_VERSION: u32 = 1;

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub args: Vec<usize>,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixEntry {
    pub args: Vec<usize>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDoc {
    pub lambda: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitRepresentationDoc {
    pub module_dim: usize,
    #[serde(default)]
    pub rho: Vec<MatrixEntry>,
    #[serde(default)]
    pub theta: Vec<MatrixEntry>,
    /// Derived from `rho` and `theta` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dee: Option<Vec<MatrixEntry>>,
    /// Zero when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_v: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepresentationDoc {
    /// Only `"adjoint"` is recognised.
    Named(String),
    Explicit(ExplicitRepresentationDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleDoc {
    #[serde(default)]
    pub nu: Vec<Entry>,
    #[serde(default)]
    pub psi: Vec<Entry>,
    /// `m x n`; all zero when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationTermDoc {
    #[serde(default)]
    pub f: Vec<Entry>,
    #[serde(default)]
    pub g: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationDoc {
    /// Coefficients of `t¹, t², ...`.
    pub terms: Vec<DeformationTermDoc>,
}

/// A cochain of either complex, used for printing representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDoc {
    pub degree: usize,
    #[serde(default)]
    pub f: Vec<Entry>,
    #[serde(default)]
    pub g: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shadow: Option<Box<CochainDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default = "schema_version")]
    pub schema: u32,
    pub dim: usize,
    #[serde(default)]
    pub bracket: Vec<Entry>,
    #[serde(default)]
    pub triple: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CocycleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationSpec {
    Adjoint,
    Explicit(Representation),
}

/// A parsed document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub algebra: LyAlgebra,
    pub operator: Option<ModifiedOperator>,
    pub representation: Option<RepresentationSpec>,
    pub cocycle: Option<ExtensionCocycle>,
    /// `(f_i, g_i, φ_i)` for `i = 1..N`.
    pub deformation: Option<Vec<(Tensor, Tensor, RatMatrix)>>,
}

fn doc_err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Document(format!("{path}: {msg}"))
}

fn scalar(path: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|_| doc_err(path, format!("invalid rational {s:?}")))
}

fn scalars(path: &str, v: &[String], len: usize) -> Result<Vec<Rational>> {
    if v.len() != len {
        return Err(doc_err(path, format!("expected {len} coefficients, found {}", v.len())));
    }
    v.iter().map(|s| scalar(path, s)).collect()
}

fn zero_based(path: &str, args: &[usize], arity: usize, dim: usize) -> Result<Vec<usize>> {
    if args.len() != arity {
        return Err(doc_err(path, format!("expected {arity} indices, found {}", args.len())));
    }
    args.iter()
        .map(|&i| {
            if i == 0 || i > dim {
                Err(doc_err(path, format!("index {i} outside 1..={dim}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// Names the argument tuple, 1-based, with the antisymmetric leading pair in
/// increasing order.
fn conflict_message(idx: &[usize]) -> String {
    let mut args = idx.to_vec();
    if args.len() >= 2 && args[0] > args[1] {
        args.swap(0, 1);
    }
    let shown: Vec<String> = args.iter().map(|i| (i + 1).to_string()).collect();
    format!("antisymmetry conflict at ({})", shown.join(","))
}

/// Dense tensor from sparse entries, antisymmetric in the first two slots.
fn read_tensor(path: &str, entries: &[Entry], dim: usize, arity: usize, out: usize) -> Result<Tensor> {
    let mut t = Tensor::zeros(dim, arity, out);
    let mut set = vec![false; dim.pow(arity as u32)];
    for (k, e) in entries.iter().enumerate() {
        let here = format!("{path}[{k}]");
        let idx = zero_based(&here, &e.args, arity, dim)?;
        let value = scalars(&here, &e.value, out)?;
        set_antisymmetric(&mut t, &mut set, &idx, value, dim).map_err(|err| match err {
            Error::AntisymmetryConflict(_) => Error::Document(conflict_message(&idx)),
            other => other,
        })?;
    }
    Ok(t)
}

fn write_tensor(t: &Tensor) -> Vec<Entry> {
    let n = t.dim();
    tuples(n, t.arity())
        .filter(|w| w[0] < w[1])
        .filter(|w| !t.get(w).iter().all(Zero::is_zero))
        .map(|w| Entry {
            args: w.iter().map(|i| i + 1).collect(),
            value: t.get(&w).iter().map(format_rational).collect(),
        })
        .collect()
}

fn read_matrix(path: &str, rows: &[Vec<String>], nrows: usize, ncols: usize) -> Result<RatMatrix> {
    if rows.len() != nrows {
        return Err(doc_err(path, format!("expected {nrows} rows, found {}", rows.len())));
    }
    let mut data = Vec::with_capacity(nrows);
    for (i, r) in rows.iter().enumerate() {
        data.push(scalars(&format!("{path}[{i}]"), r, ncols)?);
    }
    if nrows == 0 {
        return Ok(RatMatrix::zeros(0, ncols));
    }
    RatMatrix::from_rows(data).map_err(|e| doc_err(path, e))
}

fn write_matrix(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

fn read_matrix_family(
    path: &str,
    entries: &[MatrixEntry],
    arity: usize,
    base: usize,
    module: usize,
) -> Result<Vec<RatMatrix>> {
    let count = base.pow(arity as u32);
    let mut out: Vec<Option<RatMatrix>> = vec![None; count];
    for (k, e) in entries.iter().enumerate() {
        let here = format!("{path}[{k}]");
        let idx = zero_based(&here, &e.args, arity, base)?;
        let slot = idx.iter().fold(0, |acc, &i| acc * base + i);
        if out[slot].is_some() {
            return Err(doc_err(&here, "duplicate entry"));
        }
        out[slot] = Some(read_matrix(&format!("{here}.matrix"), &e.matrix, module, module)?);
    }
    Ok(out
        .into_iter()
        .map(|m| m.unwrap_or_else(|| RatMatrix::zeros(module, module)))
        .collect())
}

fn write_matrix_family(ms: &[RatMatrix], arity: usize, base: usize) -> Vec<MatrixEntry> {
    tuples(base, arity)
        .zip(ms)
        .filter(|(_, m)| !m.is_zero())
        .map(|(w, m)| MatrixEntry {
            args: w.iter().map(|i| i + 1).collect(),
            matrix: write_matrix(m),
        })
        .collect()
}

fn read_cocycle(path: &str, doc: &CocycleDoc, n: usize, m: usize) -> Result<ExtensionCocycle> {
    let nu = read_tensor(&format!("{path}.nu"), &doc.nu, n, 2, m)?;
    let psi = read_tensor(&format!("{path}.psi"), &doc.psi, n, 3, m)?;
    let chi = match &doc.chi {
        Some(rows) => read_matrix(&format!("{path}.chi"), rows, m, n)?,
        None => RatMatrix::zeros(m, n),
    };
    ExtensionCocycle::new(nu, psi, chi)
}

pub fn write_cocycle(c: &ExtensionCocycle) -> CocycleDoc {
    CocycleDoc {
        nu: write_tensor(&c.nu),
        psi: write_tensor(&c.psi),
        chi: Some(write_matrix(&c.chi)),
    }
}

impl AlgebraDocument {
    pub fn into_document(self) -> Result<Document> {
        if self.schema != SCHEMA_VERSION {
            return Err(doc_err("schema", format!("unsupported version {}", self.schema)));
        }
        let n = self.dim;
        let binary = read_tensor("bracket", &self.bracket, n, 2, n)?;
        let ternary = read_tensor("triple", &self.triple, n, 3, n)?;
        let algebra = LyAlgebra::from_tensors(binary, ternary)?;
        let operator = match &self.operator {
            None => None,
            Some(op) => Some(ModifiedOperator::new(
                scalar("operator.lambda", &op.lambda)?,
                read_matrix("operator.matrix", &op.matrix, n, n)?,
            )?),
        };
        let representation = match &self.representation {
            None => None,
            Some(RepresentationDoc::Named(name)) if name == "adjoint" => Some(RepresentationSpec::Adjoint),
            Some(RepresentationDoc::Named(name)) => {
                return Err(doc_err("representation", format!("unknown representation {name:?}")))
            }
            Some(RepresentationDoc::Explicit(r)) => {
                let m = r.module_dim;
                let rho = read_matrix_family("representation.rho", &r.rho, 1, n, m)?;
                let theta = read_matrix_family("representation.theta", &r.theta, 2, n, m)?;
                let phi_v = match &r.phi_v {
                    Some(rows) => read_matrix("representation.phi_v", rows, m, m)?,
                    None => RatMatrix::zeros(m, m),
                };
                let rep = match &r.dee {
                    Some(d) => {
                        let dee = read_matrix_family("representation.dee", d, 2, n, m)?;
                        Representation::new(n, m, rho, theta, dee, phi_v)?
                    }
                    None => Representation::with_derived_dee(&algebra, m, rho, theta, phi_v)?,
                };
                Some(RepresentationSpec::Explicit(rep))
            }
        };
        let module_dim = match &representation {
            Some(RepresentationSpec::Explicit(r)) => r.module_dim(),
            _ => n,
        };
        let cocycle = match &self.cocycle {
            None => None,
            Some(c) => Some(read_cocycle("cocycle", c, n, module_dim)?),
        };
        let deformation = match &self.deformation {
            None => None,
            Some(d) => {
                let mut terms = Vec::with_capacity(d.terms.len());
                for (k, t) in d.terms.iter().enumerate() {
                    let path = format!("deformation.terms[{k}]");
                    let f = read_tensor(&format!("{path}.f"), &t.f, n, 2, n)?;
                    let g = read_tensor(&format!("{path}.g"), &t.g, n, 3, n)?;
                    let phi = match &t.phi {
                        Some(rows) => read_matrix(&format!("{path}.phi"), rows, n, n)?,
                        None => RatMatrix::zeros(n, n),
                    };
                    terms.push((f, g, phi));
                }
                Some(terms)
            }
        };
        Ok(Document {
            algebra,
            operator,
            representation,
            cocycle,
            deformation,
        })
    }
}

impl Document {
    pub fn new(algebra: LyAlgebra) -> Self {
        Self {
            algebra,
            operator: None,
            representation: None,
            cocycle: None,
            deformation: None,
        }
    }

    pub fn from_mdly(a: &MdlyAlgebra) -> Self {
        let mut d = Self::new(a.algebra().clone());
        d.operator = Some(a.operator().clone());
        d
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: AlgebraDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(format!("malformed document: {e}")))?;
        raw.into_document()
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_raw(&self) -> AlgebraDocument {
        let n = self.algebra.dim();
        AlgebraDocument {
            schema: SCHEMA_VERSION,
            dim: n,
            bracket: write_tensor(self.algebra.binary()),
            triple: write_tensor(self.algebra.ternary()),
            operator: self.operator.as_ref().map(|op| OperatorDoc {
                lambda: format_rational(op.lambda()),
                matrix: write_matrix(op.matrix()),
            }),
            representation: self.representation.as_ref().map(|r| match r {
                RepresentationSpec::Adjoint => RepresentationDoc::Named("adjoint".into()),
                RepresentationSpec::Explicit(r) => RepresentationDoc::Explicit(ExplicitRepresentationDoc {
                    module_dim: r.module_dim(),
                    rho: write_matrix_family(r.rho_all(), 1, n),
                    theta: write_matrix_family(r.theta_all(), 2, n),
                    dee: Some(write_matrix_family(r.dee_all(), 2, n)),
                    phi_v: Some(write_matrix(r.phi_v())),
                }),
            }),
            cocycle: self.cocycle.as_ref().map(write_cocycle),
            deformation: self.deformation.as_ref().map(|terms| DeformationDoc {
                terms: terms
                    .iter()
                    .map(|(f, g, phi)| DeformationTermDoc {
                        f: write_tensor(f),
                        g: write_tensor(g),
                        phi: Some(write_matrix(phi)),
                    })
                    .collect(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("documents serialize")
    }

    /// The algebra with its operator; fails when the document has none.
    pub fn mdly(&self) -> Result<MdlyAlgebra> {
        let op = self
            .operator
            .clone()
            .ok_or_else(|| Error::Document("document has no operator block".into()))?;
        MdlyAlgebra::new(self.algebra.clone(), op)
    }

    /// The document's representation, or the adjoint one when `adjoint` is
    /// set or the document names it.
    pub fn representation(&self, adjoint: bool) -> Result<Representation> {
        let a = self.mdly()?;
        match (&self.representation, adjoint) {
            (_, true) | (Some(RepresentationSpec::Adjoint), _) => Ok(adjoint_representation(&a)),
            (Some(RepresentationSpec::Explicit(r)), false) => Ok(r.clone()),
            (None, false) => Err(Error::Document(
                "document has no representation block (pass --adjoint to use the adjoint one)".into(),
            )),
        }
    }

    pub fn truncated_deformation(&self) -> Result<TruncatedDeformation> {
        let terms = self
            .deformation
            .clone()
            .ok_or_else(|| Error::Document("document has no deformation block".into()))?;
        let (mut f, mut g, mut phi) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b, c) in terms {
            f.push(a);
            g.push(b);
            phi.push(c);
        }
        TruncatedDeformation::new(self.mdly()?, f, g, phi)
    }
}

/// A cocycle file: either a bare `{nu, psi, chi}` object or a document with
/// a `cocycle` block.
pub fn parse_cocycle(text: &str, base: usize, module: usize) -> Result<ExtensionCocycle> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Document(format!("malformed cocycle file: {e}")))?;
    let block = match value.get("cocycle") {
        Some(inner) => inner.clone(),
        None => value,
    };
    let doc: CocycleDoc =
        serde_json::from_value(block).map_err(|e| Error::Document(format!("malformed cocycle: {e}")))?;
    read_cocycle("cocycle", &doc, base, module)
}

fn canonical(part: Part, idx: &[usize], degree: usize) -> Option<(Vec<usize>, bool)> {
    if degree == 1 {
        return Some((idx.to_vec(), false));
    }
    let pairs = match part {
        Part::F => idx.len() / 2,
        Part::G => (idx.len() - 1) / 2,
    };
    let mut out = idx.to_vec();
    let mut neg = false;
    for w in 0..pairs {
        if out[2 * w] == out[2 * w + 1] {
            return None;
        }
        if out[2 * w] > out[2 * w + 1] {
            out.swap(2 * w, 2 * w + 1);
            neg = !neg;
        }
    }
    Some((out, neg))
}

fn read_ly_cochain(path: &str, doc: &CochainDoc, base: usize, module: usize) -> Result<LyCochain> {
    let shape = CochainShape::new(base, module, doc.degree).map_err(|e| doc_err(path, e))?;
    let mut c = LyCochain::zero(shape);
    let mut seen: HashMap<(bool, Vec<usize>), Vec<Rational>> = HashMap::new();
    let f_arity = shape.f_arity();
    let blocks = [(Part::F, &doc.f, f_arity, "f"), (Part::G, &doc.g, f_arity + 1, "g")];
    for (part, entries, arity, name) in blocks {
        if part == Part::G && doc.degree == 1 && !entries.is_empty() {
            return Err(doc_err(path, "degree-1 cochains have no g block"));
        }
        for (k, e) in entries.iter().enumerate() {
            let here = format!("{path}.{name}[{k}]");
            let idx = zero_based(&here, &e.args, arity, base)?;
            let value = scalars(&here, &e.value, module)?;
            let Some((canon, neg)) = canonical(part, &idx, doc.degree) else {
                if value.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Document(conflict_message(&idx)));
                }
                continue;
            };
            let signed: Vec<Rational> = if neg { value.iter().map(|x| -x).collect() } else { value.clone() };
            let key = (part == Part::G, canon);
            if let Some(prev) = seen.get(&key) {
                if *prev != signed {
                    return Err(Error::Document(conflict_message(&idx)));
                }
            }
            seen.insert(key, signed);
            c.set(part, &idx, &value);
        }
    }
    Ok(c)
}

fn write_ly_cochain(c: &LyCochain) -> CochainDoc {
    let shape = c.shape();
    let entries = |part: Part, idxs: Vec<Vec<usize>>| -> Vec<Entry> {
        idxs.into_iter()
            .filter_map(|idx| {
                let v = c.value(part, &idx);
                if v.iter().all(Zero::is_zero) {
                    return None;
                }
                Some(Entry {
                    args: idx.iter().map(|i| i + 1).collect(),
                    value: v.iter().map(format_rational).collect(),
                })
            })
            .collect()
    };
    CochainDoc {
        degree: shape.degree(),
        f: entries(Part::F, shape.f_indices()),
        g: entries(Part::G, shape.g_indices()),
        shadow: None,
    }
}

pub fn write_cochain(c: &MdlyCochain) -> CochainDoc {
    let mut doc = write_ly_cochain(c.top());
    doc.shadow = c.shadow().map(|s| Box::new(write_ly_cochain(s)));
    doc
}

pub fn write_ly(c: &LyCochain) -> CochainDoc {
    write_ly_cochain(c)
}

/// Reads an MDLY cochain; a missing `shadow` block is zero.
pub fn read_cochain(doc: &CochainDoc, base: usize, module: usize) -> Result<MdlyCochain> {
    let top = read_ly_cochain("cochain", doc, base, module)?;
    let shadow = if doc.degree >= 2 {
        Some(match &doc.shadow {
            Some(s) => {
                if s.degree + 1 != doc.degree {
                    return Err(doc_err("cochain.shadow", "shadow degree must be one less"));
                }
                read_ly_cochain("cochain.shadow", s, base, module)?
            }
            None => LyCochain::zero(CochainShape::new(base, module, doc.degree - 1)?),
        })
    } else {
        None
    };
    MdlyCochain::new(top, shadow)
}
