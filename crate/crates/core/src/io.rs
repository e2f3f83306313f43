//! JSON file formats and report serialization.
//!
//! Scalars are serialized as exact literal strings, never JSON numbers, so
//! nothing is lost for any field. Saving is canonical: object keys are
//! sorted, scalars are in canonical form, and the byte output of
//! `save(load(f))` equals `f` for files already in canonical form.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{
    BracketTensor, EndoSets, Grading, Kind, LabelSet, MultiAlgebra,
};
use crate::axioms::{CheckResult, VerificationReport, Witness};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::ideals::ClassificationVerdict;
use crate::linear::{Matrix, Subspace};
use crate::modules::ModuleRep;
use crate::search::CensusReport;
use crate::Result;

// --- file schemas --------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum FieldDto {
    Q,
    Fp { p: u32 },
}

impl FieldDto {
    pub fn to_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldDto::Q => Ok(FieldSpec::Rationals),
            FieldDto::Fp { p } => FieldSpec::prime(*p),
        }
    }

    pub fn from_spec(f: FieldSpec) -> FieldDto {
        match f {
            FieldSpec::Rationals => FieldDto::Q,
            FieldSpec::PrimeField(p) => FieldDto::Fp { p },
        }
    }
}

pub type MatrixDto = Vec<Vec<String>>;
pub type TensorDto = Vec<Vec<Vec<String>>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndosDto {
    pub sigma: Vec<MatrixDto>,
    pub sigma_ring: Vec<MatrixDto>,
    pub sigma_check: Vec<MatrixDto>,
}

/// On-disk form of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldDto,
    pub dim: usize,
    pub labels: Vec<String>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<u8>>,
    pub brackets: BTreeMap<String, TensorDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endos: Option<EndosDto>,
}

/// A module file names its algebra either by relative path or inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraFile),
}

/// On-disk form of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub algebra: AlgebraRef,
    pub carrier_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier_grading: Option<Vec<u8>>,
    pub f: BTreeMap<String, Vec<MatrixDto>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<BTreeMap<String, Vec<MatrixDto>>>,
}

/// On-disk form of a subspace (spanning rows; canonicalized on load).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub ambient_dim: usize,
    pub rows: Vec<Vec<String>>,
}

// --- conversions ---------------------------------------------------------

fn scalars_from_strings(row: &[String], field: FieldSpec) -> Result<Vec<Scalar>> {
    row.iter().map(|s| Scalar::parse(s, field)).collect()
}

fn matrix_from_dto(dto: &MatrixDto, rows: usize, cols: usize, field: FieldSpec) -> Result<Matrix> {
    if dto.len() != rows {
        return Err(Error::SchemaError(format!(
            "matrix has {} rows, expected {rows}",
            dto.len()
        )));
    }
    let data = dto
        .iter()
        .map(|r| {
            if r.len() != cols {
                return Err(Error::SchemaError(format!(
                    "matrix row has {} entries, expected {cols}",
                    r.len()
                )));
            }
            scalars_from_strings(r, field)
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(data, cols, field)
}

pub fn matrix_to_dto(m: &Matrix) -> MatrixDto {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(Scalar::to_string).collect())
        .collect()
}

fn tensor_from_dto(dto: &TensorDto, dim: usize, field: FieldSpec) -> Result<BracketTensor> {
    if dto.len() != dim {
        return Err(Error::SchemaError(format!(
            "tensor has {} planes, expected {dim}",
            dto.len()
        )));
    }
    let mut t = BracketTensor::zero(dim, field);
    for (i, plane) in dto.iter().enumerate() {
        if plane.len() != dim {
            return Err(Error::SchemaError(format!(
                "tensor plane {i} has {} rows, expected {dim}",
                plane.len()
            )));
        }
        for (j, row) in plane.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::SchemaError(format!(
                    "tensor row ({i},{j}) has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (l, s) in row.iter().enumerate() {
                t.set(i, j, l, Scalar::parse(s, field)?);
            }
        }
    }
    Ok(t)
}

pub fn tensor_to_dto(t: &BracketTensor) -> TensorDto {
    let n = t.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|l| t.get(i, j, l).to_string()).collect())
                .collect()
        })
        .collect()
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<MultiAlgebra> {
    let field = file.field.to_spec()?;
    let labels = LabelSet::new(file.labels.clone())?;
    let kind = Kind::from_str(&file.kind)?;
    if file.brackets.len() != labels.len() {
        return Err(Error::SchemaError(format!(
            "{} bracket entries for {} labels",
            file.brackets.len(),
            labels.len()
        )));
    }
    let mut brackets = Vec::with_capacity(labels.len());
    for name in labels.names() {
        let dto = file.brackets.get(name).ok_or_else(|| {
            Error::SchemaError(format!("missing bracket tensor for label {name:?}"))
        })?;
        brackets.push(tensor_from_dto(dto, file.dim, field)?);
    }
    let grading = file
        .grading
        .as_ref()
        .map(|bits| Grading::from_bits(bits))
        .transpose()?;
    let endos = file
        .endos
        .as_ref()
        .map(|e| -> Result<EndoSets> {
            let conv = |set: &[MatrixDto]| -> Result<Vec<Matrix>> {
                set.iter()
                    .map(|m| matrix_from_dto(m, file.dim, file.dim, field))
                    .collect()
            };
            Ok(EndoSets {
                sigma: conv(&e.sigma)?,
                sigma_ring: conv(&e.sigma_ring)?,
                sigma_check: conv(&e.sigma_check)?,
            })
        })
        .transpose()?;
    MultiAlgebra::new(field, file.dim, labels, kind, brackets, grading, endos)
}

pub fn algebra_to_file(a: &MultiAlgebra) -> AlgebraFile {
    AlgebraFile {
        field: FieldDto::from_spec(a.field()),
        dim: a.dim(),
        labels: a.labels().names().to_vec(),
        kind: a.kind().as_str().to_string(),
        grading: a.grading().map(Grading::bits),
        brackets: a
            .labels()
            .names()
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), tensor_to_dto(a.bracket(i))))
            .collect(),
        endos: a.endos().map(|e| EndosDto {
            sigma: e.sigma.iter().map(matrix_to_dto).collect(),
            sigma_ring: e.sigma_ring.iter().map(matrix_to_dto).collect(),
            sigma_check: e.sigma_check.iter().map(matrix_to_dto).collect(),
        }),
    }
}

fn family_from_dto(
    dto: &BTreeMap<String, Vec<MatrixDto>>,
    algebra: &MultiAlgebra,
    carrier_dim: usize,
    which: &str,
) -> Result<Vec<Vec<Matrix>>> {
    if dto.len() != algebra.labels().len() {
        return Err(Error::SchemaError(format!(
            "{which} has {} label entries for {} labels",
            dto.len(),
            algebra.labels().len()
        )));
    }
    let mut fam = Vec::with_capacity(algebra.labels().len());
    for name in algebra.labels().names() {
        let mats = dto.get(name).ok_or_else(|| {
            Error::SchemaError(format!("missing {which} maps for label {name:?}"))
        })?;
        if mats.len() != algebra.dim() {
            return Err(Error::SchemaError(format!(
                "{which}[{name}] has {} matrices, expected one per basis vector ({})",
                mats.len(),
                algebra.dim()
            )));
        }
        fam.push(
            mats.iter()
                .map(|m| matrix_from_dto(m, carrier_dim, carrier_dim, algebra.field()))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(fam)
}

fn family_to_dto(fam: &[Vec<Matrix>], labels: &LabelSet) -> BTreeMap<String, Vec<MatrixDto>> {
    labels
        .names()
        .iter()
        .enumerate()
        .map(|(i, name)| {
            (
                name.clone(),
                fam[i].iter().map(matrix_to_dto).collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// Builds a representation from a module file; `base_dir` resolves a
/// relative algebra path.
pub fn module_from_file(file: &ModuleFile, base_dir: &Path) -> Result<ModuleRep> {
    let algebra = match &file.algebra {
        AlgebraRef::Inline(f) => algebra_from_file(f)?,
        AlgebraRef::Path(p) => load_algebra(&base_dir.join(p))?.1,
    };
    let f = family_from_dto(&file.f, &algebra, file.carrier_dim, "f")?;
    let g = file
        .g
        .as_ref()
        .map(|g| family_from_dto(g, &algebra, file.carrier_dim, "g"))
        .transpose()?;
    let carrier_grading = file
        .carrier_grading
        .as_ref()
        .map(|bits| Grading::from_bits(bits))
        .transpose()?;
    ModuleRep::new(algebra, file.carrier_dim, carrier_grading, f, g)
}

pub fn module_to_file(rep: &ModuleRep, algebra: AlgebraRef) -> ModuleFile {
    ModuleFile {
        algebra,
        carrier_dim: rep.carrier_dim(),
        carrier_grading: rep.carrier_grading().map(Grading::bits),
        f: family_to_dto(rep.f_family(), rep.algebra().labels()),
        g: rep
            .g_family()
            .map(|g| family_to_dto(g, rep.algebra().labels())),
    }
}

pub fn subspace_from_file(file: &SubspaceFile, field: FieldSpec) -> Result<Subspace> {
    let rows = file
        .rows
        .iter()
        .map(|r| {
            if r.len() != file.ambient_dim {
                return Err(Error::SchemaError(format!(
                    "subspace row has {} entries, expected {}",
                    r.len(),
                    file.ambient_dim
                )));
            }
            scalars_from_strings(r, field)
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(&rows, file.ambient_dim, field)
}

// --- canonical save/load --------------------------------------------------

/// Canonical JSON text: sorted keys via the DTO maps, two-space indent, one
/// trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable DTO");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::ParseError(format!("{what}: {e}")))
}

pub fn load_algebra(path: &Path) -> Result<(AlgebraFile, MultiAlgebra)> {
    let file: AlgebraFile = parse_json(&read(path)?, "algebra file")?;
    let algebra = algebra_from_file(&file)?;
    Ok((file, algebra))
}

pub fn load_module(path: &Path) -> Result<(ModuleFile, ModuleRep)> {
    let file: ModuleFile = parse_json(&read(path)?, "module file")?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let rep = module_from_file(&file, base)?;
    Ok((file, rep))
}

pub fn load_subspace(path: &Path, field: FieldSpec) -> Result<(SubspaceFile, Subspace)> {
    let file: SubspaceFile = parse_json(&read(path)?, "subspace file")?;
    let s = subspace_from_file(&file, field)?;
    Ok((file, s))
}

pub fn save(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

// --- report serialization --------------------------------------------------

pub fn witness_to_json(w: &Witness, labels: &LabelSet) -> Value {
    json!({
        "labels": w.labels.iter().map(|&i| labels.name(i).to_string()).collect::<Vec<_>>(),
        "basis": w.basis,
        "endos": w.endos,
        "lhs": w.lhs.iter().map(Scalar::to_string).collect::<Vec<_>>(),
        "rhs": w.rhs.iter().map(Scalar::to_string).collect::<Vec<_>>(),
    })
}

pub fn check_to_json(c: &CheckResult, labels: &LabelSet) -> Value {
    json!({
        "name": c.name,
        "pass": c.pass,
        "witness": c.witness.as_ref().map(|w| witness_to_json(w, labels)),
    })
}

pub fn report_to_json(r: &VerificationReport, labels: &LabelSet) -> Value {
    Value::Array(r.checks.iter().map(|c| check_to_json(c, labels)).collect())
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    json!({
        "ambient_dim": s.ambient_dim(),
        "dim": s.dim(),
        "rows": (0..s.dim())
            .map(|r| s.basis().row(r).iter().map(Scalar::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn verdict_to_json(v: &ClassificationVerdict) -> Value {
    json!({
        "distinguished": v.distinguished.iter().map(subspace_to_json).collect::<Vec<_>>(),
        "i": v.i,
        "simple": v.simple,
        "offending": v.offending.as_ref().map(subspace_to_json),
        "exhaustive": v.exhaustive,
    })
}

pub fn census_to_json(r: &CensusReport) -> Value {
    json!({
        "kind": r.kind.as_str(),
        "dim": r.dim,
        "field": format!("F{}", r.p),
        "labels": r.labels,
        "alternating": r.alternating,
        "grading": r.grading,
        "per_label_candidates": r.per_label_candidates,
        "total_candidates": r.total_candidates,
        "single_label_survivors": r.single_label_survivors,
        "passing": r.passing,
        "passing_nontrivial": r.passing_nontrivial,
        "annihilator_dim_histogram": r.annihilator_dim_histogram,
        "adjoint_checked": r.adjoint_checked,
        "adjoint_check_failures": r.adjoint_check_failures,
        "adjoint_check_failures_nontrivial": r.adjoint_check_failures_nontrivial,
        "adjoint_failure_indices": r.adjoint_failure_indices,
        "positives_reverified": r.positives_reverified,
        "negatives_certified": r.negatives_certified,
        "witnesses_sound": r.witnesses_sound,
        "first_passing_index": r.first_passing_index,
        "first_nontrivial_index": r.first_nontrivial_index,
    })
}
