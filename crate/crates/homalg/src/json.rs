//! JSON file formats for every object the library works with, plus
//! canonical deterministic emission.
//!
//! # File schemas
//!
//! *Algebra*: `{"kind": str, "dim": int, "scalars": "rational"|"poly_t",
//! "products": {"mul": [[i, j, k, "scalar"], ...]} or {"left": [...],
//! "right": [...]}, "alpha": [["scalar", ...], ...]}` with `alpha` row-major.
//! Omitted `(i, j, k)` entries are zero; omitted `alpha` means identity;
//! omitted `kind` means `"generic"`; omitted `scalars` means `"rational"`.
//!
//! *Representation*: `{"algebra": inline-object-or-path, "dim_v": int,
//! "rho": [matrix, ...], "beta": matrix}`. A *bimodule* file carries `"ell"`
//! and `"r"` action families instead of `"rho"`, plus a `"flavor"` of
//! `"alternative"` or `"pre_malcev"`.
//!
//! *Operator*: `{"matrix": [[...]], "source": "module"|"algebra",
//! "context": path-or-inline}` where the context is a representation,
//! bimodule, or algebra file. Inline contexts are recognized by shape:
//! `"rho"` means representation, `"ell"` bimodule, `"products"` algebra.
//!
//! *Matrix*: a bare row-major 2-D array, or `{"matrix": [[...]]}`.
//!
//! Relative paths inside a file resolve against the directory containing
//! that file. Scalars are strings in the canonical grammar (`"p"`, `"p/q"`,
//! or polynomials like `"1 - 2*t + t^2"`); bare JSON integers are also
//! accepted on input.
//!
//! Emission is canonical: two-space pretty-printing, alphabetically sorted
//! keys, canonical scalar strings, product entries sorted by `(i, j, k)`
//! with zeros omitted, and a trailing newline — byte-identical across runs.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::algebra::{HomAlgebra, ProductTable, Products};
use crate::corpus::CorpusObject;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::op::OperatorContext;
use crate::rep::{Bimodule, BimoduleFlavor, Representation};
use crate::scalar::Scalar;

/// What a JSON file's top-level shape says it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    /// An algebra file (has `products`).
    Algebra,
    /// A representation file (has `rho`).
    Representation,
    /// A bimodule file (has `ell`).
    Bimodule,
    /// An operator file (has `matrix` plus `source`/`context`).
    Operator,
    /// A bare matrix file.
    Matrix,
}

/// A representation-or-bimodule input, for commands that accept either.
#[derive(Debug, Clone)]
pub enum ModuleInput {
    /// A representation file.
    Representation(Representation),
    /// A bimodule file.
    Bimodule(Bimodule),
}

fn input(msg: String) -> Error {
    Error::Input(msg)
}

/// Attaches a file path to value-level errors that lack one.
fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Io { .. } | Error::File { .. } => e,
        other => Error::File {
            file: path.display().to_string(),
            message: other.to_string(),
        },
    }
}

/// Reads and syntax-checks a JSON file.
///
/// # Errors
/// I/O failure or malformed JSON (with line/column diagnostics).
pub fn read_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    serde_json::from_str(&text).map_err(|e| Error::File {
        file: path.display().to_string(),
        message: format!("invalid JSON: {e}"),
    })
}

/// Classifies a parsed JSON value by its top-level shape.
///
/// # Errors
/// Value whose shape matches no known schema.
pub fn detect_kind(v: &Value) -> Result<FileKind, Error> {
    if v.is_array() {
        return Ok(FileKind::Matrix);
    }
    let Some(obj) = v.as_object() else {
        return Err(input("expected a JSON object or a matrix array".into()));
    };
    if obj.contains_key("rho") {
        Ok(FileKind::Representation)
    } else if obj.contains_key("ell") {
        Ok(FileKind::Bimodule)
    } else if obj.contains_key("products") {
        Ok(FileKind::Algebra)
    } else if obj.contains_key("source") || obj.contains_key("context") {
        Ok(FileKind::Operator)
    } else if obj.contains_key("matrix") {
        Ok(FileKind::Matrix)
    } else {
        Err(input(
            "unrecognized file shape: expected one of the keys \
             \"products\", \"rho\", \"ell\", \"source\", or \"matrix\""
                .into(),
        ))
    }
}

fn as_object<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>, Error> {
    v.as_object()
        .ok_or_else(|| input(format!("{what} must be a JSON object")))
}

fn reject_unknown_keys(
    obj: &Map<String, Value>,
    allowed: &[&str],
    what: &str,
) -> Result<(), Error> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(input(format!(
                "{what}: unknown key {key:?}; allowed keys are {allowed:?}"
            )));
        }
    }
    Ok(())
}

fn scalar_from_value(v: &Value, field: &str) -> Result<Scalar, Error> {
    match v {
        Value::String(s) => {
            Scalar::parse(s).map_err(|e| input(format!("{field}: {e}")))
        }
        Value::Number(n) => n.as_i64().map(Scalar::int).ok_or_else(|| {
            input(format!(
                "{field}: non-integer numbers are not exact; write the scalar as a string"
            ))
        }),
        _ => Err(input(format!("{field}: expected a scalar string"))),
    }
}

fn index_from_value(v: &Value, dim: usize, field: &str) -> Result<usize, Error> {
    let i = v
        .as_u64()
        .ok_or_else(|| input(format!("{field}: expected a basis index")))?;
    let i = usize::try_from(i).map_err(|_| input(format!("{field}: index too large")))?;
    if i >= dim {
        return Err(input(format!(
            "{field}: index {i} out of range for dimension {dim}"
        )));
    }
    Ok(i)
}

fn rows_from_value(v: &Value, field: &str) -> Result<Vec<Vec<Scalar>>, Error> {
    let rows = v
        .as_array()
        .ok_or_else(|| input(format!("{field}: expected an array of rows")))?;
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            let cells = row
                .as_array()
                .ok_or_else(|| input(format!("{field}[{r}]: expected a row array")))?;
            cells
                .iter()
                .enumerate()
                .map(|(c, cell)| scalar_from_value(cell, &format!("{field}[{r}][{c}]")))
                .collect()
        })
        .collect()
}

fn matrix_from_rows(v: &Value, field: &str) -> Result<Matrix, Error> {
    let rows = rows_from_value(v, field)?;
    Matrix::from_rows(rows).map_err(|e| input(format!("{field}: {e}")))
}

fn expect_shape(m: &Matrix, rows: usize, cols: usize, field: &str) -> Result<(), Error> {
    if m.rows() != rows || m.cols() != cols {
        return Err(input(format!(
            "{field}: expected a {rows}x{cols} matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Parses a matrix value: a bare 2-D array or `{"matrix": [[...]]}`.
///
/// # Errors
/// Malformed rows or scalars; ragged rows.
pub fn matrix_from_value(v: &Value) -> Result<Matrix, Error> {
    match v {
        Value::Array(_) => matrix_from_rows(v, "matrix"),
        Value::Object(obj) => {
            reject_unknown_keys(obj, &["matrix"], "matrix file")?;
            let inner = obj
                .get("matrix")
                .ok_or_else(|| input("matrix file: missing key \"matrix\"".into()))?;
            matrix_from_rows(inner, "matrix")
        }
        _ => Err(input("expected a matrix array or {\"matrix\": ...}".into())),
    }
}

fn table_from_entries(v: &Value, dim: usize, field: &str) -> Result<ProductTable, Error> {
    let entries = v
        .as_array()
        .ok_or_else(|| input(format!("{field}: expected an array of [i, j, k, scalar] entries")))?;
    let mut table = ProductTable::zero(dim);
    let mut seen = BTreeSet::new();
    for (n, entry) in entries.iter().enumerate() {
        let here = format!("{field}[{n}]");
        let parts = entry
            .as_array()
            .filter(|p| p.len() == 4)
            .ok_or_else(|| input(format!("{here}: expected [i, j, k, scalar]")))?;
        let i = index_from_value(&parts[0], dim, &format!("{here}[0]"))?;
        let j = index_from_value(&parts[1], dim, &format!("{here}[1]"))?;
        let k = index_from_value(&parts[2], dim, &format!("{here}[2]"))?;
        let value = scalar_from_value(&parts[3], &format!("{here}[3]"))?;
        if !seen.insert((i, j, k)) {
            return Err(input(format!("{here}: duplicate entry ({i}, {j}, {k})")));
        }
        table.set(i, j, k, value);
    }
    Ok(table)
}

/// Parses an algebra value.
///
/// # Errors
/// Missing or malformed fields; indexes out of range; duplicate product
/// entries; a `"scalars": "rational"` declaration contradicted by
/// polynomial entries.
pub fn algebra_from_value(v: &Value) -> Result<HomAlgebra, Error> {
    let obj = as_object(v, "algebra file")?;
    reject_unknown_keys(obj, &["kind", "dim", "scalars", "products", "alpha"], "algebra file")?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .and_then(|d| usize::try_from(d).ok())
        .ok_or_else(|| input("algebra file: \"dim\" must be a positive integer".into()))?;
    if dim == 0 {
        return Err(input("algebra file: \"dim\" must be a positive integer".into()));
    }
    let kind = match obj.get("kind") {
        None => "generic".to_string(),
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(input("algebra file: \"kind\" must be a string".into())),
    };
    let scalars = match obj.get("scalars") {
        None => "rational",
        Some(Value::String(s)) if s == "rational" => "rational",
        Some(Value::String(s)) if s == "poly_t" => "poly_t",
        Some(_) => {
            return Err(input(
                "algebra file: \"scalars\" must be \"rational\" or \"poly_t\"".into(),
            ))
        }
    };
    let products_value = obj
        .get("products")
        .ok_or_else(|| input("algebra file: missing key \"products\"".into()))?;
    let products_obj = as_object(products_value, "\"products\"")?;
    let products = if products_obj.contains_key("mul") {
        reject_unknown_keys(products_obj, &["mul"], "\"products\"")?;
        Products::Single(table_from_entries(
            &products_obj["mul"],
            dim,
            "products.mul",
        )?)
    } else if products_obj.contains_key("left") || products_obj.contains_key("right") {
        reject_unknown_keys(products_obj, &["left", "right"], "\"products\"")?;
        let (Some(left), Some(right)) = (products_obj.get("left"), products_obj.get("right"))
        else {
            return Err(input(
                "\"products\": a product pair needs both \"left\" and \"right\"".into(),
            ));
        };
        Products::Pair {
            left: table_from_entries(left, dim, "products.left")?,
            right: table_from_entries(right, dim, "products.right")?,
        }
    } else {
        return Err(input(
            "\"products\": expected \"mul\" or a \"left\"/\"right\" pair".into(),
        ));
    };
    let alpha = match obj.get("alpha") {
        None => Matrix::identity(dim),
        Some(a) => {
            let m = matrix_from_rows(a, "alpha")?;
            expect_shape(&m, dim, dim, "alpha")?;
            m
        }
    };
    let algebra = HomAlgebra::new(kind, products, alpha)?;
    if scalars == "rational" && algebra.has_poly() {
        return Err(input(
            "algebra file declares \"scalars\": \"rational\" but contains polynomial entries"
                .into(),
        ));
    }
    Ok(algebra)
}

fn algebra_field_from_value(v: &Value, base: &Path) -> Result<HomAlgebra, Error> {
    match v {
        Value::String(path) => read_algebra(&base.join(path)),
        _ => algebra_from_value(v),
    }
}

fn action_family_from_value(
    v: &Value,
    count: usize,
    dim_v: usize,
    field: &str,
) -> Result<Vec<Matrix>, Error> {
    let mats = v
        .as_array()
        .ok_or_else(|| input(format!("{field}: expected an array of matrices")))?;
    if mats.len() != count {
        return Err(input(format!(
            "{field}: expected {count} action matrices (one per basis vector), got {}",
            mats.len()
        )));
    }
    mats.iter()
        .enumerate()
        .map(|(i, m)| {
            let mat = matrix_from_rows(m, &format!("{field}[{i}]"))?;
            expect_shape(&mat, dim_v, dim_v, &format!("{field}[{i}]"))?;
            Ok(mat)
        })
        .collect()
}

fn dim_v_from(obj: &Map<String, Value>, what: &str) -> Result<usize, Error> {
    let dim_v = obj
        .get("dim_v")
        .and_then(Value::as_u64)
        .and_then(|d| usize::try_from(d).ok())
        .ok_or_else(|| input(format!("{what}: \"dim_v\" must be a positive integer")))?;
    if dim_v == 0 {
        return Err(input(format!("{what}: \"dim_v\" must be a positive integer")));
    }
    Ok(dim_v)
}

/// Parses a representation value; `base` resolves a path-valued `algebra`.
///
/// # Errors
/// Missing or malformed fields; dimension mismatches; nested algebra errors.
pub fn representation_from_value(v: &Value, base: &Path) -> Result<Representation, Error> {
    let obj = as_object(v, "representation file")?;
    reject_unknown_keys(obj, &["algebra", "dim_v", "rho", "beta"], "representation file")?;
    let algebra_value = obj
        .get("algebra")
        .ok_or_else(|| input("representation file: missing key \"algebra\"".into()))?;
    let algebra = algebra_field_from_value(algebra_value, base)?;
    let dim_v = dim_v_from(obj, "representation file")?;
    let rho_value = obj
        .get("rho")
        .ok_or_else(|| input("representation file: missing key \"rho\"".into()))?;
    let rho = action_family_from_value(rho_value, algebra.dim(), dim_v, "rho")?;
    let beta_value = obj
        .get("beta")
        .ok_or_else(|| input("representation file: missing key \"beta\"".into()))?;
    let beta = matrix_from_rows(beta_value, "beta")?;
    expect_shape(&beta, dim_v, dim_v, "beta")?;
    Representation::new(algebra, rho, beta)
}

/// Parses a bimodule value; `base` resolves a path-valued `algebra`.
///
/// # Errors
/// Missing or malformed fields; unknown flavor; dimension mismatches.
pub fn bimodule_from_value(v: &Value, base: &Path) -> Result<Bimodule, Error> {
    let obj = as_object(v, "bimodule file")?;
    reject_unknown_keys(
        obj,
        &["algebra", "dim_v", "ell", "r", "beta", "flavor"],
        "bimodule file",
    )?;
    let algebra_value = obj
        .get("algebra")
        .ok_or_else(|| input("bimodule file: missing key \"algebra\"".into()))?;
    let algebra = algebra_field_from_value(algebra_value, base)?;
    let dim_v = dim_v_from(obj, "bimodule file")?;
    let ell_value = obj
        .get("ell")
        .ok_or_else(|| input("bimodule file: missing key \"ell\"".into()))?;
    let ell = action_family_from_value(ell_value, algebra.dim(), dim_v, "ell")?;
    let r_value = obj
        .get("r")
        .ok_or_else(|| input("bimodule file: missing key \"r\"".into()))?;
    let r = action_family_from_value(r_value, algebra.dim(), dim_v, "r")?;
    let beta_value = obj
        .get("beta")
        .ok_or_else(|| input("bimodule file: missing key \"beta\"".into()))?;
    let beta = matrix_from_rows(beta_value, "beta")?;
    expect_shape(&beta, dim_v, dim_v, "beta")?;
    let flavor_str = obj
        .get("flavor")
        .and_then(Value::as_str)
        .ok_or_else(|| input("bimodule file: missing key \"flavor\"".into()))?;
    let flavor = BimoduleFlavor::parse(flavor_str)?;
    Bimodule::new(algebra, ell, r, beta, flavor)
}

fn context_from_value(v: &Value, base: &Path) -> Result<OperatorContext, Error> {
    match v {
        Value::String(path) => {
            let full = base.join(path);
            let value = read_json(&full)?;
            let nested_base = parent_dir(&full);
            context_from_parsed(&value, &nested_base).map_err(|e| in_file(&full, e))
        }
        _ => context_from_parsed(v, base),
    }
}

fn context_from_parsed(v: &Value, base: &Path) -> Result<OperatorContext, Error> {
    match detect_kind(v)? {
        FileKind::Representation => Ok(OperatorContext::Representation(
            representation_from_value(v, base)?,
        )),
        FileKind::Bimodule => Ok(OperatorContext::Bimodule(bimodule_from_value(v, base)?)),
        FileKind::Algebra => Ok(OperatorContext::Algebra(algebra_from_value(v)?)),
        FileKind::Operator | FileKind::Matrix => Err(input(
            "\"context\": expected a representation, bimodule, or algebra".into(),
        )),
    }
}

/// Parses an operator value; `base` resolves a path-valued `context`.
///
/// # Errors
/// Missing or malformed fields; a `source` that contradicts the context
/// shape; an operator matrix whose shape does not match the context.
pub fn operator_from_value(v: &Value, base: &Path) -> Result<(Matrix, OperatorContext), Error> {
    let obj = as_object(v, "operator file")?;
    reject_unknown_keys(obj, &["matrix", "source", "context"], "operator file")?;
    let matrix_value = obj
        .get("matrix")
        .ok_or_else(|| input("operator file: missing key \"matrix\"".into()))?;
    let matrix = matrix_from_rows(matrix_value, "matrix")?;
    let source = obj
        .get("source")
        .and_then(Value::as_str)
        .ok_or_else(|| input("operator file: missing key \"source\"".into()))?;
    let context_value = obj
        .get("context")
        .ok_or_else(|| input("operator file: missing key \"context\"".into()))?;
    let context = context_from_value(context_value, base)?;
    let (dim_a, dim_v) = match &context {
        OperatorContext::Algebra(a) => (a.dim(), a.dim()),
        OperatorContext::Representation(rep) => (rep.algebra.dim(), rep.dim_v()),
        OperatorContext::Bimodule(bm) => (bm.algebra.dim(), bm.dim_v()),
    };
    match source {
        "algebra" => {
            if !matches!(context, OperatorContext::Algebra(_)) {
                return Err(input(
                    "operator file: \"source\": \"algebra\" requires an algebra context".into(),
                ));
            }
            expect_shape(&matrix, dim_a, dim_a, "matrix")?;
        }
        "module" => {
            if matches!(context, OperatorContext::Algebra(_)) {
                return Err(input(
                    "operator file: \"source\": \"module\" requires a representation \
                     or bimodule context"
                        .into(),
                ));
            }
            expect_shape(&matrix, dim_a, dim_v, "matrix")?;
        }
        other => {
            return Err(input(format!(
                "operator file: \"source\" must be \"module\" or \"algebra\", got {other:?}"
            )))
        }
    }
    Ok((matrix, context))
}

fn parent_dir(path: &Path) -> PathBuf {
    path.parent()
        .map_or_else(|| PathBuf::from("."), Path::to_path_buf)
}

/// Reads an algebra file.
///
/// # Errors
/// I/O, syntax, or schema failures, tagged with the path.
pub fn read_algebra(path: &Path) -> Result<HomAlgebra, Error> {
    let v = read_json(path)?;
    algebra_from_value(&v).map_err(|e| in_file(path, e))
}

/// Reads a representation file.
///
/// # Errors
/// I/O, syntax, or schema failures, tagged with the path.
pub fn read_representation(path: &Path) -> Result<Representation, Error> {
    let v = read_json(path)?;
    representation_from_value(&v, &parent_dir(path)).map_err(|e| in_file(path, e))
}

/// Reads a bimodule file.
///
/// # Errors
/// I/O, syntax, or schema failures, tagged with the path.
pub fn read_bimodule(path: &Path) -> Result<Bimodule, Error> {
    let v = read_json(path)?;
    bimodule_from_value(&v, &parent_dir(path)).map_err(|e| in_file(path, e))
}

/// Reads a file that may hold either a representation or a bimodule.
///
/// # Errors
/// I/O, syntax, or schema failures, tagged with the path.
pub fn read_module_input(path: &Path) -> Result<ModuleInput, Error> {
    let v = read_json(path)?;
    let result = match detect_kind(&v)? {
        FileKind::Bimodule => {
            bimodule_from_value(&v, &parent_dir(path)).map(ModuleInput::Bimodule)
        }
        _ => representation_from_value(&v, &parent_dir(path)).map(ModuleInput::Representation),
    };
    result.map_err(|e| in_file(path, e))
}

/// Reads an operator file.
///
/// # Errors
/// I/O, syntax, or schema failures, tagged with the path.
pub fn read_operator(path: &Path) -> Result<(Matrix, OperatorContext), Error> {
    let v = read_json(path)?;
    operator_from_value(&v, &parent_dir(path)).map_err(|e| in_file(path, e))
}

/// Reads a matrix file (bare 2-D array or `{"matrix": ...}`).
///
/// # Errors
/// I/O, syntax, or schema failures, tagged with the path.
pub fn read_matrix(path: &Path) -> Result<Matrix, Error> {
    let v = read_json(path)?;
    matrix_from_value(&v).map_err(|e| in_file(path, e))
}

fn matrix_rows_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| Value::String(m.get(r, c).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn table_entries_value(t: &ProductTable) -> Value {
    Value::Array(
        t.entries()
            .filter(|(_, _, _, v)| !v.is_zero())
            .map(|(i, j, k, v)| json!([i, j, k, v.to_string()]))
            .collect(),
    )
}

/// Canonical algebra value, ready for [`to_canonical_string`].
#[must_use]
pub fn algebra_to_value(alg: &HomAlgebra) -> Value {
    let products = match &alg.products {
        Products::Single(t) => json!({ "mul": table_entries_value(t) }),
        Products::Pair { left, right } => json!({
            "left": table_entries_value(left),
            "right": table_entries_value(right),
        }),
    };
    json!({
        "kind": alg.kind,
        "dim": alg.dim(),
        "scalars": if alg.has_poly() { "poly_t" } else { "rational" },
        "products": products,
        "alpha": matrix_rows_value(&alg.alpha),
    })
}

fn action_family_value(family: &[Matrix]) -> Value {
    Value::Array(family.iter().map(matrix_rows_value).collect())
}

/// Canonical representation value with the algebra inlined.
#[must_use]
pub fn representation_to_value(rep: &Representation) -> Value {
    json!({
        "algebra": algebra_to_value(&rep.algebra),
        "dim_v": rep.dim_v(),
        "rho": action_family_value(&rep.rho),
        "beta": matrix_rows_value(&rep.beta),
    })
}

/// Canonical bimodule value with the algebra inlined.
#[must_use]
pub fn bimodule_to_value(bm: &Bimodule) -> Value {
    json!({
        "algebra": algebra_to_value(&bm.algebra),
        "dim_v": bm.dim_v(),
        "ell": action_family_value(&bm.ell),
        "r": action_family_value(&bm.r),
        "beta": matrix_rows_value(&bm.beta),
        "flavor": bm.flavor.as_str(),
    })
}

/// Canonical operator value with the context inlined.
#[must_use]
pub fn operator_to_value(matrix: &Matrix, context: &OperatorContext) -> Value {
    let (source, context_value) = match context {
        OperatorContext::Algebra(a) => ("algebra", algebra_to_value(a)),
        OperatorContext::Representation(rep) => ("module", representation_to_value(rep)),
        OperatorContext::Bimodule(bm) => ("module", bimodule_to_value(bm)),
    };
    json!({
        "matrix": matrix_rows_value(matrix),
        "source": source,
        "context": context_value,
    })
}

/// Canonical matrix value, `{"matrix": [[...]]}`.
#[must_use]
pub fn matrix_to_value(m: &Matrix) -> Value {
    json!({ "matrix": matrix_rows_value(m) })
}

/// Canonical value for any corpus object.
#[must_use]
pub fn corpus_object_to_value(object: &CorpusObject) -> Value {
    match object {
        CorpusObject::Algebra(a) => algebra_to_value(a),
        CorpusObject::Representation(rep) => representation_to_value(rep),
        CorpusObject::Bimodule(bm) => bimodule_to_value(bm),
        CorpusObject::Operator { matrix, context } => operator_to_value(matrix, context),
        CorpusObject::Map(m) => matrix_to_value(m),
    }
}

/// Renders a value in the canonical emission format: two-space pretty
/// JSON with sorted keys and a trailing newline.
#[must_use]
pub fn to_canonical_string(v: &Value) -> String {
    let mut text = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    text.push('\n');
    text
}
