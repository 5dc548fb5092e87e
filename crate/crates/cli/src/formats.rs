//! JSON file formats.
//!
//! Rationals are strings, `"p"` or `"p/q"`. Vectors are arrays of rationals,
//! matrices arrays of rows. Files:
//!
//! - Lie algebra: `{"dim", "basis_names", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}`
//!   with `i < j`; the remaining brackets follow by antisymmetry.
//! - Representation: `{"algebra": <algebra object or path>, "space_dim", "matrices"}`.
//! - Subspace: `{"ambient_dim", "basis": [[...], ...]}`.
//! - Vector: `{"vector": [...]}`; vector list: `{"vectors": [[...], ...]}`.

use std::fs;
use std::path::{Path, PathBuf};

use klein_core::{LieAlgebra, Matrix, Rational, Representation, Subspace, Vector};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

/// A JSON node together with its location, for error messages.
#[derive(Clone, Copy)]
pub struct Node<'a> {
    value: &'a Value,
    file: &'a Path,
    // Rendered lazily only on error.
    path: &'a dyn Fn() -> String,
}

impl<'a> Node<'a> {
    fn fail<T>(&self, message: impl Into<String>) -> CliResult<T> {
        Err(CliError::Field { path: self.file.to_path_buf(), field: (self.path)(), message: message.into() })
    }

    fn with<R>(&self, value: &'a Value, suffix: &dyn Fn() -> String, f: impl FnOnce(Node<'_>) -> R) -> R {
        let parent = self.path;
        let path = move || format!("{}{}", parent(), suffix());
        f(Node { value, file: self.file, path: &path })
    }

    fn field<R>(&self, key: &str, f: impl FnOnce(Node<'_>) -> CliResult<R>) -> CliResult<R> {
        let Some(obj) = self.value.as_object() else {
            return self.fail("expected an object");
        };
        match obj.get(key) {
            Some(v) => self.with(v, &|| format!(".{key}"), f),
            None => self.fail(format!("missing field {key:?}")),
        }
    }

    fn elements<R>(&self, mut f: impl FnMut(Node<'_>) -> CliResult<R>) -> CliResult<Vec<R>> {
        let Some(items) = self.value.as_array() else {
            return self.fail("expected an array");
        };
        items.iter().enumerate().map(|(i, v)| self.with(v, &|| format!("[{i}]"), &mut f)).collect()
    }

    fn usize(&self) -> CliResult<usize> {
        match self.value.as_u64().and_then(|n| usize::try_from(n).ok()) {
            Some(n) => Ok(n),
            None => self.fail("expected a nonnegative integer"),
        }
    }

    fn string(&self) -> CliResult<&'a str> {
        match self.value.as_str() {
            Some(s) => Ok(s),
            None => self.fail("expected a string"),
        }
    }

    fn rational(&self) -> CliResult<Rational> {
        let s = self.string()?;
        s.parse::<Rational>().or_else(|e| self.fail(e.to_string()))
    }

    fn vector(&self, dim: usize) -> CliResult<Vector> {
        let entries = self.elements(|n| n.rational())?;
        if entries.len() != dim {
            return self.fail(format!("expected {dim} entries, found {}", entries.len()));
        }
        Ok(Vector::new(entries))
    }

    fn matrix(&self, dim: usize) -> CliResult<Matrix> {
        let rows = self.elements(|n| n.vector(dim))?;
        if rows.len() != dim {
            return self.fail(format!("expected {dim} rows, found {}", rows.len()));
        }
        Ok(Matrix::from_vectors(&rows, dim).expect("rows checked"))
    }
}

fn root_path() -> String {
    "$".to_owned()
}

pub fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.to_path_buf(), source })
}

fn with_root<R>(value: &Value, file: &Path, f: impl FnOnce(Node<'_>) -> CliResult<R>) -> CliResult<R> {
    f(Node { value, file, path: &root_path })
}

/// Parses a Lie algebra object without running the identity checks.
fn algebra_unchecked(node: Node<'_>) -> CliResult<LieAlgebra> {
    let dim = node.field("dim", |n| n.usize())?;
    if dim == 0 {
        return node.fail("dim must be positive");
    }
    let names = node.field("basis_names", |n| n.elements(|e| e.string().map(str::to_owned)))?;
    if names.len() != dim {
        return node.fail(format!("basis_names has {} entries, dim is {dim}", names.len()));
    }
    let mut grid: Vec<Vec<Vector>> = (0..dim).map(|_| (0..dim).map(|_| Vector::zeros(dim)).collect()).collect();
    let mut seen = std::collections::BTreeSet::new();
    node.field("brackets", |n| {
        n.elements(|entry| {
            let i = entry.field("i", |x| x.usize())?;
            let j = entry.field("j", |x| x.usize())?;
            if i >= j || j >= dim {
                return entry.fail(format!("need i < j < {dim}, found i = {i}, j = {j}"));
            }
            if !seen.insert((i, j)) {
                return entry.fail(format!("duplicate bracket ({i}, {j})"));
            }
            let mut v = Vector::zeros(dim).into_entries();
            entry.field("coeffs", |c| {
                let Some(obj) = c.value.as_object() else {
                    return c.fail("expected an object mapping basis index to coefficient");
                };
                for (key, value) in obj {
                    let k = match key.parse::<usize>() {
                        Ok(k) if k < dim => k,
                        _ => return c.fail(format!("coefficient key {key:?} is not a basis index below {dim}")),
                    };
                    v[k] = c.with(value, &|| format!(".{key}"), |x| x.rational())?;
                }
                Ok(())
            })?;
            let v = Vector::new(v);
            grid[j][i] = v.neg();
            grid[i][j] = v;
            Ok(())
        })
    })?;
    LieAlgebra::new_unchecked(names, grid).or_else(|e| node.fail(e.to_string()))
}

fn representation_unchecked(node: Node<'_>, base_dir: &Path) -> CliResult<Representation> {
    let algebra = node.field("algebra", |n| match n.value {
        Value::String(reference) => {
            let path = base_dir.join(reference);
            let value = read_json(&path)?;
            with_root(&value, &path, algebra_unchecked).and_then(|a| checked_algebra(a, &path))
        }
        _ => algebra_unchecked(n),
    })?;
    let d = node.field("space_dim", |n| n.usize())?;
    if d == 0 {
        return node.fail("space_dim must be positive");
    }
    let matrices = node.field("matrices", |n| n.elements(|m| m.matrix(d)))?;
    if matrices.len() != algebra.dim() {
        return node.fail(format!("expected {} matrices, found {}", algebra.dim(), matrices.len()));
    }
    Representation::new_unchecked(algebra, matrices).or_else(|e| node.fail(e.to_string()))
}

fn checked_algebra(algebra: LieAlgebra, path: &Path) -> CliResult<LieAlgebra> {
    let report = algebra.validate();
    if report.passed {
        Ok(algebra)
    } else {
        Err(CliError::Core { context: path.display().to_string(), source: klein_core::Error::InvalidAlgebra(report) })
    }
}

/// What a JSON input file holds, before identity checks.
pub enum Loaded {
    Algebra(LieAlgebra),
    Representation(Representation),
}

/// Reads an algebra or representation file without validating identities.
pub fn load_unchecked(path: &Path) -> CliResult<Loaded> {
    let value = read_json(path)?;
    let base_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    with_root(&value, path, |node| {
        let obj = node.value.as_object();
        if obj.is_some_and(|o| o.contains_key("matrices")) {
            representation_unchecked(node, &base_dir).map(Loaded::Representation)
        } else if obj.is_some_and(|o| o.contains_key("brackets")) {
            algebra_unchecked(node).map(Loaded::Algebra)
        } else {
            node.fail("neither a Lie algebra (\"brackets\") nor a representation (\"matrices\")")
        }
    })
}

pub fn load_algebra(path: &Path) -> CliResult<LieAlgebra> {
    let value = read_json(path)?;
    let algebra = with_root(&value, path, algebra_unchecked)?;
    checked_algebra(algebra, path)
}

pub fn load_representation(path: &Path) -> CliResult<Representation> {
    let value = read_json(path)?;
    let base_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let rep = with_root(&value, path, |n| representation_unchecked(n, &base_dir))?;
    let algebra = checked_algebra(rep.algebra().clone(), path)?;
    Representation::new(algebra, rep.matrices().to_vec()).map_err(CliError::core(path.display().to_string()))
}

pub fn load_subspace(path: &Path, expected_dim: Option<usize>) -> CliResult<Subspace> {
    let value = read_json(path)?;
    with_root(&value, path, |node| {
        let d = node.field("ambient_dim", |n| n.usize())?;
        if let Some(expected) = expected_dim.filter(|&e| e != d) {
            return node.fail(format!("ambient_dim {d} does not match the expected {expected}"));
        }
        let basis = node.field("basis", |n| n.elements(|v| v.vector(d)))?;
        Ok(Subspace::span(&basis, d).expect("vectors checked"))
    })
}

pub fn load_vector(path: &Path, dim: usize) -> CliResult<Vector> {
    let value = read_json(path)?;
    with_root(&value, path, |node| node.field("vector", |n| n.vector(dim)))
}

pub fn load_vectors(path: &Path, dim: usize) -> CliResult<Vec<Vector>> {
    let value = read_json(path)?;
    with_root(&value, path, |node| node.field("vectors", |n| n.elements(|v| v.vector(dim))))
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vector_json(v: &Vector) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(rational_json).collect())).collect())
}

pub fn basis_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(vector_json).collect())
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({"ambient_dim": s.ambient_dim(), "basis": basis_json(s)})
}

/// Sparse form: only nonzero brackets with `i < j`, coefficient keys in
/// increasing order.
pub fn algebra_json(algebra: &LieAlgebra) -> Value {
    let n = algebra.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = algebra.structure_constants(i, j);
            if v.is_zero() {
                continue;
            }
            let mut coeffs = Map::new();
            for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                coeffs.insert(k.to_string(), rational_json(c));
            }
            brackets.push(json!({"i": i, "j": j, "coeffs": coeffs}));
        }
    }
    json!({"dim": n, "basis_names": algebra.basis_names(), "brackets": brackets})
}

pub fn representation_json(rep: &Representation) -> Value {
    json!({
        "algebra": algebra_json(rep.algebra()),
        "space_dim": rep.space_dim(),
        "matrices": rep.matrices().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

pub fn write_json(path: &Path, value: &Value) -> CliResult<()> {
    fs::write(path, render(value)).map_err(|source| CliError::Io { path: PathBuf::from(path), source })
}

/// Canonical text form: two-space indented JSON and a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use klein_core::catalog::{sl2, sympower};

    fn temp_file(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
        let path = dir.path().join(name);
        fs::write(&path, text).unwrap();
        path
    }

    #[test]
    fn algebra_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sl2.json");
        write_json(&path, &algebra_json(&sl2())).unwrap();
        assert_eq!(load_algebra(&path).unwrap(), sl2());
    }

    #[test]
    fn representation_with_file_reference() {
        let dir = tempfile::tempdir().unwrap();
        write_json(&dir.path().join("g.json"), &algebra_json(&sl2())).unwrap();
        let rep = sympower(2).unwrap();
        let mut value = representation_json(&rep);
        value["algebra"] = Value::String("g.json".into());
        let path = dir.path().join("rep.json");
        write_json(&path, &value).unwrap();
        assert_eq!(load_representation(&path).unwrap(), rep);
    }

    #[test]
    fn non_reduced_rationals_are_reduced() {
        let dir = tempfile::tempdir().unwrap();
        let path = temp_file(&dir, "s.json", r#"{"ambient_dim": 2, "basis": [["2/4", "-6/3"]]}"#);
        let s = load_subspace(&path, None).unwrap();
        assert_eq!(s.basis(), &[Vector::new(vec![Rational::one(), Rational::from(-4)])]);
    }

    fn field_error(path: &Path) -> String {
        match load_algebra(path) {
            Err(CliError::Field { field, .. }) => field,
            other => panic!("expected a field error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_field() {
        let dir = tempfile::tempdir().unwrap();
        let zero_den = temp_file(
            &dir,
            "a.json",
            r#"{"dim": 2, "basis_names": ["x", "y"], "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1/0"}}]}"#,
        );
        assert_eq!(field_error(&zero_den), "$.brackets[0].coeffs.1");

        let wrong_order = temp_file(
            &dir,
            "b.json",
            r#"{"dim": 2, "basis_names": ["x", "y"], "brackets": [{"i": 1, "j": 0, "coeffs": {}}]}"#,
        );
        assert_eq!(field_error(&wrong_order), "$.brackets[0]");

        let number = temp_file(
            &dir,
            "c.json",
            r#"{"dim": 2, "basis_names": ["x", "y"], "brackets": [{"i": 0, "j": 1, "coeffs": {"1": 1}}]}"#,
        );
        assert_eq!(field_error(&number), "$.brackets[0].coeffs.1");

        let missing = temp_file(&dir, "d.json", r#"{"dim": 2, "brackets": []}"#);
        assert_eq!(field_error(&missing), "$");
    }

    #[test]
    fn invalid_algebra_is_rejected_with_violations() {
        let dir = tempfile::tempdir().unwrap();
        // sl2 with [h, e] = 3e: [e, h] = -3e.
        let path = temp_file(
            &dir,
            "bad.json",
            r#"{"dim": 3, "basis_names": ["e", "f", "h"], "brackets": [
                {"i": 0, "j": 1, "coeffs": {"2": "1"}},
                {"i": 0, "j": 2, "coeffs": {"0": "-3"}},
                {"i": 1, "j": 2, "coeffs": {"1": "2"}}]}"#,
        );
        match load_algebra(&path) {
            Err(CliError::Core { source: klein_core::Error::InvalidAlgebra(report), .. }) => {
                assert_eq!(report.violations.len(), 1);
                assert_eq!(report.violations[0].indices, vec![0, 1, 2]);
            }
            other => panic!("{other:?}"),
        }
    }
}
