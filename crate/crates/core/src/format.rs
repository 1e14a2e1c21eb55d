//! Structure files: a JSON document with `version: 1`, a `name`, an optional
//! `reference` such as `"builtin:aff2"`, and any of the sections `algebra`,
//! `representation`, `cobracket`, `rmatrix`, `lsa`, `ooperator`.
//!
//! Scalars are strings `"p"` or `"p/q"` (plain JSON integers are accepted on
//! input). Any array field may instead be given sparsely as
//! `{"entries": [[i, j, k, "v"], ...]}` with 1-based indices; output is always dense.

use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::bialgebra::Cobracket;
use crate::coboundary::RMatrix;
use crate::error::{Error, Result};
use crate::hom_lie::HomLieAlgebra;
use crate::operators::HomLeftSymmetric;
use crate::representation::Representation;
use crate::tensor::{format_rational, parse_rational, Matrix, Rational, Tensor3};

pub const VERSION: u64 = 1;

/// In-memory form of a structure file. Every section shares the `algebra`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub name: String,
    pub reference: Option<String>,
    pub algebra: Option<HomLieAlgebra>,
    pub representation: Option<Representation>,
    pub cobracket: Option<Cobracket>,
    pub rmatrix: Option<RMatrix>,
    pub lsa: Option<HomLeftSymmetric>,
    pub ooperator: Option<Matrix>,
}

impl Structure {
    pub fn new(name: impl Into<String>) -> Self {
        Structure {
            name: name.into(),
            reference: None,
            algebra: None,
            representation: None,
            cobracket: None,
            rmatrix: None,
            lsa: None,
            ooperator: None,
        }
    }

    pub fn with_algebra(mut self, a: HomLieAlgebra) -> Self {
        self.algebra = Some(a);
        self.normalized()
    }

    pub fn with_representation(mut self, r: Representation) -> Self {
        if self.algebra.is_none() {
            self.algebra = Some(r.base().clone());
        }
        self.representation = Some(r);
        self.normalized()
    }

    pub fn with_cobracket(mut self, c: Cobracket) -> Self {
        if self.algebra.is_none() {
            self.algebra = Some(c.base().clone());
        }
        self.cobracket = Some(c);
        self.normalized()
    }

    pub fn with_rmatrix(mut self, r: RMatrix) -> Self {
        if self.algebra.is_none() {
            self.algebra = Some(r.base().clone());
        }
        self.rmatrix = Some(r);
        self.normalized()
    }

    pub fn with_lsa(mut self, l: HomLeftSymmetric) -> Self {
        self.lsa = Some(l);
        self.normalized()
    }

    pub fn with_ooperator(mut self, t: Matrix) -> Self {
        self.ooperator = Some(t);
        self
    }

    pub fn with_reference(mut self, r: impl Into<String>) -> Self {
        self.reference = Some(r.into());
        self
    }

    pub fn algebra(&self) -> Result<&HomLieAlgebra> {
        self.algebra.as_ref().ok_or(Error::MissingSection("algebra"))
    }

    pub fn representation(&self) -> Result<&Representation> {
        self.representation.as_ref().ok_or(Error::MissingSection("representation"))
    }

    pub fn cobracket(&self) -> Result<&Cobracket> {
        self.cobracket.as_ref().ok_or(Error::MissingSection("cobracket"))
    }

    pub fn rmatrix(&self) -> Result<&RMatrix> {
        self.rmatrix.as_ref().ok_or(Error::MissingSection("rmatrix"))
    }

    pub fn lsa(&self) -> Result<&HomLeftSymmetric> {
        self.lsa.as_ref().ok_or(Error::MissingSection("lsa"))
    }

    pub fn ooperator(&self) -> Result<&Matrix> {
        self.ooperator.as_ref().ok_or(Error::MissingSection("ooperator"))
    }

    /// Rebuilds every section over the current algebra, relabelled with the structure name.
    pub fn normalized(mut self) -> Self {
        let Some(a) = self.algebra.take() else {
            if let Some(l) = self.lsa.take() {
                self.lsa = Some(
                    HomLeftSymmetric::new(self.name.clone(), l.product().clone(), l.psi().clone()).expect("shapes"),
                );
            }
            return self;
        };
        let a = a.with_label(self.name.clone());
        self.representation = self
            .representation
            .map(|r| Representation::new(a.clone(), r.beta().clone(), r.actions().to_vec()).expect("shapes"));
        self.cobracket = self.cobracket.map(|c| Cobracket::new(a.clone(), c.coeffs().clone()).expect("shapes"));
        self.rmatrix = self.rmatrix.map(|r| RMatrix::new(a.clone(), r.coeffs().clone()).expect("shapes"));
        self.lsa = self
            .lsa
            .map(|l| HomLeftSymmetric::new(self.name.clone(), l.product().clone(), l.psi().clone()).expect("shapes"));
        self.algebra = Some(a);
        self
    }
}

// ---------------------------------------------------------------- emit

fn scalar(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|row| Value::Array(row.iter().map(scalar).collect())).collect())
}

fn tensor_value(t: &Tensor3) -> Value {
    let (a, _, _) = t.dims();
    Value::Array((0..a).map(|i| matrix_value(&t.slice(i))).collect())
}

pub fn to_value(s: &Structure) -> Value {
    let mut doc = Map::new();
    doc.insert("version".into(), Value::from(VERSION));
    doc.insert("name".into(), Value::String(s.name.clone()));
    if let Some(r) = &s.reference {
        doc.insert("reference".into(), Value::String(r.clone()));
    }
    if let Some(a) = &s.algebra {
        let mut m = Map::new();
        m.insert("dim".into(), Value::from(a.dim()));
        m.insert("bracket".into(), tensor_value(a.bracket()));
        m.insert("twist".into(), matrix_value(a.twist()));
        doc.insert("algebra".into(), Value::Object(m));
    }
    if let Some(r) = &s.representation {
        let mut m = Map::new();
        m.insert("carrier_dim".into(), Value::from(r.carrier_dim()));
        m.insert("beta".into(), matrix_value(r.beta()));
        m.insert("action".into(), Value::Array(r.actions().iter().map(matrix_value).collect()));
        doc.insert("representation".into(), Value::Object(m));
    }
    if let Some(c) = &s.cobracket {
        doc.insert("cobracket".into(), tensor_value(c.coeffs()));
    }
    if let Some(r) = &s.rmatrix {
        doc.insert("rmatrix".into(), matrix_value(r.coeffs()));
    }
    if let Some(l) = &s.lsa {
        let mut m = Map::new();
        m.insert("dim".into(), Value::from(l.dim()));
        m.insert("product".into(), tensor_value(l.product()));
        m.insert("psi".into(), matrix_value(l.psi()));
        doc.insert("lsa".into(), Value::Object(m));
    }
    if let Some(t) = &s.ooperator {
        let mut m = Map::new();
        m.insert("T".into(), matrix_value(t));
        doc.insert("ooperator".into(), Value::Object(m));
    }
    Value::Object(doc)
}

/// Pretty JSON with innermost arrays kept on one line. Keys are sorted.
pub fn emit(s: &Structure) -> String {
    let mut out = String::new();
    write_value(&mut out, &to_value(s), 0);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        Value::Array(items) if is_flat(v) || items.is_empty() => {
            out.push_str(&Value::Array(items.clone()).to_string().replace(",", ", "));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        other => out.push_str(&other.to_string()),
    }
}

// ---------------------------------------------------------------- parse

/// Resolves `builtin:NAME` references; supplied by the caller to keep this module data-free.
pub type Resolver<'a> = &'a dyn Fn(&str) -> Result<Structure>;

pub fn parse(text: &str, resolve: Resolver) -> Result<Structure> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    from_value(&doc, resolve)
}

struct Path(String);

impl Path {
    fn key(&self, k: &str) -> Path {
        if self.0.is_empty() {
            Path(k.to_string())
        } else {
            Path(format!("{}.{k}", self.0))
        }
    }

    fn index(&self, i: usize) -> Path {
        Path(format!("{}[{i}]", self.0))
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let loc = if self.0.is_empty() { "document".to_string() } else { self.0.clone() };
        Error::parse(loc, message)
    }
}

fn field<'v>(obj: &'v Map<String, Value>, path: &Path, key: &str) -> Result<&'v Value> {
    obj.get(key).ok_or_else(|| path.key(key).err("missing field"))
}

fn object<'v>(v: &'v Value, path: &Path) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| path.err("expected an object"))
}

fn uint(v: &Value, path: &Path) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| path.err("expected a non-negative integer"))
}

fn rational(v: &Value, path: &Path) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|m| path.err(m)),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(crate::tensor::rat(i)),
            None => Err(path.err(format!("`{n}` is not an integer; write rationals as strings \"p/q\""))),
        },
        _ => Err(path.err("expected a rational string")),
    }
}

/// Dense nested arrays or `{"entries": [...]}` for a block of the given shape.
fn dense(v: &Value, path: &Path, shape: &[usize]) -> Result<Vec<Rational>> {
    let total: usize = shape.iter().product();
    if let Some(obj) = v.as_object() {
        let entries = field(obj, path, "entries")?;
        let entries_path = path.key("entries");
        let list = entries.as_array().ok_or_else(|| entries_path.err("expected an array"))?;
        let mut out = vec![crate::tensor::zero(); total];
        for (e, item) in list.iter().enumerate() {
            let p = entries_path.index(e);
            let parts = item.as_array().ok_or_else(|| p.err("expected [index..., value]"))?;
            if parts.len() != shape.len() + 1 {
                return Err(p.err(format!("expected {} indices and a value", shape.len())));
            }
            let mut flat = 0;
            for (d, extent) in shape.iter().enumerate() {
                let idx = uint(&parts[d], &p.index(d))?;
                if idx == 0 || idx > *extent {
                    return Err(p.index(d).err(format!("index {idx} outside 1..={extent}")));
                }
                flat = flat * extent + idx - 1;
            }
            out[flat] += rational(&parts[shape.len()], &p.index(shape.len()))?;
        }
        return Ok(out);
    }
    let mut out = Vec::with_capacity(total);
    collect(v, path, shape, &mut out)?;
    Ok(out)
}

fn collect(v: &Value, path: &Path, shape: &[usize], out: &mut Vec<Rational>) -> Result<()> {
    let Some((&extent, rest)) = shape.split_first() else {
        out.push(rational(v, path)?);
        return Ok(());
    };
    let items = v.as_array().ok_or_else(|| path.err(format!("expected an array of length {extent}")))?;
    if items.len() != extent {
        return Err(path.err(format!("expected length {extent}, found {}", items.len())));
    }
    for (i, x) in items.iter().enumerate() {
        collect(x, &path.index(i), rest, out)?;
    }
    Ok(())
}

fn read_matrix(v: &Value, path: &Path, rows: usize, cols: usize) -> Result<Matrix> {
    let flat = dense(v, path, &[rows, cols])?;
    Ok(Matrix::from_fn(rows, cols, |i, j| flat[i * cols + j].clone()))
}

fn read_tensor(v: &Value, path: &Path, n: usize) -> Result<Tensor3> {
    let flat = dense(v, path, &[n, n, n])?;
    Ok(Tensor3::from_fn((n, n, n), |i, j, k| flat[(i * n + j) * n + k].clone()))
}

pub fn from_value(doc: &Value, resolve: Resolver) -> Result<Structure> {
    let root = Path(String::new());
    let obj = object(doc, &root)?;
    match obj.get("version") {
        Some(v) if v.as_u64() == Some(VERSION) => {}
        Some(_) => return Err(root.key("version").err(format!("unsupported version; expected {VERSION}"))),
        None => return Err(root.key("version").err("missing field")),
    }
    let mut s = match obj.get("reference") {
        Some(Value::String(r)) => resolve(r)?,
        Some(_) => return Err(root.key("reference").err("expected a string")),
        None => Structure::new(String::new()),
    };
    match obj.get("name") {
        Some(Value::String(n)) => s.name = n.clone(),
        Some(_) => return Err(root.key("name").err("expected a string")),
        None if s.name.is_empty() => return Err(root.key("name").err("missing field")),
        None => {}
    }
    if let Some(Value::String(r)) = obj.get("reference") {
        s.reference = Some(r.clone());
    }

    if let Some(v) = obj.get("algebra") {
        let p = root.key("algebra");
        let a = object(v, &p)?;
        let n = uint(field(a, &p, "dim")?, &p.key("dim"))?;
        let bracket = read_tensor(field(a, &p, "bracket")?, &p.key("bracket"), n)?;
        let twist = read_matrix(field(a, &p, "twist")?, &p.key("twist"), n, n)?;
        s.algebra = Some(HomLieAlgebra::new(s.name.clone(), bracket, twist)?);
    }
    let n = s.algebra.as_ref().map(HomLieAlgebra::dim);
    let need_algebra = |key: &str| -> Result<(usize, HomLieAlgebra)> {
        match (&s.algebra, n) {
            (Some(a), Some(n)) => Ok((n, a.clone())),
            _ => Err(root.key(key).err("requires an `algebra` section")),
        }
    };

    if let Some(v) = obj.get("representation") {
        let p = root.key("representation");
        let (n, a) = need_algebra("representation")?;
        let r = object(v, &p)?;
        let m = uint(field(r, &p, "carrier_dim")?, &p.key("carrier_dim"))?;
        let beta = read_matrix(field(r, &p, "beta")?, &p.key("beta"), m, m)?;
        let ap = p.key("action");
        let actions = field(r, &p, "action")?.as_array().ok_or_else(|| ap.err("expected a list of matrices"))?;
        if actions.len() != n {
            return Err(ap.err(format!("expected {n} matrices, found {}", actions.len())));
        }
        let action =
            actions.iter().enumerate().map(|(i, x)| read_matrix(x, &ap.index(i), m, m)).collect::<Result<Vec<_>>>()?;
        s.representation = Some(Representation::new(a, beta, action)?);
    }
    if let Some(v) = obj.get("cobracket") {
        let (n, a) = need_algebra("cobracket")?;
        s.cobracket = Some(Cobracket::new(a, read_tensor(v, &root.key("cobracket"), n)?)?);
    }
    if let Some(v) = obj.get("rmatrix") {
        let (n, a) = need_algebra("rmatrix")?;
        s.rmatrix = Some(RMatrix::new(a, read_matrix(v, &root.key("rmatrix"), n, n)?)?);
    }
    if let Some(v) = obj.get("lsa") {
        let p = root.key("lsa");
        let l = object(v, &p)?;
        let m = uint(field(l, &p, "dim")?, &p.key("dim"))?;
        let product = read_tensor(field(l, &p, "product")?, &p.key("product"), m)?;
        let psi = read_matrix(field(l, &p, "psi")?, &p.key("psi"), m, m)?;
        s.lsa = Some(HomLeftSymmetric::new(s.name.clone(), product, psi)?);
    }
    if let Some(v) = obj.get("ooperator") {
        let p = root.key("ooperator");
        let (n, _) = need_algebra("ooperator")?;
        let m = match &s.representation {
            Some(r) => r.carrier_dim(),
            None => return Err(p.err("requires a `representation` section")),
        };
        let o = object(v, &p)?;
        s.ooperator = Some(read_matrix(field(o, &p, "T")?, &p.key("T"), n, m)?);
    }
    Ok(s.normalized())
}
