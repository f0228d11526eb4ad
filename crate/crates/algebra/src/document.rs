//! JSON document format for metric Lie algebras.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "labels": ["X", "Y", "Z"],
//!   "gram": "identity",
//!   "structure": [[0, 1, 2, 1.0000000000000000e0]],
//!   "decoration": {"a_indices": [], "n_indices": [0, 1, 2], "roots": [[], [], []]}
//! }
//! ```
//!
//! `gram` is either `"identity"` or a row-major array of `dim * dim` numbers.
//! Structure entries are 0-based `[i, j, k, value]` with `i < j`, meaning
//! `[e_i, e_j]` has `e_k`-coefficient `value`. Floats are written with 17
//! significant digits so that a round trip reproduces every bit.

use std::io;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::{AlgebraError, Decoration, MetricLieAlgebra, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    dim: usize,
    #[serde(default)]
    labels: Vec<String>,
    gram: GramDoc,
    structure: Vec<(usize, usize, usize, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    decoration: Option<DecorationDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GramDoc {
    Named(String),
    Matrix(Vec<f64>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecorationDoc {
    a_indices: Vec<usize>,
    n_indices: Vec<usize>,
    roots: Vec<Vec<f64>>,
}

pub fn serialize(alg: &MetricLieAlgebra) -> String {
    let n = alg.dim();
    let gram = if *alg.gram() == DMatrix::identity(n, n) {
        GramDoc::Named("identity".into())
    } else {
        GramDoc::Matrix((0..n * n).map(|p| alg.gram()[(p / n, p % n)]).collect())
    };
    let doc = Document {
        dim: n,
        labels: alg.labels().to_vec(),
        gram,
        structure: alg.entries().iter().map(|e| (e.i, e.j, e.k, e.value)).collect(),
        decoration: alg.decoration().map(|d| DecorationDoc {
            a_indices: d.a_indices.clone(),
            n_indices: d.n_indices.clone(),
            roots: d.roots.clone(),
        }),
    };
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FullPrecision::default());
    doc.serialize(&mut ser).expect("algebra values are finite");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

pub fn deserialize(text: &str) -> Result<MetricLieAlgebra> {
    let doc: Document = serde_json::from_str(text).map_err(|e| AlgebraError::Malformed(e.to_string()))?;
    let n = doc.dim;
    let mut seen = std::collections::HashSet::new();
    for &(i, j, k, v) in &doc.structure {
        if !v.is_finite() {
            return Err(AlgebraError::NonFinite("structure constants"));
        }
        if i == j && v != 0.0 {
            return Err(AlgebraError::NotAntisymmetric { i, j, k });
        }
        if i > j {
            return Err(AlgebraError::Malformed(format!("entry ({i}, {j}, {k}) must have i < j")));
        }
        if !seen.insert((i, j, k)) {
            return Err(AlgebraError::Malformed(format!("entry ({i}, {j}, {k}) repeated")));
        }
    }
    let mut alg = MetricLieAlgebra::new(n, doc.structure)?;
    match doc.gram {
        GramDoc::Named(name) if name == "identity" => {}
        GramDoc::Named(name) => return Err(AlgebraError::Malformed(format!("unknown gram \"{name}\""))),
        GramDoc::Matrix(values) => {
            if values.len() != n * n {
                return Err(AlgebraError::DimensionMismatch { expected: n * n, got: values.len() });
            }
            alg = alg.with_gram(DMatrix::from_row_slice(n, n, &values))?;
        }
    }
    if !doc.labels.is_empty() {
        alg = alg.with_labels(doc.labels)?;
    }
    if let Some(d) = doc.decoration {
        alg = alg.with_decoration(Decoration { a_indices: d.a_indices, n_indices: d.n_indices, roots: d.roots })?;
    }
    Ok(alg)
}

/// Pretty JSON with every float in `{:.16e}` form.
#[derive(Default)]
struct FullPrecision(PrettyFormatter<'static>);

impl Formatter for FullPrecision {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}
