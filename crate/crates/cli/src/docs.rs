//! File formats: point-set documents and the JSON report lines.
//!
//! Serialization is canonical: object keys are sorted (the default
//! serde_json map is ordered), points are stored normalized, and scalars
//! have a single spelling — prime-field residues and small integers as JSON
//! numbers, everything else as decimal strings, rationals as "a/b". Parsing
//! a document and re-serializing it therefore reproduces the canonical
//! bytes, and a document digest is stable across platforms.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use cb_core::curves::{CurveComponent, CurveWitness, SearchOutcome, UndecidedEvidence};
use cb_core::field::{FieldSpec, Fp, PrimeField, RationalField, Scalar};
use cb_core::forms::SquarefreeStatus;
use cb_core::generators::Provenance;
use cb_core::geometry::{HomogeneousForm, LinearSubspace, PointSet, ProjectivePoint};
use cb_core::{FpPointSet, QPointSet, Rational};

#[derive(Debug)]
pub enum DocError {
    Malformed(String),
}

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocError::Malformed(m) => write!(f, "malformed document: {m}"),
        }
    }
}

impl std::error::Error for DocError {}

fn malformed(m: impl Into<String>) -> DocError {
    DocError::Malformed(m.into())
}

/// Scalar <-> JSON conversions for the two supported fields.
pub trait JsonScalar: Scalar {
    fn scalar_to_json(&self) -> Value;
    fn scalar_from_json(field: &Self::Field, v: &Value) -> Result<Self, DocError>;
}

impl JsonScalar for Fp {
    fn scalar_to_json(&self) -> Value {
        json!(self.value())
    }

    fn scalar_from_json(field: &PrimeField, v: &Value) -> Result<Self, DocError> {
        match v {
            Value::Number(n) => {
                let i = n.as_i64().ok_or_else(|| malformed("prime-field entries must be integers"))?;
                Ok(field.element(i))
            }
            Value::String(s) => {
                let q = parse_rational_string(s)?;
                let numer = fp_from_bigint(field, q.numer());
                let denom = fp_from_bigint(field, q.denom());
                let inv = denom
                    .inv()
                    .ok_or_else(|| malformed(format!("denominator {} is zero mod {}", q.denom(), field.modulus())))?;
                Ok(numer.mul(&inv))
            }
            _ => Err(malformed("scalar entries must be integers or strings")),
        }
    }
}

fn fp_from_bigint(field: &PrimeField, v: &BigInt) -> Fp {
    let p = BigInt::from(field.modulus());
    let r = ((v % &p) + &p) % &p;
    field.element(r.to_i64().expect("reduced residue fits"))
}

impl JsonScalar for Rational {
    fn scalar_to_json(&self) -> Value {
        if self.denom().is_one() {
            if let Some(i) = self.numer().to_i64() {
                return json!(i);
            }
            return Value::String(self.numer().to_string());
        }
        Value::String(format!("{}/{}", self.numer(), self.denom()))
    }

    fn scalar_from_json(_: &RationalField, v: &Value) -> Result<Self, DocError> {
        match v {
            Value::Number(n) => {
                let i = n.as_i64().ok_or_else(|| malformed("numeric entries must be exact integers"))?;
                Ok(Rational::from_integer(BigInt::from(i)))
            }
            Value::String(s) => parse_rational_string(s),
            _ => Err(malformed("scalar entries must be integers or strings")),
        }
    }
}

fn parse_rational_string(s: &str) -> Result<Rational, DocError> {
    let parse_int = |t: &str| -> Result<BigInt, DocError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| malformed(format!("cannot parse integer `{t}`")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let denom = parse_int(d)?;
            if denom.is_zero_denom() {
                return Err(malformed("zero denominator"));
            }
            Ok(Rational::new(parse_int(n)?, denom))
        }
    }
}

trait ZeroDenom {
    fn is_zero_denom(&self) -> bool;
}

impl ZeroDenom for BigInt {
    fn is_zero_denom(&self) -> bool {
        use num_traits::Zero;
        self.is_zero()
    }
}

/// A parsed point-set document over either supported field.
#[derive(Clone, Debug)]
pub enum AnyPointSet {
    Rational(QPointSet),
    Prime(FpPointSet),
}

/// Runs generic code against whichever field the document uses.
#[macro_export]
macro_rules! with_points {
    ($any:expr, $ps:ident => $body:expr) => {
        match $any {
            $crate::docs::AnyPointSet::Rational($ps) => $body,
            $crate::docs::AnyPointSet::Prime($ps) => $body,
        }
    };
}

impl AnyPointSet {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyPointSet::Rational(_) => FieldSpec::Rational,
            AnyPointSet::Prime(ps) => FieldSpec::Prime(ps.field().modulus()),
        }
    }

    pub fn len(&self) -> usize {
        with_points!(self, ps => ps.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ambient_dim(&self) -> usize {
        with_points!(self, ps => ps.ambient_dim())
    }
}

fn points_to_json<K: JsonScalar>(ps: &PointSet<K>) -> Value {
    Value::Array(
        ps.points()
            .iter()
            .map(|p| Value::Array(p.coords().iter().map(JsonScalar::scalar_to_json).collect()))
            .collect(),
    )
}

fn field_to_json(spec: FieldSpec) -> Value {
    match spec {
        FieldSpec::Rational => json!({"kind": "rational"}),
        FieldSpec::Prime(p) => json!({"kind": "prime", "p": p}),
    }
}

pub fn provenance_to_json(p: &Provenance) -> Value {
    let mut params = Map::new();
    for (k, v) in &p.params {
        params.insert(k.clone(), Value::String(v.clone()));
    }
    let mut obj = Map::new();
    obj.insert("generator".into(), Value::String(p.generator.clone()));
    obj.insert("params".into(), Value::Object(params));
    obj.insert("seed".into(), json!(p.seed));
    obj.insert(
        "expected_cb_level".into(),
        p.expected_cb_level.map_or(Value::Null, |k| json!(k)),
    );
    Value::Object(obj)
}

/// Canonical document for a point set, with an optional provenance block.
pub fn document(points: &AnyPointSet, provenance: Option<&Provenance>) -> Value {
    let mut obj = Map::new();
    obj.insert("ambient_dim".into(), json!(points.ambient_dim()));
    obj.insert("field".into(), field_to_json(points.field_spec()));
    let pts = match points {
        AnyPointSet::Rational(ps) => points_to_json(ps),
        AnyPointSet::Prime(ps) => points_to_json(ps),
    };
    obj.insert("points".into(), pts);
    if let Some(p) = provenance {
        obj.insert("provenance".into(), provenance_to_json(p));
    }
    Value::Object(obj)
}

/// Canonical byte form of a JSON value: compact, keys sorted.
pub fn canonical_bytes(v: &Value) -> Vec<u8> {
    let mut bytes = serde_json::to_vec(v).expect("serializable value");
    bytes.push(b'\n');
    bytes
}

/// Hex SHA-256 of the canonical instance document (field, ambient
/// dimension and normalized points; provenance excluded).
pub fn digest(points: &AnyPointSet) -> String {
    let doc = document(points, None);
    let mut hasher = Sha256::new();
    hasher.update(canonical_bytes(&doc));
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

fn parse_points<K: JsonScalar>(
    field: K::Field,
    ambient_dim: usize,
    rows: &[Value],
) -> Result<PointSet<K>, DocError> {
    let mut points = Vec::with_capacity(rows.len());
    for row in rows {
        let Value::Array(coords) = row else {
            return Err(malformed("each point must be an array of coordinates"));
        };
        if coords.len() != ambient_dim + 1 {
            return Err(malformed(format!(
                "point has {} coordinates, ambient dimension {} needs {}",
                coords.len(),
                ambient_dim,
                ambient_dim + 1
            )));
        }
        let parsed: Vec<K> = coords
            .iter()
            .map(|c| K::scalar_from_json(&field, c))
            .collect::<Result<_, _>>()?;
        points.push(
            ProjectivePoint::new(parsed).map_err(|e| malformed(format!("invalid point: {e}")))?,
        );
    }
    PointSet::new(field, ambient_dim, points).map_err(|e| malformed(format!("invalid point set: {e}")))
}

/// Parses a point-set document; returns the set and the provenance block
/// verbatim, if present.
pub fn parse_document(v: &Value) -> Result<(AnyPointSet, Option<Value>), DocError> {
    let obj = v.as_object().ok_or_else(|| malformed("document must be a JSON object"))?;
    let ambient_dim = obj
        .get("ambient_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed("missing or invalid `ambient_dim`"))? as usize;
    let field = obj.get("field").ok_or_else(|| malformed("missing `field`"))?;
    let kind = field
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| malformed("field needs a `kind`"))?;
    let rows = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("missing `points` array"))?;
    let provenance = obj.get("provenance").cloned();
    let points = match kind {
        "rational" => AnyPointSet::Rational(parse_points(RationalField, ambient_dim, rows)?),
        "prime" => {
            let p = field
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| malformed("prime field needs `p`"))?;
            let pf = PrimeField::new(p).map_err(|e| malformed(e.to_string()))?;
            AnyPointSet::Prime(parse_points(pf, ambient_dim, rows)?)
        }
        other => return Err(malformed(format!("unknown field kind `{other}`"))),
    };
    Ok((points, provenance))
}

pub fn parse_document_bytes(bytes: &[u8]) -> Result<(AnyPointSet, Option<Value>), DocError> {
    let v: Value =
        serde_json::from_slice(bytes).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    parse_document(&v)
}

fn subspace_to_json<K: JsonScalar>(s: &LinearSubspace<K>) -> Value {
    Value::Array(
        (0..s.basis().rows())
            .map(|i| {
                Value::Array(s.basis().row(i).iter().map(JsonScalar::scalar_to_json).collect())
            })
            .collect(),
    )
}

fn form_to_json<K: JsonScalar>(f: &HomogeneousForm<K>) -> Value {
    Value::Array(f.coeffs().iter().map(JsonScalar::scalar_to_json).collect())
}

pub fn component_to_json<K: JsonScalar>(c: &CurveComponent<K>) -> Value {
    let mut obj = Map::new();
    let indices = |xs: &[usize]| Value::Array(xs.iter().map(|&i| json!(i)).collect());
    match c {
        CurveComponent::Line { line, assigned } => {
            obj.insert("type".into(), json!("line"));
            obj.insert("basis".into(), subspace_to_json(line));
            obj.insert("points".into(), indices(assigned));
        }
        CurveComponent::PlaneCurve { plane, form, degree, squarefree, assigned } => {
            obj.insert("type".into(), json!("plane-curve"));
            obj.insert("plane".into(), subspace_to_json(plane));
            obj.insert("degree".into(), json!(degree));
            obj.insert("form".into(), form_to_json(form));
            obj.insert(
                "squarefree".into(),
                json!(match squarefree {
                    SquarefreeStatus::Certified => "certified",
                    SquarefreeStatus::Unverified => "unverified",
                }),
            );
            obj.insert("points".into(), indices(assigned));
        }
        CurveComponent::RationalNormal { curve, assigned } => {
            obj.insert("type".into(), json!("rational-normal-curve"));
            obj.insert("degree".into(), json!(curve.degree()));
            obj.insert("span".into(), subspace_to_json(curve.span()));
            obj.insert(
                "beta".into(),
                Value::Array(curve.beta().iter().map(JsonScalar::scalar_to_json).collect()),
            );
            obj.insert(
                "frame".into(),
                Value::Array(
                    (0..curve.frame().rows())
                        .map(|i| {
                            Value::Array(
                                curve.frame().row(i).iter().map(JsonScalar::scalar_to_json).collect(),
                            )
                        })
                        .collect(),
                ),
            );
            obj.insert("points".into(), indices(assigned));
        }
    }
    Value::Object(obj)
}

pub fn witness_to_json<K: JsonScalar>(w: &CurveWitness<K>) -> Value {
    json!({
        "components": Value::Array(w.components().iter().map(component_to_json).collect()),
        "total_degree": w.total_degree(),
    })
}

pub fn evidence_to_json(ev: &UndecidedEvidence) -> Value {
    json!({
        "hilbert_profile": ev.hilbert_profile.iter().map(|(t, h)| json!([t, h])).collect::<Vec<_>>(),
        "quadric_ideal_dim": ev.quadric_ideal_dim,
        "quadric_pencil": ev.quadric_pencil,
    })
}

pub fn outcome_to_json<K: JsonScalar>(outcome: &SearchOutcome<K>) -> Value {
    match outcome {
        SearchOutcome::Found(w) => json!({"outcome": "found", "witness": witness_to_json(w)}),
        SearchOutcome::AbsentDecisive => json!({"outcome": "absent-decisive"}),
        SearchOutcome::Undecided(ev) => {
            json!({"outcome": "undecided", "evidence": evidence_to_json(ev)})
        }
    }
}

/// One report line: canonical JSON on one line, with the command name, the
/// tool version and the fields supplied by the command.
pub fn report_line(command: &str, fields: Vec<(&str, Value)>) -> String {
    let mut obj = Map::new();
    obj.insert("command".into(), json!(command));
    obj.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    for (k, v) in fields {
        obj.insert(k.into(), v);
    }
    serde_json::to_string(&Value::Object(obj)).expect("serializable report")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_identical() {
        let raw = serde_json::json!({
            "field": {"kind": "prime", "p": 11},
            "ambient_dim": 2,
            "points": [[22, 1, 0], [1, 1, 1], [-1, 0, 3]],
        });
        let (points, _) = parse_document(&raw).unwrap();
        let doc = document(&points, None);
        let bytes = canonical_bytes(&doc);
        let (again, _) = parse_document_bytes(&bytes).unwrap();
        let doc2 = document(&again, None);
        assert_eq!(canonical_bytes(&doc2), bytes);
        // Canonical form normalized the points: 22 = 0 mod 11 so the first
        // point's leading coordinate became its second entry scaled to 1.
        assert_eq!(digest(&points), digest(&again));
    }

    #[test]
    fn rational_scalars_round_trip() {
        let raw = serde_json::json!({
            "field": {"kind": "rational"},
            "ambient_dim": 2,
            "points": [["2/3", 1, 0], [4, "8", "-2/5"]],
        });
        let (points, _) = parse_document(&raw).unwrap();
        let doc = document(&points, None);
        let (again, _) = parse_document(&doc).unwrap();
        assert_eq!(document(&again, None), doc);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        for raw in [
            serde_json::json!({"field": {"kind": "prime", "p": 10}, "ambient_dim": 2, "points": []}),
            serde_json::json!({"field": {"kind": "prime", "p": 11}, "ambient_dim": 2, "points": [[1, 0]]}),
            serde_json::json!({"field": {"kind": "prime", "p": 11}, "ambient_dim": 2, "points": [[0, 0, 0]]}),
            serde_json::json!({"field": {"kind": "martian"}, "ambient_dim": 2, "points": []}),
            serde_json::json!({"ambient_dim": 2, "points": []}),
            serde_json::json!({"field": {"kind": "prime", "p": 11}, "ambient_dim": 2,
                               "points": [[1, 0, 0], [2, 0, 0]]}),
        ] {
            assert!(parse_document(&raw).is_err(), "{raw}");
        }
    }

    #[test]
    fn float_entries_are_rejected() {
        let raw = serde_json::json!({
            "field": {"kind": "rational"},
            "ambient_dim": 2,
            "points": [[1.5, 1, 0]],
        });
        assert!(parse_document(&raw).is_err());
    }
}
