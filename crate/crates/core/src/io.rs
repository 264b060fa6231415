//! JSON document formats shared by the command line tool and the bindings.
//!
//! Integers ride as plain JSON numbers while their magnitude stays below
//! 2^53 (the range binary-floating-point JSON readers handle losslessly)
//! and as decimal strings beyond that; every document carries an
//! `integers_exceed_53bit` flag saying whether the string form occurs.
//! Struct fields serialize in declaration order and sets are sorted before
//! serialization, so identical inputs produce byte-identical documents.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{Classification, EnumerationMode, GaussReport};
use crate::jets::JetMatrix;
use crate::matrix::IntMatrix;
use crate::oracle::CrossCheck;
use crate::point::{LatticePoint, PointConfiguration};

pub const SCHEMA_VERSION: u32 = 1;

/// 2^53: integers of smaller magnitude serialize as JSON numbers.
const SAFE_LIMIT: i64 = 1 << 53;

/// An arbitrary-precision integer with the number-or-decimal-string JSON
/// encoding described in the module docs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JsonInt(pub BigInt);

impl JsonInt {
    fn fits_in_number(&self) -> bool {
        self.0.abs() < BigInt::from(SAFE_LIMIT)
    }
}

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.fits_in_number() {
            serializer.serialize_i64(i64::try_from(self.0.clone()).expect("checked range"))
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<JsonInt, E> {
                Err(E::custom(format!(
                    "expected an integer, found the non-integral number {v}"
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
                v.parse::<BigInt>()
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("invalid integer literal {v:?}")))
            }
        }
        deserializer.deserialize_any(IntVisitor)
    }
}

fn encode_points(points: &[LatticePoint]) -> Vec<Vec<JsonInt>> {
    points
        .iter()
        .map(|p| p.coords().iter().cloned().map(JsonInt).collect())
        .collect()
}

fn encode_matrix(m: &IntMatrix) -> Vec<Vec<JsonInt>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().cloned().map(JsonInt).collect())
        .collect()
}

fn any_exceeds(groups: &[&[Vec<JsonInt>]]) -> bool {
    groups
        .iter()
        .any(|rows| rows.iter().flatten().any(|v| !v.fits_in_number()))
}

/// The input document accepted by every analysis command: exactly one of
/// `points` (the configuration A) or `polytope_vertices` (lattice points
/// are then enumerated from the hull), the order k, and options.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<JsonInt>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polytope_vertices: Option<Vec<Vec<JsonInt>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(default, skip_serializing_if = "InputOptions::is_default")]
    pub options: InputOptions,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InputOptions {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_dimension: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl InputOptions {
    fn is_default(&self) -> bool {
        self == &InputOptions::default()
    }
}

impl InputDocument {
    pub fn from_points(points: &PointConfiguration, order: u32) -> Self {
        InputDocument {
            schema: Some(SCHEMA_VERSION),
            points: Some(encode_points(points.points())),
            polytope_vertices: None,
            order: Some(order),
            options: InputOptions::default(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn mode(&self) -> Result<Option<EnumerationMode>> {
        match self.options.mode.as_deref() {
            None => Ok(None),
            Some("full") => Ok(Some(EnumerationMode::Full)),
            Some("exchange") => Ok(Some(EnumerationMode::Exchange)),
            Some(other) => Err(Error::Schema(format!(
                "field \"options.mode\": expected \"full\" or \"exchange\", found {other:?}"
            ))),
        }
    }

    /// Resolves the document into a point configuration, applying the
    /// vertex-hull expansion when `polytope_vertices` is given. Reports
    /// schema violations with the offending field named.
    pub fn resolve_configuration(&self) -> Result<PointConfiguration> {
        if let Some(schema) = self.schema {
            if schema != SCHEMA_VERSION {
                return Err(Error::Schema(format!(
                    "field \"schema\": unsupported version {schema}, expected {SCHEMA_VERSION}"
                )));
            }
        }
        let (rows, field, from_vertices) = match (&self.points, &self.polytope_vertices) {
            (Some(p), None) => (p, "points", false),
            (None, Some(v)) => (v, "polytope_vertices", true),
            (Some(_), Some(_)) => {
                return Err(Error::Schema(
                    "fields \"points\" and \"polytope_vertices\" are mutually exclusive"
                        .to_string(),
                ))
            }
            (None, None) => {
                return Err(Error::Schema(
                    "one of the fields \"points\" or \"polytope_vertices\" is required"
                        .to_string(),
                ))
            }
        };
        if rows.is_empty() {
            return Err(Error::Schema(format!(
                "field \"{field}\": at least one vector is required"
            )));
        }
        let width = rows[0].len();
        if width == 0 {
            return Err(Error::Schema(format!(
                "field \"{field}\": vectors must have at least one coordinate"
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::Schema(format!(
                    "field \"{field}[{i}]\": expected {width} coordinates, found {}",
                    row.len()
                )));
            }
        }
        let points: Vec<LatticePoint> = rows
            .iter()
            .map(|r| LatticePoint::new(r.iter().map(|v| v.0.clone()).collect()))
            .collect();
        let cfg = PointConfiguration::new(width, points)?;
        if !from_vertices {
            return Ok(cfg);
        }
        let strict = self.options.strict_dimension.unwrap_or(false);
        let hull = if strict {
            crate::polytope::convex_hull_strict(&cfg)?
        } else {
            crate::polytope::convex_hull(&cfg)?
        };
        Ok(crate::polytope::lattice_points(&hull))
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct JetsDocument {
    pub schema: u32,
    pub command: String,
    pub order: u32,
    pub ambient_rank: usize,
    pub point_count: usize,
    pub rows: usize,
    pub cols: usize,
    pub row_index: Vec<Vec<u32>>,
    pub matrix: Vec<Vec<JsonInt>>,
    pub rank: usize,
    pub osculating_dimension: usize,
    pub generically_spanned: bool,
    pub integers_exceed_53bit: bool,
}

pub fn jets_document(cfg: &PointConfiguration, jm: &JetMatrix) -> JetsDocument {
    let matrix = encode_matrix(&jm.matrix);
    let rank = jm.rank();
    JetsDocument {
        schema: SCHEMA_VERSION,
        command: "jets".to_string(),
        order: jm.order,
        ambient_rank: cfg.ambient_rank(),
        point_count: cfg.len(),
        rows: jm.matrix.rows(),
        cols: jm.matrix.cols(),
        row_index: jm
            .row_index
            .iter()
            .map(|m| m.exponents().to_vec())
            .collect(),
        integers_exceed_53bit: any_exceeds(&[&matrix]),
        matrix,
        rank,
        osculating_dimension: rank,
        generically_spanned: rank == jm.matrix.rows(),
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct SpannedDocument {
    pub schema: u32,
    pub command: String,
    pub order: u32,
    pub ambient_rank: usize,
    pub q: usize,
    pub osculating_dimension: usize,
    pub generically_spanned: bool,
    pub hull_smooth: bool,
    /// Edge-criterion verdict on the hull; absent when the hull is not
    /// smooth (the criterion then does not apply).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fully_spanned: Option<bool>,
    pub integers_exceed_53bit: bool,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct GaussDocument {
    pub schema: u32,
    pub command: String,
    pub order: u32,
    pub ambient_rank: usize,
    pub q: usize,
    pub mode: String,
    pub b_k: Vec<Vec<JsonInt>>,
    pub b_k_count: usize,
    pub span_rank: usize,
    pub fiber_dimension: usize,
    pub projection: Vec<Vec<JsonInt>>,
    pub fiber_points: Vec<Vec<JsonInt>>,
    pub span_is_full_lattice: bool,
    pub finite: bool,
    pub birational: bool,
    pub veronese_exception: bool,
    pub integers_exceed_53bit: bool,
}

pub fn gauss_document(report: &GaussReport, command: &str) -> GaussDocument {
    let b_k = encode_points(&report.b_k);
    let projection = encode_matrix(&report.projection);
    let fiber_points = encode_points(report.fiber_points.points());
    GaussDocument {
        schema: SCHEMA_VERSION,
        command: command.to_string(),
        order: report.order,
        ambient_rank: report.ambient_rank,
        q: report.q,
        mode: report.mode.as_str().to_string(),
        b_k_count: report.b_k.len(),
        span_rank: report.span_rank,
        fiber_dimension: report.fiber_dimension,
        span_is_full_lattice: report.span_is_full_lattice,
        finite: report.finite,
        birational: report.birational,
        veronese_exception: report.veronese_exception,
        integers_exceed_53bit: any_exceeds(&[&b_k, &projection, &fiber_points]),
        b_k,
        projection,
        fiber_points,
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ClassifyDocument {
    pub schema: u32,
    pub command: String,
    pub order: u32,
    pub ambient_rank: usize,
    pub finite: bool,
    pub birational: bool,
    pub veronese: bool,
    pub smooth: bool,
    pub kjet_spanned: bool,
    pub fiber_dimension: usize,
    pub integers_exceed_53bit: bool,
}

pub fn classify_document(
    cfg: &PointConfiguration,
    k: u32,
    classification: &Classification,
    fiber_dimension: usize,
) -> ClassifyDocument {
    ClassifyDocument {
        schema: SCHEMA_VERSION,
        command: "classify".to_string(),
        order: k,
        ambient_rank: cfg.ambient_rank(),
        finite: classification.finite,
        birational: classification.birational,
        veronese: classification.veronese,
        smooth: classification.smooth,
        kjet_spanned: classification.kjet_spanned,
        fiber_dimension,
        integers_exceed_53bit: false,
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct OracleDocument {
    pub schema: u32,
    pub command: String,
    pub order: u32,
    pub q: usize,
    pub subsets_examined: JsonInt,
    pub b_k_count: usize,
    pub full_matches_oracle: bool,
    pub exchange_lattice_matches: bool,
    pub integers_exceed_53bit: bool,
}

pub fn oracle_document(check: &CrossCheck) -> OracleDocument {
    let subsets = JsonInt(BigInt::from(check.subsets_examined));
    OracleDocument {
        schema: SCHEMA_VERSION,
        command: "oracle".to_string(),
        order: check.order,
        q: check.q,
        integers_exceed_53bit: !subsets.fits_in_number(),
        subsets_examined: subsets,
        b_k_count: check.b_k_size,
        full_matches_oracle: check.full_matches_oracle,
        exchange_lattice_matches: check.exchange_lattice_matches,
    }
}

/// Serializes any document with a trailing newline; output is
/// deterministic because all collections are sorted before encoding.
pub fn to_json_pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize infallibly");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn small_integers_are_numbers_large_are_strings() {
        let small = JsonInt(BigInt::from(42));
        assert_eq!(serde_json::to_string(&small).unwrap(), "42");
        let negative = JsonInt(BigInt::from(-7));
        assert_eq!(serde_json::to_string(&negative).unwrap(), "-7");

        let big = JsonInt(BigInt::from(1u64 << 53) * BigInt::from(3));
        let text = serde_json::to_string(&big).unwrap();
        assert!(text.starts_with('"'));
        let back: JsonInt = serde_json::from_str(&text).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn non_integral_numbers_are_rejected() {
        assert!(serde_json::from_str::<JsonInt>("1.5").is_err());
        assert!(serde_json::from_str::<JsonInt>("1e3").is_err());
    }

    #[test]
    fn input_document_round_trip() {
        let text = r#"{
            "schema": 1,
            "points": [[0, 0], [1, 0], [0, 1]],
            "order": 1
        }"#;
        let doc = InputDocument::parse(text).unwrap();
        let cfg = doc.resolve_configuration().unwrap();
        assert_eq!(cfg.len(), 3);
        assert_eq!(doc.order, Some(1));
    }

    #[test]
    fn schema_errors_name_the_field() {
        let doc = InputDocument::parse(r#"{"points": [[0,0]], "polytope_vertices": [[1,1]]}"#)
            .unwrap();
        let err = doc.resolve_configuration().unwrap_err();
        assert!(err.to_string().contains("points"));

        let doc = InputDocument::parse(r#"{"points": [[0,0],[1]]}"#).unwrap();
        let err = doc.resolve_configuration().unwrap_err();
        assert!(err.to_string().contains("points[1]"));

        let err = InputDocument::parse(r#"{"bogus": 3}"#).unwrap_err();
        assert!(err.to_string().contains("bogus"));
    }

    #[test]
    fn vertex_documents_expand_to_lattice_points() {
        let doc = InputDocument::parse(
            r#"{"polytope_vertices": [[0, 0], [2, 0], [0, 2]], "order": 2}"#,
        )
        .unwrap();
        let cfg = doc.resolve_configuration().unwrap();
        assert_eq!(cfg.len(), 6);
    }

    #[test]
    fn gauss_document_round_trips_bit_exactly() {
        let cfg = crate::families::contracted_quadrilateral();
        let report =
            crate::gauss::analyze(&cfg, 2, EnumerationMode::Full, 1_000_000).unwrap();
        let doc = gauss_document(&report, "gauss");
        let text = to_json_pretty(&doc);
        let parsed: GaussDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.b_k, doc.b_k);
        assert_eq!(parsed.projection, doc.projection);
        assert_eq!(parsed.fiber_dimension, doc.fiber_dimension);
        assert_eq!(to_json_pretty(&parsed), text);
    }

    #[test]
    fn big_entries_set_the_sidecar_flag() {
        let huge = BigInt::one() << 80;
        let m = IntMatrix::from_rows(vec![vec![huge]]);
        let rows = encode_matrix(&m);
        assert!(any_exceeds(&[&rows]));
        let text = serde_json::to_string(&rows).unwrap();
        let back: Vec<Vec<JsonInt>> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rows);
    }
}
