//! JSON ingestion of polytope descriptions and deterministic report
//! serialization.
//!
//! Two input schemas are supported: a plain polytope file (`name` plus
//! exactly one of `vertices` / `inequalities`) and the homogeneous
//! database record format (`id` plus `FACETS` / `VERTICES` rows with a
//! leading offset or homogenizing coordinate). All integers may be JSON
//! numbers or decimal strings, so values outside the double-precision
//! range survive round-trips. Report output is deterministic: object
//! keys are sorted and point lists arrive sorted from the library.

use serde_json::{json, Value};

use crate::classify::{
    ClassificationReport, PairHypothesesReport, ReflexivityFailure, SmoothFanoFailure,
    TriangulationOutcome,
};
use crate::error::{Error, Result};
use crate::exact::{Int, IntMatrix, Rat};
use crate::geometry::Polytope;
use crate::idp::{Decomposition, DecompositionMethod, IdpPairReport};
use crate::lattice::{IdpReport, NormalityReport};
use crate::triangulate::Triangulation;
use crate::unimodular::{CoUnimodularityReport, MinorWitness, SearchedTransform};

fn int_from_value(v: &Value, path: &str) -> Result<Int> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Int::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Int::from(u))
            } else {
                Err(Error::Data(format!("{path}: expected an integer, got {n}")))
            }
        }
        Value::String(s) => s
            .parse::<Int>()
            .map_err(|_| Error::Data(format!("{path}: not a decimal integer: {s:?}"))),
        other => Err(Error::Data(format!(
            "{path}: expected an integer, got {other}"
        ))),
    }
}

fn point_from_value(v: &Value, path: &str) -> Result<Vec<Int>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Data(format!("{path}: expected an array of integers")))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| int_from_value(x, &format!("{path}[{i}]")))
        .collect()
}

fn points_from_value(v: &Value, path: &str) -> Result<Vec<Vec<Int>>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Data(format!("{path}: expected an array of points")))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| point_from_value(x, &format!("{path}[{i}]")))
        .collect()
}

/// An integer as a JSON value: a number when it fits in 64 bits, a
/// decimal string otherwise.
pub fn int_value(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(i) => json!(i),
        Err(_) => json!(x.to_string()),
    }
}

/// An integer point as a JSON array.
pub fn point_value(x: &[Int]) -> Value {
    Value::Array(x.iter().map(int_value).collect())
}

fn points_value<'a>(points: impl IntoIterator<Item = &'a Vec<Int>>) -> Value {
    Value::Array(points.into_iter().map(|p| point_value(p)).collect())
}

/// A rational as a JSON value: integer form when integral and small,
/// otherwise its canonical `p/q` string.
pub fn rat_value(x: &Rat) -> Value {
    if x.is_integer() {
        int_value(&x.to_integer())
    } else {
        json!(x.to_string())
    }
}

fn rat_point_value(x: &[Rat]) -> Value {
    Value::Array(x.iter().map(rat_value).collect())
}

/// Parses a polytope file: `{"name": …, "vertices": [[…]]}` or
/// `{"name": …, "inequalities": [{"normal": […], "rhs": …}]}` with
/// exactly one representation present. Errors carry the offending field
/// path.
pub fn parse_polytope(json_text: &str) -> Result<Polytope> {
    let root: Value = serde_json::from_str(json_text)?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Data("top level: expected an object".into()))?;
    if !obj.get("name").is_some_and(Value::is_string) {
        return Err(Error::Data("name: expected a string".into()));
    }
    match (obj.get("vertices"), obj.get("inequalities")) {
        (Some(_), Some(_)) => Err(Error::Data(
            "vertices/inequalities: exactly one representation allowed, found both".into(),
        )),
        (None, None) => Err(Error::Data(
            "vertices/inequalities: one representation required, found neither".into(),
        )),
        (Some(v), None) => {
            let points = points_from_value(v, "vertices")?;
            Polytope::from_lattice_points(&points)
        }
        (None, Some(v)) => {
            let rows = v
                .as_array()
                .ok_or_else(|| Error::Data("inequalities: expected an array".into()))?;
            let mut normals = Vec::with_capacity(rows.len());
            let mut rhs = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let item = row
                    .as_object()
                    .ok_or_else(|| Error::Data(format!("inequalities[{i}]: expected an object")))?;
                let normal = item
                    .get("normal")
                    .ok_or_else(|| Error::Data(format!("inequalities[{i}].normal: missing")))?;
                let b = item
                    .get("rhs")
                    .ok_or_else(|| Error::Data(format!("inequalities[{i}].rhs: missing")))?;
                normals.push(point_from_value(
                    normal,
                    &format!("inequalities[{i}].normal"),
                )?);
                rhs.push(int_from_value(b, &format!("inequalities[{i}].rhs"))?);
            }
            Polytope::from_inequalities(&normals, &rhs)
        }
    }
}

/// Serializes a polytope back to the polytope-file schema: vertices when
/// it is a lattice polytope, facet inequalities otherwise.
pub fn emit_polytope(name: &str, p: &Polytope) -> String {
    let body = match p.lattice_vertices() {
        Some(verts) => json!({ "name": name, "vertices": points_value(&verts) }),
        None => {
            let rows: Vec<Value> = p
                .normals()
                .iter()
                .zip(p.rhs())
                .map(|(a, b)| json!({ "normal": point_value(a), "rhs": int_value(b) }))
                .collect();
            json!({ "name": name, "inequalities": rows })
        }
    };
    to_pretty_string(&body)
}

/// Parses a homogeneous database record: `FACETS` rows `[b, a…]` meaning
/// `⟨a, x⟩ ≥ −b`, and `VERTICES` rows `[1, x…]`. With both present the
/// two representations are built independently and must describe exactly
/// the same polytope.
pub fn parse_polydb_record(json_text: &str) -> Result<Polytope> {
    let root: Value = serde_json::from_str(json_text)?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Data("top level: expected an object".into()))?;
    match obj.get("id") {
        Some(Value::String(s)) if !s.is_empty() => {}
        _ => return Err(Error::Data("id: expected a nonempty string".into())),
    }
    let from_facets = match obj.get("FACETS") {
        None => None,
        Some(v) => {
            let rows = points_from_value(v, "FACETS")?;
            let mut normals = Vec::with_capacity(rows.len());
            let mut rhs = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let [b, a @ ..] = row.as_slice() else {
                    return Err(Error::Data(format!("FACETS[{i}]: row is empty")));
                };
                normals.push(a.to_vec());
                rhs.push(-b);
            }
            Some(Polytope::from_inequalities(&normals, &rhs)?)
        }
    };
    let from_vertices = match obj.get("VERTICES") {
        None => None,
        Some(v) => {
            let rows = points_from_value(v, "VERTICES")?;
            let mut points = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let [lead, x @ ..] = row.as_slice() else {
                    return Err(Error::Data(format!("VERTICES[{i}]: row is empty")));
                };
                if *lead != Int::from(1) {
                    return Err(Error::Data(format!(
                        "VERTICES[{i}]: homogenizing coordinate must be 1, got {lead}"
                    )));
                }
                points.push(x.to_vec());
            }
            Some(Polytope::from_lattice_points(&points)?)
        }
    };
    match (from_facets, from_vertices) {
        (None, None) => Err(Error::Data(
            "FACETS/VERTICES: at least one representation required".into(),
        )),
        (Some(p), None) | (None, Some(p)) => Ok(p),
        (Some(p), Some(q)) => {
            if p.vertices() == q.vertices() && p.normals() == q.normals() && p.rhs() == q.rhs() {
                Ok(p)
            } else {
                Err(Error::Data(
                    "FACETS and VERTICES describe different polytopes".into(),
                ))
            }
        }
    }
}

/// Parses an integer matrix: either a bare JSON array of rows or an
/// object `{"rows": [[…]]}`.
pub fn parse_matrix(json_text: &str) -> Result<IntMatrix> {
    let root: Value = serde_json::from_str(json_text)?;
    let rows_value = match &root {
        Value::Object(m) => m
            .get("rows")
            .ok_or_else(|| Error::Data("rows: missing".into()))?,
        other => other,
    };
    let rows = points_from_value(rows_value, "rows")?;
    if rows.is_empty() {
        return Err(Error::Data("rows: matrix needs at least one row".into()));
    }
    let width = rows[0].len();
    if width == 0 {
        return Err(Error::Data(
            "rows[0]: matrix needs at least one column".into(),
        ));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != width) {
        return Err(Error::Data(format!(
            "rows[{i}]: expected {width} entries, got {}",
            rows[i].len()
        )));
    }
    Ok(IntMatrix::from_rows(rows))
}

/// Output format for [`emit_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// A report that can be rendered as text or canonical JSON.
pub trait Report {
    /// JSON value; object keys come out sorted when serialized.
    fn to_json(&self) -> Value;
    /// Human-readable lines.
    fn to_text(&self) -> String;
}

/// Renders a report deterministically: same input, same bytes.
pub fn emit_report(report: &dyn Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => to_pretty_string(&report.to_json()),
        ReportFormat::Text => report.to_text(),
    }
}

fn to_pretty_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializing plain values");
    s.push('\n');
    s
}

fn fmt_point(x: &[Int]) -> String {
    let coords: Vec<String> = x.iter().map(Int::to_string).collect();
    format!("({})", coords.join(", "))
}

/// At most `cap` points as text, with an ellipsis line when truncated.
fn fmt_point_list(points: &[Vec<Int>], cap: usize) -> String {
    let mut lines: Vec<String> = points
        .iter()
        .take(cap)
        .map(|p| format!("  {}", fmt_point(p)))
        .collect();
    if points.len() > cap {
        lines.push(format!("  … and {} more", points.len() - cap));
    }
    lines.join("\n")
}

impl Report for IdpPairReport {
    fn to_json(&self) -> Value {
        let samples: Vec<Value> = self
            .samples
            .iter()
            .map(|(x, (y, z))| {
                json!({ "x": point_value(x), "y": point_value(y), "z": point_value(z) })
            })
            .collect();
        json!({
            "idp_pair": self.is_idp_pair(),
            "count_sum_points": self.count_sum_points,
            "count_sumset": self.count_sumset,
            "gap_count": self.gaps.len(),
            "gaps": points_value(&self.gaps),
            "samples": samples,
        })
    }

    fn to_text(&self) -> String {
        let mut out = format!(
            "IDP pair: {}\n|(P+Q) ∩ Z^n| = {}\n|P∩Z^n + Q∩Z^n| = {}\ngap count: {}\n",
            if self.is_idp_pair() { "yes" } else { "no" },
            self.count_sum_points,
            self.count_sumset,
            self.gaps.len(),
        );
        if !self.gaps.is_empty() {
            out.push_str("gaps:\n");
            out.push_str(&fmt_point_list(&self.gaps, 10));
            out.push('\n');
        }
        out
    }
}

impl Report for Decomposition {
    fn to_json(&self) -> Value {
        json!({
            "x": point_value(&self.x),
            "y_rational": rat_point_value(&self.y_rational),
            "z_rational": rat_point_value(&self.z_rational),
            "y_int": point_value(&self.y_int),
            "z_int": point_value(&self.z_int),
            "method": match self.method {
                DecompositionMethod::Oracle => "oracle",
                DecompositionMethod::Rounding => "rounding",
                DecompositionMethod::Fallback => "fallback",
            },
        })
    }

    fn to_text(&self) -> String {
        format!(
            "x = {} decomposes as y + z\ny = {}\nz = {}\nmethod: {:?}\n",
            fmt_point(&self.x),
            fmt_point(&self.y_int),
            fmt_point(&self.z_int),
            self.method,
        )
    }
}

fn reflexivity_failure_value(w: &ReflexivityFailure) -> Value {
    match w {
        ReflexivityFailure::NotLattice => json!({ "kind": "not-lattice" }),
        ReflexivityFailure::OriginNotInterior => json!({ "kind": "origin-not-interior" }),
        ReflexivityFailure::FacetDistance { facet } => {
            json!({ "kind": "facet-distance", "facet": facet })
        }
    }
}

fn smooth_fano_failure_value(w: &SmoothFanoFailure) -> Value {
    match w {
        SmoothFanoFailure::NotReflexive => json!({ "kind": "not-reflexive" }),
        SmoothFanoFailure::NotSimplicial => json!({ "kind": "not-simplicial" }),
        SmoothFanoFailure::FacetNotBasis { facet } => {
            json!({ "kind": "facet-not-basis", "facet": facet })
        }
    }
}

impl Report for ClassificationReport {
    fn to_json(&self) -> Value {
        json!({
            "reflexive": self.reflexive,
            "simplicial": self.simplicial,
            "smooth": self.smooth,
            "smooth_fano": self.smooth_fano,
            "facet_lattice_counts": self.facet_lattice_counts,
            "facet_bound_satisfied": self.facet_bound_satisfied,
            "reflexivity_failure": self.reflexivity_failure.as_ref().map(reflexivity_failure_value),
            "simplicial_failure": self.simplicial_failure,
            "smooth_failure": self.smooth_failure,
            "smooth_fano_failure": self.smooth_fano_failure.as_ref().map(smooth_fano_failure_value),
        })
    }

    fn to_text(&self) -> String {
        let flag = |b: bool| if b { "yes" } else { "no" };
        format!(
            "reflexive: {}\nsimplicial: {}\nsmooth: {}\nsmooth Fano: {}\n\
             facet lattice counts: {:?}\nfacet bound (≤ dim+1): {}\n",
            flag(self.reflexive),
            flag(self.simplicial),
            flag(self.smooth),
            flag(self.smooth_fano),
            self.facet_lattice_counts,
            flag(self.facet_bound_satisfied),
        )
    }
}

impl Report for PairHypothesesReport {
    fn to_json(&self) -> Value {
        let triangulation = match &self.triangulation {
            TriangulationOutcome::Constructed { cells } => {
                json!({ "constructed": true, "cells": cells })
            }
            TriangulationOutcome::NotConstructed { reason } => {
                json!({ "constructed": false, "reason": reason })
            }
        };
        json!({
            "all_hold": self.all_hold(),
            "p_reflexive": self.p_reflexive,
            "p_simplicial": self.p_simplicial,
            "facet_bound_max": self.facet_bound_max,
            "facet_bound_satisfied": self.facet_bound_satisfied,
            "q_is_lattice": self.q_is_lattice,
            "q_contains_origin": self.q_contains_origin,
            "q_vertices_from_p": self.q_vertices_from_p,
            "triangulation": triangulation,
        })
    }

    fn to_text(&self) -> String {
        let flag = |b: bool| if b { "yes" } else { "no" };
        let tri = match &self.triangulation {
            TriangulationOutcome::Constructed { cells } => {
                format!("constructed ({cells} cells)")
            }
            TriangulationOutcome::NotConstructed { reason } => {
                format!("not constructed: {reason}")
            }
        };
        format!(
            "all hypotheses hold: {}\nP reflexive: {}\nP simplicial: {}\n\
             facet lattice bound: max {} ({})\nQ lattice: {}\nQ contains origin: {}\n\
             V(Q) ⊆ V(P) ∪ {{0}}: {}\ncentric unimodular triangulation: {}\n",
            flag(self.all_hold()),
            flag(self.p_reflexive),
            flag(self.p_simplicial),
            self.facet_bound_max,
            flag(self.facet_bound_satisfied),
            flag(self.q_is_lattice),
            flag(self.q_contains_origin),
            flag(self.q_vertices_from_p),
            tri,
        )
    }
}

fn witness_value(w: &MinorWitness) -> Value {
    json!({ "rows": w.rows, "cols": w.cols, "det": int_value(&w.det) })
}

impl Report for CoUnimodularityReport {
    fn to_json(&self) -> Value {
        let certificate = self.certificate.as_ref().map(|c| match c {
            SearchedTransform::Given => json!({ "transform": "given" }),
            SearchedTransform::FacetBasisOfFirst(f) => {
                json!({ "transform": "facet-basis-of-first", "facet": f })
            }
            SearchedTransform::FacetBasisOfSecond(f) => {
                json!({ "transform": "facet-basis-of-second", "facet": f })
            }
        });
        json!({
            "holds": self.holds,
            "verdict": self.verdict(),
            "certificate": certificate,
            "witness": self.witness.as_ref().map(witness_value),
        })
    }

    fn to_text(&self) -> String {
        let mut out = format!("almost co-unimodular: {}\n", self.verdict());
        if let Some(w) = &self.witness {
            out.push_str(&format!(
                "violating minor: rows {:?}, cols {:?}, det {}\n",
                w.rows, w.cols, w.det
            ));
        }
        out
    }
}

impl Report for IdpReport {
    fn to_json(&self) -> Value {
        let per_k: Vec<Value> = self
            .per_k
            .iter()
            .map(|r| {
                json!({
                    "k": r.k,
                    "holds": r.holds,
                    "checked_count": r.checked_count,
                    "sumset_count": r.sumset_count,
                    "gaps": points_value(&r.gaps),
                })
            })
            .collect();
        json!({ "idp": self.holds, "per_k": per_k })
    }

    fn to_text(&self) -> String {
        let mut out = format!("IDP: {}\n", if self.holds { "yes" } else { "no" });
        for r in &self.per_k {
            out.push_str(&format!(
                "k = {}: {} ({} points, {} decomposable)\n",
                r.k,
                if r.holds { "ok" } else { "gaps" },
                r.checked_count,
                r.sumset_count,
            ));
            if !r.gaps.is_empty() {
                out.push_str(&fmt_point_list(&r.gaps, 10));
                out.push('\n');
            }
        }
        out
    }
}

impl Report for NormalityReport {
    fn to_json(&self) -> Value {
        let per_k: Vec<Value> = self
            .per_k
            .iter()
            .map(|r| {
                json!({
                    "k": r.k,
                    "holds": r.holds,
                    "checked_count": r.checked_count,
                    "sumset_count": r.sumset_count,
                    "gaps": points_value(&r.gaps),
                })
            })
            .collect();
        json!({
            "normal": self.holds,
            "base_point": point_value(&self.base_point),
            "lattice_index": self.lattice_index.as_ref().map(int_value),
            "per_k": per_k,
        })
    }

    fn to_text(&self) -> String {
        let mut out = format!("normal: {}\n", if self.holds { "yes" } else { "no" });
        for r in &self.per_k {
            out.push_str(&format!(
                "k = {}: {} ({} coset points, {} decomposable)\n",
                r.k,
                if r.holds { "ok" } else { "gaps" },
                r.checked_count,
                r.sumset_count,
            ));
        }
        out
    }
}

impl Report for Triangulation {
    fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "n_points": self.points.len(),
            "n_cells": self.cells.len(),
            "points": points_value(&self.points),
            "cells": self.cells,
        })
    }

    fn to_text(&self) -> String {
        format!(
            "triangulation in dimension {}: {} points, {} cells\n",
            self.dim,
            self.points.len(),
            self.cells.len(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vec_i;
    use crate::idp::idp_pair_check;

    #[test]
    fn polytope_file_round_trip() {
        let square = r#"{"name":"sq","vertices":[[0,0],[1,0],[0,1],[1,1]]}"#;
        let p = parse_polytope(square).unwrap();
        assert_eq!(p.n_vertices(), 4);
        assert_eq!(p.n_facets(), 4);

        let emitted = emit_polytope("sq", &p);
        let again = parse_polytope(&emitted).unwrap();
        assert_eq!(p.vertices(), again.vertices());
        assert_eq!(p.normals(), again.normals());
        assert_eq!(p.rhs(), again.rhs());

        let simplex = r#"{"name":"t","inequalities":[
            {"normal":[1,0],"rhs":0},
            {"normal":[0,1],"rhs":0},
            {"normal":[-1,-1],"rhs":-1}]}"#;
        let t = parse_polytope(simplex).unwrap();
        assert_eq!(t.n_vertices(), 3);
        assert!(t.lattice_vertices().is_some());
    }

    #[test]
    fn schema_errors_carry_field_paths() {
        let bad_rhs = r#"{"name":"t","inequalities":[{"normal":[1,0],"rhs":"x"}]}"#;
        let err = parse_polytope(bad_rhs).unwrap_err();
        assert!(err.to_string().contains("inequalities[0].rhs"), "{err}");

        let bad_vertex = r#"{"name":"t","vertices":[[0,0],[1,true]]}"#;
        let err = parse_polytope(bad_vertex).unwrap_err();
        assert!(err.to_string().contains("vertices[1][1]"), "{err}");

        let both = r#"{"name":"t","vertices":[[0]],"inequalities":[]}"#;
        assert!(parse_polytope(both).is_err());
        let neither = r#"{"name":"t"}"#;
        assert!(parse_polytope(neither).is_err());
        let unnamed = r#"{"vertices":[[0,0],[1,0],[0,1]]}"#;
        assert!(parse_polytope(unnamed).is_err());
    }

    #[test]
    fn big_integers_survive_as_strings() {
        let text = r#"{"name":"wide","vertices":[
            [0,0],
            ["36893488147419103232",0],
            [0,1],
            ["36893488147419103232",1]]}"#;
        let p = parse_polytope(text).unwrap();
        let big: Int = "36893488147419103232".parse().unwrap();
        assert!(p.lattice_vertices().unwrap().iter().any(|v| v[0] == big));
        // Emission uses strings for values beyond 64 bits.
        let emitted = emit_polytope("wide", &p);
        assert!(emitted.contains("\"36893488147419103232\""));
        let again = parse_polytope(&emitted).unwrap();
        assert_eq!(p.vertices(), again.vertices());
    }

    #[test]
    fn polydb_records() {
        let square = r#"{"id":"sq","FACETS":[[1,1,0],[1,-1,0],[1,0,1],[1,0,-1]],
            "VERTICES":[[1,-1,-1],[1,-1,1],[1,1,-1],[1,1,1]]}"#;
        let p = parse_polydb_record(square).unwrap();
        assert_eq!(p.n_vertices(), 4);
        assert!(p.rhs().iter().all(|b| *b == Int::from(-1)));

        // Vertices-only records get their facets computed.
        let vonly = r#"{"id":"sq","VERTICES":[[1,-1,-1],[1,-1,1],[1,1,-1],[1,1,1]]}"#;
        let q = parse_polydb_record(vonly).unwrap();
        assert_eq!(q.normals(), p.normals());

        // Inconsistent representations are rejected.
        let bad = r#"{"id":"sq","FACETS":[[1,1,0],[1,-1,0],[1,0,1],[1,0,-1]],
            "VERTICES":[[1,-2,-1],[1,-1,1],[1,1,-1],[1,1,1]]}"#;
        let err = parse_polydb_record(bad).unwrap_err();
        assert!(err.to_string().contains("different polytopes"), "{err}");

        // Homogenizing coordinate must be 1.
        let bad_lead = r#"{"id":"sq","VERTICES":[[2,-1,-1],[1,-1,1],[1,1,-1],[1,1,1]]}"#;
        assert!(parse_polydb_record(bad_lead).is_err());
        // Nonempty id required.
        let no_id = r#"{"FACETS":[[1,1,0],[1,-1,0],[1,0,1],[1,0,-1]]}"#;
        assert!(parse_polydb_record(no_id).is_err());
    }

    #[test]
    fn matrix_files() {
        let m = parse_matrix("[[1,0],[0,1],[1,1]]").unwrap();
        assert_eq!((m.nrows(), m.ncols()), (3, 2));
        let m = parse_matrix(r#"{"rows":[[1,-1,0]]}"#).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (1, 3));

        assert!(parse_matrix("[]").is_err());
        assert!(parse_matrix("[[1,0],[1]]")
            .unwrap_err()
            .to_string()
            .contains("rows[1]"));
        assert!(parse_matrix(r#"{"cols":[[1]]}"#).is_err());
    }

    #[test]
    fn report_output_is_deterministic() {
        let p = Polytope::from_lattice_points(&[vec_i(&[0, 0]), vec_i(&[0, 1]), vec_i(&[1, 0])])
            .unwrap();
        let q = Polytope::from_lattice_points(&[vec_i(&[0, 0]), vec_i(&[2, 1]), vec_i(&[3, 1])])
            .unwrap();
        let report = idp_pair_check(&p, &q).unwrap();
        let a = emit_report(&report, ReportFormat::Json);
        let b = emit_report(&report, ReportFormat::Json);
        assert_eq!(a, b);
        assert!(a.contains("\"idp_pair\": false"));
        assert!(
            a.contains("[\n      1,\n      1\n    ]") || a.contains("[1, 1]") || {
                let v: Value = serde_json::from_str(&a).unwrap();
                v["gaps"].as_array().unwrap().contains(&json!([1, 1]))
            }
        );
        // JSON round-trips losslessly.
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v, report.to_json());

        let text = emit_report(&report, ReportFormat::Text);
        assert!(text.contains("IDP pair: no"));
        assert!(text.contains("(1, 1)"));
    }
}
