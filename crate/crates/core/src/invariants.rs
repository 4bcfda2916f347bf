//! Incidence multiplicities, the invariants A, B, C, and the counting lemmas
//! built on them.
//!
//! Everything is an exact integer. B can be half-integral, so it is carried
//! doubled as `two_b`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::cliques::{has_clique, AbstractGraph};
use crate::drawing::{DartId, FaceId, OnePlaneDrawing, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("drawing is disconnected")]
    Disconnected,
    #[error("need at least 3 vertices")]
    TooFewVertices,
    #[error("drawing has crossings")]
    HasCrossings,
    #[error("minimum degree is below 2")]
    MinDegreeTooSmall,
    #[error("drawing contains a triangle")]
    PreconditionNotK3Free,
    #[error("drawing contains K4")]
    NotK4Free,
}

/// η(u, F): occurrences of `u` on the walk of `F`.
pub fn eta(d: &OnePlaneDrawing, u: VertexId, f: FaceId) -> Result<usize, InvariantError> {
    if u as usize >= d.planar_vertex_count() {
        return Err(InvariantError::UnknownVertex(u));
    }
    if f as usize >= d.face_count() {
        return Err(InvariantError::UnknownFace(f));
    }
    Ok(d.face(f).iter().filter(|&&x| d.origin(x) == u).count())
}

/// a(z) for the fake vertex of crossing `c`: incidences with faces of degree ≥ 4.
pub fn a_value(d: &OnePlaneDrawing, c: u32) -> usize {
    d.darts_around(d.fake_vertex(c))
        .iter()
        .filter(|&&x| d.face_degree(d.dart_face(x)) >= 4)
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub x: usize,
    pub a: i64,
    pub two_b: i64,
    pub c: i64,
    /// a(z) per crossing id.
    pub a_values: Vec<usize>,
    /// c(F) for each face of degree ≥ 4.
    pub c_values: BTreeMap<FaceId, usize>,
    pub face_hist: BTreeMap<usize, usize>,
    /// Incidence identity, and the edge formula where it applies (connected, n ≥ 3).
    pub identity_ok: bool,
}

impl InvariantReport {
    /// Report as ordered key/value pairs; the text and JSON forms both use this.
    pub fn pairs(&self) -> Vec<(String, String)> {
        let mut v = vec![
            ("n".to_string(), self.n.to_string()),
            ("m".to_string(), self.m.to_string()),
            ("x".to_string(), self.x.to_string()),
            ("A".to_string(), self.a.to_string()),
            ("twoB".to_string(), self.two_b.to_string()),
            ("C".to_string(), self.c.to_string()),
            ("identity_ok".to_string(), self.identity_ok.to_string()),
        ];
        for (deg, count) in &self.face_hist {
            v.push((format!("face_hist.{deg}"), count.to_string()));
        }
        v
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.pairs() {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

pub fn compute_invariants(d: &OnePlaneDrawing) -> InvariantReport {
    let a_values: Vec<usize> = (0..d.x() as u32).map(|c| a_value(d, c)).collect();
    let mut c_values = BTreeMap::new();
    let mut face_hist = BTreeMap::new();
    let (mut two_b, mut c) = (0i64, 0i64);
    for f in 0..d.face_count() as u32 {
        let deg = d.face_degree(f);
        *face_hist.entry(deg).or_insert(0) += 1;
        if deg >= 4 {
            let cf = d.fake_count(f);
            c_values.insert(f, cf);
            two_b += deg as i64 - 2 * cf as i64;
            c += deg as i64 - 4;
        }
    }
    let a = a_values.iter().map(|&v| v as i64 - 2).sum();
    let mut report = InvariantReport {
        n: d.n(),
        m: d.m(),
        x: d.x(),
        a,
        two_b,
        c,
        a_values,
        c_values,
        face_hist,
        identity_ok: false,
    };
    let formula_ok = if d.is_connected() && d.n() >= 3 {
        formula_residual(&report) == 0
    } else {
        true
    };
    report.identity_ok = incidence_from_report(d, &report).holds && formula_ok;
    report
}

fn formula_residual(r: &InvariantReport) -> i64 {
    let lhs = 4 * r.m as i64;
    let rhs = 12 * r.n as i64 - 24 - 2 * r.a - r.two_b - 3 * r.c;
    lhs - rhs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaCheck {
    pub holds: bool,
    /// 4m − (12n − 24 − 2A − twoB − 3C).
    pub residual: i64,
}

/// Checks 4m = 12n − 24 − 2A − twoB − 3C on a connected drawing with n ≥ 3.
pub fn check_edge_formula(d: &OnePlaneDrawing) -> Result<FormulaCheck, InvariantError> {
    if !d.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    if d.n() < 3 {
        return Err(InvariantError::TooFewVertices);
    }
    let residual = formula_residual(&compute_invariants(d));
    Ok(FormulaCheck {
        holds: residual == 0,
        residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceCheck {
    pub sum_a: usize,
    pub sum_c: usize,
    /// 2A + twoB, i.e. 2(A + B).
    pub two_a_plus_two_b: i64,
    /// Σ_{F≥4} deg(F) − 4x.
    pub degree_excess: i64,
    pub holds: bool,
}

fn incidence_from_report(d: &OnePlaneDrawing, r: &InvariantReport) -> IncidenceCheck {
    let sum_a: usize = r.a_values.iter().sum();
    let sum_c: usize = r.c_values.values().sum();
    let big: i64 = r.c_values.keys().map(|&f| d.face_degree(f) as i64).sum();
    let two_a_plus_two_b = 2 * r.a + r.two_b;
    let degree_excess = big - 4 * r.x as i64;
    IncidenceCheck {
        sum_a,
        sum_c,
        two_a_plus_two_b,
        degree_excess,
        holds: sum_a == sum_c && two_a_plus_two_b == degree_excess,
    }
}

/// Σ_z a(z) = Σ_{F≥4} c(F) and 2(A + B) = Σ_{F≥4} deg(F) − 4x.
pub fn check_incidence_identity(d: &OnePlaneDrawing) -> IncidenceCheck {
    incidence_from_report(d, &compute_invariants(d))
}

fn plane_connected(d: &OnePlaneDrawing) -> Result<(), InvariantError> {
    if d.x() > 0 {
        return Err(InvariantError::HasCrossings);
    }
    if !d.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    Ok(())
}

/// m = 3n − 6 − Σ_{F≥4} (deg(F) − 3) for a connected plane drawing, n ≥ 3.
pub fn plane_edge_count_check(d: &OnePlaneDrawing) -> Result<bool, InvariantError> {
    plane_connected(d)?;
    if d.n() < 3 {
        return Err(InvariantError::TooFewVertices);
    }
    let excess: i64 = (0..d.face_count() as u32)
        .map(|f| d.face_degree(f) as i64)
        .filter(|&deg| deg >= 4)
        .map(|deg| deg - 3)
        .sum();
    Ok(d.m() as i64 == 3 * d.n() as i64 - 6 - excess)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowDegreeReport {
    /// Σ over faces of degree ≠ 4 of (deg − 4).
    pub s: i64,
    pub n2: usize,
    pub n3: usize,
    /// ⌈(s + n3)/2⌉ + 4.
    pub bound: i64,
    pub holds: bool,
    /// All faces are 4-faces except one k-face: (k, ⌈k/2⌉ + 2, holds).
    pub single_face: Option<(usize, i64, bool)>,
    /// All faces are 4-faces except exactly two 6-faces: (bound 6 or 7, holds).
    pub two_hexagons: Option<(i64, bool)>,
}

pub fn low_degree_bound_check(d: &OnePlaneDrawing) -> Result<LowDegreeReport, InvariantError> {
    plane_connected(d)?;
    if (0..d.n() as u32).any(|v| d.degree(v) < 2) {
        return Err(InvariantError::MinDegreeTooSmall);
    }
    let n2 = (0..d.n() as u32).filter(|&v| d.degree(v) == 2).count();
    let n3 = (0..d.n() as u32).filter(|&v| d.degree(v) == 3).count();
    let odd: Vec<usize> = (0..d.face_count() as u32)
        .map(|f| d.face_degree(f))
        .filter(|&deg| deg != 4)
        .collect();
    let s: i64 = odd.iter().map(|&deg| deg as i64 - 4).sum();
    let bound = (s + n3 as i64).div_euclid(2) + (s + n3 as i64).rem_euclid(2) + 4;
    let low = (n2 + n3) as i64;
    let single_face = match odd.as_slice() {
        [k] => {
            let b = (*k as i64 + 1) / 2 + 2;
            Some((*k, b, low >= b))
        }
        _ => None,
    };
    let two_hexagons = match odd.as_slice() {
        [6, 6] => {
            let b = if n3 >= 1 { 7 } else { 6 };
            Some((b, low >= b))
        }
        _ => None,
    };
    Ok(LowDegreeReport {
        s,
        n2,
        n3,
        bound,
        holds: low >= bound,
        single_face,
        two_hexagons,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceClass {
    Fake3,
    True3,
    True4,
    SingleFake4,
    Alternating4,
    AlmostAlternating5,
    Other { degree: usize, fake_count: usize },
}

pub fn classify_face(d: &OnePlaneDrawing, f: FaceId) -> FaceClass {
    let deg = d.face_degree(f);
    let c = d.fake_count(f);
    let class = match (deg, c) {
        (3, 0) => FaceClass::True3,
        (3, 1) => FaceClass::Fake3,
        (4, 0) => FaceClass::True4,
        (4, 1) => FaceClass::SingleFake4,
        (4, 2) => FaceClass::Alternating4,
        (5, 2) => FaceClass::AlmostAlternating5,
        (degree, fake_count) => FaceClass::Other { degree, fake_count },
    };
    if class == FaceClass::Alternating4 {
        // an alternating 4-face has no true edge on its boundary
        debug_assert!(d
            .face(f)
            .iter()
            .all(|&x| d.is_fake(d.origin(x)) != d.is_fake(d.target(x))));
    }
    class
}

pub fn classify_faces(d: &OnePlaneDrawing) -> Vec<FaceClass> {
    (0..d.face_count() as u32)
        .map(|f| classify_face(d, f))
        .collect()
}

/// The sub-drawing keeping exactly the crossed edges.
pub fn crossing_skeleton(d: &OnePlaneDrawing) -> OnePlaneDrawing {
    let keep: Vec<bool> = (0..d.m() as u32).map(|e| d.is_crossed(e)).collect();
    OnePlaneDrawing::new(d.raw().retain_edges(&keep))
        .expect("sub-drawings of valid drawings are valid")
}

/// True vertices of degree ≥ 1 all of whose incident faces are alternating 4-faces.
pub fn alternating_vertices(d: &OnePlaneDrawing) -> Vec<VertexId> {
    (0..d.n() as u32)
        .filter(|&v| {
            let ds = d.darts_around(v);
            !ds.is_empty()
                && ds
                    .iter()
                    .all(|&x| classify_face(d, d.dart_face(x)) == FaceClass::Alternating4)
        })
        .collect()
}

/// Faces at the corners of a vertex in rotation order. The face of outgoing
/// dart `r_i` fills the corner between `r_{i-1}` and `r_i`, so indices `i` and
/// `i + 2` are opposite corners at a fake vertex.
pub fn corner_faces(d: &OnePlaneDrawing, z: VertexId) -> Vec<FaceId> {
    d.darts_around(z).iter().map(|&x| d.dart_face(x)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FakeTriangleReport {
    pub holds: bool,
    pub a: i64,
    /// Crossing ids where the per-vertex condition fails.
    pub failures: Vec<u32>,
}

/// With `require_k3free`: every fake vertex has at most two incident 3-faces,
/// two only when opposite, and A ≥ 0. Otherwise K4-freeness is required and
/// the check is a(z) ≥ 1 for all z, hence A ≥ −x.
pub fn fake_triangle_check(
    d: &OnePlaneDrawing,
    require_k3free: bool,
) -> Result<FakeTriangleReport, InvariantError> {
    let g = AbstractGraph::of_drawing(d);
    let a = compute_invariants(d).a;
    let mut failures = Vec::new();
    if require_k3free {
        if has_clique(&g, 3) {
            return Err(InvariantError::PreconditionNotK3Free);
        }
        for c in 0..d.x() as u32 {
            let faces = corner_faces(d, d.fake_vertex(c));
            let tri: Vec<usize> = (0..4).filter(|&i| d.face_degree(faces[i]) == 3).collect();
            let ok = match tri.len() {
                0 | 1 => true,
                2 => tri[1] - tri[0] == 2,
                _ => false,
            };
            if !ok {
                failures.push(c);
            }
        }
        Ok(FakeTriangleReport {
            holds: failures.is_empty() && a >= 0,
            a,
            failures,
        })
    } else {
        if has_clique(&g, 4) {
            return Err(InvariantError::NotK4Free);
        }
        for c in 0..d.x() as u32 {
            if a_value(d, c) == 0 {
                failures.push(c);
            }
        }
        Ok(FakeTriangleReport {
            holds: failures.is_empty() && a >= -(d.x() as i64),
            a,
            failures,
        })
    }
}

/// Fake vertices are never adjacent, and a face carries at most ⌊deg/2⌋ fake occurrences.
pub fn fake_structure_ok(d: &OnePlaneDrawing) -> bool {
    let non_adjacent =
        (0..d.dart_count() as DartId).all(|x| !(d.is_fake(d.origin(x)) && d.is_fake(d.target(x))));
    let sparse = (0..d.face_count() as u32).all(|f| d.fake_count(f) <= d.face_degree(f) / 2);
    non_adjacent && sparse
}

/// Every face other than `except` is a fake 3-face or an alternating 4-face.
pub fn all_fake3_or_alternating_except(d: &OnePlaneDrawing, except: Option<FaceId>) -> bool {
    (0..d.face_count() as u32)
        .filter(|&f| Some(f) != except)
        .all(|f| {
            matches!(
                classify_face(d, f),
                FaceClass::Fake3 | FaceClass::Alternating4
            )
        })
}

pub fn count_class(d: &OnePlaneDrawing, class: FaceClass) -> usize {
    classify_faces(d)
        .into_iter()
        .filter(|&c| c == class)
        .count()
}
