//! Combinatorial 1-plane drawings.
//!
//! A drawing is stored as a rotation system on the true vertices plus a list
//! of crossings. Each crossing carries an orientation bit that fixes the
//! cyclic order of the four half-segments at its fake vertex. From this the
//! planarization is built eagerly: darts, the rotation successor `next`, and
//! the face walks.
//!
//! Dart layout: every segment `s` owns the twin pair `(2s, 2s+1)`, so the twin
//! of a dart is `d ^ 1`. An uncrossed edge is one segment whose even dart
//! leaves the first-listed endpoint. A crossed edge is two segments, one per
//! endpoint, whose even dart leaves the true endpoint and whose odd dart leaves
//! the fake vertex. Fake vertex of crossing `c` has planarization id `n + c`.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

pub type VertexId = u32;
pub type EdgeId = u32;
pub type CrossingId = u32;
pub type DartId = u32;
pub type FaceId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// ccw order at the fake vertex is (e.0, f.0, e.1, f.1).
    Pos,
    /// ccw order at the fake vertex is (e.0, f.1, e.1, f.0).
    Neg,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Pos => Orientation::Neg,
            Orientation::Neg => Orientation::Pos,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Pos => "pos",
            Orientation::Neg => "neg",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [EdgeId; 2],
    pub orientation: Orientation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    True,
    Fake,
}

/// Unvalidated drawing data. Constructions edit this and hand it to
/// [`OnePlaneDrawing::new`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawDrawing {
    pub labels: Vec<Option<String>>,
    pub edges: Vec<[VertexId; 2]>,
    pub crossings: Vec<Crossing>,
    /// Counterclockwise incident edge ids at each true vertex.
    pub rotations: Vec<Vec<EdgeId>>,
}

impl RawDrawing {
    pub fn with_vertices(n: usize) -> Self {
        RawDrawing {
            labels: vec![None; n],
            edges: Vec::new(),
            crossings: Vec::new(),
            rotations: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Keeps only edges with `keep[e]`; crossings losing an edge disappear and
    /// the surviving partner becomes uncrossed. Edge ids are compacted.
    pub fn retain_edges(&self, keep: &[bool]) -> RawDrawing {
        let mut map = vec![u32::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (e, &ends) in self.edges.iter().enumerate() {
            if keep[e] {
                map[e] = edges.len() as u32;
                edges.push(ends);
            }
        }
        let crossings = self
            .crossings
            .iter()
            .filter(|c| keep[c.edges[0] as usize] && keep[c.edges[1] as usize])
            .map(|c| Crossing {
                edges: [map[c.edges[0] as usize], map[c.edges[1] as usize]],
                orientation: c.orientation,
            })
            .collect();
        let rotations = self
            .rotations
            .iter()
            .map(|r| {
                r.iter()
                    .filter(|&&e| keep[e as usize])
                    .map(|&e| map[e as usize])
                    .collect()
            })
            .collect();
        RawDrawing {
            labels: self.labels.clone(),
            edges,
            crossings,
            rotations,
        }
    }

    /// Deletes the given true vertices with their edges; survivors are renumbered
    /// in increasing order.
    pub fn remove_vertices(&self, gone: &[VertexId]) -> RawDrawing {
        let gone: HashSet<VertexId> = gone.iter().copied().collect();
        let keep: Vec<bool> = self
            .edges
            .iter()
            .map(|[a, b]| !gone.contains(a) && !gone.contains(b))
            .collect();
        let mut r = self.retain_edges(&keep);
        let mut vmap = vec![u32::MAX; self.n()];
        let mut next = 0u32;
        for (v, slot) in vmap.iter_mut().enumerate() {
            if !gone.contains(&(v as u32)) {
                *slot = next;
                next += 1;
            }
        }
        r.labels = (0..self.n())
            .filter(|v| !gone.contains(&(*v as u32)))
            .map(|v| self.labels[v].clone())
            .collect();
        r.rotations = (0..self.n())
            .filter(|v| !gone.contains(&(*v as u32)))
            .map(|v| r.rotations[v].clone())
            .collect();
        for e in r.edges.iter_mut() {
            *e = [vmap[e[0] as usize], vmap[e[1] as usize]];
        }
        r
    }

    /// Mirror image: all rotations reversed, all crossing orientations flipped.
    pub fn mirrored(&self) -> RawDrawing {
        let mut r = self.clone();
        for rot in r.rotations.iter_mut() {
            rot.reverse();
        }
        for c in r.crossings.iter_mut() {
            c.orientation = c.orientation.flipped();
        }
        r
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.rotations.get(a as usize)?.iter().copied().find(|&e| {
            let [p, q] = self.edges[e as usize];
            (p == a && q == b) || (p == b && q == a)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("duplicate edge {edge} between {u} and {v}")]
    DuplicateEdge {
        edge: EdgeId,
        u: VertexId,
        v: VertexId,
    },
    #[error("edge {edge} is a loop at vertex {v}")]
    LoopEdge { edge: EdgeId, v: VertexId },
    #[error("edge {edge} is crossed more than once")]
    EdgeCrossedTwice { edge: EdgeId },
    #[error("crossing {crossing}: edges {e} and {f} share an endpoint")]
    AdjacentCrossing {
        crossing: CrossingId,
        e: EdgeId,
        f: EdgeId,
    },
    #[error("vertex {v}: {msg}")]
    BadRotation { v: VertexId, msg: String },
    #[error("component containing vertex {v} has Euler characteristic {chi}, expected 2")]
    NotGenusZero { v: VertexId, chi: i64 },
    #[error(
        "crossing {crossing}: declared orientation is inconsistent with the surrounding rotations"
    )]
    BadCrossOrientation { crossing: CrossingId },
}

/// A validated 1-plane drawing together with its planarization.
#[derive(Debug, Clone)]
pub struct OnePlaneDrawing {
    raw: RawDrawing,
    edge_crossing: Vec<Option<CrossingId>>,
    /// First segment of each edge; crossed edges own `seg` and `seg + 1`.
    edge_seg: Vec<u32>,
    dart_origin: Vec<VertexId>,
    dart_next: Vec<DartId>,
    dart_edge: Vec<EdgeId>,
    dart_face: Vec<FaceId>,
    /// One outgoing dart per planarization vertex (`u32::MAX` when isolated).
    vertex_dart: Vec<DartId>,
    faces: Vec<Vec<DartId>>,
    components: usize,
}

impl PartialEq for OnePlaneDrawing {
    fn eq(&self, other: &Self) -> bool {
        self.raw == other.raw
    }
}

impl Eq for OnePlaneDrawing {}

/// Plane-graph summary of the planarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planarization {
    pub vertex_count: usize,
    pub segment_count: usize,
    /// Vertex sequence of every face walk, by face id.
    pub faces: Vec<Vec<VertexId>>,
}

struct Skeleton {
    edge_crossing: Vec<Option<CrossingId>>,
    edge_seg: Vec<u32>,
    dart_origin: Vec<VertexId>,
    dart_next: Vec<DartId>,
    dart_edge: Vec<EdgeId>,
    vertex_dart: Vec<DartId>,
}

impl OnePlaneDrawing {
    pub fn new(raw: RawDrawing) -> Result<Self, DrawingError> {
        check_simple(&raw)?;
        let edge_crossing = check_crossings(&raw)?;
        check_rotations(&raw)?;
        let sk = build_darts(&raw, edge_crossing, None);
        let (faces, dart_face) = trace_faces(&sk.dart_next);
        if let Err(err) = euler_check(&raw, &sk, &faces) {
            // Pinpoint a crossing whose flipped orientation would repair the genus.
            for c in 0..raw.crossings.len() {
                let sk2 = build_darts(&raw, sk.edge_crossing.clone(), Some(c));
                let (f2, _) = trace_faces(&sk2.dart_next);
                if euler_check(&raw, &sk2, &f2).is_ok() {
                    return Err(DrawingError::BadCrossOrientation { crossing: c as u32 });
                }
            }
            return Err(err);
        }
        let components = count_components(raw.n(), &raw.edges);
        Ok(OnePlaneDrawing {
            raw,
            edge_crossing: sk.edge_crossing,
            edge_seg: sk.edge_seg,
            dart_origin: sk.dart_origin,
            dart_next: sk.dart_next,
            dart_edge: sk.dart_edge,
            dart_face,
            vertex_dart: sk.vertex_dart,
            faces,
            components,
        })
    }

    pub fn raw(&self) -> &RawDrawing {
        &self.raw
    }

    pub fn into_raw(self) -> RawDrawing {
        self.raw
    }

    /// Number of true vertices.
    pub fn n(&self) -> usize {
        self.raw.labels.len()
    }

    pub fn m(&self) -> usize {
        self.raw.edges.len()
    }

    /// Number of crossings (= fake vertices).
    pub fn x(&self) -> usize {
        self.raw.crossings.len()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.raw.labels.get(v as usize).and_then(|l| l.as_deref())
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.raw.edges
    }

    pub fn edge(&self, e: EdgeId) -> [VertexId; 2] {
        self.raw.edges[e as usize]
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.raw.crossings
    }

    pub fn crossing_of(&self, e: EdgeId) -> Option<CrossingId> {
        self.edge_crossing[e as usize]
    }

    pub fn is_crossed(&self, e: EdgeId) -> bool {
        self.edge_crossing[e as usize].is_some()
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.raw.rotations[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.raw.rotations[v as usize].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.raw.edge_between(a, b).is_some()
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.raw.edge_between(a, b)
    }

    /// Number of planarization vertices, `n + x`.
    pub fn planar_vertex_count(&self) -> usize {
        self.n() + self.x()
    }

    /// Number of planarization segments, `m + 2x`.
    pub fn segment_count(&self) -> usize {
        self.dart_origin.len() / 2
    }

    pub fn fake_vertex(&self, c: CrossingId) -> VertexId {
        (self.n() + c as usize) as VertexId
    }

    pub fn vertex_kind(&self, v: VertexId) -> VertexKind {
        if (v as usize) < self.n() {
            VertexKind::True
        } else {
            VertexKind::Fake
        }
    }

    pub fn is_fake(&self, v: VertexId) -> bool {
        self.vertex_kind(v) == VertexKind::Fake
    }

    pub fn dart_count(&self) -> usize {
        self.dart_origin.len()
    }

    pub fn twin(&self, d: DartId) -> DartId {
        d ^ 1
    }

    pub fn origin(&self, d: DartId) -> VertexId {
        self.dart_origin[d as usize]
    }

    pub fn target(&self, d: DartId) -> VertexId {
        self.dart_origin[(d ^ 1) as usize]
    }

    /// Counterclockwise successor of `d` around its origin.
    pub fn next(&self, d: DartId) -> DartId {
        self.dart_next[d as usize]
    }

    /// Successor of `d` along its face walk.
    pub fn face_successor(&self, d: DartId) -> DartId {
        self.dart_next[(d ^ 1) as usize]
    }

    pub fn dart_edge(&self, d: DartId) -> EdgeId {
        self.dart_edge[d as usize]
    }

    pub fn dart_face(&self, d: DartId) -> FaceId {
        self.dart_face[d as usize]
    }

    /// Outgoing darts of a planarization vertex in counterclockwise order.
    pub fn darts_around(&self, v: VertexId) -> Vec<DartId> {
        let start = self.vertex_dart[v as usize];
        if start == u32::MAX {
            return Vec::new();
        }
        let mut out = vec![start];
        let mut d = self.dart_next[start as usize];
        while d != start {
            out.push(d);
            d = self.dart_next[d as usize];
        }
        out
    }

    /// The dart leaving true vertex `v` along edge `e`.
    pub fn dart_from(&self, v: VertexId, e: EdgeId) -> DartId {
        let [a, _] = self.raw.edges[e as usize];
        let s = self.edge_seg[e as usize];
        match self.edge_crossing[e as usize] {
            None => 2 * s + u32::from(v != a),
            Some(_) => 2 * (s + u32::from(v != a)),
        }
    }

    pub fn faces(&self) -> &[Vec<DartId>] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &[DartId] {
        &self.faces[f as usize]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.faces[f as usize].len()
    }

    /// Vertices along the walk of face `f`.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f as usize]
            .iter()
            .map(|&d| self.origin(d))
            .collect()
    }

    /// Number of fake-vertex occurrences on the walk of `f`.
    pub fn fake_count(&self, f: FaceId) -> usize {
        self.faces[f as usize]
            .iter()
            .filter(|&&d| self.is_fake(self.origin(d)))
            .count()
    }

    /// Connected components of the abstract graph (isolated vertices count).
    pub fn connectivity(&self) -> usize {
        self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    pub fn planarization_view(&self) -> Planarization {
        Planarization {
            vertex_count: self.planar_vertex_count(),
            segment_count: self.segment_count(),
            faces: (0..self.faces.len() as u32)
                .map(|f| self.face_vertices(f))
                .collect(),
        }
    }

    /// Planarization as a simple graph on `n + x` vertices, one pair per segment.
    pub fn planarization_edges(&self) -> Vec<[VertexId; 2]> {
        (0..self.segment_count())
            .map(|s| [self.dart_origin[2 * s], self.dart_origin[2 * s + 1]])
            .collect()
    }

    /// The two edges meeting at a fake vertex, or `None` for true vertices.
    pub fn crossing_at(&self, v: VertexId) -> Option<&Crossing> {
        (v as usize)
            .checked_sub(self.n())
            .map(|c| &self.raw.crossings[c])
    }
}

fn check_simple(raw: &RawDrawing) -> Result<(), DrawingError> {
    let n = raw.n() as u32;
    let mut seen = HashSet::new();
    for (e, &[a, b]) in raw.edges.iter().enumerate() {
        let e = e as u32;
        if a >= n || b >= n {
            return Err(DrawingError::Syntax {
                line: 0,
                msg: format!("edge {e} references unknown vertex"),
            });
        }
        if a == b {
            return Err(DrawingError::LoopEdge { edge: e, v: a });
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(DrawingError::DuplicateEdge {
                edge: e,
                u: a,
                v: b,
            });
        }
    }
    Ok(())
}

fn check_crossings(raw: &RawDrawing) -> Result<Vec<Option<CrossingId>>, DrawingError> {
    let m = raw.edges.len() as u32;
    let mut of = vec![None; raw.edges.len()];
    for (c, cr) in raw.crossings.iter().enumerate() {
        let c = c as u32;
        let [e, f] = cr.edges;
        if e >= m || f >= m {
            return Err(DrawingError::Syntax {
                line: 0,
                msg: format!("crossing {c} references unknown edge"),
            });
        }
        if e == f {
            return Err(DrawingError::EdgeCrossedTwice { edge: e });
        }
        for g in [e, f] {
            if of[g as usize].is_some() {
                return Err(DrawingError::EdgeCrossedTwice { edge: g });
            }
            of[g as usize] = Some(c);
        }
        let [a, b] = raw.edges[e as usize];
        let [p, q] = raw.edges[f as usize];
        if a == p || a == q || b == p || b == q {
            return Err(DrawingError::AdjacentCrossing { crossing: c, e, f });
        }
    }
    Ok(of)
}

fn check_rotations(raw: &RawDrawing) -> Result<(), DrawingError> {
    if raw.rotations.len() != raw.n() {
        return Err(DrawingError::Syntax {
            line: 0,
            msg: "rotation table size differs from vertex count".into(),
        });
    }
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); raw.n()];
    for (e, &[a, b]) in raw.edges.iter().enumerate() {
        incident[a as usize].push(e as u32);
        incident[b as usize].push(e as u32);
    }
    for (v, rot) in raw.rotations.iter().enumerate() {
        let mut got = rot.clone();
        got.sort_unstable();
        if got != incident[v] {
            let msg = if got.windows(2).any(|w| w[0] == w[1]) {
                "rotation repeats an edge".to_string()
            } else {
                "rotation is not a permutation of the incident edges".to_string()
            };
            return Err(DrawingError::BadRotation { v: v as u32, msg });
        }
    }
    Ok(())
}

fn build_darts(
    raw: &RawDrawing,
    edge_crossing: Vec<Option<CrossingId>>,
    flip: Option<usize>,
) -> Skeleton {
    let n = raw.n();
    let mut edge_seg = Vec::with_capacity(raw.edges.len());
    let mut segs = 0u32;
    for c in &edge_crossing {
        edge_seg.push(segs);
        segs += if c.is_some() { 2 } else { 1 };
    }
    let nd = 2 * segs as usize;
    let mut dart_origin = vec![0; nd];
    let mut dart_edge = vec![0; nd];
    for (e, &[a, b]) in raw.edges.iter().enumerate() {
        let s = edge_seg[e] as usize;
        match edge_crossing[e] {
            None => {
                dart_origin[2 * s] = a;
                dart_origin[2 * s + 1] = b;
                dart_edge[2 * s] = e as u32;
                dart_edge[2 * s + 1] = e as u32;
            }
            Some(c) => {
                let z = (n + c as usize) as u32;
                dart_origin[2 * s] = a;
                dart_origin[2 * s + 1] = z;
                dart_origin[2 * s + 2] = b;
                dart_origin[2 * s + 3] = z;
                for k in 0..4 {
                    dart_edge[2 * s + k] = e as u32;
                }
            }
        }
    }
    let out_true = |v: u32, e: u32| -> u32 {
        let [a, _] = raw.edges[e as usize];
        let s = edge_seg[e as usize];
        match edge_crossing[e as usize] {
            None => 2 * s + u32::from(v != a),
            Some(_) => 2 * (s + u32::from(v != a)),
        }
    };
    let mut dart_next = vec![u32::MAX; nd];
    let mut vertex_dart = vec![u32::MAX; n + raw.crossings.len()];
    for (v, rot) in raw.rotations.iter().enumerate() {
        let ds: Vec<u32> = rot.iter().map(|&e| out_true(v as u32, e)).collect();
        for i in 0..ds.len() {
            dart_next[ds[i] as usize] = ds[(i + 1) % ds.len()];
        }
        if let Some(&d) = ds.first() {
            vertex_dart[v] = d;
        }
    }
    for (c, cr) in raw.crossings.iter().enumerate() {
        let [e, f] = cr.edges;
        let se = edge_seg[e as usize];
        let sf = edge_seg[f as usize];
        // darts leaving z toward e.0, e.1, f.0, f.1
        let (e0, e1, f0, f1) = (2 * se + 1, 2 * se + 3, 2 * sf + 1, 2 * sf + 3);
        let mut o = cr.orientation;
        if flip == Some(c) {
            o = o.flipped();
        }
        let ring = match o {
            Orientation::Pos => [e0, f0, e1, f1],
            Orientation::Neg => [e0, f1, e1, f0],
        };
        for i in 0..4 {
            dart_next[ring[i] as usize] = ring[(i + 1) % 4];
        }
        vertex_dart[n + c] = e0;
    }
    Skeleton {
        edge_crossing,
        edge_seg,
        dart_origin,
        dart_next,
        dart_edge,
        vertex_dart,
    }
}

/// Face walks in canonical form: each starts at its smallest dart, faces
/// ordered by that dart.
pub(crate) fn trace_faces(next: &[u32]) -> (Vec<Vec<u32>>, Vec<u32>) {
    let nd = next.len();
    let mut face_of = vec![u32::MAX; nd];
    let mut faces = Vec::new();
    for d0 in 0..nd {
        if face_of[d0] != u32::MAX {
            continue;
        }
        let fid = faces.len() as u32;
        let mut walk = Vec::new();
        let mut d = d0;
        while face_of[d] == u32::MAX {
            face_of[d] = fid;
            walk.push(d as u32);
            d = next[d ^ 1] as usize;
        }
        faces.push(walk);
    }
    (faces, face_of)
}

fn euler_check(raw: &RawDrawing, sk: &Skeleton, faces: &[Vec<u32>]) -> Result<(), DrawingError> {
    let nv = raw.n() + raw.crossings.len();
    let mut uf = UnionFind::new(nv);
    for s in 0..sk.dart_origin.len() / 2 {
        uf.union(
            sk.dart_origin[2 * s] as usize,
            sk.dart_origin[2 * s + 1] as usize,
        );
    }
    let mut chi = vec![0i64; nv];
    let mut has_edge = vec![false; nv];
    for v in 0..nv {
        chi[uf.find(v)] += 1;
    }
    for s in 0..sk.dart_origin.len() / 2 {
        let r = uf.find(sk.dart_origin[2 * s] as usize);
        chi[r] -= 1;
        has_edge[r] = true;
    }
    for f in faces {
        chi[uf.find(sk.dart_origin[f[0] as usize] as usize)] += 1;
    }
    for v in 0..nv {
        if uf.find(v) == v && has_edge[v] && chi[v] != 2 {
            return Err(DrawingError::NotGenusZero {
                v: v as u32,
                chi: chi[v],
            });
        }
    }
    Ok(())
}

pub(crate) fn count_components(n: usize, edges: &[[u32; 2]]) -> usize {
    let mut uf = UnionFind::new(n);
    for &[a, b] in edges {
        uf.union(a as usize, b as usize);
    }
    (0..n).filter(|&v| uf.find(v) == v).count()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
