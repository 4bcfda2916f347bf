//! Generators for the extremal drawings and the bundled fixtures.

use std::fmt;

use thiserror::Error;

use crate::cliques::{find_clique, has_clique, turan_graph, turan_size, AbstractGraph};
use crate::drawing::{
    Crossing, DrawingError, EdgeId, FaceId, OnePlaneDrawing, Orientation, RawDrawing, VertexId,
};
use crate::geometry::{straight_planarization, Point};
use crate::invariants::corner_faces;
use crate::opg;
use crate::search::{drawing_search, SearchLimits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("seed {0:?} is not a K4 whose diagonals cross each other")]
    NoCrossedK4AtSeed([VertexId; 4]),
    #[error("construction would create a parallel edge {0}-{1}")]
    ResultNotSimple(VertexId, VertexId),
    #[error("construction produced an invalid drawing: {0}")]
    Invalid(#[from] DrawingError),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("fixture {name} is invalid: {reason}")]
    FixtureInvalid { name: String, reason: String },
}

type Result<T> = std::result::Result<T, ConstructionError>;

/// A named generator with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    CubeG8,
    Ladder(usize),
    K4Extremal(usize),
    K5Optimal(usize),
    TuranDrawing(usize, usize),
    Fixture(String),
}

impl Family {
    pub fn generate(&self) -> Result<OnePlaneDrawing> {
        match self {
            Family::CubeG8 => Ok(gen_cube_g8()),
            Family::Ladder(k) => gen_ladder_h(*k),
            Family::K4Extremal(n) => gen_k4_extremal(*n),
            Family::K5Optimal(n) => gen_k5_optimal(*n),
            Family::TuranDrawing(n, k) => gen_turan_drawing(*n, *k),
            Family::Fixture(name) => load_fixture(name),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CubeG8 => write!(f, "cube-g8"),
            Family::Ladder(k) => write!(f, "ladder k={k}"),
            Family::K4Extremal(n) => write!(f, "k4-extremal n={n}"),
            Family::K5Optimal(n) => write!(f, "k5-optimal n={n}"),
            Family::TuranDrawing(n, k) => write!(f, "turan n={n} k={k}"),
            Family::Fixture(name) => write!(f, "fixture {name}"),
        }
    }
}

fn push_edge(raw: &mut RawDrawing, a: VertexId, b: VertexId) -> EdgeId {
    raw.edges.push([a, b]);
    (raw.edges.len() - 1) as EdgeId
}

/// Adds both diagonals, crossing each other, to every face of a plane
/// quadrangulation.
pub fn diagonalize_quadrangulation(q: &OnePlaneDrawing) -> Result<OnePlaneDrawing> {
    if q.x() != 0 || (0..q.face_count() as u32).any(|f| q.face_degree(f) != 4) {
        return Err(ConstructionError::BadParam(
            "expected a plane drawing with only 4-faces".into(),
        ));
    }
    let mut raw = q.raw().clone();
    // diag[f] = (edge p0p2, edge p1p3) for face walk p0 p1 p2 p3
    let mut diag = Vec::with_capacity(q.face_count());
    for f in 0..q.face_count() as u32 {
        let p = q.face_vertices(f);
        let e = push_edge(&mut raw, p[0], p[2]);
        let g = push_edge(&mut raw, p[1], p[3]);
        // walks trace faces clockwise, so p0 f0 p2 f1 is the clockwise order
        raw.crossings.push(Crossing {
            edges: [e, g],
            orientation: Orientation::Neg,
        });
        diag.push((e, g, p));
    }
    for v in 0..q.n() as u32 {
        let ds = q.darts_around(v);
        let mut rot = Vec::with_capacity(2 * ds.len());
        for i in 0..ds.len() {
            rot.push(q.dart_edge(ds[i]));
            let f = q.dart_face(ds[(i + 1) % ds.len()]);
            let (e, g, ref p) = diag[f as usize];
            rot.push(if p[0] == v || p[2] == v { e } else { g });
        }
        raw.rotations[v as usize] = rot;
    }
    Ok(OnePlaneDrawing::new(raw)?)
}

fn plane_cube() -> OnePlaneDrawing {
    let pts: Vec<Point> = vec![
        (-2.0, -2.0),
        (2.0, -2.0),
        (2.0, 2.0),
        (-2.0, 2.0),
        (-1.0, -1.0),
        (1.0, -1.0),
        (1.0, 1.0),
        (-1.0, 1.0),
    ];
    let mut edges = Vec::new();
    for i in 0..4u32 {
        edges.push([i, (i + 1) % 4]);
        edges.push([4 + i, 4 + (i + 1) % 4]);
        edges.push([i, 4 + i]);
    }
    OnePlaneDrawing::new(straight_planarization(vec![None; 8], &pts, edges, &[]))
        .expect("plane cube")
}

/// The cube with both diagonals in each of its six faces.
pub fn gen_cube_g8() -> OnePlaneDrawing {
    diagonalize_quadrangulation(&plane_cube()).expect("the cube is a quadrangulation")
}

fn ladder_ids(k: usize) -> (impl Fn(usize) -> u32, impl Fn(usize) -> u32, u32, u32) {
    let a = |i: usize| (i - 1) as u32;
    let b = move |i: usize| (k + i - 1) as u32;
    (a, b, 2 * k as u32, 2 * k as u32 + 1)
}

/// The ladder L_k joined to two apexes u (above, adjacent to every a_i) and
/// v (below, adjacent to every b_i), minus u b_1 and v a_k. Edge u b_{i+1}
/// crosses a_i a_{i+1} and v a_i crosses b_i b_{i+1}. Vertex ids:
/// a_i = i - 1, b_i = k + i - 1, u = 2k, v = 2k + 1.
pub fn gen_ladder_h(k: usize) -> Result<OnePlaneDrawing> {
    if k < 2 {
        return Err(ConstructionError::BadParam(format!(
            "ladder needs k >= 2, got {k}"
        )));
    }
    let (a, b, u, v) = ladder_ids(k);
    let mid = (k as f64 + 1.0) / 2.0;
    let mut pts = vec![(0.0, 0.0); 2 * k + 2];
    let mut labels = vec![None; 2 * k + 2];
    for i in 1..=k {
        pts[a(i) as usize] = (i as f64, 1.0);
        pts[b(i) as usize] = (i as f64, 0.0);
        labels[a(i) as usize] = Some(format!("a{i}"));
        labels[b(i) as usize] = Some(format!("b{i}"));
    }
    pts[u as usize] = (mid, 3.0);
    pts[v as usize] = (mid, -2.0);
    labels[u as usize] = Some("u".into());
    labels[v as usize] = Some("v".into());
    let mut edges = Vec::new();
    let mut crossings = Vec::new();
    for i in 1..=k {
        edges.push([a(i), b(i)]);
        edges.push([u, a(i)]);
        edges.push([v, b(i)]);
    }
    for i in 1..k {
        let top = edges.len() as u32;
        edges.push([a(i), a(i + 1)]);
        edges.push([u, b(i + 1)]);
        crossings.push(([top, top + 1], (i as f64 + 0.5, 1.0)));
        let bottom = edges.len() as u32;
        edges.push([b(i), b(i + 1)]);
        edges.push([v, a(i)]);
        crossings.push(([bottom, bottom + 1], (i as f64 + 0.5, 0.0)));
    }
    Ok(OnePlaneDrawing::new(straight_planarization(
        labels, &pts, edges, &crossings,
    ))?)
}

/// Inserts edge ab through face `f`, which must contain both endpoints as
/// true vertices; the new edge is placed in the corner of `f` at each end.
pub fn insert_edge_in_face(
    d: &OnePlaneDrawing,
    f: FaceId,
    a: VertexId,
    b: VertexId,
) -> Result<OnePlaneDrawing> {
    if d.has_edge(a, b) {
        return Err(ConstructionError::ResultNotSimple(a, b));
    }
    let mut raw = d.raw().clone();
    let e = push_edge(&mut raw, a, b);
    for w in [a, b] {
        let r = d
            .face(f)
            .iter()
            .copied()
            .find(|&r| d.origin(r) == w)
            .ok_or_else(|| ConstructionError::BadParam(format!("vertex {w} is not on face {f}")))?;
        let rot = &mut raw.rotations[w as usize];
        let pos = rot
            .iter()
            .position(|&x| x == d.dart_edge(r))
            .expect("dart edge is in the rotation");
        rot.insert(pos, e);
    }
    Ok(OnePlaneDrawing::new(raw)?)
}

fn hexagon_face(d: &OnePlaneDrawing, six: &[VertexId; 6]) -> Option<FaceId> {
    (0..d.face_count() as u32).find(|&f| {
        let mut vs = d.face_vertices(f);
        vs.sort_unstable();
        let mut want = six.to_vec();
        want.sort_unstable();
        vs == want
    })
}

/// H_k together with u b_1 and v a_k, both routed through the outer hexagon.
pub fn ladder_plus(k: usize) -> Result<OnePlaneDrawing> {
    let h = gen_ladder_h(k)?;
    let (a, b, u, v) = ladder_ids(k);
    let hex = [u, a(1), b(1), v, b(k), a(k)];
    let f = hexagon_face(&h, &hex).expect("the hexagon bounds a face of H_k");
    let h = insert_edge_in_face(&h, f, u, b(1))?;
    // the first insertion splits the hexagon; v and a_k share one of the halves
    let g = (0..h.face_count() as u32)
        .find(|&g| {
            let vs = h.face_vertices(g);
            vs.contains(&v) && vs.contains(&a(k)) && vs.iter().all(|w| hex.contains(w))
        })
        .expect("a face still holds v and a_k");
    insert_edge_in_face(&h, g, v, a(k))
}

fn is_k4(g: &AbstractGraph, q: [VertexId; 4]) -> bool {
    (0..4).all(|i| (i + 1..4).all(|j| q[i] != q[j] && g.has_edge(q[i], q[j])))
}

/// Crossed K4s: for each crossing ac x bd whose endpoints induce a K4, the
/// seed [a, b, c, d] (ac and bd cross).
pub fn crossed_k4s(d: &OnePlaneDrawing) -> Vec<[VertexId; 4]> {
    let g = AbstractGraph::of_drawing(d);
    d.crossings()
        .iter()
        .map(|c| {
            let [a, cc] = d.edge(c.edges[0]);
            let [b, dd] = d.edge(c.edges[1]);
            [a, b, cc, dd]
        })
        .filter(|&q| is_k4(&g, q))
        .collect()
}

fn sorted(q: [VertexId; 4]) -> [VertexId; 4] {
    let mut s = q;
    s.sort_unstable();
    s
}

/// Least crossed K4 (by sorted vertex set) whose four corner faces at the
/// crossing are triangles.
pub fn first_seed(d: &OnePlaneDrawing) -> Option<[VertexId; 4]> {
    d.crossings()
        .iter()
        .enumerate()
        .filter(|&(c, _)| {
            corner_faces(d, d.fake_vertex(c as u32))
                .iter()
                .all(|&f| d.face_degree(f) == 3)
        })
        .map(|(_, c)| {
            let [a, cc] = d.edge(c.edges[0]);
            let [b, dd] = d.edge(c.edges[1]);
            [a, b, cc, dd]
        })
        .filter(|&q| is_k4(&AbstractGraph::of_drawing(d), q))
        .min_by_key(|&q| sorted(q))
}

/// The gadget on local ids w_j = j, v_j = 4 + j: spokes, inner cycle, inner
/// crossing diagonals, and for each side j the crossing pair
/// w_j v_{j+1} x w_{j+1} v_j.
fn q4_gadget() -> RawDrawing {
    let mut pts = vec![(0.0, 0.0); 8];
    let rot = |p: Point, j: usize| -> Point {
        let (s, c) = (std::f64::consts::FRAC_PI_2 * j as f64).sin_cos();
        (c * p.0 - s * p.1, s * p.0 + c * p.1)
    };
    for j in 0..4 {
        pts[j] = rot((2.0, 0.0), j);
        pts[4 + j] = rot((1.0, 0.0), j);
    }
    let w = |j: usize| (j % 4) as u32;
    let v = |j: usize| (4 + j % 4) as u32;
    let mut edges = Vec::new();
    let mut crossings = Vec::new();
    for j in 0..4 {
        edges.push([w(j), v(j)]);
        edges.push([v(j), v(j + 1)]);
    }
    crossings.push(([edges.len() as u32, edges.len() as u32 + 1], (0.0, 0.0)));
    edges.push([v(0), v(2)]);
    edges.push([v(1), v(3)]);
    for j in 0..4 {
        let e = edges.len() as u32;
        edges.push([w(j), v(j + 1)]);
        edges.push([w(j + 1), v(j)]);
        crossings.push(([e, e + 1], rot((2.0 / 3.0, 2.0 / 3.0), j)));
    }
    straight_planarization(vec![None; 8], &pts, edges, &crossings)
}

/// Replaces the crossing diagonals of a crossed K4 by the Q4 gadget and
/// returns the new drawing with the five crossed K4s created by the step.
pub fn q4_addition_with_seeds(
    d: &OnePlaneDrawing,
    seed: [VertexId; 4],
) -> Result<(OnePlaneDrawing, Vec<[VertexId; 4]>)> {
    let g = AbstractGraph::of_drawing(d);
    if seed.iter().any(|&s| s as usize >= d.n()) || !is_k4(&g, seed) {
        return Err(ConstructionError::NoCrossedK4AtSeed(seed));
    }
    let e13 = d.edge_between(seed[0], seed[2]).unwrap();
    let e24 = d.edge_between(seed[1], seed[3]).unwrap();
    let c = match (d.crossing_of(e13), d.crossing_of(e24)) {
        (Some(c), Some(c2)) if c == c2 => c,
        _ => return Err(ConstructionError::NoCrossedK4AtSeed(seed)),
    };
    let z = d.fake_vertex(c);
    let ring: Vec<VertexId> = d.darts_around(z).iter().map(|&x| d.target(x)).collect();
    let n = d.n() as u32;
    let gadget = q4_gadget();
    let local = |x: u32| if x < 4 { ring[x as usize] } else { n + x - 4 };
    let mut raw = d.raw().clone();
    let base = raw.edges.len() as u32;
    for &[p, q] in &gadget.edges {
        let (p, q) = (local(p), local(q));
        if p < n && q < n && d.has_edge(p, q) {
            return Err(ConstructionError::ResultNotSimple(p, q));
        }
        raw.edges.push([p, q]);
    }
    for cr in &gadget.crossings {
        raw.crossings.push(Crossing {
            edges: cr.edges.map(|e| base + e),
            orientation: cr.orientation,
        });
    }
    for j in 0..4 {
        raw.labels.push(None);
        raw.rotations
            .push(gadget.rotations[4 + j].iter().map(|&e| base + e).collect());
    }
    let find = |p: u32, q: u32| -> u32 {
        base + gadget
            .edges
            .iter()
            .position(|&ends| ends == [p, q] || ends == [q, p])
            .unwrap() as u32
    };
    for j in 0..4u32 {
        let wj = ring[j as usize];
        let diagonal = if wj == seed[0] || wj == seed[2] {
            e13
        } else {
            e24
        };
        let slot = [
            find(j, 4 + (j + 1) % 4),
            find(j, 4 + j),
            find(j, 4 + (j + 3) % 4),
        ];
        let rot = &mut raw.rotations[wj as usize];
        let pos = rot.iter().position(|&e| e == diagonal).unwrap();
        rot.splice(pos..=pos, slot);
    }
    let mut keep = vec![true; raw.edges.len()];
    keep[e13 as usize] = false;
    keep[e24 as usize] = false;
    let out = OnePlaneDrawing::new(raw.retain_edges(&keep))?;
    let w = |j: usize| ring[j % 4];
    let v = |j: usize| n + (j % 4) as u32;
    let mut created = vec![[v(0), v(1), v(2), v(3)]];
    for j in 0..4 {
        created.push([w(j), w(j + 1), v(j + 1), v(j)]);
    }
    Ok((out, created))
}

pub fn q4_addition(d: &OnePlaneDrawing, seed: [VertexId; 4]) -> Result<OnePlaneDrawing> {
    q4_addition_with_seeds(d, seed).map(|(d, _)| d)
}

/// K5-free 1-plane drawing with 4n - 8 edges, for n = 8 or n >= 10.
pub fn gen_k5_optimal(n: usize) -> Result<OnePlaneDrawing> {
    if n < 8 || n == 9 {
        return Err(ConstructionError::BadParam(format!(
            "no 4n-8 K5-free drawing for n={n}"
        )));
    }
    let mut d = match n % 4 {
        0 => gen_cube_g8(),
        2 => load_fixture("g10_k5")?,
        3 => load_fixture("g11_k5")?,
        _ => load_fixture("g13_k5")?,
    };
    let mut seed = first_seed(&d).expect("every base has a crossed K4 with triangular corners");
    while d.n() < n {
        let (next, created) = q4_addition_with_seeds(&d, seed)?;
        d = next;
        seed = created.into_iter().min_by_key(|&q| sorted(q)).unwrap();
    }
    Ok(d)
}

fn q_base(fixture: &str) -> Result<(RawDrawing, [VertexId; 6])> {
    let d = load_fixture(fixture)?;
    let by = |name: &str| -> Result<VertexId> {
        (0..d.n() as u32)
            .find(|&v| d.label(v) == Some(name))
            .ok_or_else(|| ConstructionError::FixtureInvalid {
                name: fixture.into(),
                reason: format!("missing vertex {name}"),
            })
    };
    let [u, v, a1, a2, b1, b2] = [
        by("u")?,
        by("v")?,
        by("a1")?,
        by("a2")?,
        by("b1")?,
        by("b2")?,
    ];
    let drop = [(a1, a2), (b1, b2), (u, b2), (v, a1)];
    let keep: Vec<bool> = d
        .edges()
        .iter()
        .map(|&[p, q]| {
            !drop
                .iter()
                .any(|&(x, y)| (p, q) == (x, y) || (p, q) == (y, x))
        })
        .collect();
    if keep.iter().filter(|&&k| !k).count() != 4 {
        return Err(ConstructionError::FixtureInvalid {
            name: fixture.into(),
            reason: "gluing edges missing".into(),
        });
    }
    Ok((d.raw().retain_edges(&keep), [u, a1, b1, v, b2, a2]))
}

/// Edge ids between the two hexagon neighbours of `h` on the side of the
/// rotation that does not lie on the hexagon face; returns (X, interior, Y)
/// in counterclockwise order.
fn interior_arc(
    raw: &RawDrawing,
    h: VertexId,
    hex_edges: &[EdgeId],
) -> (VertexId, Vec<EdgeId>, VertexId) {
    let rot = &raw.rotations[h as usize];
    let k = rot.len();
    let other = |e: EdgeId| {
        let [p, q] = raw.edges[e as usize];
        if p == h {
            q
        } else {
            p
        }
    };
    let hs: Vec<usize> = (0..k).filter(|&i| hex_edges.contains(&rot[i])).collect();
    assert_eq!(hs.len(), 2);
    for (s, t) in [(hs[0], hs[1]), (hs[1], hs[0])] {
        let inside: Vec<EdgeId> = (1..k)
            .map(|o| (s + o) % k)
            .take_while(|&i| i != t)
            .map(|i| rot[i])
            .collect();
        if !inside.is_empty() {
            return (other(rot[s]), inside, other(rot[t]));
        }
    }
    (other(rot[hs[0]]), Vec::new(), other(rot[hs[1]]))
}

/// K4-free 1-plane drawing with floor(7n/2) - 7 edges, for n >= 9.
pub fn gen_k4_extremal(n: usize) -> Result<OnePlaneDrawing> {
    match n {
        0..=8 => {
            return Err(ConstructionError::BadParam(format!(
                "K4-free family starts at n=9, got {n}"
            )))
        }
        9 => return load_fixture("g9_k4"),
        10 => return load_fixture("g10_k4"),
        _ => {}
    }
    let (q_raw, q_hex) = q_base(if n % 2 == 1 { "g9_k4" } else { "g10_k4" })?;
    let q = OnePlaneDrawing::new(q_raw.clone())?;
    let fq = hexagon_face(&q, &q_hex).expect("removing the gluing edges opens a hexagon");
    let k = (n - 5) / 2;
    let h = gen_ladder_h(k)?;
    let (a, b, u, v) = ladder_ids(k);
    let h_hex = [u, a(1), b(1), v, b(k), a(k)];
    let hex_edges: Vec<EdgeId> = (0..6)
        .map(|i| h.edge_between(h_hex[i], h_hex[(i + 1) % 6]).unwrap())
        .collect();
    let map_hex = |x: VertexId| h_hex.iter().position(|&y| y == x).map(|i| q_hex[i]);
    // corner of the hexagon face of Q at each hexagon vertex: ccw from p
    let corner_start = |hq: VertexId| -> VertexId {
        let walk = q.face(fq);
        let i = walk.iter().position(|&x| q.origin(x) == hq).unwrap();
        q.origin(walk[(i + walk.len() - 1) % walk.len()])
    };
    let mut h_raw = h.raw().clone();
    let (x0, _, _) = interior_arc(&h_raw, h_hex[0], &hex_edges);
    if map_hex(x0) != Some(corner_start(q_hex[0])) {
        h_raw = h_raw.mirrored();
    }
    let nq = q.n() as u32;
    let mut vmap = vec![u32::MAX; h.n()];
    let mut next = nq;
    for w in 0..h.n() as u32 {
        vmap[w as usize] = match map_hex(w) {
            Some(t) => t,
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let mut raw = q_raw;
    raw.labels
        .extend(std::iter::repeat_n(None, (next - nq) as usize));
    raw.rotations
        .extend(std::iter::repeat_n(Vec::new(), (next - nq) as usize));
    let base = raw.edges.len() as u32;
    let mut emap = vec![u32::MAX; h.m()];
    for (e, &[p, q2]) in h_raw.edges.iter().enumerate() {
        if hex_edges.contains(&(e as u32)) {
            continue;
        }
        let (p, q2) = (vmap[p as usize], vmap[q2 as usize]);
        if p < nq && q2 < nq && q.has_edge(p, q2) {
            return Err(ConstructionError::ResultNotSimple(p, q2));
        }
        emap[e] = raw.edges.len() as u32;
        raw.edges.push([p, q2]);
    }
    debug_assert!(raw.edges.len() as u32 >= base);
    for c in &h_raw.crossings {
        raw.crossings.push(Crossing {
            edges: c.edges.map(|e| emap[e as usize]),
            orientation: c.orientation,
        });
    }
    for w in 0..h.n() as u32 {
        let t = vmap[w as usize];
        if t >= nq {
            raw.rotations[t as usize] = h_raw.rotations[w as usize]
                .iter()
                .map(|&e| emap[e as usize])
                .collect();
            continue;
        }
        let (xh, inside, _) = interior_arc(&h_raw, w, &hex_edges);
        let p = corner_start(t);
        if map_hex(xh) != Some(p) {
            return Err(ConstructionError::BadParam(
                "gluing orientation is inconsistent".into(),
            ));
        }
        let ep = q.edge_between(t, p).unwrap();
        let rot = &mut raw.rotations[t as usize];
        let pos = rot.iter().position(|&e| e == ep).unwrap();
        rot.splice(pos + 1..pos + 1, inside.iter().map(|&e| emap[e as usize]));
    }
    Ok(OnePlaneDrawing::new(raw)?)
}

/// A 1-plane drawing of the Turán graph T_{k-1}(n) for n <= 7, k in {4, 5}.
pub fn gen_turan_drawing(n: usize, k: usize) -> Result<OnePlaneDrawing> {
    if !(1..=7).contains(&n) || !(4..=5).contains(&k) {
        return Err(ConstructionError::BadParam(format!(
            "turan drawing needs 1 <= n <= 7 and k in 4..=5, got n={n} k={k}"
        )));
    }
    if k == 4 {
        let g = turan_graph(n, 4);
        return drawing_search(&g, SearchLimits::default())
            .map_err(|e| ConstructionError::BadParam(format!("search failed: {e}")));
    }
    // G8 is K_{2,2,2,2}; delete from distinct antipodal pairs first
    let g8 = gen_cube_g8();
    let mut pairs: Vec<[u32; 2]> = Vec::new();
    for a in 0..8u32 {
        for b in a + 1..8 {
            if !g8.has_edge(a, b) {
                pairs.push([a, b]);
            }
        }
    }
    let order: Vec<u32> = pairs
        .iter()
        .map(|p| p[1])
        .chain(pairs.iter().map(|p| p[0]))
        .collect();
    let gone = &order[..8 - n];
    let d = OnePlaneDrawing::new(g8.raw().remove_vertices(gone))?;
    debug_assert_eq!(d.m() as u64, turan_size(n as u64, 5));
    Ok(d)
}

pub const FIXTURE_NAMES: [&str; 8] = [
    "maxe84",
    "maxe95",
    "g9_k4",
    "g10_k4",
    "g10_k5",
    "g11_k5",
    "g13_k5",
    "fig13_nonbip",
];

fn bundled(name: &str) -> Option<&'static str> {
    Some(match name {
        "maxe84" => include_str!("../fixtures/maxe84.opg"),
        "maxe95" => include_str!("../fixtures/maxe95.opg"),
        "g9_k4" => include_str!("../fixtures/g9_k4.opg"),
        "g10_k4" => include_str!("../fixtures/g10_k4.opg"),
        "g10_k5" => include_str!("../fixtures/g10_k5.opg"),
        "g11_k5" => include_str!("../fixtures/g11_k5.opg"),
        "g13_k5" => include_str!("../fixtures/g13_k5.opg"),
        "fig13_nonbip" => include_str!("../fixtures/fig13_nonbip.opg"),
        _ => return None,
    })
}

/// Expected (n, m, largest forbidden clique) of each fixture.
fn profile(name: &str) -> Option<(usize, usize, usize)> {
    Some(match name {
        "maxe84" => (8, 20, 4),
        "maxe95" => (9, 27, 5),
        "g9_k4" => (9, 24, 4),
        "g10_k4" => (10, 28, 4),
        "g10_k5" => (10, 32, 5),
        "g11_k5" => (11, 36, 5),
        "g13_k5" => (13, 44, 5),
        "fig13_nonbip" => (10, 20, 3),
        _ => return None,
    })
}

/// Parses fixture text and checks it against the published order, size and
/// clique profile of `name`.
pub fn check_fixture(name: &str, text: &str) -> Result<OnePlaneDrawing> {
    let (n, m, k) = profile(name).ok_or_else(|| ConstructionError::UnknownFixture(name.into()))?;
    let invalid = |reason: String| ConstructionError::FixtureInvalid {
        name: name.into(),
        reason,
    };
    let d = opg::parse(text).map_err(|e| invalid(e.to_string()))?;
    if (d.n(), d.m()) != (n, m) {
        return Err(invalid(format!(
            "expected n={n} m={m}, found n={} m={}",
            d.n(),
            d.m()
        )));
    }
    let g = AbstractGraph::of_drawing(&d);
    if let Some(c) = find_clique(&g, k) {
        return Err(invalid(format!("contains K{k} on {c:?}")));
    }
    if name == "fig13_nonbip" && g.is_bipartite() {
        return Err(invalid("expected an odd cycle".into()));
    }
    if !has_clique(&g, k - 1) {
        return Err(invalid(format!("expected a K{}", k - 1)));
    }
    Ok(d)
}

pub fn load_fixture(name: &str) -> Result<OnePlaneDrawing> {
    let text = bundled(name).ok_or_else(|| ConstructionError::UnknownFixture(name.into()))?;
    check_fixture(name, text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{check_edge_formula, compute_invariants};

    fn k_free(d: &OnePlaneDrawing, k: usize) -> bool {
        !has_clique(&AbstractGraph::of_drawing(d), k)
    }

    #[test]
    fn g8_shape() {
        let d = gen_cube_g8();
        assert_eq!((d.n(), d.m(), d.x()), (8, 24, 6));
        assert!(k_free(&d, 5));
        assert!(!crossed_k4s(&d).is_empty());
        let r = compute_invariants(&d);
        assert_eq!((r.a, r.two_b, r.c), (-12, 0, 0));
        assert!(check_edge_formula(&d).unwrap().holds);
    }

    #[test]
    fn ladder_counts() {
        for (k, n, m, x) in [(2, 6, 10, 2), (5, 12, 31, 8)] {
            let d = gen_ladder_h(k).unwrap();
            assert_eq!((d.n(), d.m(), d.x()), (n, m, x));
        }
        assert!(gen_ladder_h(1).is_err());
        for k in 2..=6 {
            let d = ladder_plus(k).unwrap();
            assert_eq!(d.m(), 7 * k - 2);
            assert!(k_free(&d, 4), "k={k}");
        }
    }

    #[test]
    fn q4_step_counts() {
        let d = gen_cube_g8();
        let seed = first_seed(&d).unwrap();
        let (e, created) = q4_addition_with_seeds(&d, seed).unwrap();
        assert_eq!((e.n(), e.m(), e.x()), (12, 40, 10));
        assert!(k_free(&e, 5));
        let found = crossed_k4s(&e);
        for q in created {
            assert!(found.iter().any(|&f| sorted(f) == sorted(q)), "{q:?}");
        }
        let bad = [0, 1, 2, 3];
        assert!(matches!(
            q4_addition(&plane_cube(), bad),
            Err(ConstructionError::NoCrossedK4AtSeed(_))
        ));
    }

    #[test]
    fn k5_family_small() {
        for n in [8, 10, 11, 12, 13, 14, 15, 16, 17] {
            let d = gen_k5_optimal(n).unwrap();
            assert_eq!((d.m(), d.x()), (4 * n - 8, n - 2), "n={n}");
            assert!(k_free(&d, 5));
        }
        assert!(gen_k5_optimal(9).is_err());
        assert!(gen_k5_optimal(7).is_err());
    }

    #[test]
    fn k4_family_small() {
        for n in 9..=16 {
            let d = gen_k4_extremal(n).unwrap();
            assert_eq!(d.m(), 7 * n / 2 - 7, "n={n}");
            assert!(k_free(&d, 4), "n={n}");
        }
        assert!(gen_k4_extremal(8).is_err());
    }

    #[test]
    fn turan_drawings() {
        for n in 1..=7 {
            for k in [4, 5] {
                let d = gen_turan_drawing(n, k).unwrap();
                let g = AbstractGraph::of_drawing(&d);
                assert_eq!(d.m() as u64, turan_size(n as u64, k as u64), "n={n} k={k}");
                assert!(!has_clique(&g, k));
            }
        }
        assert!(gen_turan_drawing(8, 4).is_err());
    }

    #[test]
    fn fixtures_load() {
        for name in FIXTURE_NAMES {
            load_fixture(name).unwrap_or_else(|e| panic!("{e}"));
        }
        assert!(matches!(
            load_fixture("nope"),
            Err(ConstructionError::UnknownFixture(_))
        ));
        let broken = "opg 1\nvertex 0\nvertex 1\nedge 0 0 1\n";
        assert!(matches!(
            check_fixture("maxe84", broken),
            Err(ConstructionError::FixtureInvalid { .. })
        ));
    }
}
