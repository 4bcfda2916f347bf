//! Bounded search for 1-plane drawings of small graphs.
//!
//! Two complete methods are provided.
//!
//! [`drawing_search`] grows a drawing one edge at a time. Restricting any
//! drawing of `g` to a prefix of the edge order gives a drawing of the
//! prefix, and the next edge is then either drawn inside one face or crosses
//! exactly one uncrossed segment between two faces. Enumerating those
//! options therefore reaches every drawing. After each step every remaining
//! edge between placed vertices must still have such an option.
//!
//! [`subdivision_search`] uses the fact that a drawing with crossing set X
//! exists exactly when the graph obtained by subdividing every pair in X at
//! a shared new vertex is planar. Any planar embedding of that graph yields
//! a valid drawing: a crossing whose fake vertex is embedded with the two
//! edges not alternating is dropped, the edges touch there without
//! crossing. It enumerates matchings of independent edge pairs, pruning by
//! planarity of the part of the planarization decided so far.

use thiserror::Error;

use crate::certify::maxe_bound;
use crate::cliques::{has_clique, AbstractGraph};
use crate::drawing::{Crossing, DartId, EdgeId, OnePlaneDrawing, Orientation, RawDrawing};
use crate::planarity::{is_planar, planar_embedding};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Cap on the number of crossings tried (the n − 2 cap always applies).
    pub max_crossings: Option<usize>,
    /// Cap on the number of search nodes visited.
    pub max_candidates: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_crossings: None,
            max_candidates: 200_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("rejected by the {filter} edge bound: m={m} > {bound}")]
    Rejected {
        filter: &'static str,
        m: usize,
        bound: u64,
    },
    /// `complete` is true when the whole admissible space was covered, which
    /// proves the graph has no 1-plane drawing.
    #[error("no drawing found after {candidates} search nodes (complete={complete})")]
    Exhausted { complete: bool, candidates: u64 },
}

/// Edge-count filters that every 1-planar graph satisfies.
pub fn filter(g: &AbstractGraph) -> Result<(), SearchError> {
    let n = g.n() as u64;
    let m = g.m();
    let reject = |filter, bound: u64| {
        if m as u64 > bound {
            Err(SearchError::Rejected { filter, m, bound })
        } else {
            Ok(())
        }
    };
    if n == 0 {
        return Ok(());
    }
    reject("general", maxe_bound(n, 7).expect("n >= 1").upper)?;
    if n >= 4 {
        if g.is_bipartite() {
            reject("bipartite", 3 * n - 8)?;
        }
        if !has_clique(g, 3) {
            reject("K3-free", 3 * n - 8)?;
        }
    }
    if !has_clique(g, 4) {
        reject("K4-free", maxe_bound(n, 4).expect("n >= 1").upper)?;
    }
    if !has_clique(g, 5) {
        reject("K5-free", maxe_bound(n, 5).expect("n >= 1").upper)?;
    }
    Ok(())
}

/// Embeds the graph with the given crossing pairs, or returns `None` when the
/// subdivided graph is not planar. Pairs must be independent and disjoint.
pub fn draw_with_crossings(
    n: usize,
    edges: &[[u32; 2]],
    pairs: &[[EdgeId; 2]],
) -> Option<OnePlaneDrawing> {
    let mut via = vec![u32::MAX; edges.len()];
    for (c, &[e, f]) in pairs.iter().enumerate() {
        via[e as usize] = c as u32;
        via[f as usize] = c as u32;
    }
    let mut plane = Vec::with_capacity(edges.len() + 2 * pairs.len());
    for (e, &[a, b]) in edges.iter().enumerate() {
        if via[e] == u32::MAX {
            plane.push([a, b]);
        } else {
            let z = n as u32 + via[e];
            plane.push([a, z]);
            plane.push([b, z]);
        }
    }
    let rot = planar_embedding(n + pairs.len(), &plane)?;
    let edge_to = |v: u32, w: u32| -> EdgeId {
        if (w as usize) < n {
            edges
                .iter()
                .position(|&[a, b]| (a == v && b == w) || (a == w && b == v))
                .unwrap() as u32
        } else {
            let [e, f] = pairs[w as usize - n];
            if edges[e as usize].contains(&v) {
                e
            } else {
                f
            }
        }
    };
    let rotations = (0..n as u32)
        .map(|v| rot[v as usize].iter().map(|&w| edge_to(v, w)).collect())
        .collect();
    let mut crossings = Vec::new();
    for (c, &[e, f]) in pairs.iter().enumerate() {
        let ring = &rot[n + c];
        let [e0, e1] = edges[e as usize];
        let [f0, f1] = edges[f as usize];
        let s = ring.iter().position(|&w| w == e0).unwrap();
        let at = |i: usize| ring[(s + i) % 4];
        if at(2) != e1 {
            continue; // not alternating: the two edges only touch
        }
        let orientation = if at(1) == f0 && at(3) == f1 {
            Orientation::Pos
        } else {
            Orientation::Neg
        };
        crossings.push(Crossing {
            edges: [e, f],
            orientation,
        });
    }
    let raw = RawDrawing {
        labels: vec![None; n],
        edges: edges.to_vec(),
        crossings,
        rotations,
    };
    Some(OnePlaneDrawing::new(raw).expect("embedding of the planarization yields a valid drawing"))
}

/// Finds a 1-plane drawing of `g` with the fewest crossings, by trying
/// crossing sets in order of size. Much slower than [`drawing_search`]; kept
/// as an independent second method.
pub fn subdivision_search(
    g: &AbstractGraph,
    limits: SearchLimits,
) -> Result<OnePlaneDrawing, SearchError> {
    filter(g)?;
    let n = g.n();
    let m = g.m();
    let edges: Vec<[u32; 2]> = g.edges().collect();
    let planar_deficit = m as i64 - 3 * n as i64 + 6;
    let mut lo = if n >= 3 {
        planar_deficit.max(0) as usize
    } else {
        0
    };
    if n >= 4 && !has_clique(g, 4) {
        lo = lo.max((2 * planar_deficit).max(0) as usize);
    }
    let cap = n.saturating_sub(2);
    let hi = limits.max_crossings.map_or(cap, |c| c.min(cap));
    let mut state = Dfs {
        edges: &edges,
        n,
        status: vec![Status::Open; m],
        chosen: Vec::new(),
        candidates: 0,
        limit: limits.max_candidates,
        found: None,
    };
    for size in lo..=hi {
        if state.extend(0, size) {
            return Ok(state.found.take().unwrap());
        }
        if state.candidates >= state.limit {
            return Err(SearchError::Exhausted {
                complete: false,
                candidates: state.candidates,
            });
        }
    }
    let complete = hi == cap;
    Err(SearchError::Exhausted {
        complete,
        candidates: state.candidates,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    Plain,
    Crossed,
}

/// Decides edges in index order: each is either left uncrossed or paired
/// with a later independent edge. The decided part of the planarization is
/// final, so a non-planar decided part prunes the whole subtree.
struct Dfs<'a> {
    edges: &'a [[u32; 2]],
    n: usize,
    status: Vec<Status>,
    chosen: Vec<[u32; 2]>,
    candidates: u64,
    limit: u64,
    found: Option<OnePlaneDrawing>,
}

impl Dfs<'_> {
    fn decided_planar(&self) -> bool {
        let mut plane = Vec::new();
        for (e, &ends) in self.edges.iter().enumerate() {
            if self.status[e] == Status::Plain {
                plane.push(ends);
            }
        }
        for (c, pair) in self.chosen.iter().enumerate() {
            let z = (self.n + c) as u32;
            for &e in pair {
                let [a, b] = self.edges[e as usize];
                plane.push([a, z]);
                plane.push([b, z]);
            }
        }
        let v = self.n + self.chosen.len();
        if v >= 3 && plane.len() > 3 * v - 6 {
            return false;
        }
        is_planar(v, &plane)
    }

    fn extend(&mut self, i: usize, need: usize) -> bool {
        if self.candidates >= self.limit {
            return false;
        }
        self.candidates += 1;
        let m = self.edges.len();
        let i = (i..m)
            .find(|&e| self.status[e] == Status::Open)
            .unwrap_or(m);
        if i == m {
            if need > 0 {
                return false;
            }
            if let Some(d) = draw_with_crossings(self.n, self.edges, &self.chosen) {
                self.found = Some(d);
                return true;
            }
            return false;
        }
        let open = (i..m).filter(|&e| self.status[e] == Status::Open).count();
        if 2 * need > open {
            return false;
        }
        if 2 * need < open {
            self.status[i] = Status::Plain;
            let hit = self.decided_planar() && self.extend(i + 1, need);
            self.status[i] = Status::Open;
            if hit {
                return true;
            }
        }
        if need == 0 {
            return false;
        }
        let [a, b] = self.edges[i];
        for j in i + 1..m {
            if self.status[j] != Status::Open {
                continue;
            }
            let [c, d] = self.edges[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            self.status[i] = Status::Crossed;
            self.status[j] = Status::Crossed;
            self.chosen.push([i as u32, j as u32]);
            let hit = self.decided_planar() && self.extend(i + 1, need - 1);
            self.chosen.pop();
            self.status[i] = Status::Open;
            self.status[j] = Status::Open;
            if hit {
                return true;
            }
            if self.candidates >= self.limit {
                return false;
            }
        }
        false
    }
}

/// Finds a 1-plane drawing of `g` by inserting edges one at a time. Edge ids
/// of the result follow `g.edges()`.
pub fn drawing_search(
    g: &AbstractGraph,
    limits: SearchLimits,
) -> Result<OnePlaneDrawing, SearchError> {
    filter(g)?;
    let n = g.n();
    let cap = n.saturating_sub(2);
    let max_x = limits.max_crossings.map_or(cap, |c| c.min(cap));
    let mut nodes = 0u64;
    let mut parts = Vec::new();
    for comp in edge_components(g) {
        let mut inc = Incremental {
            order: insertion_order(&comp),
            max_x,
            nodes,
            limit: limits.max_candidates,
            found: None,
        };
        let start = OnePlaneDrawing::new(RawDrawing::with_vertices(n)).expect("empty drawing");
        let hit = inc.grow(&start, 0);
        nodes = inc.nodes;
        if !hit {
            let complete = nodes < limits.max_candidates && max_x == cap;
            return Err(SearchError::Exhausted {
                complete,
                candidates: nodes,
            });
        }
        parts.push(inc.found.unwrap().into_raw());
    }
    let canonical: Vec<[u32; 2]> = g.edges().collect();
    let raw = union_in_order(n, &parts, &canonical);
    Ok(OnePlaneDrawing::new(raw).expect("union of component drawings is valid"))
}

/// Edge lists of the connected components that have edges.
fn edge_components(g: &AbstractGraph) -> Vec<Vec<[u32; 2]>> {
    let mut uf = crate::drawing::UnionFind::new(g.n());
    for [a, b] in g.edges() {
        uf.union(a as usize, b as usize);
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<[u32; 2]>> = Default::default();
    for [a, b] in g.edges() {
        by_root.entry(uf.find(a as usize)).or_default().push([a, b]);
    }
    by_root.into_values().collect()
}

/// Connected insertion order: edges closing a cycle among placed vertices
/// first, otherwise the edge reaching the new vertex of largest degree.
fn insertion_order(edges: &[[u32; 2]]) -> Vec<[u32; 2]> {
    let mut degree = std::collections::HashMap::new();
    for &[a, b] in edges {
        *degree.entry(a).or_insert(0usize) += 1;
        *degree.entry(b).or_insert(0usize) += 1;
    }
    let mut left: Vec<[u32; 2]> = edges.to_vec();
    let mut placed = std::collections::HashSet::new();
    let mut order = Vec::with_capacity(edges.len());
    while !left.is_empty() {
        let pick = left
            .iter()
            .enumerate()
            .filter(|(_, &[a, b])| order.is_empty() || placed.contains(&a) || placed.contains(&b))
            .max_by_key(|&(i, &[a, b])| {
                let both = placed.contains(&a) && placed.contains(&b);
                (both, degree[&a] + degree[&b], std::cmp::Reverse(i))
            })
            .map(|(i, _)| i)
            .expect("component is connected");
        let [a, b] = left.remove(pick);
        placed.insert(a);
        placed.insert(b);
        order.push([a, b]);
    }
    order
}

/// Merges component drawings (each on all `n` vertices) and renumbers edges
/// to follow `canonical`.
fn union_in_order(n: usize, parts: &[RawDrawing], canonical: &[[u32; 2]]) -> RawDrawing {
    let id = |[a, b]: [u32; 2]| canonical.binary_search(&[a.min(b), a.max(b)]).unwrap() as u32;
    let mut raw = RawDrawing::with_vertices(n);
    raw.edges = canonical.to_vec();
    for p in parts {
        let map: Vec<u32> = p.edges.iter().map(|&e| id(e)).collect();
        for (e, &ends) in p.edges.iter().enumerate() {
            // keep the orientation reference endpoint of the part
            raw.edges[map[e] as usize] = ends;
        }
        for c in &p.crossings {
            raw.crossings.push(Crossing {
                edges: c.edges.map(|e| map[e as usize]),
                orientation: c.orientation,
            });
        }
        for (v, rot) in p.rotations.iter().enumerate() {
            if !rot.is_empty() {
                raw.rotations[v] = rot.iter().map(|&e| map[e as usize]).collect();
            }
        }
    }
    raw
}

struct Incremental {
    order: Vec<[u32; 2]>,
    max_x: usize,
    nodes: u64,
    limit: u64,
    found: Option<OnePlaneDrawing>,
}

impl Incremental {
    fn grow(&mut self, d: &OnePlaneDrawing, i: usize) -> bool {
        if i == self.order.len() {
            self.found = Some(d.clone());
            return true;
        }
        if self.nodes >= self.limit {
            return false;
        }
        self.nodes += 1;
        if !self.remaining_fit(d, i) {
            return false;
        }
        let [a, b] = self.order[i];
        for raw in insertions(d, a, b, d.x() < self.max_x) {
            if let Ok(next) = OnePlaneDrawing::new(raw) {
                if self.grow(&next, i + 1) {
                    return true;
                }
            }
            if self.nodes >= self.limit {
                return false;
            }
        }
        false
    }

    /// Every remaining edge whose endpoints are both placed shares a face
    /// with its endpoints or can cross into a neighbouring face.
    fn remaining_fit(&self, d: &OnePlaneDrawing, i: usize) -> bool {
        let faces = d.face_count();
        if faces > 128 {
            return true;
        }
        let mut at = vec![0u128; d.n()];
        for v in 0..d.n() as u32 {
            for x in d.darts_around(v) {
                at[v as usize] |= 1 << d.dart_face(x);
            }
        }
        let can_cross = d.x() < self.max_x;
        let mut across = vec![0u128; faces];
        if can_cross {
            for x in 0..d.dart_count() as u32 {
                if !d.is_fake(d.origin(x)) && !d.is_fake(d.target(x)) {
                    across[d.dart_face(x) as usize] |= 1 << d.dart_face(x ^ 1);
                }
            }
        }
        self.order[i..].iter().all(|&[p, q]| {
            let (fp, fq) = (at[p as usize], at[q as usize]);
            if fp == 0 || fq == 0 || fp & fq != 0 {
                return true;
            }
            let mut reach = 0u128;
            let mut bits = fp;
            while bits != 0 {
                reach |= across[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            reach & fq != 0
        })
    }
}

/// All ways to add edge ab to `d`: through a face shared by corners of a and
/// b, or (when `cross` is set) across one uncrossed segment separating a
/// corner of one endpoint from a corner of the other.
fn insertions(d: &OnePlaneDrawing, a: u32, b: u32, cross: bool) -> Vec<RawDrawing> {
    let e = d.m() as EdgeId;
    let mut base = d.raw().clone();
    base.edges.push([a, b]);
    let place = |raw: &mut RawDrawing, v: u32, corner: Option<DartId>| {
        let rot = &mut raw.rotations[v as usize];
        match corner {
            None => rot.push(e),
            Some(r) => {
                let pos = rot.iter().position(|&x| x == d.dart_edge(r)).unwrap();
                rot.insert(pos, e);
            }
        }
    };
    // corners of a vertex: None for an unplaced vertex, which fits anywhere
    let corners = |v: u32| -> Vec<Option<DartId>> {
        let ds = d.darts_around(v);
        if ds.is_empty() {
            vec![None]
        } else {
            ds.into_iter().map(Some).collect()
        }
    };
    let face_of = |c: Option<DartId>| c.map(|r| d.dart_face(r));
    let (ca, cb) = (corners(a), corners(b));
    let mut out = Vec::new();
    for &x in &ca {
        for &y in &cb {
            let (fx, fy) = (face_of(x), face_of(y));
            if fx.is_none() || fy.is_none() || fx == fy {
                let mut raw = base.clone();
                place(&mut raw, a, x);
                place(&mut raw, b, y);
                out.push(raw);
            }
        }
    }
    if !cross {
        return out;
    }
    // s1 sits in the face on the right of the crossed dart, s2 on its left;
    // s1 must be placed, and one pass covers both sides when both are
    let (s1, c1, s2, c2) = if ca[0].is_none() {
        (b, &cb, a, &ca)
    } else {
        (a, &ca, b, &cb)
    };
    {
        for &x in c1 {
            let Some(f1) = face_of(x) else { continue };
            for &delta in d.face(f1) {
                let (c, t) = (d.origin(delta), d.target(delta));
                if d.is_fake(c) || d.is_fake(t) || [a, b].contains(&c) || [a, b].contains(&t) {
                    continue;
                }
                let f2 = d.dart_face(delta ^ 1);
                for &y in c2 {
                    if face_of(y).is_some_and(|fy| fy != f2) {
                        continue;
                    }
                    let g = d.dart_edge(delta);
                    let mut raw = base.clone();
                    place(&mut raw, s1, x);
                    place(&mut raw, s2, y);
                    // ccw at the crossing: c, s1, t, s2
                    let pos = (s1 == a) == (raw.edges[g as usize][0] == c);
                    let orientation = if pos {
                        Orientation::Pos
                    } else {
                        Orientation::Neg
                    };
                    raw.crossings.push(Crossing {
                        edges: [g, e],
                        orientation,
                    });
                    out.push(raw);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::turan_graph;

    fn complete(n: usize) -> AbstractGraph {
        turan_graph(n, n + 1)
    }

    #[test]
    fn cycle_needs_no_crossing() {
        let g = AbstractGraph::from_edges(4, &[[0, 1], [1, 2], [2, 3], [3, 0]]).unwrap();
        let d = drawing_search(&g, SearchLimits::default()).unwrap();
        assert_eq!(d.x(), 0);
    }

    #[test]
    fn filters_reject_known_non_one_planar() {
        assert!(matches!(
            drawing_search(&complete(7), SearchLimits::default()),
            Err(SearchError::Rejected {
                filter: "general",
                m: 21,
                bound: 19
            })
        ));
        let k45 = {
            let mut g = AbstractGraph::empty(9);
            for a in 0..4 {
                for b in 4..9 {
                    g.add_edge(a, b);
                }
            }
            g
        };
        assert!(matches!(
            drawing_search(&k45, SearchLimits::default()),
            Err(SearchError::Rejected {
                filter: "bipartite",
                m: 20,
                bound: 19
            })
        ));
    }

    #[test]
    fn k5_and_k6_are_found() {
        for n in [5, 6] {
            let g = complete(n);
            let d = drawing_search(&g, SearchLimits::default()).unwrap();
            assert_eq!(AbstractGraph::of_drawing(&d), g);
            assert!(d.x() >= g.m() + 6 - 3 * n);
            let fewest = subdivision_search(&g, SearchLimits::default()).unwrap();
            assert_eq!(fewest.x(), g.m() + 6 - 3 * n);
        }
    }

    #[test]
    fn turan_k322_is_drawn() {
        let g = turan_graph(7, 4);
        let d = drawing_search(&g, SearchLimits::default()).unwrap();
        assert_eq!(d.m(), 16);
        assert!(d.x() >= 1);
    }

    #[test]
    fn k1111_3_is_not_one_planar() {
        // K7 minus a triangle passes every edge filter, so only enumeration can settle it
        let mut g = AbstractGraph::empty(7);
        for a in 0..7u32 {
            for b in a + 1..7 {
                if !(a < 3 && b < 3) {
                    g.add_edge(a, b);
                }
            }
        }
        assert!(filter(&g).is_ok());
        let unlimited = SearchLimits {
            max_crossings: None,
            max_candidates: u64::MAX,
        };
        for r in [
            drawing_search(&g, unlimited),
            subdivision_search(&g, unlimited),
        ] {
            assert!(
                matches!(r, Err(SearchError::Exhausted { complete: true, .. })),
                "{r:?}"
            );
        }
    }

    #[test]
    fn dense_graphs_are_found_quickly() {
        let g8 = AbstractGraph::of_drawing(&crate::constructions::gen_cube_g8());
        let d = drawing_search(&g8, SearchLimits::default()).unwrap();
        assert_eq!(AbstractGraph::of_drawing(&d), g8);
        assert_eq!(d.edges(), g8.edges().collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn disconnected_graphs_draw_per_component() {
        let mut g = complete(5);
        let mut h = AbstractGraph::empty(11);
        for [a, b] in g.edges() {
            h.add_edge(a, b);
            h.add_edge(a + 6, b + 6);
        }
        g = h;
        let d = drawing_search(&g, SearchLimits::default()).unwrap();
        assert_eq!((d.connectivity(), d.x()), (3, 2));
    }

    #[test]
    fn crossing_cap_limits_completeness() {
        let r = drawing_search(
            &complete(6),
            SearchLimits {
                max_crossings: Some(2),
                max_candidates: u64::MAX,
            },
        );
        assert!(matches!(
            r,
            Err(SearchError::Exhausted {
                complete: false,
                ..
            })
        ));
    }
}
