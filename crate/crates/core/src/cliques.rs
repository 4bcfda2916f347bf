//! Abstract graphs, exact clique detection, and Turán graphs.

use std::collections::BTreeSet;
use std::fmt::Write;

use thiserror::Error;

use crate::drawing::OnePlaneDrawing;

/// A simple undirected graph on `0..n` with bitset adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractGraph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
    adj: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("edge ({0},{1}) is a loop or references a missing vertex")]
    BadEdge(u32, u32),
    #[error("edge ({0},{1}) appears twice")]
    DuplicateEdge(u32, u32),
}

impl AbstractGraph {
    pub fn empty(n: usize) -> Self {
        AbstractGraph {
            n,
            edges: BTreeSet::new(),
            adj: vec![vec![0; n.div_ceil(64).max(1)]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[[u32; 2]]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &[a, b] in edges {
            if a == b || a as usize >= n || b as usize >= n {
                return Err(GraphError::BadEdge(a, b));
            }
            if !g.add_edge(a, b) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(g)
    }

    pub fn of_drawing(d: &OnePlaneDrawing) -> Self {
        Self::from_edges(d.n(), d.edges()).expect("validated drawings are simple")
    }

    /// Adds `ab`; returns false if it was already present.
    pub fn add_edge(&mut self, a: u32, b: u32) -> bool {
        let key = (a.min(b), a.max(b));
        if !self.edges.insert(key) {
            return false;
        }
        self.adj[a as usize][b as usize / 64] |= 1 << (b % 64);
        self.adj[b as usize][a as usize / 64] |= 1 << (a % 64);
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize][b as usize / 64] >> (b % 64) & 1 == 1
    }

    /// Edges as sorted pairs `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = [u32; 2]> + '_ {
        self.edges.iter().map(|&(a, b)| [a, b])
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        (0..self.n as u32)
            .filter(|&w| self.has_edge(v, w))
            .collect()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s as u32];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if side[w as usize] == u8::MAX {
                        side[w as usize] = 1 - side[v as usize];
                        stack.push(w);
                    } else if side[w as usize] == side[v as usize] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Plain edge-list text: `n m` then one `u v` per line.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let pair = |ln: usize, l: &str| -> Result<(u32, u32), GraphError> {
            let v: Vec<&str> = l.split_whitespace().collect();
            let bad = || GraphError::Syntax {
                line: ln,
                msg: format!("expected two integers, got '{l}'"),
            };
            if v.len() != 2 {
                return Err(bad());
            }
            Ok((
                v[0].parse().map_err(|_| bad())?,
                v[1].parse().map_err(|_| bad())?,
            ))
        };
        let (ln, head) = lines.next().ok_or(GraphError::Syntax {
            line: 1,
            msg: "empty input".into(),
        })?;
        let (n, m) = pair(ln, head)?;
        let mut edges = Vec::new();
        for (ln, l) in lines {
            let (a, b) = pair(ln, l)?;
            edges.push([a, b]);
        }
        if edges.len() != m as usize {
            return Err(GraphError::Syntax {
                line: 1,
                msg: format!("header says {m} edges, found {}", edges.len()),
            });
        }
        Self::from_edges(n as usize, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for [a, b] in self.edges() {
            writeln!(s, "{a} {b}").unwrap();
        }
        s
    }
}

/// Finds the lexicographically least `k`-clique, if any.
pub fn find_clique(g: &AbstractGraph, k: usize) -> Option<Vec<u32>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let words = g.n.div_ceil(64).max(1);
    let all: Vec<u64> = (0..words)
        .map(|w| {
            let lo = w * 64;
            let hi = (lo + 64).min(g.n);
            if hi <= lo {
                0
            } else if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            }
        })
        .collect();
    let mut chosen = Vec::with_capacity(k);
    if extend(g, &all, k, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn popcount(s: &[u64]) -> usize {
    s.iter().map(|w| w.count_ones() as usize).sum()
}

// Candidates are tried in increasing order, so the first hit is lexicographically least.
fn extend(g: &AbstractGraph, cand: &[u64], k: usize, chosen: &mut Vec<u32>) -> bool {
    if chosen.len() == k {
        return true;
    }
    if popcount(cand) < k - chosen.len() {
        return false;
    }
    let mut rest = cand.to_vec();
    for w in 0..rest.len() {
        while rest[w] != 0 {
            let b = rest[w].trailing_zeros() as usize;
            let v = w * 64 + b;
            rest[w] &= !(1u64 << b);
            let next: Vec<u64> = rest.iter().zip(&g.adj[v]).map(|(a, b)| a & b).collect();
            if popcount(&next) + 1 >= k - chosen.len() {
                chosen.push(v as u32);
                if extend(g, &next, k, chosen) {
                    return true;
                }
                chosen.pop();
            }
            if popcount(&rest) < k - chosen.len() {
                return false;
            }
        }
    }
    false
}

pub fn has_clique(g: &AbstractGraph, k: usize) -> bool {
    find_clique(g, k).is_some()
}

/// Size of the largest clique.
pub fn clique_number(g: &AbstractGraph) -> usize {
    let mut k = if g.n == 0 { 0 } else { 1 };
    while has_clique(g, k + 1) {
        k += 1;
    }
    k
}

/// T_{k-1}(n): complete (k-1)-partite graph with parts as equal as possible.
/// Vertices of one part are consecutive; larger parts come first.
pub fn turan_graph(n: usize, k: usize) -> AbstractGraph {
    assert!(k >= 2, "turan_graph needs k >= 2");
    let parts = k - 1;
    let (q, r) = (n / parts, n % parts);
    let mut part = Vec::with_capacity(n);
    for p in 0..parts {
        let size = if p < r { q + 1 } else { q };
        part.extend(std::iter::repeat_n(p, size));
    }
    let mut g = AbstractGraph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if part[a] != part[b] {
                g.add_edge(a as u32, b as u32);
            }
        }
    }
    g
}

/// Edge count of T_{k-1}(n), computed in closed form.
pub fn turan_size(n: u64, k: u64) -> u64 {
    assert!(k >= 2, "turan_size needs k >= 2");
    let parts = k - 1;
    let (q, r) = (n / parts, n % parts);
    // (k-2)(n^2 - r^2) / (2(k-1)) + C(r,2), with n^2 - r^2 = q(k-1)(n+r)
    (k - 2) * q * (n + r) / 2 + r * r.saturating_sub(1) / 2
}
