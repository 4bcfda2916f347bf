//! Extremal bound tables, certificates, and brute-force oracles.

use std::fmt;

use thiserror::Error;

use crate::cliques::{find_clique, AbstractGraph};
use crate::drawing::OnePlaneDrawing;
use crate::invariants::InvariantError;
use crate::opg;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("bad parameter: {0}")]
    BadParam(String),
}

/// How much is known about the lower side of a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tightness {
    /// Attained. `external` marks witnesses that come from outside this crate.
    TightWithWitness {
        external: bool,
    },
    UpperOnly,
    /// Upper bound proven, the true value is conjectured to be this.
    ConjecturedLower(u64),
}

impl fmt::Display for Tightness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tightness::TightWithWitness { external: false } => write!(f, "tight"),
            Tightness::TightWithWitness { external: true } => write!(f, "tight-external"),
            Tightness::UpperOnly => write!(f, "upper-only"),
            Tightness::ConjecturedLower(v) => write!(f, "conjectured-lower-{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundEntry {
    pub n: u64,
    pub k: u64,
    pub upper: u64,
    pub tight: Tightness,
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Maximum size of a 1-planar graph on `n` vertices.
pub fn general_bound(n: u64) -> u64 {
    match n {
        0..=6 => binom2(n),
        7 | 9 => 4 * n - 9,
        _ => 4 * n - 8,
    }
}

/// Upper bound on the size of a K_k-free 1-planar graph of order `n`. Any
/// `k >= 7` gives the unrestricted table, since K_7 is not 1-planar.
pub fn maxe_bound(n: u64, k: u64) -> Result<BoundEntry, CertifyError> {
    if n == 0 {
        return Err(CertifyError::BadParam("n must be at least 1".into()));
    }
    if k < 3 {
        return Err(CertifyError::BadParam(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let tight = Tightness::TightWithWitness { external: false };
    let (upper, tight) = match k {
        3 if n < 4 => (n * n / 4, tight),
        3 if n == 4 => (4, tight),
        3 if n == 6 => (10, Tightness::UpperOnly),
        3 if n.is_multiple_of(2) => (3 * n - 8, Tightness::TightWithWitness { external: true }),
        3 => (3 * n - 8, Tightness::ConjecturedLower(3 * n - 9)),
        4 if n <= 8 => (n * n / 3 - n / 8, tight),
        4 => (7 * n / 2 - 7, tight),
        5 if n <= 7 || n == 9 => (3 * n * n / 8 - 3 * (n / 9), tight),
        5 => (4 * n - 8, tight),
        6 if n <= 5 => (binom2(n), tight),
        6 if n == 8 || n >= 10 => (4 * n - 8, tight),
        6 => (general_bound(n), Tightness::UpperOnly),
        _ => (
            general_bound(n),
            Tightness::TightWithWitness { external: n > 6 },
        ),
    };
    Ok(BoundEntry { n, k, upper, tight })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checks {
    pub valid_drawing: bool,
    pub clique_free: bool,
    pub edge_count: bool,
    pub crossing_bounds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub subject: String,
    pub k: u64,
    pub n: usize,
    pub m: usize,
    pub x: usize,
    pub bound: BoundEntry,
    /// Inclusive range the crossing number of the drawing must lie in.
    pub crossing_window: (u64, u64),
    /// A K_k found in the graph, if any.
    pub clique: Option<Vec<u32>>,
    pub checks: Checks,
    pub pass: bool,
    pub extremal: bool,
}

impl Certificate {
    pub fn pairs(&self) -> Vec<(&'static str, String)> {
        let clique = match &self.clique {
            Some(c) => c.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
            None => "none".into(),
        };
        vec![
            ("subject", self.subject.clone()),
            ("k", self.k.to_string()),
            ("n", self.n.to_string()),
            ("m", self.m.to_string()),
            ("x", self.x.to_string()),
            ("bound", self.bound.upper.to_string()),
            ("bound_status", self.bound.tight.to_string()),
            (
                "crossing_window",
                format!("{}..{}", self.crossing_window.0, self.crossing_window.1),
            ),
            ("clique", clique),
            ("valid_drawing", self.checks.valid_drawing.to_string()),
            ("clique_free", self.checks.clique_free.to_string()),
            ("edge_count", self.checks.edge_count.to_string()),
            ("crossing_bounds", self.checks.crossing_bounds.to_string()),
            ("verdict", if self.pass { "pass" } else { "fail" }.into()),
            ("extremal", self.extremal.to_string()),
        ]
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.pairs() {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// 64-bit FNV-1a of the canonical OPG text.
pub fn digest(d: &OnePlaneDrawing) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in opg::serialize(d).bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    format!("fnv1a64:{h:016x}")
}

/// Checks a drawing against the K_k-free bound. The crossing window is
/// `x <= n - 2` for every drawing; for `k = 4` and `n >= 3` the lower end is
/// `2(m - 3n + 6)`. It holds per component of order at least 4, components of
/// order at most 3 contribute at most -3 each to `m - 3n`, and the `+6` is
/// absorbed by any one component once `n >= 3`.
pub fn certify(d: &OnePlaneDrawing, k: u64) -> Result<Certificate, CertifyError> {
    let n = d.n();
    let m = d.m();
    let x = d.x();
    let bound = maxe_bound(n as u64, k)?;
    let g = AbstractGraph::of_drawing(d);
    let clique = if k <= 7 {
        find_clique(&g, k as usize)
    } else {
        None
    };
    let hi = n.saturating_sub(2) as u64;
    let lo = if k == 4 && n >= 3 {
        (2 * (m as i64 - 3 * n as i64 + 6)).max(0) as u64
    } else {
        0
    };
    let checks = Checks {
        valid_drawing: true,
        clique_free: clique.is_none(),
        edge_count: m as u64 <= bound.upper,
        crossing_bounds: lo <= x as u64 && x as u64 <= hi,
    };
    let pass =
        checks.valid_drawing && checks.clique_free && checks.edge_count && checks.crossing_bounds;
    Ok(Certificate {
        subject: digest(d),
        k,
        n,
        m,
        x,
        bound,
        crossing_window: (lo, hi),
        clique,
        extremal: pass && m as u64 == bound.upper,
        checks,
        pass,
    })
}

/// Lower bound on the crossings of a connected K4-free drawing.
pub fn crossing_lower_bound(d: &OnePlaneDrawing) -> Result<usize, InvariantError> {
    if !d.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    if d.n() < 4 {
        return Err(InvariantError::TooFewVertices);
    }
    if find_clique(&AbstractGraph::of_drawing(d), 4).is_some() {
        return Err(InvariantError::NotK4Free);
    }
    Ok((2 * (d.m() as i64 - 3 * d.n() as i64 + 6)).max(0) as usize)
}

/// Maximum size of a K_k-free graph on `n <= 7` labelled vertices, by
/// exhaustive branch and bound over edges.
pub fn turan_exhaustive(n: usize, k: usize) -> Result<usize, CertifyError> {
    if n > 7 {
        return Err(CertifyError::BadParam(format!(
            "n={n} is too large for an exhaustive sweep"
        )));
    }
    if k < 2 {
        return Err(CertifyError::BadParam(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    let mut s = Sweep {
        pairs,
        adj: vec![0u64; n],
        k,
        best: 0,
    };
    s.go(0, 0);
    Ok(s.best)
}

struct Sweep {
    pairs: Vec<(usize, usize)>,
    adj: Vec<u64>,
    k: usize,
    best: usize,
}

impl Sweep {
    fn go(&mut self, i: usize, have: usize) {
        if have + (self.pairs.len() - i) <= self.best {
            return;
        }
        if i == self.pairs.len() {
            self.best = have;
            return;
        }
        let (a, b) = self.pairs[i];
        if !self.closes_clique(a, b) {
            self.adj[a] |= 1 << b;
            self.adj[b] |= 1 << a;
            self.go(i + 1, have + 1);
            self.adj[a] &= !(1 << b);
            self.adj[b] &= !(1 << a);
        }
        self.go(i + 1, have);
    }

    /// Would edge ab complete a K_k?
    fn closes_clique(&self, a: usize, b: usize) -> bool {
        if self.k <= 2 {
            return true;
        }
        has_clique_in(&self.adj, self.adj[a] & self.adj[b], self.k - 2)
    }
}

fn has_clique_in(adj: &[u64], cand: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < need {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique_in(adj, rest & adj[v], need - 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::turan_size;
    use crate::drawing::tests::{c4, k4_cross};

    #[test]
    fn headline_table_values() {
        assert_eq!(maxe_bound(12, 3).unwrap().upper, 28);
        assert_eq!(maxe_bound(8, 4).unwrap().upper, 20);
        assert_eq!(maxe_bound(9, 5).unwrap().upper, 27);
        assert_eq!(maxe_bound(7, 7).unwrap().upper, 19);
        assert_eq!(maxe_bound(9, 9).unwrap().upper, 27);
        assert_eq!(maxe_bound(10, 4).unwrap().upper, 28);
        assert!(maxe_bound(0, 4).is_err());
        assert!(maxe_bound(5, 2).is_err());
    }

    #[test]
    fn k3_tightness_is_not_overclaimed() {
        assert_eq!(
            maxe_bound(9, 3).unwrap().tight,
            Tightness::ConjecturedLower(18)
        );
        assert_eq!(
            maxe_bound(10, 3).unwrap().tight,
            Tightness::TightWithWitness { external: true }
        );
        assert_eq!(maxe_bound(6, 3).unwrap().tight, Tightness::UpperOnly);
    }

    #[test]
    fn small_orders_reduce_to_turan() {
        for n in 1..=7u64 {
            assert_eq!(maxe_bound(n, 4).unwrap().upper, turan_size(n, 4), "n={n}");
            assert_eq!(maxe_bound(n, 5).unwrap().upper, turan_size(n, 5), "n={n}");
        }
    }

    #[test]
    fn k6_bounds_sit_between_k5_and_general() {
        for n in 1..=30u64 {
            let b5 = maxe_bound(n, 5).unwrap().upper;
            let b6 = maxe_bound(n, 6).unwrap().upper;
            let b7 = maxe_bound(n, 7).unwrap().upper;
            assert!(b5 <= b6 && b6 <= b7, "n={n}");
        }
    }

    #[test]
    fn exhaustive_matches_closed_form() {
        assert_eq!(turan_exhaustive(5, 3).unwrap(), 6);
        assert_eq!(turan_exhaustive(2, 5).unwrap(), 1);
        assert_eq!(turan_exhaustive(6, 4).unwrap(), 12);
        assert!(turan_exhaustive(8, 3).is_err());
    }

    #[test]
    fn certify_cycle_and_crossed_k4() {
        let c = certify(&c4(), 3).unwrap();
        assert!(c.pass && c.extremal);
        let c = certify(&k4_cross(), 4).unwrap();
        assert!(!c.pass);
        assert_eq!(c.clique, Some(vec![0, 1, 2, 3]));
        let c = certify(&k4_cross(), 5).unwrap();
        assert!(c.pass && c.extremal);
        assert!(c.to_string().contains("verdict=pass\n"));
    }

    #[test]
    fn lower_bound_errors() {
        assert_eq!(crossing_lower_bound(&c4()).unwrap(), 0);
        assert_eq!(
            crossing_lower_bound(&k4_cross()),
            Err(InvariantError::NotK4Free)
        );
    }
}
