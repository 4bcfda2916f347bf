#![allow(dead_code)]

use oneplane::constructions::{gen_ladder_h, ladder_plus, FIXTURE_NAMES};
use oneplane::{
    drawing_search, gen_cube_g8, gen_k4_extremal, gen_k5_optimal, gen_turan_drawing, load_fixture,
    AbstractGraph, OnePlaneDrawing, SearchLimits,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Connected random graph on `n` vertices with `m` edges (m >= n - 1).
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, m: usize) -> AbstractGraph {
    let mut g = AbstractGraph::empty(n);
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(order[i], parent);
    }
    let mut rest: Vec<[u32; 2]> = (0..n as u32)
        .flat_map(|a| (a + 1..n as u32).map(move |b| [a, b]))
        .filter(|&[a, b]| !g.has_edge(a, b))
        .collect();
    rest.shuffle(rng);
    for [a, b] in rest.into_iter().take(m.saturating_sub(n - 1)) {
        g.add_edge(a, b);
    }
    g
}

/// `count` drawings found by the search on random connected graphs with
/// 4 <= n <= 8 and up to 4n - 8 edges, deterministic in `seed`.
pub fn random_drawings(count: usize, seed: u64) -> Vec<OnePlaneDrawing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limits = SearchLimits {
        max_crossings: None,
        max_candidates: 50_000,
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(4..=8usize);
        let m = rng.gen_range(n - 1..=(4 * n - 8).min(n * (n - 1) / 2));
        let g = random_connected(&mut rng, n, m);
        if let Ok(d) = drawing_search(&g, limits) {
            out.push(d);
        }
    }
    out
}

/// `count` drawings of random connected triangle-free graphs with
/// 6 <= n <= 10 and up to 3n - 8 edges.
pub fn random_k3free_drawings(count: usize, seed: u64) -> Vec<OnePlaneDrawing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limits = SearchLimits {
        max_crossings: None,
        max_candidates: 50_000,
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(6..=10usize);
        let target = rng.gen_range(n..=3 * n - 8);
        let mut g = AbstractGraph::empty(n);
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.shuffle(&mut rng);
        for i in 1..n {
            g.add_edge(order[i], order[rng.gen_range(0..i)]);
        }
        let mut rest: Vec<[u32; 2]> = (0..n as u32)
            .flat_map(|a| (a + 1..n as u32).map(move |b| [a, b]))
            .collect();
        rest.shuffle(&mut rng);
        for [a, b] in rest {
            if g.m() >= target {
                break;
            }
            let common = (0..n as u32).any(|w| g.has_edge(a, w) && g.has_edge(b, w));
            if !g.has_edge(a, b) && !common {
                g.add_edge(a, b);
            }
        }
        if let Ok(d) = drawing_search(&g, limits) {
            out.push(d);
        }
    }
    out
}

/// Every bundled and generated drawing used by the property checks.
pub fn corpus() -> Vec<(String, OnePlaneDrawing)> {
    let mut out = Vec::new();
    for name in FIXTURE_NAMES {
        out.push((name.to_string(), load_fixture(name).unwrap()));
    }
    out.push(("g8".into(), gen_cube_g8()));
    for n in (10..=30).chain([40, 60]) {
        out.push((format!("k5-optimal-{n}"), gen_k5_optimal(n).unwrap()));
    }
    for n in (9..=30).chain([45, 60]) {
        out.push((format!("k4-extremal-{n}"), gen_k4_extremal(n).unwrap()));
    }
    for k in 2..=12 {
        out.push((format!("ladder-{k}"), gen_ladder_h(k).unwrap()));
        out.push((format!("ladder-plus-{k}"), ladder_plus(k).unwrap()));
    }
    for n in 1..=7 {
        for k in [4, 5] {
            out.push((format!("turan-{n}-{k}"), gen_turan_drawing(n, k).unwrap()));
        }
    }
    for (i, d) in random_drawings(60, 7).into_iter().enumerate() {
        out.push((format!("random-{i}"), d));
    }
    for (i, d) in random_k3free_drawings(60, 8).into_iter().enumerate() {
        out.push((format!("random-k3free-{i}"), d));
    }
    out
}
