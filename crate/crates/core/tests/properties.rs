mod common;

use oneplane::certify::certify;
use oneplane::cliques::AbstractGraph;
use oneplane::invariants::{
    check_edge_formula, check_incidence_identity, compute_invariants, crossing_skeleton,
};
use oneplane::opg;
use oneplane::search::{drawing_search, subdivision_search, SearchError, SearchLimits};
use oneplane::{OnePlaneDrawing, RawDrawing};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn drawing_from_seed(seed: u64) -> Option<OnePlaneDrawing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=8usize);
    let m = rng.gen_range(n - 1..=(4 * n).saturating_sub(8).max(n - 1).min(n * (n - 1) / 2));
    let g = common::random_connected(&mut rng, n, m);
    drawing_search(
        &g,
        SearchLimits {
            max_crossings: None,
            max_candidates: 50_000,
        },
    )
    .ok()
}

/// true: drawable, false: proven not drawable, None: undecided.
fn verdict(r: &Result<OnePlaneDrawing, SearchError>) -> Option<bool> {
    match r {
        Ok(_) => Some(true),
        Err(SearchError::Rejected { .. }) | Err(SearchError::Exhausted { complete: true, .. }) => {
            Some(false)
        }
        Err(_) => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn drawings_satisfy_counting_laws(seed in any::<u64>()) {
        let Some(d) = drawing_from_seed(seed) else { return Ok(()) };
        prop_assert!(d.x() + 2 <= d.n().max(2));
        prop_assert!(check_incidence_identity(&d).holds);
        prop_assert_eq!(check_edge_formula(&d).unwrap().residual, 0);
        let r = compute_invariants(&d);
        prop_assert!(r.identity_ok);
        prop_assert!(r.two_b >= 0 && r.c >= 0);
        let faces: usize = r.face_hist.values().sum();
        prop_assert_eq!(faces + d.n() + d.x(), d.m() + 2 * d.x() + 2);
    }

    #[test]
    fn opg_round_trip_and_mirror(seed in any::<u64>()) {
        let Some(d) = drawing_from_seed(seed) else { return Ok(()) };
        let text = opg::serialize(&d);
        let back = opg::parse(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(opg::serialize(&back), text);
        let mirror = OnePlaneDrawing::new(d.raw().mirrored()).unwrap();
        let (a, b) = (compute_invariants(&d), compute_invariants(&mirror));
        prop_assert_eq!((a.a, a.two_b, a.c, a.face_hist), (b.a, b.two_b, b.c, b.face_hist));
    }

    #[test]
    fn flipping_one_crossing_is_detected(seed in any::<u64>()) {
        let Some(d) = drawing_from_seed(seed) else { return Ok(()) };
        for c in 0..d.x() {
            let mut raw: RawDrawing = d.raw().clone();
            raw.crossings[c].orientation = raw.crossings[c].orientation.flipped();
            prop_assert!(OnePlaneDrawing::new(raw).is_err());
        }
    }

    #[test]
    fn sub_drawings_stay_valid(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let Some(d) = drawing_from_seed(seed) else { return Ok(()) };
        let s = crossing_skeleton(&d);
        prop_assert_eq!(s.m(), 2 * d.x());
        if d.m() == 0 {
            return Ok(());
        }
        let gone = pick.index(d.m());
        let keep: Vec<bool> = (0..d.m()).map(|e| e != gone).collect();
        let sub = OnePlaneDrawing::new(d.raw().retain_edges(&keep)).unwrap();
        prop_assert_eq!(sub.m() + 1, d.m());
        if sub.is_connected() && sub.n() >= 3 {
            prop_assert_eq!(check_edge_formula(&sub).unwrap().residual, 0);
        }
    }

    #[test]
    fn certificates_match_bounds(seed in any::<u64>()) {
        let Some(d) = drawing_from_seed(seed) else { return Ok(()) };
        for k in 3..=7u64 {
            let c = certify(&d, k).unwrap();
            prop_assert_eq!(c.pass, c.clique.is_none() && c.m as u64 <= c.bound.upper && c.checks.crossing_bounds);
            if c.clique.is_none() {
                // every drawing here is 1-planar and K_k-free, so the bound must hold
                prop_assert!(c.pass, "{}", c);
            }
        }
    }
}

#[test]
fn search_methods_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let limits = SearchLimits {
        max_crossings: None,
        max_candidates: 5_000,
    };
    let mut decided = 0;
    for _ in 0..150 {
        let n = rng.gen_range(5..=7usize);
        let top = oneplane::certify::general_bound(n as u64) as usize;
        let m = if rng.gen_bool(0.5) {
            rng.gen_range(top - 3..=top)
        } else {
            rng.gen_range(n..=3 * n - 6)
        };
        let g = common::random_connected(&mut rng, n, m);
        let fast = drawing_search(&g, limits);
        let slow = subdivision_search(&g, limits);
        if let (Some(a), Some(b)) = (verdict(&fast), verdict(&slow)) {
            assert_eq!(a, b, "methods disagree on {}", g.to_edge_list());
            decided += 1;
        }
        if let (Ok(f), Ok(s)) = (&fast, &slow) {
            // the subdivision method returns a drawing with the fewest crossings
            assert!(s.x() <= f.x());
        }
        for d in [fast, slow].into_iter().flatten() {
            assert_eq!(AbstractGraph::of_drawing(&d), g);
        }
    }
    assert!(
        decided >= 100,
        "only {decided} graphs decided by both methods"
    );
}

/// K7 minus a triangle with its vertices shuffled into an 8-vertex graph and
/// extra edges at the eighth vertex; every such graph contains K_{1,1,1,1,3}.
#[test]
fn supergraphs_of_k1111_3_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let unlimited = SearchLimits {
        max_crossings: None,
        max_candidates: u64::MAX,
    };
    for _ in 0..12 {
        let mut perm: Vec<u32> = (0..8).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let mut g = AbstractGraph::empty(8);
        for a in 0..7u32 {
            for b in a + 1..7 {
                if !(a < 3 && b < 3) {
                    g.add_edge(perm[a as usize], perm[b as usize]);
                }
            }
        }
        let extra = rng.gen_range(1..=4);
        for _ in 0..extra {
            g.add_edge(perm[7], perm[rng.gen_range(0..7)]);
        }
        let r = drawing_search(&g, unlimited);
        assert!(verdict(&r) == Some(false), "{r:?} on {}", g.to_edge_list());
    }
}

#[test]
fn complete_bipartite_threshold() {
    let unlimited = SearchLimits {
        max_crossings: None,
        max_candidates: u64::MAX,
    };
    for (t, drawable) in [(6, true), (7, false)] {
        let mut g = AbstractGraph::empty(3 + t);
        for a in 0..3u32 {
            for b in 3..3 + t as u32 {
                g.add_edge(a, b);
            }
        }
        let r = drawing_search(&g, unlimited);
        assert_eq!(verdict(&r), Some(drawable), "K3,{t}: {r:?}");
    }
}
