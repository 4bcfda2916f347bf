//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use oneplane::certify::{certify, general_bound, maxe_bound, turan_exhaustive, Tightness};
use oneplane::cliques::{has_clique, turan_size, AbstractGraph};
use oneplane::constructions::{first_seed, gen_ladder_h, q4_addition_with_seeds, FIXTURE_NAMES};
use oneplane::invariants::{
    alternating_vertices, check_edge_formula, classify_faces, compute_invariants,
    crossing_skeleton, fake_structure_ok, fake_triangle_check, FaceClass,
};
use oneplane::{gen_cube_g8, gen_k4_extremal, gen_k5_optimal, load_fixture, OnePlaneDrawing};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn k_free(d: &OnePlaneDrawing, k: usize) -> bool {
    !has_clique(&AbstractGraph::of_drawing(d), k)
}

fn formula_zero(tag: &str, d: &OnePlaneDrawing) -> Result<(), String> {
    let f = check_edge_formula(d).map_err(|e| format!("{tag}: {e}"))?;
    ensure(f.residual == 0, || {
        format!("{tag}: residual {}", f.residual)
    })
}

fn edge_formula() -> Outcome {
    let mut count = 0;
    for name in FIXTURE_NAMES {
        formula_zero(name, &load_fixture(name).map_err(|e| e.to_string())?)?;
        count += 1;
    }
    for n in std::iter::once(8).chain(10..=60) {
        formula_zero(
            &format!("k5-optimal n={n}"),
            &gen_k5_optimal(n).map_err(|e| e.to_string())?,
        )?;
        count += 1;
    }
    for n in 9..=60 {
        formula_zero(
            &format!("k4-extremal n={n}"),
            &gen_k4_extremal(n).map_err(|e| e.to_string())?,
        )?;
        count += 1;
    }
    for k in 2..=30 {
        formula_zero(
            &format!("ladder k={k}"),
            &gen_ladder_h(k).map_err(|e| e.to_string())?,
        )?;
        count += 1;
    }
    let random = common::random_drawings(200, 1);
    for (i, d) in random.iter().enumerate() {
        formula_zero(&format!("random #{i}"), d)?;
    }
    let crossed = random.iter().filter(|d| d.x() > 0).count();
    Ok(format!(
        "{count} constructed drawings and {} random ones ({crossed} with crossings), residual 0",
        random.len()
    ))
}

fn k5_family() -> Outcome {
    for n in std::iter::once(8).chain(10..=60) {
        let d = gen_k5_optimal(n).map_err(|e| e.to_string())?;
        ensure(d.m() == 4 * n - 8, || format!("n={n}: m={}", d.m()))?;
        ensure(d.x() == n - 2, || format!("n={n}: x={}", d.x()))?;
        ensure(k_free(&d, 5), || format!("n={n}: contains K5"))?;
    }
    Ok("n in {8} and 10..=60: m = 4n-8, x = n-2, K5-free".into())
}

fn k4_family() -> Outcome {
    for n in 9..=60 {
        let d = gen_k4_extremal(n).map_err(|e| e.to_string())?;
        let m = d.m() as i64;
        let (n_, x) = (n as i64, d.x() as i64);
        ensure(m == 7 * n_ / 2 - 7, || format!("n={n}: m={m}"))?;
        ensure(k_free(&d, 4), || format!("n={n}: contains K4"))?;
        ensure(2 * (m - 3 * n_ + 6) <= x && x <= n_ - 2, || {
            format!("n={n}: x={x} outside window")
        })?;
    }
    Ok("n in 9..=60: m = floor(7n/2)-7, K4-free, 2(m-3n+6) <= x <= n-2".into())
}

fn bound_tables() -> Outcome {
    let stated = [
        ((12, 3), 28),
        ((4, 3), 4),
        ((8, 4), 20),
        ((7, 4), 16),
        ((9, 4), 24),
        ((10, 4), 28),
        ((9, 5), 27),
        ((8, 5), 24),
        ((7, 5), 18),
        ((10, 5), 32),
        ((7, 7), 19),
        ((9, 7), 27),
        ((8, 7), 24),
        ((6, 7), 15),
    ];
    for ((n, k), want) in stated {
        let got = maxe_bound(n, k).map_err(|e| e.to_string())?.upper;
        ensure(got == want, || {
            format!("({n},{k}) -> {got}, expected {want}")
        })?;
    }
    let mut checked = 0;
    for n in 1..=20u64 {
        let b = |k| maxe_bound(n, k).unwrap().upper;
        if n >= 4 {
            ensure(b(3) == 3 * n - 8, || format!("k=3 n={n}"))?;
        }
        let k4 = if n >= 9 {
            (7 * n) / 2 - 7
        } else {
            (n * n) / 3 - n / 8
        };
        ensure(b(4) == k4, || format!("k=4 n={n}"))?;
        let k5 = if n == 8 || n >= 10 {
            4 * n - 8
        } else {
            (3 * n * n) / 8 - 3 * (n / 9)
        };
        ensure(b(5) == k5, || format!("k=5 n={n}"))?;
        let general = match n {
            1..=6 => n * (n - 1) / 2,
            7 | 9 => 4 * n - 9,
            _ => 4 * n - 8,
        };
        ensure(b(7) == general && general_bound(n) == general, || {
            format!("general n={n}")
        })?;
        ensure(b(8) == general, || format!("k=8 n={n}"))?;
        checked += 5;
    }
    Ok(format!(
        "{} stated values and {checked} table cells for 1 <= n <= 20",
        stated.len()
    ))
}

fn turan_oracle() -> Outcome {
    for n in 0..=7 {
        for k in 3..=5 {
            let e = turan_exhaustive(n, k).map_err(|e| e.to_string())?;
            let t = turan_size(n as u64, k as u64) as usize;
            ensure(e == t, || {
                format!("n={n} k={k}: exhaustive {e}, closed form {t}")
            })?;
        }
    }
    Ok("exhaustive maximum equals turan_size for n <= 7, k in 3..=5".into())
}

fn sign_laws(corpus: &[(String, OnePlaneDrawing)]) -> Outcome {
    let (mut k3free, mut k4free) = (0, 0);
    for (name, d) in corpus {
        let r = compute_invariants(d);
        ensure(r.two_b >= 0 && r.c >= 0, || {
            format!("{name}: twoB={} C={}", r.two_b, r.c)
        })?;
        let g = AbstractGraph::of_drawing(d);
        if !has_clique(&g, 3) && d.n() >= 3 {
            k3free += 1;
            ensure(r.a >= 0, || {
                format!("{name}: A={} on a K3-free drawing", r.a)
            })?;
            ensure(d.m() + 6 <= 3 * d.n(), || {
                format!("{name}: m={} > 3n-6", d.m())
            })?;
        }
        if !has_clique(&g, 4) {
            k4free += 1;
            ensure(r.a >= -(d.x() as i64), || format!("{name}: A={} < -x", r.a))?;
        }
    }
    Ok(format!(
        "{} drawings ({k3free} K3-free, {k4free} K4-free)",
        corpus.len()
    ))
}

fn fake_structure(corpus: &[(String, OnePlaneDrawing)]) -> Outcome {
    let mut k3free = 0;
    for (name, d) in corpus {
        ensure(fake_structure_ok(d), || {
            format!("{name}: adjacent fake vertices or crowded face")
        })?;
        if !has_clique(&AbstractGraph::of_drawing(d), 3) {
            k3free += 1;
            let r = fake_triangle_check(d, true).map_err(|e| format!("{name}: {e}"))?;
            ensure(r.holds, || {
                format!("{name}: fake 3-face condition fails at {:?}", r.failures)
            })?;
        }
    }
    Ok(format!(
        "{} drawings, {k3free} checked for the K3-free 3-face rule",
        corpus.len()
    ))
}

fn skeleton_g8() -> Outcome {
    let s = crossing_skeleton(&gen_cube_g8());
    let classes = classify_faces(&s);
    ensure(classes.len() == 12, || format!("{} faces", classes.len()))?;
    ensure(
        classes.iter().all(|&c| c == FaceClass::Alternating4),
        || format!("{classes:?}"),
    )?;
    let alt = alternating_vertices(&s);
    ensure(alt.len() == 8, || {
        format!("{} alternating vertices", alt.len())
    })?;
    ensure((0..8).all(|v| s.degree(v) == 3), || {
        "degrees differ from 3".into()
    })?;
    ensure(has_clique(&AbstractGraph::of_drawing(&s), 3), || {
        "skeleton is triangle-free".into()
    })?;
    Ok("12 alternating 4-faces, 8 alternating vertices of degree 3, contains K3".into())
}

fn q4_chain() -> Outcome {
    let mut d = gen_cube_g8();
    let mut seed = first_seed(&d).ok_or("G8 has no seed")?;
    for step in 1..=13 {
        let (next, created) =
            q4_addition_with_seeds(&d, seed).map_err(|e| format!("step {step}: {e}"))?;
        ensure(next.n() == d.n() + 4, || format!("step {step}: n"))?;
        ensure(next.m() == d.m() + 16, || {
            format!("step {step}: dm={}", next.m() as i64 - d.m() as i64)
        })?;
        ensure(next.x() == d.x() + 4, || {
            format!("step {step}: dx={}", next.x() as i64 - d.x() as i64)
        })?;
        ensure(k_free(&next, 5), || format!("step {step}: K5 appeared"))?;
        seed = created
            .into_iter()
            .min_by_key(|q| {
                let mut s = *q;
                s.sort_unstable();
                s
            })
            .unwrap();
        d = next;
    }
    ensure(d.n() == 60 && d.m() == 232, || {
        format!("ended at n={} m={}", d.n(), d.m())
    })?;
    Ok("13 steps from G8 to n=60, m=232; dm=16, dx=4 and K5-free at every step".into())
}

fn flagged_items() -> Outcome {
    for n in 4..=40u64 {
        let b = maxe_bound(n, 3).unwrap();
        ensure(b.upper == 3 * n - 8, || format!("n={n}: upper {}", b.upper))?;
        let expected = match n {
            4 => Tightness::TightWithWitness { external: false },
            6 => Tightness::UpperOnly,
            _ if n % 2 == 0 => Tightness::TightWithWitness { external: true },
            _ => Tightness::ConjecturedLower(3 * n - 9),
        };
        ensure(b.tight == expected, || format!("n={n}: {:?}", b.tight))?;
    }
    let d = load_fixture("fig13_nonbip").map_err(|e| e.to_string())?;
    let c = certify(&d, 3).map_err(|e| e.to_string())?;
    ensure(
        c.pass && !c.extremal && c.m == 20 && c.bound.upper == 22,
        || c.to_string(),
    )?;
    Ok("k=3 tightness carried as metadata; fig13_nonbip: m=20 <= 22, pass, not extremal".into())
}

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let t = Instant::now();
    let corpus = common::corpus();
    println!(
        "corpus: {} drawings built in {:.2?}",
        corpus.len(),
        t.elapsed()
    );
    let criteria: Vec<Criterion<'_>> = vec![
        (
            "edge-count identity",
            Duration::from_secs(10),
            Box::new(edge_formula),
        ),
        (
            "K5-free optimal family",
            Duration::from_secs(5),
            Box::new(k5_family),
        ),
        (
            "K4-free extremal family",
            Duration::from_secs(5),
            Box::new(k4_family),
        ),
        (
            "bound tables",
            Duration::from_secs(5),
            Box::new(bound_tables),
        ),
        (
            "Turan oracle",
            Duration::from_secs(60),
            Box::new(turan_oracle),
        ),
        (
            "invariant sign laws",
            Duration::from_secs(30),
            Box::new(|| sign_laws(&corpus)),
        ),
        (
            "fake-vertex structure",
            Duration::from_secs(30),
            Box::new(|| fake_structure(&corpus)),
        ),
        (
            "crossing skeleton of G8",
            Duration::from_secs(5),
            Box::new(skeleton_g8),
        ),
        (
            "Q4-addition chain",
            Duration::from_secs(5),
            Box::new(q4_chain),
        ),
        (
            "flagged bound metadata",
            Duration::from_secs(5),
            Box::new(flagged_items),
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS {name}: {msg} [{took:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {msg} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria fail", criteria.len());
        ExitCode::FAILURE
    }
}
