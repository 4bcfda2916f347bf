//! Schematic SVG of a planarization. Each component gets a Tutte layout with
//! its widest face pinned to a circle; crossings are drawn as x-marks.

use std::fmt::Write;

use oneplane::OnePlaneDrawing;

const RADIUS: f64 = 150.0;
const MARGIN: f64 = 30.0;

fn components(nv: usize, edges: &[[u32; 2]]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for &[a, b] in edges {
        let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    (0..nv).map(|v| find(&mut parent, v)).collect()
}

/// Positions for every planarization vertex.
pub fn layout(d: &OnePlaneDrawing) -> Vec<(f64, f64)> {
    let nv = d.planar_vertex_count();
    let edges = d.planarization_edges();
    let comp = components(nv, &edges);
    let mut adj = vec![Vec::new(); nv];
    for &[a, b] in &edges {
        adj[a as usize].push(b as usize);
        adj[b as usize].push(a as usize);
    }
    let mut pos = vec![(0.0, 0.0); nv];
    let mut fixed = vec![false; nv];
    let mut roots: Vec<usize> = comp.clone();
    roots.sort_unstable();
    roots.dedup();
    for (slot, &root) in roots.iter().enumerate() {
        let cx = MARGIN + RADIUS + slot as f64 * (2.0 * RADIUS + MARGIN);
        let cy = MARGIN + RADIUS;
        let members: Vec<usize> = (0..nv).filter(|&v| comp[v] == root).collect();
        if members.len() == 1 {
            pos[root] = (cx, cy);
            fixed[root] = true;
            continue;
        }
        // widest face of this component, by distinct vertices
        let mut best: Option<Vec<usize>> = None;
        for f in 0..d.face_count() as u32 {
            let walk = d.face_vertices(f);
            if comp[walk[0] as usize] != root {
                continue;
            }
            let mut ring: Vec<usize> = Vec::new();
            for v in walk {
                if !ring.contains(&(v as usize)) {
                    ring.push(v as usize);
                }
            }
            if best.as_ref().is_none_or(|b| ring.len() > b.len()) {
                best = Some(ring);
            }
        }
        let ring = best.expect("a component with an edge has a face");
        let k = ring.len() as f64;
        for (i, &v) in ring.iter().enumerate() {
            let t = std::f64::consts::TAU * i as f64 / k;
            pos[v] = (cx + RADIUS * t.cos(), cy - RADIUS * t.sin());
            fixed[v] = true;
        }
        for &v in &members {
            if !fixed[v] {
                pos[v] = (cx, cy);
            }
        }
        for _ in 0..10_000 {
            let mut moved: f64 = 0.0;
            for &v in &members {
                if fixed[v] || adj[v].is_empty() {
                    continue;
                }
                let (mut sx, mut sy) = (0.0, 0.0);
                for &u in &adj[v] {
                    sx += pos[u].0;
                    sy += pos[u].1;
                }
                let deg = adj[v].len() as f64;
                let p = (sx / deg, sy / deg);
                moved = moved.max((p.0 - pos[v].0).abs() + (p.1 - pos[v].1).abs());
                pos[v] = p;
            }
            if moved < 1e-7 {
                break;
            }
        }
    }
    pos
}

pub fn render(d: &OnePlaneDrawing) -> String {
    let pos = layout(d);
    let slots = components(d.planar_vertex_count(), &d.planarization_edges())
        .into_iter()
        .enumerate()
        .filter(|&(v, r)| v == r)
        .count()
        .max(1);
    let width = MARGIN + slots as f64 * (2.0 * RADIUS + MARGIN);
    let height = 2.0 * (RADIUS + MARGIN);
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(s, r##"<g stroke="#333" stroke-width="1.2">"##).unwrap();
    for [a, b] in d.planarization_edges() {
        let (p, q) = (pos[a as usize], pos[b as usize]);
        let crossed = d.is_fake(a) || d.is_fake(b);
        let dash = if crossed {
            r#" stroke-dasharray="5,2""#
        } else {
            ""
        };
        writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"{dash}/>"#,
            p.0, p.1, q.0, q.1
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, r##"<g stroke="#c00" stroke-width="2">"##).unwrap();
    for c in 0..d.x() as u32 {
        let (x, y) = pos[d.fake_vertex(c) as usize];
        writeln!(
            s,
            r#"<path d="M{:.2},{:.2}L{:.2},{:.2}M{:.2},{:.2}L{:.2},{:.2}"/>"#,
            x - 4.0,
            y - 4.0,
            x + 4.0,
            y + 4.0,
            x - 4.0,
            y + 4.0,
            x + 4.0,
            y - 4.0
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(
        s,
        r##"<g fill="#fff" stroke="#000" font-family="monospace" font-size="10">"##
    )
    .unwrap();
    for v in 0..d.n() as u32 {
        let (x, y) = pos[v as usize];
        let label = d.label(v).map_or_else(|| v.to_string(), str::to_string);
        writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="5"/>"#).unwrap();
        writeln!(
            s,
            r##"<text x="{:.2}" y="{:.2}" fill="#000" stroke="none">{}</text>"##,
            x + 6.0,
            y - 6.0,
            escape(&label)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, "</svg>").unwrap();
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_layout_is_finite_and_stable() {
        let d = oneplane::gen_cube_g8();
        let a = render(&d);
        assert_eq!(a, render(&d));
        assert_eq!(a.matches("<circle").count(), 8);
        assert_eq!(a.matches("<path").count(), d.x());
        assert!(!a.contains("NaN"));
    }

    #[test]
    fn components_are_placed_apart() {
        let d = oneplane::opg::parse(
            "opg 1\nvertex 0\nvertex 1\nvertex 2\nedge 0 0 1\nrot 0 e0\nrot 1 e0\n",
        )
        .unwrap();
        let p = layout(&d);
        assert!(p[2].0 > p[0].0.max(p[1].0));
    }
}
