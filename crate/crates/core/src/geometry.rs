//! Combinatorial data read off a straight-line layout of the planarization.
//!
//! True vertices get coordinates; a crossed edge is drawn as two straight
//! segments meeting at its crossing point. Rotations and orientation bits are
//! derived from angles. The caller still validates the result, so a layout
//! that is not actually plane is caught there.

use crate::drawing::{Crossing, EdgeId, Orientation, RawDrawing};

pub type Point = (f64, f64);

fn angle(from: Point, to: Point) -> f64 {
    (to.1 - from.1).atan2(to.0 - from.0)
}

/// Orientation of the crossing at `at` between edges with endpoint positions
/// `e` and `f` (each listed in edge order).
pub fn crossing_orientation(at: Point, e: [Point; 2], f: [Point; 2]) -> Option<Orientation> {
    let mut dirs = [
        (angle(at, e[0]), 0u8),
        (angle(at, f[0]), 1),
        (angle(at, e[1]), 2),
        (angle(at, f[1]), 3),
    ];
    dirs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let start = dirs.iter().position(|d| d.1 == 0).unwrap();
    let seq: Vec<u8> = (0..4).map(|i| dirs[(start + i) % 4].1).collect();
    match seq.as_slice() {
        [0, 1, 2, 3] => Some(Orientation::Pos),
        [0, 3, 2, 1] => Some(Orientation::Neg),
        _ => None,
    }
}

/// Builds a drawing from true-vertex positions, edges, and for every crossing
/// the two edge ids and the crossing point.
pub fn straight_planarization(
    labels: Vec<Option<String>>,
    points: &[Point],
    edges: Vec<[u32; 2]>,
    crossings: &[([EdgeId; 2], Point)],
) -> RawDrawing {
    let n = points.len();
    let mut via: Vec<Option<Point>> = vec![None; edges.len()];
    let mut out_crossings = Vec::with_capacity(crossings.len());
    for &([e, f], p) in crossings {
        via[e as usize] = Some(p);
        via[f as usize] = Some(p);
        let pe = edges[e as usize].map(|v| points[v as usize]);
        let pf = edges[f as usize].map(|v| points[v as usize]);
        let orientation =
            crossing_orientation(p, pe, pf).expect("crossing segments must alternate");
        out_crossings.push(Crossing {
            edges: [e, f],
            orientation,
        });
    }
    let mut around: Vec<Vec<(f64, EdgeId)>> = vec![Vec::new(); n];
    for (e, &[a, b]) in edges.iter().enumerate() {
        for (v, w) in [(a, b), (b, a)] {
            let toward = via[e].unwrap_or(points[w as usize]);
            around[v as usize].push((angle(points[v as usize], toward), e as u32));
        }
    }
    let rotations = around
        .into_iter()
        .map(|mut list| {
            list.sort_by(|a, b| a.0.total_cmp(&b.0));
            list.into_iter().map(|(_, e)| e).collect()
        })
        .collect();
    RawDrawing {
        labels,
        edges,
        crossings: out_crossings,
        rotations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::OnePlaneDrawing;

    #[test]
    fn square_with_diagonals() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        let edges = vec![[0, 1], [1, 2], [2, 3], [3, 0], [0, 2], [1, 3]];
        let raw = straight_planarization(vec![None; 4], &pts, edges, &[([4, 5], (0.5, 0.5))]);
        assert_eq!(raw.crossings[0].orientation, Orientation::Pos);
        let d = OnePlaneDrawing::new(raw).unwrap();
        assert_eq!(d.face_count(), 5);
    }

    #[test]
    fn orientation_mirrors() {
        let at = (0.0, 0.0);
        let e = [(-1.0, 0.0), (1.0, 0.0)];
        assert_eq!(
            crossing_orientation(at, e, [(0.0, -1.0), (0.0, 1.0)]),
            Some(Orientation::Pos)
        );
        assert_eq!(
            crossing_orientation(at, e, [(0.0, 1.0), (0.0, -1.0)]),
            Some(Orientation::Neg)
        );
        assert_eq!(crossing_orientation(at, e, [(0.0, 1.0), (-1.0, 1.0)]), None);
    }
}
