//! Planar embedding of small simple graphs.
//!
//! Demoucron–Malgrange–Pertuiset path addition, run on each biconnected
//! block; block rotations are concatenated at cut vertices. The result is a
//! counterclockwise neighbor order per vertex under the convention that the
//! face walk through `p -> v -> q` means `q` follows `p` around `v`.

use std::collections::{HashMap, HashSet};

/// Returns a planar rotation system (neighbor lists) or `None` if the graph is
/// not planar. Neighbors of isolated vertices are empty lists.
pub fn planar_embedding(n: usize, edges: &[[u32; 2]]) -> Option<Vec<Vec<u32>>> {
    let mut adj = vec![Vec::new(); n];
    for &[a, b] in edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    let mut rot: Vec<Vec<u32>> = vec![Vec::new(); n];
    for block in biconnected_blocks(n, &adj) {
        if block.len() == 1 {
            let [a, b] = block[0];
            rot[a as usize].push(b);
            rot[b as usize].push(a);
            continue;
        }
        let local = embed_block(&block)?;
        for (v, list) in local {
            rot[v as usize].extend(list);
        }
    }
    Some(rot)
}

pub fn is_planar(n: usize, edges: &[[u32; 2]]) -> bool {
    planar_embedding(n, edges).is_some()
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn biconnected_blocks(n: usize, adj: &[Vec<u32>]) -> Vec<Vec<[u32; 2]>> {
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut stack: Vec<[u32; 2]> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != u32::MAX || adj[root].is_empty() {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut dfs: Vec<(u32, u32, usize)> = vec![(root as u32, u32::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut i)) = dfs.last_mut() {
            if *i < adj[v as usize].len() {
                let w = adj[v as usize][*i];
                *i += 1;
                if w == parent {
                    continue;
                }
                if disc[w as usize] == u32::MAX {
                    stack.push([v, w]);
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    time += 1;
                    dfs.push((w, v, 0));
                } else if disc[w as usize] < disc[v as usize] {
                    stack.push([v, w]);
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                dfs.pop();
                if let Some(&(p, _, _)) = dfs.last() {
                    low[p as usize] = low[p as usize].min(low[v as usize]);
                    if low[v as usize] >= disc[p as usize] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == [p, v] {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

fn key(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

/// DMP on a biconnected block with at least two edges.
fn embed_block(block: &[[u32; 2]]) -> Option<HashMap<u32, Vec<u32>>> {
    let mut adj: HashMap<u32, Vec<u32>> = HashMap::new();
    for &[a, b] in block {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    let nv = adj.len();
    if nv >= 3 && block.len() > 3 * nv - 6 {
        return None;
    }
    let mut verts: Vec<u32> = adj.keys().copied().collect();
    verts.sort_unstable();

    let cycle = find_cycle(&adj, verts[0]);
    let mut in_h: HashSet<u32> = cycle.iter().copied().collect();
    let mut h_edges: HashSet<(u32, u32)> = HashSet::new();
    for i in 0..cycle.len() {
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<u32>> = vec![cycle, rev];

    while h_edges.len() < block.len() {
        let frags = fragments(&adj, &verts, &in_h, &h_edges);
        let face_sets: Vec<HashSet<u32>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, fr) in frags.iter().enumerate() {
            let adm: Vec<usize> = (0..faces.len())
                .filter(|&k| fr.attachments.iter().all(|a| face_sets[k].contains(a)))
                .collect();
            match adm.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, adm[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, adm[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("a non-embedded edge implies a fragment");
        let path = fragment_path(&adj, &in_h, &frags[fi]);
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&v| v == a).unwrap();
        let j = face.iter().position(|&v| v == b).unwrap();
        let len = face.len();
        let inner = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut k = i;
        loop {
            f1.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % len;
        }
        f1.extend(inner.iter().rev());
        let mut f2 = Vec::new();
        let mut k = j;
        loop {
            f2.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % len;
        }
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        in_h.extend(inner.iter().copied());
    }

    // q follows p around v for every face corner (p, v, q)
    let mut succ: HashMap<(u32, u32), u32> = HashMap::new();
    for f in &faces {
        let l = f.len();
        for t in 0..l {
            succ.insert((f[t], f[(t + l - 1) % l]), f[(t + 1) % l]);
        }
    }
    let mut out = HashMap::new();
    for &v in &verts {
        let start = adj[&v][0];
        let mut list = vec![start];
        let mut p = succ[&(v, start)];
        while p != start {
            list.push(p);
            p = succ[&(v, p)];
        }
        debug_assert_eq!(list.len(), adj[&v].len());
        out.insert(v, list);
    }
    Some(out)
}

fn find_cycle(adj: &HashMap<u32, Vec<u32>>, root: u32) -> Vec<u32> {
    let mut parent: HashMap<u32, u32> = HashMap::new();
    let mut depth: HashMap<u32, usize> = HashMap::new();
    let mut stack = vec![(root, 0usize)];
    depth.insert(root, 0);
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        let list = &adj[&v];
        if *i == list.len() {
            stack.pop();
            continue;
        }
        let w = list[*i];
        *i += 1;
        if parent.get(&v) == Some(&w) {
            continue;
        }
        if let Some(&dw) = depth.get(&w) {
            if dw < depth[&v] {
                let mut cyc = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[&x];
                    cyc.push(x);
                }
                return cyc;
            }
            continue;
        }
        parent.insert(w, v);
        depth.insert(w, depth[&v] + 1);
        stack.push((w, 0));
    }
    unreachable!("biconnected block without a cycle")
}

struct Fragment {
    /// Chord edge, or the vertex set of a bridge component.
    chord: Option<(u32, u32)>,
    inner: HashSet<u32>,
    attachments: Vec<u32>,
}

fn fragments(
    adj: &HashMap<u32, Vec<u32>>,
    verts: &[u32],
    in_h: &HashSet<u32>,
    h_edges: &HashSet<(u32, u32)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &a in verts {
        if !in_h.contains(&a) {
            continue;
        }
        for &b in &adj[&a] {
            if a < b && in_h.contains(&b) && !h_edges.contains(&key(a, b)) {
                out.push(Fragment {
                    chord: Some((a, b)),
                    inner: HashSet::new(),
                    attachments: vec![a, b],
                });
            }
        }
    }
    let mut seen: HashSet<u32> = HashSet::new();
    for &s in verts {
        if in_h.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut comp = HashSet::new();
        let mut att = Vec::new();
        let mut stack = vec![s];
        seen.insert(s);
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &w in &adj[&v] {
                if in_h.contains(&w) {
                    if !att.contains(&w) {
                        att.push(w);
                    }
                } else if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        att.sort_unstable();
        out.push(Fragment {
            chord: None,
            inner: comp,
            attachments: att,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &HashMap<u32, Vec<u32>>, in_h: &HashSet<u32>, fr: &Fragment) -> Vec<u32> {
    if let Some((a, b)) = fr.chord {
        return vec![a, b];
    }
    let a = fr.attachments[0];
    let start = *adj[&a].iter().find(|w| fr.inner.contains(w)).unwrap();
    let mut prev: HashMap<u32, u32> = HashMap::new();
    let mut queue = std::collections::VecDeque::from([start]);
    prev.insert(start, start);
    while let Some(v) = queue.pop_front() {
        if let Some(&b) = adj[&v].iter().find(|&&w| in_h.contains(&w) && w != a) {
            let mut path = vec![b, v];
            let mut x = v;
            while x != start {
                x = prev[&x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[&v] {
            if fr.inner.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}
