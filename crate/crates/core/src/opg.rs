//! The OPG text format.
//!
//! ```text
//! opg 1
//! vertex <id> [label]
//! edge <id> <u> <v>
//! cross <id> <e> <f> <pos|neg>
//! rot <vertex> e<edge> e<edge> ...
//! ```
//!
//! Ids of each kind must be dense, `0..count`. Lines after the header may come
//! in any order; `#` starts a comment. Every vertex with at least one edge
//! needs a `rot` line.

use std::fmt::Write;

use crate::drawing::{Crossing, DrawingError, OnePlaneDrawing, Orientation, RawDrawing};

fn syntax(line: usize, msg: impl Into<String>) -> DrawingError {
    DrawingError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<u32, DrawingError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse::<u32>()
        .map_err(|_| syntax(line, format!("bad {what} '{tok}'")))
}

fn place<T: Clone>(
    slots: &mut Vec<Option<T>>,
    id: u32,
    val: T,
    line: usize,
    kind: &str,
) -> Result<(), DrawingError> {
    let i = id as usize;
    if i >= slots.len() {
        slots.resize(i + 1, None);
    }
    if slots[i].is_some() {
        return Err(syntax(line, format!("{kind} {id} declared twice")));
    }
    slots[i] = Some(val);
    Ok(())
}

fn densify<T>(slots: Vec<Option<T>>, kind: &str) -> Result<Vec<T>, DrawingError> {
    let len = slots.len();
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            s.ok_or_else(|| {
                syntax(
                    0,
                    format!("{kind} ids must be dense: {i} missing of 0..{len}"),
                )
            })
        })
        .collect()
}

/// Parses OPG text into raw drawing data without the embedding checks.
pub fn parse_raw(text: &str) -> Result<RawDrawing, DrawingError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, "opg 1")) => {}
        Some((ln, _)) => return Err(syntax(ln, "expected header 'opg 1'")),
        None => return Err(syntax(1, "empty input")),
    }
    let mut labels: Vec<Option<Option<String>>> = Vec::new();
    let mut edges: Vec<Option<[u32; 2]>> = Vec::new();
    let mut crosses: Vec<Option<Crossing>> = Vec::new();
    let mut rots: Vec<Option<Vec<u32>>> = Vec::new();
    for (ln, line) in lines {
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("vertex") => {
                let id = num(tok.next(), ln, "vertex id")?;
                let label = tok.next().map(str::to_string);
                if tok.next().is_some() {
                    return Err(syntax(ln, "labels must be a single token"));
                }
                place(&mut labels, id, label, ln, "vertex")?;
            }
            Some("edge") => {
                let id = num(tok.next(), ln, "edge id")?;
                let u = num(tok.next(), ln, "endpoint")?;
                let v = num(tok.next(), ln, "endpoint")?;
                if tok.next().is_some() {
                    return Err(syntax(ln, "trailing tokens"));
                }
                place(&mut edges, id, [u, v], ln, "edge")?;
            }
            Some("cross") => {
                let id = num(tok.next(), ln, "crossing id")?;
                let e = num(tok.next(), ln, "edge id")?;
                let f = num(tok.next(), ln, "edge id")?;
                let orientation = match tok.next() {
                    Some("pos") => Orientation::Pos,
                    Some("neg") => Orientation::Neg,
                    other => return Err(syntax(ln, format!("bad orientation {other:?}"))),
                };
                if tok.next().is_some() {
                    return Err(syntax(ln, "trailing tokens"));
                }
                place(
                    &mut crosses,
                    id,
                    Crossing {
                        edges: [e, f],
                        orientation,
                    },
                    ln,
                    "crossing",
                )?;
            }
            Some("rot") => {
                let v = num(tok.next(), ln, "vertex id")?;
                let mut list = Vec::new();
                for t in tok {
                    let e = t
                        .strip_prefix('e')
                        .and_then(|s| s.parse::<u32>().ok())
                        .ok_or_else(|| syntax(ln, format!("bad incidence '{t}'")))?;
                    list.push(e);
                }
                place(&mut rots, v, list, ln, "rotation")?;
            }
            Some(other) => return Err(syntax(ln, format!("unknown record '{other}'"))),
            None => unreachable!(),
        }
    }
    let labels = densify(labels, "vertex")?;
    let edges = densify(edges, "edge")?;
    let crossings = densify(crosses, "crossing")?;
    let n = labels.len();
    if rots.len() > n {
        return Err(syntax(
            0,
            format!("rotation given for unknown vertex {}", rots.len() - 1),
        ));
    }
    rots.resize(n, None);
    let rotations = rots.into_iter().map(|r| r.unwrap_or_default()).collect();
    Ok(RawDrawing {
        labels,
        edges,
        crossings,
        rotations,
    })
}

/// Parses and fully validates a drawing.
pub fn parse(text: &str) -> Result<OnePlaneDrawing, DrawingError> {
    OnePlaneDrawing::new(parse_raw(text)?)
}

/// Canonical OPG text: header, vertices, edges, crossings, rotations, each in id order.
pub fn serialize(d: &OnePlaneDrawing) -> String {
    serialize_raw(d.raw())
}

pub fn serialize_raw(raw: &RawDrawing) -> String {
    let mut s = String::from("opg 1\n");
    for (v, l) in raw.labels.iter().enumerate() {
        match l {
            Some(l) => writeln!(s, "vertex {v} {l}").unwrap(),
            None => writeln!(s, "vertex {v}").unwrap(),
        }
    }
    for (e, [a, b]) in raw.edges.iter().enumerate() {
        writeln!(s, "edge {e} {a} {b}").unwrap();
    }
    for (c, cr) in raw.crossings.iter().enumerate() {
        writeln!(
            s,
            "cross {c} {} {} {}",
            cr.edges[0], cr.edges[1], cr.orientation
        )
        .unwrap();
    }
    for (v, rot) in raw.rotations.iter().enumerate() {
        if rot.is_empty() {
            continue;
        }
        write!(s, "rot {v}").unwrap();
        for e in rot {
            write!(s, " e{e}").unwrap();
        }
        s.push('\n');
    }
    s
}
