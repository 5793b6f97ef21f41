//! Combinatorial plane embeddings given as rotation systems.
//!
//! `rotation[v]` lists the neighbors of `v` in clockwise order. Faces are
//! traced with one fixed rule: arriving at `v` along the dart `u -> v`, the
//! walk leaves along `v -> w` where `w` follows `u` in the clockwise order
//! around `v`. Each dart lies on exactly one traced face.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneEmbedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    /// Boundary walk of each face as the sequence of dart tails.
    faces: Vec<Vec<usize>>,
    /// `dart_face[v][i]` is the face to the side of dart `v -> graph.neighbors(v)[i]`.
    dart_face: Vec<Vec<usize>>,
    outer: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceProfile {
    pub face: usize,
    pub degree: usize,
    /// Degrees in the graph of the boundary walk's vertices, ascending.
    pub vertex_degrees: Vec<usize>,
}

impl PlaneEmbedding {
    /// Trace the faces of a rotation system and validate it as a plane
    /// embedding of a connected graph. The outer face defaults to face 0.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = graph.n();
        if rotation.len() != n {
            return Err(Error::MalformedRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                n
            )));
        }
        if graph.m() == 0 {
            return Err(Error::Precondition(
                "embedding needs at least one edge".into(),
            ));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::MalformedRotation(format!(
                    "rotation at vertex {} is not a permutation of its neighbors",
                    v
                )));
            }
        }
        // position of each neighbor within the rotation of v
        let pos_in_rot: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .map(|u| rotation[v].iter().position(|w| w == u).expect("checked"))
                    .collect()
            })
            .collect();
        let nbr_index =
            |v: usize, u: usize| graph.neighbors(v).binary_search(&u).expect("adjacent");

        let mut dart_face = vec![Vec::new(); n];
        for v in 0..n {
            dart_face[v] = vec![usize::MAX; graph.degree(v)];
        }
        let mut faces = Vec::new();
        for &(a, b) in graph.edges() {
            for (s, t) in [(a, b), (b, a)] {
                if dart_face[s][nbr_index(s, t)] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut u, mut v) = (s, t);
                loop {
                    let slot = nbr_index(u, v);
                    if dart_face[u][slot] != usize::MAX {
                        break;
                    }
                    dart_face[u][slot] = id;
                    walk.push(u);
                    let rot = &rotation[v];
                    let at = pos_in_rot[v][nbr_index(v, u)];
                    let w = rot[(at + 1) % rot.len()];
                    u = v;
                    v = w;
                }
                faces.push(walk);
            }
        }
        let expected = 2 + graph.m() - n;
        if faces.len() != expected {
            return Err(Error::NotPlanar {
                faces: faces.len(),
                expected,
            });
        }
        Ok(PlaneEmbedding {
            graph,
            rotation,
            faces,
            dart_face,
            outer: 0,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Boundary walk of face `f`; cut edges are walked twice.
    pub fn face_walk(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    pub fn designate_outer(mut self, face: usize) -> Result<Self> {
        if face >= self.faces.len() {
            return Err(Error::InvalidFace(face));
        }
        self.outer = face;
        Ok(self)
    }

    /// First face whose boundary contains every listed vertex.
    pub fn face_containing(&self, vertices: &[usize]) -> Option<usize> {
        (0..self.faces.len()).find(|&f| vertices.iter().all(|v| self.faces[f].contains(v)))
    }

    /// Face on the side of the dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        let i = self.graph.neighbors(u).binary_search(&v).ok()?;
        Some(self.dart_face[u][i])
    }

    /// The faces on both sides of edge `uv` (equal for a cut edge).
    pub fn faces_of_edge(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        Some((self.face_of_dart(u, v)?, self.face_of_dart(v, u)?))
    }

    pub fn is_incident(&self, v: usize, f: usize) -> bool {
        self.faces[f].contains(&v)
    }

    /// Distinct vertices on the boundary of `f`, ascending.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        let mut vs = self.faces[f].clone();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn face_profiles(&self) -> Vec<FaceProfile> {
        (0..self.faces.len())
            .map(|f| {
                let mut vertex_degrees: Vec<usize> = self.faces[f]
                    .iter()
                    .map(|&v| self.graph.degree(v))
                    .collect();
                vertex_degrees.sort_unstable();
                FaceProfile {
                    face: f,
                    degree: self.faces[f].len(),
                    vertex_degrees,
                }
            })
            .collect()
    }

    /// True when `f` is a triangle whose vertex degrees are exactly `profile`.
    pub fn is_face_of_type(&self, f: usize, profile: [usize; 3]) -> bool {
        if self.faces[f].len() != 3 {
            return false;
        }
        let mut d: Vec<usize> = self.faces[f]
            .iter()
            .map(|&v| self.graph.degree(v))
            .collect();
        d.sort_unstable();
        let mut p = profile.to_vec();
        p.sort_unstable();
        d == p
    }

    /// Render in the rotation file format.
    pub fn to_rotation_text(&self) -> String {
        let mut s = String::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            let _ = write!(s, "{}:", v);
            for u in rot {
                let _ = write!(s, " {}", u);
            }
            s.push('\n');
        }
        s
    }
}

/// Parse a rotation file: one line `v: u1 u2 ... uk` per vertex giving the
/// clockwise neighbor order. Vertices that are not listed get an empty list.
pub fn parse_rotation(text: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut rotation = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| err("expected `v: u1 u2 ...`".into()))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| err(format!("bad vertex {:?}", head)))?;
        if v >= n {
            return Err(err(format!("vertex {} out of range for n = {}", v, n)));
        }
        if seen[v] {
            return Err(err(format!("vertex {} listed twice", v)));
        }
        seen[v] = true;
        for tok in tail.split_whitespace() {
            let u: usize = tok
                .parse()
                .map_err(|_| err(format!("bad neighbor {:?}", tok)))?;
            rotation[v].push(u);
        }
    }
    Ok(rotation)
}
