//! A validated problem instance: an embedded graph, terminal sets on the
//! outer face, and the clockwise order in which a bounding curve passes
//! through them.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{check_euler, Dart, Embedding, FaceId, Faces, VertexId};

/// Embedding plus terminals, after validation. Holds the traced faces and
/// the infinite region of every edge-bearing component.
#[derive(Clone, Debug)]
pub struct Scene {
    pub emb: Embedding,
    pub faces: Faces,
    pub s: BTreeSet<VertexId>,
    pub t: BTreeSet<VertexId>,
    pub boundary_order: Vec<VertexId>,
    pub outer_faces: BTreeSet<FaceId>,
}

/// One connected component of a scene, with its induced boundary order
/// and, for every boundary vertex, the chosen occurrence on the outer
/// walk (the angle the bounding curve passes through).
#[derive(Clone, Debug)]
pub struct Component {
    pub vertices: BTreeSet<VertexId>,
    pub s: BTreeSet<VertexId>,
    pub t: BTreeSet<VertexId>,
    pub boundary: Vec<VertexId>,
    pub outer: Option<FaceId>,
    pub occ: BTreeMap<VertexId, usize>,
}

impl Scene {
    pub fn build(
        emb: Embedding,
        s: BTreeSet<VertexId>,
        t: BTreeSet<VertexId>,
        boundary_order: Vec<VertexId>,
        outer_witness: &[Dart],
    ) -> Result<Scene> {
        emb.check_simple()?;
        let faces = emb.trace_faces();
        check_euler(&emb, &faces)?;

        for v in s.iter().chain(t.iter()) {
            if !emb.is_alive(*v) {
                return Err(Error::UnknownVertex(*v));
            }
        }
        let terminals: BTreeSet<VertexId> = s.union(&t).copied().collect();
        let in_order: BTreeSet<VertexId> = boundary_order.iter().copied().collect();
        if in_order.len() != boundary_order.len() {
            return Err(Error::InvalidInstance(
                "boundary order repeats a vertex".into(),
            ));
        }
        if in_order != terminals {
            return Err(Error::InvalidInstance(
                "boundary order must list exactly the vertices of S and T".into(),
            ));
        }

        // isolated vertices are only representable on the bounding curve
        for v in emb.vertices() {
            if emb.degree(v) == 0 && !terminals.contains(&v) {
                return Err(Error::IsolatedInteriorVertex(v));
            }
        }

        // one outer-face witness per edge-bearing component
        let comps = emb.components();
        let mut comp_of: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of.insert(v, i);
            }
        }
        let mut outer_of_comp: Vec<Option<FaceId>> = vec![None; comps.len()];
        for &d in outer_witness {
            if !emb.has_edge(d.edge) {
                return Err(Error::UnknownEdge(d.edge));
            }
            let f = faces.face_of(d);
            let c = comp_of[&emb.tail(d)];
            if let Some(prev) = outer_of_comp[c] {
                if prev != f {
                    return Err(Error::InvalidInstance(format!(
                        "two outer witnesses disagree for the component of {}",
                        emb.tail(d)
                    )));
                }
            }
            outer_of_comp[c] = Some(f);
        }
        for (i, c) in comps.iter().enumerate() {
            let has_edge = c.iter().any(|&v| emb.degree(v) > 0);
            if has_edge && outer_of_comp[i].is_none() {
                return Err(Error::InvalidInstance(format!(
                    "no outer-face witness for the component of {}",
                    c[0]
                )));
            }
        }

        for &v in &terminals {
            if emb.degree(v) == 0 {
                continue;
            }
            let f = outer_of_comp[comp_of[&v]].unwrap();
            if !faces.darts(f).iter().any(|&d| emb.tail(d) == v) {
                return Err(Error::TerminalNotOnOuterFace(v));
            }
        }

        let outer_faces: BTreeSet<FaceId> = outer_of_comp.iter().flatten().copied().collect();
        let scene = Scene {
            emb,
            faces,
            s,
            t,
            boundary_order,
            outer_faces,
        };
        // realizability of the boundary order is checked by split()
        scene.split()?;
        Ok(scene)
    }

    /// Split into connected components, choosing for each boundary vertex
    /// the outer-walk occurrence the bounding curve uses. Fails when no
    /// bounding curve can pass through the terminals in the given order.
    pub fn split(&self) -> Result<Vec<Component>> {
        let comps = self.emb.components();
        let mut comp_of: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of.insert(v, i);
            }
        }
        let mut out = Vec::new();
        let mut positions: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
        for (pos, v) in self.boundary_order.iter().enumerate() {
            positions[comp_of[v]].push(pos);
        }

        // components pinned to the curve must not interleave
        for i in 0..comps.len() {
            for j in (i + 1)..comps.len() {
                if interleaves(&positions[i], &positions[j], self.boundary_order.len()) {
                    return Err(Error::BoundaryOrderUnrealizable(format!(
                        "components of {} and {} interleave on the curve",
                        comps[i][0], comps[j][0]
                    )));
                }
            }
        }

        for (i, comp) in comps.iter().enumerate() {
            let vertices: BTreeSet<VertexId> = comp.iter().copied().collect();
            let boundary: Vec<VertexId> = self
                .boundary_order
                .iter()
                .filter(|v| vertices.contains(v))
                .copied()
                .collect();
            let s: BTreeSet<VertexId> = self.s.intersection(&vertices).copied().collect();
            let t: BTreeSet<VertexId> = self.t.intersection(&vertices).copied().collect();
            let has_edge = comp.iter().any(|&v| self.emb.degree(v) > 0);
            if !has_edge {
                out.push(Component {
                    vertices,
                    s,
                    t,
                    boundary,
                    outer: None,
                    occ: BTreeMap::new(),
                });
                continue;
            }
            let outer = self
                .outer_faces
                .iter()
                .copied()
                .find(|&f| {
                    let d = self.faces.darts(f)[0];
                    comp_of[&self.emb.tail(d)] == i
                })
                .expect("validated component has an outer face");
            let occ = match_boundary(&self.emb, &self.faces, outer, &boundary)?;
            out.push(Component {
                vertices,
                s,
                t,
                boundary,
                outer: Some(outer),
                occ,
            });
        }
        Ok(out)
    }
}

/// Do two cyclic position sets interleave? True iff neither is contained
/// in a single gap of the other.
fn interleaves(a: &[usize], b: &[usize], _n: usize) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    // b fits in the gap of a that follows some element of a
    let fits = |a: &[usize], b: &[usize]| -> bool {
        if a.len() <= 1 {
            return true;
        }
        // for each consecutive pair of a (cyclically), check b inside
        for w in 0..a.len() {
            let lo = a[w];
            let hi = a[(w + 1) % a.len()];
            let inside = |x: usize| {
                if lo < hi {
                    x > lo && x < hi
                } else {
                    x > lo || x < hi
                }
            };
            if b.iter().all(|&x| inside(x)) {
                return true;
            }
        }
        false
    };
    !fits(a, b)
}

/// Choose one occurrence per boundary vertex on the outer walk so the
/// occurrences appear in the boundary order. Greedy over the first
/// vertex's occurrences; the first consistent assignment wins.
fn match_boundary(
    emb: &Embedding,
    faces: &Faces,
    outer: FaceId,
    boundary: &[VertexId],
) -> Result<BTreeMap<VertexId, usize>> {
    let walk = faces.darts(outer);
    let len = walk.len();
    let mut pos_of: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (p, &d) in walk.iter().enumerate() {
        pos_of.entry(emb.tail(d)).or_default().push(p);
    }
    if boundary.is_empty() {
        return Ok(BTreeMap::new());
    }
    for v in boundary {
        if !pos_of.contains_key(v) {
            return Err(Error::TerminalNotOnOuterFace(*v));
        }
    }
    if boundary.len() == 1 {
        return Ok(BTreeMap::from([(boundary[0], pos_of[&boundary[0]][0])]));
    }
    'starts: for &start in &pos_of[&boundary[0]] {
        let mut chosen = vec![start];
        let mut cur = start; // absolute position, may exceed len
        for v in &boundary[1..] {
            let occs = &pos_of[v];
            // smallest occurrence strictly after cur (mod len), within one turn
            let cur_mod = cur % len;
            let next = occs
                .iter()
                .copied()
                .filter(|&p| p > cur_mod)
                .min()
                .map(|p| cur - cur_mod + p)
                .or_else(|| occs.first().map(|&p| cur - cur_mod + len + p));
            match next {
                Some(np) if np < start + len => {
                    chosen.push(np % len);
                    cur = np;
                }
                _ => continue 'starts,
            }
        }
        return Ok(boundary
            .iter()
            .copied()
            .zip(chosen.into_iter())
            .collect());
    }
    Err(Error::BoundaryOrderUnrealizable(format!(
        "no bounding curve visits {:?} in this order",
        boundary
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    /// Two triangles sharing a cut vertex; terminals on both lobes.
    fn bowtie() -> Embedding {
        // vertices: 0,1 (left lobe), 2 = cut, 3,4 (right lobe)
        let edges = vec![
            (VertexId(0), VertexId(1)),
            (VertexId(1), VertexId(2)),
            (VertexId(2), VertexId(0)),
            (VertexId(2), VertexId(3)),
            (VertexId(3), VertexId(4)),
            (VertexId(4), VertexId(2)),
        ];
        let rot = vec![
            vec![EdgeId(0), EdgeId(2)],
            vec![EdgeId(1), EdgeId(0)],
            vec![EdgeId(2), EdgeId(1), EdgeId(3), EdgeId(5)],
            vec![EdgeId(4), EdgeId(3)],
            vec![EdgeId(5), EdgeId(4)],
        ];
        Embedding::from_rotations(5, edges, rot).unwrap()
    }

    #[test]
    fn bowtie_scene_builds() {
        let emb = bowtie();
        let faces = emb.trace_faces();
        assert_eq!(faces.count(), 3);
        // outer face contains all five vertices
        let outer = faces
            .ids()
            .max_by_key(|&f| faces.face_vertices(&emb, f).len())
            .unwrap();
        let d = faces.darts(outer)[0];
        let scene = Scene::build(
            emb,
            BTreeSet::from([VertexId(0)]),
            BTreeSet::from([VertexId(3)]),
            vec![VertexId(0), VertexId(3)],
            &[d],
        )
        .unwrap();
        let comps = scene.split().unwrap();
        assert_eq!(comps.len(), 1);
        // the cut vertex appears twice on the boundary walk
        let outer_walk = scene.faces.darts(outer);
        let cut_occurrences = outer_walk
            .iter()
            .filter(|&&d| scene.emb.tail(d) == VertexId(2))
            .count();
        assert_eq!(cut_occurrences, 2);
    }

    #[test]
    fn interior_terminal_rejected() {
        // wheel with hub 5 cannot have the hub as a terminal
        let n = 5u32;
        let mut edges = Vec::new();
        let mut rot: Vec<Vec<EdgeId>> = vec![Vec::new(); 6];
        for i in 0..n {
            edges.push((VertexId(i), VertexId((i + 1) % n)));
        }
        for i in 0..n {
            edges.push((VertexId(i), VertexId(5)));
        }
        for i in 0..n as usize {
            rot[i] = vec![
                EdgeId(i as u32),
                EdgeId(n + i as u32),
                EdgeId((i as u32 + n - 1) % n),
            ];
        }
        rot[5] = (0..n).rev().map(|i| EdgeId(n + i)).collect();
        let emb = Embedding::from_rotations(6, edges, rot).unwrap();
        let faces = emb.trace_faces();
        let outer = faces
            .ids()
            .find(|&f| !faces.face_vertices(&emb, f).contains(&VertexId(5)))
            .unwrap();
        let d = faces.darts(outer)[0];
        let err = Scene::build(
            emb,
            BTreeSet::from([VertexId(5)]),
            BTreeSet::from([VertexId(0)]),
            vec![VertexId(0), VertexId(5)],
            &[d],
        )
        .unwrap_err();
        assert!(matches!(err, Error::TerminalNotOnOuterFace(_)));
    }

    #[test]
    fn unrealizable_order_rejected() {
        // path 0-1-2; walk order around is 0,1,2,1: order (0,2) realizable,
        // but two disjoint edges with interleaved terminals are not
        let edges = vec![(VertexId(0), VertexId(1)), (VertexId(2), VertexId(3))];
        let rot = vec![
            vec![EdgeId(0)],
            vec![EdgeId(0)],
            vec![EdgeId(1)],
            vec![EdgeId(1)],
        ];
        let emb = Embedding::from_rotations(4, edges, rot).unwrap();
        let faces = emb.trace_faces();
        let d0 = faces.darts(faces.face_of(Dart::forward(EdgeId(0))))[0];
        let d1 = faces.darts(faces.face_of(Dart::forward(EdgeId(1))))[0];
        let err = Scene::build(
            emb,
            BTreeSet::from([VertexId(0), VertexId(2)]),
            BTreeSet::from([VertexId(1), VertexId(3)]),
            // interleaved: 0, 2, 1, 3
            vec![VertexId(0), VertexId(2), VertexId(1), VertexId(3)],
            &[d0, d1],
        )
        .unwrap_err();
        assert!(matches!(err, Error::BoundaryOrderUnrealizable(_)));
    }
}
