//! Rotation-system planar embeddings.
//!
//! A drawing is stored as a combinatorial map: per vertex, the cyclic
//! counterclockwise order of outgoing darts. Faces are orbits of the
//! face-next permutation; the face lies to the left of each of its darts.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}
impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}
impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

/// A directed edge side. `rev == false` runs from the stored first
/// endpoint to the second.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart {
    pub edge: EdgeId,
    pub rev: bool,
}

impl Dart {
    pub fn forward(edge: EdgeId) -> Self {
        Dart { edge, rev: false }
    }
    pub fn backward(edge: EdgeId) -> Self {
        Dart { edge, rev: true }
    }
    pub fn reversed(self) -> Self {
        Dart {
            edge: self.edge,
            rev: !self.rev,
        }
    }
    pub fn index(self) -> usize {
        self.edge.0 as usize * 2 + self.rev as usize
    }
    pub fn from_index(i: usize) -> Self {
        Dart {
            edge: EdgeId((i / 2) as u32),
            rev: i % 2 == 1,
        }
    }
}

pub const INFINITE: u32 = u32::MAX;

/// Multigraph with a rotation system. Vertex and edge ids are stable
/// under deletion (slots are tombstoned), which keeps certificates and
/// contraction maps readable against the original instance.
#[derive(Clone, Debug)]
pub struct Embedding {
    edges: Vec<Option<(VertexId, VertexId)>>,
    rotation: Vec<Vec<Dart>>,
    alive: Vec<bool>,
}

impl Embedding {
    pub fn new(n: usize) -> Self {
        Embedding {
            edges: Vec::new(),
            rotation: vec![Vec::new(); n],
            alive: vec![true; n],
        }
    }

    /// Build from per-vertex rotations given as edge-id cycles. Rejects
    /// loops; parallel edges are allowed here (internal callers) and
    /// rejected separately by `check_simple`.
    pub fn from_rotations(
        n: usize,
        edges: Vec<(VertexId, VertexId)>,
        rotations: Vec<Vec<EdgeId>>,
    ) -> Result<Self> {
        if rotations.len() != n {
            return Err(Error::InvalidInstance(format!(
                "expected {} rotations, got {}",
                n,
                rotations.len()
            )));
        }
        for &(u, v) in &edges {
            if u.0 as usize >= n || v.0 as usize >= n {
                return Err(Error::UnknownVertex(if u.0 as usize >= n { u } else { v }));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
        }
        let mut emb = Embedding {
            edges: edges.iter().map(|&e| Some(e)).collect(),
            rotation: vec![Vec::new(); n],
            alive: vec![true; n],
        };
        let mut seen = vec![[false; 2]; edges.len()];
        for (vi, rot) in rotations.into_iter().enumerate() {
            let v = VertexId(vi as u32);
            for e in rot {
                let &(a, b) = emb
                    .edges
                    .get(e.0 as usize)
                    .and_then(|o| o.as_ref())
                    .ok_or(Error::UnknownEdge(e))?;
                let dart = if a == v {
                    Dart::forward(e)
                } else if b == v {
                    Dart::backward(e)
                } else {
                    return Err(Error::InvalidInstance(format!(
                        "rotation of {} lists non-incident edge {}",
                        v, e
                    )));
                };
                if seen[e.0 as usize][dart.rev as usize] {
                    return Err(Error::InvalidInstance(format!(
                        "edge {} listed twice in the rotation of {}",
                        e, v
                    )));
                }
                seen[e.0 as usize][dart.rev as usize] = true;
                emb.rotation[vi].push(dart);
            }
        }
        for (ei, s) in seen.iter().enumerate() {
            if !s[0] || !s[1] {
                return Err(Error::InvalidInstance(format!(
                    "edge e{} missing from a rotation",
                    ei
                )));
            }
        }
        Ok(emb)
    }

    /// Append an edge at the end of both rotations (generator helper;
    /// callers arrange insertion order so that it is the drawing order).
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        let e = EdgeId(self.edges.len() as u32);
        self.edges.push(Some((u, v)));
        self.rotation[u.0 as usize].push(Dart::forward(e));
        self.rotation[v.0 as usize].push(Dart::backward(e));
        e
    }

    pub fn vertex_slots(&self) -> usize {
        self.rotation.len()
    }
    pub fn edge_slots(&self) -> usize {
        self.edges.len()
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        self.alive.get(v.0 as usize).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn live_edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, o)| o.map(|(u, v)| (EdgeId(i as u32), u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().filter(|o| o.is_some()).count()
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.edges
            .get(e.0 as usize)
            .and_then(|o| *o)
            .ok_or(Error::UnknownEdge(e))
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.get(e.0 as usize).map_or(false, |o| o.is_some())
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        let (u, v) = self.edges[d.edge.0 as usize].expect("dead edge");
        if d.rev {
            v
        } else {
            u
        }
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.tail(d.reversed())
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotation[v.0 as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v.0 as usize].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation[v.0 as usize].iter().map(|&d| self.head(d))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.rotation[u.0 as usize]
            .iter()
            .find(|&&d| self.head(d) == v)
            .map(|d| d.edge)
    }

    /// No loops, no parallel edges among live edges.
    pub fn check_simple(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (_, u, v) in self.live_edges() {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
        }
        Ok(())
    }

    fn dart_positions(&self) -> Vec<u32> {
        let mut pos = vec![u32::MAX; self.edges.len() * 2];
        for rot in &self.rotation {
            for (i, d) in rot.iter().enumerate() {
                pos[d.index()] = i as u32;
            }
        }
        pos
    }

    /// The dart following `d` on its face: at the head of `d`, take the
    /// rotation predecessor of the reversed dart.
    fn face_next(&self, d: Dart, pos: &[u32]) -> Dart {
        let h = self.head(d);
        let rot = &self.rotation[h.0 as usize];
        let p = pos[d.reversed().index()] as usize;
        rot[(p + rot.len() - 1) % rot.len()]
    }

    pub fn trace_faces(&self) -> Faces {
        let pos = self.dart_positions();
        let mut dart_face = vec![u32::MAX; self.edges.len() * 2];
        let mut faces = Vec::new();
        for rot in &self.rotation {
            for &d0 in rot {
                if dart_face[d0.index()] != u32::MAX {
                    continue;
                }
                let id = faces.len() as u32;
                let mut cycle = Vec::new();
                let mut d = d0;
                loop {
                    dart_face[d.index()] = id;
                    cycle.push(d);
                    d = self.face_next(d, &pos);
                    if d == d0 {
                        break;
                    }
                }
                faces.push(cycle);
            }
        }
        Faces {
            faces,
            dart_face,
        }
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![u32::MAX; self.rotation.len()];
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for v in self.vertices() {
            if comp[v.0 as usize] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            let mut members = vec![v];
            comp[v.0 as usize] = id;
            let mut queue = VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if comp[w.0 as usize] == u32::MAX {
                        comp[w.0 as usize] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subdrawing on `keep`; ids are preserved, everything else
    /// is tombstoned. Returns the deleted edge ids as well.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> (Embedding, Vec<EdgeId>) {
        let mut emb = self.clone();
        let mut dropped = Vec::new();
        for (i, slot) in emb.edges.iter_mut().enumerate() {
            if let Some((u, v)) = *slot {
                if !keep.contains(&u) || !keep.contains(&v) {
                    *slot = None;
                    dropped.push(EdgeId(i as u32));
                }
            }
        }
        for (vi, rot) in emb.rotation.iter_mut().enumerate() {
            if keep.contains(&VertexId(vi as u32)) {
                rot.retain(|d| emb.edges[d.edge.0 as usize].is_some());
            } else {
                rot.clear();
            }
        }
        for (vi, a) in emb.alive.iter_mut().enumerate() {
            *a = *a && keep.contains(&VertexId(vi as u32));
        }
        (emb, dropped)
    }

    /// Multi-source BFS; `cap` truncates the layering. Returns per-vertex
    /// distance (INFINITE when unreached) and BFS parent.
    pub fn bfs(&self, sources: &[VertexId], cap: Option<u32>) -> BfsResult {
        let n = self.rotation.len();
        let mut dist = vec![INFINITE; n];
        let mut parent = vec![None; n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if self.is_alive(s) && dist[s.0 as usize] == INFINITE {
                dist[s.0 as usize] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u.0 as usize];
            if let Some(c) = cap {
                if du >= c {
                    continue;
                }
            }
            for w in self.neighbors(u) {
                if dist[w.0 as usize] == INFINITE {
                    dist[w.0 as usize] = du + 1;
                    parent[w.0 as usize] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        BfsResult { dist, parent }
    }

    /// Exact distance between two vertex sets (spec: 0 iff they meet).
    pub fn distance_sets(&self, xs: &[VertexId], ys: &[VertexId]) -> Result<u32> {
        if xs.is_empty() || ys.is_empty() {
            return Err(Error::EmptySet);
        }
        let r = self.bfs(xs, None);
        Ok(ys
            .iter()
            .filter(|v| self.is_alive(**v))
            .map(|v| r.dist[v.0 as usize])
            .min()
            .unwrap_or(INFINITE))
    }

    /// A shortest path from `xs` to `ys`, as a vertex sequence.
    pub fn shortest_path_between(&self, xs: &[VertexId], ys: &[VertexId]) -> Option<Vec<VertexId>> {
        let r = self.bfs(xs, None);
        let best = ys
            .iter()
            .filter(|v| self.is_alive(**v) && r.dist[v.0 as usize] != INFINITE)
            .min_by_key(|v| (r.dist[v.0 as usize], v.0))?;
        let mut path = vec![*best];
        let mut cur = *best;
        while let Some(p) = r.parent[cur.0 as usize] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }
}

pub struct BfsResult {
    pub dist: Vec<u32>,
    pub parent: Vec<Option<VertexId>>,
}

impl BfsResult {
    pub fn dist_of(&self, v: VertexId) -> u32 {
        self.dist[v.0 as usize]
    }
}

#[derive(Clone, Debug)]
pub struct Faces {
    pub faces: Vec<Vec<Dart>>,
    dart_face: Vec<u32>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_of(&self, d: Dart) -> FaceId {
        FaceId(self.dart_face[d.index()])
    }

    pub fn darts(&self, f: FaceId) -> &[Dart] {
        &self.faces[f.0 as usize]
    }

    pub fn face_vertices(&self, emb: &Embedding, f: FaceId) -> BTreeSet<VertexId> {
        self.faces[f.0 as usize]
            .iter()
            .map(|&d| emb.tail(d))
            .collect()
    }

    pub fn ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.faces.len() as u32).map(FaceId)
    }
}

/// The closed walk tracing the infinite region of one connected drawing.
/// Every edge incident with the outer face appears once or twice.
pub fn boundary_walk(emb: &Embedding, faces: &Faces, outer: FaceId) -> Vec<Dart> {
    faces.faces[outer.0 as usize].clone()
}

/// Euler check per connected component: V - E + F = 2, where F counts the
/// component's own face orbits. Isolated vertices pass trivially.
pub fn check_euler(emb: &Embedding, faces: &Faces) -> Result<()> {
    let comps = emb.components();
    let mut comp_of = vec![u32::MAX; emb.vertex_slots()];
    for (i, c) in comps.iter().enumerate() {
        for v in c {
            comp_of[v.0 as usize] = i as u32;
        }
    }
    let mut e_count = vec![0i64; comps.len()];
    for (_, u, _) in emb.live_edges() {
        e_count[comp_of[u.0 as usize] as usize] += 1;
    }
    let mut f_seen = vec![BTreeSet::new(); comps.len()];
    for f in faces.ids() {
        let d = faces.darts(f)[0];
        let c = comp_of[emb.tail(d).0 as usize] as usize;
        f_seen[c].insert(f);
    }
    for (i, c) in comps.iter().enumerate() {
        if e_count[i] == 0 {
            continue;
        }
        let v = c.len() as i64;
        let f = f_seen[i].len() as i64;
        if v - e_count[i] + f != 2 {
            return Err(Error::EulerViolation(format!(
                "component of {}: V={} E={} F={}",
                c[0], v, e_count[i], f
            )));
        }
    }
    Ok(())
}

/// Pre-image of one contracted vertex: the original vertices and the
/// contracted edges that connect them.
#[derive(Clone, Debug)]
pub struct Preimage {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug)]
pub struct ContractionMap {
    pub graph: Embedding,
    /// representative of the blob each original vertex was merged into
    pub image: Vec<VertexId>,
    pub eta: BTreeMap<VertexId, Preimage>,
    pub outer: Option<FaceId>,
    pub deleted_edges: Vec<EdgeId>,
}

impl ContractionMap {
    pub fn image_of(&self, v: VertexId) -> VertexId {
        self.image[v.0 as usize]
    }

    pub fn lift_sets(&self, s: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
        s.iter().map(|&v| self.image_of(v)).collect()
    }
}

struct FaceMerge {
    parent: Vec<u32>,
}

impl FaceMerge {
    fn new(n: usize) -> Self {
        FaceMerge {
            parent: (0..n as u32).collect(),
        }
    }
    fn find(&mut self, x: u32) -> u32 {
        if self.parent[x as usize] != x {
            let r = self.find(self.parent[x as usize]);
            self.parent[x as usize] = r;
            r
        } else {
            x
        }
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Contract the edge set `F` in the drawing. Loops that appear are
/// deleted; in each parallel class the edge with the smallest original id
/// survives. `outer` tracks the infinite region through the contraction.
pub fn contract(
    emb: &Embedding,
    faces: &Faces,
    outer: Option<FaceId>,
    f_set: &BTreeSet<EdgeId>,
) -> Result<ContractionMap> {
    for &e in f_set {
        if !emb.has_edge(e) {
            return Err(Error::UnknownEdge(e));
        }
    }
    let mut g = emb.clone();
    let n = g.vertex_slots();
    let mut rep: Vec<u32> = (0..n as u32).collect();
    fn find(rep: &mut Vec<u32>, x: u32) -> u32 {
        if rep[x as usize] != x {
            let r = find(rep, rep[x as usize]);
            rep[x as usize] = r;
            r
        } else {
            x
        }
    }
    let mut merged = FaceMerge::new(faces.count());
    let mut deleted = Vec::new();

    let mut delete_edge = |g: &mut Embedding, merged: &mut FaceMerge, e: EdgeId| {
        let f1 = faces.face_of(Dart::forward(e));
        let f2 = faces.face_of(Dart::backward(e));
        merged.union(f1.0, f2.0);
        let (u, v) = g.edges[e.0 as usize].unwrap();
        g.rotation[u.0 as usize].retain(|d| d.edge != e);
        if v != u {
            g.rotation[v.0 as usize].retain(|d| d.edge != e);
        }
        g.edges[e.0 as usize] = None;
    };

    // Contract one edge at a time, splicing the rotation of the absorbed
    // vertex into the survivor at the contracted edge's slot.
    for &e in f_set {
        let (ou, ov) = g.edges[e.0 as usize].unwrap();
        let (a, b) = (find(&mut rep, ou.0), find(&mut rep, ov.0));
        if a == b {
            // the edge closed a contracted cycle; it is now a loop
            deleted.push(e);
            delete_edge(&mut g, &mut merged, e);
            continue;
        }
        // merge the higher id into the lower so representatives are stable
        let (keep, gone) = (a.min(b), a.max(b));
        let rot_gone = std::mem::take(&mut g.rotation[gone as usize]);
        let pos_gone = rot_gone.iter().position(|d| d.edge == e).unwrap();
        let rot_keep = &mut g.rotation[keep as usize];
        let pos_keep = rot_keep.iter().position(|d| d.edge == e).unwrap();
        let mut spliced = Vec::with_capacity(rot_keep.len() + rot_gone.len() - 2);
        spliced.extend_from_slice(&rot_keep[..pos_keep]);
        for i in 1..rot_gone.len() {
            spliced.push(rot_gone[(pos_gone + i) % rot_gone.len()]);
        }
        spliced.extend_from_slice(&rot_keep[pos_keep + 1..]);
        g.rotation[keep as usize] = spliced;
        rep[gone as usize] = keep;
        g.alive[gone as usize] = false;
        g.edges[e.0 as usize] = None;
        // endpoints of surviving edges are resolved through `rep` below
    }

    // Rewrite edge endpoints to representatives, dropping loops.
    let mut loops = Vec::new();
    for i in 0..g.edges.len() {
        if let Some((u, v)) = g.edges[i] {
            let (ru, rv) = (find(&mut rep, u.0), find(&mut rep, v.0));
            if ru == rv {
                loops.push(EdgeId(i as u32));
            } else {
                g.edges[i] = Some((VertexId(ru), VertexId(rv)));
            }
        }
    }
    for e in loops {
        deleted.push(e);
        delete_edge(&mut g, &mut merged, e);
    }

    // Parallel classes: keep the smallest original edge id.
    let mut classes: BTreeMap<(u32, u32), EdgeId> = BTreeMap::new();
    let mut to_delete = Vec::new();
    for (e, u, v) in g.live_edges() {
        let key = (u.0.min(v.0), u.0.max(v.0));
        match classes.get(&key) {
            None => {
                classes.insert(key, e);
            }
            Some(&first) => {
                // map iteration is in id order, so `first` is the keeper
                debug_assert!(first < e);
                to_delete.push(e);
            }
        }
    }
    for e in to_delete {
        deleted.push(e);
        delete_edge(&mut g, &mut merged, e);
    }

    // Note: darts inside spliced rotations still reference original
    // endpoint ids through their edges, which we just rewrote, so the
    // rotations are consistent.

    let image: Vec<VertexId> = (0..n as u32).map(|v| VertexId(find(&mut rep, v))).collect();
    let mut eta: BTreeMap<VertexId, Preimage> = BTreeMap::new();
    for v in emb.vertices() {
        let r = image[v.0 as usize];
        eta.entry(r)
            .or_insert_with(|| Preimage {
                vertices: Vec::new(),
                edges: Vec::new(),
            })
            .vertices
            .push(v);
    }
    for &e in f_set {
        let (u, _) = emb.endpoints(e)?;
        let r = image[u.0 as usize];
        eta.get_mut(&r).unwrap().edges.push(e);
    }

    // Locate the infinite region in the contracted drawing: it is the
    // new face whose darts merged from the old outer face's class.
    let new_outer = outer.map(|of| {
        let target = merged.find(of.0);
        let new_faces = g.trace_faces();
        let mut found = None;
        for nf in new_faces.ids() {
            let d = new_faces.darts(nf)[0];
            if merged.find(faces.face_of(d).0) == target {
                found = Some(nf);
                break;
            }
        }
        found.expect("outer face lost in contraction")
    });

    Ok(ContractionMap {
        graph: g,
        image,
        eta,
        outer: new_outer,
        deleted_edges: deleted,
    })
}

/// Vertex depth: BFS layers in the vertex-region incidence graph, seeded
/// at the vertices incident with the infinite region.
pub fn depth(emb: &Embedding, faces: &Faces, outer: &BTreeSet<FaceId>) -> Vec<u32> {
    let n = emb.vertex_slots();
    let mut vdepth = vec![INFINITE; n];
    let mut fseen = vec![false; faces.count()];
    let mut queue: VecDeque<VertexId> = VecDeque::new();
    for &f in outer {
        fseen[f.0 as usize] = true;
        for &d in faces.darts(f) {
            let v = emb.tail(d);
            if vdepth[v.0 as usize] == INFINITE {
                vdepth[v.0 as usize] = 0;
                queue.push_back(v);
            }
        }
    }
    // isolated live vertices sit in the infinite region
    for v in emb.vertices() {
        if emb.degree(v) == 0 && vdepth[v.0 as usize] == INFINITE {
            vdepth[v.0 as usize] = 0;
        }
    }
    let mut vertex_faces: Vec<Vec<u32>> = vec![Vec::new(); n];
    for f in faces.ids() {
        for &d in faces.darts(f) {
            vertex_faces[emb.tail(d).0 as usize].push(f.0);
        }
    }
    while let Some(v) = queue.pop_front() {
        let dv = vdepth[v.0 as usize];
        for &f in &vertex_faces[v.0 as usize] {
            if fseen[f as usize] {
                continue;
            }
            fseen[f as usize] = true;
            for &d in faces.darts(FaceId(f)) {
                let w = emb.tail(d);
                if vdepth[w.0 as usize] == INFINITE {
                    vdepth[w.0 as usize] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    vdepth
}

pub struct Pruned {
    pub emb: Embedding,
    /// surviving components, each with its outer-face id in `faces`
    pub faces: Faces,
    pub comp_outer: Vec<(Vec<VertexId>, Option<FaceId>)>,
}

/// Delete all vertices whose depth exceeds `bound` (in half-units:
/// a vertex stays iff 2*depth <= bound2). Recomputes, per surviving
/// component, which traced face is the infinite region.
pub fn prune(emb: &Embedding, faces: &Faces, outer: &BTreeSet<FaceId>, bound2: u64) -> Pruned {
    let d = depth(emb, faces, outer);
    let keep: BTreeSet<VertexId> = emb
        .vertices()
        .filter(|v| {
            let dv = d[v.0 as usize];
            dv != INFINITE && 2 * dv as u64 <= bound2
        })
        .collect();
    let (new_emb, dropped) = emb.induced(&keep);
    let mut merged = FaceMerge::new(faces.count());
    for e in dropped {
        let f1 = faces.face_of(Dart::forward(e));
        let f2 = faces.face_of(Dart::backward(e));
        merged.union(f1.0, f2.0);
    }
    let outer_classes: BTreeSet<u32> = outer.iter().map(|f| merged.find(f.0)).collect();
    let new_faces = new_emb.trace_faces();
    let comps = new_emb.components();
    let mut comp_outer = Vec::new();
    for comp in comps {
        let mut found = None;
        'scan: for &v in &comp {
            for &dd in new_emb.rotation(v) {
                let nf = new_faces.face_of(dd);
                let old = faces.face_of(dd);
                if outer_classes.contains(&merged.find(old.0)) {
                    found = Some(nf);
                    break 'scan;
                }
            }
        }
        comp_outer.push((comp, found));
    }
    Pruned {
        emb: new_emb,
        faces: new_faces,
        comp_outer,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Embedding {
        // 1-2-3 drawn counterclockwise; rotations as in a straight-line drawing
        Embedding::from_rotations(
            3,
            vec![
                (VertexId(0), VertexId(1)),
                (VertexId(1), VertexId(2)),
                (VertexId(2), VertexId(0)),
            ],
            vec![
                vec![EdgeId(0), EdgeId(2)],
                vec![EdgeId(1), EdgeId(0)],
                vec![EdgeId(2), EdgeId(1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let emb = triangle();
        let faces = emb.trace_faces();
        assert_eq!(faces.count(), 2);
        check_euler(&emb, &faces).unwrap();
    }

    #[test]
    fn single_edge_one_face() {
        let emb = Embedding::from_rotations(
            2,
            vec![(VertexId(0), VertexId(1))],
            vec![vec![EdgeId(0)], vec![EdgeId(0)]],
        )
        .unwrap();
        let faces = emb.trace_faces();
        assert_eq!(faces.count(), 1);
        check_euler(&emb, &faces).unwrap();
    }

    #[test]
    fn flipped_rotation_fails_euler() {
        // one rotation reversed: the orbit structure is a torus embedding
        let emb = Embedding::from_rotations(
            4,
            vec![
                (VertexId(0), VertexId(1)),
                (VertexId(1), VertexId(2)),
                (VertexId(2), VertexId(0)),
                (VertexId(0), VertexId(3)),
                (VertexId(1), VertexId(3)),
                (VertexId(2), VertexId(3)),
            ],
            vec![
                vec![EdgeId(0), EdgeId(3), EdgeId(2)],
                vec![EdgeId(1), EdgeId(4), EdgeId(0)],
                vec![EdgeId(2), EdgeId(5), EdgeId(1)],
                // correct order would be 3,4,5
                vec![EdgeId(3), EdgeId(5), EdgeId(4)],
            ],
        )
        .unwrap();
        let faces = emb.trace_faces();
        assert!(check_euler(&emb, &faces).is_err());
    }

    #[test]
    fn k4_has_four_triangular_faces() {
        let emb = Embedding::from_rotations(
            4,
            vec![
                (VertexId(0), VertexId(1)),
                (VertexId(1), VertexId(2)),
                (VertexId(2), VertexId(0)),
                (VertexId(0), VertexId(3)),
                (VertexId(1), VertexId(3)),
                (VertexId(2), VertexId(3)),
            ],
            vec![
                vec![EdgeId(0), EdgeId(3), EdgeId(2)],
                vec![EdgeId(1), EdgeId(4), EdgeId(0)],
                vec![EdgeId(2), EdgeId(5), EdgeId(1)],
                vec![EdgeId(4), EdgeId(3), EdgeId(5)],
            ],
        )
        .unwrap();
        let faces = emb.trace_faces();
        assert_eq!(faces.count(), 4);
        for f in faces.ids() {
            assert_eq!(faces.darts(f).len(), 3);
        }
        check_euler(&emb, &faces).unwrap();
    }

    #[test]
    fn path_boundary_walk_doubles_edges() {
        let emb = Embedding::from_rotations(
            3,
            vec![(VertexId(0), VertexId(1)), (VertexId(1), VertexId(2))],
            vec![vec![EdgeId(0)], vec![EdgeId(0), EdgeId(1)], vec![EdgeId(1)]],
        )
        .unwrap();
        let faces = emb.trace_faces();
        assert_eq!(faces.count(), 1);
        let walk = boundary_walk(&emb, &faces, FaceId(0));
        assert_eq!(walk.len(), 4); // each edge twice
    }

    #[test]
    fn distances() {
        let mut emb = Embedding::new(6);
        for i in 0..5u32 {
            emb.add_edge(VertexId(i), VertexId(i + 1));
        }
        assert_eq!(
            emb.distance_sets(&[VertexId(0)], &[VertexId(5)]).unwrap(),
            5
        );
        assert_eq!(
            emb.distance_sets(&[VertexId(2)], &[VertexId(2)]).unwrap(),
            0
        );
        let mut two = Embedding::new(4);
        two.add_edge(VertexId(0), VertexId(1));
        two.add_edge(VertexId(2), VertexId(3));
        assert_eq!(
            two.distance_sets(&[VertexId(0)], &[VertexId(3)]).unwrap(),
            INFINITE
        );
        assert!(two.distance_sets(&[], &[VertexId(0)]).is_err());
    }

    #[test]
    fn contract_triangle_edge_gives_single_edge() {
        let emb = triangle();
        let faces = emb.trace_faces();
        let f = BTreeSet::from([EdgeId(0)]);
        let cm = contract(&emb, &faces, Some(FaceId(0)), &f).unwrap();
        assert_eq!(cm.graph.vertex_count(), 2);
        assert_eq!(cm.graph.edge_count(), 1);
        cm.graph.check_simple().unwrap();
        let nf = cm.graph.trace_faces();
        check_euler(&cm.graph, &nf).unwrap();
    }

    #[test]
    fn contract_empty_set_is_identity() {
        let emb = triangle();
        let faces = emb.trace_faces();
        let cm = contract(&emb, &faces, Some(FaceId(0)), &BTreeSet::new()).unwrap();
        assert_eq!(cm.graph.vertex_count(), 3);
        assert_eq!(cm.graph.edge_count(), 3);
        assert!(cm.eta.values().all(|p| p.vertices.len() == 1));
    }

    #[test]
    fn contract_square_opposite_edges() {
        // 4-cycle 0-1-2-3; contract edges 01 and 23
        let emb = Embedding::from_rotations(
            4,
            vec![
                (VertexId(0), VertexId(1)),
                (VertexId(1), VertexId(2)),
                (VertexId(2), VertexId(3)),
                (VertexId(3), VertexId(0)),
            ],
            vec![
                vec![EdgeId(0), EdgeId(3)],
                vec![EdgeId(1), EdgeId(0)],
                vec![EdgeId(2), EdgeId(1)],
                vec![EdgeId(3), EdgeId(2)],
            ],
        )
        .unwrap();
        let faces = emb.trace_faces();
        assert_eq!(faces.count(), 2);
        let f = BTreeSet::from([EdgeId(0), EdgeId(2)]);
        let cm = contract(&emb, &faces, Some(FaceId(0)), &f).unwrap();
        assert_eq!(cm.graph.vertex_count(), 2);
        assert_eq!(cm.graph.edge_count(), 1);
        let two_vertex_blobs = cm
            .eta
            .values()
            .filter(|p| p.vertices.len() == 2 && p.edges.len() == 1)
            .count();
        assert_eq!(two_vertex_blobs, 2);
    }

    #[test]
    fn contraction_is_distance_monotone() {
        // small grid, contract a random-ish set, compare sampled distances
        let mut emb = Embedding::new(9);
        let id = |r: u32, c: u32| VertexId(r * 3 + c);
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                if c + 1 < 3 {
                    edges.push(emb.add_edge(id(r, c), id(r, c + 1)));
                }
                if r + 1 < 3 {
                    edges.push(emb.add_edge(id(r, c), id(r + 1, c)));
                }
            }
        }
        let faces = emb.trace_faces();
        let fset = BTreeSet::from([edges[0], edges[5], edges[9]]);
        let cm = contract(&emb, &faces, None, &fset).unwrap();
        for u in 0..9u32 {
            for v in 0..9u32 {
                let du = emb
                    .distance_sets(&[VertexId(u)], &[VertexId(v)])
                    .unwrap();
                let (iu, iv) = (cm.image_of(VertexId(u)), cm.image_of(VertexId(v)));
                let dc = cm.graph.distance_sets(&[iu], &[iv]).unwrap();
                assert!(dc <= du);
            }
        }
    }

    #[test]
    fn depth_on_wheel() {
        // wheel: rim 0..4, hub 5
        let n = 5u32;
        let mut edges = Vec::new();
        let mut rot: Vec<Vec<EdgeId>> = vec![Vec::new(); 6];
        for i in 0..n {
            edges.push((VertexId(i), VertexId((i + 1) % n)));
        }
        for i in 0..n {
            edges.push((VertexId(i), VertexId(5)));
        }
        // rim vertex i: [to next ccw? keep consistent: next-rim, spoke, prev-rim]
        for i in 0..n as usize {
            rot[i] = vec![
                EdgeId(i as u32),
                EdgeId(n + i as u32),
                EdgeId(((i as u32 + n - 1) % n)),
            ];
        }
        rot[5] = (0..n).rev().map(|i| EdgeId(n + i)).collect();
        let emb = Embedding::from_rotations(6, edges, rot).unwrap();
        let faces = emb.trace_faces();
        check_euler(&emb, &faces).unwrap();
        // outer face: the one with 5 darts not touching the hub
        let outer = faces
            .ids()
            .find(|&f| !faces.face_vertices(&emb, f).contains(&VertexId(5)))
            .unwrap();
        let d = depth(&emb, &faces, &BTreeSet::from([outer]));
        for i in 0..5 {
            assert_eq!(d[i], 0);
        }
        assert_eq!(d[5], 1);
    }
}
