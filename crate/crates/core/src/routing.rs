//! Routings, vertex and edge loads, and forwarding indices.
//!
//! A routing fixes one elementary path for each of the `n(n-1)` ordered vertex
//! pairs. The load of a vertex is the number of paths that pass through it as
//! an inner vertex; the load of an edge is the number of paths traversing it in
//! either direction.

use std::collections::HashMap;

use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::exact::{frac, Rational};
use crate::graph::{content_lines, parse_label, GenericGraph, Indexing};
use crate::metrics::{all_pairs_distances, circulant_distances, distance_vector};

/// Routings up to this order are stored path by path; larger rotation
/// routings are only ever streamed.
pub const MATERIALIZE_LIMIT: usize = 512;

const NO_PATH: u32 = u32::MAX;

/// One path per ordered pair, stored in a flat vertex buffer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routing {
    n: usize,
    /// `(start, len)` into `verts` for pair index `x * n + y`.
    spans: Vec<(u32, u32)>,
    verts: Vec<u32>,
    minimal: bool,
    symmetric: bool,
}

impl Routing {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Vertex sequence of `R(x, y)`; empty when `x == y`.
    pub fn path(&self, x: usize, y: usize) -> &[u32] {
        let (start, len) = self.spans[x * self.n + y];
        if start == NO_PATH {
            return &[];
        }
        &self.verts[start as usize..(start + len) as usize]
    }

    /// Every path is a shortest path.
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// `R(y, x)` is the reverse of `R(x, y)` for every pair.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &[u32])> {
        let n = self.n;
        (0..n * n)
            .filter(move |i| i / n != i % n)
            .map(move |i| (i / n, i % n, self.path(i / n, i % n)))
    }

    pub fn load_profile(&self) -> LoadProfile {
        let mut acc = LoadAccumulator::new(self.n);
        for (_, _, p) in self.pairs() {
            acc.add_path(p.iter().map(|&v| v as usize));
        }
        acc.finish()
    }
}

/// Collects paths and validates them into a [`Routing`].
#[derive(Debug)]
pub struct RoutingBuilder {
    n: usize,
    spans: Vec<(u32, u32)>,
    verts: Vec<u32>,
}

impl RoutingBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            spans: vec![(NO_PATH, 0); n * n],
            verts: Vec::new(),
        }
    }

    /// Adds a path of at least two vertices, all `< n`.
    pub fn insert(&mut self, path: &[usize]) -> Result<()> {
        debug_assert!(path.len() >= 2 && path.iter().all(|&v| v < self.n));
        let (x, y) = (path[0], path[path.len() - 1]);
        if x == y {
            return Err(Error::NonElementary { x, y, vertex: x });
        }
        let slot = &mut self.spans[x * self.n + y];
        if slot.0 != NO_PATH {
            return Err(Error::DuplicatePair { x, y });
        }
        *slot = (self.verts.len() as u32, path.len() as u32);
        self.verts.extend(path.iter().map(|&v| v as u32));
        Ok(())
    }

    /// Checks adjacency and elementarity of every path, then coverage of all
    /// ordered pairs, and computes the minimal and symmetric flags.
    /// `distance` returns `None` for unreachable pairs.
    pub fn finish<A, D>(self, adjacent: A, distance: D) -> Result<Routing>
    where
        A: Fn(usize, usize) -> bool,
        D: Fn(usize, usize) -> Option<u32>,
    {
        let n = self.n;
        let mut stamp = vec![usize::MAX; n];
        let mut minimal = true;
        let mut missing = None;
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let idx = x * n + y;
                let (start, len) = self.spans[idx];
                if start == NO_PATH {
                    missing = missing.or(Some((x, y)));
                    continue;
                }
                let path = &self.verts[start as usize..(start + len) as usize];
                for (i, &v) in path.iter().enumerate() {
                    let v = v as usize;
                    if stamp[v] == idx {
                        return Err(Error::NonElementary { x, y, vertex: v });
                    }
                    stamp[v] = idx;
                    if i > 0 {
                        let u = path[i - 1] as usize;
                        if !adjacent(u, v) {
                            return Err(Error::InvalidEdge { x, y, u, v });
                        }
                    }
                }
                minimal &= distance(x, y) == Some(len - 1);
            }
        }
        if let Some((x, y)) = missing {
            return Err(Error::MissingPair { x, y });
        }
        let mut routing = Routing {
            n,
            spans: self.spans,
            verts: self.verts,
            minimal,
            symmetric: false,
        };
        routing.symmetric = (0..n).all(|x| {
            (x + 1..n).all(|y| {
                routing
                    .path(x, y)
                    .iter()
                    .eq(routing.path(y, x).iter().rev())
            })
        });
        Ok(routing)
    }
}

/// Reads a routing fixture: one whitespace-separated path per line, labels
/// numbered as in the companion graph fixture.
pub fn parse_routing_fixture(text: &str, g: &GenericGraph, indexing: Indexing) -> Result<Routing> {
    let n = g.order();
    let mut builder = RoutingBuilder::new(n);
    for (line_no, line) in content_lines(text) {
        let path = line
            .split_whitespace()
            .map(|t| {
                let v = indexing.to_internal(parse_label(t, line_no)?, line_no)?;
                if v >= n {
                    return Err(Error::Range {
                        line: line_no,
                        vertex: v,
                        n,
                    });
                }
                Ok(v)
            })
            .collect::<Result<Vec<usize>>>()?;
        if path.len() < 2 {
            return Err(Error::Parse {
                line: line_no,
                message: "a path needs at least two vertices".into(),
            });
        }
        builder
            .insert(&path)
            .map_err(|e| external_labels(e, indexing))?;
    }
    let dist = all_pairs_distances(g).ok();
    builder
        .finish(
            |u, v| g.has_edge(u, v),
            |x, y| dist.as_ref().map(|d| d.get(x, y)),
        )
        .map_err(|e| external_labels(e, indexing))
}

/// Rewrites vertex numbers in routing errors into fixture labels.
fn external_labels(err: Error, indexing: Indexing) -> Error {
    let l = |v: usize| indexing.to_external(v);
    match err {
        Error::MissingPair { x, y } => Error::MissingPair { x: l(x), y: l(y) },
        Error::DuplicatePair { x, y } => Error::DuplicatePair { x: l(x), y: l(y) },
        Error::InvalidEdge { x, y, u, v } => Error::InvalidEdge {
            x: l(x),
            y: l(y),
            u: l(u),
            v: l(v),
        },
        Error::NonElementary { x, y, vertex } => Error::NonElementary {
            x: l(x),
            y: l(y),
            vertex: l(vertex),
        },
        other => other,
    }
}

/// Sorted per-edge traversal counts, keyed by `(u, v)` with `u < v`.
/// Edges no path uses are absent and read as zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeLoads(Vec<((usize, usize), u64)>);

impl EdgeLoads {
    pub fn get(&self, u: usize, v: usize) -> u64 {
        let key = (u.min(v), u.max(v));
        self.0
            .binary_search_by(|(e, _)| e.cmp(&key))
            .map_or(0, |i| self.0[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|(_, c)| c).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadProfile {
    pub vertex_loads: Vec<u64>,
    pub edge_loads: EdgeLoads,
    pub max_vertex_load: u64,
    pub max_edge_load: u64,
}

impl LoadProfile {
    pub fn min_vertex_load(&self) -> u64 {
        self.vertex_loads.iter().copied().min().unwrap_or(0)
    }

    pub fn is_uniform(&self) -> bool {
        self.min_vertex_load() == self.max_vertex_load
    }
}

/// Free-function form of [`Routing::load_profile`].
pub fn load_profile(r: &Routing) -> LoadProfile {
    r.load_profile()
}

/// Dense edge counters up to this order, a hash map above it.
const DENSE_EDGE_LIMIT: usize = 2048;

struct LoadAccumulator {
    n: usize,
    vertex: Vec<u64>,
    dense: Vec<u64>,
    sparse: HashMap<(usize, usize), u64>,
}

impl LoadAccumulator {
    fn new(n: usize) -> Self {
        let dense = if n <= DENSE_EDGE_LIMIT {
            vec![0; n * n]
        } else {
            Vec::new()
        };
        Self {
            n,
            vertex: vec![0; n],
            dense,
            sparse: HashMap::new(),
        }
    }

    fn add_path<I: Iterator<Item = usize>>(&mut self, path: I) {
        let mut prev: Option<usize> = None;
        let mut pending_inner: Option<usize> = None;
        for v in path {
            if let Some(inner) = pending_inner.take() {
                self.vertex[inner] += 1;
            }
            if let Some(u) = prev {
                let key = (u.min(v), u.max(v));
                if self.dense.is_empty() {
                    *self.sparse.entry(key).or_insert(0) += 1;
                } else {
                    self.dense[key.0 * self.n + key.1] += 1;
                }
                pending_inner = Some(v);
            }
            prev = Some(v);
        }
    }

    fn finish(self) -> LoadProfile {
        let n = self.n;
        let mut edges: Vec<((usize, usize), u64)> = if self.dense.is_empty() {
            self.sparse.into_iter().collect()
        } else {
            self.dense
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| ((i / n, i % n), c))
                .collect()
        };
        edges.sort_unstable();
        let max_vertex_load = self.vertex.iter().copied().max().unwrap_or(0);
        let max_edge_load = edges.iter().map(|(_, c)| *c).max().unwrap_or(0);
        LoadProfile {
            vertex_loads: self.vertex,
            edge_loads: EdgeLoads(edges),
            max_vertex_load,
            max_edge_load,
        }
    }
}

/// Minimal routing of a circulant invariant under rotation.
///
/// A shortest path `0 -> v` is fixed for every `v` by BFS with lowest-parent
/// tie-breaking; `R(x, x + v)` is that path shifted by `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationRouting {
    spec: CirculantSpec,
    base: Vec<Vec<usize>>,
}

impl RotationRouting {
    pub fn new(spec: &CirculantSpec) -> Result<Self> {
        let n = spec.order();
        let dist = circulant_distances(spec)
            .into_iter()
            .collect::<Option<Vec<u32>>>()
            .ok_or(Error::Disconnected)?;
        let mask = spec.offset_mask();
        let diam = dist.iter().copied().max().unwrap_or(0) as usize;
        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); diam + 1];
        for (v, &d) in dist.iter().enumerate() {
            levels[d as usize].push(v);
        }
        // Parent of v: smallest neighbour one level closer to 0.
        let mut parent = vec![0usize; n];
        for v in 1..n {
            let d = dist[v] as usize;
            parent[v] = *levels[d - 1]
                .iter()
                .find(|&&u| mask[(v + n - u) % n])
                .expect("BFS level structure guarantees a parent");
        }
        let base = (0..n)
            .map(|v| {
                if v == 0 {
                    return Vec::new();
                }
                let mut path = vec![v];
                let mut cur = v;
                while cur != 0 {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                path
            })
            .collect();
        Ok(Self {
            spec: spec.clone(),
            base,
        })
    }

    /// The chosen shortest path from 0 to `v`.
    pub fn base_path(&self, v: usize) -> &[usize] {
        &self.base[v]
    }

    /// Path `R(x, y)`, i.e. the base path to `y - x` shifted by `x`.
    pub fn path(&self, x: usize, y: usize) -> Vec<usize> {
        let n = self.spec.order();
        self.base[(y + n - x) % n]
            .iter()
            .map(|&w| (w + x) % n)
            .collect()
    }

    /// Materializes and validates every path.
    pub fn to_routing(&self) -> Result<Routing> {
        let n = self.spec.order();
        let dv = distance_vector(&self.spec)?;
        let mut builder = RoutingBuilder::new(n);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    builder.insert(&self.path(x, y))?;
                }
            }
        }
        builder.finish(
            |u, v| self.spec.is_adjacent(u, v),
            |x, y| Some(dv.get((y + n - x) % n)),
        )
    }

    /// Loads computed pair by pair without storing the routing.
    pub fn load_profile(&self) -> LoadProfile {
        let n = self.spec.order();
        let mut acc = LoadAccumulator::new(n);
        for x in 0..n {
            for p in &self.base[1..] {
                acc.add_path(p.iter().map(|&w| (w + x) % n));
            }
        }
        acc.finish()
    }
}

/// Materialized rotation routing of a connected circulant.
pub fn build_rotation_routing(spec: &CirculantSpec) -> Result<Routing> {
    RotationRouting::new(spec)?.to_routing()
}

/// `xi = Tr(0) - (n - 1)` for a connected circulant.
pub fn vertex_forwarding_index(spec: &CirculantSpec) -> Result<u64> {
    let tr = distance_vector(spec)?.transmission();
    Ok(tr - (spec.order() as u64 - 1))
}

/// Bounds `2 rho / r <= pi <= n + rho - (2r - 1)` on the edge-forwarding index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeForwardingBounds {
    pub lower: Rational,
    pub upper: i64,
}

pub fn edge_forwarding_bounds(spec: &CirculantSpec) -> Result<EdgeForwardingBounds> {
    let rho = distance_vector(spec)?.transmission();
    let r = spec.degree() as u64;
    Ok(EdgeForwardingBounds {
        lower: frac(2 * rho, r),
        upper: spec.order() as i64 + rho as i64 - (2 * r as i64 - 1),
    })
}
