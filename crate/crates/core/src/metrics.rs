//! Distance structure: BFS, circulant distance vectors and matrices,
//! transmissions, diameter, connectivity and Property *.

use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::exact::{frac, int, Rational};
use crate::graph::GenericGraph;

const UNSEEN: u32 = u32::MAX;

/// Breadth-first search writing hop counts into `dist` (`UNSEEN` where unreachable).
pub(crate) fn bfs_into(g: &GenericGraph, source: usize, dist: &mut [u32], queue: &mut Vec<usize>) {
    dist.fill(UNSEEN);
    queue.clear();
    dist[source] = 0;
    queue.push(source);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNSEEN {
                dist[w] = next;
                queue.push(w);
            }
        }
    }
}

/// Single-source shortest-path hop counts; `None` marks unreachable vertices.
pub fn bfs_distances(g: &GenericGraph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![UNSEEN; g.order()];
    bfs_into(g, source, &mut dist, &mut Vec::with_capacity(g.order()));
    dist.into_iter()
        .map(|d| (d != UNSEEN).then_some(d))
        .collect()
}

pub fn is_connected(g: &GenericGraph) -> bool {
    g.order() == 0 || bfs_distances(g, 0).iter().all(Option::is_some)
}

/// Dense `n x n` matrix of hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn max(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Distances between all ordered pairs, one BFS per source.
pub fn all_pairs_distances(g: &GenericGraph) -> Result<DistanceMatrix> {
    let n = g.order();
    let mut entries = vec![0; n * n];
    let mut queue = Vec::with_capacity(n);
    for (s, row) in entries.chunks_mut(n.max(1)).enumerate().take(n) {
        bfs_into(g, s, row, &mut queue);
        if row.contains(&UNSEEN) {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, entries })
}

/// Distances from vertex 0 of a connected graph: `d[0] = 0`, all others positive.
///
/// For a circulant this row determines the whole distance matrix by rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceVector {
    d: Vec<u32>,
}

impl DistanceVector {
    pub fn new(d: Vec<u32>) -> Result<Self> {
        match d.split_first() {
            None => Err(Error::InvalidDistanceVector("empty".into())),
            Some((&first, _)) if first != 0 => Err(Error::InvalidDistanceVector(format!(
                "entry 0 is {first}, expected 0"
            ))),
            Some((_, rest)) => match rest.iter().position(|&x| x == 0 || x == UNSEEN) {
                Some(p) => Err(Error::InvalidDistanceVector(format!(
                    "entry {} is {}",
                    p + 1,
                    rest[p]
                ))),
                None => Ok(Self { d }),
            },
        }
    }

    pub fn order(&self) -> usize {
        self.d.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.d
    }

    pub fn get(&self, v: usize) -> u32 {
        self.d[v]
    }

    /// Sum of the entries (the transmission of vertex 0).
    pub fn transmission(&self) -> u64 {
        self.d.iter().map(|&x| u64::from(x)).sum()
    }

    /// Sum of reciprocals of the nonzero entries, exact.
    pub fn reciprocal_transmission(&self) -> Rational {
        let counts = self.level_counts();
        counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c > 0)
            .map(|(dist, &c)| frac(c as u64, dist as u64))
            .fold(int(0), |acc, x| acc + x)
    }

    /// `counts[d]` is the number of vertices at distance `d`.
    pub fn level_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.diameter() as usize + 1];
        for &x in &self.d {
            counts[x as usize] += 1;
        }
        counts
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// `d[v] == d[n - v]` for `1 <= v < n`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.d.len();
        (1..n).all(|v| self.d[v] == self.d[n - v])
    }

    /// Circulant expansion: entry `(i, j)` is `d[(j - i) mod n]`.
    pub fn to_matrix(&self) -> DistanceMatrix {
        let n = self.d.len();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            entries.extend((0..n).map(|j| self.d[(j + n - i) % n]));
        }
        DistanceMatrix { n, entries }
    }
}

/// Free-function form of [`DistanceVector::to_matrix`].
pub fn distance_matrix(dv: &DistanceVector) -> DistanceMatrix {
    dv.to_matrix()
}

/// BFS from vertex 0 of a circulant without materializing the graph.
///
/// Each frontier vertex either walks its jump offsets or scans the remaining
/// unvisited vertices, whichever is shorter, so dense circulants (the
/// complements of sparse ones) cost `O(n)` per level instead of `O(n^2)`.
pub fn circulant_distances(spec: &CirculantSpec) -> Vec<Option<u32>> {
    let n = spec.order();
    let mask = spec.offset_mask();
    let offsets = spec.offsets();
    let mut dist = vec![UNSEEN; n];
    // `unvisited` holds the unseen vertices; `slot[v]` is v's index there.
    let mut unvisited: Vec<usize> = (1..n).collect();
    let mut slot: Vec<usize> = (0..n).map(|v| v.wrapping_sub(1)).collect();
    let mut queue = Vec::with_capacity(n);
    dist[0] = 0;
    queue.push(0);
    let mut head = 0;
    while head < queue.len() && !unvisited.is_empty() {
        let u = queue[head];
        head += 1;
        let next = dist[u] + 1;
        if offsets.len() <= unvisited.len() {
            for &off in &offsets {
                let w = (u + off) % n;
                if dist[w] == UNSEEN {
                    dist[w] = next;
                    queue.push(w);
                    let i = slot[w];
                    unvisited.swap_remove(i);
                    if i < unvisited.len() {
                        slot[unvisited[i]] = i;
                    }
                }
            }
        } else {
            let mut i = 0;
            while i < unvisited.len() {
                let w = unvisited[i];
                if mask[(w + n - u) % n] {
                    dist[w] = next;
                    queue.push(w);
                    unvisited.swap_remove(i);
                    if i < unvisited.len() {
                        slot[unvisited[i]] = i;
                    }
                } else {
                    i += 1;
                }
            }
        }
    }
    dist.into_iter()
        .map(|d| (d != UNSEEN).then_some(d))
        .collect()
}

/// First row of the distance matrix of a connected circulant.
pub fn distance_vector(spec: &CirculantSpec) -> Result<DistanceVector> {
    let d = circulant_distances(spec)
        .into_iter()
        .collect::<Option<Vec<u32>>>()
        .ok_or(Error::Disconnected)?;
    DistanceVector::new(d)
}

/// Degree, transmission and diameter data for a connected graph.
///
/// `transmission` and `reciprocal_transmission` belong to vertex 0; the
/// `transmission_regular` flag says whether every vertex shares them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricsSummary {
    pub order: usize,
    pub regularity: Option<usize>,
    pub edge_count: usize,
    pub transmission: u64,
    pub reciprocal_transmission: Rational,
    pub transmission_regular: bool,
    pub diameter: u32,
    pub connected: bool,
}

/// Per-vertex transmissions `Tr(v)` of a connected graph.
pub fn transmissions(dm: &DistanceMatrix) -> Vec<u64> {
    dm.rows()
        .map(|row| row.iter().map(|&x| u64::from(x)).sum())
        .collect()
}

/// Per-vertex reciprocal transmissions `rs(v)` of a connected graph.
pub fn reciprocal_transmissions(dm: &DistanceMatrix) -> Vec<Rational> {
    let diam = dm.max() as usize;
    dm.rows()
        .map(|row| {
            let mut counts = vec![0u64; diam + 1];
            row.iter().for_each(|&x| counts[x as usize] += 1);
            counts
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, &c)| c > 0)
                .map(|(dist, &c)| frac(c, dist as u64))
                .fold(int(0), |a, b| a + b)
        })
        .collect()
}

pub fn metrics_summary(g: &GenericGraph) -> Result<MetricsSummary> {
    let dm = all_pairs_distances(g)?;
    let tr = transmissions(&dm);
    let rs = reciprocal_transmissions(&dm);
    let transmission_regular = tr.windows(2).all(|w| w[0] == w[1]);
    Ok(MetricsSummary {
        order: g.order(),
        regularity: g.regularity(),
        edge_count: g.edge_count(),
        transmission: tr.first().copied().unwrap_or(0),
        reciprocal_transmission: rs.first().cloned().unwrap_or_else(|| int(0)),
        transmission_regular,
        diameter: dm.max(),
        connected: true,
    })
}

/// Summary of a connected circulant from its distance vector alone.
pub fn circulant_summary(spec: &CirculantSpec) -> Result<MetricsSummary> {
    let dv = distance_vector(spec)?;
    Ok(MetricsSummary {
        order: spec.order(),
        regularity: Some(spec.degree()),
        edge_count: spec.edge_count(),
        transmission: dv.transmission(),
        reciprocal_transmission: dv.reciprocal_transmission(),
        transmission_regular: true,
        diameter: dv.diameter(),
        connected: true,
    })
}

pub fn diameter(g: &GenericGraph) -> Result<u32> {
    Ok(all_pairs_distances(g)?.max())
}

/// For every edge `{u, v}` some third vertex is adjacent to neither endpoint.
pub fn has_property_star(g: &GenericGraph) -> bool {
    property_star_witness(g).is_none()
}

/// First edge (lexicographic) violating Property *, if any.
fn property_star_witness(g: &GenericGraph) -> Option<(usize, usize)> {
    let n = g.order();
    g.edges().find(|&(u, v)| {
        // u and v cover themselves and their neighbourhoods.
        let mut covered = vec![false; n];
        covered[u] = true;
        covered[v] = true;
        for &w in g.neighbors(u).iter().chain(g.neighbors(v)) {
            covered[w] = true;
        }
        covered.iter().all(|&c| c)
    })
}

/// Property * for a circulant, checking only the edges at vertex 0
/// (rotations carry them onto every other edge).
pub fn circulant_has_property_star(spec: &CirculantSpec) -> bool {
    let n = spec.order();
    let mask = spec.offset_mask();
    spec.jumps()
        .iter()
        .all(|&j| (0..n).any(|w| w != 0 && w != j && !mask[w] && !mask[(w + n - j) % n]))
}

/// Complement distances forced by Property *, together with the
/// consequences that the complement is connected with diameter 2 and Wiener
/// index `C(n,2) + m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPrediction {
    pub distances: DistanceMatrix,
    pub diameter: u32,
    pub wiener: u64,
}

/// Predicts complement distances: 2 across edges of `g`, 1 across non-edges.
pub fn complement_distance_by_star(g: &GenericGraph) -> Result<StarPrediction> {
    if let Some((u, v)) = property_star_witness(g) {
        return Err(Error::PropertyStarViolated { u, v });
    }
    let n = g.order();
    let mut entries = vec![0; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                entries[u * n + v] = if g.has_edge(u, v) { 2 } else { 1 };
            }
        }
    }
    let m = g.edge_count() as u64;
    let pairs = (n * n.saturating_sub(1) / 2) as u64;
    Ok(StarPrediction {
        distances: DistanceMatrix { n, entries },
        diameter: if m > 0 { 2 } else { u32::from(n > 1) },
        wiener: pairs + m,
    })
}
