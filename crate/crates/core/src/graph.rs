//! Simple undirected graphs with sorted adjacency lists, plus the plain-text
//! edge-list fixture format.
//!
//! Fixture layout: the first non-empty, non-comment line is `n` optionally
//! followed by the flag `one-indexed`; every later non-empty line not starting
//! with `#` is an edge `u v`. LF and CRLF line endings are both accepted.

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenericGraph {
    adjacency: Vec<Vec<usize>>,
}

impl GenericGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Self {
            adjacency: (0..n)
                .map(|v| (0..n).filter(|&u| u != v).collect())
                .collect(),
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops, out-of-range
    /// vertices and repeated edges; errors report the 1-based edge position.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.insert_edge(i + 1, u, v)?;
        }
        Ok(g)
    }

    /// Wraps per-vertex neighbour lists produced by a trusted constructor.
    /// Lists must already be sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        debug_assert!(adjacency
            .iter()
            .enumerate()
            .all(|(v, ns)| ns.windows(2).all(|w| w[0] < w[1]) && !ns.contains(&v)));
        Self { adjacency }
    }

    fn insert_edge(&mut self, line: usize, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::Range { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => return Err(Error::DuplicateEdge { line, u, v }),
            Err(pos) => self.adjacency[u].insert(pos, v),
        }
        let pos = self.adjacency[v].binary_search(&u).unwrap_err();
        self.adjacency[v].insert(pos, u);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, ns)| {
            let start = ns.partition_point(|&v| v <= u);
            ns[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Common degree when the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency
            .iter()
            .all(|ns| ns.len() == first)
            .then_some(first)
    }

    /// The complement graph: distinct `u`, `v` adjacent iff not adjacent here.
    pub fn complement(&self) -> Self {
        let n = self.order();
        let adjacency = (0..n)
            .map(|v| {
                let mut present = self.adjacency[v].iter().peekable();
                (0..n)
                    .filter(|&u| {
                        if present.peek() == Some(&&u) {
                            present.next();
                            false
                        } else {
                            u != v
                        }
                    })
                    .collect()
            })
            .collect();
        Self { adjacency }
    }
}

/// Whether fixture files number vertices from 0 or from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Indexing {
    #[default]
    Zero,
    One,
}

impl Indexing {
    /// Converts an on-disk label into an internal vertex index.
    pub fn to_internal(self, label: usize, line: usize) -> Result<usize> {
        match self {
            Indexing::Zero => Ok(label),
            Indexing::One => label.checked_sub(1).ok_or_else(|| Error::Parse {
                line,
                message: "vertex label 0 in a one-indexed file".into(),
            }),
        }
    }

    pub fn to_external(self, vertex: usize) -> usize {
        match self {
            Indexing::Zero => vertex,
            Indexing::One => vertex + 1,
        }
    }
}

/// A parsed graph fixture together with the indexing its file used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFixture {
    pub graph: GenericGraph,
    pub indexing: Indexing,
}

/// Yields `(line_number, content)` for lines that are neither blank nor comments.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n').enumerate().filter_map(|(i, raw)| {
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
    })
}

pub(crate) fn parse_label(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex label, found {token:?}"),
    })
}

impl GraphFixture {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line".into(),
        })?;
        let mut tokens = header.split_whitespace();
        let n: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse {
                line: header_line,
                message: format!("expected vertex count, found {header:?}"),
            })?;
        let indexing = match tokens.next() {
            None => Indexing::Zero,
            Some("one-indexed") => Indexing::One,
            Some("zero-indexed") => Indexing::Zero,
            Some(flag) => {
                return Err(Error::Parse {
                    line: header_line,
                    message: format!("unknown header flag {flag:?}"),
                })
            }
        };
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: header_line,
                message: format!("unexpected token {extra:?} in header"),
            });
        }

        let mut graph = GenericGraph::empty(n);
        for (line_no, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let [a, b] = tokens[..] else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected \"u v\", found {line:?}"),
                });
            };
            let u = indexing.to_internal(parse_label(a, line_no)?, line_no)?;
            let v = indexing.to_internal(parse_label(b, line_no)?, line_no)?;
            graph.insert_edge(line_no, u, v)?;
        }
        Ok(Self { graph, indexing })
    }
}

/// Parses an edge-list fixture, discarding the indexing flag.
pub fn parse_graph_fixture(text: &str) -> Result<GenericGraph> {
    GraphFixture::parse(text).map(|f| f.graph)
}
