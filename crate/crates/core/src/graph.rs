//! Immutable simple undirected graphs with adjacency queries.
//!
//! Adjacency is stored as sorted neighbor lists plus, for graphs below a
//! size threshold, one bitset row per vertex for O(1) edge queries.

use crate::error::{Error, Result};
use std::io::{BufRead, Write};

pub type Vertex = usize;

/// Graphs up to this many vertices carry per-vertex bitset rows.
pub const DEFAULT_BITSET_THRESHOLD: usize = 4096;

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<Vertex>>,
    bits: Option<BitRows>,
    weights: Option<Vec<f64>>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
struct BitRows {
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitRows {
            words_per_row,
            words: vec![0u64; words_per_row * n],
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.words[u * self.words_per_row + v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.words[u * self.words_per_row + v / 64] & (1u64 << (v % 64)) != 0
    }
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::from_edge_list_with_threshold(n, edges, DEFAULT_BITSET_THRESHOLD)
    }

    pub fn from_edge_list_with_threshold(
        n: usize,
        edges: &[(Vertex, Vertex)],
        bitset_threshold: usize,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::EndpointOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::EndpointOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
            m += row.len();
        }
        m /= 2;
        let bits = if n <= bitset_threshold {
            let mut b = BitRows::new(n);
            for (u, row) in adj.iter().enumerate() {
                for &v in row {
                    b.set(u, v);
                }
            }
            Some(b)
        } else {
            None
        };
        Ok(Graph {
            n,
            m,
            adj,
            bits,
            weights: None,
            labels: None,
        })
    }

    /// Attach per-vertex weights. Weights must be finite and nonnegative.
    pub fn with_weights(mut self, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != self.n {
            return Err(Error::WeightCountMismatch {
                expected: self.n,
                got: weights.len(),
            });
        }
        for (v, &w) in weights.iter().enumerate() {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::BadWeight { vertex: v, weight: w });
            }
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u == v {
            return false;
        }
        match &self.bits {
            Some(b) => b.get(u, v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, row) in self.adj.iter().enumerate() {
            for &v in row {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_weights(&self) -> bool {
        self.weights.is_some()
    }

    /// Vertex weight; 1 when no weights are attached.
    #[inline]
    pub fn weight(&self, v: Vertex) -> f64 {
        match &self.weights {
            Some(w) => w[v],
            None => 1.0,
        }
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    pub fn set_weight<I: IntoIterator<Item = Vertex>>(&self, vs: I) -> f64 {
        vs.into_iter().map(|v| self.weight(v)).sum()
    }

    pub fn total_weight(&self) -> f64 {
        (0..self.n).map(|v| self.weight(v)).sum()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// True iff both graphs have the same vertex count and edge set.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    /// The complement graph: uv is an edge iff it is a non-edge here.
    /// Weights and labels carry over.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        let mut g = Graph::from_edge_list(self.n, &edges).expect("complement edges are valid");
        g.weights = self.weights.clone();
        g.labels = self.labels.clone();
        g
    }

    /// Proper 2-coloring if the graph is bipartite, `None` otherwise.
    pub fn bipartite_2coloring(&self) -> Option<TwoColoring> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(TwoColoring { color })
    }

    /// BFS layers from a source set: `layers[k]` holds the vertices at
    /// distance exactly k+1; vertices in other components are `unreached`.
    pub fn bfs_layers(&self, source: &[Vertex]) -> Result<BfsLayers> {
        if source.is_empty() {
            return Err(Error::EmptySource);
        }
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in source {
            if s >= self.n {
                return Err(Error::VertexOutOfRange { vertex: s, n: self.n });
            }
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        let mut max_d = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    max_d = max_d.max(dist[v]);
                    queue.push_back(v);
                }
            }
        }
        let mut layers = vec![Vec::new(); max_d];
        let mut unreached = Vec::new();
        for v in 0..self.n {
            match dist[v] {
                usize::MAX => unreached.push(v),
                0 => {}
                d => layers[d - 1].push(v),
            }
        }
        Ok(BfsLayers {
            layers,
            unreached,
            dist,
        })
    }

    /// A vertex of minimum degree; ties broken toward the smallest id.
    pub fn min_degree_vertex(&self) -> Result<Vertex> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for v in 1..self.n {
            if self.degree(v) < self.degree(best) {
                best = v;
            }
        }
        Ok(best)
    }

    /// Induced subgraph on `s` (deduplicated), relabeled densely, with the
    /// invertible id mapping. Weights and labels are restricted alongside.
    pub fn induced_subgraph(&self, s: &[Vertex]) -> Result<(Graph, IdMap)> {
        let mut keep: Vec<Vertex> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut to_sub = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            to_sub[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = to_sub[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let mut g = Graph::from_edge_list(keep.len(), &edges)?;
        if let Some(w) = &self.weights {
            g.weights = Some(keep.iter().map(|&v| w[v]).collect());
        }
        if let Some(l) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| l[v].clone()).collect());
        }
        Ok((
            g,
            IdMap {
                to_sub,
                to_orig: keep,
            },
        ))
    }
}

/// Dense relabeling produced by [`Graph::induced_subgraph`].
#[derive(Debug, Clone)]
pub struct IdMap {
    to_sub: Vec<usize>,
    to_orig: Vec<Vertex>,
}

impl IdMap {
    /// Subgraph id of an original vertex, if kept.
    pub fn to_sub(&self, orig: Vertex) -> Option<usize> {
        match self.to_sub.get(orig) {
            Some(&i) if i != usize::MAX => Some(i),
            _ => None,
        }
    }

    /// Original id of a subgraph vertex.
    #[inline]
    pub fn to_orig(&self, sub: usize) -> Vertex {
        self.to_orig[sub]
    }

    pub fn map_back(&self, subs: &[usize]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = subs.iter().map(|&i| self.to_orig[i]).collect();
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        self.to_orig.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_orig.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct BfsLayers {
    /// `layers[k]` = vertices at distance k+1 from the source set.
    pub layers: Vec<Vec<Vertex>>,
    /// Vertices not reachable from the source set.
    pub unreached: Vec<Vertex>,
    /// Distance per vertex; `usize::MAX` for unreached.
    pub dist: Vec<usize>,
}

/// A proper 2-coloring covering every vertex of the graph it was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring {
    color: Vec<u8>,
}

impl TwoColoring {
    pub fn new(color: Vec<u8>) -> Self {
        assert!(color.iter().all(|&c| c <= 1));
        TwoColoring { color }
    }

    #[inline]
    pub fn side(&self, v: Vertex) -> u8 {
        self.color[v]
    }

    pub fn len(&self) -> usize {
        self.color.len()
    }

    pub fn is_empty(&self) -> bool {
        self.color.is_empty()
    }

    /// Vertices of each color class.
    pub fn sides(&self) -> (Vec<Vertex>, Vec<Vertex>) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (v, &c) in self.color.iter().enumerate() {
            if c == 0 {
                a.push(v)
            } else {
                b.push(v)
            }
        }
        (a, b)
    }

    /// Check properness against a graph, returning an offending edge if any.
    pub fn check_proper(&self, g: &Graph) -> std::result::Result<(), (Vertex, Vertex)> {
        for (u, v) in g.edges() {
            if self.color[u] == self.color[v] {
                return Err((u, v));
            }
        }
        Ok(())
    }
}

/// Parse the DIMACS-like edge-list format:
/// `p edge <n> <m>`, `e <u> <v>` (1-based), optional `w <v> <weight>`,
/// comment lines starting with `c`.
pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut weights: Vec<(usize, f64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let bad = |message: String| Error::Parse {
            line: lineno,
            message,
        };
        match parts[0] {
            "p" => {
                if parts.len() < 4 || parts[1] != "edge" {
                    return Err(bad("expected `p edge <n> <m>`".into()));
                }
                let count: usize = parts[2]
                    .parse()
                    .map_err(|_| bad(format!("bad vertex count `{}`", parts[2])))?;
                n = Some(count);
            }
            "e" => {
                if parts.len() < 3 {
                    return Err(bad("expected `e <u> <v>`".into()));
                }
                let u: usize = parts[1]
                    .parse()
                    .map_err(|_| bad(format!("bad endpoint `{}`", parts[1])))?;
                let v: usize = parts[2]
                    .parse()
                    .map_err(|_| bad(format!("bad endpoint `{}`", parts[2])))?;
                if u == 0 || v == 0 {
                    return Err(bad("vertices are 1-based".into()));
                }
                edges.push((u - 1, v - 1));
            }
            "w" => {
                if parts.len() < 3 {
                    return Err(bad("expected `w <v> <weight>`".into()));
                }
                let v: usize = parts[1]
                    .parse()
                    .map_err(|_| bad(format!("bad vertex `{}`", parts[1])))?;
                let w: f64 = parts[2]
                    .parse()
                    .map_err(|_| bad(format!("bad weight `{}`", parts[2])))?;
                if v == 0 {
                    return Err(bad("vertices are 1-based".into()));
                }
                weights.push((v - 1, w));
            }
            other => {
                return Err(bad(format!("unknown line type `{other}`")));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing `p edge` header".into(),
    })?;
    let g = Graph::from_edge_list(n, &edges)?;
    if weights.is_empty() {
        Ok(g)
    } else {
        let mut w = vec![1.0; n];
        for (v, wt) in weights {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            w[v] = wt;
        }
        g.with_weights(w)
    }
}

pub fn write_dimacs<W: Write>(mut out: W, g: &Graph) -> Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    if g.has_weights() {
        for v in 0..g.n() {
            writeln!(out, "w {} {}", v + 1, g.weight(v))?;
        }
    }
    Ok(())
}

/// Convenience constructor for cycles, used throughout the tests.
pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).expect("cycle edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(g.m(), 0);
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::EndpointOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.complement().m(), 0);
    }

    #[test]
    fn complement_of_c5_is_two_regular_connected() {
        let c = cycle_graph(5).complement();
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert_eq!(c.bfs_layers(&[0]).unwrap().unreached.len(), 0);
    }

    #[test]
    fn coloring_c4_proper_c5_none() {
        assert!(cycle_graph(4).bipartite_2coloring().is_some());
        assert!(cycle_graph(5).bipartite_2coloring().is_none());
    }

    #[test]
    fn bfs_layers_pendant_on_c5() {
        // C5 plus one pendant on vertex 2
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.push((2, 5));
        let g = Graph::from_edge_list(6, &edges).unwrap();
        let layers = g.bfs_layers(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(layers.layers, vec![vec![5]]);
        assert!(layers.unreached.is_empty());

        let whole = cycle_graph(5);
        let l2 = whole.bfs_layers(&[0, 1, 2, 3, 4]).unwrap();
        assert!(l2.layers.is_empty());
        assert!(l2.unreached.is_empty());
    }

    #[test]
    fn bfs_empty_source_fails() {
        assert!(matches!(
            cycle_graph(4).bfs_layers(&[]),
            Err(Error::EmptySource)
        ));
    }

    #[test]
    fn min_degree_star_and_k4() {
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.min_degree_vertex().unwrap(), 1);
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(k4.min_degree_vertex().unwrap(), 0);
        assert!(Graph::from_edge_list(0, &[]).unwrap().min_degree_vertex().is_err());
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (empty, _) = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.n(), 0);
        let (full, map) = g.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert!(full.same_edges(&g));
        assert_eq!(map.to_orig(2), 2);
        let (sub, map) = g.induced_subgraph(&[1, 3]).unwrap();
        assert_eq!(sub.m(), 0);
        assert_eq!(map.map_back(&[0, 1]), vec![1, 3]);
        assert!(g.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)])
            .unwrap()
            .with_weights(vec![1.0, 2.5, 3.0, 1.0])
            .unwrap();
        let mut buf = Vec::new();
        write_dimacs(&mut buf, &g).unwrap();
        let h = read_dimacs(std::io::BufReader::new(&buf[..])).unwrap();
        assert!(g.same_edges(&h));
        assert_eq!(h.weight(1), 2.5);
    }

    #[test]
    fn dimacs_parse_error_carries_line() {
        let text = "p edge 3 1\ne 1 oops\n";
        match read_dimacs(std::io::BufReader::new(text.as_bytes())) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn weight_validation() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(g.clone().with_weights(vec![1.0]).is_err());
        assert!(g.clone().with_weights(vec![1.0, -2.0]).is_err());
        assert!(g.with_weights(vec![1.0, f64::NAN]).is_err());
    }
}
