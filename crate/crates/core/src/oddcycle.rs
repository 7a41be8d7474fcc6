//! Shortest odd cycle (odd girth witness) via BFS on the bipartite double
//! cover from every start vertex.

use crate::graph::{Graph, Vertex};
use std::collections::VecDeque;

/// A cyclically ordered odd cycle. Produced as shortest, it is also
/// chordless: a chord would close a strictly shorter odd cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    vertices: Vec<Vertex>,
}

impl OddCycle {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        OddCycle { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Cycle vertex at 1-based position j (cycle indexing v_1..v_g).
    pub fn vertex_at(&self, j: usize) -> Vertex {
        self.vertices[j - 1]
    }
}

/// True iff `c` is an odd (>= 3) sequence of distinct vertices whose
/// cyclically consecutive pairs are all edges of `g`.
pub fn assert_valid_cycle(g: &Graph, c: &OddCycle) -> bool {
    let k = c.len();
    if k < 3 || k.is_multiple_of(2) {
        return false;
    }
    let vs = c.vertices();
    let mut seen = std::collections::HashSet::new();
    for &v in vs {
        if v >= g.n() || !seen.insert(v) {
            return false;
        }
    }
    (0..k).all(|i| g.has_edge(vs[i], vs[(i + 1) % k]))
}

/// True iff no chord joins two non-consecutive cycle vertices.
pub fn is_chordless(g: &Graph, c: &OddCycle) -> bool {
    let k = c.len();
    let vs = c.vertices();
    for i in 0..k {
        for j in (i + 2)..k {
            if i == 0 && j == k - 1 {
                continue; // the closing edge
            }
            if g.has_edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}

/// Shortest odd cycle, or `None` iff the graph is bipartite.
///
/// For every start vertex v, BFS on the double cover (v, parity) measures
/// the shortest odd closed walk through v; the global minimum odd closed
/// walk is a simple cycle, extracted from the parent chain and reduced.
pub fn shortest_odd_cycle(g: &Graph) -> Option<OddCycle> {
    let n = g.n();
    let mut best: Option<(usize, Vertex)> = None;
    for start in 0..n {
        if let Some(len) = odd_walk_length_from_start(g, start, best.map(|(l, _)| l)) {
            if best.is_none_or(|(l, _)| len < l) {
                best = Some((len, start));
            }
        }
    }
    let (len, start) = best?;
    let walk = odd_walk_from_start(g, start).expect("walk must exist for the chosen start");
    debug_assert_eq!(walk.len(), len + 1);
    let cycle = reduce_closed_walk(&walk);
    debug_assert_eq!(cycle.len(), len, "minimum odd closed walk is simple");
    let cycle = OddCycle::new(cycle);
    debug_assert!(assert_valid_cycle(g, &cycle));
    debug_assert!(is_chordless(g, &cycle));
    Some(cycle)
}

/// BFS on the double cover from (start, 0); length of the shortest odd
/// closed walk through `start`, early-cut when it cannot beat `cap`.
fn odd_walk_length_from_start(g: &Graph, start: Vertex, cap: Option<usize>) -> Option<usize> {
    let n = g.n();
    let mut dist = vec![usize::MAX; 2 * n];
    dist[2 * start] = 0;
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((u, p)) = queue.pop_front() {
        let du = dist[2 * u + p];
        if let Some(c) = cap {
            if du + 1 >= c {
                continue;
            }
        }
        for &v in g.neighbors(u) {
            let q = 1 - p;
            if dist[2 * v + q] == usize::MAX {
                dist[2 * v + q] = du + 1;
                queue.push_back((v, q));
            }
        }
    }
    match dist[2 * start + 1] {
        usize::MAX => None,
        d => Some(d),
    }
}

/// Re-run the BFS keeping parents and return the closed walk
/// start = w_0, w_1, ..., w_d = start of odd length d.
fn odd_walk_from_start(g: &Graph, start: Vertex) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut dist = vec![usize::MAX; 2 * n];
    let mut parent = vec![usize::MAX; 2 * n];
    dist[2 * start] = 0;
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((u, p)) = queue.pop_front() {
        for &v in g.neighbors(u) {
            let q = 1 - p;
            if dist[2 * v + q] == usize::MAX {
                dist[2 * v + q] = dist[2 * u + p] + 1;
                parent[2 * v + q] = 2 * u + p;
                queue.push_back((v, q));
            }
        }
    }
    if dist[2 * start + 1] == usize::MAX {
        return None;
    }
    let mut walk = Vec::with_capacity(dist[2 * start + 1] + 1);
    let mut cur = 2 * start + 1;
    loop {
        walk.push(cur / 2);
        if cur == 2 * start {
            break;
        }
        cur = parent[cur];
    }
    walk.reverse();
    Some(walk)
}

/// Remove detours at repeated vertices from a closed odd walk, keeping the
/// odd-parity closed part each time, until the walk is a simple cycle.
/// Input and output are vertex lists with `w[0] == w[len-1]` implied closed;
/// output drops the repeated endpoint.
fn reduce_closed_walk(walk: &[Vertex]) -> Vec<Vertex> {
    let mut cyc: Vec<Vertex> = walk[..walk.len() - 1].to_vec();
    'outer: loop {
        let k = cyc.len();
        let mut pos = std::collections::HashMap::new();
        for (i, &v) in cyc.iter().enumerate() {
            if let Some(&j) = pos.get(&v) {
                // two closed sub-walks: cyc[j..i] and the rest
                let inner: Vec<Vertex> = cyc[j..i].to_vec();
                if inner.len() % 2 == 1 {
                    cyc = inner;
                } else {
                    let mut outer: Vec<Vertex> = cyc[..j].to_vec();
                    outer.extend_from_slice(&cyc[i..]);
                    cyc = outer;
                }
                debug_assert!(cyc.len() % 2 == 1 && cyc.len() < k);
                continue 'outer;
            }
            pos.insert(v, i);
        }
        return cyc;
    }
}
