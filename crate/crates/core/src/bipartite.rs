//! Exact maximum (weight) independent set on bipartite graphs.
//!
//! Matching by Hopcroft-Karp layered augmentation, unweighted independent
//! sets through König's theorem, weighted ones through a minimum s-t cut on
//! the standard projection network.

use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColoring, Vertex};
use std::collections::VecDeque;

/// A matching stored as a partial involution vertex -> mate.
#[derive(Debug, Clone)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = m {
                if u < *v {
                    out.push((u, *v));
                }
            }
        }
        out
    }
}

fn check_coloring(g: &Graph, coloring: &TwoColoring) -> Result<()> {
    if coloring.len() != g.n() {
        return Err(Error::BadParameter(format!(
            "coloring covers {} vertices, graph has {}",
            coloring.len(),
            g.n()
        )));
    }
    coloring
        .check_proper(g)
        .map_err(|(u, v)| Error::ImproperColoring(u, v))
}

/// Maximum-cardinality matching (Hopcroft-Karp).
pub fn max_matching(g: &Graph, coloring: &TwoColoring) -> Result<Matching> {
    check_coloring(g, coloring)?;
    let n = g.n();
    let left: Vec<Vertex> = (0..n).filter(|&v| coloring.side(v) == 0).collect();
    let mut mate: Vec<Option<Vertex>> = vec![None; n];
    loop {
        // BFS from free left vertices, layering left vertices only
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            }
        }
        let mut found_free_right = false;
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                match mate[v] {
                    None => found_free_right = true,
                    Some(w) => {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        if !found_free_right {
            break;
        }
        // DFS along the level structure
        fn try_augment(
            g: &Graph,
            u: Vertex,
            dist: &mut [usize],
            mate: &mut [Option<Vertex>],
        ) -> bool {
            let d = std::mem::replace(&mut dist[u], usize::MAX);
            for &v in g.neighbors(u) {
                match mate[v] {
                    None => {
                        mate[v] = Some(u);
                        mate[u] = Some(v);
                        return true;
                    }
                    Some(w) => {
                        if dist[w] == d + 1 && try_augment(g, w, dist, mate) {
                            mate[v] = Some(u);
                            mate[u] = Some(v);
                            return true;
                        }
                    }
                }
            }
            false
        }
        let mut progressed = false;
        for &u in &left {
            if mate[u].is_none() && dist[u] == 0 && try_augment(g, u, &mut dist, &mut mate) {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    Ok(Matching { mate })
}

/// Maximum independent set via König duality: the complement of a minimum
/// vertex cover extracted by alternating reachability from the unmatched
/// side-0 vertices. The returned set has size n - |max matching| and is
/// re-verified independent before being handed back.
pub fn max_independent_set_bipartite(g: &Graph, coloring: &TwoColoring) -> Result<Vec<Vertex>> {
    let matching = max_matching(g, coloring)?;
    let n = g.n();
    // alternating reachability: non-matching edges left->right,
    // matching edges right->left
    let mut reach = vec![false; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if coloring.side(v) == 0 && matching.mate(v).is_none() {
            reach[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        if coloring.side(u) == 0 {
            for &v in g.neighbors(u) {
                if matching.mate(u) != Some(v) && !reach[v] {
                    reach[v] = true;
                    queue.push_back(v);
                }
            }
        } else if let Some(w) = matching.mate(u) {
            if !reach[w] {
                reach[w] = true;
                queue.push_back(w);
            }
        }
    }
    // cover = (side0 not reached) + (side1 reached); MIS is the complement
    let mis: Vec<Vertex> = (0..n)
        .filter(|&v| {
            if coloring.side(v) == 0 {
                reach[v]
            } else {
                !reach[v]
            }
        })
        .collect();
    debug_assert_eq!(mis.len(), n - matching.size());
    verify_independent(g, &mis)?;
    Ok(mis)
}

/// Maximum-weight independent set on a bipartite graph via a minimum s-t cut
/// on the projection network: source -> side-0 vertex (capacity w), side-1
/// vertex -> sink (capacity w), infinite capacity across original edges.
/// Exact for integer weights; float weights use a 1e-9 slack.
pub fn max_weight_independent_set_bipartite(
    g: &Graph,
    coloring: &TwoColoring,
) -> Result<Vec<Vertex>> {
    check_coloring(g, coloring)?;
    let n = g.n();
    for v in 0..n {
        let w = g.weight(v);
        if w < 0.0 || !w.is_finite() {
            return Err(Error::NegativeWeight { vertex: v, weight: w });
        }
    }
    let integral = (0..n).all(|v| g.weight(v).fract() == 0.0);
    let slack = if integral { 0.0 } else { 1e-9 };
    let total: f64 = g.total_weight();
    let inf = total + 1.0;

    // nodes: 0 = source, 1 = sink, 2 + v = vertex v
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        if coloring.side(v) == 0 {
            net.add_edge(0, 2 + v, g.weight(v));
        } else {
            net.add_edge(2 + v, 1, g.weight(v));
        }
    }
    for (u, v) in g.edges() {
        let (a, b) = if coloring.side(u) == 0 { (u, v) } else { (v, u) };
        net.add_edge(2 + a, 2 + b, inf);
    }
    net.max_flow(0, 1, slack);
    let reach = net.residual_reachable(0, slack);
    let mis: Vec<Vertex> = (0..n)
        .filter(|&v| {
            if coloring.side(v) == 0 {
                reach[2 + v]
            } else {
                !reach[2 + v]
            }
        })
        .collect();
    verify_independent(g, &mis)?;
    Ok(mis)
}

fn verify_independent(g: &Graph, set: &[Vertex]) -> Result<()> {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return Err(Error::AssumptionViolated(format!(
                    "solver produced a dependent pair ({u}, {v})"
                )));
            }
        }
    }
    Ok(())
}

/// Dinic's algorithm over f64 capacities.
struct FlowNetwork {
    head: Vec<Vec<usize>>, // node -> indices into edges
    to: Vec<usize>,
    cap: Vec<f64>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: f64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0.0);
    }

    fn max_flow(&mut self, s: usize, t: usize, slack: f64) -> f64 {
        let n = self.head.len();
        let mut flow = 0.0;
        loop {
            // BFS level graph
            let mut level = vec![usize::MAX; n];
            level[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in &self.head[u] {
                    if self.cap[e] > slack && level[self.to[e]] == usize::MAX {
                        level[self.to[e]] = level[u] + 1;
                        queue.push_back(self.to[e]);
                    }
                }
            }
            if level[t] == usize::MAX {
                return flow;
            }
            let mut iter = vec![0usize; n];
            loop {
                let pushed = self.dfs(s, t, f64::INFINITY, &level, &mut iter, slack);
                if pushed <= slack {
                    break;
                }
                flow += pushed;
            }
        }
    }

    fn dfs(
        &mut self,
        u: usize,
        t: usize,
        limit: f64,
        level: &[usize],
        iter: &mut [usize],
        slack: f64,
    ) -> f64 {
        if u == t {
            return limit;
        }
        while iter[u] < self.head[u].len() {
            let e = self.head[u][iter[u]];
            let v = self.to[e];
            if self.cap[e] > slack && level[v] == level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]), level, iter, slack);
                if pushed > slack {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0.0
    }

    fn residual_reachable(&self, s: usize, slack: f64) -> Vec<bool> {
        let mut reach = vec![false; self.head.len()];
        reach[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                if self.cap[e] > slack && !reach[self.to[e]] {
                    reach[self.to[e]] = true;
                    queue.push_back(self.to[e]);
                }
            }
        }
        reach
    }
}
