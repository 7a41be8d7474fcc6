//! Exhaustive ground-truth oracles: exact clique and independent set, odd
//! girth, the iocp <= 1 predicate, and neighborhood VC-dimension.
//!
//! Every oracle refuses inputs above its budget instead of truncating.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    /// Vertex cap for exact clique / independent set.
    pub max_clique_n: usize,
    /// Vertex cap for the induced odd cycle packing predicate.
    pub max_iocp_n: usize,
    /// Vertex cap for VC-dimension.
    pub max_vcdim_n: usize,
    /// Optional wall-clock cap, checked coarsely inside the search loops.
    pub time_limit: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_clique_n: 24,
            max_iocp_n: 14,
            max_vcdim_n: 16,
            time_limit: None,
        }
    }
}

struct Deadline {
    start: Instant,
    limit: Option<Duration>,
}

impl Deadline {
    fn new(limit: Option<Duration>) -> Self {
        Deadline {
            start: Instant::now(),
            limit,
        }
    }

    fn check(&self) -> Result<()> {
        if let Some(lim) = self.limit {
            let used = self.start.elapsed();
            if used > lim {
                return Err(Error::TimeBudgetExceeded(used));
            }
        }
        Ok(())
    }
}

fn require(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::BudgetExceeded { n, cap });
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let n = g.n();
    assert!(n <= 64);
    let mut masks = vec![0u64; n];
    for (u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

fn mask_to_vec(mut mask: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out.push(v);
        mask &= mask - 1;
    }
    out
}

/// Exact maximum clique by pivoting maximal-clique enumeration with
/// incumbent pruning.
pub fn brute_force_max_clique(g: &Graph, budget: &OracleBudget) -> Result<Vec<Vertex>> {
    require(g.n(), budget.max_clique_n)?;
    let deadline = Deadline::new(budget.time_limit);
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let masks = adjacency_masks(g);
    let mut best: u64 = 1; // vertex 0 alone
    let all = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    bk_pivot(&masks, 0, all, 0, &mut best, &deadline)?;
    Ok(mask_to_vec(best))
}

fn bk_pivot(
    masks: &[u64],
    r: u64,
    p: u64,
    x: u64,
    best: &mut u64,
    deadline: &Deadline,
) -> Result<()> {
    deadline.check()?;
    if p == 0 && x == 0 {
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
        return Ok(());
    }
    if r.count_ones() + p.count_ones() <= best.count_ones() {
        return Ok(());
    }
    // pivot: vertex of p|x with most neighbors in p
    let mut pivot = usize::MAX;
    let mut pivot_deg = usize::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let deg = (masks[v] & p).count_ones() as usize;
        if pivot == usize::MAX || deg > pivot_deg {
            pivot = v;
            pivot_deg = deg;
        }
    }
    let mut candidates = p & !masks[pivot];
    let mut p = p;
    let mut x = x;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u64 << v;
        bk_pivot(masks, r | bit, p & masks[v], x & masks[v], best, deadline)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}

/// Exact maximum (weight) independent set by branch and bound on a
/// minimum-degree vertex.
pub fn brute_force_mis(g: &Graph, weighted: bool, budget: &OracleBudget) -> Result<Vec<Vertex>> {
    require(g.n(), budget.max_clique_n)?;
    let deadline = Deadline::new(budget.time_limit);
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let masks = adjacency_masks(g);
    let weights: Vec<f64> = (0..n)
        .map(|v| if weighted { g.weight(v) } else { 1.0 })
        .collect();
    let all = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let mut best = (0.0f64, 0u64);
    mis_branch(&masks, &weights, all, 0, 0.0, &mut best, &deadline)?;
    Ok(mask_to_vec(best.1))
}

fn mis_branch(
    masks: &[u64],
    weights: &[f64],
    alive: u64,
    chosen: u64,
    chosen_w: f64,
    best: &mut (f64, u64),
    deadline: &Deadline,
) -> Result<()> {
    deadline.check()?;
    if alive == 0 {
        if chosen_w > best.0 {
            *best = (chosen_w, chosen);
        }
        return Ok(());
    }
    let remaining: f64 = mask_to_vec(alive).iter().map(|&v| weights[v]).sum();
    if chosen_w + remaining <= best.0 {
        return Ok(());
    }
    // minimum-degree vertex within alive, smallest id on ties
    let mut v = usize::MAX;
    let mut vd = usize::MAX;
    let mut scan = alive;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let d = (masks[u] & alive).count_ones() as usize;
        if d < vd {
            v = u;
            vd = d;
        }
    }
    let bit = 1u64 << v;
    // take v
    mis_branch(
        masks,
        weights,
        alive & !(bit | masks[v]),
        chosen | bit,
        chosen_w + weights[v],
        best,
        deadline,
    )?;
    // leave v out (pointless when v is isolated)
    if vd > 0 {
        mis_branch(masks, weights, alive & !bit, chosen, chosen_w, best, deadline)?;
    }
    Ok(())
}

/// Minimum odd cycle length by DFS cycle enumeration with length pruning,
/// or `None` for bipartite graphs. Independent of the double-cover method.
pub fn brute_force_odd_girth(g: &Graph, budget: &OracleBudget) -> Result<Option<usize>> {
    require(g.n(), budget.max_iocp_n)?;
    let deadline = Deadline::new(budget.time_limit);
    let n = g.n();
    let masks = adjacency_masks(g);
    let mut best: Option<usize> = None;
    let mut path = Vec::new();
    for root in 0..n {
        deadline.check()?;
        path.clear();
        path.push(root);
        dfs_odd_girth(&masks, root, 1u64 << root, &mut path, &mut best);
    }
    Ok(best)
}

fn dfs_odd_girth(
    masks: &[u64],
    root: Vertex,
    visited: u64,
    path: &mut Vec<Vertex>,
    best: &mut Option<usize>,
) {
    let len = path.len();
    if let Some(b) = *best {
        if len >= b {
            return; // any cycle through this path is at least as long
        }
    }
    let last = *path.last().unwrap();
    if len >= 3 && len % 2 == 1 && masks[last] & (1 << root) != 0 {
        *best = Some(len);
        return;
    }
    let mut nbrs = masks[last] & !visited;
    while nbrs != 0 {
        let v = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if v <= root {
            continue; // canonical root = smallest vertex of the cycle
        }
        path.push(v);
        dfs_odd_girth(masks, root, visited | (1 << v), path, best);
        path.pop();
    }
}

/// Outcome of the iocp <= 1 check: either it holds, or a witness pair of
/// vertex-disjoint, anti-adjacent induced odd cycles.
#[derive(Debug, Clone)]
pub struct IocpCheck {
    pub holds: bool,
    pub witness: Option<(Vec<Vertex>, Vec<Vertex>)>,
    pub induced_odd_cycles: usize,
}

/// Does the graph avoid two vertex-disjoint induced odd cycles with no edge
/// between them? Enumerates all induced odd cycles, then tests all pairs.
pub fn check_iocp_le_one(g: &Graph, budget: &OracleBudget) -> Result<IocpCheck> {
    require(g.n(), budget.max_iocp_n)?;
    let deadline = Deadline::new(budget.time_limit);
    let cycles = enumerate_induced_odd_cycles(g, &deadline)?;
    for (i, (ci, mi)) in cycles.iter().enumerate() {
        deadline.check()?;
        for (cj, mj) in &cycles[i + 1..] {
            if mi & mj != 0 {
                continue;
            }
            let linked = ci.iter().any(|&u| {
                let nbr: u64 = g.neighbors(u).iter().fold(0u64, |acc, &w| acc | (1 << w));
                nbr & mj != 0
            });
            if !linked {
                return Ok(IocpCheck {
                    holds: false,
                    witness: Some((ci.clone(), cj.clone())),
                    induced_odd_cycles: cycles.len(),
                });
            }
        }
    }
    Ok(IocpCheck {
        holds: true,
        witness: None,
        induced_odd_cycles: cycles.len(),
    })
}

/// All induced (chordless) odd cycles, each once, as (sorted vertices, mask).
fn enumerate_induced_odd_cycles(
    g: &Graph,
    deadline: &Deadline,
) -> Result<Vec<(Vec<Vertex>, u64)>> {
    let n = g.n();
    let masks = adjacency_masks(g);
    let mut out = Vec::new();
    let mut path = Vec::new();
    for root in 0..n {
        deadline.check()?;
        path.clear();
        path.push(root);
        dfs_induced_cycles(&masks, root, 1u64 << root, &mut path, &mut out);
    }
    Ok(out)
}

fn dfs_induced_cycles(
    masks: &[u64],
    root: Vertex,
    path_mask: u64,
    path: &mut Vec<Vertex>,
    out: &mut Vec<(Vec<Vertex>, u64)>,
) {
    let last = *path.last().unwrap();
    // interior = path minus root and minus last; extensions may touch
    // neither it nor (for a chordless closure) anything besides root+last
    let interior = path_mask & !(1 << root) & !(1 << last);
    let mut nbrs = masks[last] & !path_mask;
    while nbrs != 0 {
        let v = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if v <= root {
            continue;
        }
        if masks[v] & interior != 0 {
            continue; // a chord to the path interior
        }
        let closes = masks[v] & (1 << root) != 0;
        if closes && path.len() >= 2 {
            // dedup the two traversal directions
            if path.len().is_multiple_of(2) && path[1] < v {
                let mut cyc = path.clone();
                cyc.push(v);
                let mask = path_mask | (1 << v);
                cyc.sort_unstable();
                out.push((cyc, mask));
            }
            // further extension through v would keep the chord v-root
            continue;
        }
        path.push(v);
        dfs_induced_cycles(masks, root, path_mask | (1 << v), path, out);
        path.pop();
    }
}

/// VC-dimension of the neighborhood hypergraph: the largest |X| such that
/// every subset of X occurs as N(v) ∩ X. Exhaustive by increasing size with
/// the 2^k <= n+1 cut-off.
pub fn vc_dimension_neighborhood(g: &Graph, budget: &OracleBudget) -> Result<u32> {
    require(g.n(), budget.max_vcdim_n)?;
    let deadline = Deadline::new(budget.time_limit);
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let masks = adjacency_masks(g);
    let mut k = 0u32;
    loop {
        let next = k + 1;
        // 2^next distinct traces are needed; only n neighborhoods exist,
        // plus possibly the empty trace
        if (next as usize) > n || (1usize << next) > n + 1 {
            return Ok(k);
        }
        deadline.check()?;
        if !any_shattered(&masks, n, next as usize) {
            return Ok(k);
        }
        k = next;
    }
}

fn any_shattered(masks: &[u64], n: usize, k: usize) -> bool {
    let mut chosen = vec![0usize; k];
    combos(masks, n, k, 0, 0, &mut chosen)
}

fn combos(masks: &[u64], n: usize, k: usize, start: usize, depth: usize, chosen: &mut [usize]) -> bool {
    if depth == k {
        let x_mask: u64 = chosen.iter().fold(0, |acc, &v| acc | (1 << v));
        let mut seen = vec![false; 1 << k];
        let mut count = 0usize;
        for &m in masks {
            let trace = m & x_mask;
            // compress trace onto chosen positions
            let mut idx = 0usize;
            for (bit, &v) in chosen.iter().enumerate() {
                if trace & (1 << v) != 0 {
                    idx |= 1 << bit;
                }
            }
            if !seen[idx] {
                seen[idx] = true;
                count += 1;
                if count == 1 << k {
                    return true;
                }
            }
        }
        return false;
    }
    for v in start..n {
        chosen[depth] = v;
        if combos(masks, n, k, v + 1, depth + 1, chosen) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn clique_of_k5_and_c5() {
        let k5: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
            .collect();
        let g = Graph::from_edge_list(5, &k5).unwrap();
        assert_eq!(brute_force_max_clique(&g, &budget()).unwrap().len(), 5);
        assert_eq!(
            brute_force_max_clique(&cycle_graph(5), &budget()).unwrap().len(),
            2
        );
    }

    #[test]
    fn mis_basics() {
        let edgeless = Graph::from_edge_list(6, &[]).unwrap();
        assert_eq!(brute_force_mis(&edgeless, false, &budget()).unwrap().len(), 6);
        assert_eq!(
            brute_force_mis(&cycle_graph(6), false, &budget()).unwrap().len(),
            3
        );
        let edge = Graph::from_edge_list(2, &[(0, 1)])
            .unwrap()
            .with_weights(vec![3.0, 5.0])
            .unwrap();
        assert_eq!(brute_force_mis(&edge, true, &budget()).unwrap(), vec![1]);
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(brute_force_odd_girth(&cycle_graph(4), &budget()).unwrap(), None);
        assert_eq!(
            brute_force_odd_girth(&cycle_graph(7), &budget()).unwrap(),
            Some(7)
        );
    }

    #[test]
    fn odd_girth_cross_validates_double_cover() {
        use rand::{Rng, SeedableRng};
        for seed in 0..150u64 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 3 + (seed as usize % 10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let a = brute_force_odd_girth(&g, &budget()).unwrap();
            let b = crate::oddcycle::shortest_odd_cycle(&g).map(|c| c.len());
            assert_eq!(a, b, "seed {seed}");
        }
    }

    #[test]
    fn iocp_two_c5s_and_joined() {
        // two disjoint C5s, no cross edges
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
        let g = Graph::from_edge_list(10, &edges).unwrap();
        let chk = check_iocp_le_one(&g, &budget()).unwrap();
        assert!(!chk.holds);
        let (a, b) = chk.witness.unwrap();
        assert_eq!(a.len(), 5);
        assert_eq!(b.len(), 5);

        // complete join of the two C5s links every pair of cycles
        let mut joined = edges.clone();
        for u in 0..5 {
            for v in 5..10 {
                joined.push((u, v));
            }
        }
        let g = Graph::from_edge_list(10, &joined).unwrap();
        assert!(check_iocp_le_one(&g, &budget()).unwrap().holds);
    }

    #[test]
    fn vc_dimension_small_cases() {
        let edgeless = Graph::from_edge_list(4, &[]).unwrap();
        assert_eq!(vc_dimension_neighborhood(&edgeless, &budget()).unwrap(), 0);
        let edge = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(vc_dimension_neighborhood(&edge, &budget()).unwrap(), 1);
    }

    #[test]
    fn caps_are_enforced() {
        let g = Graph::from_edge_list(30, &[]).unwrap();
        assert!(matches!(
            brute_force_max_clique(&g, &budget()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            check_iocp_le_one(&g, &budget()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            vc_dimension_neighborhood(&g, &budget()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn clique_mis_duality_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        for seed in 0..40u64 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 4 + (seed as usize % 9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let w = brute_force_max_clique(&g, &budget()).unwrap().len();
            let a = brute_force_mis(&g.complement(), false, &budget()).unwrap().len();
            assert_eq!(w, a, "seed {seed}");
        }
    }
}
