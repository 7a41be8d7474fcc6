//! Reductions from geometric Maximum Clique to the independent-set core,
//! plus the classic exact algorithm for unit disks.

use crate::bipartite;
use crate::eptas::{self, EptasDiagnostics, EptasParams};
use crate::error::{Error, Result};
use crate::geometry::{
    self, distance_unchecked, GeometricInstance, IntersectionResult, Point,
};
use crate::graph::{Graph, TwoColoring, Vertex};
use serde::{Deserialize, Serialize};

/// How the β constant flows into each frontend: neighborhoods of disks split
/// into 6 cliques (degeneracy argument), unit-ball neighborhoods into 25.
pub const BETA_DISKS: f64 = 1.0 / 6.0;
pub const BETA_UNIT_BALLS: f64 = 1.0 / 25.0;
/// Neighborhood VC-dimension bound used for both frontends.
pub const VCDIM_GEOMETRIC: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CliqueMethod {
    EptasDisks,
    EptasUnitBalls,
    ExactUnitDisk,
    BruteForce,
}

/// Aggregates over every approximation call a frontend made (the
/// per-branch diagnostics in `diagnostics` describe only the winner).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub eptas_calls: usize,
    pub long_cycle_trials: usize,
    pub claim2_checks: usize,
    pub claim2_violations: usize,
    pub assumption_violations: usize,
}

impl RunStats {
    fn absorb(&mut self, d: &EptasDiagnostics) {
        self.eptas_calls += 1;
        self.long_cycle_trials += d
            .branch_counts
            .get("long-cycle")
            .copied()
            .unwrap_or(0);
        self.claim2_checks += d.claim2_checks;
        self.claim2_violations += d.claim2_violations;
        self.assumption_violations += d.assumption_violations.len();
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CliqueSolution {
    pub vertices: Vec<Vertex>,
    pub size: usize,
    pub weight: f64,
    pub method: CliqueMethod,
    /// Set only after the solution re-verified as pairwise adjacent.
    pub valid: bool,
    pub epsilon: Option<f64>,
    pub diagnostics: Option<EptasDiagnostics>,
    pub stats: RunStats,
}

impl CliqueSolution {
    fn verified(
        graph: &Graph,
        mut vertices: Vec<Vertex>,
        method: CliqueMethod,
        epsilon: Option<f64>,
        diagnostics: Option<EptasDiagnostics>,
        stats: RunStats,
    ) -> Self {
        vertices.sort_unstable();
        let valid = is_clique(graph, &vertices);
        let weight = graph.set_weight(vertices.iter().copied());
        CliqueSolution {
            size: vertices.len(),
            vertices,
            weight,
            method,
            valid,
            epsilon,
            diagnostics,
            stats,
        }
    }
}

pub fn is_clique(g: &Graph, vs: &[Vertex]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| {
        vs[i + 1..]
            .iter()
            .all(|&v| g.has_edge(u, v))
    })
}

fn better(a: &(Vec<Vertex>, f64), b: &(Vec<Vertex>, f64)) -> bool {
    a.1 > b.1 || (a.1 == b.1 && !a.0.is_empty() && (b.0.is_empty() || a.0 < b.0))
}

/// Approximate Maximum Clique on a 2-dimensional instance by degeneracy
/// branching: for each prefix of deletions, assume the current minimum-degree
/// vertex joins the solution and approximate the independence number of the
/// complement of its closed neighborhood (β = 1/6, d = 4). The branching
/// chain has 2n+1 nodes, so this costs a linear factor.
pub fn max_clique_disks(inst: &GeometricInstance, p: &EptasParams) -> Result<CliqueSolution> {
    if inst.dim() != 2 {
        return Err(Error::DimensionMismatch(inst.dim(), 2));
    }
    p.validate_for_run()?;
    let IntersectionResult { graph, .. } = geometry::intersection_graph(inst)?;
    let n = graph.n();
    if n == 0 {
        return Ok(CliqueSolution::verified(
            &graph,
            Vec::new(),
            CliqueMethod::EptasDisks,
            Some(p.epsilon),
            None,
            RunStats::default(),
        ));
    }

    // precompute the deletion chain: v_k = min-degree vertex after deleting
    // v_1..v_{k-1}
    let mut alive: Vec<bool> = vec![true; n];
    let mut chain: Vec<(Vertex, Vec<Vertex>)> = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                (
                    graph.neighbors(v).iter().filter(|&&u| alive[u]).count(),
                    v,
                )
            })
            .expect("some vertex is alive");
        let closed: Vec<Vertex> = std::iter::once(v)
            .chain(graph.neighbors(v).iter().copied().filter(|&u| alive[u]))
            .collect();
        chain.push((v, closed));
        alive[v] = false;
    }

    use rayon::prelude::*;
    let branch_results: Vec<(Vec<Vertex>, f64, EptasDiagnostics)> = chain
        .par_iter()
        .enumerate()
        .map(|(k, (_, closed))| -> Result<_> {
            let (hv, map) = graph.induced_subgraph(closed)?;
            let comp = hv.complement();
            let sub_params = EptasParams {
                beta: BETA_DISKS,
                vc_dim: VCDIM_GEOMETRIC,
                iocp: 1,
                seed: branch_seed(p.seed, k as u64),
                ..*p
            };
            let out = eptas::run_eptas(&comp, &sub_params)?;
            let clique = map.map_back(&out.vertices);
            let w = graph.set_weight(clique.iter().copied());
            Ok((clique, w, out.diagnostics))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut best: (Vec<Vertex>, f64) = (Vec::new(), f64::NEG_INFINITY);
    let mut best_diag = None;
    let mut stats = RunStats::default();
    for (clique, w, diag) in branch_results {
        stats.absorb(&diag);
        if better(&(clique.clone(), w), &best) {
            best = (clique, w);
            best_diag = Some(diag);
        }
    }
    Ok(CliqueSolution::verified(
        &graph,
        best.0,
        CliqueMethod::EptasDisks,
        Some(p.epsilon),
        best_diag,
        stats,
    ))
}

fn branch_seed(seed: u64, k: u64) -> u64 {
    seed ^ k.wrapping_mul(0x2545_f491_4f6c_dd1d).rotate_left(17)
}

/// Approximate Maximum Clique on a 3-dimensional equal-radius (or point)
/// instance: guess a vertex of a maximum clique, approximate the
/// independence number of the complement of its neighborhood (β = 1/25,
/// d = 4), and keep the best guess.
pub fn max_clique_unit_balls(
    inst: &GeometricInstance,
    p: &EptasParams,
    force: bool,
) -> Result<CliqueSolution> {
    if inst.dim() != 3 {
        return Err(Error::DimensionMismatch(inst.dim(), 3));
    }
    p.validate_for_run()?;
    if !inst.equal_radii() && !force {
        return Err(Error::UnequalRadii(inst.radius_spread()));
    }
    let IntersectionResult { graph, .. } = geometry::intersection_graph(inst)?;
    let n = graph.n();
    if n == 0 {
        return Ok(CliqueSolution::verified(
            &graph,
            Vec::new(),
            CliqueMethod::EptasUnitBalls,
            Some(p.epsilon),
            None,
            RunStats::default(),
        ));
    }
    let weighted = graph.has_weights();
    // visit high-degree guesses first so the upper bound prunes early
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));

    let mut best: (Vec<Vertex>, f64) = (vec![order[0]], graph.weight(order[0]));
    for &v in &order {
        if best.1 < graph.weight(v) {
            best = (vec![v], graph.weight(v));
        }
    }
    let mut best_diag: Option<EptasDiagnostics> = None;
    let mut stats = RunStats::default();
    for (k, &v) in order.iter().enumerate() {
        let ub = if weighted {
            graph.weight(v)
                + graph
                    .neighbors(v)
                    .iter()
                    .map(|&u| graph.weight(u))
                    .sum::<f64>()
        } else {
            (graph.degree(v) + 1) as f64
        };
        if ub <= best.1 {
            continue; // the whole closed neighborhood cannot beat the incumbent
        }
        let (hv, map) = graph.induced_subgraph(graph.neighbors(v))?;
        let comp = hv.complement();
        let sub_params = EptasParams {
            beta: BETA_UNIT_BALLS,
            vc_dim: VCDIM_GEOMETRIC,
            iocp: 1,
            seed: branch_seed(p.seed, 0x1000 + k as u64),
            ..*p
        };
        let out = eptas::run_eptas(&comp, &sub_params)?;
        stats.absorb(&out.diagnostics);
        let mut clique = map.map_back(&out.vertices);
        clique.push(v);
        clique.sort_unstable();
        let w = graph.set_weight(clique.iter().copied());
        if better(&(clique.clone(), w), &best) {
            best = (clique, w);
            best_diag = Some(out.diagnostics);
        }
    }
    Ok(CliqueSolution::verified(
        &graph,
        best.0,
        CliqueMethod::EptasUnitBalls,
        Some(p.epsilon),
        best_diag,
        stats,
    ))
}

/// Maximum subset of diameter at most 1 among points in R³, via the
/// threshold-1 point instance. The returned subset's diameter is verified.
pub fn max_diameter_one_subset(points: &[Point], p: &EptasParams) -> Result<CliqueSolution> {
    for pt in points {
        if pt.dim() != 3 {
            return Err(Error::DimensionMismatch(pt.dim(), 3));
        }
    }
    let inst = GeometricInstance::points(3, points.to_vec(), 1.0);
    let mut sol = max_clique_unit_balls(&inst, p, false)?;
    if !sol.vertices.is_empty() {
        let chosen: Vec<Point> = sol.vertices.iter().map(|&i| points[i].clone()).collect();
        let diam = geometry::diameter(&chosen)?;
        sol.valid = sol.valid && diam <= 1.0;
    }
    Ok(sol)
}

/// Exact Maximum Clique for unit disks (radius r, centers given): guess the
/// two most distant centers of an optimal clique, keep only centers within
/// that distance of both, split the survivors by the side of the line —
/// each side is a clique, so the complement is bipartite and solved exactly.
pub fn exact_unit_disk_clique(points: &[Point], r: f64) -> Result<CliqueSolution> {
    for pt in points {
        if pt.dim() != 2 {
            return Err(Error::DimensionMismatch(pt.dim(), 2));
        }
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::BadParameter(format!("radius must be positive, got {r}")));
    }
    let threshold = 2.0 * r;
    let inst = GeometricInstance::points(2, points.to_vec(), threshold);
    let IntersectionResult { graph, .. } = geometry::intersection_graph(&inst)?;
    let n = points.len();
    if n == 0 {
        return Ok(CliqueSolution::verified(
            &graph,
            Vec::new(),
            CliqueMethod::ExactUnitDisk,
            None,
            None,
            RunStats::default(),
        ));
    }
    // singleton case
    let mut best: (Vec<Vertex>, f64) = (0..n)
        .map(|v| (vec![v], graph.weight(v)))
        .max_by(|a, b| a.1.total_cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
        .expect("n >= 1");

    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance_unchecked(&points[i], &points[j]);
            if d > threshold {
                continue;
            }
            let survivors: Vec<Vertex> = (0..n)
                .filter(|&w| {
                    distance_unchecked(&points[w], &points[i]) <= d
                        && distance_unchecked(&points[w], &points[j]) <= d
                })
                .collect();
            let (sub, map) = graph.induced_subgraph(&survivors)?;
            // side of the line ij decides the 2-coloring of the complement;
            // collinear points go to side 0
            let coloring = TwoColoring::new(
                (0..sub.n())
                    .map(|k| {
                        let w = map.to_orig(k);
                        if cross_sign(&points[i], &points[j], &points[w]) >= 0.0 {
                            0
                        } else {
                            1
                        }
                    })
                    .collect(),
            );
            let comp = sub.complement();
            debug_assert!(coloring.check_proper(&comp).is_ok());
            let set = if graph.has_weights() {
                bipartite::max_weight_independent_set_bipartite(&comp, &coloring)?
            } else {
                bipartite::max_independent_set_bipartite(&comp, &coloring)?
            };
            let clique = map.map_back(&set);
            let w = graph.set_weight(clique.iter().copied());
            if better(&(clique.clone(), w), &best) {
                best = (clique, w);
            }
        }
    }
    let sol = CliqueSolution::verified(
        &graph,
        best.0,
        CliqueMethod::ExactUnitDisk,
        None,
        None,
        RunStats::default(),
    );
    debug_assert!(sol.valid);
    Ok(sol)
}

fn cross_sign(a: &Point, b: &Point, w: &Point) -> f64 {
    (b.coords[0] - a.coords[0]) * (w.coords[1] - a.coords[1])
        - (b.coords[1] - a.coords[1]) * (w.coords[0] - a.coords[0])
}
