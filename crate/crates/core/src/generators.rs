//! Instance generation: seeded random geometric instances, 2-subdivisions
//! and their complements, and the two co-2-subdivision embeddings with
//! numeric self-verification.

use crate::error::{Error, Result};
use crate::geometry::{self, Ball, GeometricInstance, Point};
use crate::graph::{Graph, Vertex};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Replace each edge uv by a path u - a_e - b_e - v. The new graph has
/// n + 2m vertices and 3m edges; labels record where each vertex came from.
pub fn two_subdivision(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let mut out_edges = Vec::with_capacity(3 * m);
    let mut labels: Vec<String> = (0..n)
        .map(|v| {
            g.label(v)
                .map(str::to_owned)
                .unwrap_or_else(|| format!("v{v}"))
        })
        .collect();
    for (k, &(u, v)) in edges.iter().enumerate() {
        let a = n + 2 * k;
        let b = n + 2 * k + 1;
        out_edges.push((u, a));
        out_edges.push((a, b));
        out_edges.push((b, v));
        labels.push(format!("e{k}+"));
        labels.push(format!("e{k}-"));
    }
    Graph::from_edge_list(n + 2 * m, &out_edges)
        .expect("subdivision edges are valid")
        .with_labels(labels)
}

/// The complement of the 2-subdivision.
pub fn co2subdivision(g: &Graph) -> Graph {
    two_subdivision(g).complement()
}

/// The small constants governing the hardness embeddings. `epsilon` is the
/// pullback of the vertex points, `epsilon_prime` the perturbation
/// magnitude, `epsilon_second` the radius slack of the ball construction,
/// `margin` the clearance every strict inequality must keep, and `eta` the
/// computed maximum cross-pair distance of the edge-point projections.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct EmbeddingConfig {
    pub epsilon: f64,
    pub epsilon_prime: f64,
    pub epsilon_second: f64,
    pub margin: f64,
    pub eta: f64,
}

impl Default for EmbeddingConfig {
    fn default() -> Self {
        EmbeddingConfig {
            epsilon: 0.01,
            epsilon_prime: 0.01 / 1000.0,
            epsilon_second: 0.0,
            margin: 1e-9,
            eta: 0.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub graph_matches: bool,
    pub size_matches: bool,
    pub min_clearance: f64,
    /// Pairs whose adjacency disagrees with the target graph (capped).
    pub mismatched_pairs: Vec<(usize, usize)>,
    /// Pairs whose distance sits closer than `margin` to the threshold.
    pub clearance_violations: Vec<(usize, usize, f64)>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Embedding {
    pub instance: GeometricInstance,
    pub config: EmbeddingConfig,
    pub report: EmbeddingReport,
}

/// Angles of the edge-point projections on the diameter-2 circle: kept away
/// from the half-circle endpoints so the cross-pair distances stay bounded
/// away from 2.
fn edge_angles(m: usize) -> Vec<f64> {
    use std::f64::consts::PI;
    (1..=m)
        .map(|k| PI / 4.0 + (k as f64) * (PI / 2.0) / (m as f64 + 1.0))
        .collect()
}

/// Angles of the vertex points on their arc, spanning [π/3, 2π/3].
fn vertex_angles(n: usize) -> Vec<f64> {
    use std::f64::consts::PI;
    if n == 1 {
        return vec![PI / 2.0];
    }
    (0..n)
        .map(|j| PI / 3.0 + (j as f64) * (PI / 3.0) / (n as f64 - 1.0))
        .collect()
}

fn max_cross_pair_distance(angles: &[f64]) -> f64 {
    use std::f64::consts::PI;
    let mut eta = 0.0f64;
    for (a, &ta) in angles.iter().enumerate() {
        for (b, &tb) in angles.iter().enumerate() {
            if a == b {
                continue;
            }
            // distance between the point at ta and the antipode of tb
            let diff = ta - (tb + PI);
            eta = eta.max(2.0 * (diff / 2.0).sin().abs());
        }
    }
    eta
}

/// Realize the co-2-subdivision of `g` as 4-dimensional unit balls
/// (threshold 2). Edge-point projections sit on a diameter-2 circle of the
/// (x,y)-plane, antipodal per edge; vertex points sit on an arc of radius
/// √3 − ε in the orthogonal (z,t)-plane, which puts every vertex point at
/// the shared distance √(4 − 2√3·ε + ε²) < 2 from every projection; each
/// edge point is then pushed by ε + ε′ against its own vertex direction,
/// landing it just beyond 2 from that single vertex point. ε is halved
/// until the numeric verification passes.
pub fn embed_co2subdivision_r4(g: &Graph, cfg: &EmbeddingConfig) -> Result<Embedding> {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let target = co2subdivision(g);
    let thetas = edge_angles(m);
    let eta = max_cross_pair_distance(&thetas);
    let mut eps = cfg.epsilon.min(0.25);
    if m > 0 {
        eps = eps.min((2.0 - eta) / 4.0);
    }
    let mut last_report = None;
    for _ in 0..60 {
        let eps_prime = eps / 1000.0;
        let instance = build_r4_points(n, &edges, &thetas, eps, eps_prime);
        let report = verify_embedding(&instance, g, cfg.margin)?;
        if report.pass {
            let config = EmbeddingConfig {
                epsilon: eps,
                epsilon_prime: eps_prime,
                epsilon_second: 0.0,
                margin: cfg.margin,
                eta,
            };
            let _ = target;
            return Ok(Embedding {
                instance,
                config,
                report,
            });
        }
        last_report = Some(report);
        eps /= 2.0;
    }
    Err(Error::ConstructionInfeasible(format!(
        "4-d embedding failed after 60 shrink steps (n = {n}, m = {m}, \
         final report: {last_report:?})"
    )))
}

fn build_r4_points(
    n: usize,
    edges: &[(Vertex, Vertex)],
    thetas: &[f64],
    eps: f64,
    eps_prime: f64,
) -> GeometricInstance {
    let radius_v = 3f64.sqrt() - eps;
    let phis = vertex_angles(n);
    let mut pts: Vec<Point> = Vec::with_capacity(n + 2 * edges.len());
    // unit directions toward each vertex point in the (z,t)-plane
    let dirs: Vec<(f64, f64)> = phis.iter().map(|&p| (p.cos(), p.sin())).collect();
    for &(dz, dt) in &dirs {
        pts.push(Point::new(vec![0.0, 0.0, radius_v * dz, radius_v * dt]));
    }
    let delta = eps + eps_prime;
    for (k, &(u, v)) in edges.iter().enumerate() {
        let (x, y) = (thetas[k].cos(), thetas[k].sin());
        let (uz, ut) = dirs[u];
        pts.push(Point::new(vec![x, y, -delta * uz, -delta * ut]));
        let (vz, vt) = dirs[v];
        pts.push(Point::new(vec![-x, -y, -delta * vz, -delta * vt]));
    }
    GeometricInstance::Balls {
        dim: 4,
        balls: pts.into_iter().map(|p| Ball::new(p, 1.0)).collect(),
        weights: None,
    }
}

/// Realize the co-2-subdivision of `g` as 3-dimensional balls with all radii
/// in [1, 1 + target_eps]. Edge points (radius 1) sit on the diameter-2
/// circle in the z = 0 plane; vertex points sit at (0, 0, √3 + i·ε′) with
/// radius √(1 + (√3 + i·ε′)²) − 1 + ε″, giving every intersection an ε″
/// slack. Each edge point is then pushed directly away from its excluded
/// vertex point by δ ∈ (ε″, ε″/cosθ), which severs exactly that one overlap.
/// ε′ and ε″ are solved from the clearance window and re-verified.
pub fn embed_co2subdivision_eps_balls(
    g: &Graph,
    target_eps: f64,
    cfg: &EmbeddingConfig,
) -> Result<Embedding> {
    if !(target_eps > 0.0) {
        return Err(Error::BadParameter(format!(
            "target_eps must be positive, got {target_eps}"
        )));
    }
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let mu = cfg.margin;
    let s3 = 3f64.sqrt();
    let thetas = edge_angles(m);
    let eta = max_cross_pair_distance(&thetas);
    // the push δ ≈ ε″ must stay under both the cross-pair gap 2 − η and a
    // share of the radius budget; ε″ ≈ 160μ/ε′² pins ε′ from below, the
    // height growth (√3/2)·n·ε′ pins it from above
    let d_budget = if m >= 2 { (2.0 - eta) - 8.0 * mu } else { 0.5 };
    if d_budget <= 0.0 {
        return Err(Error::ConstructionInfeasible(format!(
            "cross-pair gap 2 - η = {} leaves no room above the margin",
            2.0 - eta
        )));
    }
    let second_budget = (d_budget / 2.0).min(0.4 * target_eps);
    let lo = 1.2 * (160.0 * mu / second_budget).sqrt();
    let hi = if n > 0 {
        0.45 * target_eps / ((s3 / 2.0) * n as f64)
    } else {
        0.01
    };
    let mut eps_prime = lo.max(hi.min(0.01)).max(1e-7);
    let mut widen = 1.0f64;
    let mut last_report = None;
    for _ in 0..60 {
        let (eps_second, delta) = ball_window(n, eps_prime, mu, widen);
        let instance = build_ball_points(n, &edges, &thetas, eps_prime, eps_second, delta);
        let mut report = verify_embedding(&instance, g, mu)?;
        let radii_ok = match &instance {
            GeometricInstance::Balls { balls, .. } => balls
                .iter()
                .all(|b| b.radius >= 1.0 && b.radius <= 1.0 + target_eps),
            _ => unreachable!(),
        };
        report.pass = report.pass && radii_ok;
        if report.pass {
            let config = EmbeddingConfig {
                epsilon: target_eps,
                epsilon_prime: eps_prime,
                epsilon_second: eps_second,
                margin: mu,
                eta,
            };
            return Ok(Embedding {
                instance,
                config,
                report,
            });
        }
        last_report = Some(report);
        if !radii_ok {
            let height = (s3 / 2.0) * n as f64 * eps_prime;
            if eps_second > height {
                eps_prime *= 1.3; // the slack term dominates: widen spacing
            } else {
                eps_prime *= 0.8; // the height term dominates: tighten it
            }
        } else {
            widen *= 1.5; // clearance too thin: widen the anti-pair window
        }
    }
    Err(Error::ConstructionInfeasible(format!(
        "ball embedding failed after 60 adjustment steps (n = {n}, m = {m}, \
         final report: {last_report:?})"
    )))
}

/// The anti-pair window: pushing an edge point δ away from its vertex point
/// moves it δ·cosθ away from the neighboring vertex points, so δ must land
/// strictly between ε″ and ε″/cosθ with at least the margin to spare on
/// both sides.
fn ball_window(n: usize, eps_prime: f64, mu: f64, widen: f64) -> (f64, f64) {
    let s3 = 3f64.sqrt();
    if n <= 1 {
        let eps_second = (1000.0 * mu * widen).max(1e-6);
        return (eps_second, 2.0 * eps_second);
    }
    let h1 = s3 + eps_prime;
    let h2 = s3 + 2.0 * eps_prime;
    let cos_max = (1.0 + h1 * h2) / ((1.0 + h1 * h1) * (1.0 + h2 * h2)).sqrt();
    let w = 1.0 / cos_max - 1.0;
    let eps_second = (5.0 * mu / w * widen).max(1000.0 * mu);
    let delta = eps_second * (1.0 + 1.0 / cos_max) / 2.0;
    (eps_second, delta)
}

fn build_ball_points(
    n: usize,
    edges: &[(Vertex, Vertex)],
    thetas: &[f64],
    eps_prime: f64,
    eps_second: f64,
    delta: f64,
) -> GeometricInstance {
    let s3 = 3f64.sqrt();
    let heights: Vec<f64> = (0..n).map(|i| s3 + (i as f64 + 1.0) * eps_prime).collect();
    let mut balls: Vec<Ball> = heights
        .iter()
        .map(|&h| {
            Ball::new(
                Point::new(vec![0.0, 0.0, h]),
                (1.0 + h * h).sqrt() - 1.0 + eps_second,
            )
        })
        .collect();
    for (k, &(u, v)) in edges.iter().enumerate() {
        let (x, y) = (thetas[k].cos(), thetas[k].sin());
        for (bx, by, excl) in [(x, y, u), (-x, -y, v)] {
            let vp = &balls[excl].center;
            let w = [bx - vp.coords[0], by - vp.coords[1], -vp.coords[2]];
            let norm = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
            balls.push(Ball::new(
                Point::new(vec![
                    bx + delta * w[0] / norm,
                    by + delta * w[1] / norm,
                    delta * w[2] / norm,
                ]),
                1.0,
            ));
        }
    }
    GeometricInstance::Balls {
        dim: 3,
        balls,
        weights: None,
    }
}

const REPORT_CAP: usize = 8;

/// Check an embedding against its target: the intersection graph must equal
/// the co-2-subdivision of `g` exactly, and every pairwise distance must
/// clear its threshold by at least `margin` on the correct side.
pub fn verify_embedding(
    inst: &GeometricInstance,
    g: &Graph,
    margin: f64,
) -> Result<EmbeddingReport> {
    let expected = co2subdivision(g);
    let size_matches = inst.len() == expected.n();
    if !size_matches {
        return Ok(EmbeddingReport {
            graph_matches: false,
            size_matches: false,
            min_clearance: 0.0,
            mismatched_pairs: Vec::new(),
            clearance_violations: Vec::new(),
            pass: false,
        });
    }
    let got = geometry::intersection_graph_with_margin(inst, 0.0)?.graph;
    let mut mismatched = Vec::new();
    let mut violations = Vec::new();
    let mut min_clearance = f64::INFINITY;
    let nn = inst.len();
    for i in 0..nn {
        for j in (i + 1)..nn {
            let d = geometry::distance(inst.center(i), inst.center(j))?;
            let thr = inst.pair_threshold(i, j);
            let clear = (d - thr).abs();
            min_clearance = min_clearance.min(clear);
            if clear < margin && violations.len() < REPORT_CAP {
                violations.push((i, j, clear));
            }
            if got.has_edge(i, j) != expected.has_edge(i, j) && mismatched.len() < REPORT_CAP {
                mismatched.push((i, j));
            }
        }
    }
    let graph_matches = got.same_edges(&expected);
    if nn < 2 {
        min_clearance = f64::INFINITY;
    }
    let pass = graph_matches && violations.is_empty();
    Ok(EmbeddingReport {
        graph_matches,
        size_matches,
        min_clearance,
        mismatched_pairs: mismatched,
        clearance_violations: violations,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    Disks2d,
    Balls3d,
    Points2d,
    Points3d,
}

impl InstanceKind {
    pub fn dim(self) -> usize {
        match self {
            InstanceKind::Disks2d | InstanceKind::Points2d => 2,
            InstanceKind::Balls3d | InstanceKind::Points3d => 3,
        }
    }

    pub fn is_points(self) -> bool {
        matches!(self, InstanceKind::Points2d | InstanceKind::Points3d)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: InstanceKind,
    pub n: usize,
    pub r_min: f64,
    pub r_max: f64,
    pub box_size: f64,
    /// Distance threshold for the point kinds.
    pub threshold: f64,
    pub seed: u64,
    /// Instances are re-rolled (on a fresh stream of the same seed) until
    /// every pairwise distance clears its threshold by more than this.
    pub margin: f64,
}

impl Default for GenSpec {
    fn default() -> Self {
        GenSpec {
            kind: InstanceKind::Disks2d,
            n: 20,
            r_min: 0.5,
            r_max: 1.5,
            box_size: 10.0,
            threshold: 2.0,
            seed: 0,
            margin: 1e-9,
        }
    }
}

/// Reproducible uniform placement: the same spec yields the identical
/// instance. Degenerate near-threshold pairs trigger a re-roll on the next
/// RNG stream, which keeps the output a pure function of the spec.
pub fn gen_random_instance(spec: &GenSpec) -> Result<GeometricInstance> {
    if spec.r_min > spec.r_max || spec.r_min < 0.0 {
        return Err(Error::BadParameter(format!(
            "invalid radius range [{}, {}]",
            spec.r_min, spec.r_max
        )));
    }
    if !(spec.box_size > 0.0) {
        return Err(Error::BadParameter("box size must be positive".into()));
    }
    if spec.kind.is_points() && !(spec.threshold > 0.0) {
        return Err(Error::BadParameter("threshold must be positive".into()));
    }
    let dim = spec.kind.dim();
    for attempt in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        rng.set_stream(attempt);
        let points: Vec<Point> = (0..spec.n)
            .map(|_| {
                Point::new(
                    (0..dim)
                        .map(|_| rng.random::<f64>() * spec.box_size)
                        .collect(),
                )
            })
            .collect();
        let inst = if spec.kind.is_points() {
            GeometricInstance::points(dim, points, spec.threshold)
        } else {
            let balls = points
                .into_iter()
                .map(|p| {
                    let r = if spec.r_min == spec.r_max {
                        spec.r_min
                    } else {
                        spec.r_min + rng.random::<f64>() * (spec.r_max - spec.r_min)
                    };
                    Ball::new(p, r)
                })
                .collect();
            GeometricInstance::balls(dim, balls)
        };
        let ties = geometry::intersection_graph_with_margin(&inst, spec.margin)?
            .near_ties;
        if ties.is_empty() {
            return Ok(inst);
        }
    }
    Err(Error::ConstructionInfeasible(
        "could not clear the threshold margin in 100 re-rolls".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;

    #[test]
    fn subdivision_of_single_edge_is_p4() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let s = two_subdivision(&g);
        assert_eq!(s.n(), 4);
        assert_eq!(s.m(), 3);
        let mut degs: Vec<usize> = (0..4).map(|v| s.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn subdivision_of_triangle_is_c9() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = two_subdivision(&g);
        assert_eq!(s.n(), 9);
        assert_eq!(s.m(), 9);
        assert!((0..9).all(|v| s.degree(v) == 2));
        assert!(s.bfs_layers(&[0]).unwrap().unreached.is_empty());
    }

    #[test]
    fn co2_of_single_edge_is_a_path_again() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let c = co2subdivision(&g);
        let mut degs: Vec<usize> = (0..4).map(|v| c.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn subdivision_counting_identities() {
        use rand::{Rng, SeedableRng};
        for seed in 0..30u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = 2 + (seed as usize % 7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let m = g.m();
            let s = two_subdivision(&g);
            assert_eq!(s.n(), n + 2 * m);
            assert_eq!(s.m(), 3 * m);
            let c = co2subdivision(&g);
            let nn = n + 2 * m;
            assert_eq!(c.m(), nn * (nn - 1) / 2 - 3 * m);
        }
    }

    #[test]
    fn r4_embedding_of_single_edge() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let emb = embed_co2subdivision_r4(&g, &EmbeddingConfig::default()).unwrap();
        assert!(emb.report.pass);
        // order: p(v0), p(v1), p+(e), p-(e)
        let d_plus_minus = geometry::distance(emb.instance.center(2), emb.instance.center(3))
            .unwrap();
        assert!(d_plus_minus > 2.0);
        let d_plus_u = geometry::distance(emb.instance.center(2), emb.instance.center(0))
            .unwrap();
        assert!(d_plus_u > 2.0);
        let d_plus_v = geometry::distance(emb.instance.center(2), emb.instance.center(1))
            .unwrap();
        assert!(d_plus_v < 2.0);
    }

    #[test]
    fn r4_embedding_triangle_gives_complement_of_c9() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let emb = embed_co2subdivision_r4(&g, &EmbeddingConfig::default()).unwrap();
        assert!(emb.report.pass);
        let got = geometry::intersection_graph(&emb.instance).unwrap().graph;
        assert!(got.same_edges(&co2subdivision(&g)));
    }

    #[test]
    fn shared_distance_formula() {
        // the unperturbed vertex-to-projection distance √(4 − 2√3·ε + ε²)
        let eps = 0.01f64;
        let s3 = 3f64.sqrt();
        let expected = (4.0 - 2.0 * s3 * eps + eps * eps).sqrt();
        assert!(expected < 2.0);
        // reproduce geometrically: projection at distance 1 from the origin
        // in (x,y), vertex point at radius √3 − ε in (z,t)
        let r = s3 - eps;
        let d = (1.0f64 + r * r).sqrt();
        assert!((d - expected).abs() < 1e-12);
    }

    #[test]
    fn ball_embedding_radius_formula_at_zero_spacing() {
        // r_i at ε′ = 0 degenerates to √(1+3) − 1 + ε″ = 1 + ε″
        let s3 = 3f64.sqrt();
        let eps_second = 0.125;
        let r = (1.0 + s3 * s3).sqrt() - 1.0 + eps_second;
        assert!((r - (1.0 + eps_second)).abs() < 1e-12);
    }

    #[test]
    fn ball_embedding_of_single_edge() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let emb =
            embed_co2subdivision_eps_balls(&g, 0.1, &EmbeddingConfig::default()).unwrap();
        assert!(emb.report.pass);
        match &emb.instance {
            GeometricInstance::Balls { balls, .. } => {
                for b in balls {
                    assert!(b.radius >= 1.0 && b.radius <= 1.1);
                }
                // the anti-matched edge pair must not intersect
                let d =
                    geometry::distance(&balls[2].center, &balls[3].center).unwrap();
                assert!(d > balls[2].radius + balls[3].radius);
            }
            _ => panic!("expected balls"),
        }
    }

    #[test]
    fn embeddings_verify_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        for seed in 0..12u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = 2 + (seed as usize % 7);
            let mut all: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            // deterministic shuffle
            for i in (1..all.len()).rev() {
                let j = rng.random_range(0..=i);
                all.swap(i, j);
            }
            let m = 1 + rng.random_range(0..all.len().min(12));
            let g = Graph::from_edge_list(n, &all[..m]).unwrap();
            let emb = embed_co2subdivision_r4(&g, &EmbeddingConfig::default()).unwrap();
            assert!(emb.report.pass, "r4 seed {seed}");
            let emb =
                embed_co2subdivision_eps_balls(&g, 0.1, &EmbeddingConfig::default()).unwrap();
            assert!(emb.report.pass, "balls seed {seed}");
        }
    }

    #[test]
    fn sabotage_is_detected() {
        let g = cycle_graph(4);
        let emb = embed_co2subdivision_r4(&g, &EmbeddingConfig::default()).unwrap();
        let mut inst = emb.instance.clone();
        if let GeometricInstance::Balls { balls, .. } = &mut inst {
            balls[0].center.coords[0] += 0.5;
        }
        let report = verify_embedding(&inst, &g, 1e-9).unwrap();
        assert!(!report.pass);
        assert!(!report.graph_matches || !report.clearance_violations.is_empty());

        // size mismatch fails fast
        let other = cycle_graph(5);
        let report = verify_embedding(&emb.instance, &other, 1e-9).unwrap();
        assert!(!report.size_matches && !report.pass);
    }

    #[test]
    fn generator_is_deterministic() {
        let spec = GenSpec {
            n: 30,
            seed: 17,
            ..GenSpec::default()
        };
        let a = gen_random_instance(&spec).unwrap();
        let b = gen_random_instance(&spec).unwrap();
        assert_eq!(a, b);
        let empty = gen_random_instance(&GenSpec {
            n: 0,
            ..GenSpec::default()
        })
        .unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn generator_density_matches_analytic_estimate() {
        // unit disks (r = 1) in a B×B box: P(edge) ≈ E[overlap area]/B⁴;
        // a Monte-Carlo estimate with a generous 5σ band
        let b = 10.0f64;
        let trials = 400usize;
        let n = 20usize;
        let mut edge_counts = 0usize;
        for seed in 0..trials as u64 {
            let spec = GenSpec {
                kind: InstanceKind::Disks2d,
                n,
                r_min: 1.0,
                r_max: 1.0,
                box_size: b,
                threshold: 2.0,
                seed: 1000 + seed,
                margin: 1e-9,
            };
            let inst = gen_random_instance(&spec).unwrap();
            edge_counts += geometry::intersection_graph(&inst).unwrap().graph.m();
        }
        // edge prob for two uniform points at distance <= 2 in a box of side
        // 10, by the standard disk-overlap integral; estimated numerically
        let p_edge = pair_probability(b, 2.0);
        let pairs = (n * (n - 1) / 2) as f64;
        let expected = pairs * p_edge;
        let var = pairs * p_edge * (1.0 - p_edge);
        let sigma = (var / trials as f64).sqrt();
        let mean = edge_counts as f64 / trials as f64;
        assert!(
            (mean - expected).abs() <= 5.0 * sigma.max(0.05),
            "mean {mean}, expected {expected}, sigma {sigma}"
        );
    }

    /// P(|X - Y| <= d) for X, Y uniform in a b×b box, by quadrature over the
    /// difference distribution.
    fn pair_probability(b: f64, d: f64) -> f64 {
        let steps = 400;
        let mut acc = 0.0;
        for i in 0..steps {
            for j in 0..steps {
                let dx = (i as f64 + 0.5) / steps as f64 * b;
                let dy = (j as f64 + 0.5) / steps as f64 * b;
                if dx * dx + dy * dy <= d * d {
                    // triangle density of |U1-U2| per axis
                    let fx = 2.0 * (b - dx) / (b * b);
                    let fy = 2.0 * (b - dy) / (b * b);
                    acc += fx * fy * (b / steps as f64) * (b / steps as f64);
                }
            }
        }
        acc
    }
}
