//! Geometric primitives and intersection graphs of disks, balls, and
//! thresholded point sets.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Default margin for boundary comparisons. Distances within this margin of
/// their decision threshold are reported as near-ties rather than silently
/// resolved one way or the other.
pub const DEFAULT_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Point { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Self {
        Ball { center, radius }
    }
}

/// Either a set of balls or a point set with a distance threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum GeometricInstance {
    Balls {
        dim: usize,
        balls: Vec<Ball>,
        weights: Option<Vec<f64>>,
    },
    Points {
        dim: usize,
        points: Vec<Point>,
        threshold: f64,
        weights: Option<Vec<f64>>,
    },
}

impl GeometricInstance {
    pub fn balls(dim: usize, balls: Vec<Ball>) -> Self {
        GeometricInstance::Balls {
            dim,
            balls,
            weights: None,
        }
    }

    pub fn points(dim: usize, points: Vec<Point>, threshold: f64) -> Self {
        GeometricInstance::Points {
            dim,
            points,
            threshold,
            weights: None,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            GeometricInstance::Balls { dim, .. } => *dim,
            GeometricInstance::Points { dim, .. } => *dim,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            GeometricInstance::Balls { balls, .. } => balls.len(),
            GeometricInstance::Points { points, .. } => points.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn weights(&self) -> Option<&[f64]> {
        match self {
            GeometricInstance::Balls { weights, .. } => weights.as_deref(),
            GeometricInstance::Points { weights, .. } => weights.as_deref(),
        }
    }

    pub fn set_weights(&mut self, w: Option<Vec<f64>>) {
        match self {
            GeometricInstance::Balls { weights, .. } => *weights = w,
            GeometricInstance::Points { weights, .. } => *weights = w,
        }
    }

    /// Center of object `i`.
    pub fn center(&self, i: usize) -> &Point {
        match self {
            GeometricInstance::Balls { balls, .. } => &balls[i].center,
            GeometricInstance::Points { points, .. } => &points[i],
        }
    }

    /// Decision threshold for the pair (i, j): sum of radii in ball mode,
    /// the global threshold in point mode.
    pub fn pair_threshold(&self, i: usize, j: usize) -> f64 {
        match self {
            GeometricInstance::Balls { balls, .. } => balls[i].radius + balls[j].radius,
            GeometricInstance::Points { threshold, .. } => *threshold,
        }
    }

    /// All radii equal (exactly)?
    pub fn equal_radii(&self) -> bool {
        match self {
            GeometricInstance::Balls { balls, .. } => {
                balls.windows(2).all(|w| w[0].radius == w[1].radius)
            }
            GeometricInstance::Points { .. } => true,
        }
    }

    /// Largest absolute radius deviation from the first radius.
    pub fn radius_spread(&self) -> f64 {
        match self {
            GeometricInstance::Balls { balls, .. } => {
                let Some(first) = balls.first() else { return 0.0 };
                balls
                    .iter()
                    .map(|b| (b.radius - first.radius).abs())
                    .fold(0.0, f64::max)
            }
            GeometricInstance::Points { .. } => 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GeometricInstance::Balls { dim, balls, weights } => {
                for b in balls {
                    if b.center.dim() != *dim {
                        return Err(Error::DimensionMismatch(b.center.dim(), *dim));
                    }
                    if !b.center.is_finite() || !b.radius.is_finite() || b.radius < 0.0 {
                        return Err(Error::BadInstance(
                            "ball with non-finite center or negative radius".into(),
                        ));
                    }
                }
                check_weights(weights, balls.len())
            }
            GeometricInstance::Points {
                dim,
                points,
                threshold,
                weights,
            } => {
                for p in points {
                    if p.dim() != *dim {
                        return Err(Error::DimensionMismatch(p.dim(), *dim));
                    }
                    if !p.is_finite() {
                        return Err(Error::BadInstance("non-finite point".into()));
                    }
                }
                if !(*threshold > 0.0) || !threshold.is_finite() {
                    return Err(Error::BadInstance(format!(
                        "threshold must be positive and finite, got {threshold}"
                    )));
                }
                check_weights(weights, points.len())
            }
        }
    }
}

fn check_weights(weights: &Option<Vec<f64>>, n: usize) -> Result<()> {
    if let Some(w) = weights {
        if w.len() != n {
            return Err(Error::WeightCountMismatch {
                expected: n,
                got: w.len(),
            });
        }
        for (v, &x) in w.iter().enumerate() {
            if !x.is_finite() || x < 0.0 {
                return Err(Error::BadWeight { vertex: v, weight: x });
            }
        }
    }
    Ok(())
}

/// Euclidean distance between two points of the same dimension.
pub fn distance(a: &Point, b: &Point) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(distance_unchecked(a, b))
}

#[inline]
pub(crate) fn distance_unchecked(a: &Point, b: &Point) -> f64 {
    a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Maximum pairwise distance; 0 for a singleton.
pub fn diameter(points: &[Point]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptyPointList);
    }
    let dim = points[0].dim();
    let mut best = 0.0f64;
    for i in 0..points.len() {
        if points[i].dim() != dim {
            return Err(Error::DimensionMismatch(points[i].dim(), dim));
        }
        for j in (i + 1)..points.len() {
            best = best.max(distance_unchecked(&points[i], &points[j]));
        }
    }
    Ok(best)
}

/// A pair whose distance fell within the comparison margin of its threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NearTie {
    pub i: usize,
    pub j: usize,
    pub distance: f64,
    pub threshold: f64,
}

#[derive(Debug, Clone)]
pub struct IntersectionResult {
    pub graph: Graph,
    /// Pairs whose distance is within the margin of the threshold. The edge
    /// decision still uses the closed rule (d <= threshold); callers that
    /// care about robustness must inspect this list.
    pub near_ties: Vec<NearTie>,
}

/// The intersection graph: edge iff the closed objects meet
/// (d <= r_i + r_j in ball mode, d <= threshold in point mode).
pub fn intersection_graph(inst: &GeometricInstance) -> Result<IntersectionResult> {
    intersection_graph_with_margin(inst, DEFAULT_MARGIN)
}

pub fn intersection_graph_with_margin(
    inst: &GeometricInstance,
    margin: f64,
) -> Result<IntersectionResult> {
    inst.validate()?;
    let n = inst.len();
    let mut edges = Vec::new();
    let mut near_ties = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance_unchecked(inst.center(i), inst.center(j));
            let thr = inst.pair_threshold(i, j);
            if (d - thr).abs() <= margin {
                near_ties.push(NearTie {
                    i,
                    j,
                    distance: d,
                    threshold: thr,
                });
            }
            if d <= thr {
                edges.push((i, j));
            }
        }
    }
    let mut graph = Graph::from_edge_list(n, &edges)?;
    if let Some(w) = inst.weights() {
        graph = graph.with_weights(w.to_vec())?;
    }
    Ok(IntersectionResult { graph, near_ties })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(x: f64, y: f64) -> Point {
        Point::new(vec![x, y])
    }

    #[test]
    fn unit_disks_edge_and_tangency() {
        let inst = GeometricInstance::balls(
            2,
            vec![
                Ball::new(p2(0.0, 0.0), 1.0),
                Ball::new(p2(1.9, 0.0), 1.0),
            ],
        );
        let g = intersection_graph(&inst).unwrap().graph;
        assert!(g.has_edge(0, 1));

        // tangent closed disks intersect, and the tie is reported
        let inst = GeometricInstance::balls(
            2,
            vec![
                Ball::new(p2(0.0, 0.0), 1.0),
                Ball::new(p2(2.0, 0.0), 1.0),
            ],
        );
        let res = intersection_graph(&inst).unwrap();
        assert!(res.graph.has_edge(0, 1));
        assert_eq!(res.near_ties.len(), 1);
    }

    #[test]
    fn points_in_r3_form_triangle() {
        // mutual distance 0.9 with threshold 1
        let a = 0.9 / f64::sqrt(2.0);
        let pts = vec![
            Point::new(vec![0.0, 0.0, 0.0]),
            Point::new(vec![0.9, 0.0, 0.0]),
            Point::new(vec![0.45, 0.45 * f64::sqrt(3.0), 0.0]),
        ];
        let _ = a;
        let inst = GeometricInstance::points(3, pts, 1.0);
        let g = intersection_graph(&inst).unwrap().graph;
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn distance_basics() {
        let d = distance(&p2(0.0, 0.0), &p2(3.0, 4.0)).unwrap();
        assert_eq!(d, 5.0);
        assert_eq!(distance(&p2(1.0, 2.0), &p2(1.0, 2.0)).unwrap(), 0.0);
        assert!(distance(&p2(0.0, 0.0), &Point::new(vec![1.0])).is_err());
    }

    #[test]
    fn diameter_basics() {
        assert!(diameter(&[]).is_err());
        assert_eq!(diameter(&[p2(1.0, 1.0)]).unwrap(), 0.0);
        let pts = vec![
            Point::new(vec![0.0, 0.0, 0.0]),
            Point::new(vec![1.0, 0.0, 0.0]),
        ];
        assert_eq!(diameter(&pts).unwrap(), 1.0);
    }

    #[test]
    fn point_mode_matches_half_radius_ball_mode() {
        let pts = vec![p2(0.0, 0.0), p2(1.0, 0.5), p2(3.0, 0.0), p2(2.0, 2.0)];
        let tau = 1.7;
        let pa = GeometricInstance::points(2, pts.clone(), tau);
        let ba = GeometricInstance::balls(
            2,
            pts.iter()
                .map(|p| Ball::new(p.clone(), tau / 2.0))
                .collect(),
        );
        let g1 = intersection_graph(&pa).unwrap().graph;
        let g2 = intersection_graph(&ba).unwrap().graph;
        assert!(g1.same_edges(&g2));
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let inst = GeometricInstance::balls(
            2,
            vec![Ball::new(Point::new(vec![0.0, 0.0, 0.0]), 1.0)],
        );
        assert!(intersection_graph(&inst).is_err());
    }
}
