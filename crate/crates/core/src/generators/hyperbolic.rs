//! Random hyperbolic graphs: points on a hyperbolic disk, an edge whenever
//! two points lie within the disk radius of each other, and a polar
//! quadtree that answers the range queries.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::substream;
use rand::Rng;
use rayon::prelude::*;
use std::f64::consts::PI;

const TAU: f64 = 2.0 * PI;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarPoint {
    /// Angle in [0, 2π).
    pub angle: f64,
    /// Radial coordinate in [0, disk radius].
    pub radius: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct HyperbolicParams {
    pub n: u64,
    /// Disk radius; also the connection threshold.
    pub radius: f64,
    /// Radial dispersion; larger values push mass toward the rim and thin
    /// the degree tail.
    pub alpha: f64,
    pub seed: u64,
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % TAU;
    d.min(TAU - d)
}

/// Distance on the hyperbolic plane between two polar points:
/// `cosh d = cosh r₁ cosh r₂ - sinh r₁ sinh r₂ cos Δθ`.
pub fn hyperbolic_distance(a: &PolarPoint, b: &PolarPoint) -> f64 {
    let dt = angle_gap(a.angle, b.angle);
    let arg = a.radius.cosh() * b.radius.cosh() - a.radius.sinh() * b.radius.sinh() * dt.cos();
    arg.max(1.0).acosh()
}

fn check_params(p: &HyperbolicParams) -> Result<()> {
    if !(p.radius > 0.0) || !p.radius.is_finite() {
        return Err(Error::bad_param("radius must be positive and finite"));
    }
    if !(p.alpha > 0.0) || !p.alpha.is_finite() {
        return Err(Error::bad_param("alpha must be positive and finite"));
    }
    if p.alpha * p.radius > 700.0 {
        return Err(Error::bad_param("alpha * radius too large (cosh overflow)"));
    }
    Ok(())
}

/// Seeded point sample: angles uniform, radii by inverting the CDF
/// `F(r) = (cosh(αr) - 1) / (cosh(αR) - 1)`. Point v comes from substream
/// v, so the sample is independent of worker count.
pub fn sample_hyperbolic_points(params: &HyperbolicParams) -> Result<Vec<PolarPoint>> {
    check_params(params)?;
    let span = (params.alpha * params.radius).cosh() - 1.0;
    Ok((0..params.n)
        .into_par_iter()
        .map(|v| {
            let mut rng = substream(params.seed, v);
            let angle = rng.gen::<f64>() * TAU;
            let radius = (1.0 + rng.gen::<f64>() * span).acosh() / params.alpha;
            PolarPoint { angle, radius }
        })
        .collect())
}

const LEAF_CAPACITY: usize = 128;
const MAX_DEPTH: u32 = 40;
/// Slack on the cell lower bound so border points are never pruned by a
/// few ulps of rounding.
const RANGE_EPS: f64 = 1e-9;

struct Cell {
    theta: (f64, f64),
    r: (f64, f64),
    points: Vec<(u64, PolarPoint)>,
    children: Option<Box<[Cell; 4]>>,
    depth: u32,
}

impl Cell {
    fn new(theta: (f64, f64), r: (f64, f64), depth: u32) -> Self {
        Cell {
            theta,
            r,
            points: Vec::new(),
            children: None,
            depth,
        }
    }

    fn split_radius(&self, alpha: f64) -> f64 {
        // Radius at which the two radial halves carry equal expected mass
        // under the cosh-shaped radial density.
        let c = ((self.r.0 * alpha).cosh() + (self.r.1 * alpha).cosh()) / 2.0;
        c.max(1.0).acosh() / alpha
    }

    fn insert(&mut self, id: u64, p: PolarPoint, alpha: f64) {
        let tm = (self.theta.0 + self.theta.1) / 2.0;
        if let Some(children) = &mut self.children {
            let rm = children[2].r.0;
            let idx = (p.angle >= tm) as usize + 2 * (p.radius >= rm) as usize;
            children[idx].insert(id, p, alpha);
            return;
        }
        self.points.push((id, p));
        if self.points.len() > LEAF_CAPACITY && self.depth < MAX_DEPTH {
            let rm = self.split_radius(alpha);
            let mut children = Box::new([
                Cell::new((self.theta.0, tm), (self.r.0, rm), self.depth + 1),
                Cell::new((tm, self.theta.1), (self.r.0, rm), self.depth + 1),
                Cell::new((self.theta.0, tm), (rm, self.r.1), self.depth + 1),
                Cell::new((tm, self.theta.1), (rm, self.r.1), self.depth + 1),
            ]);
            for (id, p) in self.points.drain(..) {
                let idx = (p.angle >= tm) as usize + 2 * (p.radius >= rm) as usize;
                children[idx].points.push((id, p));
            }
            self.children = Some(children);
        }
    }

    /// Lower bound on the distance from `q` to any point of this cell.
    fn min_distance(&self, q: &PolarPoint) -> f64 {
        let dt = if q.angle >= self.theta.0 && q.angle < self.theta.1 {
            0.0
        } else {
            angle_gap(q.angle, self.theta.0).min(angle_gap(q.angle, self.theta.1))
        };
        let cos_dt = dt.cos();
        let r_star = (q.radius.tanh() * cos_dt).atanh();
        let r = r_star.clamp(self.r.0, self.r.1);
        let arg = q.radius.cosh() * r.cosh() - q.radius.sinh() * r.sinh() * cos_dt;
        arg.max(1.0).acosh()
    }

    fn query(&self, q: &PolarPoint, dist: f64, out: &mut Vec<u64>) {
        if self.min_distance(q) > dist + RANGE_EPS {
            return;
        }
        match &self.children {
            Some(children) => {
                for c in children.iter() {
                    c.query(q, dist, out);
                }
            }
            None => {
                for (id, p) in &self.points {
                    if hyperbolic_distance(q, p) <= dist {
                        out.push(*id);
                    }
                }
            }
        }
    }
}

/// Point index over the hyperbolic disk with exact range queries. Cells
/// split at the angular midpoint and at the equal-mass radius, so the tree
/// stays balanced under the rim-heavy radial distribution.
pub struct PolarQuadtree {
    root: Cell,
    disk_radius: f64,
    alpha: f64,
    len: usize,
}

impl PolarQuadtree {
    pub fn new(disk_radius: f64, alpha: f64) -> Result<Self> {
        if !(disk_radius > 0.0) || !(alpha > 0.0) {
            return Err(Error::bad_param("disk_radius and alpha must be positive"));
        }
        Ok(PolarQuadtree {
            root: Cell::new((0.0, TAU), (0.0, disk_radius), 0),
            disk_radius,
            alpha,
            len: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn insert(&mut self, id: u64, p: PolarPoint) -> Result<()> {
        if !(0.0..TAU).contains(&p.angle) || p.radius < 0.0 || p.radius > self.disk_radius {
            return Err(Error::bad_param("point outside the disk"));
        }
        self.root.insert(id, p, self.alpha);
        self.len += 1;
        Ok(())
    }

    /// Ids of all points within hyperbolic distance `dist` of `q`,
    /// ascending.
    pub fn range_query(&self, q: &PolarPoint, dist: f64) -> Result<Vec<u64>> {
        if !(0.0..TAU).contains(&q.angle) || q.radius < 0.0 || q.radius > self.disk_radius {
            return Err(Error::bad_param("query point outside the disk"));
        }
        if !(dist >= 0.0) {
            return Err(Error::bad_param("distance must be >= 0"));
        }
        let mut out = Vec::new();
        self.root.query(q, dist, &mut out);
        out.sort_unstable();
        Ok(out)
    }
}

/// Graph over explicit points: edge (u, v) iff their hyperbolic distance is
/// at most `threshold`. Every point must lie inside the disk of that
/// radius. Node rows fan out to workers; output is independent of the
/// worker count.
pub fn gen_hyperbolic_from_points(points: &[PolarPoint], threshold: f64) -> Result<Graph> {
    let mut tree = PolarQuadtree::new(threshold, 1.0)?;
    for (v, p) in points.iter().enumerate() {
        tree.insert(v as u64, *p)?;
    }
    let rows: Vec<Vec<(NodeId, NodeId)>> = points
        .par_iter()
        .enumerate()
        .map(|(v, p)| {
            let hits = tree.range_query(p, threshold).expect("validated point");
            hits.into_iter()
                .filter(|&u| u > v as u64)
                .map(|u| (v as u64, u))
                .collect()
        })
        .collect();
    let edges: Vec<(NodeId, NodeId)> = rows.into_iter().flatten().collect();
    Graph::from_edges(points.len() as u64, &edges)
}

/// Random hyperbolic graph: sample points, connect all pairs within
/// `params.radius`.
pub fn gen_hyperbolic(params: &HyperbolicParams) -> Result<Graph> {
    let points = sample_hyperbolic_points(params)?;
    let mut tree = PolarQuadtree::new(params.radius, params.alpha)?;
    for (v, p) in points.iter().enumerate() {
        tree.insert(v as u64, *p)?;
    }
    let rows: Vec<Vec<(NodeId, NodeId)>> = points
        .par_iter()
        .enumerate()
        .map(|(v, p)| {
            let hits = tree.range_query(p, params.radius).expect("validated point");
            hits.into_iter()
                .filter(|&u| u > v as u64)
                .map(|u| (v as u64, u))
                .collect()
        })
        .collect();
    let edges: Vec<(NodeId, NodeId)> = rows.into_iter().flatten().collect();
    Graph::from_edges(params.n, &edges)
}

/// Disk radius at which the model's expected average degree hits `target`,
/// found by bisection over Monte-Carlo estimates that reuse one fixed set
/// of uniform draws (so the estimate is monotone in R and the search is
/// stable). Deterministic given the seed.
pub fn radius_for_expected_degree(n: u64, alpha: f64, target: f64, seed: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::bad_param("need n >= 2"));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::bad_param("alpha must be positive and finite"));
    }
    if !(target > 0.0) || target >= (n - 1) as f64 {
        return Err(Error::bad_param("target degree must lie in (0, n-1)"));
    }

    const PAIRS: usize = 60_000;
    let mut rng = substream(seed, 0);
    let draws: Vec<(f64, f64, f64, f64)> = (0..PAIRS)
        .map(|_| (rng.gen(), rng.gen(), rng.gen(), rng.gen()))
        .collect();

    let estimate = |radius: f64| -> f64 {
        let span = (alpha * radius).cosh() - 1.0;
        let mut hits = 0usize;
        for &(ua, ur, va, vr) in &draws {
            let p = PolarPoint {
                angle: ua * TAU,
                radius: (1.0 + ur * span).acosh() / alpha,
            };
            let q = PolarPoint {
                angle: va * TAU,
                radius: (1.0 + vr * span).acosh() / alpha,
            };
            if hyperbolic_distance(&p, &q) <= radius {
                hits += 1;
            }
        }
        hits as f64 / PAIRS as f64 * (n - 1) as f64
    };

    // Small disks are dense (everything is near the origin and the
    // threshold covers the whole disk); growing the disk pushes points
    // apart faster than it relaxes the threshold, so expected degree
    // falls as the radius grows.
    let mut lo = 1e-3;
    let mut hi = 2.0 * (n as f64).ln() + 20.0;
    if alpha * hi > 700.0 {
        hi = 700.0 / alpha;
    }
    if estimate(hi) > target {
        return Ok(hi);
    }
    if estimate(lo) < target {
        return Ok(lo);
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if estimate(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_is_zero_for_coincident_points() {
        let p = PolarPoint {
            angle: 1.0,
            radius: 3.0,
        };
        assert_eq!(hyperbolic_distance(&p, &p), 0.0);
    }

    #[test]
    fn distance_is_symmetric_and_triangleish() {
        let a = PolarPoint { angle: 0.3, radius: 2.0 };
        let b = PolarPoint { angle: 4.0, radius: 5.0 };
        let c = PolarPoint { angle: 2.0, radius: 1.0 };
        assert!((hyperbolic_distance(&a, &b) - hyperbolic_distance(&b, &a)).abs() < 1e-12);
        assert!(
            hyperbolic_distance(&a, &b)
                <= hyperbolic_distance(&a, &c) + hyperbolic_distance(&c, &b) + 1e-9
        );
    }

    #[test]
    fn radial_points_differ_by_radius_gap() {
        let a = PolarPoint { angle: 1.0, radius: 1.5 };
        let b = PolarPoint { angle: 1.0, radius: 4.0 };
        assert!((hyperbolic_distance(&a, &b) - 2.5).abs() < 1e-9);
    }

    #[test]
    fn two_coincident_points_connect() {
        let p = PolarPoint { angle: 0.0, radius: 0.0 };
        let g = gen_hyperbolic_from_points(&[p, p], 5.0).unwrap();
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn quadtree_query_matches_scan() {
        let params = HyperbolicParams {
            n: 600,
            radius: 8.0,
            alpha: 0.9,
            seed: 12,
        };
        let points = sample_hyperbolic_points(&params).unwrap();
        let mut tree = PolarQuadtree::new(params.radius, params.alpha).unwrap();
        for (v, p) in points.iter().enumerate() {
            tree.insert(v as u64, *p).unwrap();
        }
        for (qi, q) in points.iter().enumerate().step_by(37) {
            let fast = tree.range_query(q, params.radius).unwrap();
            let mut slow: Vec<u64> = points
                .iter()
                .enumerate()
                .filter(|(_, p)| hyperbolic_distance(q, p) <= params.radius)
                .map(|(i, _)| i as u64)
                .collect();
            slow.sort_unstable();
            assert_eq!(fast, slow, "query point {qi}");
        }
    }

    #[test]
    fn every_point_lands_in_exactly_one_leaf() {
        let params = HyperbolicParams {
            n: 500,
            radius: 6.0,
            alpha: 1.0,
            seed: 3,
        };
        let points = sample_hyperbolic_points(&params).unwrap();
        let mut tree = PolarQuadtree::new(params.radius, params.alpha).unwrap();
        for (v, p) in points.iter().enumerate() {
            tree.insert(v as u64, *p).unwrap();
        }
        fn count_holding_leaves(cell: &Cell, id: u64) -> usize {
            match &cell.children {
                Some(children) => children.iter().map(|c| count_holding_leaves(c, id)).sum(),
                None => cell.points.iter().filter(|(pid, _)| *pid == id).count(),
            }
        }
        for v in 0..points.len() as u64 {
            assert_eq!(count_holding_leaves(&tree.root, v), 1, "point {v}");
        }
    }

    #[test]
    fn quadtree_rejects_points_outside_disk() {
        let mut tree = PolarQuadtree::new(5.0, 1.0).unwrap();
        assert!(tree
            .insert(0, PolarPoint { angle: 0.5, radius: 6.0 })
            .is_err());
        assert!(tree
            .insert(0, PolarPoint { angle: -0.5, radius: 1.0 })
            .is_err());
        tree.insert(0, PolarPoint { angle: 0.5, radius: 5.0 }).unwrap();
        assert!(tree
            .range_query(&PolarPoint { angle: 0.0, radius: 9.0 }, 1.0)
            .is_err());
    }

    #[test]
    fn generation_is_seed_deterministic() {
        let params = HyperbolicParams {
            n: 300,
            radius: 7.0,
            alpha: 0.8,
            seed: 21,
        };
        let a = gen_hyperbolic(&params).unwrap();
        let b = gen_hyperbolic(&params).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }

    #[test]
    fn radius_search_hits_target_degree() {
        let n = 2000;
        let target = 12.0;
        let r = radius_for_expected_degree(n, 0.75, target, 4).unwrap();
        let g = gen_hyperbolic(&HyperbolicParams {
            n,
            radius: r,
            alpha: 0.75,
            seed: 99,
        })
        .unwrap();
        let avg = 2.0 * g.m() as f64 / n as f64;
        assert!(
            (avg - target).abs() < 0.35 * target,
            "avg degree {avg} vs target {target} (r = {r})"
        );
    }

    #[test]
    fn sample_points_respect_disk() {
        let params = HyperbolicParams {
            n: 1000,
            radius: 9.0,
            alpha: 1.1,
            seed: 8,
        };
        for p in sample_hyperbolic_points(&params).unwrap() {
            assert!((0.0..TAU).contains(&p.angle));
            assert!(p.radius >= 0.0 && p.radius <= 9.0 + 1e-12);
        }
    }
}
