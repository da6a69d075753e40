use std::collections::{BTreeSet, HashMap};

use super::{classify::CombinatorialType, GeomError, Rotation, Vec3};

/// A bounded convex polyhedron given by its vertices and facet cycles.
///
/// Each facet is a cycle of vertex indices, counterclockwise when seen from
/// outside, so the Newell normal of every cycle points outward.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyhedron {
    vertices: Vec<Vec3>,
    facets: Vec<Vec<usize>>,
}

impl Polyhedron {
    /// Assemble a polyhedron from explicit facet cycles.
    ///
    /// Checks that indices are in range, that every facet has at least three
    /// vertices and that every directed edge is matched by exactly one reversed
    /// edge in a different facet (closed, consistently oriented surface).
    pub fn from_facets(vertices: Vec<Vec3>, facets: Vec<Vec<usize>>) -> Result<Self, GeomError> {
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for (fi, facet) in facets.iter().enumerate() {
            if facet.len() < 3 {
                return Err(GeomError::MalformedFacets(format!("facet {fi} has {} vertices", facet.len())));
            }
            for (a, b) in cycle_edges(facet) {
                if a >= vertices.len() || b >= vertices.len() {
                    return Err(GeomError::MalformedFacets(format!("facet {fi} indexes a missing vertex")));
                }
                if directed.insert((a, b), fi).is_some() {
                    return Err(GeomError::MalformedFacets(format!("edge ({a}, {b}) is used twice")));
                }
            }
        }
        for (&(a, b), &fi) in &directed {
            match directed.get(&(b, a)) {
                Some(&fj) if fj != fi => {}
                _ => return Err(GeomError::MalformedFacets(format!("edge ({a}, {b}) has no twin"))),
            }
        }
        Ok(Self { vertices, facets })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Undirected edges as `(low, high)` index pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let set: BTreeSet<(usize, usize)> = self
            .facets
            .iter()
            .flat_map(|f| cycle_edges(f))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        set.into_iter().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.facets.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `v − e + f`; equals 2 for every valid polyhedron.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.facet_count() as i64
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for (a, b) in self.edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Newell vector of a facet: outward normal scaled by twice the facet area.
    fn newell(&self, facet: usize) -> Vec3 {
        let f = &self.facets[facet];
        let mut n = Vec3::ZERO;
        for (a, b) in cycle_edges(f) {
            let (p, q) = (self.vertices[a], self.vertices[b]);
            n += Vec3::new(
                (p.y - q.y) * (p.z + q.z),
                (p.z - q.z) * (p.x + q.x),
                (p.x - q.x) * (p.y + q.y),
            );
        }
        n
    }

    /// Unit outward normal of a facet.
    pub fn facet_normal(&self, facet: usize) -> Vec3 {
        self.newell(facet).normalized().unwrap_or(Vec3::ZERO)
    }

    pub fn facet_centroid(&self, facet: usize) -> Vec3 {
        let f = &self.facets[facet];
        f.iter().fold(Vec3::ZERO, |acc, &i| acc + self.vertices[i]) / f.len() as f64
    }

    /// Polygon area by fan triangulation from the first vertex of the cycle.
    pub fn facet_area(&self, facet: usize) -> f64 {
        let f = &self.facets[facet];
        let p0 = self.vertices[f[0]];
        f.windows(2)
            .skip(1)
            .map(|w| (self.vertices[w[0]] - p0).cross(self.vertices[w[1]] - p0).norm())
            .sum::<f64>()
            / 2.0
    }

    pub fn surface_area(&self) -> f64 {
        (0..self.facets.len()).map(|i| self.facet_area(i)).sum()
    }

    /// Enclosed volume as the sum of signed tetrahedra from the origin over a fan
    /// triangulation of each facet. Independent of where the origin lies.
    pub fn volume(&self) -> f64 {
        let mut six_v = 0.0;
        for f in &self.facets {
            let p0 = self.vertices[f[0]];
            for w in f.windows(2).skip(1) {
                six_v += p0.dot(self.vertices[w[0]].cross(self.vertices[w[1]]));
            }
        }
        six_v / 6.0
    }

    /// Largest distance of a facet vertex from its facet's best-fit plane.
    pub fn max_planarity_error(&self) -> f64 {
        (0..self.facets.len())
            .map(|i| {
                let n = self.facet_normal(i);
                let c = self.facet_centroid(i);
                self.facets[i]
                    .iter()
                    .map(|&j| (self.vertices[j] - c).dot(n).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// True when every undirected edge borders exactly two facets.
    pub fn is_closed(&self) -> bool {
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for f in &self.facets {
            for (a, b) in cycle_edges(f) {
                *count.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        count.values().all(|&c| c == 2)
    }

    pub fn classify(&self) -> CombinatorialType {
        CombinatorialType::of(self)
    }

    pub fn rotated(&self, r: &Rotation) -> Polyhedron {
        Polyhedron {
            vertices: self.vertices.iter().map(|&p| r.apply(p)).collect(),
            facets: self.facets.clone(),
        }
    }
}

/// Directed edges `(f[i], f[i+1])` of a cycle, wrapping around.
pub(crate) fn cycle_edges(f: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    f.iter().zip(f.iter().cycle().skip(1)).map(|(&a, &b)| (a, b))
}
