//! Incremental 3D convex hull.
//!
//! Points are inserted one at a time (beneath-beyond). A point is beyond a
//! triangle when the orientation determinant `((b−a)×(c−a))·(p−a)` exceeds
//! [`ORIENT_EPS`]. The visible region is grown by flood fill from the most
//! visible triangle and replaced by a cone of new triangles over its horizon.
//! Coplanar neighbouring triangles are merged into polygonal facets at the end.

use std::collections::HashMap;

use super::{polyhedron::Polyhedron, GeomError, Vec3};

/// Orientation determinant threshold. Inputs have unit magnitude, so an
/// absolute threshold is meaningful.
pub const ORIENT_EPS: f64 = 1e-10;

/// Adjacent triangles whose unit normals differ by less than this angle (rad)
/// are merged into one facet.
pub const MERGE_ANGLE: f64 = 1e-8;

/// Points closer than this are duplicates.
pub const DUPLICATE_DIST: f64 = 1e-10;

#[derive(Clone, Debug)]
struct Tri {
    v: [usize; 3],
    normal: Vec3,
    alive: bool,
}

/// Triangulated hull: every hull facet split into triangles, indices refer to
/// the input slice.
#[derive(Clone, Debug)]
pub(crate) struct TriangulatedHull<'a> {
    points: &'a [Vec3],
    tris: Vec<Tri>,
    edges: HashMap<(usize, usize), usize>,
}

impl<'a> TriangulatedHull<'a> {
    pub(crate) fn build(points: &'a [Vec3]) -> Result<Self, GeomError> {
        let n = points.len();
        if n < 4 {
            return Err(GeomError::TooFewPoints(n));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        for i in 0..n {
            for j in i + 1..n {
                if points[i].distance(points[j]) < DUPLICATE_DIST {
                    return Err(GeomError::Coincident(i, j));
                }
            }
        }

        let seed = initial_simplex(points)?;
        let mut hull = TriangulatedHull {
            points,
            tris: Vec::with_capacity(4 * n),
            edges: HashMap::with_capacity(6 * n),
        };
        let [a, b, c, d] = seed;
        // Orient so that d lies below face (a, b, c).
        let (b, c) = if orient(points[a], points[b], points[c], points[d]) > 0.0 {
            (c, b)
        } else {
            (b, c)
        };
        for tri in [[a, b, c], [a, d, b], [b, d, c], [c, d, a]] {
            hull.push(tri)?;
        }

        let mut visible: Vec<bool> = Vec::new();
        let mut stack = Vec::new();
        let mut horizon = Vec::new();
        for p in (0..n).filter(|i| !seed.contains(i)) {
            let q = points[p];
            let (start, best) = hull
                .tris
                .iter()
                .enumerate()
                .filter(|(_, t)| t.alive)
                .map(|(i, t)| (i, t.normal.dot(q - points[t.v[0]])))
                .fold((usize::MAX, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best <= ORIENT_EPS {
                continue;
            }

            visible.clear();
            visible.resize(hull.tris.len(), false);
            visible[start] = true;
            stack.push(start);
            let mut region = Vec::new();
            while let Some(t) = stack.pop() {
                region.push(t);
                for (u, w) in tri_edges(hull.tris[t].v) {
                    let g = hull.edges[&(w, u)];
                    if !visible[g] && hull.height(g, q) > ORIENT_EPS {
                        visible[g] = true;
                        stack.push(g);
                    }
                }
            }

            horizon.clear();
            for &t in &region {
                for (u, w) in tri_edges(hull.tris[t].v) {
                    if !visible[hull.edges[&(w, u)]] {
                        horizon.push((u, w));
                    }
                }
            }
            for &t in &region {
                hull.tris[t].alive = false;
                for e in tri_edges(hull.tris[t].v) {
                    hull.edges.remove(&e);
                }
            }
            for &(u, w) in &horizon {
                hull.push([u, w, p])?;
            }
        }
        Ok(hull)
    }

    fn push(&mut self, v: [usize; 3]) -> Result<(), GeomError> {
        let [a, b, c] = v.map(|i| self.points[i]);
        let id = self.tris.len();
        for e in tri_edges(v) {
            if self.edges.insert(e, id).is_some() {
                return Err(GeomError::NumericalFailure);
            }
        }
        self.tris.push(Tri {
            v,
            normal: (b - a).cross(c - a),
            alive: true,
        });
        Ok(())
    }

    fn height(&self, t: usize, q: Vec3) -> f64 {
        let tri = &self.tris[t];
        tri.normal.dot(q - self.points[tri.v[0]])
    }

    fn alive(&self) -> impl Iterator<Item = &Tri> {
        self.tris.iter().filter(|t| t.alive)
    }

    pub(crate) fn surface_area(&self) -> f64 {
        self.alive().map(|t| t.normal.norm()).sum::<f64>() / 2.0
    }

    pub(crate) fn volume(&self) -> f64 {
        self.alive()
            .map(|t| {
                let [a, b, c] = t.v.map(|i| self.points[i]);
                a.dot(b.cross(c))
            })
            .sum::<f64>()
            / 6.0
    }

    /// Triangles as index triples into the input, outward oriented.
    pub(crate) fn triangles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.alive().map(|t| t.v)
    }

    /// Merge coplanar neighbours into polygonal facets and drop unused points.
    pub(crate) fn into_polyhedron(self) -> Result<Polyhedron, GeomError> {
        let ids: Vec<usize> = (0..self.tris.len()).filter(|&i| self.tris[i].alive).collect();
        let mut slot = vec![usize::MAX; self.tris.len()];
        for (k, &i) in ids.iter().enumerate() {
            slot[i] = k;
        }
        let units: Vec<Vec3> = ids
            .iter()
            .map(|&i| self.tris[i].normal.normalized().unwrap_or(Vec3::ZERO))
            .collect();

        let mut groups = UnionFind::new(ids.len());
        for (k, &i) in ids.iter().enumerate() {
            for (u, w) in tri_edges(self.tris[i].v) {
                let other = slot[self.edges[&(w, u)]];
                let (n1, n2) = (units[k], units[other]);
                if n1.cross(n2).norm().atan2(n1.dot(n2)) < MERGE_ANGLE {
                    groups.union(k, other);
                }
            }
        }

        // Boundary of each group, as a successor map on directed edges.
        let mut boundary: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for (k, &i) in ids.iter().enumerate() {
            let root = groups.find(k);
            for (u, w) in tri_edges(self.tris[i].v) {
                if groups.find(slot[self.edges[&(w, u)]]) != root {
                    boundary.entry(root).or_default().push((u, w));
                }
            }
        }

        let mut roots: Vec<usize> = boundary.keys().copied().collect();
        roots.sort_unstable();
        let mut facets = Vec::with_capacity(roots.len());
        for root in roots {
            let edges = &boundary[&root];
            let next: HashMap<usize, usize> = edges.iter().copied().collect();
            if next.len() != edges.len() {
                return Err(GeomError::NumericalFailure);
            }
            let start = *next.keys().min().expect("non-empty boundary");
            let mut cycle = vec![start];
            let mut cur = next[&start];
            while cur != start {
                if cycle.len() > edges.len() {
                    return Err(GeomError::NumericalFailure);
                }
                cycle.push(cur);
                cur = *next.get(&cur).ok_or(GeomError::NumericalFailure)?;
            }
            if cycle.len() != edges.len() {
                // Pinched or multiply connected group.
                return Err(GeomError::NumericalFailure);
            }
            facets.push(drop_collinear(cycle, self.points));
        }
        if facets.iter().any(|f| f.len() < 3) {
            return Err(GeomError::NumericalFailure);
        }

        // Keep referenced vertices in input order.
        let mut used = vec![false; self.points.len()];
        for &i in facets.iter().flatten() {
            used[i] = true;
        }
        let mut remap = vec![usize::MAX; self.points.len()];
        let mut vertices = Vec::new();
        for (i, &u) in used.iter().enumerate() {
            if u {
                remap[i] = vertices.len();
                vertices.push(self.points[i]);
            }
        }
        for f in &mut facets {
            for i in f.iter_mut() {
                *i = remap[*i];
            }
        }

        let mut poly = Polyhedron::from_facets(vertices, facets)
            .map_err(|_| GeomError::NumericalFailure)?;
        canonicalize_orientation(&mut poly);
        Ok(poly)
    }
}

/// Convex hull of a point set, with coplanar triangles merged into polygonal facets.
///
/// The returned vertex list holds the extreme points in input order.
pub fn convex_hull(points: &[Vec3]) -> Result<Polyhedron, GeomError> {
    TriangulatedHull::build(points)?.into_polyhedron()
}

/// Surface area and volume of the hull without assembling facet cycles.
pub fn hull_measures(points: &[Vec3]) -> Result<(f64, f64), GeomError> {
    let hull = TriangulatedHull::build(points)?;
    Ok((hull.surface_area(), hull.volume()))
}

fn orient(a: Vec3, b: Vec3, c: Vec3, p: Vec3) -> f64 {
    (b - a).cross(c - a).dot(p - a)
}

fn tri_edges([a, b, c]: [usize; 3]) -> [(usize, usize); 3] {
    [(a, b), (b, c), (c, a)]
}

fn initial_simplex(points: &[Vec3]) -> Result<[usize; 4], GeomError> {
    let argmax = |score: &dyn Fn(Vec3) -> f64| {
        points
            .iter()
            .enumerate()
            .map(|(i, &p)| (i, score(p)))
            .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc })
    };
    let a = 0;
    let (b, _) = argmax(&|p| p.distance(points[a]));
    let ab = points[b] - points[a];
    let (c, area2) = argmax(&|p| ab.cross(p - points[a]).norm());
    if area2 < ORIENT_EPS {
        return Err(GeomError::Collinear);
    }
    let (d, vol6) = argmax(&|p| orient(points[a], points[b], points[c], p).abs());
    if vol6 <= ORIENT_EPS {
        return Err(GeomError::Coplanar);
    }
    Ok([a, b, c, d])
}

fn drop_collinear(mut cycle: Vec<usize>, pts: &[Vec3]) -> Vec<usize> {
    loop {
        let n = cycle.len();
        if n <= 3 {
            return cycle;
        }
        let pos = (0..n).find(|&i| {
            let a = pts[cycle[(i + n - 1) % n]];
            let b = pts[cycle[i]];
            let c = pts[cycle[(i + 1) % n]];
            let (u, w) = (b - a, c - b);
            u.cross(w).norm() <= 1e-10 * u.norm() * w.norm() && u.dot(w) > 0.0
        });
        match pos {
            Some(i) => {
                cycle.remove(i);
            }
            None => return cycle,
        }
    }
}

/// Reverse any facet whose normal points toward the hull centroid.
fn canonicalize_orientation(poly: &mut Polyhedron) {
    let verts = poly.vertices();
    let centroid = verts.iter().fold(Vec3::ZERO, |a, &p| a + p) / verts.len() as f64;
    let flip: Vec<bool> = (0..poly.facet_count())
        .map(|i| poly.facet_normal(i).dot(poly.facet_centroid(i) - centroid) < 0.0)
        .collect();
    if flip.iter().any(|&f| f) {
        let facets = poly
            .facets()
            .iter()
            .zip(&flip)
            .map(|(f, &rev)| {
                let mut f = f.clone();
                if rev {
                    f.reverse();
                }
                f
            })
            .collect();
        *poly = Polyhedron::from_facets(poly.vertices().to_vec(), facets)
            .expect("reversal of a whole facet set keeps it closed");
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
