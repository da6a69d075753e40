use std::fmt;

use super::Polyhedron;

/// Recognized combinatorial families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyLabel {
    /// Tetrahedron (4 vertices).
    Simplex,
    /// A (v−1)-gon base plus one apex.
    Pyramid(usize),
    /// A (v−2)-gon girdle plus two apexes.
    Bipyramid(usize),
    /// The icosahedral type: 12 vertices, 20 triangles, every vertex of degree 5.
    Icosahedron,
    Other,
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::Simplex => f.write_str("simplex"),
            FamilyLabel::Pyramid(v) => write!(f, "pyramid-{v}"),
            FamilyLabel::Bipyramid(v) => write!(f, "bipyramid-{v}"),
            FamilyLabel::Icosahedron => f.write_str("icosahedron"),
            FamilyLabel::Other => f.write_str("other"),
        }
    }
}

/// Face-lattice summary of a polyhedron.
///
/// For five vertices the facet-size multiset already determines the type
/// ({3,3,3,3,4} pyramid, {3,3,3,3,3,3} bipyramid). For larger `v` the family
/// detection below is a heuristic, not a lattice isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialType {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub facet_count: usize,
    /// Facet vertex counts, ascending.
    pub facet_size_multiset: Vec<usize>,
    /// Vertex degrees, ascending.
    pub vertex_degree_multiset: Vec<usize>,
    pub label: FamilyLabel,
}

impl CombinatorialType {
    pub fn of(p: &Polyhedron) -> Self {
        let v = p.vertex_count();
        let mut facet_size_multiset: Vec<usize> = p.facets().iter().map(Vec::len).collect();
        facet_size_multiset.sort_unstable();
        let degrees = p.vertex_degrees();
        let mut vertex_degree_multiset = degrees.clone();
        vertex_degree_multiset.sort_unstable();

        let triangles = facet_size_multiset.iter().filter(|&&s| s == 3).count();
        let all_triangles = triangles == facet_size_multiset.len();

        let label = if v == 4 {
            FamilyLabel::Simplex
        } else if p.facet_count() == v
            && triangles == v - 1
            && facet_size_multiset.last() == Some(&(v - 1))
        {
            FamilyLabel::Pyramid(v)
        } else if v >= 5 && all_triangles && p.facet_count() == 2 * (v - 2) && is_bipyramid(p, &degrees) {
            FamilyLabel::Bipyramid(v)
        } else if v == 12 && all_triangles && degrees.iter().all(|&d| d == 5) {
            FamilyLabel::Icosahedron
        } else {
            FamilyLabel::Other
        };

        Self {
            vertex_count: v,
            edge_count: p.edge_count(),
            facet_count: p.facet_count(),
            facet_size_multiset,
            vertex_degree_multiset,
            label,
        }
    }
}

/// Two non-adjacent apexes of degree v−2 joined to every other vertex, which
/// all have degree 4 (two girdle neighbours and both apexes).
fn is_bipyramid(p: &Polyhedron, degrees: &[usize]) -> bool {
    let v = p.vertex_count();
    let edges = p.edges();
    let adjacent = |a: usize, b: usize| edges.binary_search(&(a.min(b), a.max(b))).is_ok();
    let candidates: Vec<usize> = (0..v).filter(|&i| degrees[i] == v - 2).collect();
    for (k, &a) in candidates.iter().enumerate() {
        for &b in &candidates[k + 1..] {
            if adjacent(a, b) {
                continue;
            }
            let girdle_ok = (0..v)
                .filter(|&i| i != a && i != b)
                .all(|i| degrees[i] == 4 && adjacent(i, a) && adjacent(i, b));
            if girdle_ok {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull, Vec3};

    #[test]
    fn labels_render() {
        assert_eq!(FamilyLabel::Bipyramid(5).to_string(), "bipyramid-5");
        assert_eq!(FamilyLabel::Pyramid(5).to_string(), "pyramid-5");
        assert_eq!(FamilyLabel::Other.to_string(), "other");
    }

    #[test]
    fn cube_is_other() {
        let pts: Vec<Vec3> = (0..8)
            .map(|i| {
                let s = |b: usize| if i & b != 0 { 1.0 } else { -1.0 };
                Vec3::new(s(1), s(2), s(4))
            })
            .collect();
        let t = convex_hull(&pts).unwrap().classify();
        assert_eq!(t.label, FamilyLabel::Other);
        assert_eq!(t.facet_count, 6);
        assert_eq!(t.facet_size_multiset, vec![4; 6]);
    }

    #[test]
    fn tetrahedron_is_simplex() {
        let pts = [
            Vec3::new(1.0, 1.0, 1.0),
            Vec3::new(1.0, -1.0, -1.0),
            Vec3::new(-1.0, 1.0, -1.0),
            Vec3::new(-1.0, -1.0, 1.0),
        ];
        assert_eq!(convex_hull(&pts).unwrap().classify().label, FamilyLabel::Simplex);
    }

    #[test]
    fn triangular_prism_is_other() {
        let mut pts = Vec::new();
        for z in [-0.5, 0.5] {
            for k in 0..3 {
                let a = 2.0 * std::f64::consts::PI * k as f64 / 3.0;
                pts.push(Vec3::new(a.cos(), a.sin(), z));
            }
        }
        let t = convex_hull(&pts).unwrap().classify();
        assert_eq!(t.label, FamilyLabel::Other);
        assert_eq!(t.facet_size_multiset, vec![3, 3, 4, 4, 4]);
    }

    #[test]
    fn pentagonal_pyramid() {
        let mut pts = vec![Vec3::new(0.0, 0.0, 1.0)];
        for k in 0..5 {
            let a = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
            pts.push(Vec3::new(a.cos(), a.sin(), -0.2));
        }
        assert_eq!(convex_hull(&pts).unwrap().classify().label, FamilyLabel::Pyramid(6));
    }
}
