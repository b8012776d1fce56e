//! Constructions: symmetric edge polytopes and their duals, the wedge
//! over a facet, and a catalog of named polytopes.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact::Int;
use crate::geometry::{delete_coordinate, Polytope};
use crate::io::parse_polydb_record;
use crate::unimodular::is_facet_unimodular;

/// A simple undirected graph on vertices `1..=n`: no loops, no duplicate
/// edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates and normalizes an edge list. Edges are stored with the
    /// smaller endpoint first, in input order.
    pub fn new(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n_vertices == 0 {
            return Err(Error::BadGraph("graph needs at least one vertex".into()));
        }
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(i, j) in edges {
            if i == j {
                return Err(Error::BadGraph(format!("loop at vertex {i}")));
            }
            if !(1..=n_vertices).contains(&i) || !(1..=n_vertices).contains(&j) {
                return Err(Error::BadGraph(format!(
                    "edge ({i}, {j}) out of range for {n_vertices} vertices"
                )));
            }
            let e = (i.min(j), i.max(j));
            if !seen.insert(e) {
                return Err(Error::BadGraph(format!(
                    "duplicate edge ({}, {})",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        Ok(Graph {
            n_vertices,
            edges: normalized,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Breadth-first search from vertex 1 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut adjacent = vec![Vec::new(); self.n_vertices + 1];
        for &(i, j) in &self.edges {
            adjacent[i].push(j);
            adjacent[j].push(i);
        }
        let mut visited = vec![false; self.n_vertices + 1];
        let mut queue = vec![1];
        visited[1] = true;
        while let Some(u) = queue.pop() {
            for &v in &adjacent[u] {
                if !visited[v] {
                    visited[v] = true;
                    queue.push(v);
                }
            }
        }
        visited[1..].iter().all(|&v| v)
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Graph::new(n, &edges).expect("complete graphs are valid")
    }

    /// The path 1–2–⋯–n.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("paths are valid")
    }

    /// The cycle 1–2–⋯–n–1; requires `n ≥ 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::new(n, &edges).expect("cycles are valid")
    }
}

/// Every connected graph on vertices `1..=n` with at least one edge,
/// enumerated by edge subsets in a fixed order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let all_edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 1u64..(1 << all_edges.len()) {
        let edges: Vec<(usize, usize)> = all_edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let g = Graph::new(n, &edges).expect("subsets of the complete graph are valid");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// The symmetric edge polytope of `g`: the convex hull of `±(e_i − e_j)`
/// over the edges `ij`, with the last coordinate dropped to make it
/// full-dimensional.
///
/// Requires at least one edge and a connected graph (otherwise the
/// projection is not full-dimensional).
pub fn sep(g: &Graph) -> Result<Polytope> {
    if g.edges.is_empty() {
        return Err(Error::BadGraph("graph has no edges".into()));
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = g.n_vertices;
    let mut points = Vec::with_capacity(2 * g.edges.len());
    for &(i, j) in &g.edges {
        let mut v = vec![Int::from(0); n];
        v[i - 1] = Int::from(1);
        v[j - 1] = Int::from(-1);
        points.push(v.clone());
        for c in &mut v {
            *c = -&*c;
        }
        points.push(v);
    }
    Polytope::from_lattice_points(&delete_coordinate(&points, n - 1))
}

/// The dual of the symmetric edge polytope of `g`.
///
/// Symmetric edge polytopes of connected graphs are reflexive, so the
/// dual is again a lattice polytope and is facet unimodular; both facts
/// are asserted rather than returned as errors, since a failure would be
/// a bug in the construction, not bad input.
pub fn sep_dual(g: &Graph) -> Result<Polytope> {
    let s = sep(g)?;
    let d = s.dual()?;
    assert!(
        d.is_lattice(),
        "dual of a symmetric edge polytope must be a lattice polytope"
    );
    assert!(
        is_facet_unimodular(&d),
        "dual of a symmetric edge polytope must be facet unimodular"
    );
    Ok(d)
}

/// The wedge of `p` over its facet `f(x) ≤ b` (index `facet`): the
/// polytope `{(x, t) : x ∈ p, t ≥ −1, f(x) + t ≤ b − 1}` in one
/// dimension higher.
pub fn wedge(p: &Polytope, facet: usize) -> Result<Polytope> {
    if facet >= p.n_facets() {
        return Err(Error::NoSuchFacet {
            index: facet,
            count: p.n_facets(),
        });
    }
    let dim = p.dim();
    let mut normals: Vec<Vec<Int>> = Vec::with_capacity(p.n_facets() + 2);
    let mut rhs: Vec<Int> = Vec::with_capacity(p.n_facets() + 2);
    for (a, b) in p.normals().iter().zip(p.rhs()) {
        let mut row = a.clone();
        row.push(Int::from(0));
        normals.push(row);
        rhs.push(b.clone());
    }
    // t ≥ −1.
    let mut t_row = vec![Int::from(0); dim];
    t_row.push(Int::from(1));
    normals.push(t_row);
    rhs.push(Int::from(-1));
    // f(x) + t ≤ b − 1 for the ≤-form (f, b) = (−a, −rhs) of the chosen
    // facet, i.e. ⟨a, x⟩ − t ≥ rhs + 1.
    let mut w_row = p.normals()[facet].clone();
    w_row.push(Int::from(-1));
    normals.push(w_row);
    rhs.push(&p.rhs()[facet] + 1);

    let w = Polytope::from_inequalities(&normals, &rhs)?;
    debug_assert_eq!(w.dim(), dim + 1);
    Ok(w)
}

fn parse_dim_param(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .parse()
        .ok()
}

fn from_i64_points(points: &[&[i64]]) -> Polytope {
    let points: Vec<Vec<Int>> = points
        .iter()
        .map(|p| p.iter().map(|&x| Int::from(x)).collect())
        .collect();
    Polytope::from_lattice_points(&points).expect("catalog data is full-dimensional")
}

/// Looks up a named polytope.
///
/// Fixed names: `oda2d_P`, `oda2d_Q` (the 2-dimensional non-IDP pair),
/// `nonidp3d` (the simplex that is not IDP at dilation 2), `hexagon`
/// (the smooth Fano hexagon `conv(±e1, ±e2, ±(e1+e2))`), and the
/// database records `F.4D.0114` and `F.4D.0038`. Parameterized families:
/// `cube(d)` = `[−1,1]^d`, `cross(d)` = `conv(±e_1, …, ±e_d)`, and
/// `simplex(d)` = `conv(0, e_1, …, e_d)`, each for `d ≥ 1`.
pub fn catalog(name: &str) -> Result<Polytope> {
    match name {
        "oda2d_P" => Ok(from_i64_points(&[&[0, 0], &[0, 1], &[1, 0]])),
        "oda2d_Q" => Ok(from_i64_points(&[&[0, 0], &[2, 1], &[3, 1]])),
        "nonidp3d" => Ok(from_i64_points(&[
            &[0, 0, 0],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
        ])),
        "hexagon" => Ok(from_i64_points(&[
            &[1, 0],
            &[-1, 0],
            &[0, 1],
            &[0, -1],
            &[1, 1],
            &[-1, -1],
        ])),
        "F.4D.0114" => parse_polydb_record(include_str!("../fixtures/f4d0114.json")),
        "F.4D.0038" => parse_polydb_record(include_str!("../fixtures/f4d0038.json")),
        _ => {
            if let Some(d) = parse_dim_param(name, "cube") {
                if d == 0 {
                    return Err(Error::DegenerateInput("cube(0) has no dimension".into()));
                }
                let points: Vec<Vec<Int>> = (0u64..1 << d)
                    .map(|mask| {
                        (0..d)
                            .map(|k| Int::from(if mask >> k & 1 == 1 { 1 } else { -1 }))
                            .collect()
                    })
                    .collect();
                return Polytope::from_lattice_points(&points);
            }
            if let Some(d) = parse_dim_param(name, "cross") {
                if d == 0 {
                    return Err(Error::DegenerateInput("cross(0) has no dimension".into()));
                }
                let mut points = Vec::with_capacity(2 * d);
                for k in 0..d {
                    for s in [1, -1] {
                        let mut v = vec![Int::from(0); d];
                        v[k] = Int::from(s);
                        points.push(v);
                    }
                }
                return Polytope::from_lattice_points(&points);
            }
            if let Some(d) = parse_dim_param(name, "simplex") {
                if d == 0 {
                    return Err(Error::DegenerateInput("simplex(0) has no dimension".into()));
                }
                let mut points = vec![vec![Int::from(0); d]];
                for k in 0..d {
                    let mut v = vec![Int::from(0); d];
                    v[k] = Int::from(1);
                    points.push(v);
                }
                return Polytope::from_lattice_points(&points);
            }
            Err(Error::UnknownCatalogName(name.to_string()))
        }
    }
}

/// The concrete catalog instances exercised by the test suites, sorted.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "F.4D.0038",
        "F.4D.0114",
        "cross(2)",
        "cross(3)",
        "cross(4)",
        "cube(2)",
        "cube(3)",
        "cube(4)",
        "hexagon",
        "nonidp3d",
        "oda2d_P",
        "oda2d_Q",
        "simplex(2)",
        "simplex(3)",
        "simplex(4)",
    ]
}

/// A named pair of polytopes whose Minkowski sum has lattice points that
/// do not decompose: `oda2d` (the planar pair) or `polydb4d` (the two
/// facet unimodular 4-polytopes from the database records).
pub fn counterexample(name: &str) -> Result<(Polytope, Polytope)> {
    match name {
        "oda2d" => Ok((catalog("oda2d_P")?, catalog("oda2d_Q")?)),
        "polydb4d" => Ok((catalog("F.4D.0114")?, catalog("F.4D.0038")?)),
        _ => Err(Error::UnknownCatalogName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_reflexive;
    use crate::exact::vec_i;
    use crate::geometry::Containment;
    use crate::idp::idp_pair_check;

    #[test]
    fn graph_validation() {
        assert!(Graph::new(3, &[(1, 2), (2, 3)]).is_ok());
        assert!(matches!(Graph::new(0, &[]), Err(Error::BadGraph(_))));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::BadGraph(_))));
        assert!(matches!(Graph::new(3, &[(1, 4)]), Err(Error::BadGraph(_))));
        assert!(matches!(
            Graph::new(3, &[(1, 2), (2, 1)]),
            Err(Error::BadGraph(_))
        ));

        assert_eq!(Graph::complete(4).edges().len(), 6);
        assert_eq!(Graph::path(4).edges().len(), 3);
        assert_eq!(Graph::cycle(4).edges().len(), 4);
        assert!(Graph::complete(4).is_connected());
        assert!(!Graph::new(3, &[(1, 2)]).unwrap().is_connected());
    }

    #[test]
    fn connected_graph_counts() {
        // Labeled connected graphs on 1..=5 vertices with ≥ 1 edge.
        assert_eq!(connected_graphs(2).len(), 1);
        assert_eq!(connected_graphs(3).len(), 4);
        assert_eq!(connected_graphs(4).len(), 38);
        assert_eq!(connected_graphs(5).len(), 728);
        assert!(connected_graphs(4)
            .iter()
            .all(|g| g.is_connected() && !g.edges().is_empty()));
    }

    #[test]
    fn symmetric_edge_polytopes() {
        let seg = sep(&Graph::complete(2)).unwrap();
        assert_eq!(
            seg.lattice_vertices().unwrap(),
            vec![vec_i(&[-1]), vec_i(&[1])]
        );

        let hex = sep(&Graph::complete(3)).unwrap();
        let mut expected = vec![
            vec_i(&[1, -1]),
            vec_i(&[-1, 1]),
            vec_i(&[1, 0]),
            vec_i(&[-1, 0]),
            vec_i(&[0, 1]),
            vec_i(&[0, -1]),
        ];
        expected.sort();
        assert_eq!(hex.lattice_vertices().unwrap(), expected);

        let para = sep(&Graph::path(3)).unwrap();
        let mut expected = vec![
            vec_i(&[1, -1]),
            vec_i(&[-1, 1]),
            vec_i(&[0, 1]),
            vec_i(&[0, -1]),
        ];
        expected.sort();
        assert_eq!(para.lattice_vertices().unwrap(), expected);

        let edgeless = Graph::new(2, &[]).unwrap();
        assert!(matches!(sep(&edgeless), Err(Error::BadGraph(_))));
        let split = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(sep(&split), Err(Error::DisconnectedGraph)));
    }

    #[test]
    fn symmetric_edge_polytope_duals() {
        let d2 = sep_dual(&Graph::complete(2)).unwrap();
        assert_eq!(
            d2.lattice_vertices().unwrap(),
            vec![vec_i(&[-1]), vec_i(&[1])]
        );

        let d3 = sep_dual(&Graph::complete(3)).unwrap();
        assert_eq!(d3.n_vertices(), 6);
        assert_eq!(d3.n_facets(), 6);

        let d4 = sep_dual(&Graph::cycle(4)).unwrap();
        assert!(d4.is_lattice());
        assert_eq!(d4.dim(), 3);
    }

    #[test]
    fn seps_are_centrally_symmetric_and_reflexive() {
        let mut graphs = Vec::new();
        for n in 2..=4 {
            graphs.extend(connected_graphs(n));
        }
        assert_eq!(graphs.len(), 1 + 4 + 38);
        for g in &graphs {
            let s = sep(g).unwrap();
            let verts = s.lattice_vertices().unwrap();
            for v in &verts {
                let neg: Vec<Int> = v.iter().map(|c| -c).collect();
                assert!(verts.contains(&neg), "vertex set not centrally symmetric");
            }
            assert!(is_reflexive(&s));
            assert!(is_facet_unimodular(&sep_dual(g).unwrap()));
        }
    }

    #[test]
    fn wedge_of_a_segment() {
        let seg = from_i64_points(&[&[0], &[1]]);

        // Facet x ≤ 1, stored as ⟨−1, x⟩ ≥ −1.
        let upper = seg
            .normals()
            .iter()
            .position(|a| a == &vec_i(&[-1]))
            .unwrap();
        let w = wedge(&seg, upper).unwrap();
        assert_eq!(
            w.lattice_vertices().unwrap(),
            vec![vec_i(&[0, -1]), vec_i(&[0, 0]), vec_i(&[1, -1])]
        );

        // Facet −x ≤ 0, stored as ⟨1, x⟩ ≥ 0.
        let lower = seg
            .normals()
            .iter()
            .position(|a| a == &vec_i(&[1]))
            .unwrap();
        let w = wedge(&seg, lower).unwrap();
        assert_eq!(
            w.lattice_vertices().unwrap(),
            vec![vec_i(&[0, -1]), vec_i(&[1, -1]), vec_i(&[1, 0])]
        );

        assert!(matches!(wedge(&seg, 5), Err(Error::NoSuchFacet { .. })));
    }

    #[test]
    fn wedge_dimension_and_base_slice() {
        for name in ["oda2d_P", "cube(2)", "cross(2)", "hexagon"] {
            let p = catalog(name).unwrap();
            let p_verts = p.lattice_vertices().unwrap();
            for facet in 0..p.n_facets() {
                let w = wedge(&p, facet).unwrap();
                assert_eq!(w.dim(), p.dim() + 1);

                // The slice at t = −1 is exactly p × {−1}: its vertex set
                // is the vertex set of p with −1 appended.
                let mut expected: Vec<Vec<Int>> = p_verts
                    .iter()
                    .map(|v| {
                        let mut x = v.clone();
                        x.push(Int::from(-1));
                        x
                    })
                    .collect();
                expected.sort();
                let base: Vec<Vec<Int>> = w
                    .lattice_vertices()
                    .unwrap()
                    .into_iter()
                    .filter(|v| v[p.dim()] == Int::from(-1))
                    .collect();
                assert_eq!(base, expected);
                for v in &expected {
                    assert!(w.contains_lattice(v, Containment::Closed).unwrap());
                }
            }
        }
    }

    #[test]
    fn catalog_lookups() {
        assert_eq!(catalog("oda2d_P").unwrap().n_vertices(), 3);
        assert_eq!(catalog("oda2d_Q").unwrap().n_vertices(), 3);
        assert_eq!(catalog("nonidp3d").unwrap().n_vertices(), 4);

        let sq = catalog("cube(2)").unwrap();
        assert_eq!(sq.n_vertices(), 4);
        assert!(sq.rhs().iter().all(|b| *b == Int::from(-1)));
        assert_eq!(catalog("cross(3)").unwrap().n_facets(), 8);
        assert_eq!(catalog("simplex(3)").unwrap().n_vertices(), 4);

        let hex = catalog("hexagon").unwrap();
        assert_eq!(hex.n_vertices(), 6);
        assert!(is_reflexive(&hex));

        let p = catalog("F.4D.0114").unwrap();
        assert_eq!((p.n_vertices(), p.n_facets()), (8, 6));
        let mut expected: Vec<Vec<Int>> = [
            [0, 0, 0, -1],
            [-1, 0, 0, 0],
            [1, 1, 0, 1],
            [0, -1, 0, 0],
            [0, 0, -1, 0],
            [0, -1, 1, 0],
        ]
        .iter()
        .map(|row| row.iter().map(|&x| Int::from(x)).collect())
        .collect();
        expected.sort();
        let mut normals = p.normals().to_vec();
        normals.sort();
        assert_eq!(normals, expected);
        let q = catalog("F.4D.0038").unwrap();
        assert_eq!((q.n_vertices(), q.n_facets()), (18, 8));

        assert!(matches!(
            catalog("mystery"),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!(matches!(
            catalog("cube(x)"),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!(matches!(catalog("cube(0)"), Err(Error::DegenerateInput(_))));

        let names = catalog_names();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        assert_eq!(names, sorted);
        for name in names {
            assert!(catalog(name).is_ok(), "catalog name {name} must resolve");
        }
    }

    #[test]
    fn counterexample_pairs() {
        let (p, q) = counterexample("oda2d").unwrap();
        let report = idp_pair_check(&p, &q).unwrap();
        assert!(!report.is_idp_pair());
        assert!(report.gaps.contains(&vec_i(&[1, 1])));

        let (p, q) = counterexample("polydb4d").unwrap();
        assert_eq!((p.dim(), q.dim()), (4, 4));
        assert!(is_facet_unimodular(&p));
        assert!(is_facet_unimodular(&q));

        assert!(matches!(
            counterexample("none"),
            Err(Error::UnknownCatalogName(_))
        ));
    }
}
