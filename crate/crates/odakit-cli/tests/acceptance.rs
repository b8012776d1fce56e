//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line and enforcing its runtime budget. Every numeric assertion is
//! exact — no tolerances anywhere.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use odakit::classify::{check_pair_hypotheses, is_reflexive};
use odakit::construct::{catalog, catalog_names, connected_graphs, counterexample, sep, sep_dual};
use odakit::error::Error;
use odakit::exact::{det, vec_i, Int, IntMatrix};
use odakit::geometry::fan::{face_fan, fan_refines};
use odakit::idp::{idp_pair_check, minkowski_sum, round_decompose, DecompositionMethod};
use odakit::lattice::{is_idp, lattice_points};
use odakit::triangulate::{
    boundary_triangulation, centric_triangulation, is_unimodular_triangulation,
    verify_triangulation,
};
use odakit::unimodular::{ghouila_houri, is_facet_unimodular, is_totally_unimodular};
use odakit::Polytope;

/// Runs one criterion, printing a single PASS or FAIL line including
/// the elapsed time, and failing the test on any violated assertion or
/// a blown runtime budget.
fn criterion(n: usize, what: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= budget => {
            println!("ACCEPTANCE {n}: PASS — {what} ({elapsed:.2?}, budget {budget:?})");
        }
        Ok(()) => {
            println!("ACCEPTANCE {n}: FAIL — {what} (exceeded budget: {elapsed:.2?} > {budget:?})");
            panic!("criterion {n} exceeded its runtime budget");
        }
        Err(cause) => {
            println!("ACCEPTANCE {n}: FAIL — {what} ({elapsed:.2?})");
            resume_unwind(cause);
        }
    }
}

/// 1. The planar pair: `counterexample oda2d` reports not an IDP pair
///    with (1,1) among the gaps, exit code 1, in under a second.
#[test]
fn criterion_1_planar_pair() {
    criterion(
        1,
        "planar pair is not IDP; (1,1) is a gap (CLI end-to-end)",
        Duration::from_secs(1),
        || {
            let out = Command::new(env!("CARGO_BIN_EXE_odakit"))
                .args(["counterexample", "oda2d", "--json"])
                .output()
                .expect("binary runs");
            assert_eq!(out.status.code(), Some(1));
            let v: Value = serde_json::from_slice(&out.stdout).expect("JSON report");
            assert_eq!(v["idp_pair"], json!(false));
            assert!(v["gaps"].as_array().unwrap().contains(&json!([1, 1])));
        },
    );
}

/// 2. The 3-dimensional simplex fails the IDP at dilation 2 with the
///    gap (1,1,1).
#[test]
fn criterion_2_simplex_dilation_gap() {
    criterion(
        2,
        "nonidp3d fails IDP at k=2 with gap (1,1,1)",
        Duration::from_secs(1),
        || {
            let p = catalog("nonidp3d").unwrap();
            let report = is_idp(&p, 2).unwrap();
            assert!(!report.holds);
            let at_two = report.per_k.iter().find(|r| r.k == 2).unwrap();
            assert!(!at_two.holds);
            assert!(at_two.gaps.contains(&vec_i(&[1, 1, 1])));
        },
    );
}

/// 3. The database 4D pair: exact counts 1192 / 1236, exactly 44 gaps
///    including (1,0,−1,−4); the stacked facet-normal matrix is not
///    totally unimodular, and the documented row pair
///    (1,1,0,1),(1,−1,−1,1) really carries a violating 2×2 minor.
#[test]
fn criterion_3_database_pair() {
    criterion(
        3,
        "4D database pair: 1236 sum points, 1192 decomposable, 44 gaps; stack not TU",
        Duration::from_secs(60),
        || {
            let (p, q) = counterexample("polydb4d").unwrap();
            let report = idp_pair_check(&p, &q).unwrap();
            assert_eq!(report.count_sumset, 1192);
            assert_eq!(report.count_sum_points, 1236);
            assert_eq!(report.gaps.len(), 44);
            assert!(report.gaps.contains(&vec_i(&[1, 0, -1, -4])));
            assert!(!report.is_idp_pair());

            let mut rows = p.normals().to_vec();
            rows.extend_from_slice(q.normals());
            let stacked = IntMatrix::from_rows(rows.clone());
            let (tu, witness) = is_totally_unimodular(&stacked);
            assert!(!tu);
            let w = witness.unwrap();
            let reported = det(&stacked.submatrix(&w.rows, &w.cols)).unwrap();
            assert_eq!(reported, w.det);
            assert!(w.det != Int::from(0) && w.det != Int::from(1) && w.det != Int::from(-1));

            let r1 = rows
                .iter()
                .position(|r| r == &vec_i(&[1, 1, 0, 1]))
                .unwrap();
            let r2 = rows
                .iter()
                .position(|r| r == &vec_i(&[1, -1, -1, 1]))
                .unwrap();
            let named = det(&stacked.submatrix(&[r1.min(r2), r1.max(r2)], &[0, 1])).unwrap();
            assert!(named == Int::from(2) || named == Int::from(-2));
        },
    );
}

fn difference_polytope(rng: &mut ChaCha8Rng, dim: usize) -> Option<Polytope> {
    let mut normals = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..dim {
        let mut e = vec![Int::from(0); dim];
        e[i] = Int::from(1);
        normals.push(e.clone());
        rhs.push(Int::from(rng.gen_range(-2..=0)));
        let mut f = vec![Int::from(0); dim];
        f[i] = Int::from(-1);
        normals.push(f);
        rhs.push(Int::from(-rng.gen_range(1..=2)));
    }
    for _ in 0..rng.gen_range(0..3) {
        let i = rng.gen_range(0..dim);
        let j = rng.gen_range(0..dim);
        if i == j {
            continue;
        }
        let mut d = vec![Int::from(0); dim];
        d[i] = Int::from(1);
        d[j] = Int::from(-1);
        normals.push(d);
        rhs.push(Int::from(rng.gen_range(-2..=0)));
    }
    Polytope::from_inequalities(&normals, &rhs).ok()
}

/// 4. Rounding property suite: 200 random facet-unimodular pairs whose
///    facet normals have at most two nonzero entries; every lattice
///    point of the sum is decomposed by rounding and the pair check
///    reports no gaps.
#[test]
fn criterion_4_rounding_suite() {
    criterion(
        4,
        "rounding decomposes 200 random facet-unimodular difference pairs",
        Duration::from_secs(300),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0da4);
            let mut pairs = 0;
            while pairs < 200 {
                let dim = rng.gen_range(2..=4);
                let Some(p) = difference_polytope(&mut rng, dim) else {
                    continue;
                };
                let Some(q) = difference_polytope(&mut rng, dim) else {
                    continue;
                };
                if !is_facet_unimodular(&p) || !is_facet_unimodular(&q) {
                    continue;
                }
                let report = idp_pair_check(&p, &q).unwrap();
                assert!(report.gaps.is_empty(), "pair {pairs} has gaps");
                let sum = minkowski_sum(&p, &q).unwrap();
                for x in &lattice_points(&sum).points {
                    let d = round_decompose(&p, &q, x).unwrap();
                    assert_eq!(d.method, DecompositionMethod::Rounding);
                    let recombined: Vec<Int> =
                        d.y_int.iter().zip(&d.z_int).map(|(a, b)| a + b).collect();
                    assert_eq!(&recombined, x);
                }
                pairs += 1;
            }
        },
    );
}

/// 5. Symmetric-edge-polytope duals: over all unordered pairs of
///    connected graphs on the same vertex count up to 4 (plus a seeded
///    sample on 5), the duals form IDP pairs; every dual passes facet
///    unimodularity and every symmetric edge polytope is reflexive.
#[test]
fn criterion_5_edge_polytope_duals() {
    criterion(
        5,
        "connected-graph dual pairs are IDP (all on ≤4 vertices, sample on 5)",
        Duration::from_secs(300),
        || {
            let mut checked_pairs = 0;
            for n in 2..=4 {
                let graphs = connected_graphs(n);
                let duals: Vec<Polytope> = graphs
                    .iter()
                    .map(|g| {
                        assert!(is_reflexive(&sep(g).unwrap()));
                        let d = sep_dual(g).unwrap();
                        assert!(is_facet_unimodular(&d));
                        d
                    })
                    .collect();
                for i in 0..duals.len() {
                    for j in i..duals.len() {
                        let report = idp_pair_check(&duals[i], &duals[j]).unwrap();
                        assert!(
                            report.is_idp_pair(),
                            "pair of graphs {i},{j} on {n} vertices"
                        );
                        checked_pairs += 1;
                    }
                }
            }
            assert_eq!(checked_pairs, 1 + 10 + 741);

            let graphs = connected_graphs(5);
            assert_eq!(graphs.len(), 728);
            let mut rng = ChaCha8Rng::seed_from_u64(0x0da5);
            for _ in 0..5 {
                let g1 = &graphs[rng.gen_range(0..graphs.len())];
                let g2 = &graphs[rng.gen_range(0..graphs.len())];
                assert!(is_reflexive(&sep(g1).unwrap()));
                let d1 = sep_dual(g1).unwrap();
                let d2 = sep_dual(g2).unwrap();
                assert!(is_facet_unimodular(&d1));
                assert!(is_facet_unimodular(&d2));
                assert!(idp_pair_check(&d1, &d2).unwrap().is_idp_pair());
            }
        },
    );
}

/// 6. Hypotheses-imply-IDP suite: for the 2- and 3-dimensional cross
///    polytopes and the hexagon, every full-dimensional Q spanned by a
///    subset of V(P) ∪ {0} containing 0 satisfies the pair hypotheses
///    (including a constructed unimodular centric triangulation) and
///    forms an IDP pair with P; additionally the hexagon's face fan
///    refines the square's and that pair is IDP.
#[test]
fn criterion_6_hypotheses_suite() {
    criterion(
        6,
        "vertex-subset pairs satisfy the hypotheses and are IDP; hexagon fan refines square fan",
        Duration::from_secs(300),
        || {
            for p_name in ["cross(2)", "cross(3)", "hexagon"] {
                let p = catalog(p_name).unwrap();
                let verts = p.lattice_vertices().unwrap();
                let zero = vec![Int::from(0); p.dim()];
                let mut checked = 0;
                for mask in 0u32..1 << verts.len() {
                    let mut points: Vec<Vec<Int>> = verts
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, v)| v.clone())
                        .collect();
                    points.push(zero.clone());
                    let Ok(q) = Polytope::from_lattice_points(&points) else {
                        continue; // lower-dimensional subset
                    };
                    let hypotheses = check_pair_hypotheses(&p, &q);
                    assert!(hypotheses.all_hold(), "{p_name}, vertex subset {mask:#b}");
                    let report = idp_pair_check(&p, &q).unwrap();
                    assert!(report.is_idp_pair(), "{p_name}, vertex subset {mask:#b}");
                    checked += 1;
                }
                assert!(checked > 0, "{p_name} produced no full-dimensional subsets");
            }

            let hexagon = catalog("hexagon").unwrap();
            let square = catalog("cross(2)").unwrap();
            let fine = face_fan(&hexagon).unwrap();
            let coarse = face_fan(&square).unwrap();
            assert!(fan_refines(&fine, &coarse).unwrap());
            assert!(idp_pair_check(&hexagon, &square).unwrap().is_idp_pair());
        },
    );
}

/// 7. Triangulation invariants: every reflexive polytope in the catalog
///    gets a centric triangulation that passes the exact volume identity
///    and is unimodular; the 4D database fixtures have the frozen cell
///    counts 512 and 322.
#[test]
fn criterion_7_centric_triangulations() {
    criterion(
        7,
        "centric triangulations of the reflexive catalog verify and are unimodular",
        Duration::from_secs(60),
        || {
            let mut reflexive_count = 0;
            for name in catalog_names() {
                let p = catalog(name).unwrap();
                if !is_reflexive(&p) {
                    continue;
                }
                reflexive_count += 1;
                let boundary = boundary_triangulation(&p).unwrap();
                let t = centric_triangulation(&p, &boundary).unwrap();
                assert!(verify_triangulation(&p, &t), "{name}");
                assert!(is_unimodular_triangulation(&t), "{name}");
                match name {
                    "F.4D.0114" => assert_eq!(t.cells.len(), 512),
                    "F.4D.0038" => assert_eq!(t.cells.len(), 322),
                    _ => {}
                }
            }
            assert_eq!(reflexive_count, 9);
        },
    );
}

/// 8. Oracle cross-validation: minor enumeration agrees with the
///    row-signing characterization on 500 random small matrices; polar
///    duality is an involution on the catalog wherever it is defined;
///    vertex and facet representations round-trip on 100 random
///    0/1-polytopes.
#[test]
fn criterion_8_oracle_cross_validation() {
    criterion(
        8,
        "TU oracles agree; dual is an involution; hull/H-rep round-trips",
        Duration::from_secs(300),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0da8);
            for _ in 0..500 {
                let nrows = rng.gen_range(1..=6);
                let ncols = rng.gen_range(1..=6);
                let m = IntMatrix::from_rows(
                    (0..nrows)
                        .map(|_| {
                            (0..ncols)
                                .map(|_| Int::from(rng.gen_range(-1..=1)))
                                .collect()
                        })
                        .collect(),
                );
                assert_eq!(is_totally_unimodular(&m).0, ghouila_houri(&m));
            }

            for name in catalog_names() {
                let p = catalog(name).unwrap();
                match p.dual() {
                    Ok(d) => {
                        let dd = d.dual().unwrap();
                        assert_eq!(p.vertices(), dd.vertices(), "{name}");
                        assert_eq!(p.normals(), dd.normals(), "{name}");
                        assert_eq!(p.rhs(), dd.rhs(), "{name}");
                    }
                    Err(Error::DualUndefined) => {} // origin not strictly interior
                    Err(e) => panic!("unexpected dual failure for {name}: {e}"),
                }
            }

            let mut round_trips = 0;
            while round_trips < 100 {
                let dim = rng.gen_range(1..=4);
                let count = rng.gen_range(dim + 1..=1 << dim);
                let mut points: Vec<Vec<Int>> = (0..count)
                    .map(|_| (0..dim).map(|_| Int::from(rng.gen_range(0..=1))).collect())
                    .collect();
                points.sort();
                points.dedup();
                let Ok(p) = Polytope::from_lattice_points(&points) else {
                    continue;
                };
                let q = Polytope::from_inequalities(p.normals(), p.rhs()).unwrap();
                assert_eq!(p.vertices(), q.vertices());
                assert_eq!(p.normals(), q.normals());
                assert_eq!(p.rhs(), q.rhs());
                round_trips += 1;
            }
        },
    );
}
