//! The net counting identity across both families and every rank, with
//! the overlap divisor recomputed geometrically: a k-face centroid lies on
//! exactly `dim - k` facet hyperplanes of the body.

use chromatope::chroma::ConvexBody;
use chromatope::net::{color_net, count_via_net, facet_incidence_divisor, unfold};
use chromatope::polytope::{build_cube, build_simplex, FaceLattice};

fn families() -> Vec<FaceLattice> {
    (1..=5)
        .map(|n| build_cube(n).unwrap())
        .chain((1..=5).map(|n| build_simplex(n).unwrap()))
        .collect()
}

/// How many facet hyperplanes of the body pass through the point.
fn hyperplanes_through(body: &ConvexBody, x: &[f64]) -> usize {
    body.half_spaces
        .iter()
        .filter(|(a, b)| {
            let dot: f64 = a.iter().zip(x).map(|(ai, xi)| ai * xi).sum();
            (dot - b).abs() < 1e-9
        })
        .count()
}

#[test]
fn incidence_divisor_matches_the_hyperplane_count() {
    for p in families().iter().filter(|p| p.dim() >= 2) {
        let n = p.dim();
        let body = ConvexBody::from_lattice(p);
        for k in 0..=n - 2 {
            let divisor = facet_incidence_divisor(p, k).unwrap();
            assert_eq!(divisor, (n - k) as u64, "dim {n} rank {k}");
            for face in p.faces(k) {
                let mut centroid = vec![0.0; n];
                for &v in face {
                    for (c, x) in centroid.iter_mut().zip(p.vertex_f64(v)) {
                        *c += x / face.len() as f64;
                    }
                }
                assert_eq!(
                    hyperplanes_through(&body, &centroid),
                    n - k,
                    "dim {n} rank {k} face {face:?}"
                );
            }
        }
    }
}

#[test]
fn counting_identity_recounts_every_rank() {
    for p in families().iter().filter(|p| p.dim() >= 2) {
        for k in 0..=p.dim() - 2 {
            assert_eq!(
                count_via_net(p, k).unwrap(),
                p.f_vector().counts()[k],
                "dim {} rank {k}",
                p.dim()
            );
        }
    }
}

#[test]
fn five_cube_edge_count_uses_divisor_four() {
    let cube5 = build_cube(5).unwrap();
    assert_eq!(cube5.faces(4).len(), 10);
    assert_eq!(build_cube(4).unwrap().faces(1).len(), 32);
    assert_eq!(facet_incidence_divisor(&cube5, 1).unwrap(), 4);
    assert_eq!(count_via_net(&cube5, 1).unwrap(), 10 * 32 / 4);
}

#[test]
fn nets_refold_and_recount_their_sources() {
    for p in families().iter().filter(|p| p.dim() >= 2) {
        let net = unfold(p).unwrap();
        assert!(net.refold_matches_source_adjacency(), "dim {}", p.dim());
        // Gluing classes recount the sub-facet ranks; the cells themselves
        // recount the facets.
        let classes = net.gluing_classes_per_rank();
        let f = p.f_vector().counts().to_vec();
        assert_eq!(classes, f[..p.dim() - 1], "dim {}", p.dim());
        assert_eq!(net.cells().len() as u64, f[p.dim() - 1]);
    }
}

#[test]
fn simplex_nets_double_the_center_face() {
    for n in 2..=5 {
        let colored = color_net(unfold(&build_simplex(n).unwrap()).unwrap());
        assert_eq!(colored.net.cells().len(), n + 1);
        assert_eq!(colored.max_multiplicity(), 2, "dim {n}");
    }
    for n in 2..=5 {
        let colored = color_net(unfold(&build_cube(n).unwrap()).unwrap());
        assert_eq!(colored.net.cells().len(), 2 * n);
        assert_eq!(colored.max_multiplicity(), 1, "dim {n}");
    }
}
