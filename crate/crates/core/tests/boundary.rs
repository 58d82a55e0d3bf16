use combicurv::boundary::{
    boundary_curvature, degree2_check, double, gap_with_boundary_check, BoundaryError,
};
use combicurv::curvature::{curvature_at, total_curvature};
use combicurv::generators::generate;
use combicurv::patterns::pattern_of;
use combicurv::{Curv, VertexStatus};

#[test]
fn doubled_wedge_patch_has_twice_the_curvature() {
    let t = generate("fig32", 4).unwrap();
    let d = double(&t).unwrap();
    assert!(d.tess.validate().is_valid());
    assert_eq!(total_curvature(&d.tess).unwrap().value, Curv::new(1, 6));
    assert_eq!(d.tess.vertex_count(), 2 * t.vertex_count() - d.boundary_vertices);
    assert_eq!(d.tess.edge_count(), 2 * t.edge_count() - d.boundary_edges);
    assert_eq!(d.tess.face_count(), 2 * t.face_count());
    for x in t.boundary_vertices() {
        let b = boundary_curvature(&t, x).unwrap();
        assert!((b.angle_form - b.phi.to_f64()).abs() <= 1e-12);
        assert_eq!(curvature_at(&d.tess, x).unwrap(), b.phi * 2);
    }
}

#[test]
fn mirror_fixes_exactly_the_boundary() {
    let t = generate("fig32", 3).unwrap();
    let d = double(&t).unwrap();
    for v in d.tess.vertex_ids() {
        let m = d.mirror[v];
        assert_eq!(d.mirror[m], v);
        if v < t.vertex_count() {
            match t.status(v) {
                VertexStatus::Boundary => assert_eq!(m, v),
                VertexStatus::Interior => assert_ne!(m, v),
                VertexStatus::Frontier => {}
            }
        }
        if d.tess.has_complete_star(v) {
            assert_eq!(pattern_of(&d.tess, v).unwrap(), pattern_of(&d.tess, m).unwrap());
        }
    }
}

#[test]
fn gap_check_on_boundary_examples() {
    let r = gap_with_boundary_check(&generate("fig32", 4).unwrap()).unwrap();
    assert!(r.passes());
    assert_eq!(r.total, Curv::new(1, 12));
    assert_eq!(r.doubled_total, Curv::new(1, 6));
    assert!(r.doubled_total.is_twelfth_multiple());

    let r = gap_with_boundary_check(&generate("half_plane", 4).unwrap()).unwrap();
    assert!(r.passes());
    assert!(r.total.is_zero() && r.doubled_total.is_zero());
}

#[test]
fn boundary_examples_have_no_degree_two_vertices() {
    for name in ["fig32", "half_plane"] {
        let report = degree2_check(&generate(name, 4).unwrap()).unwrap();
        assert!(report.entries.is_empty());
        assert!(report.passes());
    }
}

#[test]
fn closed_surfaces_cannot_be_doubled() {
    let t = generate("cube", 0).unwrap();
    assert!(matches!(double(&t), Err(BoundaryError::NothingToDouble)));
}
