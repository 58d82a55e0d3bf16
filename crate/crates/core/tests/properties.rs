use std::f64::consts::TAU;

use proptest::prelude::*;

use combicurv::boundary::double;
use combicurv::curvature::{angle_defect, phi_of_pattern, total_curvature};
use combicurv::explorer::{candidate_degrees, extendable};
use combicurv::generators::{catalog, generate, GenKind};
use combicurv::patterns::{enumerate_positive, Pattern};
use combicurv::tess::{canonical_cycle, cyclic_arrangements, VertexStar};
use combicurv::{Curv, Tessellation};

fn cycle() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(3usize..60, 3..=6)
}

fn infinite_names() -> Vec<&'static str> {
    catalog().into_iter().filter(|s| s.kind == GenKind::Infinite).map(|s| s.name).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn curv_text_round_trips(n in -10_000i128..10_000, d in 1i128..10_000) {
        let c = Curv::new(n, d);
        let back: Curv = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
        prop_assert!(c.to_string().contains('/'));
    }

    #[test]
    fn curv_addition_is_exact(a in 3usize..500, b in 3usize..500) {
        let s = Curv::recip_of(a) + Curv::recip_of(b);
        prop_assert_eq!(s, Curv::new((a + b) as i128, (a * b) as i128));
        prop_assert_eq!(s - Curv::recip_of(b), Curv::recip_of(a));
    }

    #[test]
    fn angle_defect_tracks_curvature(faces in cycle()) {
        let a = angle_defect(&VertexStar::from_cycle(faces.clone())).unwrap().radians;
        let phi = phi_of_pattern(&faces).to_f64();
        prop_assert!((a - TAU * phi).abs() <= 1e-12);
    }

    #[test]
    fn curvature_ignores_face_order(faces in cycle(), shift in 0usize..6) {
        let mut rotated = faces.clone();
        rotated.rotate_left(shift % faces.len());
        rotated.reverse();
        prop_assert_eq!(phi_of_pattern(&rotated), phi_of_pattern(&faces));
        prop_assert_eq!(Pattern::new(rotated).curvature(), phi_of_pattern(&faces));
    }

    #[test]
    fn canonical_cycle_is_a_dihedral_invariant(faces in cycle(), shift in 0usize..6, flip: bool) {
        let mut other = faces.clone();
        other.rotate_left(shift % faces.len());
        if flip {
            other.reverse();
        }
        prop_assert_eq!(canonical_cycle(&other), canonical_cycle(&faces));
        let arrangements = cyclic_arrangements(&faces);
        prop_assert!(arrangements.contains(&canonical_cycle(&faces)));
    }

    #[test]
    fn family_members_are_positive(idx in 0usize..20, k in 3usize..300) {
        let families = enumerate_positive(300).unwrap();
        let f = &families[idx];
        if f.admits(k) {
            let p = f.instantiate(k);
            prop_assert!(p.curvature().is_positive());
            prop_assert_eq!(p.curvature(), f.formula(k));
        }
    }

    #[test]
    fn candidates_keep_slots_extendable(partial in prop::collection::vec(3usize..20, 1..4)) {
        let cands = candidate_degrees(&[&partial]);
        for &p in &cands {
            let mut grown = partial.clone();
            grown.push(p);
            prop_assert!(extendable(&grown));
        }
        prop_assert!(cands.windows(2).all(|w| w[0] < w[1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn windows_are_valid_and_round_trip(idx in 0usize..64, extra in 0usize..3) {
        let names = infinite_names();
        let name = names[idx % names.len()];
        let spec = combicurv::generators::spec(name).unwrap();
        let t = generate(name, spec.min_radius + extra).unwrap();
        prop_assert!(t.validate().is_valid());
        prop_assert_eq!(total_curvature(&t).unwrap().value, spec.declared_total);
        let back = Tessellation::from_json(&t.to_json()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn balls_grow_with_the_radius(idx in 0usize..64, r in 0usize..3) {
        let names = infinite_names();
        let t = generate(names[idx % names.len()], 3).unwrap();
        let small = t.ball(0, r);
        let big = t.ball(0, r + 1);
        prop_assert!(small.tess.vertex_count() <= big.tess.vertex_count());
        let dist = t.distances_from(&[0]);
        prop_assert!(small.original.iter().all(|&v| dist[v].is_some_and(|d| d <= r)));
    }

    #[test]
    fn doubling_mirror_is_an_involution(extra in 0usize..3) {
        let t = generate("fig32", 3 + extra).unwrap();
        let d = double(&t).unwrap();
        prop_assert!(d.mirror.iter().enumerate().all(|(v, &m)| d.mirror[m] == v));
        let fixed = d.mirror.iter().enumerate().filter(|(v, &m)| *v == m).count();
        prop_assert_eq!(fixed, d.boundary_vertices);
        prop_assert_eq!(total_curvature(&d.tess).unwrap().value, total_curvature(&t).unwrap().value * 2);
    }
}
