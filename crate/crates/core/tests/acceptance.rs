//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::time::{Duration, Instant};

use combicurv::boundary::{boundary_patterns_nonneg, degree2_check, double, BoundaryPattern};
use combicurv::curvature::{angle_defect, curvature_at, gauss_bonnet_check, total_curvature};
use combicurv::explorer::{
    component_sum_check, components_of_t, explore, explore_pattern, ExploreOptions, MAX_COMPONENTS,
};
use combicurv::generators::{catalog, generate, spec, GenKind};
use combicurv::patterns::{
    enumerate_nonnegative, enumerate_positive, enumerate_zero, min_face_sum, pattern_of, Pattern,
};
use combicurv::tess::VertexStar;
use combicurv::{Curv, Tessellation, VertexStatus};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const FLAT: [&[usize]; 17] = [
    &[3, 7, 42],
    &[3, 8, 24],
    &[3, 9, 18],
    &[3, 10, 15],
    &[3, 12, 12],
    &[4, 5, 20],
    &[4, 6, 12],
    &[4, 8, 8],
    &[5, 5, 10],
    &[6, 6, 6],
    &[3, 3, 4, 12],
    &[3, 3, 6, 6],
    &[3, 4, 4, 6],
    &[4, 4, 4, 4],
    &[3, 3, 3, 3, 6],
    &[3, 3, 3, 4, 4],
    &[3, 3, 3, 3, 3, 3],
];

/// (family, parameter range, curvature formula).
const POSITIVE: [(&str, &str, &str); 20] = [
    ("(3,3,k)", "k>=3", "1/6 + 1/k"),
    ("(3,4,k)", "k>=4", "1/12 + 1/k"),
    ("(3,5,k)", "k>=5", "1/30 + 1/k"),
    ("(3,6,k)", "k>=6", "1/k"),
    ("(3,7,k)", "7<=k<=41", "1/k - 1/42"),
    ("(3,8,k)", "8<=k<=23", "1/k - 1/24"),
    ("(3,9,k)", "9<=k<=17", "1/k - 1/18"),
    ("(3,10,k)", "10<=k<=14", "1/k - 1/15"),
    ("(3,11,k)", "11<=k<=13", "1/k - 5/66"),
    ("(4,4,k)", "k>=4", "1/k"),
    ("(4,5,k)", "5<=k<=19", "1/k - 1/20"),
    ("(4,6,k)", "6<=k<=11", "1/k - 1/12"),
    ("(4,7,k)", "7<=k<=9", "1/k - 3/28"),
    ("(5,5,k)", "5<=k<=9", "1/k - 1/10"),
    ("(5,6,k)", "6<=k<=7", "1/k - 2/15"),
    ("(3,3,3,k)", "k>=3", "1/k"),
    ("(3,3,4,k)", "4<=k<=11", "1/k - 1/12"),
    ("(3,3,5,k)", "5<=k<=7", "1/k - 2/15"),
    ("(3,4,4,k)", "4<=k<=5", "1/k - 1/6"),
    ("(3,3,3,3,k)", "3<=k<=5", "1/k - 1/6"),
];

const EXTREMAL: [&str; 13] = [
    "fig1", "fig2", "fig25a", "fig25b", "fig25c", "fig25d", "fig26a", "fig26b", "fig26c", "fig27a",
    "fig27b", "fig28", "fig29",
];

const SOLIDS: [&str; 10] = [
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "prism3",
    "prism5",
    "prism6",
    "antiprism4",
    "antiprism5",
];

/// Independent search for sorted patterns of curvature zero, entries in `[3, cap]`.
fn brute_force_flat(cap: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, cap: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 3 {
            let phi = Curv::int(1) - Curv::new(cur.len() as i128, 2)
                + cur.iter().map(|&p| Curv::recip_of(p)).sum::<Curv>();
            if phi.is_zero() {
                out.push(cur.clone());
            }
            // Adding faces only lowers curvature once it is negative.
            if phi.is_negative() {
                return;
            }
        }
        if cur.len() == 6 {
            return;
        }
        let lo = cur.last().copied().unwrap_or(3);
        for p in lo..=cap {
            cur.push(p);
            go(cur, cap, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), cap, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

fn criterion_1() -> Check {
    let found = enumerate_zero();
    let got: Vec<&[usize]> = found.iter().map(|p| p.degrees()).collect();
    ensure(got == FLAT, || format!("flat patterns differ: {got:?}"))?;
    ensure(found.iter().all(|p| p.curvature().is_zero()), || "non-zero curvature".into())?;
    let brute = brute_force_flat(42);
    ensure(brute.len() == 17 && brute.iter().all(|b| FLAT.contains(&b.as_slice())), || {
        format!("exhaustive search found {} flat patterns", brute.len())
    })
}

fn criterion_2() -> Check {
    let cap = 200;
    let families = enumerate_positive(cap).map_err(|e| e.to_string())?;
    let got: Vec<(String, String, String)> =
        families.iter().map(|f| (f.to_string(), f.range_label(), f.formula_label())).collect();
    let want: Vec<(String, String, String)> =
        POSITIVE.iter().map(|&(a, b, c)| (a.into(), b.into(), c.into())).collect();
    ensure(got == want, || format!("families differ: {got:?}"))?;
    for f in &families {
        for k in f.k_min..=cap {
            let p = f.instantiate(k);
            if f.admits(k) {
                ensure(p.curvature() == f.formula(k) && p.curvature().is_positive(), || {
                    format!("{f} at k={k}")
                })?;
            }
        }
        if let Some(m) = f.k_max {
            ensure(!f.formula(m + 1).is_positive(), || format!("{f} upper end not tight"))?;
        }
    }
    // Every positive sorted pattern up to the cap lies in exactly one family.
    for p in enumerate_nonnegative(cap).into_iter().filter(|p| p.curvature().is_positive()) {
        let d = p.degrees();
        let (k, prefix) = d.split_last().expect("non-empty");
        let n = families.iter().filter(|f| f.prefix == prefix && f.admits(*k)).count();
        ensure(n == 1, || format!("{p} lies in {n} families"))?;
    }
    Ok(())
}

fn defect_matches(faces: &[usize]) -> Check {
    let star = VertexStar::from_cycle(faces.to_vec());
    let a = angle_defect(&star).map_err(|e| e.to_string())?.radians;
    let phi = Pattern::new(faces.to_vec()).curvature().to_f64();
    ensure((a - TAU * phi).abs() <= 1e-12, || format!("{faces:?}: {a} vs {}", TAU * phi))
}

fn criterion_3() -> Check {
    for p in enumerate_zero() {
        defect_matches(p.degrees())?;
    }
    for f in enumerate_positive(200).map_err(|e| e.to_string())? {
        for p in f.members(200) {
            defect_matches(p.degrees())?;
        }
    }
    let mut checked = 0;
    for s in catalog() {
        let t = generate(s.name, s.min_radius + 1).map_err(|e| e.to_string())?;
        for v in t.vertex_ids() {
            if t.status(v) == VertexStatus::Interior && t.has_complete_star(v) {
                let star = VertexStar::of(&t, v);
                let a = angle_defect(&star).map_err(|e| e.to_string())?.radians;
                let phi = curvature_at(&t, v).map_err(|e| e.to_string())?.to_f64();
                ensure((a - TAU * phi).abs() <= 1e-12, || format!("{} vertex {v}", s.name))?;
                checked += 1;
            }
        }
    }
    ensure(checked > 0, || "no corpus vertices".into())
}

fn criterion_4() -> Check {
    for name in SOLIDS {
        let t = generate(name, 0).map_err(|e| e.to_string())?;
        let gb = gauss_bonnet_check(&t).map_err(|e| e.to_string())?;
        ensure(gb.equal && gb.phi == Curv::int(2) && gb.chi == 2, || format!("{name}: {gb:?}"))?;
    }
    Ok(())
}

fn curved_patterns(t: &Tessellation) -> Result<BTreeMap<Pattern, usize>, String> {
    let mut m = BTreeMap::new();
    for v in t.vertex_ids() {
        if t.status(v) == VertexStatus::Frontier {
            continue;
        }
        if !curvature_at(t, v).map_err(|e| e.to_string())?.is_zero() {
            *m.entry(pattern_of(t, v).map_err(|e| e.to_string())?).or_insert(0) += 1;
        }
    }
    Ok(m)
}

fn criterion_5() -> Check {
    let twelfth = Curv::new(1, 12);
    for name in EXTREMAL {
        let s = spec(name).map_err(|e| e.to_string())?;
        let declared: BTreeMap<Pattern, usize> =
            s.declared_core.iter().map(|e| (e.pattern.clone(), e.count)).collect();
        for r in s.min_radius..s.min_radius + 5 {
            let t = generate(name, r).map_err(|e| e.to_string())?;
            ensure(t.validate().is_valid(), || format!("{name} r={r} invalid"))?;
            let got = curved_patterns(&t)?;
            ensure(got == declared, || format!("{name} r={r}: curved patterns {got:?}"))?;
            let values: Vec<Curv> = t
                .vertex_ids()
                .filter(|&v| t.status(v) != VertexStatus::Frontier)
                .filter_map(|v| curvature_at(&t, v).ok())
                .filter(|c| !c.is_zero())
                .collect();
            let shape_ok = values == [twelfth]
                || (values.len() == 11 && values.iter().all(|&c| c == Curv::new(1, 132)));
            ensure(shape_ok, || format!("{name} r={r}: curved values {values:?}"))?;
            let total = total_curvature(&t).map_err(|e| e.to_string())?;
            ensure(total.value == twelfth && total.stabilized, || {
                format!("{name} r={r}: {total:?}")
            })?;
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let mut seen = 0;
    for s in catalog().into_iter().filter(|s| s.kind == GenKind::Infinite) {
        let t = generate(s.name, s.min_radius + 1).map_err(|e| e.to_string())?;
        let total = total_curvature(&t).map_err(|e| e.to_string())?.value;
        let twelfths = total * 12;
        let ok = twelfths.denom() == 1 && (0..=12).contains(&twelfths.numer());
        ensure(ok, || format!("{}: total {total}", s.name))?;
        seen += 1;
    }
    ensure(seen >= EXTREMAL.len(), || "corpus too small".into())
}

fn criterion_7() -> Check {
    for k in 43..=100 {
        let m = min_face_sum(k).map_err(|e| e.to_string())?;
        ensure(m == Curv::int(1), || format!("k={k}: {m}"))?;
        // The per-vertex minimum 1/k is attained by (4,4,k).
        ensure(Pattern::new(vec![4, 4, k]).curvature() == Curv::recip_of(k), || format!("k={k}"))?;
    }
    let m = min_face_sum(42).map_err(|e| e.to_string())?;
    ensure(m.is_zero(), || format!("k=42: {m}"))
}

fn criterion_8() -> Check {
    let want: Vec<(BoundaryPattern, Curv)> = vec![
        (BoundaryPattern::new(vec![3, 3]), Curv::new(1, 6)),
        (BoundaryPattern::new(vec![3, 4]), Curv::new(1, 12)),
        (BoundaryPattern::new(vec![3, 5]), Curv::new(1, 30)),
        (BoundaryPattern::new(vec![3, 3, 3]), Curv::ZERO),
        (BoundaryPattern::new(vec![3, 6]), Curv::ZERO),
        (BoundaryPattern::new(vec![4, 4]), Curv::ZERO),
    ];
    let got = boundary_patterns_nonneg();
    ensure(got == want, || format!("boundary patterns {got:?}"))?;
    for s in catalog().into_iter().filter(|s| s.kind == GenKind::WithBoundary) {
        let t = generate(s.name, s.min_radius + 1).map_err(|e| e.to_string())?;
        let report = degree2_check(&t).map_err(|e| e.to_string())?;
        ensure(report.passes(), || format!("{}: {:?}", s.name, report.contradictions()))?;
    }
    let t = generate("fig32", spec("fig32").map_err(|e| e.to_string())?.min_radius + 1)
        .map_err(|e| e.to_string())?;
    let d = double(&t).map_err(|e| e.to_string())?;
    let dt = &d.tess;
    let total = total_curvature(dt).map_err(|e| e.to_string())?.value;
    ensure(total == Curv::new(1, 6), || format!("doubled total {total}"))?;
    ensure(dt.vertex_count() == 2 * t.vertex_count() - d.boundary_vertices, || {
        "vertex count".into()
    })?;
    ensure(dt.edge_count() == 2 * t.edge_count() - d.boundary_edges, || "edge count".into())?;
    ensure(dt.face_count() == 2 * t.face_count(), || "face count".into())?;
    ensure(dt.validate().is_valid(), || "doubled patch invalid".into())
}

fn criterion_9() -> Check {
    let t = generate("fig31", 3).map_err(|e| e.to_string())?;
    let comps = components_of_t(&t).map_err(|e| e.to_string())?;
    ensure(comps.len() == 12 && comps.len() <= MAX_COMPONENTS, || {
        format!("{} components", comps.len())
    })?;
    for s in catalog().into_iter().filter(|s| s.kind == GenKind::Infinite) {
        let t = generate(s.name, s.min_radius + 1).map_err(|e| e.to_string())?;
        let check = component_sum_check(&t).map_err(|e| e.to_string())?;
        ensure(check.passes(), || format!("{}: offending {:?}", s.name, check.offending))?;
        for c in &check.components {
            ensure(c.sum >= Curv::new(1, 15), || format!("{}: sum {}", s.name, c.sum))?;
            if c.sum < Curv::new(1, 12) {
                let ok =
                    c.patterns.len() == 2 && c.patterns.iter().all(|p| p.degrees() == [3, 10, 10]);
                ensure(ok, || format!("{}: small component {:?}", s.name, c.patterns))?;
            }
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let opts = |r| ExploreOptions { max_radius: r, ..Default::default() };
    for f in enumerate_positive(42).map_err(|e| e.to_string())? {
        for p in f.members(42).into_iter().filter(|p| p.curvature() >= Curv::new(1, 12)) {
            let v = explore_pattern(&p, opts(0)).map_err(|e| e.to_string())?;
            ensure(v.is_certified(), || format!("{p} not certified at radius 0"))?;
        }
    }
    for seed in [vec![3, 3, 3, 3, 5], vec![3, 4, 4, 5], vec![3, 3, 5, 5]] {
        let p = Pattern::new(seed);
        let v = explore_pattern(&p, opts(2)).map_err(|e| e.to_string())?;
        ensure(v.is_certified() && v.min_sum >= Curv::new(1, 12), || format!("{p}: {v:?}"))?;
    }
    let hard =
        explore(&VertexStar::from_cycle(vec![3, 11, 12]), opts(1)).map_err(|e| e.to_string())?;
    ensure(!hard.is_certified() && hard.min_sum.is_positive(), || format!("(3,11,12): {hard:?}"))?;
    println!("      note: (3,11,12) inconclusive at radius 1, min_sum {}", hard.min_sum);
    let seed = VertexStar::from_cycle(vec![3, 4, 4, 5]);
    for radius in 0..=2 {
        let mut was_certified = false;
        for budget in [50, 500, 5_000, 50_000] {
            let o =
                ExploreOptions { max_radius: radius, node_budget: budget, ..Default::default() };
            let v = explore(&seed, o).map_err(|e| e.to_string())?;
            ensure(!was_certified || v.is_certified(), || {
                format!("budget {budget} radius {radius}")
            })?;
            was_certified |= v.is_certified();
        }
    }
    let spent = start.elapsed();
    ensure(spent < Duration::from_secs(60), || format!("took {spent:?}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("flat vertex patterns", criterion_1),
        ("positive pattern families", criterion_2),
        ("angle defect equals 2*pi*phi", criterion_3),
        ("closed solids total 2", criterion_4),
        ("extremal examples total 1/12", criterion_5),
        ("window totals are i/12", criterion_6),
        ("large-face vertex sums", criterion_7),
        ("boundary patterns and doubling", criterion_8),
        ("curved components", criterion_9),
        ("bounded gap search", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = check();
        let ms = t.elapsed().as_millis();
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({ms} ms)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
