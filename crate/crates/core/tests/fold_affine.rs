use orbitfold::catalog::preset;
use orbitfold::field::{q, qi};
use orbitfold::fold::{fold, fold_matrix, validate_automorphism, FoldResult};
use orbitfold::{weight_inner_product, Kind, WeightCoords};

fn affine_fixtures() -> Vec<(&'static str, FoldResult)> {
    [
        ("A3aff", vec![2, 3, 0, 1]),
        ("C2aff", vec![2, 1, 0]),
        ("B3aff", vec![1, 0, 2, 3]),
        ("C4aff", vec![4, 3, 2, 1, 0]),
        ("D4aff", vec![1, 0, 2, 4, 3]),
    ]
    .into_iter()
    .map(|(name, perm)| {
        let cm = preset(name).unwrap();
        let aut = validate_automorphism(&cm, &perm).unwrap();
        (name, fold(&cm, &aut).unwrap())
    })
    .collect()
}

#[test]
fn folded_affine_matrices() {
    let f = affine_fixtures();
    assert_eq!(f[0].1.folded.entries(), &[vec![2, -2], vec![-2, 2]]);
    assert_eq!(f[1].1.folded.entries(), &[vec![2, -4], vec![-1, 2]]);
    let btilde = [vec![2, -2, 0], vec![-1, 2, -2], vec![0, -1, 2]];
    assert_eq!(f[2].1.folded.entries(), &btilde);
    assert_eq!(f[3].1.folded.entries(), &btilde);
    for (name, r) in &f {
        assert_eq!(r.folded.kind(), Kind::Affine, "{name}");
    }
}

#[test]
fn dual_coxeter_and_level_scale_by_order() {
    for (name, r) in affine_fixtures() {
        let n = qi(r.order() as i64);
        let g = r.source.dual_coxeter().unwrap();
        assert_eq!(&n * r.folded.dual_coxeter().unwrap(), g, "{name}");
        let mut labels = vec![qi(0); r.source.rank()];
        for o in &r.orbit_data.orbits {
            for &i in o {
                labels[i] = qi(o[0] as i64 % 3);
            }
        }
        let w = WeightCoords::new(labels, q(1, 3));
        let wf = r.project_weight(&w).unwrap();
        assert_eq!(&n * r.folded.level(&wf).unwrap(), r.source.level(&w).unwrap(), "{name}");
        assert_eq!(r.lift_weight(&wf).unwrap(), w, "{name}");
    }
}

#[test]
fn weight_norms_scale_by_order() {
    for (name, r) in affine_fixtures() {
        let n = qi(r.order() as i64);
        let sym = |seed: i64| {
            let labels = (0..r.source.rank())
                .map(|i| q((r.orbit_data.node_orbit[i] as i64 * 7 + seed) % 5 - 1, 1 + seed % 3))
                .collect();
            WeightCoords::new(labels, q(seed, 7))
        };
        for (s1, s2) in [(1, 2), (3, 3), (4, 9), (0, 5)] {
            let (a, b) = (sym(s1), sym(s2));
            let lhs = weight_inner_product(&r.source, &a, &b).unwrap();
            let (fa, fb) = (r.project_weight(&a).unwrap(), r.project_weight(&b).unwrap());
            let rhs = &n * weight_inner_product(&r.folded, &fa, &fb).unwrap();
            assert_eq!(lhs, rhs, "{name} seeds {s1},{s2}");
        }
    }
}

#[test]
fn representative_choice_does_not_matter() {
    for (name, r) in affine_fixtures() {
        let od = &r.orbit_data;
        let rotated: Vec<usize> = od.orbits.iter().map(|o| *o.last().unwrap()).collect();
        let m = fold_matrix(&r.source, &r.automorphism, od, &rotated);
        assert_eq!(m, r.folded.entries(), "{name}");
    }
}
