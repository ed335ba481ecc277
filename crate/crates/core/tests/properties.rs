//! Randomized invariants across the library.

use orbitfold::affine::{kac_peterson, modular_residuals, AffineWeightSet};
use orbitfold::catalog::{affinize, preset};
use orbitfold::characters::{irreducible_multiplicities, verma_multiplicities, weyl_dimension, Truncation};
use orbitfold::coset::{branching_functions, build_coset, identification_group, resolve, selection_and_orbits};
use orbitfold::field::{q, qi};
use orbitfold::fold::{fold, omega_star, validate_automorphism, FoldResult};
use orbitfold::twining::{oracle_twining_table, twining_character_via_orbit, Arithmetic, ModuleKind};
use orbitfold::weyl::{hat_reflection, reflect, to_dominant, WeylWord};
use orbitfold::{classify, validate_cartan, weight_inner_product, CartanMatrix, Rational, WeightCoords};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn weight(rank: usize, affine: bool) -> impl Strategy<Value = WeightCoords> {
    (proptest::collection::vec(rational(), rank), rational())
        .prop_map(move |(labels, g)| WeightCoords::new(labels, if affine { g } else { qi(0) }))
}

fn folds() -> Vec<FoldResult> {
    [
        ("A3", vec![2, 1, 0]),
        ("D4", vec![2, 1, 3, 0]),
        ("A2", vec![1, 0]),
        ("E6", vec![5, 1, 4, 3, 2, 0]),
        ("A3aff", vec![2, 3, 0, 1]),
        ("C4aff", vec![4, 3, 2, 1, 0]),
        ("D4aff", vec![1, 0, 2, 4, 3]),
    ]
    .into_iter()
    .filter_map(|(name, perm)| {
        let cm = preset(name).ok()?;
        Some(fold(&cm, &validate_automorphism(&cm, &perm).unwrap()).unwrap())
    })
    .collect()
}

fn form_algebras() -> Vec<CartanMatrix> {
    ["A3", "B3", "C3", "G2", "F4", "A2aff", "C2aff", "G2aff"].iter().map(|n| preset(n).unwrap()).collect()
}

#[test]
fn symmetrizer_symmetrizes_every_preset() {
    for name in orbitfold::catalog::PRESETS {
        let cm = preset(name).unwrap();
        let d = cm.symmetrizer();
        for i in 0..cm.rank() {
            for j in 0..cm.rank() {
                assert_eq!(d[i] * cm.entry(i, j), d[j] * cm.entry(j, i), "{name} ({i},{j})");
            }
        }
    }
}

#[test]
fn folding_preserves_kind() {
    for f in folds() {
        assert_eq!(classify(&f.folded), classify(&f.source), "{:?}", f.source.name());
    }
}

#[test]
fn hat_generators_are_odd() {
    for f in folds() {
        for (a, orbit) in f.orbit_data.orbits.iter().enumerate() {
            let w = WeylWord::from_hat(&f, &[a]).unwrap();
            assert_eq!(w.hat_sign(), Some(-1));
            if f.orbit_data.s[a] == 1 {
                assert_eq!(w.sign(), if orbit.len() % 2 == 0 { 1 } else { -1 });
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_gcm_is_symmetrized(a in -3i64..=0, b in -3i64..=0, c in -3i64..=0, d in -3i64..=0) {
        let rows = vec![vec![2, a, 0], vec![b, 2, c], vec![0, d, 2]];
        if let Ok(cm) = validate_cartan(&rows) {
            let s = cm.symmetrizer();
            for i in 0..3 {
                for j in 0..3 {
                    prop_assert_eq!(s[i] * rows[i][j], s[j] * rows[j][i]);
                }
            }
        }
    }

    #[test]
    fn form_is_symmetric_and_reflection_invariant(idx in 0usize..8, seed in proptest::collection::vec(rational(), 12)) {
        let cm = &form_algebras()[idx];
        let n = cm.rank();
        let affine = cm.is_affine();
        let l = WeightCoords::new(seed[..n].to_vec(), if affine { seed[10].clone() } else { qi(0) });
        let m = WeightCoords::new(seed[5..5 + n].to_vec(), if affine { seed[11].clone() } else { qi(0) });
        let lm = weight_inner_product(cm, &l, &m).unwrap();
        prop_assert_eq!(&lm, &weight_inner_product(cm, &m, &l).unwrap());
        for i in 0..n {
            let (rl, rm) = (reflect(cm, &l, i).unwrap(), reflect(cm, &m, i).unwrap());
            prop_assert_eq!(&lm, &weight_inner_product(cm, &rl, &rm).unwrap());
        }
    }

    #[test]
    fn hat_reflections_commute_with_omega(idx in 0usize..7, seed in proptest::collection::vec(rational(), 6)) {
        let fs = folds();
        let f = &fs[idx % fs.len()];
        let n = f.source.rank();
        let l = WeightCoords::new(seed[..n].to_vec(), if f.source.is_affine() { seed[n % 6].clone() } else { qi(0) });
        for a in 0..f.folded.rank() {
            let lhs = hat_reflection(f, &omega_star(&f.source, &f.automorphism, &l).unwrap(), a).unwrap();
            let rhs = omega_star(&f.source, &f.automorphism, &hat_reflection(f, &l, a).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn projection_is_equivariant_and_scales_the_form(idx in 0usize..7, s1 in weight(5, true), s2 in weight(5, true)) {
        let fs = folds();
        let f = &fs[idx % fs.len()];
        let m = f.folded.rank();
        let cut = |w: &WeightCoords| {
            let g = if f.source.is_affine() { w.grade.clone() } else { qi(0) };
            WeightCoords::new(w.labels[..m].to_vec(), g)
        };
        let (lb, mb) = (cut(&s1), cut(&s2));
        let (l, mu) = (f.lift_weight(&lb).unwrap(), f.lift_weight(&mb).unwrap());
        prop_assert_eq!(&f.project_weight(&l).unwrap(), &lb);
        let n = qi(f.order() as i64);
        prop_assert_eq!(
            weight_inner_product(&f.source, &l, &mu).unwrap(),
            n * weight_inner_product(&f.folded, &lb, &mb).unwrap()
        );
        for a in 0..m {
            let image = f.project_weight(&hat_reflection(f, &l, a).unwrap()).unwrap();
            prop_assert_eq!(image, reflect(&f.folded, &lb, a).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn freudenthal_matches_weyl_dimension(idx in 0usize..4, labels in proptest::collection::vec(0i64..=2, 3)) {
        let cm = preset(["A2", "B2", "G2", "A3"][idx]).unwrap();
        let hw = WeightCoords::from_ints(&labels[..cm.rank()]);
        let table = irreducible_multiplicities(&cm, &hw, 40).unwrap();
        prop_assert_eq!(qi(table.total()), weyl_dimension(&cm, &hw).unwrap());
        // Weyl invariance: every weight shares its multiplicity with its dominant conjugate
        for (n, &mult) in &table.entries {
            let (dom, _) = to_dominant(&cm, &table.weight(&cm, n), 200).unwrap();
            let key = table.entries.keys().find(|k| table.weight(&cm, k) == dom).expect("dominant conjugate present");
            prop_assert_eq!(table.entries[key], mult);
        }
    }

    #[test]
    fn verma_dominates_irreducible_and_prefixes_are_stable(idx in 0usize..3, labels in proptest::collection::vec(0i64..=2, 3), depth in 2usize..6) {
        let cm = preset(["A2", "B2", "A3"][idx]).unwrap();
        let hw = WeightCoords::from_ints(&labels[..cm.rank()]);
        let small = irreducible_multiplicities(&cm, &hw, depth).unwrap();
        let large = irreducible_multiplicities(&cm, &hw, depth + 2).unwrap();
        let verma = verma_multiplicities(&cm, &hw, depth).unwrap();
        for (n, &m) in &small.entries {
            prop_assert_eq!(large.get(n), m);
            prop_assert!(verma.get(n) >= m);
        }
        let trunc = Truncation::height(cm.rank(), depth);
        prop_assert!(large.entries.keys().filter(|n| trunc.contains(n)).all(|n| small.entries.contains_key(n)));
    }

    #[test]
    fn twining_oracle_matches_orbit_algebra(idx in 0usize..3, a in 0i64..=1, b in 0i64..=2, verma in any::<bool>()) {
        let (name, perm, hw) = [
            ("A3", vec![2, 1, 0], vec![a, b, a]),
            ("D4", vec![2, 1, 3, 0], vec![a, b, a, a]),
            ("A4", vec![3, 2, 1, 0], vec![a, b, b, a]),
        ][idx].clone();
        let cm = preset(name).unwrap();
        let aut = validate_automorphism(&cm, &perm).unwrap();
        let f = fold(&cm, &aut).unwrap();
        let hw = WeightCoords::from_ints(&hw);
        let kind = if verma { ModuleKind::Verma } else { ModuleKind::Irreducible };
        let t = Truncation::height(cm.rank(), 5);
        let oracle = oracle_twining_table(&cm, &aut, &hw, &t, kind, Arithmetic::Modular).unwrap();
        let via = twining_character_via_orbit(&f, &hw, &t, kind).unwrap();
        prop_assert!(oracle.diff(&via).is_empty());
        prop_assert!(oracle.support_is_symmetric(&aut));
    }
}

#[test]
fn modular_data_of_catalog_algebras() {
    for name in ["A1", "A2", "A3", "B2", "G2", "B3", "C3", "D4"] {
        let g = affinize(&preset(name).unwrap()).unwrap();
        let max_level = if g.rank() <= 3 { 6 } else { 3 };
        for k in 1..=max_level {
            let md = kac_peterson(&AffineWeightSet::new(&g, k).unwrap()).unwrap();
            let r = modular_residuals(&md.s, &md.t);
            assert!(r.max() < 1e-9, "{name} k={k}: {r:?}");
        }
    }
}

#[test]
fn resolved_cosets_have_a_unique_vacuum_and_integral_characters() {
    for (h, k1, k2) in [("A1", 1, 2), ("A1", 1, 3), ("A1", 2, 2), ("A2", 1, 1)] {
        let spec = build_coset(&preset(h).unwrap(), k1, k2).unwrap();
        let group = identification_group(&spec).unwrap();
        let orbits = selection_and_orbits(&spec, &group).unwrap();
        let order = 4;
        let b = branching_functions(&spec, order).unwrap();
        let res = resolve(&spec, &group, &orbits, &b, order).unwrap();
        let vacua = res.fields.iter().filter(|f| f.conformal_weight == Some(qi(0))).count();
        assert_eq!(vacua, 1, "({h};{k1},{k2})");
        assert!(res.fields.iter().all(|f| f.character.coefficients.iter().all(|&c| c >= 0)));
    }
}
