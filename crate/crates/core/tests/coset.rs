use orbitfold::catalog::preset;
use orbitfold::coset::*;
use orbitfold::field::{q, qi};
use orbitfold::Rational;

/// Virasoro minimal-model character χ_{r,s} of M(p, p′) as integer
/// coefficients of q^{h_{r,s} − c/24 + n}, n < order.
fn rocha_caridi(p: i64, pp: i64, r: i64, s: i64, order: usize) -> (Rational, Vec<i64>) {
    let h = q((p * r - pp * s).pow(2) - (p - pp).pow(2), 4 * p * pp);
    let c = qi(1) - q(6 * (p - pp).pow(2), p * pp);
    // numerator Σ_k q^{a_k} − q^{b_k}, exponents relative to h
    let mut num = vec![0i64; order];
    let base = (p * r - pp * s).pow(2);
    for k in -20i64..=20 {
        for (sign, x) in [(1, 2 * p * pp * k + p * r - pp * s), (-1, 2 * p * pp * k + p * r + pp * s)] {
            let e = x * x - base;
            assert_eq!(e % (4 * p * pp), 0);
            let e = e / (4 * p * pp);
            if (0..order as i64).contains(&e) {
                num[e as usize] += sign;
            }
        }
    }
    // divide by Π(1 − qⁿ)
    let mut out = num;
    for n in 1..order {
        for i in n..order {
            out[i] += out[i - n];
        }
    }
    (h - c / qi(24), out)
}

/// Coefficients of a branching function re-based at an exponent.
fn rebased(b: &orbitfold::QSeries<i64>, exponent: &Rational, order: usize) -> Vec<i64> {
    (0..order).map(|i| b.coefficient_at(&(exponent + qi(i as i64))).unwrap_or(0)).collect()
}

#[test]
fn ising_branching_functions_match_virasoro_characters() {
    let spec = build_coset(&preset("A1").unwrap(), 1, 1).unwrap();
    assert_eq!(spec.central_charge, q(1, 2));
    let order = 8;
    let b = branching_functions(&spec, order).unwrap();
    for (triple, (r, s)) in [([0, 0, 0], (1, 1)), ([0, 0, 2], (1, 3)), ([0, 1, 1], (1, 2))] {
        let (exp, chi) = rocha_caridi(4, 3, r, s, 6);
        assert_eq!(rebased(&b[&triple], &exp, 6), chi, "{triple:?}");
    }
    // vacuum: 1, 0, 1, 1, 2, 2, ...
    assert_eq!(&b[&[0, 0, 0]].coefficients[..4], &[1, 0, 1, 1]);
    assert!(b[&[0, 0, 1]].is_zero());
}

#[test]
fn ising_orbits_and_fusion() {
    let spec = build_coset(&preset("A1").unwrap(), 1, 1).unwrap();
    let group = identification_group(&spec).unwrap();
    assert_eq!(group.len(), 2);
    let orbits = selection_and_orbits(&spec, &group).unwrap();
    let reps: Vec<Triple> = orbits.iter().map(|o| o.representative).collect();
    assert_eq!(reps, vec![[0, 0, 0], [0, 0, 2], [0, 1, 1]]);
    assert!(orbits.iter().all(|o| o.stabilizer_order() == 1));
    let b = branching_functions(&spec, 6).unwrap();
    let res = resolve(&spec, &group, &orbits, &b, 6).unwrap();
    let weights: Vec<Rational> = res.fields.iter().map(|f| f.conformal_weight.clone().unwrap()).collect();
    assert_eq!(weights, vec![qi(0), q(1, 2), q(1, 16)]);
    let md = resolved_modular(&spec, &group, &res).unwrap();
    assert!(md.residuals().max() < 1e-9, "{:?}", md.residuals());
    let v = verlinde_check(&md.s);
    assert!(v.ok(1e-6));
    assert_eq!(v.fusion[2][2], vec![1, 1, 0]);
}

#[test]
fn orbit_members_share_branching_functions() {
    for (k1, k2) in [(1, 1), (1, 2), (2, 2)] {
        let spec = build_coset(&preset("A1").unwrap(), k1, k2).unwrap();
        let group = identification_group(&spec).unwrap();
        let orbits = selection_and_orbits(&spec, &group).unwrap();
        let b = branching_functions(&spec, 4).unwrap();
        for o in &orbits {
            let rep = &b[&o.representative];
            for m in &o.members {
                let other = &b[m];
                let shift = &rep.leading_exponent - &other.leading_exponent;
                assert!(shift.is_integer());
                assert_eq!(rep.valuation(), other.valuation(), "{k1},{k2} {m:?}");
            }
        }
    }
}

#[test]
fn su2_level_two_fixed_point_resolution() {
    let spec = build_coset(&preset("A1").unwrap(), 2, 2).unwrap();
    assert_eq!(spec.central_charge, qi(1));
    let group = identification_group(&spec).unwrap();
    let orbits = selection_and_orbits(&spec, &group).unwrap();
    let fixed: Vec<&FieldOrbit> = orbits.iter().filter(|o| o.stabilizer_order() == 2).collect();
    assert_eq!(fixed.len(), 1);
    assert_eq!(fixed[0].representative, [1, 1, 2]);
    let order = 6;
    let b = branching_functions(&spec, order).unwrap();
    let tw = twining_branching(&spec, &group, &[1, 1, 2], fixed[0].stabilizer[1], order).unwrap();
    assert_eq!(tw.leading_exponent, qi(0));
    assert_eq!(tw.coefficients.iter().filter(|c| !c.is_zero()).count(), 1);
    let res = resolve(&spec, &group, &orbits, &b, order).unwrap();
    let md = resolved_modular(&spec, &group, &res).unwrap();
    let r = md.residuals();
    assert!(r.symmetry < 1e-9 && r.unitarity < 1e-9, "{r:?}");
    let v = verlinde_check(&md.s);
    assert!(v.ok(1e-6), "{}", v.max_deviation);
}

#[test]
fn linking_condition_fixed_points_resolve_integrally() {
    let spec = build_coset(&preset("C2").unwrap(), 1, 1).unwrap();
    let group = identification_group(&spec).unwrap();
    let orbits = selection_and_orbits(&spec, &group).unwrap();
    let order = 6;
    let b = branching_functions(&spec, order).unwrap();
    let res = resolve(&spec, &group, &orbits, &b, order).unwrap();
    for (o, orbit) in orbits.iter().enumerate() {
        let sum: Vec<i64> = (0..order)
            .map(|i| res.fields.iter().filter(|f| f.orbit == o).map(|f| f.character.coefficients[i]).sum())
            .collect();
        assert_eq!(sum, b[&orbit.representative].coefficients);
    }
    assert_eq!(res.fields.len(), 17);
    assert!(matches!(resolved_modular(&spec, &group, &res), Err(orbitfold::Error::UnsupportedAlgebra(_))));
}
