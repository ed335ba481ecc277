//! Named Cartan matrices.
//!
//! Finite types follow Bourbaki numbering shifted to start at 0:
//!
//! ```text
//! A_n  0 — 1 — … — n−1
//! B_n  0 — 1 — … — n−2 => n−1        (n−1 short)
//! C_n  0 — 1 — … — n−2 <= n−1        (n−1 long)
//! D_n  0 — 1 — … — n−3 — n−2, with n−1 also attached to n−3
//! E_n  0 — 2 — 3 — 4 — … — n−1, with 1 attached to 3
//! F_4  0 — 1 => 2 — 3                 (0, 1 long)
//! G_2  0 <= 1                         (1 long)
//! ```
//!
//! Row `i` holds the labels of `αⁱ`; a long root's row carries the `−2`
//! (or `−3`) toward its short neighbour.
//!
//! Untwisted affine types `Xnaff` prepend the affine node 0 (α⁰ = δ − θ) to
//! the finite diagram, so finite node `i` becomes affine node `i + 1`.
//! E.g. `A3aff` is the 4-cycle 0 — 1 — 2 — 3 — 0 and `C4aff` is
//! `0 => 1 — 2 — 3 <= 4`.

use crate::cartan::{CartanMatrix, Kind};
use crate::error::{Error, Result};

/// Names of the presets exercised by the test-suite and documented in the
/// README; any `Xn`/`Xnaff` of a valid series is accepted by [`preset`].
pub const PRESETS: &[&str] = &[
    "A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2", "D4", "F4", "A1aff", "A2aff", "A3aff", "C2aff", "B3aff", "C4aff",
    "D4aff",
];

/// Looks up a named matrix such as `A3`, `G2` or `B3aff`.
pub fn preset(name: &str) -> Result<CartanMatrix> {
    let unknown = || Error::UnknownPreset(name.to_string());
    let (base, affine) = match name.strip_suffix("aff") {
        Some(b) => (b, true),
        None => (name, false),
    };
    let mut chars = base.chars();
    let series = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let rows = finite_rows(series, n).ok_or_else(unknown)?;
    let finite = CartanMatrix::new(rows)?;
    let cm = if affine { affinize(&finite)? } else { finite };
    Ok(cm.with_name(name))
}

/// Finite Cartan matrix of series `X` and rank `n`.
pub fn finite_rows(series: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match (series, n) {
        ('A', n) if n >= 1 => (1..n).for_each(|i| link(i - 1, i, -1, -1)),
        ('B', n) if n >= 2 => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        ('C', n) if n >= 2 => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        ('D', n) if n >= 4 => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        ('E', n) if (6..=8).contains(&n) => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (3..n).for_each(|i| link(i - 1, i, -1, -1));
        }
        ('F', 4) => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        ('G', 2) => link(0, 1, -1, -3),
        _ => return None,
    }
    Some(a)
}

/// Untwisted affinization: prepends α⁰ = δ − θ, θ the highest root.
pub fn affinize(h: &CartanMatrix) -> Result<CartanMatrix> {
    if h.kind() != Kind::Finite {
        return Err(Error::UnsupportedAlgebra("affinization needs a finite-type matrix".into()));
    }
    let n = h.rank();
    let theta = highest_root(h)?;
    let eps = h.half_norms();
    let mut rows = vec![vec![0i64; n + 1]; n + 1];
    rows[0][0] = 2;
    for j in 0..n {
        // α⁰(Hʲ) = −θ(Hʲ)
        rows[0][j + 1] = -(0..n).map(|m| theta[m] * h.entry(m, j)).sum::<i64>();
        // αʲ(H⁰) = −2(αʲ|θ)/(θ|θ) with (θ|θ) = 2
        let pairing: crate::field::Rational =
            (0..n).map(|m| crate::field::qi(theta[m] * h.entry(j, m)) * &eps[m]).sum();
        rows[j + 1][0] = -crate::field::to_i64(&pairing)
            .ok_or_else(|| Error::Inconsistent("non-integral affine Cartan entry".into()))?;
        for k in 0..n {
            rows[j + 1][k + 1] = h.entry(j, k);
        }
    }
    CartanMatrix::new(rows)?.with_affine_node(0)
}

/// Highest root of a finite-type matrix as a root-lattice vector.
pub fn highest_root(h: &CartanMatrix) -> Result<Vec<i64>> {
    let roots = h.finite_positive_roots()?;
    Ok(roots.last().expect("at least one root").clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affinized_matrices_match_tables() {
        assert_eq!(preset("A1aff").unwrap().entries(), &[vec![2, -2], vec![-2, 2]]);
        assert_eq!(
            preset("C2aff").unwrap().entries(),
            &[vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            preset("A3aff").unwrap().entries(),
            &[vec![2, -1, 0, -1], vec![-1, 2, -1, 0], vec![0, -1, 2, -1], vec![-1, 0, -1, 2]]
        );
        let c4 = preset("C4aff").unwrap();
        assert_eq!(c4.entries()[0], vec![2, -2, 0, 0, 0]);
        assert_eq!(c4.entries()[4], vec![0, 0, 0, -2, 2]);
        assert_eq!(c4.affine().unwrap().kac, vec![1, 2, 2, 2, 1]);
        let b3 = preset("B3aff").unwrap();
        assert_eq!(b3.affine().unwrap().kac, vec![1, 1, 2, 2]);
        assert_eq!(b3.affine().unwrap().dual_kac, vec![1, 1, 2, 1]);
    }

    #[test]
    fn dual_coxeter_numbers() {
        for (name, g) in [("A1aff", 2), ("A2aff", 3), ("A3aff", 4), ("C2aff", 3), ("B3aff", 5), ("C4aff", 5), ("D4aff", 6)] {
            assert_eq!(preset(name).unwrap().dual_coxeter().unwrap(), crate::field::qi(g), "{name}");
        }
    }

    #[test]
    fn every_finite_preset_is_finite() {
        for name in PRESETS.iter().filter(|n| !n.ends_with("aff")) {
            assert_eq!(preset(name).unwrap().kind(), Kind::Finite, "{name}");
        }
        for name in ["E6", "E7", "E8", "E6aff", "G2aff", "F4aff"] {
            assert!(preset(name).is_ok(), "{name}");
        }
        assert!(matches!(preset("Q3"), Err(Error::UnknownPreset(_))));
    }
}
