//! The Cayley-Bacharach predicate CB(k), failure witnesses, CB levels and
//! Hilbert functions of point ideals.
//!
//! A finite set Γ is CB(k) when every degree-k hypersurface through all but
//! one point of Γ also passes through the omitted point, for every choice of
//! omitted point. Rather than quantifying over hypersurfaces, the test
//! compares ranks: dropping the i-th evaluation row must not change the rank
//! of the degree-k evaluation matrix. When it does, a kernel form of the
//! reduced matrix separates the omitted point and is returned as a verified
//! witness.

use crate::error::CbError;
use crate::field::Scalar;
use crate::geometry::{binomial, evaluation_matrix, HomogeneousForm, MonomialBasis, PointSet};

/// Certificate that Γ is not CB(k): a degree-k form vanishing on Γ minus
/// one point but not at that point.
#[derive(Clone, Debug)]
pub struct CbFailureWitness<K: Scalar> {
    /// Index of the separated point, first failing index in point order.
    pub index: usize,
    /// Canonical kernel form of the evaluation matrix of Γ without that point.
    pub form: HomogeneousForm<K>,
    /// Nonzero value of the form at the separated point.
    pub value: K,
}

impl<K: Scalar> CbFailureWitness<K> {
    /// Re-verifies the witness against the set it certifies: zero at every
    /// other point, nonzero at the separated one.
    pub fn verify(&self, gamma: &PointSet<K>, degree: usize) -> bool {
        if self.form.degree() != degree || self.form.is_zero() {
            return false;
        }
        if self.value.is_zero() || self.form.eval(gamma.point(self.index)) != self.value {
            return false;
        }
        gamma
            .points()
            .iter()
            .enumerate()
            .all(|(j, p)| j == self.index || self.form.eval(p).is_zero())
    }
}

/// Outcome of the CB test: the boolean plus a witness when it fails.
#[derive(Clone, Debug)]
pub enum CbOutcome<K: Scalar> {
    Holds,
    Fails(CbFailureWitness<K>),
}

impl<K: Scalar> CbOutcome<K> {
    pub fn holds(&self) -> bool {
        matches!(self, CbOutcome::Holds)
    }
}

/// Dimension of the space of degree-k forms vanishing on Γ:
/// `C(n+k, n) - rank(evaluation matrix)`.
pub fn h0_ideal<K: Scalar>(gamma: &PointSet<K>, degree: usize) -> usize {
    let total = binomial(gamma.ambient_dim() + degree, gamma.ambient_dim());
    total - evaluation_matrix(gamma, degree).rank()
}

/// Number of independent conditions Γ imposes on degree-t forms.
pub fn hilbert_function<K: Scalar>(gamma: &PointSet<K>, t: usize) -> usize {
    evaluation_matrix(gamma, t).rank()
}

/// Decides CB(k) for k >= 1 on a non-empty set. On failure the witness uses
/// the first failing point index and the canonical kernel form.
pub fn is_cb<K: Scalar>(gamma: &PointSet<K>, k: usize) -> Result<CbOutcome<K>, CbError> {
    if k == 0 {
        return Err(CbError::DegreeOutOfRange);
    }
    assert!(!gamma.is_empty(), "is_cb requires a non-empty point set");
    let full_rank = evaluation_matrix(gamma, k).rank();
    for i in 0..gamma.len() {
        let reduced = gamma.without_index(i);
        let m = evaluation_matrix(&reduced, k);
        if m.rank() == full_rank {
            continue;
        }
        // Rank dropped: some canonical kernel form of the reduced matrix is
        // nonzero at the omitted point.
        let basis = MonomialBasis::new(gamma.ambient_dim(), k);
        for v in m.kernel_basis() {
            let form = HomogeneousForm::new(basis.clone(), v);
            let value = form.eval(gamma.point(i));
            if !value.is_zero() {
                let witness = CbFailureWitness { index: i, form, value };
                debug_assert!(witness.verify(gamma, k));
                return Ok(CbOutcome::Fails(witness));
            }
        }
        unreachable!("rank drop guarantees a separating kernel form");
    }
    Ok(CbOutcome::Holds)
}

/// Convenience wrapper returning only the boolean.
pub fn is_cb_bool<K: Scalar>(gamma: &PointSet<K>, k: usize) -> bool {
    is_cb(gamma, k).map(|o| o.holds()).unwrap_or(false)
}

/// Largest k <= k_max with CB(k) true, testing every k independently; no
/// monotonicity in k is assumed anywhere.
pub fn cb_level<K: Scalar>(gamma: &PointSet<K>, k_max: usize) -> Option<usize> {
    (1..=k_max).filter(|&k| is_cb_bool(gamma, k)).max()
}

/// Default scan ceiling for [`cb_level`]: a non-empty CB(k) set has at
/// least k+2 points, so levels above |Γ|-2 are impossible.
pub fn default_k_max(point_count: usize) -> usize {
    point_count.saturating_sub(2)
}

/// Per-k verdicts for the level scan, in increasing k.
pub fn cb_scan<K: Scalar>(gamma: &PointSet<K>, k_max: usize) -> Vec<(usize, bool)> {
    (1..=k_max).map(|k| (k, is_cb_bool(gamma, k))).collect()
}

/// Level predicted after removing r positive-dimensional linear spaces from
/// a CB(k) set: k - r, defined only for k > r >= 1.
pub fn expected_level_after_linear_removal(k: usize, removed: usize) -> Result<usize, CbError> {
    if removed == 0 || k <= removed {
        return Err(CbError::LevelUnderflow { k, removed });
    }
    Ok(k - removed)
}

/// Level predicted after removing the points on an integral non-degenerate
/// curve of degree d in P^n from a CB(k) set: k + n - d - 2, the degree
/// bound for hypersurfaces cutting out such a curve.
pub fn expected_level_after_curve_removal(
    k: usize,
    ambient_dim: usize,
    curve_degree: usize,
) -> Result<usize, CbError> {
    let level = k as i64 + ambient_dim as i64 - curve_degree as i64 - 2;
    if level < 1 {
        return Err(CbError::LevelUnderflow {
            k,
            removed: (curve_degree + 2).saturating_sub(ambient_dim),
        });
    }
    Ok(level as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField};

    fn f11() -> PrimeField {
        PrimeField::new(11).unwrap()
    }

    fn pts(field: PrimeField, dim: usize, coords: &[&[i64]]) -> PointSet<Fp> {
        PointSet::from_ints(field, dim, coords).unwrap()
    }

    #[test]
    fn collinear_three_points_are_cb1() {
        let gamma = pts(f11(), 2, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert!(is_cb(&gamma, 1).unwrap().holds());
        assert_eq!(cb_level(&gamma, default_k_max(3)), Some(1));
    }

    #[test]
    fn triangle_fails_with_verified_witness() {
        let gamma = pts(f11(), 2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        match is_cb(&gamma, 1).unwrap() {
            CbOutcome::Holds => panic!("a triangle is not CB(1)"),
            CbOutcome::Fails(w) => {
                assert_eq!(w.index, 0);
                assert!(w.verify(&gamma, 1));
            }
        }
    }

    #[test]
    fn two_points_have_no_level() {
        let gamma = pts(f11(), 2, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(cb_level(&gamma, default_k_max(2)), None);
        assert!(!is_cb_bool(&gamma, 1));
    }

    #[test]
    fn h0_ideal_examples() {
        let f = f11();
        let single = pts(f, 2, &[&[1, 2, 3]]);
        assert_eq!(h0_ideal(&single, 1), 2); // pencil of lines through a point

        let empty = PointSet::<Fp>::new(f, 2, vec![]).unwrap();
        assert_eq!(h0_ideal(&empty, 2), 6);
        assert_eq!(hilbert_function(&single, 0), 1);
    }

    #[test]
    fn removal_level_arithmetic() {
        assert_eq!(expected_level_after_linear_removal(5, 1), Ok(4));
        assert_eq!(expected_level_after_linear_removal(7, 3), Ok(4));
        assert!(expected_level_after_linear_removal(2, 2).is_err());

        // In P^3 a degree-d curve removal predicts k - d + 1.
        assert_eq!(expected_level_after_curve_removal(5, 3, 2), Ok(4));
        // In P^4: k - d + 2.
        assert_eq!(expected_level_after_curve_removal(5, 4, 2), Ok(5));
        assert_eq!(expected_level_after_curve_removal(3, 3, 3), Ok(1));
        assert!(expected_level_after_curve_removal(2, 3, 4).is_err());
    }

    #[test]
    fn rejects_degenerate_degree() {
        let gamma = pts(f11(), 2, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(matches!(is_cb(&gamma, 0), Err(CbError::DegreeOutOfRange)));
    }
}
