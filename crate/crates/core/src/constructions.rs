//! Explicit families of maximum weight spectrum codes.

use std::sync::Arc;

use crate::code::{GeneratorMatrix, ProjectiveMultiset};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::geometry::{gaussian, ProjectiveSpace};

pub const BK_MAX_K: u32 = 20;
pub const HYPERPLANE_SUM_MAX_POINTS: u64 = 1_000;
pub const POWERS_MAX_POINTS: u64 = 24;

/// The binary [2^k - 1, k, 1] code whose i-th row starts with 2^i - 1 ones.
/// Every weight from 1 to n occurs exactly once.
pub fn binary_full_spectrum(k: u32) -> Result<GeneratorMatrix> {
    if !(1..=BK_MAX_K).contains(&k) {
        return Err(Error::KOutOfRange { k, max: BK_MAX_K });
    }
    let field = FieldSpec::make(2, 1)?;
    let n = (1usize << k) - 1;
    let mut entries = vec![FieldElement::ZERO; k as usize * n];
    for i in 0..k as usize {
        let ones = (1usize << (i + 1)) - 1;
        for c in 0..ones {
            entries[i * n + c] = FieldElement::ONE;
        }
    }
    GeneratorMatrix::new(field, k, n, entries)
}

/// The two-dimensional [q(q+1)/2, 2, q(q-1)/2] code over GF(q): for each
/// t = 1..q-1 it has t columns (1, a^t) with a a primitive element, followed
/// by q columns (1, 0). Strictly compact for every q.
pub fn two_dim_strictly_compact(field: &FieldSpec) -> Result<GeneratorMatrix> {
    let q = field.q();
    let alpha = field.primitive_element();
    let n = (q * (q + 1) / 2) as usize;
    let mut top = Vec::with_capacity(n);
    let mut bottom = Vec::with_capacity(n);
    for t in 1..q {
        let val = field.pow(alpha, t);
        for _ in 0..t {
            top.push(FieldElement::ONE);
            bottom.push(val);
        }
    }
    for _ in 0..q {
        top.push(FieldElement::ONE);
        bottom.push(FieldElement::ZERO);
    }
    top.extend(bottom);
    GeneratorMatrix::new(field.clone(), 2, n, top)
}

/// Multiset in which each point receives the sum of the indices of the
/// hyperplanes through it. The hyperplane characters are then affine in the
/// hyperplane index with slope q_{k-1} - q_{k-2}, hence pairwise distinct.
pub fn hyperplane_index_sum(field: &FieldSpec, k: u32) -> Result<ProjectiveMultiset> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(2));
    }
    let qk = gaussian(field.q(), k);
    if qk > HYPERPLANE_SUM_MAX_POINTS {
        return Err(Error::GuardExceeded(format!(
            "hyperplane-sum construction limited to q_k <= {HYPERPLANE_SUM_MAX_POINTS}"
        )));
    }
    let space = ProjectiveSpace::build(field.clone(), k)?;
    let qk = qk as usize;
    let mut mult = vec![0u64; qk];
    for s in 0..qk {
        for i in space.hyperplane_points(s) {
            mult[i] += s as u64;
        }
    }
    ProjectiveMultiset::new(space, mult)
}

/// Multiset assigning multiplicity 2^i to point `labeling[i]` (identity when
/// absent), so n = 2^{q_k} - 1. Distinct hyperplanes hold distinct point
/// sets, so their characters are distinct binary sums and the code is MWS
/// under every labeling. The minimum distance depends on the labeling and is
/// always measured, never assumed.
pub fn powers_of_two(
    field: &FieldSpec,
    k: u32,
    labeling: Option<&[usize]>,
) -> Result<ProjectiveMultiset> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(2));
    }
    let qk = gaussian(field.q(), k);
    if qk > POWERS_MAX_POINTS {
        return Err(Error::GuardExceeded(format!(
            "powers-of-two construction limited to q_k <= {POWERS_MAX_POINTS}"
        )));
    }
    let qk = qk as usize;
    let space = ProjectiveSpace::build(field.clone(), k)?;
    let mut mult = vec![0u64; qk];
    match labeling {
        None => {
            for (i, m) in mult.iter_mut().enumerate() {
                *m = 1u64 << i;
            }
        }
        Some(perm) => {
            if perm.len() != qk {
                return Err(Error::BadLabeling);
            }
            let mut seen = vec![false; qk];
            for (i, &p) in perm.iter().enumerate() {
                if p >= qk || seen[p] {
                    return Err(Error::BadLabeling);
                }
                seen[p] = true;
                mult[p] = 1u64 << i;
            }
        }
    }
    ProjectiveMultiset::new(space, mult)
}

/// Expected parameters of the hyperplane-index-sum construction.
pub fn hyperplane_sum_expected(q: u64, k: u32) -> (u64, u64) {
    let qk = gaussian(q, k);
    let qk1 = gaussian(q, k - 1);
    let pairs = qk * (qk - 1) / 2;
    let n = qk1 * pairs;
    let d = q.pow(k - 2) * (pairs - qk + 1);
    (n, d)
}

/// Expected character of hyperplane s in the hyperplane-index-sum code:
/// q_{k-2} C(q_k, 2) + (q_{k-1} - q_{k-2}) s.
pub fn hyperplane_sum_expected_char(q: u64, k: u32, s: u64) -> u64 {
    let qk = gaussian(q, k);
    let qk1 = gaussian(q, k - 1);
    let qk2 = gaussian(q, k - 2);
    qk2 * (qk * (qk - 1) / 2) + (qk1 - qk2) * s
}

/// Spread forced on the hyperplane-index-sum code by its length:
/// (q_k q_{k-1} / 2)(q_k q_{k-1} - q_{k-1} - q).
pub fn hyperplane_sum_expected_spread(q: u64, k: u32) -> u64 {
    let prod = gaussian(q, k) * gaussian(q, k - 1);
    prod * (prod - gaussian(q, k - 1) - q) / 2
}

/// The spread printed in the source statement of the construction,
/// q_k q_{k-1}(q_k q_{k-1} + q_{k-1} - q)/2; differs from the measured value
/// and is kept only for deviation reporting.
pub fn hyperplane_sum_printed_spread(q: u64, k: u32) -> u64 {
    let prod = gaussian(q, k) * gaussian(q, k - 1);
    prod * (prod + gaussian(q, k - 1) - q) / 2
}

/// The minimum distance printed for the powers-of-two construction,
/// 2^{q^{k-1} - 1} - 1; disagrees with the measured value and is kept only
/// for deviation reporting.
pub fn powers_printed_distance(q: u64, k: u32) -> u64 {
    (1u64 << (q.pow(k - 1) - 1)) - 1
}

/// Shared space helper for callers that build several multisets.
pub fn space_for(field: &FieldSpec, k: u32) -> Result<Arc<ProjectiveSpace>> {
    ProjectiveSpace::build(field.clone(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::weights_exhaustive;
    use crate::spectrum::classify;

    #[test]
    fn bk_k3_matches_printed_matrix() {
        let g = binary_full_spectrum(3).unwrap();
        assert_eq!(g.n(), 7);
        let rows: Vec<Vec<u32>> = (0..3)
            .map(|r| g.row(r).iter().map(|e| e.index()).collect())
            .collect();
        assert_eq!(rows[0], vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(rows[1], vec![1, 1, 1, 0, 0, 0, 0]);
        assert_eq!(rows[2], vec![1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn bk_small_cases() {
        let g = binary_full_spectrum(1).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.entry(0, 0), FieldElement(1));
        assert!(binary_full_spectrum(0).is_err());
        assert!(binary_full_spectrum(21).is_err());

        // k=4: every weight 1..15 exactly once
        let g = binary_full_spectrum(4).unwrap();
        let wd = weights_exhaustive(&g).unwrap();
        assert_eq!(wd.weight_set(), (1..=15).collect::<Vec<u64>>());
        let rep = classify(&wd, 2, 4);
        assert!(rep.is_fws);
    }

    #[test]
    fn b3_spectrum_is_full() {
        let g = binary_full_spectrum(3).unwrap();
        let wd = weights_exhaustive(&g).unwrap();
        assert_eq!(wd.counts(), &[1, 1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn dq_q3_columns_and_weights() {
        let f = FieldSpec::make(3, 1).unwrap();
        let g = two_dim_strictly_compact(&f).unwrap();
        assert_eq!(g.n(), 6);
        // alpha = 2: one column (1,2), two columns (1,1), three columns (1,0)
        let cols: Vec<Vec<u32>> = (0..6)
            .map(|c| g.column(c).iter().map(|e| e.index()).collect())
            .collect();
        assert_eq!(
            cols,
            vec![
                vec![1, 2],
                vec![1, 1],
                vec![1, 1],
                vec![1, 0],
                vec![1, 0],
                vec![1, 0]
            ]
        );
        let wd = weights_exhaustive(&g).unwrap();
        assert_eq!(wd.counts()[3..=6], [2, 2, 2, 2]);
        assert_eq!(wd.counts()[0], 1);
    }

    #[test]
    fn dq_q2_coincides_with_b2() {
        let f = FieldSpec::make(2, 1).unwrap();
        let d2 = two_dim_strictly_compact(&f).unwrap();
        let b2 = binary_full_spectrum(2).unwrap();
        assert_eq!(d2.n(), b2.n());
        assert_eq!(
            weights_exhaustive(&d2).unwrap(),
            weights_exhaustive(&b2).unwrap()
        );
    }

    #[test]
    fn dq_q4_strictly_compact() {
        let f = FieldSpec::make(2, 2).unwrap();
        let g = two_dim_strictly_compact(&f).unwrap();
        assert_eq!(g.n(), 10);
        let wd = weights_exhaustive(&g).unwrap();
        let rep = classify(&wd, 4, 2);
        assert!(rep.is_strictly_compact && !rep.is_fws);
        assert_eq!(rep.d, Some(6));
    }

    #[test]
    fn hyperplane_sum_gf2_k2() {
        let f = FieldSpec::make(2, 1).unwrap();
        let m = hyperplane_index_sum(&f, 2).unwrap();
        assert_eq!(m.multiplicities(), &[1, 0, 2]);
        assert_eq!(m.n(), 3);
        let wd = m.weight_distribution().unwrap();
        assert_eq!(wd.weight_set(), vec![1, 2, 3]);
    }

    #[test]
    fn hyperplane_sum_gf2_k3() {
        let f = FieldSpec::make(2, 1).unwrap();
        let m = hyperplane_index_sum(&f, 3).unwrap();
        assert_eq!(m.n(), 63); // 3 * C(7,2)
        let (n, d) = hyperplane_sum_expected(2, 3);
        assert_eq!(n, 63);
        assert_eq!(d, 30);
        // Char(H_s) = 21 + 2s
        for s in 0..7 {
            assert_eq!(m.char_of_hyperplane(s).unwrap(), 21 + 2 * s as u64);
            assert_eq!(
                hyperplane_sum_expected_char(2, 3, s as u64),
                21 + 2 * s as u64
            );
        }
        let wd = m.weight_distribution().unwrap();
        assert_eq!(wd.min_distance(), Some(30));
    }

    #[test]
    fn hyperplane_sum_spread_forms() {
        // measured spread at (2,2) is 0; the printed formula would give 3
        assert_eq!(hyperplane_sum_expected_spread(2, 2), 0);
        assert_eq!(hyperplane_sum_printed_spread(2, 2), 3);
        assert_eq!(hyperplane_sum_expected_spread(2, 3), 168);
    }

    #[test]
    fn powers_gf2_k2() {
        let f = FieldSpec::make(2, 1).unwrap();
        let m = powers_of_two(&f, 2, None).unwrap();
        assert_eq!(m.n(), 7);
        assert_eq!(m.characters(), vec![2, 1, 4]);
        let wd = m.weight_distribution().unwrap();
        assert_eq!(wd.weight_set(), vec![3, 5, 6]);
    }

    #[test]
    fn powers_gf2_k3_distinct_weights() {
        let f = FieldSpec::make(2, 1).unwrap();
        let m = powers_of_two(&f, 3, None).unwrap();
        assert_eq!(m.n(), 127);
        let wd = m.weight_distribution().unwrap();
        assert_eq!(wd.weight_set().len(), 7);
    }

    #[test]
    fn powers_gf3_k2() {
        let f = FieldSpec::make(3, 1).unwrap();
        let m = powers_of_two(&f, 2, None).unwrap();
        assert_eq!(m.n(), 15); // 2^4 - 1
        let wd = m.weight_distribution().unwrap();
        assert_eq!(wd.weight_set().len(), 4);
    }

    #[test]
    fn powers_labeling_validation() {
        let f = FieldSpec::make(2, 1).unwrap();
        assert!(powers_of_two(&f, 2, Some(&[0, 1])).is_err());
        assert!(powers_of_two(&f, 2, Some(&[0, 1, 1])).is_err());
        assert!(powers_of_two(&f, 2, Some(&[0, 1, 3])).is_err());
        let m = powers_of_two(&f, 2, Some(&[2, 0, 1])).unwrap();
        // power 2^0 lands on point 2, 2^1 on point 0, 2^2 on point 1
        assert_eq!(m.multiplicities(), &[2, 4, 1]);
    }

    #[test]
    fn powers_mws_under_any_labeling() {
        let f = FieldSpec::make(2, 1).unwrap();
        // all 6 labelings of the 3 points
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            let m = powers_of_two(&f, 2, Some(&p)).unwrap();
            let wd = m.weight_distribution().unwrap();
            assert_eq!(wd.weight_set().len(), 3, "labeling {p:?}");
            // d = 3 under every labeling of the 3 points
            assert_eq!(wd.min_distance(), Some(3));
        }
    }

    #[test]
    fn guards_enforced() {
        let f = FieldSpec::make(2, 1).unwrap();
        assert!(matches!(
            powers_of_two(&f, 5, None), // q_k = 31 > 24
            Err(Error::GuardExceeded(_))
        ));
        let f5 = FieldSpec::make(5, 1).unwrap();
        assert!(hyperplane_index_sum(&f5, 5).is_ok());
        assert!(matches!(
            hyperplane_index_sum(&f5, 6),
            Err(Error::GuardExceeded(_))
        ));
    }
}
