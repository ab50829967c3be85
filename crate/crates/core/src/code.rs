//! Linear codes in two representations and their weight distributions.
//!
//! A code is either a k x n generator matrix or a multiset of projective
//! points (one multiplicity per point of PG(k-1, q)). The multiset view is
//! the workhorse: the full weight distribution falls out of the q_k
//! hyperplane characters in O(q_k * q_{k-1}) instead of enumerating all q^k
//! codewords. The matrix view exists for I/O and as the independent
//! brute-force oracle.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::geometry::ProjectiveSpace;

/// Guard for message enumeration: q^k * n must stay at or below this.
pub const EXHAUSTIVE_GUARD: u128 = 100_000_000;

/// A k x n generator matrix over GF(q), stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    field: FieldSpec,
    k: u32,
    n: usize,
    entries: Vec<FieldElement>,
}

impl GeneratorMatrix {
    pub fn new(field: FieldSpec, k: u32, n: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != k as usize * n {
            return Err(Error::Parse(format!(
                "matrix needs {} entries, got {}",
                k as usize * n,
                entries.len()
            )));
        }
        for e in &entries {
            if e.index() as u64 >= field.q() {
                return Err(Error::Parse(format!(
                    "element index {} out of range for q={}",
                    e.index(),
                    field.q()
                )));
            }
        }
        Ok(GeneratorMatrix { field, k, n, entries })
    }

    #[inline]
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.n + c]
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.n..(r + 1) * self.n]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.k as usize).map(|r| self.entry(r, c)).collect()
    }

    /// Rank over GF(q) by Gaussian elimination.
    pub fn rank(&self) -> u32 {
        let f = &self.field;
        let mut rows: Vec<Vec<FieldElement>> =
            (0..self.k as usize).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.n {
            let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = f.inv(rows[rank][col]).expect("pivot nonzero");
            for c in col..self.n {
                rows[rank][c] = f.mul(rows[rank][c], inv);
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let factor = rows[r][col];
                    for c in col..self.n {
                        let sub = f.mul(factor, rows[rank][c]);
                        rows[r][c] = f.sub(rows[r][c], sub);
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank as u32
    }

    /// A code is degenerate when some coordinate is identically zero,
    /// i.e. the matrix has a zero column. Returns the first such column.
    pub fn first_zero_column(&self) -> Option<usize> {
        (0..self.n).find(|&c| (0..self.k as usize).all(|r| self.entry(r, c).is_zero()))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.first_zero_column().is_none()
    }

    /// Expands a projective multiset into explicit columns, emitted in
    /// canonical point order with each point repeated by its multiplicity.
    pub fn from_multiset(m: &ProjectiveMultiset) -> Result<GeneratorMatrix> {
        if !m.spans() {
            return Err(Error::RankDeficient);
        }
        let space = m.space();
        let k = space.k() as usize;
        let n = m.n();
        let mut entries = vec![FieldElement::ZERO; k * n];
        let mut col = 0;
        for (i, &mult) in m.multiplicities().iter().enumerate() {
            for _ in 0..mult {
                for (r, &coord) in space.point(i).iter().enumerate() {
                    entries[r * n + col] = coord;
                }
                col += 1;
            }
        }
        GeneratorMatrix::new(space.field().clone(), k as u32, n, entries)
    }

    /// The number of codewords, q^k.
    pub fn codeword_count(&self) -> u128 {
        (self.field.q() as u128).pow(self.k)
    }
}

/// A non-degenerate code as multiplicities on the points of PG(k-1, q).
#[derive(Clone)]
pub struct ProjectiveMultiset {
    space: Arc<ProjectiveSpace>,
    mult: Vec<u64>,
}

impl std::fmt::Debug for ProjectiveMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProjectiveMultiset")
            .field("q", &self.space.field().q())
            .field("k", &self.space.k())
            .field("mult", &self.mult)
            .finish()
    }
}

impl PartialEq for ProjectiveMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.space.field() == other.space.field()
            && self.space.k() == other.space.k()
            && self.mult == other.mult
    }
}

impl Eq for ProjectiveMultiset {}

impl ProjectiveMultiset {
    pub fn new(space: Arc<ProjectiveSpace>, mult: Vec<u64>) -> Result<Self> {
        if mult.len() != space.num_points() {
            return Err(Error::Parse(format!(
                "expected {} multiplicities, got {}",
                space.num_points(),
                mult.len()
            )));
        }
        Ok(ProjectiveMultiset { space, mult })
    }

    /// Normalizes every column of `g` to its projective representative and
    /// tallies it. Fails on a zero column.
    pub fn from_matrix(g: &GeneratorMatrix) -> Result<Self> {
        let space = ProjectiveSpace::build(g.field().clone(), g.k())?;
        Self::from_matrix_in(space, g)
    }

    pub fn from_matrix_in(space: Arc<ProjectiveSpace>, g: &GeneratorMatrix) -> Result<Self> {
        let f = g.field();
        let mut mult = vec![0u64; space.num_points()];
        for c in 0..g.n() {
            let mut col = g.column(c);
            let Some(lead) = col.iter().position(|e| !e.is_zero()) else {
                return Err(Error::ZeroColumn(c));
            };
            let scale = f.inv(col[lead])?;
            for e in col.iter_mut() {
                *e = f.mul(*e, scale);
            }
            let idx = space.index_of(&col).expect("normalized vector is a point");
            mult[idx] += 1;
        }
        Ok(ProjectiveMultiset { space, mult })
    }

    #[inline]
    pub fn space(&self) -> &Arc<ProjectiveSpace> {
        &self.space
    }

    #[inline]
    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    /// Code length n = sum of multiplicities.
    pub fn n(&self) -> usize {
        self.mult.iter().sum::<u64>() as usize
    }

    /// Character of hyperplane `H_s`: the number of columns, with
    /// multiplicity, lying on it.
    pub fn char_of_hyperplane(&self, s: usize) -> Result<u64> {
        let qk = self.space.num_points();
        if s >= qk {
            return Err(Error::HyperplaneOutOfRange { index: s, qk });
        }
        Ok(self
            .space
            .hyperplane_points(s)
            .map(|i| self.mult[i])
            .sum())
    }

    /// All q_k hyperplane characters in hyperplane order.
    pub fn characters(&self) -> Vec<u64> {
        (0..self.space.num_points())
            .map(|s| self.space.hyperplane_points(s).map(|i| self.mult[i]).sum())
            .collect()
    }

    /// The support spans the whole space iff no hyperplane contains every
    /// point of nonzero multiplicity.
    pub fn spans(&self) -> bool {
        if self.mult.iter().all(|&m| m == 0) {
            return false;
        }
        let qk = self.space.num_points();
        let words = qk.div_ceil(64);
        let mut cover = vec![u64::MAX; words];
        if !qk.is_multiple_of(64) {
            cover[words - 1] = (1u64 << (qk % 64)) - 1;
        }
        for (i, &m) in self.mult.iter().enumerate() {
            if m > 0 {
                // hyperplanes through point i: row i of the symmetric table
                for (w, c) in cover.iter_mut().enumerate() {
                    *c &= self.space.incidence().row(i)[w];
                }
            }
        }
        cover.iter().all(|&w| w == 0)
    }

    /// Weight distribution via hyperplane characters: each hyperplane
    /// contributes q-1 codewords of weight n - Char(H_s).
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        if !self.spans() {
            return Err(Error::RankDeficient);
        }
        let n = self.n();
        let q = self.space.field().q();
        let mut counts = vec![0u64; n + 1];
        counts[0] = 1;
        for s in 0..self.space.num_points() {
            let ch = self.char_of_hyperplane(s)? as usize;
            counts[n - ch] += q - 1;
        }
        Ok(WeightDistribution { counts })
    }
}

/// The vector (A_0, ..., A_n); A_i counts codewords of weight i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Self {
        assert!(!counts.is_empty());
        WeightDistribution { counts }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    #[inline]
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Sorted set of distinct nonzero weights.
    pub fn weight_set(&self) -> Vec<u64> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i as u64)
            .collect()
    }

    /// Minimum nonzero weight; `None` for the zero code.
    pub fn min_distance(&self) -> Option<u64> {
        self.weight_set().first().copied()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Sum of i * A_i; equals n(q^k - q^{k-1}) exactly when the code is
    /// non-degenerate.
    pub fn weighted_sum(&self) -> u128 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &a)| i as u128 * a as u128)
            .sum()
    }
}

/// Brute-force weight distribution: enumerates all q^k messages in odometer
/// order (first row coefficient most significant) and tallies w(mG).
pub fn weights_exhaustive(g: &GeneratorMatrix) -> Result<WeightDistribution> {
    let count = g.codeword_count();
    if count * g.n() as u128 > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "q^k * n = {} exceeds {}",
            count * g.n() as u128,
            EXHAUSTIVE_GUARD
        )));
    }
    let mut counts = vec![0u64; g.n() + 1];
    let partial = vec![FieldElement::ZERO; g.n()];
    enumerate_rows(g, 0, &partial, &mut counts);
    debug_assert_eq!(counts.iter().sum::<u64>() as u128, count);
    Ok(WeightDistribution { counts })
}

fn enumerate_rows(g: &GeneratorMatrix, depth: usize, partial: &[FieldElement], counts: &mut Vec<u64>) {
    let f = g.field();
    if depth == g.k() as usize {
        let w = partial.iter().filter(|e| !e.is_zero()).count();
        counts[w] += 1;
        return;
    }
    let row = g.row(depth);
    for v in 0..f.q() as u32 {
        let scalar = FieldElement(v);
        if scalar.is_zero() {
            enumerate_rows(g, depth + 1, partial, counts);
        } else {
            let next: Vec<FieldElement> = partial
                .iter()
                .zip(row)
                .map(|(&acc, &r)| f.add(acc, f.mul(scalar, r)))
                .collect();
            enumerate_rows(g, depth + 1, &next, counts);
        }
    }
}

/// Hamming weight of a vector.
pub fn hamming_weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::gaussian;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    fn matrix(q: u64, k: u32, rows: &[&[u32]]) -> GeneratorMatrix {
        let n = rows[0].len();
        let entries: Vec<FieldElement> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&e| FieldElement(e)))
            .collect();
        GeneratorMatrix::new(gf(q), k, n, entries).unwrap()
    }

    #[test]
    fn multiset_expansion() {
        let space = ProjectiveSpace::build(gf(2), 2).unwrap();
        let m = ProjectiveMultiset::new(space, vec![1, 0, 2]).unwrap();
        let g = GeneratorMatrix::from_multiset(&m).unwrap();
        assert_eq!(g.n(), 3);
        // columns (0,1), (1,1), (1,1) in canonical point order
        assert_eq!(g.column(0), vec![FieldElement(0), FieldElement(1)]);
        assert_eq!(g.column(1), vec![FieldElement(1), FieldElement(1)]);
        assert_eq!(g.column(2), vec![FieldElement(1), FieldElement(1)]);
    }

    #[test]
    fn multiset_sum_gives_length() {
        let space = ProjectiveSpace::build(gf(2), 2).unwrap();
        let m = ProjectiveMultiset::new(space, vec![1, 2, 4]).unwrap();
        assert_eq!(m.n(), 7);
        let g = GeneratorMatrix::from_multiset(&m).unwrap();
        assert_eq!(g.n(), 7);
    }

    #[test]
    fn rank_deficient_multiset_rejected() {
        let space = ProjectiveSpace::build(gf(2), 2).unwrap();
        let m = ProjectiveMultiset::new(space, vec![1, 0, 0]).unwrap();
        assert!(!m.spans());
        assert_eq!(GeneratorMatrix::from_multiset(&m), Err(Error::RankDeficient));
    }

    #[test]
    fn b2_multiset_has_doubled_point() {
        // rows (1,0,0) and (1,1,1): columns (1,1),(0,1),(0,1)
        let g = matrix(2, 2, &[&[1, 0, 0], &[1, 1, 1]]);
        let m = ProjectiveMultiset::from_matrix(&g).unwrap();
        // points are [(0,1),(1,0),(1,1)]; (0,1) twice, (1,1) once
        assert_eq!(m.multiplicities(), &[2, 0, 1]);
    }

    #[test]
    fn identity_matrix_multiset() {
        let g = matrix(3, 2, &[&[1, 0], &[0, 1]]);
        let m = ProjectiveMultiset::from_matrix(&g).unwrap();
        let ones = m.multiplicities().iter().filter(|&&x| x == 1).count();
        assert_eq!(ones, 2);
        assert_eq!(m.n(), 2);
    }

    #[test]
    fn zero_column_is_degenerate() {
        let g = matrix(2, 2, &[&[1, 0, 0], &[1, 0, 1]]);
        assert_eq!(g.first_zero_column(), Some(1));
        assert_eq!(ProjectiveMultiset::from_matrix(&g), Err(Error::ZeroColumn(1)));
    }

    #[test]
    fn rank_computation() {
        let g = matrix(2, 2, &[&[1, 0, 1], &[1, 0, 1]]);
        assert_eq!(g.rank(), 1);
        let g = matrix(3, 2, &[&[1, 0], &[0, 1]]);
        assert_eq!(g.rank(), 2);
    }

    #[test]
    fn exhaustive_weights_k1() {
        let g = matrix(2, 1, &[&[1]]);
        let wd = weights_exhaustive(&g).unwrap();
        assert_eq!(wd.counts(), &[1, 1]);
    }

    #[test]
    fn projective_weights_spec_example() {
        // mult = (1,2,4) over GF(2), k=2: characters 2,1,4 -> weights 5,6,3
        let space = ProjectiveSpace::build(gf(2), 2).unwrap();
        let m = ProjectiveMultiset::new(space, vec![1, 2, 4]).unwrap();
        assert_eq!(m.characters(), vec![2, 1, 4]);
        let wd = m.weight_distribution().unwrap();
        assert_eq!(wd.weight_set(), vec![3, 5, 6]);
        assert_eq!(wd.counts()[3], 1);
        assert_eq!(wd.counts()[5], 1);
        assert_eq!(wd.counts()[6], 1);
    }

    #[test]
    fn char_of_hyperplane_examples() {
        let space = ProjectiveSpace::build(gf(2), 2).unwrap();
        let m = ProjectiveMultiset::new(space.clone(), vec![1, 2, 4]).unwrap();
        assert_eq!(m.char_of_hyperplane(2).unwrap(), 4); // H_2 = {(1,1)}
        assert!(m.char_of_hyperplane(3).is_err());

        let uniform = ProjectiveMultiset::new(space, vec![1, 1, 1]).unwrap();
        for s in 0..3 {
            assert_eq!(uniform.char_of_hyperplane(s).unwrap(), 1);
        }
        // all weights 3 - 1 = 2
        let wd = uniform.weight_distribution().unwrap();
        assert_eq!(wd.weight_set(), vec![2]);
    }

    #[test]
    fn algorithms_agree_on_small_codes() {
        let space = ProjectiveSpace::build(gf(3), 2).unwrap();
        let m = ProjectiveMultiset::new(space, vec![2, 1, 3, 1]).unwrap();
        let g = GeneratorMatrix::from_multiset(&m).unwrap();
        assert_eq!(weights_exhaustive(&g).unwrap(), m.weight_distribution().unwrap());
    }

    #[test]
    fn roundtrip_multiset_matrix() {
        let space = ProjectiveSpace::build(gf(4), 2).unwrap();
        let m = ProjectiveMultiset::new(space, vec![1, 3, 0, 2, 1]).unwrap();
        let g = GeneratorMatrix::from_multiset(&m).unwrap();
        let back = ProjectiveMultiset::from_matrix(&g).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn weight_distribution_invariants() {
        let q = 3u64;
        let k = 2u32;
        let space = ProjectiveSpace::build(gf(q), k).unwrap();
        let m = ProjectiveMultiset::new(space, vec![1, 2, 1, 2]).unwrap();
        let wd = m.weight_distribution().unwrap();
        assert_eq!(wd.counts()[0], 1);
        assert_eq!(wd.total() as u128, (q as u128).pow(k));
        for (i, &a) in wd.counts().iter().enumerate().skip(1) {
            assert_eq!(a % (q - 1), 0, "A_{i} not divisible by q-1");
        }
        // non-degeneracy identity: sum i*A_i = n (q^k - q^{k-1})
        let n = wd.n() as u128;
        let expect = n * ((q as u128).pow(k) - (q as u128).pow(k - 1));
        assert_eq!(wd.weighted_sum(), expect);
        let _ = gaussian(q, k);
    }

    #[test]
    fn exhaustive_guard_trips() {
        // 2^27 messages of length 1 exceed the q^k * n <= 1e8 guard
        let entries = vec![FieldElement(1); 27];
        let g = GeneratorMatrix::new(gf(2), 27, 1, entries).unwrap();
        assert!(matches!(weights_exhaustive(&g), Err(Error::GuardExceeded(_))));
    }
}
