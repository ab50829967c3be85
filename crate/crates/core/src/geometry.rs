//! Points and hyperplanes of PG(k-1, q) with their incidence structure.
//!
//! Points are the normalized nonzero vectors of length k (first nonzero
//! coordinate equal to 1), listed in lexicographic order of their index
//! tuples with the leftmost coordinate most significant. Hyperplane `H_s` is
//! the orthogonal complement of point `s` under the standard dot product, so
//! point and hyperplane indices range over the same `0..q_k` and the
//! incidence relation is symmetric.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Default ceiling on the number of points.
pub const DEFAULT_POINT_CEILING: u64 = 100_000;

/// Gaussian point count q_j = (q^j - 1)/(q - 1); q_0 = 0, q_1 = 1.
pub fn gaussian(q: u64, j: u32) -> u64 {
    let mut acc: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..j {
        acc += pw;
        pw *= q as u128;
    }
    u64::try_from(acc).expect("point count overflows u64")
}

/// Square bit table, row-major.
pub(crate) struct BitTable {
    words: usize,
    bits: Vec<u64>,
}

impl BitTable {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitTable { words, bits: vec![0; n * words] }
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    pub fn row_count(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn pair_count(&self, r: usize, s: usize) -> usize {
        self.row(r)
            .iter()
            .zip(self.row(s))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

/// The point/hyperplane geometry of PG(k-1, q).
pub struct ProjectiveSpace {
    field: FieldSpec,
    k: u32,
    points: Vec<Vec<FieldElement>>,
    incidence: BitTable,
    point_index: HashMap<Vec<u32>, usize>,
}

impl ProjectiveSpace {
    /// Enumerates the q_k points and fills the incidence table.
    pub fn build(field: FieldSpec, k: u32) -> Result<Arc<ProjectiveSpace>> {
        Self::build_with_ceiling(field, k, DEFAULT_POINT_CEILING)
    }

    pub fn build_with_ceiling(field: FieldSpec, k: u32, ceiling: u64) -> Result<Arc<ProjectiveSpace>> {
        if k < 1 {
            return Err(Error::DimensionTooSmall(1));
        }
        let qk = gaussian(field.q(), k);
        if qk > ceiling {
            return Err(Error::SpaceTooLarge { points: qk, ceiling });
        }
        let qk = qk as usize;
        let mut points = Vec::with_capacity(qk);
        normalized_points(&field, k as usize, &mut points);
        debug_assert_eq!(points.len(), qk);

        let mut point_index = HashMap::with_capacity(qk);
        for (i, pt) in points.iter().enumerate() {
            point_index.insert(pt.iter().map(|e| e.index()).collect::<Vec<_>>(), i);
        }

        let mut incidence = BitTable::new(qk);
        for s in 0..qk {
            for i in 0..qk {
                if dot(&field, &points[i], &points[s]).is_zero() {
                    incidence.set(s, i);
                }
            }
        }
        Ok(Arc::new(ProjectiveSpace { field, k, points, incidence, point_index }))
    }

    #[inline]
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of points (equal to the number of hyperplanes).
    #[inline]
    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[FieldElement] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    /// Index of a normalized point representative, if present.
    pub fn index_of(&self, coords: &[FieldElement]) -> Option<usize> {
        let key: Vec<u32> = coords.iter().map(|e| e.index()).collect();
        self.point_index.get(&key).copied()
    }

    /// True iff point `i` lies on hyperplane `H_s`.
    #[inline]
    pub fn on_hyperplane(&self, i: usize, s: usize) -> bool {
        self.incidence.get(s, i)
    }

    /// Indices of the points on hyperplane `H_s`.
    pub fn hyperplane_points(&self, s: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence.row_ones(s)
    }

    pub fn hyperplane_size(&self, s: usize) -> usize {
        self.incidence.row_count(s)
    }

    pub fn hyperplane_pair_size(&self, s: usize, t: usize) -> usize {
        self.incidence.pair_count(s, t)
    }

    pub(crate) fn incidence(&self) -> &BitTable {
        &self.incidence
    }
}

fn dot(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for (&x, &y) in a.iter().zip(b) {
        acc = field.add(acc, field.mul(x, y));
    }
    acc
}

/// Normalized points in lexicographic order: every vector starting with 0
/// precedes every vector starting with 1, and the tail orders recursively.
fn normalized_points(field: &FieldSpec, k: usize, out: &mut Vec<Vec<FieldElement>>) {
    if k == 1 {
        out.push(vec![FieldElement::ONE]);
        return;
    }
    let mark = out.len();
    normalized_points(field, k - 1, out);
    for pt in out[mark..].iter_mut() {
        pt.insert(0, FieldElement::ZERO);
    }
    // leading 1 followed by every tail in odometer order
    let q = field.q();
    let mut tail = vec![0u32; k - 1];
    loop {
        let mut pt = Vec::with_capacity(k);
        pt.push(FieldElement::ONE);
        pt.extend(tail.iter().map(|&i| FieldElement(i)));
        out.push(pt);
        let mut pos = k - 1;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            tail[pos] += 1;
            if (tail[pos] as u64) < q {
                break;
            }
            tail[pos] = 0;
        }
    }
}
