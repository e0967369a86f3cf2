//! Dense row reduction over `Z/p`.

use super::field::PrimeField;

/// A subspace of `(Z/p)^width` kept as rows in echelon form. Each row has a
/// leading 1 at its pivot and zeros at the pivots of all earlier rows, so a
/// single pass in insertion order reduces any vector to its normal form.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Self {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<'v>(
        field: PrimeField,
        width: usize,
        vectors: impl IntoIterator<Item = &'v Vec<u64>>,
    ) -> Self {
        let mut space = Self::new(field, width);
        for v in vectors {
            space.insert(v.clone());
        }
        space
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Coordinates that are not pivots; the matching unit vectors span a
    /// complement of the subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&i| !is_pivot[i]).collect()
    }

    /// Normal form of `v` modulo the subspace.
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        debug_assert_eq!(v.len(), self.width);
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row).skip(p) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[p]);
        for x in v.iter_mut().skip(p) {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Rank of the linear map sending the `i`-th basis vector of a domain to
/// `images[i]`: the dimension of the span of the images.
pub fn rank(field: PrimeField, images: &[Vec<u64>]) -> usize {
    match images.first() {
        None => 0,
        Some(first) => Echelon::spanned_by(field, first.len(), images).dim(),
    }
}
