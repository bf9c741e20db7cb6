//! Dense row reduction over `F_p`.

use crate::field::PrimeField;

/// A subspace of `F_p^ncols` held in reduced row echelon form.
///
/// Rows are kept sorted by pivot column; every pivot entry is 1 and is the
/// only nonzero entry in its column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        RowEchelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I>(field: PrimeField, ncols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut e = RowEchelon::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, v: &mut [u32]) {
        assert_eq!(v.len(), self.ncols);
        let f = self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        let f = self.field;
        for x in v.iter_mut() {
            *x %= f.characteristic();
        }
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[piv]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    if r != 0 {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w: Vec<u32> = v.iter().map(|x| x % self.field.characteristic()).collect();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &RowEchelon) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_membership() {
        let f = PrimeField::new(5).unwrap();
        let mut e = RowEchelon::new(f, 3);
        assert!(e.insert(vec![1, 2, 3]));
        assert!(e.insert(vec![2, 4, 2]));
        assert!(!e.insert(vec![3, 1, 4]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[0, 0, 1]));
        assert!(!e.contains(&[0, 1, 0]));
        assert_eq!(e.pivots(), &[0, 2]);
        assert_eq!(e.rows()[0], vec![1, 2, 0]);
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let f = PrimeField::new(2).unwrap();
        let a = RowEchelon::from_rows(f, 4, vec![vec![1, 1, 0, 0], vec![0, 1, 1, 1]]);
        let b = RowEchelon::from_rows(f, 4, vec![vec![1, 0, 1, 1], vec![1, 1, 0, 0]]);
        assert_eq!(a, b);
        assert!(a.is_subspace_of(&b));
    }

    #[test]
    fn zero_rows_are_ignored() {
        let f = PrimeField::new(3).unwrap();
        let e = RowEchelon::from_rows(f, 2, vec![vec![0, 0], vec![3, 6]]);
        assert_eq!(e.rank(), 0);
    }
}
