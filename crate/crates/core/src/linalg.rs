//! Dense exact row reduction.

use crate::scalars::Field;

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a leading 1 in its pivot column and zeros in the
/// pivot columns of all other rows.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    width: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, width: usize) -> Self {
        Echelon {
            field: field.clone(),
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtract multiples of the stored rows so that `v` vanishes on every
    /// pivot column among the first `cols` columns.
    pub fn reduce_upto(&self, v: &mut [F::Elem], cols: usize) {
        let k = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if p >= cols || k.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !k.is_zero(r) {
                    *x = k.sub(x, &k.mul(&c, r));
                }
            }
        }
    }

    pub fn reduce(&self, v: &mut [F::Elem]) {
        self.reduce_upto(v, self.width);
    }

    /// Insert a row, choosing its pivot among the first `cols` columns.
    /// Returns false (and stores nothing) when the row reduces to zero there.
    pub fn insert_upto(&mut self, mut v: Vec<F::Elem>, cols: usize) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce_upto(&mut v, cols);
        let k = self.field.clone();
        let Some(p) = (0..cols).find(|&j| !k.is_zero(&v[j])) else {
            return false;
        };
        let inv = k.inv(&v[p]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = k.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if !k.is_zero(&row[p]) {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !k.is_zero(r) {
                        *x = k.sub(x, &k.mul(&c, r));
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let w = self.width;
        self.insert_upto(v, w)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }
}

/// Rank of a list of vectors.
pub fn rank<F: Field>(field: &F, width: usize, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> usize {
    let mut e = Echelon::new(field, width);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
