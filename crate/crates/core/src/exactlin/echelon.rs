//! Incremental sparse Gaussian elimination.
//!
//! Rows are inserted one at a time and reduced against the existing pivots with
//! a dense scratch buffer, then stored sparsely. Pivot choice is the leftmost
//! surviving column, so results are deterministic for a given insertion order.

use crate::field::{FieldSpec, Scalar};

use super::matrix::Vector;

pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
    reduced: bool,
    scratch: Vec<Scalar>,
}

impl Echelon {
    pub fn new(field: FieldSpec, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ncols],
            reduced: true,
            scratch: vec![field.zero(); ncols],
        }
    }

    pub fn from_dense_rows(field: FieldSpec, ncols: usize, rows: Vec<Vector>) -> Self {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.insert_dense(&r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The stored row whose pivot is `col`.
    pub fn row_with_pivot(&self, col: usize) -> Option<&SparseRow> {
        self.pivot_row[col].map(|r| &self.rows[r])
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    pub fn insert_dense(&mut self, row: &[Scalar]) -> bool {
        assert_eq!(row.len(), self.ncols, "row length");
        if row.iter().all(Scalar::is_zero) {
            return false;
        }
        for (slot, v) in self.scratch.iter_mut().zip(row) {
            *slot = v.clone();
        }
        self.absorb_scratch()
    }

    /// Inserts a sparse row (entries may repeat a column; they are summed).
    pub fn insert_sparse(&mut self, row: &[(usize, Scalar)]) -> bool {
        if row.iter().all(|(_, v)| v.is_zero()) {
            return false;
        }
        let zero = self.field.zero();
        for s in self.scratch.iter_mut() {
            if !s.is_zero() {
                *s = zero.clone();
            }
        }
        for (c, v) in row {
            let slot = &mut self.scratch[*c];
            *slot = &*slot + v;
        }
        self.absorb_scratch()
    }

    /// Reduces the scratch buffer against existing pivots; keeps it if nonzero.
    fn absorb_scratch(&mut self) -> bool {
        let mut lead = None;
        for c in 0..self.ncols {
            if self.scratch[c].is_zero() {
                continue;
            }
            match self.pivot_row[c] {
                Some(r) => {
                    let factor = self.scratch[c].clone();
                    for (cc, v) in &self.rows[r] {
                        let slot = &mut self.scratch[*cc];
                        *slot = &*slot - &(&factor * v);
                    }
                }
                None => {
                    if lead.is_none() {
                        lead = Some(c);
                    }
                }
            }
        }
        let Some(lead) = lead else {
            return false;
        };
        let inv = self.scratch[lead].inv();
        let zero = self.field.zero();
        let mut row = SparseRow::new();
        for c in lead..self.ncols {
            if !self.scratch[c].is_zero() {
                row.push((c, &self.scratch[c] * &inv));
                self.scratch[c] = zero.clone();
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.pivots.push(lead);
        self.rows.push(row);
        self.reduced = false;
        true
    }

    /// Brings the rows to reduced row echelon form, sorted by pivot column.
    pub fn make_reduced(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.pivots[r]);
        let mut rows: Vec<SparseRow> = order.iter().map(|&r| std::mem::take(&mut self.rows[r])).collect();
        let pivots: Vec<usize> = order.iter().map(|&r| self.pivots[r]).collect();
        // back substitution, last pivot first
        for k in (0..rows.len()).rev() {
            let p = pivots[k];
            let (before, rest) = rows.split_at_mut(k);
            let pivot_row = &rest[0];
            for row in before.iter_mut() {
                if let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) {
                    let factor = row[pos].1.clone();
                    *row = sparse_axpy(row, &(-&factor), pivot_row);
                }
            }
        }
        self.pivot_row = vec![None; self.ncols];
        for (i, &p) in pivots.iter().enumerate() {
            self.pivot_row[p] = Some(i);
        }
        self.rows = rows;
        self.pivots = pivots;
        self.reduced = true;
    }

    /// `v` minus its component in the row space; zero iff `v` lies in the row space.
    pub fn residual(&self, v: &[Scalar]) -> Vector {
        let mut w = v.to_vec();
        for c in 0..self.ncols {
            if w[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let factor = w[c].clone();
                for (cc, x) in &self.rows[r] {
                    let slot = &mut w[*cc];
                    *slot = &*slot - &(&factor * x);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.residual(v).iter().all(Scalar::is_zero)
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Null space basis of the row space, one vector per free column (requires reduced form).
    pub fn null_space_basis(&self) -> Vec<Vector> {
        assert!(self.reduced, "null space needs reduced form");
        let free = self.free_columns();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.ncols];
            v[f] = self.field.one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    v[p] = -&row[pos].1;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn dense_rows(&self) -> Vec<Vector> {
        self.rows
            .iter()
            .map(|row| {
                let mut v = vec![self.field.zero(); self.ncols];
                for (c, x) in row {
                    v[*c] = x.clone();
                }
                v
            })
            .collect()
    }
}

/// `a + s·b` on sorted sparse rows.
fn sparse_axpy(a: &SparseRow, s: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = SparseRow::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(s * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form_is_canonical() {
        let q = FieldSpec::Rationals;
        let rows = vec![
            vec![q.from_i64(0), q.from_i64(2), q.from_i64(4)],
            vec![q.from_i64(1), q.from_i64(1), q.from_i64(1)],
            vec![q.from_i64(1), q.from_i64(3), q.from_i64(5)],
        ];
        let mut e = Echelon::from_dense_rows(q, 3, rows);
        e.make_reduced();
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), &[0, 1]);
        let dense = e.dense_rows();
        assert_eq!(dense[0], vec![q.one(), q.zero(), q.from_i64(-1)]);
        assert_eq!(dense[1], vec![q.zero(), q.one(), q.from_i64(2)]);
        let ns = e.null_space_basis();
        assert_eq!(ns, vec![vec![q.one(), q.from_i64(-2), q.one()]]);
    }

    #[test]
    fn sparse_and_dense_insertion_agree() {
        let f = FieldSpec::Prime(5);
        let mut a = Echelon::new(f, 4);
        a.insert_sparse(&[(3, f.from_i64(2)), (1, f.one()), (3, f.one())]);
        let mut b = Echelon::new(f, 4);
        b.insert_dense(&[f.zero(), f.one(), f.zero(), f.from_i64(3)]);
        a.make_reduced();
        b.make_reduced();
        assert_eq!(a.dense_rows(), b.dense_rows());
    }
}
