use std::fmt;

use crate::error::{Error, Result};
use crate::field::{add_product, FieldSpec, Scalar};

use super::echelon::Echelon;

/// Column vector of exact scalars.
pub type Vector = Vec<Scalar>;

/// Dense row-major matrix. Linear maps `V -> W` are `dim W × dim V` and act on columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let slot = &mut self.data[i * self.cols + j];
        *slot = &*slot + v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let slot = &mut out.data[i * other.cols + j];
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimensions");
        let mut out = vec![self.field.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                add_product(slot, self.get(i, k), x);
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Matrix {
        assert!(self.is_square());
        (0..n).fold(Matrix::identity(self.field, self.rows), |acc, _| acc.mul(self))
    }

    /// Kronecker product; `e_i ⊗ e_j` sits at index `i·dim W + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Columns `range` as a new matrix.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    fn echelon(&self) -> Echelon {
        Echelon::from_dense_rows(self.field, self.cols, self.row_vectors())
    }

    /// Row rank by exact elimination.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Exact two-sided inverse.
    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "cannot invert a {}×{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        self.solve(&Matrix::identity(self.field, n))
            .map_err(|_| Error::Singular)
    }

    /// Some `x` with `self · x = b`.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix> {
        if self.rows != b.rows {
            return Err(Error::Dimension("solve: row counts differ".into()));
        }
        let aug = self.hstack(b);
        let mut ech = aug.echelon();
        ech.make_reduced();
        let n = self.cols;
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
            if p >= n {
                return Err(Error::NoSolution);
            }
            for (c, v) in row {
                if *c >= n {
                    x.set(p, c - n, v.clone());
                }
            }
        }
        Ok(x)
    }

    /// Basis of the null space, as the columns of the returned matrix.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let mut ech = self.echelon();
        ech.make_reduced();
        ech.null_space_basis()
    }
}

/// Serializes as an array of rows of scalar strings.
impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}×{} over {} [", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += s · v`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        add_product(a, s, x);
    }
}

pub fn vsub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(s: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| s * x).collect()
}

/// Coordinates of `u ⊗ w` in the Kronecker basis.
pub fn kron_vec(u: &[Scalar], w: &[Scalar]) -> Vector {
    let field = u.first().or(w.first()).map(Scalar::field);
    let mut out = Vec::with_capacity(u.len() * w.len());
    for a in u {
        for b in w {
            out.push(if a.is_zero() || b.is_zero() {
                field.expect("non-empty").zero()
            } else {
                a * b
            });
        }
    }
    out
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let field = a.first().map(Scalar::field).expect("non-empty dot");
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        add_product(&mut acc, x, y);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Q, 2).rank(), 2);
        assert_eq!(Matrix::zeros(Q, 2, 3).rank(), 0);
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn invert_examples() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(id.invert().unwrap(), id);
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.invert().unwrap(), swap);
        let sing = Matrix::from_i64(Q, &[&[1, 1], &[2, 2]]);
        assert_eq!(sing.invert(), Err(Error::Singular));
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64(Q, &[&[3, -1], &[7, 2]]);
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), b);
        let z = Matrix::zeros(Q, 2, 2);
        assert!(z.solve(&z).unwrap().is_zero());
        let a = Matrix::from_i64(Q, &[&[1], &[2]]);
        let b = Matrix::from_i64(Q, &[&[1], &[1]]);
        assert_eq!(a.solve(&b), Err(Error::NoSolution));
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(Q, 2).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(Q, 2, 2).kernel_basis().len(), 2);
        let k = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        let v = &k[0];
        assert_eq!(&v[0] + &(&v[1] * &Q.from_i64(2)), Q.zero());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            Matrix::identity(Q, 2).kron(&Matrix::identity(Q, 3)),
            Matrix::identity(Q, 6)
        );
        let m = Matrix::from_i64(Q, &[&[1, -2], &[0, 5]]);
        assert_eq!(
            Matrix::from_i64(Q, &[&[2]]).kron(&m),
            m.scale(&Q.from_i64(2))
        );
    }

    #[test]
    fn kron_index_convention() {
        // e_1 ⊗ e_2 in k^2 ⊗ k^3 is basis index 1·3 + 2 = 5
        let u = unit_vector(Q, 2, 1);
        let w = unit_vector(Q, 3, 2);
        assert_eq!(kron_vec(&u, &w), unit_vector(Q, 6, 5));
        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(Q, &[&[0, 1, 0], &[1, 1, 2], &[5, 0, 1]]);
        assert_eq!(a.kron(&b).apply(&kron_vec(&u, &w)), kron_vec(&a.apply(&u), &b.apply(&w)));
    }

    #[test]
    fn pow_and_identity() {
        let s = Matrix::from_i64(Q, &[&[0, -1], &[1, 0]]);
        assert!(s.pow(4).is_identity());
        assert!(!s.pow(2).is_identity());
    }
}
