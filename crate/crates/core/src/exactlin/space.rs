use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::echelon::{Echelon, SparseRow};
use super::matrix::{is_zero_vector, Matrix, Vector};

/// A quotient `k^n / span(relations)` with a chosen projection and section.
///
/// The quotient basis is indexed by the non-pivot columns of the reduced
/// relation matrix; the section sends each quotient basis vector to the
/// corresponding ambient unit vector.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    field: FieldSpec,
    ambient_dim: usize,
    relations: Echelon,
    free: Vec<usize>,
    /// ambient index -> quotient index for free columns
    free_index: Vec<Option<usize>>,
}

impl QuotientSpace {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Ambient indices chosen as quotient representatives.
    pub fn representatives(&self) -> &[usize] {
        &self.free
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    /// Projection of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.relations.residual(v);
        self.free.iter().map(|&f| r[f].clone()).collect()
    }

    /// Section of a quotient vector: its canonical ambient representative.
    pub fn lift(&self, q: &[Scalar]) -> Vector {
        let mut v = vec![self.field.zero(); self.ambient_dim];
        for (x, &f) in q.iter().zip(&self.free) {
            v[f] = x.clone();
        }
        v
    }

    /// Projection of the ambient basis vector `e_j`, as a sparse list.
    pub fn project_basis(&self, j: usize) -> SparseRow {
        if let Some(q) = self.free_index[j] {
            return vec![(q, self.field.one())];
        }
        // reduced form: the pivot row touches no other pivot column
        self.relations
            .row_with_pivot(j)
            .expect("pivot row")
            .iter()
            .filter(|(c, _)| *c != j)
            .map(|(c, x)| (self.free_index[*c].expect("reduced row touches only free columns"), -x))
            .collect()
    }

    /// Projection of a sparse ambient vector (repeated indices are summed).
    pub fn project_sparse(&self, v: &[(usize, Scalar)]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim()];
        for (j, x) in v {
            if x.is_zero() {
                continue;
            }
            if let Some(q) = self.free_index[*j] {
                out[q] = &out[q] + x;
                continue;
            }
            for (c, y) in self.relations.row_with_pivot(*j).expect("pivot row") {
                if *c != *j {
                    let q = self.free_index[*c].expect("reduced row touches only free columns");
                    out[q] = &out[q] - &(x * y);
                }
            }
        }
        out
    }

    pub fn projection(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim(), self.ambient_dim);
        for j in 0..self.ambient_dim {
            for (q, x) in self.project_basis(j) {
                m.set(q, j, x);
            }
        }
        m
    }

    pub fn section(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.ambient_dim, self.dim());
        for (q, &f) in self.free.iter().enumerate() {
            m.set(f, q, self.field.one());
        }
        m
    }

    pub fn is_relation(&self, v: &[Scalar]) -> bool {
        self.relations.contains(v)
    }
}

/// Quotient of `k^ambient_dim` by the span of `relations` (sparse rows).
pub fn quotient_by_sparse<I>(field: FieldSpec, ambient_dim: usize, relations: I) -> QuotientSpace
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut ech = Echelon::new(field, ambient_dim);
    for r in relations {
        ech.insert_sparse(&r);
    }
    ech.make_reduced();
    let free = ech.free_columns();
    let mut free_index = vec![None; ambient_dim];
    for (i, &f) in free.iter().enumerate() {
        free_index[f] = Some(i);
    }
    QuotientSpace {
        field,
        ambient_dim,
        relations: ech,
        free,
        free_index,
    }
}

pub fn quotient_by(field: FieldSpec, ambient_dim: usize, relations: &[Vector]) -> QuotientSpace {
    quotient_by_sparse(
        field,
        ambient_dim,
        relations.iter().map(|v| {
            assert_eq!(v.len(), ambient_dim, "relation length");
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect()
        }),
    )
}

/// A subspace with a normalized basis: basis vector `k` has a 1 at `pivots[k]`
/// and 0 at every other pivot, so coordinates are read off directly.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
    sparse: Vec<SparseRow>,
}

impl Subspace {
    fn from_parts(field: FieldSpec, ambient_dim: usize, basis: Vec<Vector>, pivots: Vec<usize>) -> Subspace {
        let sparse = basis
            .iter()
            .map(|b| {
                b.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k, x.clone()))
                    .collect()
            })
            .collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots,
            sparse,
        }
    }

    /// Span of arbitrary vectors.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: &[Vector]) -> Subspace {
        let mut ech = Echelon::new(field, ambient_dim);
        for v in vectors {
            ech.insert_dense(v);
        }
        ech.make_reduced();
        Subspace::from_parts(field, ambient_dim, ech.dense_rows(), ech.pivots().to_vec())
    }

    pub fn full(field: FieldSpec, n: usize) -> Subspace {
        Subspace::from_parts(field, n, Matrix::identity(field, n).columns(), (0..n).collect())
    }

    fn from_kernel(field: FieldSpec, ambient_dim: usize, ech: &Echelon) -> Subspace {
        Subspace::span(field, ambient_dim, &ech.null_space_basis())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient_dim, &self.basis)
    }

    /// Ambient vector with the given coordinates.
    pub fn embed(&self, coords: &[Scalar]) -> Vector {
        let mut v = vec![self.field.zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.sparse) {
            if c.is_zero() {
                continue;
            }
            for (k, x) in b {
                crate::field::add_product(&mut v[*k], c, x);
            }
        }
        v
    }

    /// Coordinates of `v`, assuming membership (unchecked).
    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vector {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Coordinates of `v`, or `None` when `v` is not in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let c = self.coords_unchecked(v);
        (self.embed(&c) == v).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    /// Intersection with the kernel of further functionals, returned in ambient terms.
    pub fn restrict(&self, conditions: &[Vector]) -> Subspace {
        let inner: Vec<Vector> = conditions
            .iter()
            .map(|c| self.basis.iter().map(|b| super::matrix::dot(c, b)).collect())
            .collect();
        let sub = solve_conditions(self.field, self.dim(), &inner);
        let vecs: Vec<Vector> = sub.basis.iter().map(|c| self.embed(c)).collect();
        Subspace::span(self.field, self.ambient_dim, &vecs)
    }
}

/// All vectors of `k^ambient_dim` annihilated by every condition.
pub fn solve_conditions(field: FieldSpec, ambient_dim: usize, conditions: &[Vector]) -> Subspace {
    let mut ech = Echelon::new(field, ambient_dim);
    for c in conditions {
        ech.insert_dense(c);
    }
    ech.make_reduced();
    Subspace::from_kernel(field, ambient_dim, &ech)
}

/// Sparse variant of [`solve_conditions`].
pub fn solve_sparse_conditions<I>(field: FieldSpec, ambient_dim: usize, conditions: I) -> Subspace
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut ech = Echelon::new(field, ambient_dim);
    for c in conditions {
        ech.insert_sparse(&c);
    }
    ech.make_reduced();
    Subspace::from_kernel(field, ambient_dim, &ech)
}

/// Flattened index of the matrix unit `E_{ij}` (`e_j ↦ e_i`) in `Hom_k(V, W)`.
#[inline]
pub fn hom_index(dim_v: usize, i: usize, j: usize) -> usize {
    i * dim_v + j
}

/// Row-major flattening of a `dim W × dim V` matrix into `Hom_k(V, W)` coordinates.
pub fn hom_to_vector(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

pub fn hom_from_vector(field: FieldSpec, dim_v: usize, dim_w: usize, v: &[Scalar]) -> Result<Matrix> {
    if v.len() != dim_v * dim_w {
        return Err(Error::Dimension(format!(
            "vector of length {} is not in Hom({dim_v}, {dim_w})",
            v.len()
        )));
    }
    Matrix::from_rows(field, v.chunks(dim_v).map(<[Scalar]>::to_vec).collect())
}

/// Linear maps `f: V → W` with `f ∘ act_V[r] = act_W[r] ∘ f` for every paired action,
/// computed directly by solving the commutation conditions in `Hom_k(V, W)`.
pub fn intertwiners(field: FieldSpec, dim_v: usize, dim_w: usize, actions: &[(&Matrix, &Matrix)]) -> Subspace {
    let n = dim_v * dim_w;
    let mut conditions = Vec::new();
    for (av, aw) in actions {
        // (f av)[i][j] - (aw f)[i][j] = Σ_k f[i][k] av[k][j] - Σ_k aw[i][k] f[k][j]
        for i in 0..dim_w {
            for j in 0..dim_v {
                let mut row: SparseRow = Vec::new();
                for k in 0..dim_v {
                    let x = av.get(k, j);
                    if !x.is_zero() {
                        row.push((hom_index(dim_v, i, k), x.clone()));
                    }
                }
                for k in 0..dim_w {
                    let x = aw.get(i, k);
                    if !x.is_zero() {
                        row.push((hom_index(dim_v, k, j), -x));
                    }
                }
                if !row.is_empty() {
                    conditions.push(row);
                }
            }
        }
    }
    solve_sparse_conditions(field, n, conditions)
}

/// Module homomorphisms for a single unital algebra acting on both sides, via a
/// presentation of the source: `actions_v[r]`, `actions_w[r]` are the actions of
/// the algebra basis element `r`, and the span of `{v·r}` over the basis must be
/// the submodule generated by `v` (true whenever the algebra is unital).
pub fn module_homs(field: FieldSpec, actions_v: &[Matrix], actions_w: &[Matrix]) -> Subspace {
    assert_eq!(actions_v.len(), actions_w.len(), "same acting algebra");
    let dim_v = actions_v.first().map_or(0, Matrix::rows);
    let dim_w = actions_w.first().map_or(0, Matrix::rows);
    let nr = actions_v.len();
    if nr == 0 {
        return Subspace::full(field, dim_v * dim_w);
    }
    // greedy generators
    let mut span = Echelon::new(field, dim_v);
    let mut generators = Vec::new();
    for j in 0..dim_v {
        if span.rank() == dim_v {
            break;
        }
        let e = super::matrix::unit_vector(field, dim_v, j);
        if span.contains(&e) {
            continue;
        }
        generators.push(j);
        for a in actions_v {
            span.insert_dense(&a.column(j));
        }
    }
    // presentation P: R^g -> V, (r_k) ↦ Σ_k gen_k · r_k ; column (k, r) = act[r] e_{gen_k}
    let g = generators.len();
    let mut p = Matrix::zeros(field, dim_v, g * nr);
    for (k, &gen) in generators.iter().enumerate() {
        for (r, a) in actions_v.iter().enumerate() {
            for i in 0..dim_v {
                let x = a.get(i, gen);
                if !x.is_zero() {
                    p.set(i, k * nr + r, x.clone());
                }
            }
        }
    }
    let syzygies = p.kernel_basis();
    // unknowns y_k ∈ W at index k·dim_w + t; condition Σ_k Σ_r κ[k,r] act_w[r] y_k = 0
    let mut conditions: Vec<SparseRow> = Vec::new();
    for kappa in &syzygies {
        for t in 0..dim_w {
            let mut row: SparseRow = Vec::new();
            for k in 0..g {
                for r in 0..nr {
                    let c = &kappa[k * nr + r];
                    if c.is_zero() {
                        continue;
                    }
                    for u in 0..dim_w {
                        let a = actions_w[r].get(t, u);
                        if !a.is_zero() {
                            row.push((k * dim_w + u, c * a));
                        }
                    }
                }
            }
            if !row.is_empty() {
                conditions.push(row);
            }
        }
    }
    let sol = solve_sparse_conditions(field, g * dim_w, conditions);
    // section of P: each basis vector of V as a combination of generators
    let q = p
        .solve(&Matrix::identity(field, dim_v))
        .expect("generators span the module");
    let mut maps = Vec::with_capacity(sol.dim());
    for y in sol.basis() {
        // Y: R^g -> W, (k, r) ↦ act_w[r] y_k
        let mut f = Matrix::zeros(field, dim_w, dim_v);
        for j in 0..dim_v {
            for k in 0..g {
                for r in 0..nr {
                    let c = q.get(k * nr + r, j);
                    if c.is_zero() {
                        continue;
                    }
                    for t in 0..dim_w {
                        for u in 0..dim_w {
                            let a = actions_w[r].get(t, u);
                            let yv = &y[k * dim_w + u];
                            if !a.is_zero() && !yv.is_zero() {
                                f.add_to(t, j, &(&(c * a) * yv));
                            }
                        }
                    }
                }
            }
        }
        maps.push(hom_to_vector(&f));
    }
    Subspace::span(field, dim_v * dim_w, &maps)
}

/// Rank-based bijectivity test for a square matrix.
pub fn is_bijective(m: &Matrix) -> bool {
    m.is_square() && m.rank() == m.rows()
}

pub fn nonzero_image_witness(m: &Matrix, vectors: &[Vector]) -> Option<usize> {
    vectors.iter().position(|v| !is_zero_vector(&m.apply(v)))
}
