//! Corings over a finite-dimensional algebra.
//!
//! Comultiplication is stored as a lift: for every basis element `c` a sparse
//! vector in `C ⊗_k C` (index `u·dim C + v`) whose image in `C ⊗_A C` is `Δ(c)`.
//! Everything evaluated through Δ must be independent of the lift; the quotient
//! `C ⊗_A C` itself is only materialized when axioms or equalities in it are needed.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{
    axpy, is_zero_vector, kron_vec, quotient_by_sparse, unit_vector, zero_vector, Matrix, QuotientSpace, SparseRow,
    Subspace, Vector,
};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{Algebra, AxiomReport, Coalgebra};
use crate::smash::ComoduleAlgebra;

/// `A`-bimodule given by the matrices of `m ↦ e_a·m` and `m ↦ m·e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    base: Algebra,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(base: Algebra, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Self {
        assert_eq!(left.len(), base.dim());
        assert_eq!(right.len(), base.dim());
        Bimodule { base, dim, left, right }
    }

    /// `A` over itself.
    pub fn regular(a: &Algebra) -> Self {
        let f = a.field();
        let d = a.dim();
        let left = (0..d).map(|i| a.left_mult(&unit_vector(f, d, i))).collect();
        let right = (0..d).map(|i| a.right_mult(&unit_vector(f, d, i))).collect();
        Bimodule::new(a.clone(), d, left, right)
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.base.field()
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right
    }

    /// Matrix of `m ↦ a·m`.
    pub fn left_by(&self, a: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim, &self.left, a)
    }

    /// Matrix of `m ↦ m·a`.
    pub fn right_by(&self, a: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim, &self.right, a)
    }

    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let a = &self.base;
        let d = a.dim();
        let (mut lf, mut rf) = (None, None);
        for i in 0..d {
            for j in 0..d {
                let ij = a.basis_product(i, j);
                if lf.is_none() && self.left_by(ij) != self.left[i].mul(&self.left[j]) {
                    lf = Some(format!("(e{i} e{j})·m ≠ e{i}·(e{j}·m)"));
                }
                if rf.is_none() && self.right_by(ij) != self.right[j].mul(&self.right[i]) {
                    rf = Some(format!("m·(e{i} e{j}) ≠ (m·e{i})·e{j}"));
                }
            }
        }
        report.push("left.associativity", lf);
        report.push("right.associativity", rf);
        report.push(
            "left.unit",
            (!self.left_by(a.unit()).is_identity()).then(|| "1·m ≠ m".to_string()),
        );
        report.push(
            "right.unit",
            (!self.right_by(a.unit()).is_identity()).then(|| "m·1 ≠ m".to_string()),
        );
        let mut failure = None;
        'outer: for i in 0..d {
            for j in 0..d {
                if self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i]) {
                    failure = Some(format!("(e{i}·m)·e{j} ≠ e{i}·(m·e{j})"));
                    break 'outer;
                }
            }
        }
        report.push("commuting_actions", failure);
        report
    }
}

fn combine(field: FieldSpec, dim: usize, mats: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, dim, dim);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

fn sparse_of(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// `M ⊗_A N` as a quotient of `M ⊗_k N` by `{m·a ⊗ n − m ⊗ a·n}`, given the
/// right actions on `M` and the left actions on `N` of the basis of `A`.
pub fn tensor_over_a(field: FieldSpec, right_m: &[Matrix], left_n: &[Matrix]) -> QuotientSpace {
    assert_eq!(right_m.len(), left_n.len(), "same base algebra");
    let dm = right_m.first().map_or(0, Matrix::rows);
    let dn = left_n.first().map_or(0, Matrix::rows);
    let mut relations = Vec::new();
    for (ra, la) in right_m.iter().zip(left_n) {
        for i in 0..dm {
            for j in 0..dn {
                let mut row: SparseRow = Vec::new();
                for k in 0..dm {
                    let x = ra.get(k, i);
                    if !x.is_zero() {
                        row.push((k * dn + j, x.clone()));
                    }
                }
                for l in 0..dn {
                    let x = la.get(l, j);
                    if !x.is_zero() {
                        row.push((i * dn + l, -x));
                    }
                }
                relations.push(row);
            }
        }
    }
    quotient_by_sparse(field, dm * dn, relations)
}

/// Matrices of the right `A`-action on `Q = M ⊗_A N` induced from the right action on `N`.
pub fn induced_right_actions(q: &QuotientSpace, dim_m: usize, right_n: &[Matrix]) -> Vec<Matrix> {
    let dn = right_n.first().map_or(0, Matrix::rows);
    assert_eq!(q.ambient_dim(), dim_m * dn);
    right_n
        .iter()
        .map(|ra| {
            let cols: Vec<Vector> = q
                .representatives()
                .iter()
                .map(|&rep| {
                    let (u, v) = (rep / dn, rep % dn);
                    let image: SparseRow = (0..dn)
                        .filter(|&w| !ra.get(w, v).is_zero())
                        .map(|w| (u * dn + w, ra.get(w, v).clone()))
                        .collect();
                    q.project_sparse(&image)
                })
                .collect();
            Matrix::from_columns(q.field(), q.dim(), &cols)
        })
        .collect()
}

/// Matrices of the left `A`-action on `Q = M ⊗_A N` induced from the left action on `M`.
pub fn induced_left_actions(q: &QuotientSpace, left_m: &[Matrix], dim_n: usize) -> Vec<Matrix> {
    let dm = left_m.first().map_or(0, Matrix::rows);
    assert_eq!(q.ambient_dim(), dm * dim_n);
    left_m
        .iter()
        .map(|la| {
            let cols: Vec<Vector> = q
                .representatives()
                .iter()
                .map(|&rep| {
                    let (u, v) = (rep / dim_n, rep % dim_n);
                    let image: SparseRow = (0..dm)
                        .filter(|&w| !la.get(w, u).is_zero())
                        .map(|w| (w * dim_n + v, la.get(w, u).clone()))
                        .collect();
                    q.project_sparse(&image)
                })
                .collect();
            Matrix::from_columns(q.field(), q.dim(), &cols)
        })
        .collect()
}

/// An `A`-coring with Δ stored as lifts into `C ⊗_k C`.
#[derive(Clone, Debug)]
pub struct Coring {
    bimodule: Bimodule,
    lifts: Vec<SparseRow>,
    counit: Matrix,
    tensor: OnceLock<QuotientSpace>,
}

impl Coring {
    pub fn new(bimodule: Bimodule, lifts: Vec<SparseRow>, counit: Matrix) -> Self {
        let d = bimodule.dim();
        assert_eq!(lifts.len(), d, "one lift per basis element");
        assert_eq!((counit.rows(), counit.cols()), (bimodule.base().dim(), d));
        Coring {
            bimodule,
            lifts,
            counit,
            tensor: OnceLock::new(),
        }
    }

    /// A `k`-coalgebra as a coring over the ground field.
    pub fn from_coalgebra(c: &Coalgebra) -> Self {
        let f = c.field();
        let d = c.dim();
        let id = Matrix::identity(f, d);
        let bimodule = Bimodule::new(Algebra::ground(f), d, vec![id.clone()], vec![id]);
        let lifts = (0..d).map(|k| sparse_of(c.basis_coproduct(k))).collect();
        let counit = Matrix::from_rows(f, vec![c.counit().to_vec()]).expect("one row");
        Coring::new(bimodule, lifts, counit)
    }

    /// `C = A` with `Δ(a) = a ⊗ 1` and `ε = id`.
    pub fn trivial(a: &Algebra) -> Self {
        let d = a.dim();
        let lifts = (0..d)
            .map(|i| sparse_of(&kron_vec(&unit_vector(a.field(), d, i), a.unit())))
            .collect();
        Coring::new(Bimodule::regular(a), lifts, Matrix::identity(a.field(), d))
    }

    pub fn base(&self) -> &Algebra {
        self.bimodule.base()
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    pub fn field(&self) -> FieldSpec {
        self.bimodule.field()
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    pub fn lifts(&self) -> &[SparseRow] {
        &self.lifts
    }

    pub fn lift(&self, c: usize) -> &SparseRow {
        &self.lifts[c]
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    /// `C ⊗_A C`, computed on first use.
    pub fn tensor_quotient(&self) -> &QuotientSpace {
        self.tensor.get_or_init(|| {
            tensor_over_a(self.field(), self.bimodule.right_actions(), self.bimodule.left_actions())
        })
    }

    /// Δ as a matrix into the stored quotient basis of `C ⊗_A C`.
    pub fn comul_matrix(&self) -> Matrix {
        let q = self.tensor_quotient();
        let cols: Vec<Vector> = self.lifts.iter().map(|l| q.project_sparse(l)).collect();
        Matrix::from_columns(self.field(), q.dim(), &cols)
    }

    /// Lift of `Δ(x)` for an arbitrary element.
    pub fn lift_of(&self, x: &[Scalar]) -> SparseRow {
        let mut out = SparseRow::new();
        for (c, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out.extend(self.lifts[c].iter().map(|(k, v)| (*k, a * v)));
        }
        out
    }

    /// Same coring with each lift shifted by `extra[c]`, which must be relation vectors.
    pub fn with_shifted_lifts(&self, extra: &[SparseRow]) -> Coring {
        let lifts = self
            .lifts
            .iter()
            .zip(extra)
            .map(|(l, e)| l.iter().chain(e).cloned().collect())
            .collect();
        Coring {
            bimodule: self.bimodule.clone(),
            lifts,
            counit: self.counit.clone(),
            tensor: self.tensor.clone(),
        }
    }

    /// The relation `(c·e_a) ⊗ c' − c ⊗ (e_a·c')` of `C ⊗_k C`.
    pub fn relation(&self, c: usize, a: usize, c2: usize) -> SparseRow {
        let d = self.dim();
        let ra = &self.bimodule.right_actions()[a];
        let la = &self.bimodule.left_actions()[a];
        let mut row = SparseRow::new();
        for k in 0..d {
            let x = ra.get(k, c);
            if !x.is_zero() {
                row.push((k * d + c2, x.clone()));
            }
            let y = la.get(k, c2);
            if !y.is_zero() {
                row.push((c * d + k, -y));
            }
        }
        row
    }

    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        report.extend("bimodule", self.bimodule.check());
        let f = self.field();
        let d = self.dim();
        let a = self.base();
        let da = a.dim();
        let q = self.tensor_quotient();
        let left = self.bimodule.left_actions();
        let right = self.bimodule.right_actions();

        // ε(a·c) = a ε(c), ε(c·a) = ε(c) a
        let mut failure = None;
        'eps: for x in 0..da {
            let lx = a.left_mult(&unit_vector(f, da, x));
            let rx = a.right_mult(&unit_vector(f, da, x));
            if self.counit.mul(&left[x]) != lx.mul(&self.counit) {
                failure = Some(format!("ε(e{x}·c) ≠ e{x} ε(c)"));
                break 'eps;
            }
            if self.counit.mul(&right[x]) != rx.mul(&self.counit) {
                failure = Some(format!("ε(c·e{x}) ≠ ε(c) e{x}"));
                break 'eps;
            }
        }
        report.push("counit_bimodule_map", failure);

        // π Δ(a·c) = π (L_a ⊗ id) Δ(c) and on the right
        let mut failure = None;
        'delta: for x in 0..da {
            for c in 0..d {
                let lhs = q.project_sparse(&self.lift_of(&left[x].column(c)));
                let moved = map_first_leg(self.lift(c), &left[x], d);
                if lhs != q.project_sparse(&moved) {
                    failure = Some(format!("Δ(e{x}·c{c}) ≠ e{x}·Δ(c{c})"));
                    break 'delta;
                }
                let lhs = q.project_sparse(&self.lift_of(&right[x].column(c)));
                let moved = map_second_leg(self.lift(c), &right[x], d);
                if lhs != q.project_sparse(&moved) {
                    failure = Some(format!("Δ(c{c}·e{x}) ≠ Δ(c{c})·e{x}"));
                    break 'delta;
                }
            }
        }
        report.push("comul_bimodule_map", failure);

        // ε(c₁)c₂ = c = c₁ε(c₂)
        let (mut lf, mut rf) = (None, None);
        for c in 0..d {
            let mut l = zero_vector(f, d);
            let mut r = zero_vector(f, d);
            for (idx, coef) in self.lift(c) {
                let (u, v) = (idx / d, idx % d);
                let eu = self.counit.column(u);
                let ev = self.counit.column(v);
                axpy(&mut l, coef, &self.bimodule.left_by(&eu).column(v));
                axpy(&mut r, coef, &self.bimodule.right_by(&ev).column(u));
            }
            let e = unit_vector(f, d, c);
            if l != e && lf.is_none() {
                lf = Some(format!("ε(c₁)c₂ ≠ c on c{c}"));
            }
            if r != e && rf.is_none() {
                rf = Some(format!("c₁ε(c₂) ≠ c on c{c}"));
            }
        }
        report.push("counit_left", lf);
        report.push("counit_right", rf);

        // coassociativity in (C ⊗_A C) ⊗_A C
        let q2_right = induced_right_actions(q, d, right);
        let q3 = tensor_over_a(f, &q2_right, left);
        let to_q3 = |triple: &[(usize, Scalar)]| -> Vector {
            // C⊗C⊗C → (C⊗_A C)⊗C → Q3
            let mut mid: SparseRow = Vec::new();
            for (idx, coef) in triple {
                let (uv, w) = (idx / d, idx % d);
                for (qi, x) in q.project_sparse(&[(uv, coef.clone())]).into_iter().enumerate() {
                    if !x.is_zero() {
                        mid.push((qi * d + w, x));
                    }
                }
            }
            q3.project_sparse(&mid)
        };
        let mut failure = None;
        for c in 0..d {
            let mut lhs: SparseRow = Vec::new();
            let mut rhs: SparseRow = Vec::new();
            for (idx, coef) in self.lift(c) {
                let (u, v) = (idx / d, idx % d);
                for (k, x) in self.lift(u) {
                    lhs.push((k * d + v, coef * x));
                }
                for (k, x) in self.lift(v) {
                    rhs.push((u * d * d + k, coef * x));
                }
            }
            if to_q3(&lhs) != to_q3(&rhs) {
                failure = Some(format!("(Δ⊗id)Δ ≠ (id⊗Δ)Δ on c{c}"));
                break;
            }
        }
        report.push("coassociativity", failure);
        report
    }
}

/// Applies `m` to the first tensor leg of a sparse vector in `C ⊗_k C`.
pub fn map_first_leg(v: &[(usize, Scalar)], m: &Matrix, d: usize) -> SparseRow {
    let mut out = SparseRow::new();
    for (idx, coef) in v {
        let (u, w) = (idx / d, idx % d);
        for k in 0..m.rows() {
            let x = m.get(k, u);
            if !x.is_zero() {
                out.push((k * d + w, coef * x));
            }
        }
    }
    out
}

/// Applies `m` to the second tensor leg of a sparse vector in `C ⊗_k C`.
pub fn map_second_leg(v: &[(usize, Scalar)], m: &Matrix, d: usize) -> SparseRow {
    let mut out = SparseRow::new();
    for (idx, coef) in v {
        let (u, w) = (idx / d, idx % d);
        for k in 0..m.rows() {
            let x = m.get(k, w);
            if !x.is_zero() {
                out.push((u * m.rows() + k, coef * x));
            }
        }
    }
    out
}

/// A coring with a fixed grouplike element `x`.
#[derive(Clone, Debug)]
pub struct GrouplikeCoring {
    pub coring: Coring,
    pub x: Vector,
}

impl GrouplikeCoring {
    pub fn check(&self) -> AxiomReport {
        let mut report = self.coring.check();
        let c = &self.coring;
        let eps_ok = c.counit().apply(&self.x) == c.base().unit();
        report.push("grouplike.counit", (!eps_ok).then(|| "ε(x) ≠ 1".to_string()));
        let q = c.tensor_quotient();
        let dx = q.project_sparse(&c.lift_of(&self.x));
        let xx = q.project_sparse(&sparse_of(&kron_vec(&self.x, &self.x)));
        report.push("grouplike.comul", (dx != xx).then(|| "Δ(x) ≠ x⊗x".to_string()));
        report
    }

    pub fn base(&self) -> &Algebra {
        self.coring.base()
    }
}

/// The coring `A ⊗ H` of a comodule algebra with grouplike `1 ⊗ 1`.
pub fn coring_from_comodule(c: &ComoduleAlgebra) -> GrouplikeCoring {
    let f = c.field();
    let (da, dh) = (c.dim_a(), c.dim_h());
    let dim = da * dh;
    let a = c.algebra();
    let hopf = c.hopf();
    let id_h = Matrix::identity(f, dh);
    let left: Vec<Matrix> = (0..da)
        .map(|b| a.left_mult(&unit_vector(f, da, b)).kron(&id_h))
        .collect();
    let canonical = crate::smash::RelativeHopfModule::canonical(c);
    let right = canonical.actions();
    let bimodule = Bimodule::new(a.clone(), dim, left, right);
    // Δ(a⊗h) = Σ (a⊗h₁) ⊗ (1⊗h₂)
    let lifts = (0..dim)
        .map(|idx| {
            let (x, h) = (idx / dh, idx % dh);
            let dlt = hopf.coalgebra().basis_coproduct(h);
            let mut row = SparseRow::new();
            for p in 0..dh {
                for q in 0..dh {
                    let coef = &dlt[p * dh + q];
                    if coef.is_zero() {
                        continue;
                    }
                    for (u, w) in a.unit().iter().enumerate() {
                        if !w.is_zero() {
                            row.push(((x * dh + p) * dim + (u * dh + q), coef * w));
                        }
                    }
                }
            }
            row
        })
        .collect();
    // ε(a⊗h) = ε(h) a
    let eps = Matrix::from_rows(f, vec![hopf.coalgebra().counit().to_vec()]).expect("one row");
    let counit = Matrix::identity(f, da).kron(&eps);
    let x = kron_vec(a.unit(), hopf.unit_vector());
    GrouplikeCoring {
        coring: Coring::new(bimodule, lifts, counit),
        x,
    }
}

/// `R ⊗_B R` for `B` given by the images in `R` of a basis of `B`.
pub fn canonical_quotient(r: &Algebra, b_images: &[Vector]) -> QuotientSpace {
    let right: Vec<Matrix> = b_images.iter().map(|b| r.right_mult(b)).collect();
    let left: Vec<Matrix> = b_images.iter().map(|b| r.left_mult(b)).collect();
    tensor_over_a(r.field(), &right, &left)
}

/// Checks that `b` contains 1 and is closed under multiplication.
fn check_subring(a: &Algebra, b: &Subspace) -> Result<()> {
    if !b.contains(a.unit()) {
        return Err(Error::NotASubring);
    }
    for x in b.basis() {
        for y in b.basis() {
            if !b.contains(&a.product(x, y)) {
                return Err(Error::NotASubring);
            }
        }
    }
    Ok(())
}

/// The canonical coring `A ⊗_B A` of a subalgebra `B ⊆ A`, grouplike `1 ⊗ 1`.
pub fn canonical_coring(a: &Algebra, b: &Subspace) -> Result<GrouplikeCoring> {
    check_subring(a, b)?;
    Ok(canonical_coring_via(a, b.basis()))
}

/// The canonical coring `R ⊗_B R` for a ring map `B → R` given by the images of a
/// basis of `B`. The base ring of the coring is `R`.
pub fn canonical_coring_via(r: &Algebra, b_images: &[Vector]) -> GrouplikeCoring {
    let f = r.field();
    let d = r.dim();
    let q = canonical_quotient(r, b_images);
    let left_r: Vec<Matrix> = (0..d).map(|i| r.left_mult(&unit_vector(f, d, i))).collect();
    let right_r: Vec<Matrix> = (0..d).map(|i| r.right_mult(&unit_vector(f, d, i))).collect();
    let left = induced_left_actions(&q, &left_r, d);
    let right = induced_right_actions(&q, d, &right_r);
    let bimodule = Bimodule::new(r.clone(), q.dim(), left, right);
    // Δ(π(u⊗v)) = π(u⊗1) ⊗ π(1⊗v)
    let unit_sparse = sparse_of(r.unit());
    let lifts = q
        .representatives()
        .iter()
        .map(|&rep| {
            let (u, v) = (rep / d, rep % d);
            let first: SparseRow = unit_sparse.iter().map(|(w, x)| (u * d + w, x.clone())).collect();
            let second: SparseRow = unit_sparse.iter().map(|(w, x)| (w * d + v, x.clone())).collect();
            let p1 = q.project_sparse(&first);
            let p2 = q.project_sparse(&second);
            sparse_of(&kron_vec(&p1, &p2))
        })
        .collect();
    // ε(π(u⊗v)) = uv
    let counit_cols: Vec<Vector> = q
        .representatives()
        .iter()
        .map(|&rep| r.basis_product(rep / d, rep % d).to_vec())
        .collect();
    let counit = Matrix::from_columns(f, d, &counit_cols);
    let x = q.project_sparse(&sparse_of(&kron_vec(r.unit(), r.unit())));
    GrouplikeCoring {
        coring: Coring::new(bimodule, lifts, counit),
        x,
    }
}

/// `{a ∈ A : a·x = x·a}`.
pub fn coinvariants(g: &GrouplikeCoring) -> Subspace {
    let bm = g.coring.bimodule();
    let da = g.base().dim();
    let f = g.coring.field();
    let cols: Vec<Vector> = (0..da)
        .map(|a| {
            let l = bm.left_actions()[a].apply(&g.x);
            let r = bm.right_actions()[a].apply(&g.x);
            l.iter().zip(&r).map(|(p, q)| p - q).collect()
        })
        .collect();
    let m = Matrix::from_columns(f, g.coring.dim(), &cols);
    Subspace::span(f, da, &m.kernel_basis())
}

/// `can: A ⊗_B A → C`, `a ⊗ a' ↦ a x a'`, as a matrix on the quotient basis.
pub fn can_map(g: &GrouplikeCoring, b: &Subspace) -> Result<(QuotientSpace, Matrix)> {
    let a = g.base();
    let f = a.field();
    let da = a.dim();
    let bm = g.coring.bimodule();
    let q = canonical_quotient(a, b.basis());
    // full map on A ⊗_k A
    let mut cols = Vec::with_capacity(da * da);
    for u in 0..da {
        let ux = bm.left_actions()[u].apply(&g.x);
        for v in 0..da {
            cols.push(bm.right_actions()[v].apply(&ux));
        }
    }
    let full = Matrix::from_columns(f, g.coring.dim(), &cols);
    // relations (u·b)⊗v − u⊗(b·v) must map to zero
    for bv in b.basis() {
        for u in 0..da {
            for v in 0..da {
                let mut rel = zero_vector(f, da * da);
                let ub = a.product(&unit_vector(f, da, u), bv);
                for (k, x) in ub.iter().enumerate() {
                    rel[k * da + v] = &rel[k * da + v] + x;
                }
                let bvv = a.product(bv, &unit_vector(f, da, v));
                for (k, x) in bvv.iter().enumerate() {
                    rel[u * da + k] = &rel[u * da + k] - x;
                }
                if !is_zero_vector(&full.apply(&rel)) {
                    return Err(Error::IllDefined(format!(
                        "can does not vanish on the relation for basis pair ({u}, {v})"
                    )));
                }
            }
        }
    }
    let map = full.mul(&q.section());
    Ok((q, map))
}

/// Evidence for or against bijectivity of a canonical map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisEvidence {
    pub galois: bool,
    pub coinvariants_dim: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    /// A nonzero kernel vector of the canonical map, when one exists.
    pub kernel_witness: Option<Vector>,
    /// For the Hopf–Galois check: whether Δ and ε are preserved.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coring_map: Option<bool>,
}

fn evidence(b_dim: usize, map: &Matrix, coring_map: Option<bool>) -> GaloisEvidence {
    let rank = map.rank();
    let kernel_witness = map.kernel_basis().into_iter().next();
    GaloisEvidence {
        galois: rank == map.cols() && rank == map.rows() && coring_map.unwrap_or(true),
        coinvariants_dim: b_dim,
        source_dim: map.cols(),
        target_dim: map.rows(),
        rank,
        kernel_witness,
        coring_map,
    }
}

/// Is `can` bijective over the coinvariants?
pub fn is_galois(g: &GrouplikeCoring) -> Result<GaloisEvidence> {
    let b = coinvariants(g);
    let (_, map) = can_map(g, &b)?;
    Ok(evidence(b.dim(), &map, None))
}

/// `A ⊗_B A → A ⊗ H`, `a ⊗ b ↦ a b₀ ⊗ b₁`, on the quotient basis.
pub fn hopf_can(c: &ComoduleAlgebra, b: &Subspace) -> (QuotientSpace, Matrix) {
    let f = c.field();
    let a = c.algebra();
    let da = a.dim();
    let ah = a.tensor(c.hopf().algebra());
    let q = canonical_quotient(a, b.basis());
    let cols: Vec<Vector> = q
        .representatives()
        .iter()
        .map(|&rep| {
            let (u, v) = (rep / da, rep % da);
            ah.product(&kron_vec(&unit_vector(f, da, u), c.hopf().unit_vector()), &c.coact(&unit_vector(f, da, v)))
        })
        .collect();
    let map = Matrix::from_columns(f, da * c.dim_h(), &cols);
    (q, map)
}

/// Builds the canonical coring `A ⊗_B A` over `B = A^{coH}` and the map
/// `a ⊗ b ↦ a b₀ ⊗ b₁` into `A ⊗ H`; Galois iff it is a coring isomorphism.
pub fn hopf_galois_check(c: &ComoduleAlgebra) -> Result<GaloisEvidence> {
    let a = c.algebra();
    let b = c.coinvariants();
    let canon = canonical_coring(a, &b)?;
    let target = coring_from_comodule(c);
    let (_, map) = hopf_can(c, &b);
    // counit: ε(can(z)) = ε_can(z)
    let mut preserves = target.coring.counit().mul(&map) == *canon.coring.counit();
    // comultiplication, compared in (A⊗H) ⊗_A (A⊗H)
    if preserves {
        let tq = target.coring.tensor_quotient();
        let dc = target.coring.dim();
        let n = canon.coring.dim();
        for j in 0..n {
            let mut pushed: SparseRow = Vec::new();
            for (idx, coef) in canon.coring.lift(j) {
                let (u, v) = (idx / n, idx % n);
                let mu = map.column(u);
                let mv = map.column(v);
                for (p, x) in mu.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (r, y) in mv.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        pushed.push((p * dc + r, &(coef * x) * y));
                    }
                }
            }
            let direct = target.coring.lift_of(&map.column(j));
            if tq.project_sparse(&pushed) != tq.project_sparse(&direct) {
                preserves = false;
                break;
            }
        }
    }
    Ok(evidence(b.dim(), &map, Some(preserves)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instance, cyclic_group, group_algebra, sweedler_h4};
    use crate::exactlin::Subspace;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn tensor_over_ground_and_self() {
        let h = group_algebra(&cyclic_group(3), Q).unwrap();
        let a = h.algebra();
        let reg = Bimodule::regular(a);
        let q = tensor_over_a(Q, reg.right_actions(), reg.left_actions());
        assert_eq!((q.ambient_dim(), q.dim()), (9, 3));
        let id = Matrix::identity(Q, 3);
        let q = tensor_over_a(Q, std::slice::from_ref(&id), &[Matrix::identity(Q, 2)]);
        assert_eq!(q.dim(), 6);
        assert!(q.projection().is_identity());
    }

    #[test]
    fn free_modules_tensor_rank() {
        // A^2 ⊗_A A^3 has dim 6·dim A
        let h = sweedler_h4(Q).unwrap();
        let a = h.algebra();
        let reg = Bimodule::regular(a);
        let right: Vec<Matrix> = reg.right_actions().iter().map(|m| Matrix::identity(Q, 2).kron(m)).collect();
        let left: Vec<Matrix> = reg.left_actions().iter().map(|m| Matrix::identity(Q, 3).kron(m)).collect();
        assert_eq!(tensor_over_a(Q, &right, &left).dim(), 24);
    }

    #[test]
    fn coalgebra_as_coring() {
        let h = sweedler_h4(Q).unwrap();
        assert!(Coring::from_coalgebra(h.coalgebra()).check().passed());
        // break coassociativity: Δ(x) = x⊗x
        let mut lifts: Vec<SparseRow> = (0..4).map(|k| sparse_of(h.coalgebra().basis_coproduct(k))).collect();
        lifts[2] = vec![(2 * 4 + 2, Q.one())];
        let bm = Bimodule::new(Algebra::ground(Q), 4, vec![Matrix::identity(Q, 4)], vec![Matrix::identity(Q, 4)]);
        let counit = Matrix::from_rows(Q, vec![h.coalgebra().counit().to_vec()]).unwrap();
        assert!(!Coring::new(bm, lifts, counit).check().passed());
    }

    #[test]
    fn comodule_corings_pass() {
        for name in ["I1", "I2", "I3", "I4", "I5"] {
            let inst = instance(name, Q).unwrap();
            let g = coring_from_comodule(&inst.comodule);
            let r = g.check();
            assert!(r.passed(), "{name}: {:?}", r.first_failure());
            let b = coinvariants(&g);
            assert_eq!(b, inst.comodule.coinvariants(), "{name}");
        }
    }

    #[test]
    fn tampered_right_action_flagged() {
        let inst = instance("I1", Q).unwrap();
        let g = coring_from_comodule(&inst.comodule);
        let bm = g.coring.bimodule();
        let mut right = bm.right_actions().to_vec();
        right[1] = Matrix::identity(Q, 4);
        let bad = Bimodule::new(bm.base().clone(), 4, bm.left_actions().to_vec(), right);
        let c = Coring::new(bad, g.coring.lifts().to_vec(), g.coring.counit().clone());
        let report = c.check();
        // right action of g is now trivial, so ε(c·g) = ε(c) ≠ ε(c)g
        assert!(report.failures().any(|x| x.name == "counit_bimodule_map"));
    }

    #[test]
    fn canonical_corings() {
        let h = group_algebra(&cyclic_group(2), Q).unwrap();
        let a = h.algebra();
        let k = Subspace::span(Q, 2, &[a.unit().to_vec()]);
        let g = canonical_coring(a, &k).unwrap();
        assert_eq!(g.coring.dim(), 4);
        assert!(g.check().passed());
        let full = Subspace::full(Q, 2);
        let g = canonical_coring(a, &full).unwrap();
        assert_eq!(g.coring.dim(), 2);
        assert!(g.check().passed());
        let not_ring = Subspace::span(Q, 2, &[unit_vector(Q, 2, 1)]);
        assert_eq!(canonical_coring(a, &not_ring).err(), Some(Error::NotASubring));
    }

    #[test]
    fn trivial_coring() {
        let a = sweedler_h4(Q).unwrap().algebra().clone();
        let t = Coring::trivial(&a);
        assert!(t.check().passed());
        let g = GrouplikeCoring { coring: t, x: a.unit().to_vec() };
        assert!(g.check().passed());
        // x = 1 commutes with everything, so B = A and A ⊗_A A ≅ A
        assert_eq!(coinvariants(&g).dim(), 4);
        let ev = is_galois(&g).unwrap();
        assert!(ev.galois);
        assert_eq!((ev.source_dim, ev.target_dim), (4, 4));
    }

    #[test]
    fn galois_discrimination() {
        for (name, expected) in [("I1", true), ("I2", true), ("I3", true), ("I4", false), ("I5", false)] {
            let inst = instance(name, Q).unwrap();
            let g = coring_from_comodule(&inst.comodule);
            let a = is_galois(&g).unwrap();
            let b = hopf_galois_check(&inst.comodule).unwrap();
            assert_eq!(a.galois, expected, "{name}");
            assert_eq!(b.galois, expected, "{name}");
        }
    }

    #[test]
    fn graded_can_kills_x_tensor_x() {
        let inst = instance("I4", Q).unwrap();
        let g = coring_from_comodule(&inst.comodule);
        let b = coinvariants(&g);
        let (q, map) = can_map(&g, &b).unwrap();
        // x⊗x is ambient index 3
        let xx = q.project(&unit_vector(Q, 4, 3));
        assert!(!is_zero_vector(&xx));
        assert!(is_zero_vector(&map.apply(&xx)));
    }

    #[test]
    fn mismatched_subring_is_ill_defined() {
        let inst = instance("I1", Q).unwrap();
        let g = coring_from_comodule(&inst.comodule);
        let all = Subspace::full(Q, 2);
        assert!(matches!(can_map(&g, &all), Err(Error::IllDefined(_))));
    }
}
