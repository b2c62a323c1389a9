use rand::Rng;
use serde::Serialize;

use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::exactlin::{axpy, hom_from_vector, hom_to_vector, module_homs, zero_vector, Echelon, Matrix, SparseRow, Subspace, Vector};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{Algebra, AxiomReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `*C`: left `A`-linear functionals, `(φ*ψ)(c) = ψ(c₁ φ(c₂))`, `i(a)(c) = ε(c)a`.
    Left,
    /// `C*`: right `A`-linear functionals, `(φ*ψ)(c) = φ(ψ(c₁) c₂)`, `j(a)(c) = aε(c)`.
    Right,
}

/// A dual ring of a coring, carried by a subspace of `Hom_k(C, A)` (index `i·dim C + j`
/// for `c_j ↦ e_i`).
#[derive(Clone, Debug, PartialEq)]
pub struct DualRing {
    side: Side,
    dim_c: usize,
    dim_a: usize,
    carrier: Subspace,
    algebra: Algebra,
    embedding: Matrix,
}

impl DualRing {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// `A → carrier`, the map `i` (left) or `j` (right).
    pub fn embedding(&self) -> &Matrix {
        &self.embedding
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.carrier.field()
    }

    /// The functional with the given coordinates, as a `dim A × dim C` matrix.
    pub fn functional(&self, coords: &[Scalar]) -> Matrix {
        hom_from_vector(self.field(), self.dim_c, self.dim_a, &self.carrier.embed(coords)).expect("carrier shape")
    }

    pub fn basis_functional(&self, i: usize) -> Matrix {
        hom_from_vector(self.field(), self.dim_c, self.dim_a, &self.carrier.basis()[i]).expect("carrier shape")
    }

    pub fn coords_of(&self, f: &Matrix) -> Option<Vector> {
        self.carrier.coords(&hom_to_vector(f))
    }

    /// Embedding, associativity and closure checks, with the full product
    /// evaluated on every basis pair against `coring`.
    pub fn check(&self, coring: &Coring) -> AxiomReport {
        let mut report = AxiomReport::default();
        report.extend("algebra", self.algebra.check());
        let mut failure = None;
        let basis: Vec<Matrix> = (0..self.dim()).map(|i| self.basis_functional(i)).collect();
        'outer: for (i, p) in basis.iter().enumerate() {
            for (j, q) in basis.iter().enumerate() {
                let full = product_functional(coring, self.side, p, q);
                match self.coords_of(&full) {
                    Some(c) if c == self.algebra.basis_product(i, j) => {}
                    _ => {
                        failure = Some(format!("product of basis functionals {i}, {j} disagrees with the cached table"));
                        break 'outer;
                    }
                }
            }
        }
        report.push("closure", failure);
        let a = coring.base();
        let emb_ok = crate::theorems::product_witness(a, &self.algebra, &self.embedding, crate::theorems::MapKind::Multiplicative)
            .is_none()
            && self.embedding.apply(a.unit()) == self.algebra.unit()
            && self.embedding.rank() == a.dim();
        report.push("embedding", (!emb_ok).then(|| "embedding is not an injective unital ring map".to_string()));
        let eps_ok = self.coords_of(coring.counit()).as_deref() == Some(self.algebra.unit());
        report.push("unit_is_counit", (!eps_ok).then(|| "unit ≠ ε".to_string()));
        report
    }
}

/// `Σ coef · e_u·a_v` or `Σ coef · a_u·e_v`: the inner sums of the two dual products.
fn inner(coring: &Coring, side: Side, f: &Matrix, c: usize) -> Vector {
    let d = coring.dim();
    let bm = coring.bimodule();
    let mut w = zero_vector(coring.field(), d);
    for (idx, coef) in coring.lift(c) {
        let (u, v) = (idx / d, idx % d);
        match side {
            // c₁ · φ(c₂)
            Side::Left => {
                for (t, x) in f.column(v).iter().enumerate() {
                    if !x.is_zero() {
                        axpy(&mut w, &(coef * x), &bm.right_actions()[t].column(u));
                    }
                }
            }
            // ψ(c₁) · c₂
            Side::Right => {
                for (t, x) in f.column(u).iter().enumerate() {
                    if !x.is_zero() {
                        axpy(&mut w, &(coef * x), &bm.left_actions()[t].column(v));
                    }
                }
            }
        }
    }
    w
}

/// The dual product of two functionals, evaluated on every basis element.
pub fn product_functional(coring: &Coring, side: Side, phi: &Matrix, psi: &Matrix) -> Matrix {
    let d = coring.dim();
    let cols: Vec<Vector> = (0..d)
        .map(|c| match side {
            Side::Left => psi.apply(&inner(coring, side, phi, c)),
            Side::Right => phi.apply(&inner(coring, side, psi, c)),
        })
        .collect();
    Matrix::from_columns(coring.field(), coring.base().dim(), &cols)
}

fn build(coring: &Coring, side: Side) -> Result<DualRing> {
    let f = coring.field();
    let a = coring.base();
    let (da, dc) = (a.dim(), coring.dim());
    let bm = coring.bimodule();
    let e = |i: usize| crate::exactlin::unit_vector(f, da, i);
    let carrier = match side {
        Side::Left => {
            let on_a: Vec<Matrix> = (0..da).map(|i| a.left_mult(&e(i))).collect();
            module_homs(f, bm.left_actions(), &on_a)
        }
        Side::Right => {
            let on_a: Vec<Matrix> = (0..da).map(|i| a.right_mult(&e(i))).collect();
            module_homs(f, bm.right_actions(), &on_a)
        }
    };
    let n = carrier.dim();
    let basis: Vec<Matrix> = carrier
        .basis()
        .iter()
        .map(|v| hom_from_vector(f, dc, da, v))
        .collect::<Result<_>>()?;
    // Only the pivot entries of a product are needed to read its coordinates.
    let pivots: Vec<(usize, usize)> = carrier.pivots().iter().map(|&p| (p / dc, p % dc)).collect();
    let mut needed: Vec<usize> = pivots.iter().map(|&(_, j)| j).collect();
    needed.sort_unstable();
    needed.dedup();
    let slot = |j: usize| needed.binary_search(&j).expect("needed column");
    // inner[x][slot(j)]: the inner sum built from basis functional x at c_j
    let inners: Vec<Vec<Vector>> = basis
        .iter()
        .map(|fx| needed.iter().map(|&j| inner(coring, side, fx, j)).collect())
        .collect();
    let mut mul = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            // left: ψ = basis[y] applied to inner(φ = x); right: φ = basis[x] applied to inner(ψ = y)
            let (outer, w) = match side {
                Side::Left => (&basis[y], &inners[x]),
                Side::Right => (&basis[x], &inners[y]),
            };
            for &(i, j) in &pivots {
                let col = &w[slot(j)];
                let mut acc = f.zero();
                for (l, v) in col.iter().enumerate() {
                    crate::field::add_product(&mut acc, outer.get(i, l), v);
                }
                mul.push(acc);
            }
        }
    }
    let unit = carrier
        .coords(&hom_to_vector(coring.counit()))
        .ok_or_else(|| Error::NotClosed("ε is not in the dual".into()))?;
    let algebra = Algebra::new(f, n, mul, unit);
    // embedding: i(a)(c) = ε(c)a, j(a)(c) = aε(c)
    let mut cols = Vec::with_capacity(da);
    for t in 0..da {
        let mult = match side {
            Side::Left => a.right_mult(&e(t)),
            Side::Right => a.left_mult(&e(t)),
        };
        let func = mult.mul(coring.counit());
        cols.push(
            carrier
                .coords(&hom_to_vector(&func))
                .ok_or_else(|| Error::NotClosed("embedded base element is not a dual element".into()))?,
        );
    }
    let embedding = Matrix::from_columns(f, n, &cols);
    Ok(DualRing {
        side,
        dim_c: dc,
        dim_a: da,
        carrier,
        algebra,
        embedding,
    })
}

/// `*C`, the left dual ring.
pub fn left_dual(coring: &Coring) -> Result<DualRing> {
    build(coring, Side::Left)
}

/// `C*`, the right dual ring.
pub fn right_dual(coring: &Coring) -> Result<DualRing> {
    build(coring, Side::Right)
}

/// `Σ f_i(c)·c_i = c` for every `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBasisPair {
    /// Coordinates of `f_i` in the left dual.
    pub functionals: Vec<Vector>,
    pub elements: Vec<Vector>,
}

/// Greedy generators of `C` as a left `A`-module.
fn left_generators(coring: &Coring) -> Vec<Vector> {
    let f = coring.field();
    let d = coring.dim();
    let mut span = Echelon::new(f, d);
    let mut gens = Vec::new();
    for j in 0..d {
        let e = crate::exactlin::unit_vector(f, d, j);
        if span.contains(&e) {
            continue;
        }
        for act in coring.bimodule().left_actions() {
            span.insert_dense(&act.column(j));
        }
        gens.push(e);
        if span.rank() == d {
            break;
        }
    }
    gens
}

/// Dual basis of `C` as a left `A`-module with functionals in `*C`.
pub fn dual_basis(coring: &Coring, dual: &DualRing) -> Result<DualBasisPair> {
    assert_eq!(dual.side(), Side::Left);
    let f = coring.field();
    let d = coring.dim();
    let gens = left_generators(coring);
    let n = dual.dim();
    let basis: Vec<Matrix> = (0..n).map(|b| dual.basis_functional(b)).collect();
    let bm = coring.bimodule();
    // unknown (i, b): coefficient of basis functional b in f_i
    let mut system = Matrix::zeros(f, d * d, gens.len() * n);
    for (i, ci) in gens.iter().enumerate() {
        for (b, fb) in basis.iter().enumerate() {
            for c in 0..d {
                let v = bm.left_by(&fb.column(c)).apply(ci);
                for (k, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        system.set(c * d + k, i * n + b, x);
                    }
                }
            }
        }
    }
    let rhs = Matrix::from_columns(f, d * d, &[hom_to_vector(&Matrix::identity(f, d).transpose())]);
    let sol = system.solve(&rhs).map_err(|_| Error::NoDualBasis)?;
    let x = sol.column(0);
    Ok(DualBasisPair {
        functionals: x.chunks(n).map(<[Scalar]>::to_vec).collect(),
        elements: gens,
    })
}

/// Random relation vectors of `C ⊗_k C`, one sparse sum of `terms` relations per basis element.
pub fn random_lift_shifts<R: Rng>(coring: &Coring, rng: &mut R, terms: usize) -> Vec<SparseRow> {
    let d = coring.dim();
    let da = coring.base().dim();
    let f = coring.field();
    (0..d)
        .map(|_| {
            let mut row = SparseRow::new();
            for _ in 0..terms {
                let (c, a, c2) = (rng.gen_range(0..d), rng.gen_range(0..da), rng.gen_range(0..d));
                let coef = f.from_i64(rng.gen_range(-3..=3));
                row.extend(coring.relation(c, a, c2).into_iter().map(|(k, v)| (k, &coef * &v)));
            }
            row
        })
        .collect()
}
