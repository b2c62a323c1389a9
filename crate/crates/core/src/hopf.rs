//! Structure-constant algebras, coalgebras and Hopf algebras.
//!
//! Multiplication is stored as `m[i][j][k]` with `e_i e_j = Σ_k m[i][j][k] e_k`,
//! comultiplication as `d[k][i][j]` with `Δ(e_k) = Σ d[k][i][j] e_i ⊗ e_j`.
//! Both are flat arrays so that `e_i e_j` and `Δ(e_k)` are contiguous slices;
//! `Δ(e_k)` is then already a vector in the Kronecker basis of `H ⊗ H`.

use serde::Serialize;

use crate::error::Result;
use crate::exactlin::{axpy, kron_vec, unit_vector, zero_vector, Matrix, Vector};
use crate::field::{add_product, FieldSpec, Scalar};

/// One named pass/fail entry of an axiom check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Itemized result of an axiom checker.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<CheckOutcome>,
}

impl AxiomReport {
    pub fn push(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure,
        });
    }

    pub fn extend(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn first_failure(&self) -> Option<String> {
        self.failures().next().map(|c| match &c.detail {
            Some(d) => format!("{}: {d}", c.name),
            None => c.name.clone(),
        })
    }
}

fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Finite-dimensional unital algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    mul: Vec<Scalar>,
    unit: Vector,
    /// Nonzero entries of each `e_i e_j`, index `i·dim + j`.
    sparse: Vec<Vec<(usize, Scalar)>>,
}

impl Algebra {
    /// Builds an algebra from a flat `m[i][j][k]` array; axioms are not checked.
    pub fn new(field: FieldSpec, dim: usize, mul: Vec<Scalar>, unit: Vector) -> Self {
        assert_eq!(mul.len(), dim * dim * dim, "structure constant count");
        assert_eq!(unit.len(), dim, "unit length");
        let sparse = if dim == 0 {
            Vec::new()
        } else {
            mul.chunks(dim)
                .map(|c| {
                    c.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(k, v)| (k, v.clone()))
                        .collect()
                })
                .collect()
        };
        Algebra {
            field,
            dim,
            mul,
            unit,
            sparse,
        }
    }

    /// Builds an algebra from the products of basis pairs.
    pub fn from_products<F>(field: FieldSpec, dim: usize, unit: Vector, mut product: F) -> Self
    where
        F: FnMut(usize, usize) -> Vector,
    {
        let mut mul = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                assert_eq!(p.len(), dim);
                mul.extend(p);
            }
        }
        Algebra::new(field, dim, mul, unit)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: FieldSpec) -> Self {
        Algebra::new(field, 1, vec![field.one()], vec![field.one()])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.mul
    }

    /// `e_i e_j` as a coefficient slice.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let d = self.dim;
        &self.mul[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// Nonzero entries of `e_i e_j`.
    #[inline]
    pub fn basis_product_sparse(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, b)| !b.is_zero()).collect();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &ys {
                let ab = a * b;
                for (k, c) in self.basis_product_sparse(i, j) {
                    add_product(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.product(x, &unit_vector(self.field, self.dim, j)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.product(&unit_vector(self.field, self.dim, j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Multiplication as a linear map `A ⊗ A → A`.
    pub fn mul_map(&self) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(self.field, d, d * d);
        for i in 0..d {
            for j in 0..d {
                for (k, v) in self.basis_product(i, j).iter().enumerate() {
                    if !v.is_zero() {
                        m.set(k, i * d + j, v.clone());
                    }
                }
            }
        }
        m
    }

    pub fn opposite(&self) -> Algebra {
        Algebra::from_products(self.field, self.dim, self.unit.clone(), |i, j| {
            self.basis_product(j, i).to_vec()
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// The algebra `A ⊗ B` with componentwise product, basis index `i·dim B + j`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (da, db) = (self.dim, other.dim);
        Algebra::from_products(self.field, da * db, kron_vec(&self.unit, &other.unit), |x, y| {
            kron_vec(
                self.basis_product(x / db, y / db),
                other.basis_product(x % db, y % db),
            )
        })
    }

    /// Associativity on all basis triples and both unit laws.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let d = self.dim;
        let mut failure = None;
        'outer: for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.product(ij, &unit_vector(self.field, d, k));
                    let right = self.product(&unit_vector(self.field, d, i), self.basis_product(j, k));
                    if left != right {
                        failure = Some(format!(
                            "(e{i} e{j}) e{k} = {} but e{i} (e{j} e{k}) = {}",
                            fmt_vec(&left),
                            fmt_vec(&right)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        report.push("associativity", failure);
        let mut failure = None;
        for i in 0..d {
            let e = unit_vector(self.field, d, i);
            if self.product(&self.unit, &e) != e || self.product(&e, &self.unit) != e {
                failure = Some(format!("unit fails on e{i}"));
                break;
            }
        }
        report.push("unit", failure);
        report
    }
}

/// Finite-dimensional counital coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: FieldSpec,
    dim: usize,
    comul: Vec<Scalar>,
    counit: Vector,
}

impl Coalgebra {
    pub fn new(field: FieldSpec, dim: usize, comul: Vec<Scalar>, counit: Vector) -> Self {
        assert_eq!(comul.len(), dim * dim * dim, "structure constant count");
        assert_eq!(counit.len(), dim, "counit length");
        Coalgebra { field, dim, comul, counit }
    }

    pub fn from_coproducts<F>(field: FieldSpec, dim: usize, counit: Vector, mut coproduct: F) -> Self
    where
        F: FnMut(usize) -> Vector,
    {
        let mut comul = Vec::with_capacity(dim * dim * dim);
        for k in 0..dim {
            let c = coproduct(k);
            assert_eq!(c.len(), dim * dim);
            comul.extend(c);
        }
        Coalgebra::new(field, dim, comul, counit)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.comul
    }

    /// `Δ(e_k)` in the Kronecker basis of `C ⊗ C`.
    #[inline]
    pub fn basis_coproduct(&self, k: usize) -> &[Scalar] {
        let d2 = self.dim * self.dim;
        &self.comul[k * d2..(k + 1) * d2]
    }

    pub fn coproduct(&self, x: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim * self.dim);
        for (k, a) in x.iter().enumerate() {
            axpy(&mut out, a, self.basis_coproduct(k));
        }
        out
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        crate::exactlin::dot(&self.counit, x)
    }

    /// Comultiplication as a linear map `C → C ⊗ C`.
    pub fn comul_map(&self) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|k| self.basis_coproduct(k).to_vec()).collect();
        Matrix::from_columns(self.field, self.dim * self.dim, &cols)
    }

    pub fn coopposite(&self) -> Coalgebra {
        let d = self.dim;
        Coalgebra::from_coproducts(self.field, d, self.counit.clone(), |k| {
            let c = self.basis_coproduct(k);
            let mut out = zero_vector(self.field, d * d);
            for i in 0..d {
                for j in 0..d {
                    out[j * d + i] = c[i * d + j].clone();
                }
            }
            out
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coopposite() == *self
    }

    /// Coassociativity and both counit laws.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let d = self.dim;
        let f = self.field;
        let mut failure = None;
        for k in 0..d {
            let dk = self.basis_coproduct(k);
            let mut left = zero_vector(f, d * d * d);
            let mut right = zero_vector(f, d * d * d);
            for i in 0..d {
                for j in 0..d {
                    let c = &dk[i * d + j];
                    if c.is_zero() {
                        continue;
                    }
                    axpy(&mut left, c, &kron_vec(self.basis_coproduct(i), &unit_vector(f, d, j)));
                    axpy(&mut right, c, &kron_vec(&unit_vector(f, d, i), self.basis_coproduct(j)));
                }
            }
            if left != right {
                failure = Some(format!("coassociativity fails on e{k}"));
                break;
            }
        }
        report.push("coassociativity", failure);
        let mut failure = None;
        for k in 0..d {
            let dk = self.basis_coproduct(k);
            let mut left = zero_vector(f, d);
            let mut right = zero_vector(f, d);
            for i in 0..d {
                for j in 0..d {
                    let c = &dk[i * d + j];
                    add_product(&mut left[j], c, &self.counit[i]);
                    add_product(&mut right[i], c, &self.counit[j]);
                }
            }
            let e = unit_vector(f, d, k);
            if left != e || right != e {
                failure = Some(format!("counit fails on e{k}"));
                break;
            }
        }
        report.push("counit", failure);
        report
    }
}

/// Hopf algebra given by structure constants. Construction does not validate;
/// call [`HopfAlgebra::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: Algebra,
    coalgebra: Coalgebra,
    antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, antipode: Matrix) -> Self {
        assert_eq!(algebra.dim(), coalgebra.dim());
        assert_eq!((antipode.rows(), antipode.cols()), (algebra.dim(), algebra.dim()));
        HopfAlgebra {
            algebra,
            coalgebra,
            antipode,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode.invert()
    }

    /// Full axiom suite: algebra, coalgebra, bialgebra compatibility, antipode, invertibility of S.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        report.extend("algebra", self.algebra.check());
        report.extend("coalgebra", self.coalgebra.check());
        let d = self.dim();
        let f = self.field();
        let hh = self.algebra.tensor(&self.algebra);
        let a = &self.algebra;
        let c = &self.coalgebra;

        let mut failure = None;
        'outer: for i in 0..d {
            for j in 0..d {
                let lhs = c.coproduct(a.basis_product(i, j));
                let rhs = hh.product(c.basis_coproduct(i), c.basis_coproduct(j));
                if lhs != rhs {
                    failure = Some(format!("Δ(e{i} e{j}) ≠ Δ(e{i})Δ(e{j})"));
                    break 'outer;
                }
            }
        }
        report.push("bialgebra.comul_multiplicative", failure);
        let unit_ok = c.coproduct(a.unit()) == kron_vec(a.unit(), a.unit());
        report.push(
            "bialgebra.comul_unital",
            (!unit_ok).then(|| "Δ(1) ≠ 1⊗1".to_string()),
        );
        let mut failure = None;
        'outer2: for i in 0..d {
            for j in 0..d {
                let lhs = c.counit_of(a.basis_product(i, j));
                let rhs = &c.counit()[i] * &c.counit()[j];
                if lhs != rhs {
                    failure = Some(format!("ε(e{i} e{j}) ≠ ε(e{i})ε(e{j})"));
                    break 'outer2;
                }
            }
        }
        report.push("bialgebra.counit_multiplicative", failure);
        report.push(
            "bialgebra.counit_unital",
            (!c.counit_of(a.unit()).is_one()).then(|| "ε(1) ≠ 1".to_string()),
        );

        let s = &self.antipode;
        let (mut left_fail, mut right_fail) = (None, None);
        for k in 0..d {
            let dk = c.basis_coproduct(k);
            let mut left = zero_vector(f, d);
            let mut right = zero_vector(f, d);
            for p in 0..d {
                for q in 0..d {
                    let coef = &dk[p * d + q];
                    if coef.is_zero() {
                        continue;
                    }
                    let sp = s.column(p);
                    let sq = s.column(q);
                    axpy(&mut left, coef, &a.product(&sp, &unit_vector(f, d, q)));
                    axpy(&mut right, coef, &a.product(&unit_vector(f, d, p), &sq));
                }
            }
            let expected: Vector = a.unit().iter().map(|u| u * &c.counit()[k]).collect();
            if left != expected && left_fail.is_none() {
                left_fail = Some(format!("S(h₁)h₂ ≠ ε(h)1 on e{k}: got {}", fmt_vec(&left)));
            }
            if right != expected && right_fail.is_none() {
                right_fail = Some(format!("h₁S(h₂) ≠ ε(h)1 on e{k}: got {}", fmt_vec(&right)));
            }
        }
        report.push("antipode.left", left_fail);
        report.push("antipode.right", right_fail);
        report.push(
            "antipode.invertible",
            self.antipode.invert().err().map(|e| e.to_string()),
        );
        report
    }

    /// Hopf algebra on the dual basis: structure constants transposed, antipode `Sᵀ`.
    pub fn dual(&self) -> HopfAlgebra {
        let f = self.field();
        let d = self.dim();
        // product of dual basis f_i f_j = Σ_k d[k][i][j] f_k
        let algebra = Algebra::from_products(f, d, self.coalgebra.counit().to_vec(), |i, j| {
            (0..d)
                .map(|k| self.coalgebra.basis_coproduct(k)[i * d + j].clone())
                .collect()
        });
        // Δ(f_k) = Σ m[i][j][k] f_i ⊗ f_j
        let coalgebra = Coalgebra::from_coproducts(f, d, self.algebra.unit().to_vec(), |k| {
            let mut out = zero_vector(f, d * d);
            for i in 0..d {
                for j in 0..d {
                    out[i * d + j] = self.algebra.basis_product(i, j)[k].clone();
                }
            }
            out
        });
        HopfAlgebra::new(algebra, coalgebra, self.antipode.transpose())
    }

    /// Reversed multiplication, antipode `S⁻¹`.
    pub fn opposite(&self) -> Result<HopfAlgebra> {
        Ok(HopfAlgebra::new(
            self.algebra.opposite(),
            self.coalgebra.clone(),
            self.antipode_inverse()?,
        ))
    }

    /// Reversed comultiplication, antipode `S⁻¹`.
    pub fn coopposite(&self) -> Result<HopfAlgebra> {
        Ok(HopfAlgebra::new(
            self.algebra.clone(),
            self.coalgebra.coopposite(),
            self.antipode_inverse()?,
        ))
    }

    /// `S(h)` for a coefficient vector.
    pub fn apply_antipode(&self, h: &[Scalar]) -> Vector {
        self.antipode.apply(h)
    }

    pub fn unit_vector(&self) -> &[Scalar] {
        self.algebra.unit()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic_group, group_algebra, sweedler_h4};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn ground_field_is_an_algebra() {
        assert!(Algebra::ground(Q).check().passed());
    }

    #[test]
    fn non_unital_table_is_flagged() {
        // e0 e0 = e1, every other product zero, "unit" e0
        let a = Algebra::from_products(Q, 2, unit_vector(Q, 2, 0), |i, j| {
            if (i, j) == (0, 0) {
                unit_vector(Q, 2, 1)
            } else {
                zero_vector(Q, 2)
            }
        });
        let report = a.check();
        assert!(!report.passed());
        assert!(report.failures().any(|c| c.name == "unit"));
    }

    #[test]
    fn group_algebra_c2_axioms() {
        let h = group_algebra(&cyclic_group(2), Q).unwrap();
        assert!(h.algebra().check().passed());
        assert!(h.check().passed());
        assert!(h.antipode().is_identity());
        assert_eq!(h.antipode_inverse().unwrap(), *h.antipode());
    }

    #[test]
    fn sweedler_antipode_sign_flip_fails() {
        let h = sweedler_h4(Q).unwrap();
        assert!(h.check().passed(), "{:?}", h.check().first_failure());
        // flip S(x)
        let mut s = h.antipode().clone();
        for i in 0..4 {
            let v = -s.get(i, 2);
            s.set(i, 2, v);
        }
        let bad = HopfAlgebra::new(h.algebra().clone(), h.coalgebra().clone(), s);
        let report = bad.check();
        assert!(report.failures().any(|c| c.name.starts_with("antipode.")));
    }

    #[test]
    fn sweedler_antipode_order_four() {
        let h = sweedler_h4(Q).unwrap();
        let s = h.antipode();
        assert!(!s.pow(2).is_identity());
        assert!(s.pow(4).is_identity());
        let sinv = h.antipode_inverse().unwrap();
        assert!(sinv.mul(s).is_identity() && s.mul(&sinv).is_identity());
        assert_ne!(sinv, *s);
    }

    #[test]
    fn zero_row_antipode_is_singular() {
        let h = sweedler_h4(Q).unwrap();
        let mut s = h.antipode().clone();
        for j in 0..4 {
            s.set(1, j, Q.zero());
        }
        let bad = HopfAlgebra::new(h.algebra().clone(), h.coalgebra().clone(), s);
        assert_eq!(bad.antipode_inverse(), Err(crate::Error::Singular));
    }

    #[test]
    fn duals_and_opposites() {
        for h in [group_algebra(&cyclic_group(3), Q).unwrap(), sweedler_h4(Q).unwrap()] {
            let d = h.dual();
            assert!(d.check().passed());
            assert_eq!(d.dim(), h.dim());
            assert_eq!(d.dual(), h);
            let op = h.opposite().unwrap();
            assert!(op.check().passed(), "{:?}", op.check().first_failure());
            let cop = h.coopposite().unwrap();
            assert!(cop.check().passed());
        }
        let c3 = group_algebra(&cyclic_group(3), Q).unwrap();
        assert_eq!(c3.opposite().unwrap().algebra(), c3.algebra());
        assert_eq!(c3.coopposite().unwrap().coalgebra(), c3.coalgebra());
    }

    #[test]
    fn dual_of_group_algebra_is_pointwise() {
        let h = group_algebra(&cyclic_group(3), Q).unwrap();
        let d = h.dual();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { unit_vector(Q, 3, i) } else { zero_vector(Q, 3) };
                assert_eq!(d.algebra().basis_product(i, j), &expected[..]);
            }
        }
    }

    #[test]
    fn antipode_is_anti_multiplicative() {
        let h = sweedler_h4(Q).unwrap();
        let a = h.algebra();
        let s = h.antipode();
        for i in 0..4 {
            for j in 0..4 {
                let lhs = s.apply(a.basis_product(i, j));
                let rhs = a.product(&s.column(j), &s.column(i));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
