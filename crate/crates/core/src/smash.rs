//! Comodule algebras, relative Hopf modules, module algebras and the smash products
//! built from them.
//!
//! The coaction of a comodule algebra is a `(dim A · dim H) × dim A` matrix with
//! row index `r·dim H + s`, i.e. `ρ(e_i) = Σ ρ[(r,s), i] e_r ⊗ h_s`. The smash
//! product `A#H*` uses the basis `e_i # f_j` at index `i·dim H + j`, and the big
//! smash `#(H,A) = Hom_k(H, A)` uses `E_{a,h}: h_h ↦ e_a` at index `a·dim H + h`,
//! so the map `f ↦ Σ f(h_i) # f_i` between them is the identity matrix.

use crate::duals::{end_ring, EndRing};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, kron_vec, module_homs, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{Algebra, AxiomReport, HopfAlgebra};
use crate::theorems::{MapKind, RingIsoCertificate};

/// Algebra `A` with a right `H`-coaction that is an algebra map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    algebra: Algebra,
    hopf: HopfAlgebra,
    coaction: Matrix,
}

impl ComoduleAlgebra {
    pub fn new(algebra: Algebra, hopf: HopfAlgebra, coaction: Matrix) -> Self {
        assert_eq!(algebra.field(), hopf.field(), "shared field");
        assert_eq!(coaction.rows(), algebra.dim() * hopf.dim(), "coaction rows");
        assert_eq!(coaction.cols(), algebra.dim(), "coaction columns");
        ComoduleAlgebra {
            algebra,
            hopf,
            coaction,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn dim_a(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.hopf.dim()
    }

    /// `ρ[(r,s), i]`.
    #[inline]
    pub fn rho(&self, r: usize, s: usize, i: usize) -> &Scalar {
        self.coaction.get(r * self.dim_h() + s, i)
    }

    pub fn coact(&self, a: &[Scalar]) -> Vector {
        self.coaction.apply(a)
    }

    /// Coassociativity, counit, multiplicativity and unitality of ρ.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        report.extend("algebra", self.algebra.check());
        let f = self.field();
        let (da, dh) = (self.dim_a(), self.dim_h());
        let rho = &self.coaction;
        let delta = self.hopf.coalgebra().comul_map();
        let lhs = Matrix::identity(f, da).kron(&delta).mul(rho);
        let rhs = rho.kron(&Matrix::identity(f, dh)).mul(rho);
        report.push(
            "coassociativity",
            (lhs != rhs).then(|| "(ρ⊗id)ρ ≠ (id⊗Δ)ρ".to_string()),
        );
        let eps = Matrix::from_rows(f, vec![self.hopf.coalgebra().counit().to_vec()]).expect("one row");
        let counit_ok = Matrix::identity(f, da).kron(&eps).mul(rho).is_identity();
        report.push("counit", (!counit_ok).then(|| "(id⊗ε)ρ ≠ id".to_string()));

        let ah = self.algebra.tensor(self.hopf.algebra());
        let images = rho.columns();
        let mut failure = None;
        'outer: for i in 0..da {
            for j in 0..da {
                let l = self.coact(self.algebra.basis_product(i, j));
                let r = ah.product(&images[i], &images[j]);
                if l != r {
                    failure = Some(format!("ρ(e{i} e{j}) ≠ ρ(e{i})ρ(e{j})"));
                    break 'outer;
                }
            }
        }
        report.push("multiplicative", failure);
        let unit_ok = self.coact(self.algebra.unit()) == kron_vec(self.algebra.unit(), self.hopf.unit_vector());
        report.push("unital", (!unit_ok).then(|| "ρ(1) ≠ 1⊗1".to_string()));
        report
    }

    /// `A^op` as an `H^op`-comodule algebra (same coaction matrix).
    pub fn opposite(&self) -> Result<ComoduleAlgebra> {
        Ok(ComoduleAlgebra::new(
            self.algebra.opposite(),
            self.hopf.opposite()?,
            self.coaction.clone(),
        ))
    }

    /// `{a : ρ(a) = a ⊗ 1}`, computed straight from the coaction.
    pub fn coinvariants(&self) -> Subspace {
        let f = self.field();
        let one = Matrix::from_columns(f, self.dim_h(), &[self.hopf.unit_vector().to_vec()]);
        let trivial = Matrix::identity(f, self.dim_a()).kron(&one);
        let diff = self.coaction.sub(&trivial);
        Subspace::span(f, self.dim_a(), &diff.kernel_basis())
    }
}

/// Right module `M` over the comodule algebra's `A` that is also a right
/// `H`-comodule with `ρ(m·a) = m₀a₀ ⊗ m₁a₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeHopfModule {
    base: ComoduleAlgebra,
    dim: usize,
    /// `dim M × (dim M · dim A)`, column `m·dim A + a` holds `e_m · e_a`.
    right_action: Matrix,
    /// `(dim M · dim H) × dim M`.
    coaction: Matrix,
}

impl RelativeHopfModule {
    pub fn new(base: ComoduleAlgebra, dim: usize, right_action: Matrix, coaction: Matrix) -> Self {
        assert_eq!((right_action.rows(), right_action.cols()), (dim, dim * base.dim_a()));
        assert_eq!((coaction.rows(), coaction.cols()), (dim * base.dim_h(), dim));
        RelativeHopfModule {
            base,
            dim,
            right_action,
            coaction,
        }
    }

    /// `M = A` with right multiplication and coaction ρ.
    pub fn regular(base: &ComoduleAlgebra) -> Self {
        let a = base.algebra();
        let d = a.dim();
        let mut act = Matrix::zeros(base.field(), d, d * d);
        for m in 0..d {
            for b in 0..d {
                for (k, v) in a.basis_product(m, b).iter().enumerate() {
                    if !v.is_zero() {
                        act.set(k, m * d + b, v.clone());
                    }
                }
            }
        }
        RelativeHopfModule::new(base.clone(), d, act, base.coaction().clone())
    }

    /// `M = A ⊗ H` with `(a⊗h)·b = a b₀ ⊗ h b₁` and coaction `id ⊗ Δ`.
    pub fn canonical(base: &ComoduleAlgebra) -> Self {
        let f = base.field();
        let (da, dh) = (base.dim_a(), base.dim_h());
        let dim = da * dh;
        let a = base.algebra();
        let h = base.hopf().algebra();
        let mut act = Matrix::zeros(f, dim, dim * da);
        for x in 0..da {
            for y in 0..dh {
                for b in 0..da {
                    let mut out = zero_vector(f, dim);
                    for r in 0..da {
                        for s in 0..dh {
                            let c = base.rho(r, s, b);
                            if c.is_zero() {
                                continue;
                            }
                            let v = kron_vec(a.basis_product(x, r), h.basis_product(y, s));
                            axpy(&mut out, c, &v);
                        }
                    }
                    let col = (x * dh + y) * da + b;
                    for (k, v) in out.into_iter().enumerate() {
                        if !v.is_zero() {
                            act.set(k, col, v);
                        }
                    }
                }
            }
        }
        let coaction = Matrix::identity(f, da).kron(&base.hopf().coalgebra().comul_map());
        RelativeHopfModule::new(base.clone(), dim, act, coaction)
    }

    pub fn base(&self) -> &ComoduleAlgebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn right_action(&self) -> &Matrix {
        &self.right_action
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn field(&self) -> FieldSpec {
        self.base.field()
    }

    /// Matrix of `m ↦ m · e_b`.
    pub fn action_by(&self, b: usize) -> Matrix {
        let da = self.base.dim_a();
        let cols: Vec<Vector> = (0..self.dim).map(|m| self.right_action.column(m * da + b)).collect();
        Matrix::from_columns(self.field(), self.dim, &cols)
    }

    /// Matrices of `m ↦ m · e_b` for every basis element of `A`.
    pub fn actions(&self) -> Vec<Matrix> {
        (0..self.base.dim_a()).map(|b| self.action_by(b)).collect()
    }

    /// Matrix of `m ↦ m · a`.
    pub fn action_by_element(&self, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (b, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action_by(b).scale(c));
            }
        }
        out
    }

    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let f = self.field();
        let a = self.base.algebra();
        let (d, da, dh) = (self.dim, self.base.dim_a(), self.base.dim_h());
        let acts = self.actions();
        let mut failure = None;
        'outer: for i in 0..da {
            for j in 0..da {
                let lhs = acts[j].mul(&acts[i]);
                let rhs = self.action_by_element(a.basis_product(i, j));
                if lhs != rhs {
                    failure = Some(format!("(m·e{i})·e{j} ≠ m·(e{i} e{j})"));
                    break 'outer;
                }
            }
        }
        report.push("module.associativity", failure);
        let unit_ok = self.action_by_element(a.unit()).is_identity();
        report.push("module.unit", (!unit_ok).then(|| "m·1 ≠ m".to_string()));

        let rho = &self.coaction;
        let delta = self.base.hopf().coalgebra().comul_map();
        let lhs = Matrix::identity(f, d).kron(&delta).mul(rho);
        let rhs = rho.kron(&Matrix::identity(f, dh)).mul(rho);
        report.push(
            "comodule.coassociativity",
            (lhs != rhs).then(|| "(ρ⊗id)ρ ≠ (id⊗Δ)ρ".to_string()),
        );
        let eps = Matrix::from_rows(f, vec![self.base.hopf().coalgebra().counit().to_vec()]).expect("one row");
        let counit_ok = Matrix::identity(f, d).kron(&eps).mul(rho).is_identity();
        report.push("comodule.counit", (!counit_ok).then(|| "(id⊗ε)ρ ≠ id".to_string()));

        // ρ(m·b) = Σ (m₀·b₀) ⊗ m₁b₁
        let h = self.base.hopf().algebra();
        let mut failure = None;
        'compat: for m in 0..d {
            let rm = rho.column(m);
            for b in 0..da {
                let lhs = rho.apply(&acts[b].column(m));
                let mut rhs = zero_vector(f, d * dh);
                for m0 in 0..d {
                    for m1 in 0..dh {
                        let c = &rm[m0 * dh + m1];
                        if c.is_zero() {
                            continue;
                        }
                        for r in 0..da {
                            for s in 0..dh {
                                let c2 = self.base.rho(r, s, b);
                                if c2.is_zero() {
                                    continue;
                                }
                                let v = kron_vec(&acts[r].column(m0), h.basis_product(m1, s));
                                axpy(&mut rhs, &(c * c2), &v);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    failure = Some(format!("ρ(e{m}·e{b}) ≠ m₀b₀ ⊗ m₁b₁"));
                    break 'compat;
                }
            }
        }
        report.push("compatibility", failure);
        report
    }
}

/// Algebra `R` with a left `H`-action making it an `H`-module algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    algebra: Algebra,
    hopf: HopfAlgebra,
    /// `actions[h]` is the matrix of `r ↦ h_h · r`.
    actions: Vec<Matrix>,
}

impl ModuleAlgebra {
    pub fn new(algebra: Algebra, hopf: HopfAlgebra, actions: Vec<Matrix>) -> Self {
        assert_eq!(actions.len(), hopf.dim(), "one action per basis element");
        ModuleAlgebra {
            algebra,
            hopf,
            actions,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Matrix of `r ↦ h · r` for an arbitrary `h`.
    pub fn action_of(&self, h: &[Scalar]) -> Matrix {
        combine(self.algebra.field(), self.algebra.dim(), &self.actions, h)
    }

    pub fn check(&self) -> AxiomReport {
        let mut report = check_left_module(self.hopf.algebra(), &self.actions);
        let f = self.algebra.field();
        let (dr, dh) = (self.algebra.dim(), self.hopf.dim());
        let r = &self.algebra;
        let mut failure = None;
        'outer: for h in 0..dh {
            let dlt = self.hopf.coalgebra().basis_coproduct(h);
            for x in 0..dr {
                for y in 0..dr {
                    let lhs = self.actions[h].apply(r.basis_product(x, y));
                    let mut rhs = zero_vector(f, dr);
                    for p in 0..dh {
                        for q in 0..dh {
                            let c = &dlt[p * dh + q];
                            if c.is_zero() {
                                continue;
                            }
                            let v = r.product(&self.actions[p].column(x), &self.actions[q].column(y));
                            axpy(&mut rhs, c, &v);
                        }
                    }
                    if lhs != rhs {
                        failure = Some(format!("h{h}·(e{x} e{y}) ≠ (h₁·e{x})(h₂·e{y})"));
                        break 'outer;
                    }
                }
            }
        }
        report.push("measuring", failure);
        let mut failure = None;
        for h in 0..dh {
            let eps = &self.hopf.coalgebra().counit()[h];
            let expected: Vector = r.unit().iter().map(|u| u * eps).collect();
            if self.actions[h].apply(r.unit()) != expected {
                failure = Some(format!("h{h}·1 ≠ ε(h{h})1"));
                break;
            }
        }
        report.push("unit", failure);
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

/// Left-module axioms for `actions[i]` = action of the basis element `e_i`.
pub fn check_left_module(algebra: &Algebra, actions: &[Matrix]) -> AxiomReport {
    let mut report = AxiomReport::default();
    let d = algebra.dim();
    let n = actions.first().map_or(0, Matrix::rows);
    let f = algebra.field();
    let mut failure = None;
    'outer: for i in 0..d {
        for j in 0..d {
            let lhs = combine(f, n, actions, algebra.basis_product(i, j));
            if lhs != actions[i].mul(&actions[j]) {
                failure = Some(format!("(e{i} e{j})·m ≠ e{i}·(e{j}·m)"));
                break 'outer;
            }
        }
    }
    report.push("module.associativity", failure);
    let unit_ok = combine(f, n, actions, algebra.unit()).is_identity();
    report.push("module.unit", (!unit_ok).then(|| "1·m ≠ m".to_string()));
    report
}

/// Right module axioms, `m·(ab) = (m·a)·b`.
pub fn check_right_module(algebra: &Algebra, actions: &[Matrix]) -> AxiomReport {
    check_left_module(&algebra.opposite(), actions)
}

/// `(f_j ↼ e_s) = Σ_g m[s][g][j] f_g`, i.e. `(h* ↼ h)(g) = h*(hg)`.
fn hit(h: &HopfAlgebra, j: usize, s: usize) -> Vector {
    (0..h.dim()).map(|g| h.algebra().basis_product(s, g)[j].clone()).collect()
}

/// `A#H*` with `(a#h*)(b#g*) = a b₀ # (h* ↼ b₁) g*`.
pub fn smash_product(c: &ComoduleAlgebra) -> Algebra {
    let f = c.field();
    let (da, dh) = (c.dim_a(), c.dim_h());
    let hd = c.hopf().dual();
    let a = c.algebra();
    // twisted[(j, s, l)] = (f_j ↼ e_s) f_l in H*
    let mut twisted = Vec::with_capacity(dh * dh * dh);
    for j in 0..dh {
        for s in 0..dh {
            let hj = hit(c.hopf(), j, s);
            for l in 0..dh {
                twisted.push(hd.algebra().product(&hj, &unit_vector(f, dh, l)));
            }
        }
    }
    let unit = kron_vec(a.unit(), hd.unit_vector());
    Algebra::from_products(f, da * dh, unit, |x, y| {
        let (i, j) = (x / dh, x % dh);
        let (p, l) = (y / dh, y % dh);
        let mut out = zero_vector(f, da * dh);
        for r in 0..da {
            for s in 0..dh {
                let coef = c.rho(r, s, p);
                if coef.is_zero() {
                    continue;
                }
                let v = kron_vec(a.basis_product(i, r), &twisted[(j * dh + s) * dh + l]);
                axpy(&mut out, coef, &v);
            }
        }
        out
    })
}

/// `#(H,A) = Hom_k(H, A)` with `(f·g)(h) = f(g(h₂)₁ h₁) g(h₂)₀`.
pub fn big_smash(c: &ComoduleAlgebra) -> Algebra {
    let f = c.field();
    let (da, dh) = (c.dim_a(), c.dim_h());
    let a = c.algebra();
    let hopf = c.hopf();
    let unit = kron_vec(a.unit(), hopf.coalgebra().counit());
    Algebra::from_products(f, da * dh, unit, |x, y| {
        let (ea, hh) = (x / dh, x % dh);
        let (b, k) = (y / dh, y % dh);
        let mut out = zero_vector(f, da * dh);
        // (E_{a,h} E_{b,k})(e_t) = Σ d[t][p][k] ρ[(r,s),b] m[s][p][h] e_a e_r
        for t in 0..dh {
            let dt = hopf.coalgebra().basis_coproduct(t);
            let mut value = zero_vector(f, da);
            for p in 0..dh {
                let c1 = &dt[p * dh + k];
                if c1.is_zero() {
                    continue;
                }
                for r in 0..da {
                    for s in 0..dh {
                        let c2 = c.rho(r, s, b);
                        if c2.is_zero() {
                            continue;
                        }
                        let c3 = &hopf.algebra().basis_product(s, p)[hh];
                        if c3.is_zero() {
                            continue;
                        }
                        axpy(&mut value, &(&(c1 * c2) * c3), a.basis_product(ea, r));
                    }
                }
            }
            for (u, v) in value.into_iter().enumerate() {
                out[u * dh + t] = v;
            }
        }
        out
    })
}

/// Certifies `f ↦ Σ f(h_i) # f_i` as a ring isomorphism `#(H,A) → A#H*`.
pub fn iso_big_to_smash(c: &ComoduleAlgebra) -> RingIsoCertificate {
    let big = big_smash(c);
    let smash = smash_product(c);
    let map = Matrix::identity(c.field(), big.dim());
    RingIsoCertificate::certify("#(H,A) → A#H*", &big, &smash, map, MapKind::Multiplicative)
}

/// Left `H*`-action `φ·m = m₀ φ(m₁)`, one matrix per dual basis functional.
pub fn comodule_to_module(m: &RelativeHopfModule) -> Vec<Matrix> {
    let dh = m.base().dim_h();
    let f = m.field();
    (0..dh)
        .map(|j| {
            let mut out = Matrix::zeros(f, m.dim(), m.dim());
            for col in 0..m.dim() {
                for r in 0..m.dim() {
                    let v = m.coaction().get(r * dh + j, col);
                    if !v.is_zero() {
                        out.set(r, col, v.clone());
                    }
                }
            }
            out
        })
        .collect()
}

/// Reads a coaction back off a dual-module action: `ρ(m) = Σ_j (f_j·m) ⊗ h_j`.
pub fn module_to_comodule(actions: &[Matrix]) -> Matrix {
    let dh = actions.len();
    let dim = actions[0].rows();
    let f = actions[0].field();
    let mut out = Matrix::zeros(f, dim * dh, dim);
    for (j, a) in actions.iter().enumerate() {
        for r in 0..dim {
            for col in 0..dim {
                let v = a.get(r, col);
                if !v.is_zero() {
                    out.set(r * dh + j, col, v.clone());
                }
            }
        }
    }
    out
}

/// `R#H` with `(r#h)(s#g) = r (h₁·s) # h₂ g`, basis `r_i # h_j` at `i·dim H + j`.
pub fn module_smash(r: &ModuleAlgebra) -> Algebra {
    let f = r.algebra().field();
    let (dr, dh) = (r.algebra().dim(), r.hopf().dim());
    let ra = r.algebra();
    let ha = r.hopf().algebra();
    let unit = kron_vec(ra.unit(), r.hopf().unit_vector());
    Algebra::from_products(f, dr * dh, unit, |x, y| {
        let (i, h) = (x / dh, x % dh);
        let (s, g) = (y / dh, y % dh);
        let dlt = r.hopf().coalgebra().basis_coproduct(h);
        let mut out = zero_vector(f, dr * dh);
        for p in 0..dh {
            for q in 0..dh {
                let c = &dlt[p * dh + q];
                if c.is_zero() {
                    continue;
                }
                let left = ra.product(&unit_vector(f, dr, i), &r.actions()[p].column(s));
                let v = kron_vec(&left, ha.basis_product(q, g));
                axpy(&mut out, c, &v);
            }
        }
        out
    })
}

/// `End_A(M)` as a left `H*`-module algebra via `(φ·f) = φ₁ ∘ f ∘ S(φ₂)`, where
/// `H*` acts on `M` by [`comodule_to_module`]. Returns the ring and the module algebra.
pub fn end_module_algebra(m: &RelativeHopfModule) -> Result<(EndRing, ModuleAlgebra)> {
    let f = m.field();
    let acts = m.actions();
    let carrier = module_homs(f, &acts, &acts);
    let ring = end_ring(m.dim(), carrier, "End_A(M)")?;
    let hopf = m.base().hopf();
    let dual = hopf.dual();
    let dh = hopf.dim();
    let on_m = comodule_to_module(m);
    let s_dual = dual.antipode();
    let s_on_m: Vec<Matrix> = (0..dh).map(|q| combine(f, m.dim(), &on_m, &s_dual.column(q))).collect();
    let basis: Vec<Matrix> = (0..ring.dim()).map(|b| ring.basis_matrix(b)).collect();
    let mut actions = Vec::with_capacity(dh);
    for j in 0..dh {
        let dlt = dual.coalgebra().basis_coproduct(j);
        let mut cols = Vec::with_capacity(ring.dim());
        for (b, fb) in basis.iter().enumerate() {
            let mut total = Matrix::zeros(f, m.dim(), m.dim());
            for p in 0..dh {
                for q in 0..dh {
                    let c = &dlt[p * dh + q];
                    if c.is_zero() {
                        continue;
                    }
                    total = total.add(&on_m[p].mul(fb).mul(&s_on_m[q]).scale(c));
                }
            }
            let coords = ring.coords_of(&total).ok_or_else(|| {
                Error::NotClosed(format!("f{j} · (basis map {b}) is not right A-linear"))
            })?;
            cols.push(coords);
        }
        actions.push(Matrix::from_columns(f, ring.dim(), &cols));
    }
    let module_algebra = ModuleAlgebra::new(ring.algebra().clone(), dual, actions);
    Ok((ring, module_algebra))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        cyclic_group, graded_c2_algebra, group_algebra, regular_comodule_algebra, sweedler_h4,
        trivial_comodule_algebra,
    };

    const Q: FieldSpec = FieldSpec::Rationals;

    fn instances() -> Vec<ComoduleAlgebra> {
        let c2 = group_algebra(&cyclic_group(2), Q).unwrap();
        let h4 = sweedler_h4(Q).unwrap();
        vec![
            regular_comodule_algebra(&c2),
            regular_comodule_algebra(&group_algebra(&cyclic_group(3), Q).unwrap()),
            regular_comodule_algebra(&h4),
            graded_c2_algebra(Q),
            trivial_comodule_algebra(&Algebra::ground(Q), &h4),
        ]
    }

    #[test]
    fn graded_tamper_breaks_multiplicativity() {
        let c = graded_c2_algebra(Q);
        assert!(c.check().passed());
        // ρ(x) = x⊗1 + x⊗g is coassociative-breaking and not multiplicative
        let mut rho = c.coaction().clone();
        rho.set(2, 1, Q.one());
        let bad = ComoduleAlgebra::new(c.algebra().clone(), c.hopf().clone(), rho);
        assert!(!bad.check().passed());
    }

    #[test]
    fn smash_products_are_associative_and_iso() {
        for c in instances() {
            assert!(c.check().passed());
            let s = smash_product(&c);
            assert_eq!(s.dim(), c.dim_a() * c.dim_h());
            assert!(s.check().passed(), "{:?}", s.check().first_failure());
            let b = big_smash(&c);
            assert!(b.check().passed(), "{:?}", b.check().first_failure());
            let cert = iso_big_to_smash(&c);
            assert!(cert.passed(), "{}", cert.failure_summary());
        }
    }

    #[test]
    fn smash_over_ground_field_is_the_dual() {
        let h4 = sweedler_h4(Q).unwrap();
        let c = trivial_comodule_algebra(&Algebra::ground(Q), &h4);
        assert_eq!(smash_product(&c), *h4.dual().algebra());
    }

    #[test]
    fn smash_table_kc2_by_formula() {
        // e_i # δ_j with δ_j the point functionals; A = kC2 regular gives
        // (e_i#δ_j)(e_p#δ_l) = e_{i+p} # [j = p + l] δ_l
        let c = regular_comodule_algebra(&group_algebra(&cyclic_group(2), Q).unwrap());
        let s = smash_product(&c);
        for i in 0..2 {
            for j in 0..2 {
                for p in 0..2 {
                    for l in 0..2 {
                        let mut expected = zero_vector(Q, 4);
                        if j == (p + l) % 2 {
                            expected[((i + p) % 2) * 2 + l] = Q.one();
                        }
                        assert_eq!(s.basis_product(i * 2 + j, p * 2 + l), &expected[..]);
                    }
                }
            }
        }
    }

    #[test]
    fn relative_hopf_modules_pass() {
        for c in instances() {
            for m in [RelativeHopfModule::regular(&c), RelativeHopfModule::canonical(&c)] {
                let r = m.check();
                assert!(r.passed(), "{:?}", r.first_failure());
                let acts = comodule_to_module(&m);
                let dual = c.hopf().dual();
                assert!(check_left_module(dual.algebra(), &acts).passed());
                assert_eq!(module_to_comodule(&acts), *m.coaction());
                let eps_action = combine(Q, m.dim(), &acts, dual.unit_vector());
                assert!(eps_action.is_identity());
            }
        }
    }

    #[test]
    fn graded_action_on_canonical_module() {
        let c = graded_c2_algebra(Q);
        let m = RelativeHopfModule::canonical(&c);
        // (1⊗g)·x = x ⊗ g² = x ⊗ 1
        let v = m.action_by(1).column(1);
        assert_eq!(v, unit_vector(Q, 4, 2));
    }

    #[test]
    fn end_module_algebras() {
        for c in instances().into_iter().take(3) {
            for m in [RelativeHopfModule::regular(&c), RelativeHopfModule::canonical(&c)] {
                let (ring, ma) = end_module_algebra(&m).unwrap();
                assert!(ma.check().passed(), "{:?}", ma.check().first_failure());
                if m.dim() == c.dim_a() {
                    assert_eq!(ring.dim(), c.dim_a());
                }
                // identity is invariant
                let id = ring.coords_of(&Matrix::identity(Q, m.dim())).unwrap();
                for (j, act) in ma.actions().iter().enumerate() {
                    let eps = &ma.hopf().coalgebra().counit()[j];
                    let expected: Vector = id.iter().map(|x| x * eps).collect();
                    assert_eq!(act.apply(&id), expected);
                }
                let sm = module_smash(&ma);
                if sm.dim() <= 64 {
                    assert!(sm.check().passed());
                }
            }
        }
    }

    #[test]
    fn trivial_action_smash_is_tensor() {
        let h = sweedler_h4(Q).unwrap();
        let r = group_algebra(&cyclic_group(2), Q).unwrap().algebra().clone();
        let acts: Vec<Matrix> = (0..4)
            .map(|j| Matrix::identity(Q, 2).scale(&h.coalgebra().counit()[j]))
            .collect();
        let ma = ModuleAlgebra::new(r.clone(), h.clone(), acts);
        assert!(ma.check().passed());
        assert_eq!(module_smash(&ma), r.tensor(h.algebra()));
    }

    #[test]
    fn regular_smash_acts_as_all_endomorphisms() {
        // a#h* ↦ (b ↦ a b₀ h*(b₁)) is an isomorphism A#H* → End_k(A) for A = H
        for h in [group_algebra(&cyclic_group(2), Q).unwrap(), sweedler_h4(Q).unwrap()] {
            let c = regular_comodule_algebra(&h);
            let s = smash_product(&c);
            let d = h.dim();
            let end = end_ring(d, Subspace::full(Q, d * d), "End_k(A)").unwrap();
            let mut cols = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    let mut op = Matrix::zeros(Q, d, d);
                    for b in 0..d {
                        for r in 0..d {
                            let coef = c.rho(r, j, b);
                            if !coef.is_zero() {
                                for (k, v) in h.algebra().basis_product(i, r).iter().enumerate() {
                                    op.add_to(k, b, &(coef * v));
                                }
                            }
                        }
                    }
                    cols.push(end.coords_of(&op).unwrap());
                }
            }
            let map = Matrix::from_columns(Q, d * d, &cols);
            let cert = RingIsoCertificate::certify("A#H* → End_k(A)", &s, end.algebra(), map, MapKind::Multiplicative);
            assert!(cert.passed(), "{}", cert.failure_summary());
        }
    }

    #[test]
    fn coinvariants_direct() {
        let cs = instances();
        assert_eq!(cs[0].coinvariants().dim(), 1);
        assert_eq!(cs[2].coinvariants().dim(), 1);
        assert_eq!(cs[3].coinvariants().dim(), 1);
        assert_eq!(cs[4].coinvariants().dim(), 1);
    }
}
