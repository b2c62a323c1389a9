//! Ring and linear isomorphism certificates.
//!
//! A certificate stores the two algebras, the map, and the flags derived from
//! them. `reverify` recomputes every flag from scratch, so a stored certificate
//! is evidence that can be replayed, not something to trust.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_bijective, Matrix, Vector};
use crate::field::Scalar;
use crate::hopf::Algebra;

/// Whether the map preserves or reverses products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Multiplicative,
    AntiMultiplicative,
}

impl MapKind {
    /// Kind of a composite: two reversals cancel.
    pub fn compose(self, other: MapKind) -> MapKind {
        if self == other {
            MapKind::Multiplicative
        } else {
            MapKind::AntiMultiplicative
        }
    }
}

/// First failing basis pair with both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub left: usize,
    pub right: usize,
    /// `Φ(e_left e_right)`.
    pub image_of_product: Vector,
    /// `Φ(e_left)Φ(e_right)`, or the reversed product for anti-maps.
    pub product_of_images: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingIsoCertificate {
    pub label: String,
    #[serde(skip)]
    pub source: Algebra,
    #[serde(skip)]
    pub target: Algebra,
    pub source_dim: usize,
    pub target_dim: usize,
    pub kind: MapKind,
    pub rank: usize,
    pub bijective: bool,
    pub unital: bool,
    pub multiplicative: bool,
    pub witness: Option<Witness>,
    pub map: Matrix,
}

/// Checks `Φ(e_i e_j) = Φ(e_i)Φ(e_j)` (or the reversed product) over all basis
/// pairs; returns the first failing pair in lexicographic order.
pub fn product_witness(source: &Algebra, target: &Algebra, map: &Matrix, kind: MapKind) -> Option<Witness> {
    let ds = source.dim();
    let images: Vec<Vector> = map.columns();
    let field = source.field();
    for i in 0..ds {
        for j in 0..ds {
            let mut lhs = vec![field.zero(); target.dim()];
            for (k, c) in source.basis_product_sparse(i, j) {
                axpy(&mut lhs, c, &images[*k]);
            }
            let rhs = match kind {
                MapKind::Multiplicative => target.product(&images[i], &images[j]),
                MapKind::AntiMultiplicative => target.product(&images[j], &images[i]),
            };
            if lhs != rhs {
                return Some(Witness {
                    left: i,
                    right: j,
                    image_of_product: lhs,
                    product_of_images: rhs,
                });
            }
        }
    }
    None
}

impl RingIsoCertificate {
    /// Evaluates the map against both algebras. Never fails; inspect `passed`.
    pub fn certify(label: impl Into<String>, source: &Algebra, target: &Algebra, map: Matrix, kind: MapKind) -> Self {
        assert_eq!(map.cols(), source.dim(), "map source dimension");
        assert_eq!(map.rows(), target.dim(), "map target dimension");
        let rank = map.rank();
        let bijective = source.dim() == target.dim() && rank == source.dim();
        let unital = map.apply(source.unit()) == target.unit();
        let witness = product_witness(source, target, &map, kind);
        RingIsoCertificate {
            label: label.into(),
            source: source.clone(),
            target: target.clone(),
            source_dim: source.dim(),
            target_dim: target.dim(),
            kind,
            rank,
            bijective,
            unital,
            multiplicative: witness.is_none(),
            witness,
            map,
        }
    }

    pub fn passed(&self) -> bool {
        self.bijective && self.unital && self.multiplicative
    }

    /// Recomputes every flag from (source, target, map) and compares with the stored ones.
    pub fn reverify(&self) -> bool {
        let fresh = RingIsoCertificate::certify(
            self.label.clone(),
            &self.source,
            &self.target,
            self.map.clone(),
            self.kind,
        );
        fresh == *self
    }

    /// `Err(CertificateFailure)` carrying the first failing flag or witness.
    pub fn into_result(self) -> Result<Self> {
        if self.passed() {
            return Ok(self);
        }
        Err(Error::CertificateFailure(self.failure_summary()))
    }

    pub fn failure_summary(&self) -> String {
        if !self.bijective {
            return format!(
                "{}: not bijective (rank {}, dims {} -> {})",
                self.label, self.rank, self.source_dim, self.target_dim
            );
        }
        if !self.unital {
            return format!("{}: unit not preserved", self.label);
        }
        match &self.witness {
            Some(w) => format!(
                "{}: product fails on basis pair ({}, {}): {} vs {}",
                self.label,
                w.left,
                w.right,
                fmt_vec(&w.image_of_product),
                fmt_vec(&w.product_of_images)
            ),
            None => format!("{}: ok", self.label),
        }
    }

    /// Certificate for `next ∘ self`, recomputed from scratch. Its kind follows the
    /// composition rule, so two anti-maps compose to a multiplicative map.
    pub fn then(&self, next: &RingIsoCertificate, label: impl Into<String>) -> Result<RingIsoCertificate> {
        if next.source != self.target {
            return Err(Error::Dimension(format!(
                "cannot compose {} with {}: intermediate algebras differ",
                self.label, next.label
            )));
        }
        Ok(RingIsoCertificate::certify(
            label,
            &self.source,
            &next.target,
            next.map.mul(&self.map),
            self.kind.compose(next.kind),
        ))
    }
}

fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Bijectivity certificate for a linear map between two described spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearIsoCertificate {
    pub label: String,
    pub source: String,
    pub target: String,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub bijective: bool,
    pub map: Matrix,
}

impl LinearIsoCertificate {
    pub fn certify(label: impl Into<String>, source: impl Into<String>, target: impl Into<String>, map: Matrix) -> Self {
        let rank = map.rank();
        LinearIsoCertificate {
            label: label.into(),
            source: source.into(),
            target: target.into(),
            source_dim: map.cols(),
            target_dim: map.rows(),
            rank,
            bijective: is_bijective(&map),
            map,
        }
    }

    pub fn passed(&self) -> bool {
        self.bijective
    }

    pub fn reverify(&self) -> bool {
        let fresh = LinearIsoCertificate::certify(
            self.label.clone(),
            self.source.clone(),
            self.target.clone(),
            self.map.clone(),
        );
        fresh == *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::exactlin::unit_vector;

    const Q: FieldSpec = FieldSpec::Rationals;

    /// Upper triangular 2×2 matrices, basis E00, E01, E11.
    fn upper_triangular() -> Algebra {
        let e = |i: usize| unit_vector(Q, 3, i);
        let zero = vec![Q.zero(); 3];
        let unit = vec![Q.one(), Q.zero(), Q.one()];
        Algebra::from_products(Q, 3, unit, |i, j| match (i, j) {
            (0, 0) => e(0),
            (0, 1) => e(1),
            (1, 2) => e(1),
            (2, 2) => e(2),
            _ => zero.clone(),
        })
    }

    #[test]
    fn identity_and_transpose_anti() {
        let a = upper_triangular();
        assert!(a.check().passed());
        let id = RingIsoCertificate::certify("id", &a, &a, Matrix::identity(Q, 3), MapKind::Multiplicative);
        assert!(id.passed() && id.reverify());

        // x ↦ transpose composed with the swap of diagonal entries is an anti-iso onto itself
        let swap = Matrix::from_i64(Q, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let anti = RingIsoCertificate::certify("flip", &a, &a, swap.clone(), MapKind::AntiMultiplicative);
        assert!(anti.passed(), "{}", anti.failure_summary());
        let not_mult = RingIsoCertificate::certify("flip", &a, &a, swap, MapKind::Multiplicative);
        assert!(!not_mult.passed());
        let w = not_mult.witness.as_ref().unwrap();
        assert_eq!((w.left, w.right), (0, 1));

        let twice = anti.then(&anti, "flip∘flip").unwrap();
        assert_eq!(twice.kind, MapKind::Multiplicative);
        assert!(twice.passed());
        let mixed = anti.then(&id, "id∘flip").unwrap();
        assert_eq!(mixed.kind, MapKind::AntiMultiplicative);
        assert!(mixed.passed());
    }

    #[test]
    fn tampered_flags_fail_reverification() {
        let a = upper_triangular();
        let mut cert = RingIsoCertificate::certify("id", &a, &a, Matrix::identity(Q, 3), MapKind::Multiplicative);
        cert.map.set(0, 0, Q.from_i64(2));
        assert!(!cert.reverify());
        assert!(cert.clone().into_result().is_ok(), "stored flags are untouched");
        let fresh = RingIsoCertificate::certify("id", &a, &a, cert.map.clone(), MapKind::Multiplicative);
        assert!(matches!(fresh.into_result(), Err(Error::CertificateFailure(_))));
    }

    #[test]
    fn linear_certificate() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let c = LinearIsoCertificate::certify("m", "k^2", "k^2", m);
        assert!(c.passed() && c.reverify());
        let s = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(!LinearIsoCertificate::certify("s", "k^2", "k^2", s).passed());
    }
}
