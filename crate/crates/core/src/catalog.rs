//! Named instances: group algebras, Sweedler's four-dimensional Hopf algebra and
//! stock comodule algebras over them.

use crate::error::{Error, Result};
use crate::exactlin::{kron_vec, unit_vector, zero_vector, Matrix, Vector};
use crate::field::FieldSpec;
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra};
use crate::smash::{ComoduleAlgebra, RelativeHopfModule};

/// Multiplication table of a finite group, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    product: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(product: Vec<Vec<usize>>) -> Result<Self> {
        let n = product.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if product.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not closed".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| product[e][g] == g && product[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if product[product[a][b]][c] != product[a][product[b][c]] {
                        return Err(Error::InvalidGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| product[g][h] == identity && product[h][g] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("{g} has no inverse")))
            })
            .collect::<Result<_>>()?;
        Ok(GroupTable {
            order: n,
            product,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn product(&self, g: usize, h: usize) -> usize {
        self.product[g][h]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }
}

pub fn cyclic_group(n: usize) -> GroupTable {
    GroupTable::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()).expect("cyclic group")
}

/// `S₃` as permutations of `{0,1,2}`, listed in lexicographic order of their images.
pub fn symmetric_group_s3() -> GroupTable {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                .collect()
        })
        .collect();
    GroupTable::new(table).expect("S3")
}

/// `kG`: `e_g e_h = e_{gh}`, `Δ(e_g) = e_g ⊗ e_g`, `ε(e_g) = 1`, `S(e_g) = e_{g⁻¹}`.
pub fn group_algebra(t: &GroupTable, f: FieldSpec) -> Result<HopfAlgebra> {
    // revalidate: the table may have been built by hand
    let t = GroupTable::new(t.product.clone())?;
    let n = t.order();
    let e = |g: usize| unit_vector(f, n, g);
    let algebra = Algebra::from_products(f, n, e(t.identity()), |g, h| e(t.product(g, h)));
    let coalgebra = Coalgebra::from_coproducts(f, n, vec![f.one(); n], |g| kron_vec(&e(g), &e(g)));
    let mut s = Matrix::zeros(f, n, n);
    for g in 0..n {
        s.set(t.inverse(g), g, f.one());
    }
    Ok(HopfAlgebra::new(algebra, coalgebra, s))
}

/// Sweedler's Hopf algebra on the basis `{1, g, x, gx}`.
pub fn sweedler_h4(f: FieldSpec) -> Result<HopfAlgebra> {
    if f.characteristic() == 2 {
        return Err(Error::BadCharacteristic(2));
    }
    // e = g^a x^b at index a + 2b
    let idx = |a: usize, b: usize| a + 2 * b;
    let algebra = Algebra::from_products(f, 4, unit_vector(f, 4, 0), |i, j| {
        let (a, b) = (i % 2, i / 2);
        let (c, d) = (j % 2, j / 2);
        let mut out = zero_vector(f, 4);
        if b + d < 2 {
            // x g = -g x
            let sign = if b * c == 1 { -1 } else { 1 };
            out[idx((a + c) % 2, b + d)] = f.from_i64(sign);
        }
        out
    });
    let one = unit_vector(f, 4, 0);
    let g = unit_vector(f, 4, 1);
    let x = unit_vector(f, 4, 2);
    let gx = unit_vector(f, 4, 3);
    let coalgebra = Coalgebra::from_coproducts(f, 4, vec![f.one(), f.one(), f.zero(), f.zero()], |k| match k {
        0 => kron_vec(&one, &one),
        1 => kron_vec(&g, &g),
        2 => plus(kron_vec(&x, &one), &kron_vec(&g, &x)),
        _ => plus(kron_vec(&gx, &g), &kron_vec(&one, &gx)),
    });
    // columns: S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    let s = Matrix::from_i64(f, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    Ok(HopfAlgebra::new(algebra, coalgebra, s))
}

fn plus(a: Vector, b: &[crate::Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `A = H` coacting on itself by `Δ`.
pub fn regular_comodule_algebra(h: &HopfAlgebra) -> ComoduleAlgebra {
    ComoduleAlgebra::new(h.algebra().clone(), h.clone(), h.coalgebra().comul_map())
}

/// `ρ(a) = a ⊗ 1`.
pub fn trivial_comodule_algebra(a: &Algebra, h: &HopfAlgebra) -> ComoduleAlgebra {
    let f = a.field();
    let one = Matrix::from_columns(f, h.dim(), &[h.unit_vector().to_vec()]);
    ComoduleAlgebra::new(a.clone(), h.clone(), Matrix::identity(f, a.dim()).kron(&one))
}

/// `k[x]/(x²)` graded by `C₂` with `x` odd: `ρ(1) = 1⊗1`, `ρ(x) = x⊗g`.
pub fn graded_c2_algebra(f: FieldSpec) -> ComoduleAlgebra {
    let h = group_algebra(&cyclic_group(2), f).expect("C2");
    let algebra = Algebra::from_products(f, 2, unit_vector(f, 2, 0), |i, j| {
        if i + j < 2 {
            unit_vector(f, 2, i + j)
        } else {
            zero_vector(f, 2)
        }
    });
    // rows r·2 + s
    let rho = Matrix::from_i64(f, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
    ComoduleAlgebra::new(algebra, h, rho)
}

/// A catalog entry: the Hopf algebra, a comodule algebra over it, and named
/// relative Hopf modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub name: String,
    pub description: String,
    pub field: FieldSpec,
    pub hopf: HopfAlgebra,
    pub comodule: ComoduleAlgebra,
    pub modules: Vec<(String, RelativeHopfModule)>,
}

impl InstanceDescriptor {
    fn from_comodule(name: &str, description: &str, comodule: ComoduleAlgebra) -> Self {
        let modules = vec![
            ("A".to_string(), RelativeHopfModule::regular(&comodule)),
            ("A⊗H".to_string(), RelativeHopfModule::canonical(&comodule)),
        ];
        InstanceDescriptor {
            name: name.to_string(),
            description: description.to_string(),
            field: comodule.field(),
            hopf: comodule.hopf().clone(),
            comodule,
            modules,
        }
    }

    pub fn module(&self, name: &str) -> Option<&RelativeHopfModule> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

/// Core instance identifiers in listing order.
pub const CORE_INSTANCES: [&str; 5] = ["I1", "I2", "I3", "I4", "I5"];
/// Extended instances, excluded from the default runs.
pub const EXTENDED_INSTANCES: [&str; 1] = ["S3"];

pub fn instance(name: &str, f: FieldSpec) -> Result<InstanceDescriptor> {
    let c2 = || group_algebra(&cyclic_group(2), f);
    let (desc, comodule) = match name {
        "I1" => ("kC2 coacting on itself", regular_comodule_algebra(&c2()?)),
        "I2" => (
            "kC3 coacting on itself",
            regular_comodule_algebra(&group_algebra(&cyclic_group(3), f)?),
        ),
        "I3" => ("Sweedler H4 coacting on itself", regular_comodule_algebra(&sweedler_h4(f)?)),
        "I4" => ("k[x]/(x^2) graded by C2", graded_c2_algebra(f)),
        "I5" => (
            "ground field with trivial H4 coaction",
            trivial_comodule_algebra(&Algebra::ground(f), &sweedler_h4(f)?),
        ),
        "S3" => (
            "kS3 coacting on itself",
            regular_comodule_algebra(&group_algebra(&symmetric_group_s3(), f)?),
        ),
        other => return Err(Error::Parse(format!("unknown instance '{other}'"))),
    };
    Ok(InstanceDescriptor::from_comodule(name, desc, comodule))
}

pub fn instance_names(extended: bool) -> Vec<&'static str> {
    let mut names = CORE_INSTANCES.to_vec();
    if extended {
        names.extend(EXTENDED_INSTANCES);
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn bad_group_tables() {
        // 0 is an identity, but (1·1)·2 = 0·2 = 2 while 1·(1·2) = 1·1 = 0
        let t = vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]];
        assert!(matches!(GroupTable::new(t), Err(Error::InvalidGroup(_))));
        let no_id = vec![vec![1, 0], vec![0, 0]];
        assert!(matches!(GroupTable::new(no_id), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn group_algebras() {
        let c2 = group_algebra(&cyclic_group(2), Q).unwrap();
        assert_eq!(c2.dim(), 2);
        assert!(c2.antipode().is_identity());
        let s3 = group_algebra(&symmetric_group_s3(), Q).unwrap();
        assert!(s3.check().passed());
        assert!(!s3.algebra().is_commutative());
        for h in [c2, s3, group_algebra(&cyclic_group(3), Q).unwrap()] {
            assert!(h.coalgebra().is_cocommutative());
            assert!(h.antipode().pow(2).is_identity());
        }
    }

    #[test]
    fn sweedler_fields() {
        assert_eq!(sweedler_h4(FieldSpec::Prime(2)), Err(Error::BadCharacteristic(2)));
        for f in [Q, FieldSpec::Prime(5), FieldSpec::Prime(7)] {
            let h = sweedler_h4(f).unwrap();
            assert!(h.check().passed(), "{f}: {:?}", h.check().first_failure());
        }
        let h = sweedler_h4(Q).unwrap();
        // S²(x) = -x
        assert_eq!(h.antipode().pow(2).column(2), vec![Q.zero(), Q.zero(), Q.from_i64(-1), Q.zero()]);
    }

    #[test]
    fn every_catalog_instance_passes_its_axioms() {
        for f in [Q, FieldSpec::Prime(5)] {
            for name in instance_names(true) {
                let inst = instance(name, f).unwrap();
                assert!(inst.hopf.check().passed(), "{name}");
                assert!(inst.comodule.check().passed(), "{name}");
                for (m, module) in &inst.modules {
                    assert!(module.check().passed(), "{name}/{m}");
                }
            }
        }
        assert!(instance("I9", Q).is_err());
    }

    #[test]
    fn regular_coaction_is_comul() {
        let h = group_algebra(&cyclic_group(2), Q).unwrap();
        let c = regular_comodule_algebra(&h);
        for k in 0..2 {
            assert_eq!(c.coaction().column(k), h.coalgebra().basis_coproduct(k).to_vec());
        }
        let t = trivial_comodule_algebra(h.algebra(), &h);
        assert_eq!(t.coinvariants().dim(), 2);
    }
}
