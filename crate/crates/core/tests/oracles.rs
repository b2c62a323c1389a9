//! Values worked out by hand, compared against what the library computes.

use coring_duality::catalog::{group_algebra, cyclic_group, instance, sweedler_h4};
use coring_duality::coring::{coring_from_comodule, hopf_galois_check, is_galois};
use coring_duality::duals::{left_dual, right_dual};
use coring_duality::exactlin::{unit_vector, Matrix};
use coring_duality::hopf::Algebra;
use coring_duality::smash::smash_product;
use coring_duality::FieldSpec;

const Q: FieldSpec = FieldSpec::Rationals;

fn center_dim(a: &Algebra) -> usize {
    let f = a.field();
    let d = a.dim();
    let cols: Vec<_> = (0..d)
        .map(|j| {
            (0..d)
                .flat_map(|i| {
                    let l = a.basis_product(j, i);
                    let r = a.basis_product(i, j);
                    l.iter().zip(r).map(|(x, y)| x - y).collect::<Vec<_>>()
                })
                .collect()
        })
        .collect();
    d - Matrix::from_columns(f, d * d, &cols).rank()
}

#[test]
fn dual_of_kc2_is_the_function_algebra() {
    for f in [Q, FieldSpec::Prime(5)] {
        let h = group_algebra(&cyclic_group(2), f).unwrap().dual();
        // δ_g δ_h = [g = h] δ_g, unit δ_e + δ_g
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { unit_vector(f, 2, i) } else { vec![f.zero(); 2] };
                assert_eq!(h.algebra().basis_product(i, j), &expect[..]);
            }
        }
        assert_eq!(h.algebra().unit(), &[f.one(), f.one()][..]);
        assert!(h.check().passed());
    }
}

#[test]
fn sweedler_relations() {
    for f in [Q, FieldSpec::Prime(3), FieldSpec::Prime(7)] {
        let h = sweedler_h4(f).unwrap();
        let a = h.algebra();
        let (one, g, x, gx) = (unit_vector(f, 4, 0), unit_vector(f, 4, 1), unit_vector(f, 4, 2), unit_vector(f, 4, 3));
        let neg = |v: &[coring_duality::Scalar]| v.iter().map(|s| -s).collect::<Vec<_>>();
        assert_eq!(a.product(&g, &g), one);
        assert_eq!(a.product(&x, &x), vec![f.zero(); 4]);
        assert_eq!(a.product(&x, &g), neg(&gx));
        assert_eq!(a.product(&g, &x), gx);
        assert_eq!(h.apply_antipode(&x), neg(&gx));
        assert_eq!(h.antipode().pow(4), Matrix::identity(f, 4));
        assert_ne!(h.antipode().pow(2), Matrix::identity(f, 4));
        assert!(!a.is_commutative());
        assert!(!h.coalgebra().is_cocommutative());
    }
}

#[test]
fn heisenberg_doubles_are_simple() {
    // H#H* ≅ End(H): dimension n² with one-dimensional center
    for name in ["I1", "I2", "I3"] {
        let c = instance(name, Q).unwrap().comodule;
        let s = smash_product(&c);
        assert_eq!(s.dim(), c.dim_h() * c.dim_h());
        assert_eq!(center_dim(&s), 1, "{name}");
    }
    // k[x]/(x²)#k^{C2}: two vertices, an arrow each way, paths of length 2 vanish.
    // Not semisimple, center k·1 all the same.
    let c = instance("I4", Q).unwrap().comodule;
    let s = smash_product(&c);
    assert_eq!(center_dim(&s), 1);
}

#[test]
fn dual_ring_dimensions() {
    for name in ["I1", "I2", "I3", "I4", "I5"] {
        let c = instance(name, Q).unwrap().comodule;
        let g = coring_from_comodule(&c);
        let n = c.dim_a() * c.dim_h();
        assert_eq!(left_dual(&g.coring).unwrap().dim(), n, "{name}");
        assert_eq!(right_dual(&g.coring).unwrap().dim(), n, "{name}");
    }
}

#[test]
fn galois_ranks() {
    // (name, dim B, dim A⊗_B A, rank of can, dim A⊗H)
    let table = [
        ("I1", 1, 4, 4, 4),
        ("I2", 1, 9, 9, 9),
        ("I3", 1, 16, 16, 16),
        // 1⊗1 ↦ 1⊗1, 1⊗x ↦ x⊗g, x⊗1 ↦ x⊗1, x⊗x ↦ 0
        ("I4", 1, 4, 3, 4),
        ("I5", 1, 1, 1, 4),
    ];
    for (name, b, src, rank, tgt) in table {
        let c = instance(name, Q).unwrap().comodule;
        let e = hopf_galois_check(&c).unwrap();
        assert_eq!(
            (e.coinvariants_dim, e.source_dim, e.rank, e.target_dim),
            (b, src, rank, tgt),
            "{name}"
        );
        assert_eq!(e.galois, rank == src && rank == tgt);
        let e2 = is_galois(&coring_from_comodule(&c)).unwrap();
        assert_eq!(e2.galois, e.galois, "{name}");
    }
}

#[test]
fn trivial_coaction_dual_is_dual_hopf_algebra() {
    // A = k: *C is H* with its convolution product
    let c = instance("I5", Q).unwrap().comodule;
    let g = coring_from_comodule(&c);
    let l = left_dual(&g.coring).unwrap();
    assert!(!l.algebra().is_commutative());
    // H4* ≅ H4; only span(1, g) commutes with g, and g does not commute with x
    assert_eq!(center_dim(l.algebra()), 1);
    assert_eq!(center_dim(sweedler_h4(Q).unwrap().algebra()), 1);
}
